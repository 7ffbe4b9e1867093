#include <ramgirth/cli.hpp>
#include <ramgirth/copies.hpp>
#include <ramgirth/degree.hpp>
#include <ramgirth/errors.hpp>
#include <ramgirth/io.hpp>
#include <ramgirth/json_io.hpp>
#include <ramgirth/sampling.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

namespace ramgirth {

namespace {

std::string trim(const std::string & s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// key=value lines become flags placed before the command line ones, so the
// command line wins (options keep their last value).
std::vector<std::string> config_arguments(const std::string & path)
{
    std::ifstream in(path);
    if (! in)
        throw InputError("cannot open config file '" + path + "'");
    std::vector<std::string> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw FormatError(line_no, "expected key=value in '" + path + "'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw FormatError(line_no, "empty key in '" + path + "'");
        if (key.size() == 1) {
            out.push_back("-" + key);
            out.push_back(value);
        }
        else
            out.push_back("--" + key + "=" + value);
    }
    return out;
}

std::vector<std::string> expand_config(std::vector<std::string> args)
{
    for (std::size_t i = 0; i < args.size(); ++i) {
        std::string path;
        std::size_t drop = 0;
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
            drop = 2;
        }
        else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            drop = 1;
        }
        else
            continue;
        args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i + drop));
        auto extra = config_arguments(path);
        // right after the subcommand name, which is the first argument
        const std::ptrdiff_t at = args.empty() ? 0 : 1;
        args.insert(args.begin() + at, extra.begin(), extra.end());
        return args;
    }
    return args;
}

Json typed(const std::string & s)
{
    if (s == "true")
        return true;
    if (s == "false")
        return false;
    {
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc() && p == s.data() + s.size())
            return v;
    }
    {
        std::uint64_t v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc() && p == s.data() + s.size())
            return v;
    }
    char * end = nullptr;
    double d = std::strtod(s.c_str(), &end);
    if (! s.empty() && end == s.c_str() + s.size())
        return d;
    return s;
}

// Every option of the subcommand with its resolved value.
Json echo(const CLI::App & sub)
{
    Json out = Json::object();
    for (const CLI::Option * opt : sub.get_options()) {
        std::string name = ! opt->get_lnames().empty() ? opt->get_lnames().front() : opt->get_snames().front();
        if (name == "help")
            continue;
        if (opt->get_type_size() == 0) {
            bool set = false;
            if (opt->count() > 0)
                set = opt->as<bool>();
            out[name] = set;
            continue;
        }
        if (opt->count() > 0)
            out[name] = typed(opt->results().back());
        else if (! opt->get_default_str().empty())
            out[name] = typed(opt->get_default_str());
        else
            out[name] = nullptr;
    }
    return out;
}

void echo_text(std::ostream & out, std::string_view command, const Json & config)
{
    out << "# " << tool_name << ' ' << tool_version << ' ' << command;
    for (const auto & [k, v] : config.items()) {
        if (v.is_null())
            continue;
        out << ' ' << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
    }
    out << '\n';
}

// Aligned "key  value" block.
class Table
{
public:
    Table & row(std::string key, std::string value)
    {
        rows_.emplace_back(std::move(key), std::move(value));
        return *this;
    }

    void print(std::ostream & out, std::size_t indent = 0) const
    {
        std::size_t width = 0;
        for (const auto & r : rows_)
            width = std::max(width, r.first.size());
        for (const auto & [k, v] : rows_)
            out << std::string(indent, ' ') << std::left << std::setw(static_cast<int>(width + 2)) << k << v << '\n';
    }

private:
    std::vector<std::pair<std::string, std::string>> rows_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::uint64_t fresh_seed()
{
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

struct Options
{
    bool json = false;
    std::optional<std::uint64_t> budget_nodes;
    std::optional<double> budget_secs;
    std::optional<std::uint64_t> seed;
    unsigned threads = 1;

    std::string theorem;
    std::string kind;
    unsigned k = 3;
    unsigned r = 2;
    unsigned g = 3;
    std::optional<unsigned long> ramsey;
    std::optional<std::uint64_t> n;
    std::optional<std::int64_t> big_n;
    std::optional<double> p;
    std::optional<double> scale;
    std::optional<unsigned> m;

    std::string graph_path;
    std::string hypergraph_path;
    std::string colouring_path;
    std::string out_path;
    bool list = false;
    bool search = false;
    bool verify_w = false;
    bool timing = false;
    std::string mode = "random";
    std::uint64_t samples = 1;
    std::optional<std::uint64_t> w;
    std::optional<std::uint64_t> ex_low;
    std::optional<std::uint64_t> ex_high;
    std::uint64_t trials = 1;
    std::optional<std::uint64_t> cap;
    std::uint64_t max_tries = 1000;

    SearchBudget budget() const { return SearchBudget{budget_nodes, budget_secs}; }
};

void add_json(CLI::App * sub, Options & o) { sub->add_flag("--json", o.json, "Emit JSON instead of text"); }

void add_budget(CLI::App * sub, Options & o)
{
    sub->add_option("--budget-nodes", o.budget_nodes, "Search node limit");
    sub->add_option("--budget-secs", o.budget_secs, "Search wall-time limit in seconds");
}

void add_seed(CLI::App * sub, Options & o)
{
    sub->add_option("--seed", o.seed, "Base seed (generated and echoed if omitted)");
}

int budget_exit(bool exceeded) { return exceeded ? exit_budget : exit_ok; }

CopyKind graph_kind(const std::string & kind)
{
    auto k = parse_copy_kind(kind);
    if (k == CopyKind::ap)
        throw InputError("kind must be clique or cycle here");
    return k;
}

UniformHypergraph graph_as_hypergraph(const Graph & g)
{
    std::vector<std::vector<Vertex>> edges;
    for (const auto & e : g.edges())
        edges.push_back({e.u, e.v});
    return UniformHypergraph(2, g.order(), std::move(edges));
}

std::string colouring_line(const Colouring & c)
{
    std::ostringstream s;
    for (std::size_t i = 0; i < c.of.size(); ++i)
        s << (i ? " " : "") << c.of[i];
    return s.str();
}

int cmd_params(const Options & o, Json config, std::ostream & out)
{
    if (! o.ramsey)
        throw InputError("--ramsey (R or W) is required");
    const Theorem th = parse_theorem(o.theorem);
    ParamSet ps = derive_params(th, o.k, o.r, o.g, *o.ramsey);
    ContainerVerdict cv = analytic_container_condition(th, o.k, o.r, o.g, *o.ramsey);
    if (o.json) {
        out << envelope("params", std::move(config), Json{{"params", to_json(ps)}, {"container", to_json(cv)}}).dump(2)
            << '\n';
        return exit_ok;
    }
    echo_text(out, "params", config);
    out << "constant chain of the " << to_string(th) << " construction (binary logarithms)\n";
    Table t;
    t.row("epsilon", to_string(ps.epsilon))
        .row("D_tau", ps.d_tau.to_string())
        .row("K", to_string(ps.K))
        .row("s = floor(K log2(1/eps))", to_string(ps.s))
        .row("D_p", ps.d_p.to_string())
        .row("n", ps.n.to_string())
        .row("tau", ps.tau.to_string())
        .row("p", ps.p.to_string());
    if (ps.t)
        t.row("t", ps.t->to_string());
    t.row("headline size bound", ps.size_bound.to_string());
    t.print(out, 2);
    out << "inequalities along the chain\n";
    for (const auto & c : ps.checks)
        out << "  [" << (c.holds ? "ok" : "FAIL") << "] " << c.name << ": " << c.lhs.to_string() << " vs "
            << c.rhs.to_string() << '\n';
    out << "container degree condition with the analytic degree bounds\n";
    Table ct;
    ct.row("satisfied", yes_no(cv.satisfied))
        .row("left-hand side", cv.lhs.to_string())
        .row("margin eps/lhs", cv.margin.to_string())
        .row("precision bits", std::to_string(cv.precision));
    ct.print(out, 2);
    return exit_ok;
}

int cmd_sample(const Options & o, Json config, std::ostream & out)
{
    if (! o.n || ! o.p)
        throw InputError("-n and -p are required");
    const std::uint64_t seed = o.seed.value_or(fresh_seed());
    config["seed"] = seed;
    config["prng"] = prng_algorithm;
    Json result;
    if (o.kind == "gnp") {
        Graph g = sample_gnp(*o.n, *o.p, seed);
        if (! o.out_path.empty())
            write_graph_file(o.out_path, g);
        result = Json{{"graph", to_json(g)}};
        if (! o.json) {
            echo_text(out, "sample", config);
            out << "binomial random graph G(n,p)\n";
            Table().row("vertices", std::to_string(g.order())).row("edges", std::to_string(g.size())).print(out, 2);
            if (o.out_path.empty())
                write_graph(out, g);
        }
    }
    else if (o.kind == "subset") {
        auto s = sample_subset(static_cast<std::int64_t>(*o.n), *o.p, seed);
        if (! o.out_path.empty()) {
            std::ofstream f(o.out_path);
            if (! f)
                throw InputError("cannot write '" + o.out_path + "'");
            for (auto x : s)
                f << x << '\n';
        }
        result = Json{{"size", s.size()}, {"elements", s}};
        if (! o.json) {
            echo_text(out, "sample", config);
            out << "random subset [n]_p\n";
            Table().row("size", std::to_string(s.size())).print(out, 2);
            if (o.out_path.empty()) {
                for (std::size_t i = 0; i < s.size(); ++i)
                    out << (i ? " " : "") << s[i];
                out << '\n';
            }
        }
    }
    else
        throw InputError("--kind must be gnp or subset");
    if (o.json)
        out << envelope("sample", std::move(config), std::move(result)).dump(2) << '\n';
    return exit_ok;
}

int cmd_girth(const Options & o, Json config, std::ostream & out)
{
    if (! o.graph_path.empty()) {
        Graph g = read_graph_file(o.graph_path);
        Girth girth = graph_girth(g);
        if (o.json) {
            out << envelope("girth", std::move(config), Json{{"girth", girth ? Json(*girth) : Json("infinite")}}).dump(2)
                << '\n';
            return exit_ok;
        }
        echo_text(out, "girth", config);
        out << "graph girth (shortest cycle)\n";
        Table().row("girth", girth ? std::to_string(*girth) : "infinite").print(out, 2);
        return exit_ok;
    }
    if (o.hypergraph_path.empty())
        throw InputError("one of --graph or --hypergraph is required");
    UniformHypergraph h = read_hypergraph_file(o.hypergraph_path);
    GirthVerdict v = sparsity_girth(h, o.g);
    if (o.json) {
        out << envelope("girth", std::move(config), to_json(v)).dump(2) << '\n';
        return exit_ok;
    }
    echo_text(out, "girth", config);
    out << "hypergraph girth >= " << o.g << " (every h' < g edges span at least (k-1)h'+1 vertices)\n";
    Table t;
    t.row("satisfied", yes_no(v.satisfied));
    if (! v.satisfied) {
        std::ostringstream w;
        for (std::size_t i = 0; i < v.witness.size(); ++i)
            w << (i ? " " : "") << v.witness[i];
        t.row("witness edges", w.str()).row("witness span", std::to_string(v.witness_span));
    }
    t.print(out, 2);
    return exit_ok;
}

int cmd_cycles(const Options & o, Json config, std::ostream & out)
{
    UniformHypergraph h;
    if (! o.hypergraph_path.empty())
        h = read_hypergraph_file(o.hypergraph_path);
    else if (! o.graph_path.empty())
        h = graph_as_hypergraph(read_graph_file(o.graph_path));
    else
        throw InputError("one of --hypergraph or --graph is required");
    CycleReport rep = enumerate_short_cycles(h, o.g);
    if (o.json) {
        out << envelope("cycles", std::move(config), to_json(rep, o.list)).dump(2) << '\n';
        return exit_ok;
    }
    echo_text(out, "cycles", config);
    out << "short cycles of length < " << o.g << " (2-cycles: edges sharing two or more vertices)\n";
    Table t;
    for (auto [j, x] : rep.counts)
        t.row("X_" + std::to_string(j), std::to_string(x));
    t.print(out, 2);
    if (o.list)
        for (const auto & c : rep.cycles) {
            out << "  " << c.length << ":";
            for (auto e : c.edges)
                out << ' ' << e;
            out << '\n';
        }
    return exit_ok;
}

int cmd_colour(const Options & o, Json config, std::ostream & out)
{
    if (o.hypergraph_path.empty())
        throw InputError("--hypergraph is required");
    UniformHypergraph h = read_hypergraph_file(o.hypergraph_path);
    SearchResult res = colouring_search(h, o.r, o.budget());
    if (res.witness && ! o.out_path.empty())
        write_colouring_file(o.out_path, *res.witness);
    if (o.json) {
        Json result{{"status", to_string(res.status)}, {"nodes", res.nodes}};
        if (res.witness)
            result["witness"] = to_json(*res.witness);
        out << envelope("colour", std::move(config), std::move(result)).dump(2) << '\n';
    }
    else {
        echo_text(out, "colour", config);
        out << "proper " << o.r << "-colouring search (no monochromatic hyperedge)\n";
        Table t;
        t.row("status", std::string(to_string(res.status))).row("nodes", std::to_string(res.nodes));
        if (res.witness)
            t.row("witness", colouring_line(*res.witness));
        t.print(out, 2);
    }
    return budget_exit(res.status == SearchStatus::budget_exceeded);
}

void print_arrow(std::ostream & out, const ArrowResult & res)
{
    Table t;
    t.row("verdict", std::string(to_string(res.verdict)))
        .row("copies", std::to_string(res.copies))
        .row("nodes", std::to_string(res.nodes));
    if (res.witness)
        t.row("witness", colouring_line(*res.witness));
    t.print(out, 2);
}

int cmd_arrows(const Options & o, Json config, std::ostream & out)
{
    const CopyKind kind = parse_copy_kind(o.kind);
    ArrowResult res;
    std::string what;
    if (kind == CopyKind::ap) {
        if (! o.big_n)
            throw InputError("-N is required for kind ap");
        res = arrows_ap(*o.big_n, o.k, o.r, o.budget());
        what = "[" + std::to_string(*o.big_n) + "] -> (AP_" + std::to_string(o.k) + ")_" + std::to_string(o.r);
    }
    else {
        if (o.graph_path.empty())
            throw InputError("--graph is required for kinds clique and cycle");
        Graph g = read_graph_file(o.graph_path);
        res = arrows(g, kind, o.k, o.r, o.budget());
        what = std::string("H -> (") + (kind == CopyKind::clique ? "K_" : "C_") + std::to_string(o.k) + ")_" +
               std::to_string(o.r);
    }
    if (o.json)
        out << envelope("arrows", std::move(config), to_json(res)).dump(2) << '\n';
    else {
        echo_text(out, "arrows", config);
        out << "arrowing " << what << " via colourings of the system of copies\n";
        print_arrow(out, res);
    }
    return budget_exit(res.verdict == ArrowVerdict::budget_exceeded);
}

void print_sweep(std::ostream & out, const std::string & symbol, const SweepResult & res)
{
    if (res.value)
        out << symbol << " = " << *res.value << '\n';
    else
        out << symbol << " >= " << res.lower_bound << " (budget exhausted)\n";
    Table t;
    for (const auto & [n, c] : res.witnesses)
        t.row("n=" + std::to_string(n) + " refuted by", colouring_line(c));
    t.row("nodes", std::to_string(res.nodes));
    t.print(out, 2);
}

int cmd_ramsey(const Options & o, Json config, std::ostream & out)
{
    const CopyKind kind = graph_kind(o.kind);
    const std::string symbol =
        std::string("R(") + (kind == CopyKind::clique ? "K_" : "C_") + std::to_string(o.k) + "; " + std::to_string(o.r) + ")";
    if (o.n) {
        ArrowResult res = ramsey_decide(kind, o.k, o.r, *o.n, o.budget());
        if (o.json)
            out << envelope("ramsey", std::move(config), to_json(res)).dump(2) << '\n';
        else {
            echo_text(out, "ramsey", config);
            out << "K_" << *o.n << " against " << symbol << '\n';
            print_arrow(out, res);
        }
        return budget_exit(res.verdict == ArrowVerdict::budget_exceeded);
    }
    SweepResult res = ramsey_number(kind, o.k, o.r, o.budget());
    if (o.json)
        out << envelope("ramsey", std::move(config), to_json(res)).dump(2) << '\n';
    else {
        echo_text(out, "ramsey", config);
        out << "Ramsey number by ascending exhaustive search\n";
        print_sweep(out, symbol, res);
    }
    return budget_exit(! res.value);
}

int cmd_vdw(const Options & o, Json config, std::ostream & out)
{
    const std::string symbol = "vdW(" + std::to_string(o.k) + "; " + std::to_string(o.r) + ")";
    if (o.big_n) {
        ArrowResult res = vdw_decide(*o.big_n, o.k, o.r, o.budget());
        if (o.json)
            out << envelope("vdw", std::move(config), to_json(res)).dump(2) << '\n';
        else {
            echo_text(out, "vdw", config);
            out << "[" << *o.big_n << "] -> (AP_" << o.k << ")_" << o.r << '\n';
            print_arrow(out, res);
        }
        return budget_exit(res.verdict == ArrowVerdict::budget_exceeded);
    }
    SweepResult res = vdw_number(o.k, o.r, o.budget());
    if (o.json)
        out << envelope("vdw", std::move(config), to_json(res)).dump(2) << '\n';
    else {
        echo_text(out, "vdw", config);
        out << "van der Waerden number by ascending exhaustive search\n";
        print_sweep(out, symbol, res);
    }
    return budget_exit(! res.value);
}

int cmd_extremal(const Options & o, Json config, std::ostream & out)
{
    if (! o.n || ! o.m)
        throw InputError("-n and -m are required");
    ExtremalResult res = extremal_ex(*o.n, *o.m, o.budget());
    if (o.json)
        out << envelope("extremal", std::move(config), to_json(res)).dump(2) << '\n';
    else {
        echo_text(out, "extremal", config);
        out << "ex(" << *o.n << "; C_3..C_" << *o.m << "), most edges with girth > " << *o.m << '\n';
        Table t;
        t.row(res.exact ? "edges" : "edges (lower bound)", std::to_string(res.edges)).row("nodes", std::to_string(res.nodes));
        t.print(out, 2);
        write_graph(out, res.witness);
    }
    return budget_exit(! res.exact);
}

Colouring make_fact_colouring(const Options & o, std::uint64_t seed)
{
    const std::size_t n = *o.n;
    Colouring c{o.r + 1, std::vector<std::uint32_t>(n, 1)};
    if (o.mode == "random") {
        Prng rng(seed);
        for (auto & x : c.of)
            x = static_cast<std::uint32_t>(1 + rng.next() % (o.r + 1));
    }
    else if (o.mode == "residue") {
        for (std::size_t i = 0; i < n; ++i)
            c.of[i] = static_cast<std::uint32_t>(1 + (i + 1) % (o.r + 1));
    }
    else if (o.mode == "last") {
        for (auto & x : c.of)
            x = static_cast<std::uint32_t>(o.r + 1);
    }
    else if (o.mode != "constant")
        throw InputError("--mode must be random, residue, constant or last");
    return c;
}

int cmd_fact_vdw(const Options & o, Json config, std::ostream & out)
{
    if (! o.w)
        throw InputError("-W is required");
    std::vector<Colouring> colourings;
    std::uint64_t seed = 0;
    if (! o.colouring_path.empty())
        colourings.push_back(read_colouring_file(o.colouring_path));
    else {
        if (! o.n)
            throw InputError("-n is required without --colouring");
        if (o.mode == "random") {
            seed = o.seed.value_or(fresh_seed());
            config["seed"] = seed;
            config["prng"] = prng_algorithm;
        }
        const std::uint64_t count = o.mode == "random" ? o.samples : 1;
        for (std::uint64_t i = 0; i < count; ++i)
            colourings.push_back(make_fact_colouring(o, seed + i));
    }
    std::map<std::string, std::uint64_t> tally;
    Json reports = Json::array();
    bool verify = o.verify_w;
    for (const auto & c : colourings) {
        FactVdwReport rep = fact_vdw_check(c, o.k, o.r, *o.w, verify, o.budget());
        verify = false;  // the premise does not depend on the colouring
        ++tally[std::string(to_string(rep.branch))];
        reports.push_back(to_json(rep));
    }
    const bool violated = tally.count("violation") > 0;
    if (o.json) {
        Json t = Json::object();
        for (const auto & [k, v] : tally)
            t[k] = v;
        out << envelope("fact-vdw", std::move(config), Json{{"tally", std::move(t)}, {"reports", std::move(reports)}}).dump(2)
            << '\n';
    }
    else {
        echo_text(out, "fact-vdw", config);
        out << "(r+1)-colouring dichotomy: many monochromatic AP_k in colours 1..r, or a large last class\n";
        Table t;
        for (const auto & [k, v] : tally)
            t.row(k, std::to_string(v));
        if (colourings.size() == 1) {
            const auto & r = reports.front();
            t.row("monochromatic AP_k", r["mono_count"].dump())
                .row("AP_k in [n]", r["ap_count"].dump())
                .row("last class", r["last_class"].dump())
                .row("AP_W in [n]", r["ap_w_count"].dump());
        }
        t.print(out, 2);
    }
    return violated ? exit_input : exit_ok;
}

int cmd_fact7(const Options & o, Json config, std::ostream & out)
{
    if (! o.n)
        throw InputError("-n is required");
    bool exact = true;
    auto resolve = [&](std::optional<std::uint64_t> given, std::size_t m) {
        if (given)
            return *given;
        ExtremalResult res = extremal_ex(*o.n, m, o.budget());
        exact = exact && res.exact;
        return res.edges;
    };
    const std::uint64_t low = resolve(o.ex_low, 2 * o.k - 1);
    const std::uint64_t high = resolve(o.ex_high, 2 * o.k);
    const bool holds = exact && fact7_premise(low, high, o.r);
    const std::string implied = "f_" + std::to_string(o.r) + "(" + std::to_string(2 * o.k) + ") <= " + std::to_string(*o.n);
    if (o.json) {
        Json result{{"ex_low", low}, {"ex_high", high}, {"exact", exact}, {"premise", holds}};
        if (holds)
            result["implies"] = implied;
        out << envelope("fact7", std::move(config), std::move(result)).dump(2) << '\n';
    }
    else {
        echo_text(out, "fact7", config);
        out << "premise ex(n; C_3..C_" << 2 * o.k - 1 << ") > r ex(n; C_3..C_" << 2 * o.k << ")\n";
        Table t;
        t.row("ex_low", std::to_string(low)).row("ex_high", std::to_string(high)).row("premise", yes_no(holds));
        if (holds)
            t.row("implies", implied);
        t.print(out, 2);
    }
    return budget_exit(! exact);
}

int cmd_fbounds(const Options & o, Json config, std::ostream & out)
{
    std::optional<std::uint64_t> R;
    std::string source = "given";
    bool exceeded = false;
    if (o.ramsey)
        R = *o.ramsey;
    else if (o.search) {
        SweepResult s = ramsey_number(CopyKind::cycle, o.k, o.r, o.budget());
        if (s.value) {
            R = *s.value;
            source = "searched";
        }
        else
            exceeded = true;
    }
    FBoundsReport rep = f_bound_report(o.k, o.r, R, source);
    if (o.json)
        out << envelope("fbounds", std::move(config), to_json(rep)).dump(2) << '\n';
    else {
        echo_text(out, "fbounds", config);
        out << "bounds on f_r(k), the fewest vertices of a girth-k graph arrowing C_k with r colours\n";
        Table t;
        t.row("lower", to_string(rep.lower) + " (" + rep.lower_rule + ")");
        if (rep.ramsey)
            t.row("R(C_k; r)", std::to_string(*rep.ramsey) + " (" + rep.ramsey_source + ")");
        if (rep.ramsey_lower)
            t.row("R(C_k; r) at least", to_string(*rep.ramsey_lower));
        if (rep.upper)
            t.row("upper k^(15k^3) R^(10k^2)", rep.upper->to_string());
        else
            t.row("upper", "needs R(C_k; r): pass -R or --search");
        if (rep.special_exponent)
            t.row("asymptotic order", "O(r^" + std::to_string(*rep.special_exponent) + ")");
        t.print(out, 2);
    }
    return budget_exit(exceeded);
}

int cmd_trials(const Options & o, Json config, std::ostream & out)
{
    (void)config;
    if (! o.n)
        throw InputError("-n is required");
    TrialConfig cfg;
    cfg.theorem = parse_theorem(o.theorem);
    cfg.n = *o.n;
    cfg.p = o.p;
    cfg.scale = o.scale;
    cfg.k = o.k;
    cfg.g = o.g;
    cfg.r = o.r;
    cfg.seed = o.seed.value_or(fresh_seed());
    cfg.trials = o.trials;
    if (o.budget_nodes || o.budget_secs)
        cfg.budget = o.budget();
    cfg.cap = o.cap;
    cfg.max_tries = o.max_tries;
    cfg.threads = o.threads;
    cfg.timing = o.timing;
    cfg.validate();

    auto records = run_trials(cfg);
    std::ofstream file;
    std::ostream * sink = &out;
    if (! o.out_path.empty()) {
        file.open(o.out_path);
        if (! file)
            throw InputError("cannot write '" + o.out_path + "'");
        sink = &file;
    }
    for (const auto & r : records)
        *sink << trial_record_json(cfg, r).dump() << '\n';
    *sink << trial_summary_json(cfg, summarize(records)).dump() << '\n';
    return exit_ok;
}

int cmd_verify(const Options & o, Json config, std::ostream & out)
{
    if (o.colouring_path.empty())
        throw InputError("--colouring is required");
    UniformHypergraph h;
    if (! o.hypergraph_path.empty())
        h = read_hypergraph_file(o.hypergraph_path);
    else if (! o.graph_path.empty())
        h = system_of_copies(graph_kind(o.kind.empty() ? "cycle" : o.kind), read_graph_file(o.graph_path), o.k);
    else if (o.big_n)
        h = ap_system(*o.big_n, o.k);
    else
        throw InputError("one of --hypergraph, --graph or -N is required");
    Colouring c = read_colouring_file(o.colouring_path);
    const bool proper = verify_colouring(h, c);
    if (o.json)
        out << envelope("verify", std::move(config), Json{{"proper", proper}, {"edges", h.edge_count()}}).dump(2) << '\n';
    else {
        echo_text(out, "verify", config);
        out << "colouring check (proper iff no hyperedge is monochromatic)\n";
        Table().row("proper", yes_no(proper)).row("hyperedges", std::to_string(h.edge_count())).print(out, 2);
    }
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string> & raw_args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Ramsey-type constructions with girth constraints: builders, verifiers, bounds, exact search",
                 std::string(tool_name)};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast)->always_capture_default();
    app.set_version_flag("--version", std::string(tool_version));
    app.require_subcommand(1);
    Options o;

    auto * params = app.add_subcommand("params", "Constant chain, inequalities and container condition");
    params->add_option("--theorem", o.theorem, "cycles, ap or cliques")->required();
    params->add_option("-k", o.k, "Cycle length, AP length or clique size");
    params->add_option("-r", o.r, "Number of colours");
    params->add_option("-g", o.g, "Girth target");
    params->add_option("-R,-W,--ramsey", o.ramsey, "R(C_k;r), vdW(k;r) or R(K_k;r)");
    add_json(params, o);

    auto * sample = app.add_subcommand("sample", "Sample G(n,p) or [n]_p");
    sample->add_option("--kind", o.kind, "gnp or subset")->required();
    sample->add_option("-n", o.n, "Vertices or ground set size");
    sample->add_option("-p", o.p, "Probability");
    sample->add_option("--out", o.out_path, "Write the sample to a file");
    add_seed(sample, o);
    add_json(sample, o);

    auto * girth = app.add_subcommand("girth", "Graph girth, or the sparsity girth test of a hypergraph");
    girth->add_option("--graph", o.graph_path, "Graph file");
    girth->add_option("--hypergraph", o.hypergraph_path, "Hypergraph file");
    girth->add_option("-g", o.g, "Girth threshold for hypergraphs");
    add_json(girth, o);

    auto * cycles = app.add_subcommand("cycles", "Enumerate 2-cycles and j-cycles for j < g");
    cycles->add_option("--hypergraph", o.hypergraph_path, "Hypergraph file");
    cycles->add_option("--graph", o.graph_path, "Graph file (as a 2-uniform hypergraph)");
    cycles->add_option("-g", o.g, "Report cycles shorter than g");
    cycles->add_flag("--list", o.list, "List every cycle");
    add_json(cycles, o);

    auto * colour = app.add_subcommand("colour", "Search for a proper r-colouring of a hypergraph");
    colour->add_option("--hypergraph", o.hypergraph_path, "Hypergraph file");
    colour->add_option("-r", o.r, "Number of colours");
    colour->add_option("--out", o.out_path, "Write the witness colouring to a file");
    add_budget(colour, o);
    add_json(colour, o);

    auto * arrows_cmd = app.add_subcommand("arrows", "Decide H -> (F)_r for F = C_k, K_k or AP_k");
    arrows_cmd->add_option("--kind", o.kind, "cycle, clique or ap")->required();
    arrows_cmd->add_option("--graph", o.graph_path, "Host graph file (cycle, clique)");
    arrows_cmd->add_option("-N", o.big_n, "Interval [N] (ap)");
    arrows_cmd->add_option("-k", o.k, "Pattern size");
    arrows_cmd->add_option("-r", o.r, "Number of colours");
    add_budget(arrows_cmd, o);
    add_json(arrows_cmd, o);

    auto * ramsey = app.add_subcommand("ramsey", "Ramsey numbers R(K_k;r) and R(C_k;r) by exhaustive search");
    ramsey->add_option("--kind", o.kind, "clique or cycle")->required();
    ramsey->add_option("-k", o.k, "Clique size or cycle length");
    ramsey->add_option("-r", o.r, "Number of colours");
    ramsey->add_option("-n", o.n, "Decide K_n only instead of sweeping");
    add_budget(ramsey, o);
    add_json(ramsey, o);

    auto * vdw = app.add_subcommand("vdw", "van der Waerden numbers by exhaustive search");
    vdw->add_option("-k", o.k, "Progression length");
    vdw->add_option("-r", o.r, "Number of colours");
    vdw->add_option("-N", o.big_n, "Decide [N] only instead of sweeping");
    add_budget(vdw, o);
    add_json(vdw, o);

    auto * extremal = app.add_subcommand("extremal", "ex(n; C_3..C_m) by branch and bound");
    extremal->add_option("-n", o.n, "Vertices");
    extremal->add_option("-m", o.m, "Longest forbidden cycle");
    add_budget(extremal, o);
    add_json(extremal, o);

    auto * fact_vdw = app.add_subcommand("fact-vdw", "Check the (r+1)-colouring dichotomy for AP_k");
    fact_vdw->add_option("-n", o.n, "Size of [n]");
    fact_vdw->add_option("-k", o.k, "Progression length");
    fact_vdw->add_option("-r", o.r, "Colours of the first kind");
    fact_vdw->add_option("-W", o.w, "vdW(k;r)");
    fact_vdw->add_option("--colouring", o.colouring_path, "Colouring file over [n]");
    fact_vdw->add_option("--mode", o.mode, "random, residue, constant or last");
    fact_vdw->add_option("--samples", o.samples, "Random colourings to check");
    fact_vdw->add_flag("--verify-w", o.verify_w, "Decide [W] -> (AP_k)_r first");
    add_seed(fact_vdw, o);
    add_budget(fact_vdw, o);
    add_json(fact_vdw, o);

    auto * fact7 = app.add_subcommand("fact7", "Check ex(n;C_3..C_{2k-1}) > r ex(n;C_3..C_{2k})");
    fact7->add_option("-n", o.n, "Vertices");
    fact7->add_option("-r", o.r, "Number of colours");
    fact7->add_option("-k", o.k, "Half the cycle length");
    fact7->add_option("--ex-low", o.ex_low, "ex(n; C_3..C_{2k-1}) (searched if omitted)");
    fact7->add_option("--ex-high", o.ex_high, "ex(n; C_3..C_{2k}) (searched if omitted)");
    add_budget(fact7, o);
    add_json(fact7, o);

    auto * fbounds = app.add_subcommand("fbounds", "Lower and upper bounds on f_r(k)");
    fbounds->add_option("-k", o.k, "Cycle length");
    fbounds->add_option("-r", o.r, "Number of colours");
    fbounds->add_option("-R,--ramsey", o.ramsey, "R(C_k;r)");
    fbounds->add_flag("--search", o.search, "Find R(C_k;r) by exhaustive search");
    add_budget(fbounds, o);
    add_json(fbounds, o);

    auto * trials = app.add_subcommand("trials", "Seeded desk-scale experiments, JSON lines");
    trials->add_option("--theorem", o.theorem, "cycles, ap or cliques")->required();
    trials->add_option("-n", o.n, "Ground set or vertex count");
    trials->add_option("-p", o.p, "Probability");
    trials->add_option("--scale", o.scale, "p = scale * n^(-a) with the construction's exponent");
    trials->add_option("-k", o.k, "Pattern size");
    trials->add_option("-g", o.g, "Girth target");
    trials->add_option("-r", o.r, "Number of colours");
    trials->add_option("--trials", o.trials, "Number of trials");
    trials->add_option("--cap", o.cap, "Deletion cap t");
    trials->add_option("--max-tries", o.max_tries, "Draws per trial (cycles)");
    trials->add_option("--threads", o.threads, "Worker threads")->envname("THREADS");
    trials->add_flag("--timing", o.timing, "Record wall time per trial");
    trials->add_option("--out", o.out_path, "Write JSON lines to a file");
    add_seed(trials, o);
    add_budget(trials, o);

    auto * verify = app.add_subcommand("verify", "Check that a colouring is proper");
    verify->add_option("--hypergraph", o.hypergraph_path, "Hypergraph file");
    verify->add_option("--graph", o.graph_path, "Host graph file, with --kind and -k");
    verify->add_option("--kind", o.kind, "cycle or clique");
    verify->add_option("-N", o.big_n, "AP system of [N], with -k");
    verify->add_option("-k", o.k, "Pattern size");
    verify->add_option("--colouring", o.colouring_path, "Colouring file");
    add_json(verify, o);

    for (auto * sub : app.get_subcommands({}))
        sub->add_option("--config", "key=value file; command line flags take precedence");

    try {
        std::vector<std::string> args = expand_config(raw_args);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    }
    catch (const CLI::CallForVersion &) {
        out << tool_version << '\n';
        return exit_ok;
    }
    catch (const CLI::ParseError & e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return exit_input;
    }
    catch (const InputError & e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    }

    CLI::App * sub = app.get_subcommands().front();
    if (sub->get_name() == "trials" && ! o.seed)
        o.seed = fresh_seed();
    Json config = echo(*sub);
    config.erase("config");
    if (sub->get_name() == "trials")
        config["seed"] = *o.seed;

    try {
        const std::string name = sub->get_name();
        if (name == "params")
            return cmd_params(o, std::move(config), out);
        if (name == "sample")
            return cmd_sample(o, std::move(config), out);
        if (name == "girth")
            return cmd_girth(o, std::move(config), out);
        if (name == "cycles")
            return cmd_cycles(o, std::move(config), out);
        if (name == "colour")
            return cmd_colour(o, std::move(config), out);
        if (name == "arrows")
            return cmd_arrows(o, std::move(config), out);
        if (name == "ramsey")
            return cmd_ramsey(o, std::move(config), out);
        if (name == "vdw")
            return cmd_vdw(o, std::move(config), out);
        if (name == "extremal")
            return cmd_extremal(o, std::move(config), out);
        if (name == "fact-vdw")
            return cmd_fact_vdw(o, std::move(config), out);
        if (name == "fact7")
            return cmd_fact7(o, std::move(config), out);
        if (name == "fbounds")
            return cmd_fbounds(o, std::move(config), out);
        if (name == "trials")
            return cmd_trials(o, std::move(config), out);
        if (name == "verify")
            return cmd_verify(o, std::move(config), out);
    }
    catch (const InputError & e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    }
    err << "error: unknown command\n";
    return exit_input;
}

} // namespace ramgirth
