#include <ramgirth/copies.hpp>
#include <ramgirth/errors.hpp>
#include <ramgirth/exact.hpp>

#include <algorithm>
#include <chrono>

namespace ramgirth {

namespace {

using Clock = std::chrono::steady_clock;

// Remaining allowance of a budget shared by several searches.
class SharedBudget
{
public:
    explicit SharedBudget(const SearchBudget & b) : total_(b), start_(Clock::now()) {}

    SearchBudget remaining() const
    {
        SearchBudget out;
        if (total_.nodes)
            out.nodes = *total_.nodes > used_ ? *total_.nodes - used_ : 0;
        if (total_.seconds) {
            std::chrono::duration<double> elapsed = Clock::now() - start_;
            out.seconds = std::max(0.0, *total_.seconds - elapsed.count());
        }
        return out;
    }

    void charge(std::uint64_t nodes) { used_ += nodes; }
    std::uint64_t used() const { return used_; }

private:
    SearchBudget total_;
    Clock::time_point start_;
    std::uint64_t used_ = 0;
};

template <typename Decide>
SweepResult sweep(std::size_t from, const SearchBudget & budget, Decide decide)
{
    SweepResult out;
    SharedBudget shared(budget);
    for (std::size_t n = from;; ++n) {
        ArrowResult res = decide(n, shared.remaining());
        shared.charge(res.nodes);
        out.nodes = shared.used();
        out.lower_bound = n;
        switch (res.verdict) {
        case ArrowVerdict::arrows: out.value = n; return out;
        case ArrowVerdict::not_arrows: out.witnesses.emplace_back(n, std::move(*res.witness)); break;
        case ArrowVerdict::budget_exceeded: return out;
        }
    }
}

} // namespace

ArrowResult ramsey_decide(CopyKind kind, std::size_t k, std::size_t r, std::size_t n, const SearchBudget & budget)
{
    if (kind == CopyKind::ap)
        throw InputError("ramsey_decide takes kind clique or cycle");
    if (n < k)
        throw InputError("n must be at least k");
    return arrows(complete_graph(n), kind, k, r, budget);
}

ArrowResult vdw_decide(std::int64_t n, std::size_t k, std::size_t r, const SearchBudget & budget)
{
    if (n < 1)
        throw InputError("N must be at least 1");
    return arrows_ap(n, k, r, budget);
}

SweepResult ramsey_number(CopyKind kind, std::size_t k, std::size_t r, const SearchBudget & budget)
{
    if (kind == CopyKind::ap)
        throw InputError("ramsey_number takes kind clique or cycle");
    if (kind == CopyKind::cycle && k < 3)
        throw InputError("cycles need k >= 3");
    if (kind == CopyKind::clique && k < 2)
        throw InputError("cliques need k >= 2");
    return sweep(k, budget, [&](std::size_t n, const SearchBudget & b) { return ramsey_decide(kind, k, r, n, b); });
}

SweepResult vdw_number(std::size_t k, std::size_t r, const SearchBudget & budget)
{
    if (k < 1)
        throw InputError("k must be at least 1");
    return sweep(k, budget, [&](std::size_t n, const SearchBudget & b) {
        return vdw_decide(static_cast<std::int64_t>(n), k, r, b);
    });
}

std::string_view to_string(FactBranch b)
{
    switch (b) {
    case FactBranch::first: return "first";
    case FactBranch::second: return "second";
    case FactBranch::both: return "both";
    case FactBranch::violation: return "violation";
    case FactBranch::not_certified: return "not_certified";
    }
    return "?";
}

FactVdwReport fact_vdw_check(const Colouring & c, std::size_t k, std::size_t r, std::uint64_t w, bool verify_w,
                             const SearchBudget & budget)
{
    if (k < 2)
        throw InputError("k must be at least 2");
    if (w < k)
        throw InputError("W must be at least k");
    const std::size_t n = c.of.size();
    for (auto colour : c.of)
        if (colour < 1 || colour > r + 1)
            throw InputError("colours must lie in 1..r+1");

    FactVdwReport rep;
    if (verify_w) {
        auto res = vdw_decide(static_cast<std::int64_t>(w), k, r, budget);
        rep.w_check = res.verdict;
        if (res.verdict == ArrowVerdict::not_arrows)
            throw InputError("[W] does not arrow AP_k with r colours");
    }

    const auto nn = static_cast<std::int64_t>(n);
    const auto span = static_cast<std::int64_t>(k - 1);
    for (std::int64_t a = 0; a < nn; ++a)
        for (std::int64_t d = 1; a + span * d < nn; ++d) {
            ++rep.ap_count;
            const auto colour = c.of[a];
            if (colour > r)
                continue;
            bool mono = true;
            for (std::int64_t i = 1; i <= span && mono; ++i)
                mono = c.of[a + i * d] == colour;
            rep.mono_count += mono;
        }
    rep.last_class = static_cast<std::uint64_t>(std::count(c.of.begin(), c.of.end(), r + 1));
    rep.ap_w_count = ap_count_formula(nn, w);

    const BigInt W = big(w);
    rep.first_holds = big(rep.mono_count) * W * W * W > big(rep.ap_count);
    rep.second_holds = big(rep.last_class) * 4 * W > big(n);
    rep.certified = big(rep.ap_w_count) * 2 * W >= big(n) * big(n);
    if (rep.first_holds && rep.second_holds)
        rep.branch = FactBranch::both;
    else if (rep.first_holds)
        rep.branch = FactBranch::first;
    else if (rep.second_holds)
        rep.branch = FactBranch::second;
    else
        rep.branch = rep.certified ? FactBranch::violation : FactBranch::not_certified;
    return rep;
}

namespace {

class ExtremalSearch
{
public:
    ExtremalSearch(std::size_t n, std::size_t m, const SearchBudget & budget)
        : n_(n), m_(m), budget_(budget), adj_(n * n, 0), deg_(n, 0), start_(Clock::now())
    {
        for (Vertex u = 1; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                pairs_.emplace_back(u, v);
    }

    ExtremalResult run()
    {
        ExtremalResult out;
        best_graph_ = Graph(n_);
        try {
            for (std::size_t d = n_ < 2 ? 0 : n_ - 1; d >= 1; --d) {
                if (n_ * d / 2 <= best_)
                    break;
                max_degree_ = d;
                for (Vertex v = 1; v <= d; ++v)
                    link(0, v);
                descend(0);
                for (Vertex v = 1; v <= d; ++v)
                    unlink(0, v);
            }
            out.exact = true;
        }
        catch (const Exhausted &) {
            out.exact = false;
        }
        out.edges = best_;
        out.witness = best_graph_;
        out.nodes = nodes_;
        return out;
    }

private:
    struct Exhausted
    {
    };

    void tick()
    {
        ++nodes_;
        if (budget_.nodes && nodes_ > *budget_.nodes)
            throw Exhausted{};
        if (budget_.seconds && (nodes_ & 1023) == 0) {
            std::chrono::duration<double> elapsed = Clock::now() - start_;
            if (elapsed.count() > *budget_.seconds)
                throw Exhausted{};
        }
    }

    void link(Vertex u, Vertex v)
    {
        adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
        ++deg_[u];
        ++deg_[v];
        ++edges_;
    }

    void unlink(Vertex u, Vertex v)
    {
        adj_[u * n_ + v] = adj_[v * n_ + u] = 0;
        --deg_[u];
        --deg_[v];
        --edges_;
    }

    // True if u and v are within distance m - 1, i.e. the edge uv would
    // close a cycle of length at most m.
    bool close(Vertex u, Vertex v)
    {
        std::vector<std::size_t> dist(n_, SIZE_MAX);
        std::vector<Vertex> frontier{u};
        dist[u] = 0;
        for (std::size_t depth = 0; depth + 1 < m_ && ! frontier.empty(); ++depth) {
            std::vector<Vertex> next;
            for (Vertex x : frontier)
                for (Vertex y = 0; y < n_; ++y)
                    if (adj_[x * n_ + y] && dist[y] == SIZE_MAX) {
                        if (y == v)
                            return true;
                        dist[y] = depth + 1;
                        next.push_back(y);
                    }
            frontier = std::move(next);
        }
        return false;
    }

    void record()
    {
        best_ = edges_;
        std::vector<std::pair<Vertex, Vertex>> es;
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v = u + 1; v < n_; ++v)
                if (adj_[u * n_ + v])
                    es.emplace_back(u, v);
        best_graph_ = graph_from_edges(n_, es);
    }

    void descend(std::size_t i)
    {
        tick();
        if (edges_ > best_)
            record();
        if (i == pairs_.size())
            return;
        std::size_t slack = 0;
        for (Vertex v = 1; v < n_; ++v)
            slack += max_degree_ - deg_[v];
        const std::size_t room = std::min(pairs_.size() - i, slack / 2);
        if (edges_ + room <= best_)
            return;

        auto [u, v] = pairs_[i];
        if (deg_[u] < max_degree_ && deg_[v] < max_degree_ && ! close(u, v)) {
            link(u, v);
            descend(i + 1);
            unlink(u, v);
        }
        descend(i + 1);
    }

    std::size_t n_;
    std::size_t m_;
    SearchBudget budget_;
    std::vector<std::uint8_t> adj_;
    std::vector<std::size_t> deg_;
    std::vector<std::pair<Vertex, Vertex>> pairs_;
    std::size_t max_degree_ = 0;
    std::size_t edges_ = 0;
    std::size_t best_ = 0;
    Graph best_graph_;
    std::uint64_t nodes_ = 0;
    Clock::time_point start_;
};

} // namespace

ExtremalResult extremal_ex(std::size_t n, std::size_t m, const SearchBudget & budget)
{
    if (m < 3)
        throw InputError("the forbidden cycle lengths must be 3..m with m >= 3");
    ExtremalResult res = ExtremalSearch(n, m, budget).run();
    auto girth = graph_girth(res.witness);
    if (girth && *girth <= m)
        throw std::logic_error("extremal witness contains a forbidden cycle");
    return res;
}

bool fact7_premise(std::uint64_t ex_low, std::uint64_t ex_high, std::uint64_t r)
{
    return big(ex_low) > big(r) * big(ex_high);
}

BigInt moore_lower_bound(Parity parity, unsigned r, unsigned k)
{
    if (r < 1 || k < 1)
        throw InputError("moore_lower_bound needs r >= 1 and k >= 1");
    BigInt sum = 0;
    BigInt term = 1;
    if (parity == Parity::even) {
        for (unsigned i = 0; i < k; ++i, term *= r - 1)
            sum += term;
        return 2 * sum;
    }
    BigInt two_r;
    mpz_ui_pow_ui(two_r.get_mpz_t(), 2, r);
    term = two_r - 1;
    for (unsigned i = 1; i < k; ++i, term *= two_r - 1)
        sum += term;
    return 1 + two_r * sum;
}

FBoundsReport f_bound_report(unsigned k, unsigned r, std::optional<std::uint64_t> ramsey, std::string ramsey_source)
{
    if (k < 3)
        throw InputError("k must be at least 3");
    if (r < 1)
        throw InputError("r must be at least 1");
    FBoundsReport rep;
    rep.k = k;
    rep.r = r;
    rep.parity = k % 2 == 0 ? Parity::even : Parity::odd;
    const unsigned l = k / 2;
    if (rep.parity == Parity::even) {
        // an edge-minimal arrowing subgraph has minimum degree above r
        rep.lower = moore_lower_bound(Parity::even, r + 1, l);
        rep.lower_rule = "girth " + std::to_string(k) + ", minimum degree " + std::to_string(r + 1);
    }
    else {
        // chromatic number above 2^r forces a subgraph of minimum degree 2^r
        rep.lower = moore_lower_bound(Parity::odd, r, l);
        rep.lower_rule = "girth " + std::to_string(k) + ", minimum degree 2^" + std::to_string(r);
        BigInt two_r;
        mpz_ui_pow_ui(two_r.get_mpz_t(), 2, r);
        rep.ramsey_lower = two_r * l;
        if (! ramsey) {
            BigInt bound = factorial(r + 2) * k;
            if (bound.fits_ulong_p()) {
                ramsey = bound.get_ui();
                ramsey_source = "(r+2)! k";
            }
        }
    }
    if (ramsey) {
        rep.ramsey = ramsey;
        rep.ramsey_source = ramsey_source;
        const LogNum lk = LogNum::from_int(static_cast<long>(k));
        const LogNum lR = LogNum::from_int(big(*ramsey));
        rep.upper = lk.pow(15L * k * k * k) * lR.pow(10L * k * k);
        rep.consistent = LogNum::from_int(rep.lower) <= *rep.upper;
    }
    switch (k) {
    case 6: rep.special_exponent = 6; break;
    case 8: rep.special_exponent = 12; break;
    case 12: rep.special_exponent = 30; break;
    default: break;
    }
    return rep;
}

} // namespace ramgirth
