#include <ramgirth/copies.hpp>
#include <ramgirth/deletion.hpp>
#include <ramgirth/errors.hpp>
#include <ramgirth/sampling.hpp>
#include <ramgirth/trials.hpp>

#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

namespace ramgirth {

double TrialConfig::resolved_p() const
{
    if (p)
        return *p;
    if (! scale)
        throw InputError("either p or scale must be given");
    const double nn = static_cast<double>(n);
    double a = 0.0;
    switch (theorem) {
    case Theorem::cycles: a = static_cast<double>(k - 2) / static_cast<double>(k - 1); break;
    case Theorem::ap: a = 1.0 / static_cast<double>(k - 1); break;
    case Theorem::cliques: a = 2.0 / static_cast<double>(k + 1); break;
    }
    return std::min(1.0, *scale * std::pow(nn, -a));
}

std::uint64_t TrialConfig::resolved_cap() const
{
    if (cap)
        return *cap;
    const double nn = static_cast<double>(n);
    switch (theorem) {
    case Theorem::cycles: return 0;
    case Theorem::ap: return static_cast<std::uint64_t>(std::floor(0.1 * resolved_p() * nn));
    case Theorem::cliques: return static_cast<std::uint64_t>(std::floor(0.1 * resolved_p() * nn * (nn - 1) / 2));
    }
    return 0;
}

void TrialConfig::validate() const
{
    if (n < 1)
        throw InputError("n must be at least 1");
    double q = resolved_p();
    if (! (q >= 0.0 && q <= 1.0))
        throw InputError("p must lie in [0, 1]");
    if (theorem == Theorem::cycles && k < 4)
        throw InputError("the cycles construction needs k >= 4");
    if (k < 3)
        throw InputError("k must be at least 3");
    if (g < 2)
        throw InputError("g must be at least 2");
    if (r < 1)
        throw InputError("r must be at least 1");
    if (threads < 1)
        throw InputError("threads must be at least 1");
}

namespace {

void colour(TrialRecord & rec, const UniformHypergraph & h, const TrialConfig & cfg)
{
    auto res = colouring_search(h, cfg.r, cfg.budget);
    rec.colouring = res.status;
    rec.nodes = res.nodes;
}

void delete_and_colour(TrialRecord & rec, const UniformHypergraph & h, const TrialConfig & cfg)
{
    rec.copies = h.edge_count();
    auto del = delete_short_cycles(h, cfg.g, cfg.resolved_cap());
    rec.counts = del.counts;
    rec.removed = del.removed.size();
    rec.cap_exceeded = del.cap_exceeded;
    rec.girth_ok = ! del.cap_exceeded;
    if (rec.girth_ok)
        colour(rec, del.survivor, cfg);
}

UniformHypergraph as_hypergraph(const Graph & g)
{
    std::vector<std::vector<Vertex>> edges;
    edges.reserve(g.size());
    for (const auto & e : g.edges())
        edges.push_back({e.u, e.v});
    return UniformHypergraph(2, g.order(), std::move(edges));
}

} // namespace

TrialRecord run_trial(const TrialConfig & cfg, std::uint64_t index)
{
    TrialRecord rec;
    rec.index = index;
    rec.seed = cfg.seed + index;
    const auto start = std::chrono::steady_clock::now();
    try {
        const double p = cfg.resolved_p();
        switch (cfg.theorem) {
        case Theorem::cycles: {
            Graph first = sample_gnp(cfg.n, p, rec.seed);
            rec.counts = enumerate_short_cycles(as_hypergraph(first), cfg.k).counts;
            rec.counts.erase(2);
            auto rej = rejection_sample_girth(cfg.n, p, cfg.k, rec.seed, cfg.max_tries);
            rec.tries = rej.tries;
            rec.girth_ok = rej.graph.has_value();
            const Graph & g = rej.graph ? *rej.graph : first;
            rec.object_size = g.size();
            if (rej.graph) {
                auto system = system_of_copies(CopyKind::cycle, g, cfg.k);
                rec.copies = system.edge_count();
                colour(rec, system, cfg);
            }
            break;
        }
        case Theorem::ap: {
            auto subset = sample_subset(static_cast<std::int64_t>(cfg.n), p, rec.seed);
            rec.object_size = subset.size();
            delete_and_colour(rec, ap_system(subset, cfg.k), cfg);
            break;
        }
        case Theorem::cliques: {
            Graph g = sample_gnp(cfg.n, p, rec.seed);
            rec.object_size = g.size();
            delete_and_colour(rec, system_of_copies(CopyKind::clique, g, cfg.k), cfg);
            break;
        }
        }
    }
    catch (const std::exception & e) {
        rec.error = e.what();
    }
    if (cfg.timing) {
        std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
        rec.wall_ms = ms.count();
    }
    return rec;
}

std::vector<TrialRecord> run_trials(const TrialConfig & cfg)
{
    cfg.validate();
    std::vector<TrialRecord> out(cfg.trials);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (auto i = next++; i < cfg.trials; i = next++)
            out[i] = run_trial(cfg, i);
    };
    const auto workers = std::min<std::uint64_t>(cfg.threads, std::max<std::uint64_t>(cfg.trials, 1));
    std::vector<std::jthread> pool;
    for (std::uint64_t t = 1; t < workers; ++t)
        pool.emplace_back(worker);
    worker();
    return out;
}

TrialSummary summarize(const std::vector<TrialRecord> & records)
{
    TrialSummary s;
    s.trials = records.size();
    std::map<std::size_t, double> totals;
    double size = 0.0;
    double removed = 0.0;
    std::uint64_t ok = 0;
    for (const auto & r : records) {
        if (r.error) {
            ++s.errors;
            continue;
        }
        ++ok;
        s.successes += r.girth_ok;
        size += static_cast<double>(r.object_size);
        removed += static_cast<double>(r.removed);
        for (auto [j, x] : r.counts)
            totals[j] += static_cast<double>(x);
        if (r.colouring)
            ++s.colouring[std::string(to_string(*r.colouring))];
    }
    if (ok > 0) {
        const double d = static_cast<double>(ok);
        s.success_rate = static_cast<double>(s.successes) / d;
        s.mean_object_size = size / d;
        s.mean_removed = removed / d;
        for (auto [j, x] : totals)
            s.mean_counts[j] = x / d;
    }
    return s;
}

} // namespace ramgirth
