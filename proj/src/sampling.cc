#include <ramgirth/errors.hpp>
#include <ramgirth/sampling.hpp>

namespace ramgirth {

namespace {

void check_p(double p)
{
    if (! (p >= 0.0 && p <= 1.0))
        throw InputError("p must lie in [0, 1]");
}

bool girth_at_least(const Graph & g, std::size_t k)
{
    auto girth = graph_girth(g);
    return ! girth || *girth >= k;
}

} // namespace

Graph sample_gnp(std::size_t n, double p, Prng & rng)
{
    check_p(p);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.bernoulli(p))
                pairs.emplace_back(u, v);
    return graph_from_edges(n, pairs);
}

Graph sample_gnp(std::size_t n, double p, std::uint64_t seed)
{
    Prng rng(seed);
    return sample_gnp(n, p, rng);
}

std::vector<std::int64_t> sample_subset(std::int64_t n, double p, std::uint64_t seed)
{
    check_p(p);
    Prng rng(seed);
    std::vector<std::int64_t> out;
    for (std::int64_t i = 1; i <= n; ++i)
        if (rng.bernoulli(p))
            out.push_back(i);
    return out;
}

RejectionResult rejection_sample_girth(std::size_t n, double p, std::size_t k, std::uint64_t seed,
                                       std::uint64_t max_tries)
{
    if (k < 4)
        throw InputError("rejection sampling needs k >= 4");
    check_p(p);
    Prng rng(seed);
    RejectionResult out;
    while (out.tries < max_tries) {
        ++out.tries;
        Graph g = sample_gnp(n, p, rng);
        if (girth_at_least(g, k)) {
            out.graph = std::move(g);
            out.success_rate = 1.0 / static_cast<double>(out.tries);
            return out;
        }
    }
    return out;
}

double girth_success_rate(std::size_t n, double p, std::size_t k, std::uint64_t seed, std::uint64_t samples)
{
    if (samples == 0)
        return 0.0;
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < samples; ++i)
        hits += girth_at_least(sample_gnp(n, p, seed + i), k);
    return static_cast<double>(hits) / static_cast<double>(samples);
}

} // namespace ramgirth
