#include <ramgirth/degree.hpp>
#include <ramgirth/errors.hpp>

#include <algorithm>
#include <limits>
#include <map>

namespace ramgirth {

namespace {

// Calls f(positions) for every j-subset of 0..h-1, positions ascending.
template <typename F>
void for_each_subset(std::size_t h, std::size_t j, F && f)
{
    std::vector<std::size_t> pos(j);
    for (std::size_t i = 0; i < j; ++i)
        pos[i] = i;
    while (true) {
        f(pos);
        std::size_t i = j;
        while (i > 0 && pos[i - 1] == h - j + (i - 1))
            --i;
        if (i == 0)
            return;
        ++pos[i - 1];
        for (std::size_t t = i; t < j; ++t)
            pos[t] = pos[t - 1] + 1;
    }
}

bool fits_mixed_radix(std::size_t base, std::size_t digits)
{
    unsigned __int128 value = 1;
    for (std::size_t i = 0; i < digits; ++i) {
        value *= base;
        if (value > std::numeric_limits<std::uint64_t>::max())
            return false;
    }
    return true;
}

// d_j(v) for every v, by counting d(J) over all j-subsets J of all edges.
std::vector<std::uint64_t> max_j_degree(const UniformHypergraph & hg, std::size_t j)
{
    const std::size_t n = hg.universe_size();
    const std::size_t h = hg.uniformity();
    std::vector<std::uint64_t> best(n, 0);

    if (j == 1) {
        for (Vertex v = 0; v < n; ++v)
            best[v] = hg.incident_edges(v).size();
        return best;
    }
    if (j == h) {
        for (Vertex v = 0; v < n; ++v)
            best[v] = hg.incident_edges(v).empty() ? 0 : 1;
        return best;
    }

    auto credit = [&](std::span<const Vertex> subset, std::uint64_t count) {
        for (Vertex v : subset)
            best[v] = std::max(best[v], count);
    };

    if (fits_mixed_radix(n, j)) {
        std::vector<std::uint64_t> keys;
        for (std::size_t e = 0; e < hg.edge_count(); ++e) {
            auto edge = hg.edge(e);
            for_each_subset(h, j, [&](const std::vector<std::size_t> & pos) {
                std::uint64_t key = 0;
                for (std::size_t p : pos)
                    key = key * n + edge[p];
                keys.push_back(key);
            });
        }
        std::sort(keys.begin(), keys.end());
        std::vector<Vertex> subset(j);
        for (std::size_t i = 0; i < keys.size();) {
            std::size_t run = i;
            while (run < keys.size() && keys[run] == keys[i])
                ++run;
            std::uint64_t key = keys[i];
            for (std::size_t t = j; t-- > 0;) {
                subset[t] = static_cast<Vertex>(key % n);
                key /= n;
            }
            credit(subset, run - i);
            i = run;
        }
    }
    else {
        std::map<std::vector<Vertex>, std::uint64_t> counts;
        for (std::size_t e = 0; e < hg.edge_count(); ++e) {
            auto edge = hg.edge(e);
            for_each_subset(h, j, [&](const std::vector<std::size_t> & pos) {
                std::vector<Vertex> subset;
                for (std::size_t p : pos)
                    subset.push_back(edge[p]);
                ++counts[subset];
            });
        }
        for (const auto & [subset, count] : counts)
            credit(subset, count);
    }
    return best;
}

} // namespace

DegreeStats degree_stats(const UniformHypergraph & hg, std::size_t max_j)
{
    if (hg.universe_size() == 0)
        throw InputError("degree statistics need a non-empty universe");
    const std::size_t h = hg.uniformity();
    if (max_j == 0 || max_j > h)
        max_j = h;

    DegreeStats stats;
    stats.uniformity = h;
    stats.universe_size = hg.universe_size();
    stats.edge_count = hg.edge_count();
    for (std::size_t j = 1; j <= max_j; ++j) {
        auto per_vertex = max_j_degree(hg, j);
        BigInt total = 0;
        std::uint64_t top = 0;
        for (auto d : per_vertex) {
            total += big(d);
            top = std::max(top, d);
        }
        Rational avg(total, big(hg.universe_size()));
        avg.canonicalize();
        stats.avg.push_back(avg);
        stats.max.push_back(top);
    }
    return stats;
}

std::uint64_t set_degree(const UniformHypergraph & hg, std::span<const Vertex> subset)
{
    if (subset.empty())
        return hg.edge_count();
    std::uint64_t count = 0;
    for (auto e : hg.incident_edges(subset.front())) {
        auto edge = hg.edge(e);
        bool contains = std::all_of(subset.begin(), subset.end(), [&](Vertex v) {
            return std::binary_search(edge.begin(), edge.end(), v);
        });
        count += contains ? 1 : 0;
    }
    return count;
}

} // namespace ramgirth
