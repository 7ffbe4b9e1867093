#pragma once

// Brute-force reference implementations. They share no code with the
// library beyond the data types and are only meant for tiny inputs.

#include <ramgirth/colouring.hpp>
#include <ramgirth/graph.hpp>
#include <ramgirth/hypergraph.hpp>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using ramgirth::UniformHypergraph;
using ramgirth::Vertex;

inline std::size_t span(const UniformHypergraph & h, const std::vector<std::uint32_t> & edges)
{
    std::set<Vertex> seen;
    for (auto e : edges)
        for (auto v : h.edge(e))
            seen.insert(v);
    return seen.size();
}

// Every subset of h' edges, h' = 2..g-1, in lexicographic order.
struct SparsityVerdict
{
    bool satisfied = true;
    std::vector<std::uint32_t> witness;
};

inline SparsityVerdict sparsity(const UniformHypergraph & h, std::size_t g)
{
    const std::size_t m = h.edge_count();
    const std::size_t k = h.uniformity();
    for (std::size_t size = 2; size < g && size <= m; ++size) {
        std::vector<bool> pick(m, false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
        // prev_permutation over a descending mask visits subsets lexicographically
        do {
            std::vector<std::uint32_t> set;
            for (std::size_t i = 0; i < m; ++i)
                if (pick[i])
                    set.push_back(static_cast<std::uint32_t>(i));
            if (span(h, set) < (k - 1) * size + 1)
                return {false, set};
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return {};
}

inline std::size_t shared(const UniformHypergraph & h, std::uint32_t a, std::uint32_t b)
{
    std::size_t n = 0;
    for (auto u : h.edge(a))
        for (auto v : h.edge(b))
            n += u == v;
    return n;
}

inline std::optional<Vertex> common(const UniformHypergraph & h, std::uint32_t a, std::uint32_t b)
{
    for (auto u : h.edge(a))
        for (auto v : h.edge(b))
            if (u == v)
                return u;
    return std::nullopt;
}

// Ordered j-tuples of distinct edges satisfying the cycle conditions,
// divided by the 2j rotations and reflections.
inline std::uint64_t count_j_cycles(const UniformHypergraph & h, std::size_t j)
{
    const std::size_t m = h.edge_count();
    if (j == 2) {
        std::uint64_t n = 0;
        for (std::uint32_t a = 0; a < m; ++a)
            for (std::uint32_t b = a + 1; b < m; ++b)
                n += shared(h, a, b) >= 2;
        return n;
    }
    std::uint64_t ordered = 0;
    std::vector<std::uint32_t> seq;
    auto valid = [&]() {
        std::set<Vertex> points;
        for (std::size_t i = 0; i < j; ++i)
            for (std::size_t l = i + 1; l < j; ++l) {
                const bool adjacent = l == i + 1 || (i == 0 && l == j - 1);
                const std::size_t s = shared(h, seq[i], seq[l]);
                if (adjacent ? s != 1 : s != 0)
                    return false;
            }
        for (std::size_t i = 0; i < j; ++i)
            points.insert(*common(h, seq[i], seq[(i + 1) % j]));
        return points.size() == j;
    };
    auto rec = [&](auto & self) -> void {
        if (seq.size() == j) {
            ordered += valid();
            return;
        }
        for (std::uint32_t e = 0; e < m; ++e)
            if (std::find(seq.begin(), seq.end(), e) == seq.end()) {
                seq.push_back(e);
                self(self);
                seq.pop_back();
            }
    };
    rec(rec);
    return ordered / (2 * j);
}

inline bool proper(const UniformHypergraph & h, const std::vector<std::uint32_t> & colour)
{
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        auto edge = h.edge(e);
        bool mono = true;
        for (auto v : edge)
            mono = mono && colour[v] == colour[edge[0]];
        if (mono)
            return false;
    }
    return true;
}

// Every r^N assignment, no pruning.
inline bool colourable(const UniformHypergraph & h, std::size_t r)
{
    const std::size_t n = h.universe_size();
    std::vector<std::uint32_t> colour(n, 1);
    while (true) {
        if (proper(h, colour))
            return true;
        std::size_t i = 0;
        while (i < n && colour[i] == r)
            colour[i++] = 1;
        if (i == n)
            return false;
        ++colour[i];
    }
}

// All k-term APs {a, a+d, ...} inside 1..n.
inline std::set<std::vector<std::int64_t>> aps(std::int64_t n, std::int64_t k)
{
    std::set<std::vector<std::int64_t>> out;
    for (std::int64_t a = 1; a <= n; ++a)
        for (std::int64_t d = 1; a + (k - 1) * d <= n; ++d) {
            std::vector<std::int64_t> ap;
            for (std::int64_t i = 0; i < k; ++i)
                ap.push_back(a + i * d);
            out.insert(ap);
        }
    return out;
}

// Shortest cycle through each edge: drop it, BFS between its endpoints.
inline std::optional<std::size_t> girth(const ramgirth::Graph & g)
{
    std::optional<std::size_t> best;
    for (const auto & e : g.edges()) {
        std::vector<int> dist(g.order(), -1);
        std::deque<Vertex> queue{e.u};
        dist[e.u] = 0;
        while (! queue.empty()) {
            Vertex x = queue.front();
            queue.pop_front();
            for (Vertex y : g.neighbours(x)) {
                if ((x == e.u && y == e.v) || (x == e.v && y == e.u) || dist[y] >= 0)
                    continue;
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
        if (dist[e.v] >= 0) {
            const std::size_t len = static_cast<std::size_t>(dist[e.v]) + 1;
            if (! best || len < *best)
                best = len;
        }
    }
    return best;
}

// Largest edge count over all 2^C(n,2) graphs whose girth exceeds m.
inline std::size_t extremal(std::size_t n, std::size_t m)
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        const auto bits = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (bits <= best)
            continue;
        std::vector<std::pair<Vertex, Vertex>> chosen;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1)
                chosen.push_back(pairs[i]);
        auto gi = girth(ramgirth::graph_from_edges(n, chosen));
        if (! gi || *gi > m)
            best = bits;
    }
    return best;
}

inline UniformHypergraph random_hypergraph(std::mt19937_64 & rng, std::size_t max_vertices, std::size_t max_edges,
                                           std::size_t h)
{
    const std::size_t n = h + rng() % (max_vertices - h + 1);
    const std::size_t m = rng() % (max_edges + 1);
    std::set<std::vector<Vertex>> edges;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Vertex> all(n);
        for (std::size_t v = 0; v < n; ++v)
            all[v] = static_cast<Vertex>(v);
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(h);
        std::sort(all.begin(), all.end());
        edges.insert(all);
    }
    return UniformHypergraph(h, n, std::vector<std::vector<Vertex>>(edges.begin(), edges.end()));
}

} // namespace oracle
