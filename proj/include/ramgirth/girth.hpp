#pragma once

#include <ramgirth/hypergraph.hpp>

#include <cstdint>
#include <map>
#include <vector>

namespace ramgirth {

/// Outcome of the sparsity girth test "every set of h' < g edges spans at
/// least (k-1)h' + 1 vertices".
struct GirthVerdict
{
    bool satisfied = true;
    /// Violating edge indices, ascending: smallest violating h' first, then
    /// the lexicographically least edge-index set of that size.
    std::vector<std::uint32_t> witness;
    std::size_t witness_span = 0;
};

GirthVerdict sparsity_girth(const UniformHypergraph & h, std::size_t g);

/// Number of universe vertices covered by the given edges.
std::size_t edge_span(const UniformHypergraph & h, std::span<const std::uint32_t> edges);

/// A 2-cycle (two edges sharing at least two vertices) or a j-cycle: a
/// cyclic sequence of j edges where consecutive edges meet in exactly one
/// vertex, nonconsecutive edges are disjoint, and the j meeting points are
/// distinct.
struct HyperCycle
{
    std::size_t length = 0;
    /// For j >= 3 the cyclic order, starting at the smallest edge index and
    /// oriented so that edges[1] < edges.back(). For 2-cycles, ascending.
    std::vector<std::uint32_t> edges;
};

struct CycleReport
{
    std::vector<HyperCycle> cycles;
    /// X_j for 2 <= j < g, zero entries included.
    std::map<std::size_t, std::uint64_t> counts;

    bool empty() const noexcept { return cycles.empty(); }
    std::uint64_t count(std::size_t j) const
    {
        auto it = counts.find(j);
        return it == counts.end() ? 0 : it->second;
    }
};

/// All cycles of length 2..g-1, each counted once up to rotation and
/// reflection of its cyclic edge sequence.
CycleReport enumerate_short_cycles(const UniformHypergraph & h, std::size_t g);

} // namespace ramgirth
