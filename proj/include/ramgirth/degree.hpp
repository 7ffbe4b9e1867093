#pragma once

#include <ramgirth/hypergraph.hpp>
#include <ramgirth/numeric.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace ramgirth {

/// Degree profile of a uniform hypergraph.
///
/// For a vertex set J, d(J) counts the edges containing J. The maximum
/// j-degree of v is d_j(v) = max{ d(J) : |J| = j, v in J } and d_j is its
/// average over the universe. Index j runs over 1..h.
struct DegreeStats
{
    std::size_t uniformity = 0;
    std::size_t universe_size = 0;
    std::size_t edge_count = 0;
    std::vector<Rational> avg;       // avg[j - 1] = d_j
    std::vector<std::uint64_t> max;  // max[j - 1] = max_v d_j(v)

    const Rational & avg_d(std::size_t j) const { return avg.at(j - 1); }
    std::uint64_t max_d(std::size_t j) const { return max.at(j - 1); }
    std::size_t computed_up_to() const noexcept { return avg.size(); }
};

/// Exact degree statistics for j = 1..max_j (max_j = 0 means all of 1..h).
/// Throws InputError on an empty universe.
DegreeStats degree_stats(const UniformHypergraph & h, std::size_t max_j = 0);

/// d(J) for an explicit vertex set.
std::uint64_t set_degree(const UniformHypergraph & h, std::span<const Vertex> subset);

} // namespace ramgirth
