#pragma once

#include <ramgirth/graph.hpp>
#include <ramgirth/hypergraph.hpp>

#include <cstdint>
#include <span>
#include <string_view>

namespace ramgirth {

enum class CopyKind
{
    cycle,
    clique,
    ap
};

std::string_view to_string(CopyKind kind);
CopyKind parse_copy_kind(std::string_view text);

/// System of copies of C_k (kind = cycle) or K_k (kind = clique) in `base`.
///
/// The universe is E(base) in edge-identifier order and every hyperedge is
/// the edge set of one copy, so relabelings of the same subgraph count once.
/// Uniformity is k for cycles and C(k, 2) for cliques. Hyperedges are listed
/// in lexicographic order. A base too small to host a copy yields an empty
/// hypergraph.
UniformHypergraph system_of_copies(CopyKind kind, const Graph & base, std::size_t k);

/// k-term arithmetic progressions in [N] = {1..N}; labels are 1..N.
UniformHypergraph ap_system(std::int64_t n, std::size_t k);

/// k-term arithmetic progressions inside a finite set of integers. The
/// universe is the sorted, deduplicated set.
UniformHypergraph ap_system(std::span<const std::int64_t> elements, std::size_t k);

/// Number of k-term APs in [N], as the closed sum over starting points
/// sum_{i=1}^{N-k+1} floor((N - i) / (k - 1)). Zero when N < k.
std::uint64_t ap_count_formula(std::int64_t n, std::size_t k);

} // namespace ramgirth
