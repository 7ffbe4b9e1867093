#pragma once

#include <ramgirth/girth.hpp>
#include <ramgirth/hypergraph.hpp>

#include <cstdint>
#include <vector>

namespace ramgirth {

struct DeletionResult
{
    bool cap_exceeded = false;
    /// Deleted universe vertices in the order chosen; on cap_exceeded, the
    /// partial set at the moment the cap was hit.
    std::vector<Vertex> removed;
    /// H minus `removed` (meaningful only when the cap held).
    UniformHypergraph survivor;
    /// Short cycles of the input, by length.
    std::map<std::size_t, std::uint64_t> counts;
};

/// Removes one vertex per cycle of length < g, greedily: repeatedly the
/// vertex lying on the most surviving cycles, smallest index on ties. A
/// vertex kills a cycle when it lies in one of the cycle's edges. The
/// survivor is re-checked with sparsity_girth; a failure there throws
/// std::logic_error since it cannot happen for a correct cycle enumeration.
DeletionResult delete_short_cycles(const UniformHypergraph & h, std::size_t g, std::uint64_t cap);

} // namespace ramgirth
