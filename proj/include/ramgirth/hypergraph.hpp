#pragma once

#include <ramgirth/graph.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ramgirth {

using Label = std::int64_t;

/// h-uniform hypergraph over a finite universe.
///
/// Universe vertices are addressed by dense indices 0..N-1. Each index also
/// carries a label (strictly increasing), so that e.g. the AP system of a
/// subset S of the integers can keep the elements of S as labels while the
/// algorithms work with dense indices. Every edge is stored as a sorted tuple
/// of distinct indices and the edge list is duplicate-free.
class UniformHypergraph
{
public:
    UniformHypergraph() = default;

    /// Universe 0..universe_size-1, labels equal to indices.
    UniformHypergraph(std::size_t uniformity, std::size_t universe_size, std::vector<std::vector<Vertex>> edges);

    /// Explicit labels (strictly increasing); edges are given in indices.
    UniformHypergraph(std::size_t uniformity, std::vector<Label> labels, std::vector<std::vector<Vertex>> edges);

    std::size_t uniformity() const noexcept { return h_; }
    std::size_t universe_size() const noexcept { return labels_.size(); }
    std::size_t edge_count() const noexcept { return h_ == 0 ? 0 : flat_.size() / h_; }
    bool empty() const noexcept { return flat_.empty(); }

    std::span<const Vertex> edge(std::size_t i) const { return {flat_.data() + i * h_, h_}; }

    /// Indices of the edges containing v, ascending.
    std::span<const std::uint32_t> incident_edges(Vertex v) const { return incidence_.at(v); }

    Label label(Vertex v) const { return labels_.at(v); }
    std::span<const Label> labels() const noexcept { return labels_; }
    std::optional<Vertex> index_of(Label label) const;

    /// The hypergraph restricted to the universe minus `removed`; edges
    /// meeting a removed vertex disappear and surviving labels are kept.
    UniformHypergraph without_vertices(std::span<const Vertex> removed) const;

    friend bool operator==(const UniformHypergraph & a, const UniformHypergraph & b)
    {
        return a.h_ == b.h_ && a.labels_ == b.labels_ && a.flat_ == b.flat_;
    }

private:
    void build(std::vector<std::vector<Vertex>> edges);

    std::size_t h_ = 0;
    std::vector<Label> labels_;
    std::vector<Vertex> flat_;
    std::vector<std::vector<std::uint32_t>> incidence_;
};

} // namespace ramgirth
