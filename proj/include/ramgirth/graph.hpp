#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ramgirth {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge
{
    Vertex u;
    Vertex v;

    auto operator<=>(const Edge &) const = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are kept in lexicographic (u, v) order with u < v, and an edge's
/// position in that order is its identifier. Hypergraph universes built on
/// top of a graph (systems of cycle or clique copies) use these identifiers.
class Graph
{
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }

    std::span<const Edge> edges() const noexcept { return edges_; }
    const Edge & edge(EdgeId id) const { return edges_.at(id); }

    /// Sorted neighbour list of v.
    std::span<const Vertex> neighbours(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

    bool adjacent(Vertex u, Vertex v) const;
    std::optional<EdgeId> edge_id(Vertex u, Vertex v) const;

    friend bool operator==(const Graph & a, const Graph & b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    friend Graph graph_from_edges(std::size_t, std::span<const std::pair<Vertex, Vertex>>);

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
    // first_edge_[u] is the id of the first edge whose smaller endpoint is u
    std::vector<EdgeId> first_edge_;
};

/// Builds a canonical graph; duplicate pairs collapse, (u, v) and (v, u) are
/// the same edge. Throws InputError on self-loops or endpoints >= n.
Graph graph_from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs);

inline Graph graph_from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>> & pairs)
{
    return graph_from_edges(n, std::span<const std::pair<Vertex, Vertex>>(pairs));
}

Graph complete_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);

/// Length of a shortest cycle; std::nullopt stands for infinite girth (forests).
using Girth = std::optional<std::size_t>;

Girth graph_girth(const Graph & g);

} // namespace ramgirth
