#include <ramgirth/errors.hpp>
#include <ramgirth/graph.hpp>

#include <algorithm>
#include <limits>
#include <string>

namespace ramgirth {

Graph::Graph(std::size_t n) : n_(n), adjacency_(n), first_edge_(n + 1, 0) {}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    if (u >= n_ || v >= n_)
        return false;
    const auto & nu = adjacency_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::optional<EdgeId> Graph::edge_id(Vertex u, Vertex v) const
{
    if (u > v)
        std::swap(u, v);
    if (u == v || v >= n_)
        return std::nullopt;
    const auto & nu = adjacency_[u];
    auto upper = std::upper_bound(nu.begin(), nu.end(), u);
    auto it = std::lower_bound(upper, nu.end(), v);
    if (it == nu.end() || *it != v)
        return std::nullopt;
    return first_edge_[u] + static_cast<EdgeId>(it - upper);
}

Graph graph_from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs)
{
    if (n > std::numeric_limits<Vertex>::max())
        throw InputError("vertex count too large");

    Graph g(n);
    g.edges_.reserve(pairs.size());
    for (auto [a, b] : pairs) {
        if (a >= n || b >= n)
            throw InputError("edge endpoint out of range: (" + std::to_string(a) + ", " + std::to_string(b) +
                             ") with n = " + std::to_string(n));
        if (a == b)
            throw InputError("self-loop at vertex " + std::to_string(a));
        g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

    for (auto [u, v] : g.edges_) {
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
        ++g.first_edge_[u + 1];
    }
    for (std::size_t u = 0; u < n; ++u) {
        std::sort(g.adjacency_[u].begin(), g.adjacency_[u].end());
        g.first_edge_[u + 1] += g.first_edge_[u];
    }
    return g;
}

Graph complete_graph(std::size_t n)
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    return graph_from_edges(n, pairs);
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b)
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v)
            pairs.emplace_back(u, static_cast<Vertex>(a + v));
    return graph_from_edges(a + b, pairs);
}

Graph cycle_graph(std::size_t n)
{
    if (n < 3)
        throw InputError("a cycle needs at least 3 vertices");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        pairs.emplace_back(u, static_cast<Vertex>((u + 1) % n));
    return graph_from_edges(n, pairs);
}

Graph path_graph(std::size_t n)
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u + 1 < n; ++u)
        pairs.emplace_back(u, u + 1);
    return graph_from_edges(n, pairs);
}

// BFS from every vertex. A non-tree edge (x, y) seen from root s closes a
// closed walk of length dist[x] + dist[y] + 1 containing a cycle at most that
// long; the minimum over all roots is attained by a shortest cycle.
Girth graph_girth(const Graph & g)
{
    const std::size_t n = g.order();
    constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
    std::size_t best = unseen;

    std::vector<std::size_t> dist(n, unseen);
    std::vector<Vertex> parent(n, 0);
    std::vector<Vertex> queue;
    queue.reserve(n);

    for (Vertex s = 0; s < n; ++s) {
        for (Vertex v : queue)
            dist[v] = unseen;
        queue.clear();
        dist[s] = 0;
        parent[s] = s;
        queue.push_back(s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex x = queue[head];
            if (best != unseen && 2 * dist[x] + 1 >= best)
                break;
            for (Vertex y : g.neighbours(x)) {
                if (dist[y] == unseen) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                }
                else if (parent[x] != y) {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
    }
    for (Vertex v : queue)
        dist[v] = unseen;

    if (best == unseen)
        return std::nullopt;
    return best;
}

} // namespace ramgirth
