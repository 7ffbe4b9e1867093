#include <ramgirth/errors.hpp>
#include <ramgirth/hypergraph.hpp>

#include <algorithm>
#include <numeric>
#include <string>

namespace ramgirth {

UniformHypergraph::UniformHypergraph(std::size_t uniformity, std::size_t universe_size,
                                     std::vector<std::vector<Vertex>> edges)
    : h_(uniformity), labels_(universe_size)
{
    std::iota(labels_.begin(), labels_.end(), Label{0});
    build(std::move(edges));
}

UniformHypergraph::UniformHypergraph(std::size_t uniformity, std::vector<Label> labels,
                                     std::vector<std::vector<Vertex>> edges)
    : h_(uniformity), labels_(std::move(labels))
{
    for (std::size_t i = 1; i < labels_.size(); ++i)
        if (labels_[i - 1] >= labels_[i])
            throw InputError("hypergraph labels must be strictly increasing");
    build(std::move(edges));
}

void UniformHypergraph::build(std::vector<std::vector<Vertex>> edges)
{
    if (h_ < 1)
        throw InputError("uniformity must be at least 1");

    const std::size_t n = labels_.size();
    flat_.reserve(edges.size() * h_);
    incidence_.assign(n, {});

    for (auto & e : edges) {
        if (e.size() != h_)
            throw InputError("hyperedge of size " + std::to_string(e.size()) + " in a " + std::to_string(h_) +
                             "-uniform hypergraph");
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw InputError("hyperedge with a repeated vertex");
        if (e.back() >= n)
            throw InputError("hyperedge vertex " + std::to_string(e.back()) + " outside universe of size " +
                             std::to_string(n));
        auto index = static_cast<std::uint32_t>(flat_.size() / h_);
        for (Vertex v : e) {
            flat_.push_back(v);
            incidence_[v].push_back(index);
        }
    }

    std::vector<std::uint32_t> order(edge_count());
    std::iota(order.begin(), order.end(), 0u);
    auto tuple = [&](std::uint32_t i) { return edge(i); };
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        auto x = tuple(a), y = tuple(b);
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    });
    for (std::size_t i = 1; i < order.size(); ++i) {
        auto x = tuple(order[i - 1]), y = tuple(order[i]);
        if (std::equal(x.begin(), x.end(), y.begin()))
            throw InputError("duplicate hyperedge");
    }
}

std::optional<Vertex> UniformHypergraph::index_of(Label label) const
{
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label)
        return std::nullopt;
    return static_cast<Vertex>(it - labels_.begin());
}

UniformHypergraph UniformHypergraph::without_vertices(std::span<const Vertex> removed) const
{
    std::vector<bool> gone(universe_size(), false);
    for (Vertex v : removed)
        gone.at(v) = true;

    std::vector<Vertex> remap(universe_size(), 0);
    std::vector<Label> labels;
    for (Vertex v = 0; v < universe_size(); ++v)
        if (! gone[v]) {
            remap[v] = static_cast<Vertex>(labels.size());
            labels.push_back(labels_[v]);
        }

    std::vector<std::vector<Vertex>> edges;
    for (std::size_t i = 0; i < edge_count(); ++i) {
        auto e = edge(i);
        if (std::any_of(e.begin(), e.end(), [&](Vertex v) { return gone[v]; }))
            continue;
        std::vector<Vertex> mapped;
        mapped.reserve(h_);
        for (Vertex v : e)
            mapped.push_back(remap[v]);
        edges.push_back(std::move(mapped));
    }
    return UniformHypergraph(h_, std::move(labels), std::move(edges));
}

} // namespace ramgirth
