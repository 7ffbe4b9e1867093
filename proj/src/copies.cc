#include <ramgirth/copies.hpp>
#include <ramgirth/errors.hpp>

#include <algorithm>
#include <string>

namespace ramgirth {

std::string_view to_string(CopyKind kind)
{
    switch (kind) {
    case CopyKind::cycle: return "cycle";
    case CopyKind::clique: return "clique";
    case CopyKind::ap: return "ap";
    }
    return "?";
}

CopyKind parse_copy_kind(std::string_view text)
{
    if (text == "cycle")
        return CopyKind::cycle;
    if (text == "clique")
        return CopyKind::clique;
    if (text == "ap")
        return CopyKind::ap;
    throw InputError("unknown copy kind '" + std::string(text) + "' (expected cycle, clique or ap)");
}

namespace {

using EdgeList = std::vector<std::vector<Vertex>>;

// Each cycle is found once: it starts at its smallest vertex, every other
// vertex is larger, and the second vertex is smaller than the last.
void find_cycles(const Graph & g, std::size_t k, std::vector<Vertex> & path, std::vector<bool> & on_path,
                 EdgeList & out)
{
    const Vertex start = path.front();
    const Vertex last = path.back();
    if (path.size() == k) {
        if (path[1] < last && g.adjacent(last, start)) {
            std::vector<Vertex> ids;
            ids.reserve(k);
            for (std::size_t i = 0; i < k; ++i)
                ids.push_back(*g.edge_id(path[i], path[(i + 1) % k]));
            std::sort(ids.begin(), ids.end());
            out.push_back(std::move(ids));
        }
        return;
    }
    for (Vertex next : g.neighbours(last)) {
        if (next <= start || on_path[next])
            continue;
        on_path[next] = true;
        path.push_back(next);
        find_cycles(g, k, path, on_path, out);
        path.pop_back();
        on_path[next] = false;
    }
}

void find_cliques(const Graph & g, std::size_t k, std::vector<Vertex> & members, const std::vector<Vertex> & candidates,
                  EdgeList & out)
{
    if (members.size() == k) {
        std::vector<Vertex> ids;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                ids.push_back(*g.edge_id(members[i], members[j]));
        std::sort(ids.begin(), ids.end());
        out.push_back(std::move(ids));
        return;
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (members.size() + (candidates.size() - i) < k)
            return;
        Vertex v = candidates[i];
        std::vector<Vertex> next;
        for (std::size_t j = i + 1; j < candidates.size(); ++j)
            if (g.adjacent(v, candidates[j]))
                next.push_back(candidates[j]);
        members.push_back(v);
        find_cliques(g, k, members, next, out);
        members.pop_back();
    }
}

} // namespace

UniformHypergraph system_of_copies(CopyKind kind, const Graph & base, std::size_t k)
{
    EdgeList edges;
    std::size_t uniformity = 0;
    switch (kind) {
    case CopyKind::cycle: {
        if (k < 3)
            throw InputError("cycle copies need k >= 3");
        uniformity = k;
        std::vector<Vertex> path;
        std::vector<bool> on_path(base.order(), false);
        for (Vertex s = 0; s < base.order() && k <= base.order(); ++s) {
            path.assign(1, s);
            on_path[s] = true;
            find_cycles(base, k, path, on_path, edges);
            on_path[s] = false;
        }
        break;
    }
    case CopyKind::clique: {
        if (k < 2)
            throw InputError("clique copies need k >= 2");
        uniformity = k * (k - 1) / 2;
        std::vector<Vertex> members;
        std::vector<Vertex> all(base.order());
        for (Vertex v = 0; v < base.order(); ++v)
            all[v] = v;
        find_cliques(base, k, members, all, edges);
        break;
    }
    case CopyKind::ap:
        throw InputError("AP copies live on an integer interval; use ap_system");
    }
    std::sort(edges.begin(), edges.end());
    return UniformHypergraph(uniformity, base.size(), std::move(edges));
}

UniformHypergraph ap_system(std::int64_t n, std::size_t k)
{
    if (k < 2)
        throw InputError("arithmetic progressions need k >= 2");
    if (n < 0)
        throw InputError("interval length must be non-negative");
    std::vector<Label> labels(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i)
        labels[i] = i + 1;

    EdgeList edges;
    const auto span = static_cast<std::int64_t>(k - 1);
    for (std::int64_t a = 1; a <= n; ++a)
        for (std::int64_t d = 1; a + span * d <= n; ++d) {
            std::vector<Vertex> e(k);
            for (std::size_t i = 0; i < k; ++i)
                e[i] = static_cast<Vertex>(a - 1 + static_cast<std::int64_t>(i) * d);
            edges.push_back(std::move(e));
        }
    std::sort(edges.begin(), edges.end());
    return UniformHypergraph(k, std::move(labels), std::move(edges));
}

UniformHypergraph ap_system(std::span<const std::int64_t> elements, std::size_t k)
{
    if (k < 2)
        throw InputError("arithmetic progressions need k >= 2");
    std::vector<Label> labels(elements.begin(), elements.end());
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    auto find = [&](std::int64_t x) -> std::optional<Vertex> {
        auto it = std::lower_bound(labels.begin(), labels.end(), x);
        if (it == labels.end() || *it != x)
            return std::nullopt;
        return static_cast<Vertex>(it - labels.begin());
    };

    EdgeList edges;
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j) {
            const std::int64_t d = labels[j] - labels[i];
            std::vector<Vertex> e{static_cast<Vertex>(i), static_cast<Vertex>(j)};
            for (std::size_t t = 2; t < k; ++t) {
                auto next = find(labels[i] + static_cast<std::int64_t>(t) * d);
                if (! next)
                    break;
                e.push_back(*next);
            }
            if (e.size() == k)
                edges.push_back(std::move(e));
        }
    std::sort(edges.begin(), edges.end());
    return UniformHypergraph(k, std::move(labels), std::move(edges));
}

std::uint64_t ap_count_formula(std::int64_t n, std::size_t k)
{
    if (k < 2)
        throw InputError("arithmetic progressions need k >= 2");
    if (n < static_cast<std::int64_t>(k))
        return 0;
    const auto step = static_cast<std::int64_t>(k - 1);
    std::uint64_t total = 0;
    for (std::int64_t i = 1; i <= n - step; ++i)
        total += static_cast<std::uint64_t>((n - i) / step);
    return total;
}

} // namespace ramgirth
