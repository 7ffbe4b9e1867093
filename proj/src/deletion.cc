#include <ramgirth/deletion.hpp>

#include <algorithm>
#include <stdexcept>

namespace ramgirth {

DeletionResult delete_short_cycles(const UniformHypergraph & h, std::size_t g, std::uint64_t cap)
{
    DeletionResult out;
    CycleReport report = enumerate_short_cycles(h, g);
    out.counts = report.counts;

    // vertex sets of the cycles, and the cycles through each vertex
    const std::size_t n = h.universe_size();
    std::vector<std::vector<Vertex>> support(report.cycles.size());
    std::vector<std::vector<std::uint32_t>> through(n);
    for (std::uint32_t c = 0; c < report.cycles.size(); ++c) {
        auto & vs = support[c];
        for (auto e : report.cycles[c].edges)
            for (Vertex v : h.edge(e))
                vs.push_back(v);
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        for (Vertex v : vs)
            through[v].push_back(c);
    }

    std::vector<std::uint64_t> load(n, 0);
    for (Vertex v = 0; v < n; ++v)
        load[v] = through[v].size();
    std::vector<char> alive(report.cycles.size(), 1);
    std::size_t remaining = report.cycles.size();

    while (remaining > 0) {
        Vertex best = 0;
        for (Vertex v = 1; v < n; ++v)
            if (load[v] > load[best])
                best = v;
        if (out.removed.size() + 1 > cap) {
            out.cap_exceeded = true;
            return out;
        }
        out.removed.push_back(best);
        for (auto c : through[best]) {
            if (! alive[c])
                continue;
            alive[c] = 0;
            --remaining;
            for (Vertex v : support[c])
                --load[v];
        }
    }

    out.survivor = h.without_vertices(out.removed);
    if (h.uniformity() >= 2 && ! sparsity_girth(out.survivor, std::max<std::size_t>(g, 2)).satisfied)
        throw std::logic_error("survivor of the cycle deletion still violates the girth bound");
    return out;
}

} // namespace ramgirth
