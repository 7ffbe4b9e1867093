#include <ramgirth/errors.hpp>
#include <ramgirth/girth.hpp>

#include <algorithm>
#include <optional>

namespace ramgirth {

namespace {

std::size_t intersection_size(std::span<const Vertex> a, std::span<const Vertex> b)
{
    std::size_t count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

std::optional<Vertex> single_common_vertex(std::span<const Vertex> a, std::span<const Vertex> b)
{
    std::optional<Vertex> found;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else {
            if (found)
                return std::nullopt;
            found = *i;
            ++i;
            ++j;
        }
    }
    return found;
}

// Edges sharing at least one vertex with e, ascending, e excluded.
std::vector<std::vector<std::uint32_t>> edge_neighbourhoods(const UniformHypergraph & hg)
{
    std::vector<std::vector<std::uint32_t>> out(hg.edge_count());
    for (std::uint32_t e = 0; e < hg.edge_count(); ++e) {
        auto & list = out[e];
        for (Vertex v : hg.edge(e))
            for (auto f : hg.incident_edges(v))
                if (f != e)
                    list.push_back(f);
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return out;
}

// Enumerates each connected edge set of a fixed size exactly once (the ESU
// scheme of Wernicke: grow from the smallest member, only through exclusive
// neighbours larger than it). Minimal violating sets are connected, so this
// suffices for the sparsity test.
class ConnectedSets
{
public:
    ConnectedSets(const UniformHypergraph & hg, std::size_t size)
        : hg_(hg), size_(size), nbrs_(edge_neighbourhoods(hg)), closed_count_(hg.edge_count(), 0),
          stamp_(hg.universe_size(), 0)
    {
    }

    std::optional<std::vector<std::uint32_t>> least_violating()
    {
        const std::size_t needed = (hg_.uniformity() - 1) * size_ + 1;
        needed_ = needed;
        for (std::uint32_t root = 0; root < hg_.edge_count(); ++root) {
            root_ = root;
            members_.assign(1, root);
            enter(root);
            std::vector<std::uint32_t> ext;
            for (auto u : nbrs_[root])
                if (u > root)
                    ext.push_back(u);
            extend(ext);
            leave(root);
        }
        return best_;
    }

private:
    void enter(std::uint32_t e)
    {
        ++closed_count_[e];
        for (auto u : nbrs_[e])
            ++closed_count_[u];
    }

    void leave(std::uint32_t e)
    {
        --closed_count_[e];
        for (auto u : nbrs_[e])
            --closed_count_[u];
    }

    void extend(std::vector<std::uint32_t> ext)
    {
        if (members_.size() == size_) {
            check();
            return;
        }
        while (! ext.empty()) {
            auto w = ext.back();
            ext.pop_back();
            std::vector<std::uint32_t> next = ext;
            for (auto u : nbrs_[w])
                if (u > root_ && closed_count_[u] == 0)
                    next.push_back(u);
            members_.push_back(w);
            enter(w);
            extend(std::move(next));
            leave(w);
            members_.pop_back();
        }
    }

    void check()
    {
        ++generation_;
        std::size_t span = 0;
        for (auto e : members_)
            for (Vertex v : hg_.edge(e))
                if (stamp_[v] != generation_) {
                    stamp_[v] = generation_;
                    ++span;
                }
        if (span >= needed_)
            return;
        std::vector<std::uint32_t> sorted = members_;
        std::sort(sorted.begin(), sorted.end());
        if (! best_ || sorted < *best_)
            best_ = std::move(sorted);
    }

    const UniformHypergraph & hg_;
    std::size_t size_;
    std::size_t needed_ = 0;
    std::vector<std::vector<std::uint32_t>> nbrs_;
    std::vector<std::uint32_t> closed_count_;
    std::vector<std::uint64_t> stamp_;
    std::uint64_t generation_ = 0;
    std::uint32_t root_ = 0;
    std::vector<std::uint32_t> members_;
    std::optional<std::vector<std::uint32_t>> best_;
};

class CycleSearch
{
public:
    CycleSearch(const UniformHypergraph & hg, std::size_t length, std::vector<HyperCycle> & out)
        : hg_(hg), length_(length), out_(out)
    {
    }

    void run()
    {
        for (std::uint32_t first = 0; first < hg_.edge_count(); ++first) {
            path_.assign(1, first);
            points_.clear();
            grow();
        }
    }

private:
    bool on_path(std::uint32_t f) const { return std::find(path_.begin(), path_.end(), f) != path_.end(); }

    bool point_used(Vertex x) const { return std::find(points_.begin(), points_.end(), x) != points_.end(); }

    void grow()
    {
        const std::uint32_t last = path_.back();
        const std::size_t position = path_.size();  // index the new edge takes
        const bool closing = position + 1 == length_;
        for (Vertex x : hg_.edge(last)) {
            if (point_used(x))
                continue;
            for (auto f : hg_.incident_edges(x)) {
                if (f <= path_.front() || on_path(f))
                    continue;
                auto fe = hg_.edge(f);
                if (intersection_size(fe, hg_.edge(last)) != 1)
                    continue;
                // f is nonconsecutive with path_[1..position-2], and with
                // path_[0] unless it closes the cycle
                bool clash = false;
                for (std::size_t i = closing ? 1 : 0; i + 1 < position && ! clash; ++i)
                    clash = intersection_size(fe, hg_.edge(path_[i])) != 0;
                if (clash)
                    continue;

                if (! closing) {
                    path_.push_back(f);
                    points_.push_back(x);
                    grow();
                    points_.pop_back();
                    path_.pop_back();
                    continue;
                }

                if (path_[1] > f)
                    continue;  // reflection of a sequence counted elsewhere
                auto y = single_common_vertex(fe, hg_.edge(path_.front()));
                if (! y || *y == x || point_used(*y))
                    continue;
                HyperCycle cycle;
                cycle.length = length_;
                cycle.edges = path_;
                cycle.edges.push_back(f);
                out_.push_back(std::move(cycle));
            }
        }
    }

    const UniformHypergraph & hg_;
    std::size_t length_;
    std::vector<HyperCycle> & out_;
    std::vector<std::uint32_t> path_;
    std::vector<Vertex> points_;
};

} // namespace

std::size_t edge_span(const UniformHypergraph & hg, std::span<const std::uint32_t> edges)
{
    std::vector<Vertex> vs;
    for (auto e : edges)
        for (Vertex v : hg.edge(e))
            vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    return static_cast<std::size_t>(std::unique(vs.begin(), vs.end()) - vs.begin());
}

GirthVerdict sparsity_girth(const UniformHypergraph & hg, std::size_t g)
{
    if (g < 2)
        throw InputError("girth threshold must be at least 2");
    if (hg.uniformity() < 2)
        throw InputError("sparsity girth needs uniformity at least 2");

    GirthVerdict verdict;
    for (std::size_t size = 2; size < g && size <= hg.edge_count(); ++size) {
        ConnectedSets sets(hg, size);
        if (auto found = sets.least_violating()) {
            verdict.satisfied = false;
            verdict.witness = std::move(*found);
            verdict.witness_span = edge_span(hg, verdict.witness);
            return verdict;
        }
    }
    return verdict;
}

CycleReport enumerate_short_cycles(const UniformHypergraph & hg, std::size_t g)
{
    CycleReport report;
    if (g <= 2)
        return report;

    report.counts[2] = 0;
    std::vector<std::uint32_t> shared(hg.edge_count(), 0);
    std::vector<std::uint32_t> touched;
    for (std::uint32_t e = 0; e < hg.edge_count(); ++e) {
        touched.clear();
        for (Vertex v : hg.edge(e))
            for (auto f : hg.incident_edges(v))
                if (f > e) {
                    if (shared[f]++ == 0)
                        touched.push_back(f);
                }
        std::sort(touched.begin(), touched.end());
        for (auto f : touched) {
            if (shared[f] >= 2) {
                report.cycles.push_back(HyperCycle{2, {e, f}});
                ++report.counts[2];
            }
            shared[f] = 0;
        }
    }

    for (std::size_t j = 3; j < g; ++j) {
        const std::size_t before = report.cycles.size();
        CycleSearch(hg, j, report.cycles).run();
        report.counts[j] = report.cycles.size() - before;
    }
    return report;
}

} // namespace ramgirth
