#include <ramgirth/colouring.hpp>
#include <ramgirth/errors.hpp>

#include <algorithm>
#include <chrono>

namespace ramgirth {

std::string_view to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::proper: return "proper";
    case SearchStatus::uncolourable: return "uncolourable";
    case SearchStatus::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

std::string_view to_string(ArrowVerdict v)
{
    switch (v) {
    case ArrowVerdict::arrows: return "arrows";
    case ArrowVerdict::not_arrows: return "not_arrows";
    case ArrowVerdict::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

bool verify_colouring(const UniformHypergraph & h, const Colouring & c)
{
    if (c.of.size() != h.universe_size())
        throw InputError("colouring covers " + std::to_string(c.of.size()) + " of " +
                         std::to_string(h.universe_size()) + " vertices");
    for (auto colour : c.of)
        if (colour < 1 || colour > c.colours)
            throw InputError("colour " + std::to_string(colour) + " outside 1.." + std::to_string(c.colours));
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        auto edge = h.edge(e);
        auto first = c.of[edge[0]];
        if (std::all_of(edge.begin(), edge.end(), [&](Vertex v) { return c.of[v] == first; }))
            return false;
    }
    return true;
}

namespace {

struct BudgetExhausted
{
};

class Search
{
public:
    Search(const UniformHypergraph & h, std::size_t r, const SearchBudget & budget)
        : h_(h), r_(r), budget_(budget), colour_(h.universe_size(), 0), forbid_(h.universe_size() * (r + 1), 0),
          filled_(h.edge_count(), 0), first_(h.edge_count(), 0), mixed_(h.edge_count(), 0),
          start_(std::chrono::steady_clock::now())
    {
        for (Vertex v = 0; v < h.universe_size(); ++v)
            if (! h.incident_edges(v).empty())
                pending_.push_back(v);
    }

    SearchResult run()
    {
        SearchResult out;
        try {
            if (descend()) {
                Colouring c{r_, colour_};
                for (auto & x : c.of)
                    if (x == 0)
                        x = 1;
                out.status = SearchStatus::proper;
                out.witness = std::move(c);
            }
            else
                out.status = SearchStatus::uncolourable;
        }
        catch (const BudgetExhausted &) {
            out.status = SearchStatus::budget_exceeded;
        }
        out.nodes = nodes_;
        return out;
    }

private:
    std::uint32_t & forbid(Vertex v, std::uint32_t c) { return forbid_[v * (r_ + 1) + c]; }

    void tick()
    {
        ++nodes_;
        if (budget_.nodes && nodes_ > *budget_.nodes)
            throw BudgetExhausted{};
        if (budget_.seconds && (nodes_ & 1023) == 0) {
            std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
            if (elapsed.count() > *budget_.seconds)
                throw BudgetExhausted{};
        }
    }

    std::size_t domain_size(Vertex v)
    {
        std::size_t n = 0;
        for (std::uint32_t c = 1; c <= r_; ++c)
            n += forbid(v, c) == 0;
        return n;
    }

    std::size_t active_edges(Vertex v) const
    {
        std::size_t n = 0;
        for (auto e : h_.incident_edges(v))
            n += ! mixed_[e];
        return n;
    }

    struct Change
    {
        std::uint32_t edge;
        std::uint32_t first;
        std::uint8_t mixed;
        Vertex forbidden = ~Vertex{0};
    };

    // Colours v and propagates; returns false (with trail filled for undo)
    // when some vertex is left without colours.
    bool assign(Vertex v, std::uint32_t c, std::vector<Change> & trail)
    {
        colour_[v] = c;
        bool ok = true;
        const auto hsize = h_.uniformity();
        for (auto e : h_.incident_edges(v)) {
            Change ch{e, first_[e], mixed_[e]};
            ++filled_[e];
            if (filled_[e] == 1)
                first_[e] = c;
            else if (first_[e] != c)
                mixed_[e] = 1;
            if (! mixed_[e] && filled_[e] + 1 == hsize) {
                for (Vertex w : h_.edge(e))
                    if (colour_[w] == 0) {
                        ch.forbidden = w;
                        if (forbid(w, first_[e])++ == 0 && domain_size(w) == 0)
                            ok = false;
                        break;
                    }
            }
            trail.push_back(ch);
        }
        return ok;
    }

    void undo(Vertex v, std::vector<Change> & trail)
    {
        for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
            if (it->forbidden != ~Vertex{0})
                --forbid(it->forbidden, first_[it->edge]);
            --filled_[it->edge];
            first_[it->edge] = it->first;
            mixed_[it->edge] = it->mixed;
        }
        trail.clear();
        colour_[v] = 0;
    }

    bool descend()
    {
        tick();
        Vertex best = 0;
        std::size_t best_domain = r_ + 1;
        std::size_t best_active = 0;
        bool found = false;
        for (Vertex v : pending_) {
            if (colour_[v] != 0)
                continue;
            auto d = domain_size(v);
            auto a = active_edges(v);
            if (! found || d < best_domain || (d == best_domain && a > best_active)) {
                best = v;
                best_domain = d;
                best_active = a;
                found = true;
            }
        }
        if (! found)
            return true;
        if (best_domain == 0)
            return false;

        const std::uint32_t limit = static_cast<std::uint32_t>(std::min<std::size_t>(r_, used_ + 1));
        std::vector<Change> trail;
        for (std::uint32_t c = 1; c <= limit; ++c) {
            if (forbid(best, c) != 0)
                continue;
            const auto saved_used = used_;
            used_ = std::max<std::size_t>(used_, c);
            if (assign(best, c, trail) && descend())
                return true;
            undo(best, trail);
            used_ = saved_used;
        }
        return false;
    }

    const UniformHypergraph & h_;
    std::size_t r_;
    SearchBudget budget_;
    std::vector<std::uint32_t> colour_;
    std::vector<std::uint32_t> forbid_;
    std::vector<std::uint32_t> filled_;
    std::vector<std::uint32_t> first_;
    std::vector<std::uint8_t> mixed_;
    std::vector<Vertex> pending_;
    std::size_t used_ = 0;
    std::uint64_t nodes_ = 0;
    std::chrono::steady_clock::time_point start_;
};

} // namespace

SearchResult colouring_search(const UniformHypergraph & h, std::size_t r, const SearchBudget & budget)
{
    if (r < 1)
        throw InputError("colour count must be at least 1");
    if (h.uniformity() == 1 && ! h.empty()) {
        // a single vertex edge is monochromatic under every colouring
        return SearchResult{SearchStatus::uncolourable, std::nullopt, 1};
    }
    return Search(h, r, budget).run();
}

namespace {

ArrowResult to_arrow(const SearchResult & s, std::size_t copies)
{
    ArrowResult out;
    out.nodes = s.nodes;
    out.copies = copies;
    switch (s.status) {
    case SearchStatus::proper:
        out.verdict = ArrowVerdict::not_arrows;
        out.witness = s.witness;
        break;
    case SearchStatus::uncolourable: out.verdict = ArrowVerdict::arrows; break;
    case SearchStatus::budget_exceeded: out.verdict = ArrowVerdict::budget_exceeded; break;
    }
    return out;
}

} // namespace

ArrowResult arrows(const Graph & base, CopyKind kind, std::size_t k, std::size_t r, const SearchBudget & budget)
{
    auto system = system_of_copies(kind, base, k);
    return to_arrow(colouring_search(system, r, budget), system.edge_count());
}

ArrowResult arrows_ap(std::int64_t n, std::size_t k, std::size_t r, const SearchBudget & budget)
{
    auto system = ap_system(n, k);
    return to_arrow(colouring_search(system, r, budget), system.edge_count());
}

} // namespace ramgirth
