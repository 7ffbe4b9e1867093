#pragma once

#include <ramgirth/copies.hpp>
#include <ramgirth/graph.hpp>
#include <ramgirth/hypergraph.hpp>

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace ramgirth {

/// Total map from universe indices to colours 1..colours.
struct Colouring
{
    std::size_t colours = 0;
    std::vector<std::uint32_t> of;

    friend bool operator==(const Colouring &, const Colouring &) = default;
};

/// True iff no hyperedge is monochromatic. Throws InputError if the colouring
/// does not cover the universe or uses a colour outside 1..colours.
bool verify_colouring(const UniformHypergraph & h, const Colouring & c);

/// Limits for exhaustive searches; an unset field means no limit.
struct SearchBudget
{
    std::optional<std::uint64_t> nodes;
    std::optional<double> seconds;
};

enum class SearchStatus
{
    proper,
    uncolourable,
    budget_exceeded
};

std::string_view to_string(SearchStatus s);

struct SearchResult
{
    SearchStatus status = SearchStatus::budget_exceeded;
    std::optional<Colouring> witness;  // set iff status == proper
    std::uint64_t nodes = 0;
};

/// Backtracking search for a proper r-colouring.
///
/// Branches on the uncoloured vertex with fewest admissible colours, with
/// forward checking on edges that have one vertex left. Colours are tried in
/// canonical order: a vertex may only open the next unused colour, which
/// removes colour permutations and nothing else. `uncolourable` is returned
/// only after the tree is exhausted.
SearchResult colouring_search(const UniformHypergraph & h, std::size_t r, const SearchBudget & budget = {});

enum class ArrowVerdict
{
    arrows,
    not_arrows,
    budget_exceeded
};

std::string_view to_string(ArrowVerdict v);

struct ArrowResult
{
    ArrowVerdict verdict = ArrowVerdict::budget_exceeded;
    std::optional<Colouring> witness;  // colouring of the base universe
    std::uint64_t nodes = 0;
    std::size_t copies = 0;
};

/// base -> (F)_r where F is C_k or K_k, decided on the system of copies.
ArrowResult arrows(const Graph & base, CopyKind kind, std::size_t k, std::size_t r, const SearchBudget & budget = {});

/// [N] -> (AP_k)_r.
ArrowResult arrows_ap(std::int64_t n, std::size_t k, std::size_t r, const SearchBudget & budget = {});

} // namespace ramgirth
