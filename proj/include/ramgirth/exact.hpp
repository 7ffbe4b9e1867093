#pragma once

#include <ramgirth/colouring.hpp>
#include <ramgirth/graph.hpp>
#include <ramgirth/lognum.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ramgirth {

/// K_n -> (F)_r for F = K_k or C_k. Requires n >= k.
ArrowResult ramsey_decide(CopyKind kind, std::size_t k, std::size_t r, std::size_t n, const SearchBudget & budget = {});

/// [N] -> (AP_k)_r.
ArrowResult vdw_decide(std::int64_t n, std::size_t k, std::size_t r, const SearchBudget & budget = {});

struct SweepResult
{
    /// The least arrowing size, if reached within budget.
    std::optional<std::size_t> value;
    /// Every size below this one was refuted with a witness, so the number
    /// is at least lower_bound.
    std::size_t lower_bound = 0;
    /// Refuting colourings, keyed by size, ascending.
    std::vector<std::pair<std::size_t, Colouring>> witnesses;
    std::uint64_t nodes = 0;
};

/// Smallest n >= k with K_n -> (F)_r, ascending from n = k. The budget is
/// shared by the whole sweep.
SweepResult ramsey_number(CopyKind kind, std::size_t k, std::size_t r, const SearchBudget & budget = {});

/// Smallest N with [N] -> (AP_k)_r, ascending from N = k.
SweepResult vdw_number(std::size_t k, std::size_t r, const SearchBudget & budget = {});

enum class FactBranch
{
    first,          // many monochromatic AP_k in colours 1..r
    second,         // the last colour class is large
    both,
    violation,      // neither, although the counting argument applies
    not_certified   // neither, and n is too small for the counting argument
};

std::string_view to_string(FactBranch b);

struct FactVdwReport
{
    FactBranch branch = FactBranch::violation;
    std::uint64_t mono_count = 0;   // AP_k inside one of the colours 1..r
    std::uint64_t ap_count = 0;     // AP_k in [n]
    std::uint64_t last_class = 0;   // |colour r + 1|
    std::uint64_t ap_w_count = 0;   // AP_W in [n]
    bool first_holds = false;       // mono_count > ap_count / W^3
    bool second_holds = false;      // last_class > n / (4W)
    bool certified = false;         // ap_w_count >= n^2 / (2W)
    std::optional<ArrowVerdict> w_check;
};

/// Evaluates the dichotomy for an (r+1)-colouring of [n] (index i holds the
/// colour of i + 1). With verify_w the premise [W] -> (AP_k)_r is decided
/// first; InputError if it fails.
FactVdwReport fact_vdw_check(const Colouring & c, std::size_t k, std::size_t r, std::uint64_t w,
                             bool verify_w = false, const SearchBudget & budget = {});

struct ExtremalResult
{
    bool exact = false;   // false: budget ran out, edges is a lower bound
    std::uint64_t edges = 0;
    Graph witness;
    std::uint64_t nodes = 0;
};

/// ex(n; C_3, ..., C_m): most edges in an n-vertex graph with girth > m.
///
/// Branch and bound over the pairs in lexicographic order. Degree classes
/// are fixed up front: vertex 0 has the maximum degree D and is adjacent to
/// exactly 1..D; D runs downwards and stops once n D / 2 cannot beat the
/// best graph found.
ExtremalResult extremal_ex(std::size_t n, std::size_t m, const SearchBudget & budget = {});

/// ex_low > r * ex_high, the premise giving f_r(2k) <= n.
bool fact7_premise(std::uint64_t ex_low, std::uint64_t ex_high, std::uint64_t r);

enum class Parity
{
    even,
    odd
};

/// even: 2 sum_{i=0}^{k-1} (r-1)^i, the fewest vertices of a graph with
/// girth 2k and minimum degree r. odd: 1 + 2^r sum_{i=1}^{k-1} (2^r-1)^i.
BigInt moore_lower_bound(Parity parity, unsigned r, unsigned k);

struct FBoundsReport
{
    unsigned k = 0;
    unsigned r = 0;
    Parity parity = Parity::even;
    BigInt lower;
    std::string lower_rule;
    /// R(C_k; r) used for the upper bound: supplied, searched, or for odd k
    /// the bound (r+2)! k.
    std::optional<std::uint64_t> ramsey;
    std::string ramsey_source;
    /// For odd k = 2l+1 the known 2^r l <= R(C_k; r).
    std::optional<BigInt> ramsey_lower;
    std::optional<LogNum> upper;  // k^{15k^3} R^{10k^2}
    /// f_r(k) = O(r^e) for k in {6, 8, 12}; asymptotic, no constant.
    std::optional<unsigned> special_exponent;
    bool consistent = true;  // lower <= upper when both are present
};

/// Bounds on f_r(k), the fewest vertices of a girth-k graph arrowing C_k.
/// Requires k >= 3.
FBoundsReport f_bound_report(unsigned k, unsigned r, std::optional<std::uint64_t> ramsey = std::nullopt,
                             std::string ramsey_source = "given");

} // namespace ramgirth
