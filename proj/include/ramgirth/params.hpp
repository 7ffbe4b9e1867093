#pragma once

#include <ramgirth/lognum.hpp>
#include <ramgirth/numeric.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ramgirth {

/// The three constructions: girth-k graphs arrowing C_k (cycles), sets with
/// a sparse AP_k system and chromatic number > r (ap), and graphs whose K_k
/// system has girth >= g and chromatic number > r (cliques).
enum class Theorem
{
    cycles,
    ap,
    cliques
};

std::string_view to_string(Theorem t);
Theorem parse_theorem(std::string_view text);

/// One inequality evaluated on a parameter set.
struct NamedCheck
{
    std::string name;
    bool holds = false;
    LogNum lhs;
    LogNum rhs;
};

/// The full constant chain of one construction.
///
/// epsilon, K and s are exact. Everything downstream of D_tau involves real
/// powers and binary logarithms, so it is kept in log space.
struct ParamSet
{
    Theorem theorem = Theorem::cycles;
    unsigned k = 0;
    unsigned r = 0;
    unsigned g = 0;
    unsigned long ramsey = 0;  // R = R(F; r) or W = vdW(k; r)
    mpfr_prec_t precision = default_precision;

    std::size_t uniformity = 0;  // of the system of copies the container step runs on
    Rational epsilon;
    LogNum d_tau;
    BigInt K;
    BigInt s;
    LogNum d_p;
    LogNum n;
    LogNum tau;
    LogNum p;
    std::optional<LogNum> t;  // deletion budget; the cycles chain conditions instead
    LogNum size_bound;        // the headline bound n must stay below

    /// Inline estimates of the chain, n <= size_bound, and the closing
    /// probability inequalities.
    std::vector<NamedCheck> checks;

    bool all_checks_hold() const;
};

/// Throws InputError for k < 3 (k < 4 for cycles), r < 2, g < 2 or R < k.
ParamSet derive_params(Theorem theorem, unsigned k, unsigned r, unsigned g, unsigned long ramsey,
                       mpfr_prec_t prec = default_precision);

/// floor(K log2 x) for x > 0, certified by directed rounding.
BigInt floor_k_log2(const BigInt & K, const Rational & x);

/// C(x, 2) = x (x - 1) / 2 for a real x.
LogNum choose2(const LogNum & x);

} // namespace ramgirth
