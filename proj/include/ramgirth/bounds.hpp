#pragma once

#include <ramgirth/degree.hpp>
#include <ramgirth/lognum.hpp>
#include <ramgirth/params.hpp>

#include <functional>
#include <optional>
#include <vector>

namespace ramgirth {

/// Degree data fed to the container condition: d[j] for j = 1..h (d[0]
/// unused). Either measured from a hypergraph or the analytic bounds used
/// for the systems of copies at size n.
struct DegreeProfile
{
    std::size_t uniformity = 0;
    std::vector<LogNum> d;

    const LogNum & operator[](std::size_t j) const { return d.at(j); }
};

DegreeProfile profile_from_stats(const DegreeStats & stats, mpfr_prec_t prec = default_precision);

/// d_1 as a lower bound and d_j (j >= 2) as upper bounds for the system of
/// copies behind `theorem`, on a ground set of size n:
///   cycles   d_1 >= (k!/k^k) n^{k-2}, d_j <= n^{k-j-1}, d_k = 1
///   ap       d_1 >= n/2,              d_j <= C(k,2)
///   cliques  d_1 >= n^{k-2}/k^k,      d_j <= n^{k-k_j}, k_j least with j <= C(k_j,2)
DegreeProfile analytic_profile(Theorem theorem, unsigned k, const LogNum & n);

struct ContainerVerdict
{
    bool satisfied = false;
    LogNum lhs;
    LogNum margin;  // epsilon / lhs
    mpfr_prec_t precision = default_precision;
};

/// Evaluates
///   lhs = 6 h! 2^{C(h,2)} / d_1 * sum_{j=2}^{h} d_j / (2^{C(j-1,2)} tau^{j-1})
/// and compares with epsilon. Requires tau, epsilon in (0, 1/2) and d_1 > 0.
ContainerVerdict container_condition(const DegreeProfile & profile, const LogNum & tau, const LogNum & epsilon);

/// Re-runs `at` with doubled precision until two consecutive verdicts agree
/// (96 bits first, at most 4096).
ContainerVerdict stable_verdict(const std::function<ContainerVerdict(mpfr_prec_t)> & at);

/// Measured degrees of a hypergraph against exact tau and epsilon.
ContainerVerdict container_condition(const DegreeStats & stats, const Rational & tau, const Rational & epsilon);

/// Analytic mode: the chain of derive_params with epsilon multiplied by
/// `epsilon_scale` in the comparison.
ContainerVerdict analytic_container_condition(Theorem theorem, unsigned k, unsigned r, unsigned g,
                                              unsigned long ramsey, const Rational & epsilon_scale = Rational(1));

enum class CycleHost
{
    graph,
    ap,
    clique
};

std::string_view to_string(CycleHost h);
CycleHost parse_cycle_host(std::string_view text);

struct ExpectedCount
{
    std::size_t j = 0;
    LogNum value;
    bool upper_bound = false;     // false: exact expectation
    std::optional<Rational> exact;  // when computable as a rational
};

/// E[X_j] in G(n,p) for j = 3..k-1 (graph; exact), or the first-moment
/// upper bounds for j = 2..g-1 on the AP system of [n]_p and the K_k system
/// of G(n,p):
///   ap      X_2 <= C(n,2) C(k,2)^2 p^{k+1},  X_j <= n^j k^{2j} p^{(k-1)j}
///   clique  X_2 <= sum_{i=3}^{k-1} n^{2k-i} p^{2C(k,2)-C(i,2)},  X_j <= n^{kj-2j} p^{C(k,2)j-j}
std::vector<ExpectedCount> expected_short_cycle_counts(CycleHost host, std::uint64_t n, const Rational & p,
                                                       unsigned k, unsigned g);
std::vector<ExpectedCount> expected_short_cycle_counts(CycleHost host, const LogNum & n, const LogNum & p,
                                                       unsigned k, unsigned g);

struct FkgBound
{
    /// prod_{j=3}^{k-1} (1 - p^j)^{(j-1)!/2 C(n,j)}
    LogNum product;
    /// exp(-E[X_{k-1}] / (1 - p^3)), never larger than `product`
    LogNum closed_form;
};

/// Lower bounds on P(girth(G(n,p)) >= k). p = 0 gives 1 and p = 1 gives 0.
FkgBound fkg_girth_bound(std::uint64_t n, const Rational & p, unsigned k, mpfr_prec_t prec = default_precision);

/// (M + 1) (e N 2^{rs} p / M)^M with M = r s tauK N: the bound on the
/// weighted count of container fingerprints. Throws InputError unless
/// M <= 2^{rs} p N, where the summands are increasing in m.
LogNum union_bound_sum(const LogNum & N, unsigned r, const BigInt & s, const LogNum & tau_k, const LogNum & p);

/// exp(-mu/8), the lower-tail bound for falling to t <= mu/2. Throws
/// InputError when t > mu/2.
LogNum chernoff_tail(const LogNum & mu, const LogNum & t);

/// log2(1 - x) for x in [0, 1).
BigFloat log2_one_minus(const BigFloat & x);

} // namespace ramgirth
