#include <ramgirth/bounds.hpp>
#include <ramgirth/errors.hpp>

namespace ramgirth {

namespace {

LogNum num(long v, mpfr_prec_t prec) { return LogNum::from_int(v, prec); }

// The plain value of x as a BigFloat; only sensible when log2|x| is far
// inside the MPFR exponent range, which holds for every chain here.
BigFloat value_of(const LogNum & x)
{
    if (x.is_zero())
        return BigFloat(x.precision());
    BigFloat v = exp2(x.log2());
    return x.sign() < 0 ? -v : v;
}

LogNum falling_choose(const LogNum & n, unsigned j)
{
    LogNum out = num(1L, n.precision());
    for (unsigned i = 0; i < j; ++i)
        out *= n - num(static_cast<long>(i), n.precision());
    return out / LogNum::from_int(factorial(j), n.precision());
}

Rational rpow(const Rational & p, unsigned long e)
{
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), p.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), p.get_den_mpz_t(), e);
    out.canonicalize();
    return out;
}

BigInt ipow(std::uint64_t b, unsigned long e)
{
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), big(b).get_mpz_t(), e);
    return out;
}

unsigned long c2(unsigned long x) { return x * (x - 1) / 2; }

} // namespace

BigFloat log2_one_minus(const BigFloat & x) { return log1p(-x) * log2_e(x.precision()); }

DegreeProfile profile_from_stats(const DegreeStats & stats, mpfr_prec_t prec)
{
    if (stats.computed_up_to() < stats.uniformity)
        throw InputError("degree statistics were truncated; the container condition needs every j");
    DegreeProfile out;
    out.uniformity = stats.uniformity;
    out.d.assign(stats.uniformity + 1, LogNum(prec));
    for (std::size_t j = 1; j <= stats.uniformity; ++j)
        out.d[j] = LogNum::from_rational(stats.avg_d(j), prec);
    return out;
}

DegreeProfile analytic_profile(Theorem theorem, unsigned k, const LogNum & n)
{
    const auto prec = n.precision();
    DegreeProfile out;
    switch (theorem) {
    case Theorem::cycles:
        out.uniformity = k;
        out.d.assign(k + 1, LogNum(prec));
        out.d[1] = LogNum::from_rational(Rational(factorial(k), ipow(k, k)), prec) * n.pow(static_cast<long>(k - 2));
        for (unsigned j = 2; j < k; ++j)
            out.d[j] = n.pow(static_cast<long>(k - j - 1));
        out.d[k] = num(1L, prec);
        break;
    case Theorem::ap:
        out.uniformity = k;
        out.d.assign(k + 1, LogNum(prec));
        out.d[1] = n / num(2L, prec);
        for (unsigned j = 2; j <= k; ++j)
            out.d[j] = num(static_cast<long>(c2(k)), prec);
        break;
    case Theorem::cliques: {
        const unsigned h = static_cast<unsigned>(c2(k));
        out.uniformity = h;
        out.d.assign(h + 1, LogNum(prec));
        out.d[1] = n.pow(static_cast<long>(k - 2)) / LogNum::from_int(ipow(k, k), prec);
        unsigned kj = 2;
        for (unsigned j = 2; j <= h; ++j) {
            while (c2(kj) < j)
                ++kj;
            out.d[j] = n.pow(static_cast<long>(k - kj));
        }
        break;
    }
    }
    return out;
}

ContainerVerdict container_condition(const DegreeProfile & profile, const LogNum & tau, const LogNum & epsilon)
{
    const auto prec = std::max({tau.precision(), epsilon.precision(), profile.d.at(1).precision()});
    const LogNum half = LogNum::from_rational(Rational(1, 2), prec);
    if (tau.sign() <= 0 || tau >= half)
        throw InputError("tau must lie in (0, 1/2)");
    if (epsilon.sign() <= 0 || epsilon >= half)
        throw InputError("epsilon must lie in (0, 1/2)");
    const std::size_t h = profile.uniformity;
    if (profile[1].sign() <= 0)
        throw InputError("d_1 = 0: the hypergraph has no edges");

    LogNum sum(prec);
    for (std::size_t j = 2; j <= h; ++j) {
        LogNum term = profile[j] / (LogNum::from_log2(BigFloat(static_cast<long>(c2(j - 1)), prec)) *
                                    tau.pow(static_cast<long>(j - 1)));
        sum += term;
    }
    LogNum front = LogNum::from_int(6 * factorial(h), prec) * LogNum::from_log2(BigFloat(static_cast<long>(c2(h)), prec));

    ContainerVerdict v;
    v.precision = prec;
    v.lhs = front / profile[1] * sum;
    v.satisfied = v.lhs <= epsilon;
    v.margin = v.lhs.is_zero() ? LogNum::from_log2(BigFloat::infinity(1, prec)) : epsilon / v.lhs;
    return v;
}

ContainerVerdict stable_verdict(const std::function<ContainerVerdict(mpfr_prec_t)> & at)
{
    ContainerVerdict prev = at(default_precision);
    for (mpfr_prec_t prec = 2 * default_precision; prec <= 4096; prec *= 2) {
        ContainerVerdict cur = at(prec);
        if (cur.satisfied == prev.satisfied)
            return cur;
        prev = std::move(cur);
    }
    return prev;
}

ContainerVerdict container_condition(const DegreeStats & stats, const Rational & tau, const Rational & epsilon)
{
    return stable_verdict([&](mpfr_prec_t prec) {
        return container_condition(profile_from_stats(stats, prec), LogNum::from_rational(tau, prec),
                                   LogNum::from_rational(epsilon, prec));
    });
}

ContainerVerdict analytic_container_condition(Theorem theorem, unsigned k, unsigned r, unsigned g,
                                              unsigned long ramsey, const Rational & epsilon_scale)
{
    return stable_verdict([&](mpfr_prec_t prec) {
        ParamSet ps = derive_params(theorem, k, r, g, ramsey, prec);
        return container_condition(analytic_profile(theorem, k, ps.n), ps.tau,
                                   LogNum::from_rational(ps.epsilon * epsilon_scale, prec));
    });
}

std::string_view to_string(CycleHost h)
{
    switch (h) {
    case CycleHost::graph: return "graph";
    case CycleHost::ap: return "ap";
    case CycleHost::clique: return "clique";
    }
    return "?";
}

CycleHost parse_cycle_host(std::string_view text)
{
    if (text == "graph")
        return CycleHost::graph;
    if (text == "ap")
        return CycleHost::ap;
    if (text == "clique")
        return CycleHost::clique;
    throw InputError("unknown kind '" + std::string(text) + "' (expected graph, ap or clique)");
}

std::vector<ExpectedCount> expected_short_cycle_counts(CycleHost host, std::uint64_t n, const Rational & p,
                                                       unsigned k, unsigned g)
{
    if (p < 0 || p > 1)
        throw InputError("p must lie in [0, 1]");
    std::vector<ExpectedCount> out;
    auto push = [&](std::size_t j, Rational v, bool upper) {
        v.canonicalize();
        out.push_back(ExpectedCount{j, LogNum::from_rational(v), upper, v});
    };
    const Rational nn{big(n)};
    switch (host) {
    case CycleHost::graph:
        for (unsigned j = 3; j < k; ++j)
            push(j, Rational(factorial(j - 1) * binomial(n, j), 2) * rpow(p, j), false);
        break;
    case CycleHost::ap:
        if (g > 2)
            push(2, Rational(binomial(n, 2) * ipow(c2(k), 2)) * rpow(p, k + 1), true);
        for (unsigned j = 3; j < g; ++j)
            push(j, Rational(ipow(n, j) * ipow(k, 2 * j)) * rpow(p, static_cast<unsigned long>(k - 1) * j), true);
        break;
    case CycleHost::clique:
        if (g > 2) {
            Rational sum = 0;
            for (unsigned i = 3; i < k; ++i)
                sum += Rational(ipow(n, 2 * k - i)) * rpow(p, 2 * c2(k) - c2(i));
            push(2, sum, true);
        }
        for (unsigned j = 3; j < g; ++j)
            push(j, Rational(ipow(n, static_cast<unsigned long>(k - 2) * j)) * rpow(p, (c2(k) - 1) * j), true);
        break;
    }
    return out;
}

std::vector<ExpectedCount> expected_short_cycle_counts(CycleHost host, const LogNum & n, const LogNum & p,
                                                       unsigned k, unsigned g)
{
    const auto prec = std::max(n.precision(), p.precision());
    if (p.sign() < 0 || p > num(1L, prec))
        throw InputError("p must lie in [0, 1]");
    std::vector<ExpectedCount> out;
    auto push = [&](std::size_t j, LogNum v, bool upper) { out.push_back(ExpectedCount{j, std::move(v), upper, {}}); };
    const LogNum lk = num(static_cast<long>(k), prec);
    switch (host) {
    case CycleHost::graph:
        for (unsigned j = 3; j < k; ++j)
            push(j,
                 LogNum::from_rational(Rational(factorial(j - 1), 2), prec) * falling_choose(n, j) *
                     p.pow(static_cast<long>(j)),
                 false);
        break;
    case CycleHost::ap:
        if (g > 2)
            push(2, choose2(n) * num(static_cast<long>(c2(k) * c2(k)), prec) * p.pow(static_cast<long>(k + 1)), true);
        for (unsigned j = 3; j < g; ++j)
            push(j, n.pow(static_cast<long>(j)) * lk.pow(2L * j) * p.pow(static_cast<long>((k - 1) * j)), true);
        break;
    case CycleHost::clique:
        if (g > 2) {
            LogNum sum(prec);
            for (unsigned i = 3; i < k; ++i)
                sum += n.pow(static_cast<long>(2 * k - i)) * p.pow(static_cast<long>(2 * c2(k) - c2(i)));
            push(2, sum, true);
        }
        for (unsigned j = 3; j < g; ++j)
            push(j, n.pow(static_cast<long>((k - 2) * j)) * p.pow(static_cast<long>((c2(k) - 1) * j)), true);
        break;
    }
    return out;
}

FkgBound fkg_girth_bound(std::uint64_t n, const Rational & p, unsigned k, mpfr_prec_t prec)
{
    if (p < 0 || p > 1)
        throw InputError("p must lie in [0, 1]");
    const LogNum one = num(1L, prec);
    bool empty_product = k < 4 || n < 3;
    if (p == 0 || empty_product)
        return FkgBound{one, one};
    if (p == 1)
        return FkgBound{LogNum(prec), LogNum(prec)};

    BigFloat log_product(prec);
    Rational expectation = 0;
    for (unsigned j = 3; j < k; ++j) {
        BigInt copies = factorial(j - 1) * binomial(n, j) / 2;
        Rational pj = rpow(p, j);
        expectation += Rational(copies) * pj;
        log_product += BigFloat(copies, prec) * log2_one_minus(BigFloat(pj, prec + 64));
    }
    Rational exponent = -expectation / (1 - rpow(p, 3));
    return FkgBound{LogNum::from_log2(log_product), LogNum::exp(BigFloat(exponent, prec))};
}

LogNum union_bound_sum(const LogNum & N, unsigned r, const BigInt & s, const LogNum & tau_k, const LogNum & p)
{
    const auto prec = std::max({N.precision(), tau_k.precision(), p.precision()});
    const BigInt rs = big(r) * s;
    const LogNum two_rs = LogNum::from_log2(BigFloat(rs, prec));
    const LogNum M = LogNum::from_int(rs, prec) * tau_k * N;
    const LogNum peak = two_rs * p * N;
    if (M > peak)
        throw InputError("r s tauK N exceeds 2^(rs) p N; the summands are not increasing up to the last one");
    if (M.is_zero())
        return num(1L, prec);
    const LogNum e = LogNum::exp(BigFloat(1L, prec));
    const LogNum base = e * peak / M;
    return (M + num(1L, prec)) * base.pow(value_of(M));
}

LogNum chernoff_tail(const LogNum & mu, const LogNum & t)
{
    if (mu.sign() < 0 || t.sign() < 0)
        throw InputError("mu and t must be non-negative");
    // t = mu/2 computed along a different path may differ in the last bits
    const LogNum slack = LogNum::from_log2(BigFloat(-static_cast<long>(mu.precision()) + 16, mu.precision()));
    if (t > mu / num(2L, mu.precision()) * (num(1L, mu.precision()) + slack))
        throw InputError("t exceeds mu/2");
    if (mu.is_zero())
        return num(1L, mu.precision());
    return LogNum::exp(-value_of(mu) / BigFloat(8L, mu.precision()));
}

} // namespace ramgirth
