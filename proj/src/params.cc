#include <ramgirth/bounds.hpp>
#include <ramgirth/errors.hpp>
#include <ramgirth/params.hpp>

#include <algorithm>

namespace ramgirth {

std::string_view to_string(Theorem t)
{
    switch (t) {
    case Theorem::cycles: return "cycles";
    case Theorem::ap: return "ap";
    case Theorem::cliques: return "cliques";
    }
    return "?";
}

Theorem parse_theorem(std::string_view text)
{
    if (text == "cycles")
        return Theorem::cycles;
    if (text == "ap")
        return Theorem::ap;
    if (text == "cliques")
        return Theorem::cliques;
    throw InputError("unknown theorem '" + std::string(text) + "' (expected cycles, ap or cliques)");
}

bool ParamSet::all_checks_hold() const
{
    return std::all_of(checks.begin(), checks.end(), [](const NamedCheck & c) { return c.holds; });
}

BigInt floor_k_log2(const BigInt & K, const Rational & x)
{
    if (x <= 0)
        throw InputError("log2 of a non-positive number");
    // log2 of a rational is rational only for exact powers of two
    Rational q = x;
    q.canonicalize();
    auto power_of_two = [](const BigInt & v) { return v > 0 && mpz_popcount(v.get_mpz_t()) == 1; };
    if (power_of_two(q.get_num()) && power_of_two(q.get_den())) {
        BigInt e = BigInt(static_cast<long>(mpz_sizeinbase(q.get_num().get_mpz_t(), 2))) -
                   BigInt(static_cast<long>(mpz_sizeinbase(q.get_den().get_mpz_t(), 2)));
        return K * e;
    }
    for (mpfr_prec_t prec = 128;; prec *= 2) {
        BigFloat lo(q, prec, MPFR_RNDD);
        BigFloat hi(q, prec, MPFR_RNDU);
        mpfr_log2(lo.get(), lo.get(), MPFR_RNDD);
        mpfr_log2(hi.get(), hi.get(), MPFR_RNDU);
        mpfr_mul_z(lo.get(), lo.get(), K.get_mpz_t(), K >= 0 ? MPFR_RNDD : MPFR_RNDU);
        mpfr_mul_z(hi.get(), hi.get(), K.get_mpz_t(), K >= 0 ? MPFR_RNDU : MPFR_RNDD);
        if (K < 0)
            std::swap(lo, hi);
        BigInt a = lo.floor();
        BigInt b = hi.floor();
        if (a == b)
            return a;
    }
}

LogNum choose2(const LogNum & x)
{
    LogNum one = LogNum::from_int(1L, x.precision());
    return x * (x - one) / LogNum::from_int(2L, x.precision());
}

namespace {

LogNum num(const BigInt & v, mpfr_prec_t prec) { return LogNum::from_int(v, prec); }
LogNum num(long v, mpfr_prec_t prec) { return LogNum::from_int(v, prec); }

// A positive real carried as a BigFloat, moved into log space.
LogNum real(const BigFloat & v) { return LogNum::from_log2(log2(abs(v)), v.sign()); }

LogNum log2_of(const BigInt & v, mpfr_prec_t prec) { return real(log2(BigFloat(v, prec))); }

NamedCheck less(std::string name, LogNum lhs, LogNum rhs)
{
    NamedCheck c{std::move(name), false, std::move(lhs), std::move(rhs)};
    c.holds = c.lhs < c.rhs;
    return c;
}

NamedCheck at_most(std::string name, LogNum lhs, LogNum rhs)
{
    NamedCheck c{std::move(name), false, std::move(lhs), std::move(rhs)};
    c.holds = c.lhs <= c.rhs;
    return c;
}

// exp(x) for a LogNum exponent.
LogNum exp_of(const LogNum & x)
{
    BigFloat v = x.sign() == 0 ? BigFloat(x.precision()) : exp2(x.log2());
    if (x.sign() < 0)
        v = -v;
    return LogNum::exp(v);
}

// union_bound_sum, or a failed check if the bound is not applicable
std::optional<LogNum> union_or_none(const LogNum & N, unsigned r, const BigInt & s, const LogNum & tau_k,
                                    const LogNum & p)
{
    try {
        return union_bound_sum(N, r, s, tau_k, p);
    }
    catch (const InputError &) {
        return std::nullopt;
    }
}

} // namespace

ParamSet derive_params(Theorem theorem, unsigned k, unsigned r, unsigned g, unsigned long ramsey, mpfr_prec_t prec)
{
    if (k < 3 || (theorem == Theorem::cycles && k < 4))
        throw InputError(theorem == Theorem::cycles ? "k must be at least 4" : "k must be at least 3");
    if (r < 2)
        throw InputError("r must be at least 2");
    if (g < 2)
        throw InputError("g must be at least 2");
    if (ramsey < k)
        throw InputError("R (or W) must be at least k");

    ParamSet ps;
    ps.theorem = theorem;
    ps.k = k;
    ps.r = r;
    ps.g = g;
    ps.ramsey = ramsey;
    ps.precision = prec;

    const BigInt K_ = big(k);
    const BigInt R_ = big(ramsey);
    const BigInt r_ = big(r);
    const LogNum one = num(1L, prec);
    const LogNum lk = num(K_, prec);
    const LogNum lR = num(R_, prec);
    const LogNum lr = num(r_, prec);

    BigInt kpow_k;
    mpz_pow_ui(kpow_k.get_mpz_t(), K_.get_mpz_t(), k);
    auto ipow = [](const BigInt & b, unsigned long e) {
        BigInt out;
        mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
        return out;
    };

    switch (theorem) {
    case Theorem::cycles: {
        ps.uniformity = k;
        ps.epsilon = Rational(1) / Rational(r_ * ipow(R_, k));
        const LogNum eps = LogNum::from_rational(ps.epsilon, prec);
        ps.d_tau = num(ipow(2, 2 * k), prec) / eps.pow(Rational(1, k - 1));
        const BigInt fk = factorial(k);
        ps.K = 800 * K_ * fk * fk * fk;
        ps.s = floor_k_log2(ps.K, 1 / ps.epsilon);
        const BigInt base = 10 * R_ * R_ * r_;
        ps.d_p = num(base * r_ * ps.s * ps.s * ps.K, prec) * ps.d_tau * log2_of(base, prec);
        ps.n = ps.d_p.pow(static_cast<long>(k * k));
        const Rational expo(-static_cast<long>(k - 2), static_cast<long>(k - 1));
        ps.tau = ps.d_tau * ps.n.pow(expo);
        ps.p = ps.d_p * ps.n.pow(expo);
        ps.size_bound = lk.pow(15L * k * k * k) * lR.pow(10L * k * k);

        ps.checks.push_back(less("K < 30 k^(3k)", num(ps.K, prec), num(30L, prec) * lk.pow(3L * k)));
        ps.checks.push_back(less("D_p < k^(15k) R^10", ps.d_p, lk.pow(15L * k) * lR.pow(10L)));
        ps.checks.push_back(at_most("n <= k^(15k^3) R^(10k^2)", ps.n, ps.size_bound));
        ps.checks.push_back(less("4 R^2 k D_p^(k-1) < p (n - 1)",
                                 num(4L, prec) * lR.pow(2L) * lk * ps.d_p.pow(static_cast<long>(k - 1)),
                                 ps.p * (ps.n - one)));
        const LogNum pairs = choose2(ps.n);
        const LogNum target = exp_of(ps.p * pairs / (num(2L, prec) * lR.pow(2L)));
        auto u = union_or_none(pairs, r, ps.s, ps.tau * num(ps.K, prec), ps.p);
        NamedCheck c{"fingerprint sum <= exp(p C(n,2) / (2 R^2))", false, u.value_or(LogNum(prec)), target};
        c.holds = u && *u <= target;
        ps.checks.push_back(std::move(c));
        break;
    }
    case Theorem::ap: {
        ps.uniformity = k;
        ps.epsilon = Rational(1) / Rational(r_ * ipow(R_, 3));
        const LogNum eps = LogNum::from_rational(ps.epsilon, prec);
        const BigInt fk = factorial(k);
        const BigInt inner = 6 * fk * ipow(2, k * (k - 1) / 2) * ipow(K_, 3);
        ps.d_tau = (num(inner, prec) / eps).pow(Rational(1, k - 1));
        ps.K = 800 * K_ * fk * fk * fk;
        ps.s = floor_k_log2(ps.K, 1 / ps.epsilon);
        const BigInt base = 128 * R_ * r_;
        ps.d_p = num(base * r_ * ps.s * ps.s * ps.K, prec) * ps.d_tau * log2_of(base, prec);
        ps.n = lk.pow(4L * g) * ps.d_p.pow(2L * k * (k + g));
        const Rational expo(-1, static_cast<long>(k - 1));
        ps.tau = ps.d_tau * ps.n.pow(expo);
        ps.p = ps.d_p * ps.n.pow(expo);
        ps.t = ps.p * ps.n / (num(8L, prec) * lR);
        ps.size_bound = lk.pow(40L * k * k * (k + g)) * lR.pow(12L * k * (k + g));

        ps.checks.push_back(less("K < 30 k^(3k)", num(ps.K, prec), num(30L, prec) * lk.pow(3L * k)));
        ps.checks.push_back(less("D_p < 2^40 k^(10k) r^3 W^3", ps.d_p,
                                 num(ipow(2, 40), prec) * lk.pow(10L * k) * lr.pow(3L) * lR.pow(3L)));
        ps.checks.push_back(at_most("n <= k^(40k^2(k+g)) W^(12k(k+g))", ps.n, ps.size_bound));
        const LogNum mu = ps.p * ps.n / (num(4L, prec) * lR);
        const LogNum tail = chernoff_tail(mu, *ps.t);
        auto u = union_or_none(ps.n, r, ps.s, ps.tau * num(ps.K, prec), ps.p);
        NamedCheck c{"exp(-pn/32W) * fingerprint sum < 1/2", false, u ? tail * *u : LogNum(prec),
                     LogNum::from_rational(Rational(1, 2), prec)};
        c.holds = u && c.lhs < c.rhs;
        ps.checks.push_back(std::move(c));
        break;
    }
    case Theorem::cliques: {
        const unsigned h = k * (k - 1) / 2;
        ps.uniformity = h;
        ps.epsilon = Rational(1) / Rational(2 * r_ * binomial(R_, k));
        const LogNum eps = LogNum::from_rational(ps.epsilon, prec);
        const BigInt fh = factorial(h);
        const BigInt inner = 6 * fh * ipow(2, static_cast<unsigned long>(h) * (h - 1) / 2) * big(h) * kpow_k;
        ps.d_tau = (num(inner, prec) / eps).pow(Rational(10, static_cast<long>(k * k)));
        ps.K = 800 * big(h) * fh * fh * fh;
        ps.s = floor_k_log2(ps.K, 1 / ps.epsilon);
        const BigInt base = 50 * R_ * R_ * r_;
        ps.d_p = num(base * r_ * ps.s * ps.s * ps.K, prec) * ps.d_tau * log2_of(base, prec);
        ps.n = ps.d_p.pow(static_cast<long>(k * k * (5 + g)));
        const Rational expo(-2, static_cast<long>(k + 1));
        ps.tau = ps.d_tau * ps.n.pow(expo);
        ps.p = ps.d_p * ps.n.pow(expo);
        const LogNum pairs = choose2(ps.n);
        ps.t = ps.p / (num(2L, prec) * lR.pow(2L)) * pairs;
        ps.size_bound = lk.pow(40L * g * k * k * k * k) * lR.pow(40L * g * k * k);

        ps.checks.push_back(less("epsilon < 1/2", eps, LogNum::from_rational(Rational(1, 2), prec)));
        ps.checks.push_back(less("D_tau < 2^(3k^2/2) k^20 R^(20/k)", ps.d_tau,
                                 num(2L, prec).pow(Rational(3 * k * k, 2)) * lk.pow(20L) *
                                     lR.pow(Rational(20, static_cast<long>(k)))));
        ps.checks.push_back(less("K < k^(3k^2)", num(ps.K, prec), lk.pow(3L * k * k)));
        ps.checks.push_back(less("D_p < k^(10k^2+30) R^(5+20/k)", ps.d_p,
                                 lk.pow(10L * k * k + 30) * lR.pow(Rational(5 * k + 20, static_cast<long>(k)))));
        ps.checks.push_back(at_most("n <= k^(40gk^4) R^(40gk^2)", ps.n, ps.size_bound));
        const LogNum mu = ps.p * pairs / lR.pow(2L);
        const LogNum tail = chernoff_tail(mu, *ps.t);
        auto u = union_or_none(pairs, r, ps.s, ps.tau * num(ps.K, prec), ps.p);
        NamedCheck c{"exp(-p C(n,2) / 8R^2) * fingerprint sum < 1/2", false, u ? tail * *u : LogNum(prec),
                     LogNum::from_rational(Rational(1, 2), prec)};
        c.holds = u && c.lhs < c.rhs;
        ps.checks.push_back(std::move(c));
        break;
    }
    }
    return ps;
}

} // namespace ramgirth
