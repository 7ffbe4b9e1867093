#include <ramgirth/errors.hpp>
#include <ramgirth/lognum.hpp>

#include <algorithm>
#include <cmath>

namespace ramgirth {

LogNum::LogNum(mpfr_prec_t prec) : log2_(BigFloat::infinity(-1, prec)) {}

LogNum LogNum::from_log2(BigFloat log2_magnitude, int sign)
{
    LogNum out(log2_magnitude.precision());
    if (sign == 0 || (log2_magnitude.is_inf() && log2_magnitude.sign() < 0))
        return out;
    if (log2_magnitude.is_nan())
        throw InputError("log2 magnitude is NaN");
    out.sign_ = sign > 0 ? 1 : -1;
    out.log2_ = std::move(log2_magnitude);
    return out;
}

LogNum LogNum::from_int(const BigInt & v, mpfr_prec_t prec)
{
    if (v == 0)
        return LogNum(prec);
    BigInt a = ::abs(v);
    BigFloat l = ramgirth::log2(BigFloat(a, prec + 32));
    mpfr_prec_round(l.get(), prec, MPFR_RNDN);
    return from_log2(std::move(l), sgn(v));
}

LogNum LogNum::from_rational(const Rational & v, mpfr_prec_t prec)
{
    if (v == 0)
        return LogNum(prec);
    // log2 of numerator and denominator separately keeps full relative accuracy
    BigFloat ln = ramgirth::log2(BigFloat(BigInt(::abs(v.get_num())), prec + 32));
    BigFloat ld = ramgirth::log2(BigFloat(BigInt(v.get_den()), prec + 32));
    BigFloat l = ln - ld;
    mpfr_prec_round(l.get(), prec, MPFR_RNDN);
    return from_log2(std::move(l), sgn(v));
}

LogNum LogNum::exp(const BigFloat & x)
{
    return from_log2(x * log2_e(x.precision()));
}

BigFloat LogNum::ln() const
{
    BigFloat ln2(precision());
    mpfr_const_log2(ln2.get(), MPFR_RNDN);
    return log2_ * ln2;
}

double LogNum::to_double() const
{
    if (sign_ == 0)
        return 0.0;
    double l = log2_.to_double();
    if (l > 1100)
        return sign_ * HUGE_VAL;
    if (l < -1100)
        return 0.0;
    return sign_ * exp2(log2_).to_double();
}

std::string LogNum::to_string() const
{
    if (sign_ == 0)
        return "0";
    double l = log2_.to_double();
    if (std::abs(l) < 64) {
        BigFloat v = exp2(log2_);
        if (sign_ < 0)
            v = -v;
        return v.to_string(17);
    }
    return std::string(sign_ < 0 ? "-" : "") + "2^" + log2_.to_string(20);
}

LogNum LogNum::operator-() const
{
    LogNum out(*this);
    out.sign_ = -sign_;
    return out;
}

LogNum & LogNum::operator*=(const LogNum & o)
{
    if (sign_ == 0 || o.sign_ == 0) {
        *this = LogNum(std::max(precision(), o.precision()));
        return *this;
    }
    sign_ *= o.sign_;
    log2_ += o.log2_;
    return *this;
}

LogNum & LogNum::operator/=(const LogNum & o)
{
    if (o.sign_ == 0)
        throw InputError("division by zero");
    if (sign_ == 0)
        return *this;
    sign_ *= o.sign_;
    log2_ -= o.log2_;
    return *this;
}

LogNum & LogNum::operator+=(const LogNum & o)
{
    if (o.sign_ == 0)
        return *this;
    if (sign_ == 0) {
        auto prec = std::max(precision(), o.precision());
        *this = o;
        mpfr_prec_round(log2_.get(), prec, MPFR_RNDN);
        return *this;
    }
    const bool this_larger = log2_ >= o.log2_;
    const LogNum & big = this_larger ? *this : o;
    const LogNum & small = this_larger ? o : *this;
    const auto prec = std::max(precision(), o.precision());

    BigFloat ratio = exp2(small.log2_ - big.log2_);  // in (0, 1]
    mpfr_prec_round(ratio.get(), prec, MPFR_RNDN);
    int sign = big.sign_;
    if (big.sign_ != small.sign_) {
        if (ratio == BigFloat(1L, prec)) {
            *this = LogNum(prec);
            return *this;
        }
        ratio = -ratio;
    }
    BigFloat l = big.log2_ + log1p(ratio) * log2_e(prec);
    sign_ = sign;
    log2_ = std::move(l);
    return *this;
}

LogNum LogNum::pow(const BigFloat & e) const
{
    if (e.is_zero())
        return from_log2(BigFloat(precision()));
    if (sign_ == 0) {
        if (e.sign() < 0)
            throw InputError("zero to a negative power");
        return *this;
    }
    int sign = 1;
    if (sign_ < 0) {
        if (! mpfr_integer_p(e.get()))
            throw InputError("negative base to a non-integer power");
        BigInt ei = e.floor();
        sign = mpz_odd_p(ei.get_mpz_t()) ? -1 : 1;
    }
    return from_log2(log2_ * e, sign);
}

LogNum LogNum::pow(long e) const { return pow(BigFloat(e, precision())); }

std::partial_ordering operator<=>(const LogNum & a, const LogNum & b)
{
    if (a.sign_ != b.sign_)
        return a.sign_ <=> b.sign_;
    if (a.sign_ == 0)
        return std::partial_ordering::equivalent;
    auto c = a.log2_ <=> b.log2_;
    return a.sign_ > 0 ? c : (0 <=> c);
}

} // namespace ramgirth
