#include <ramgirth/bigfloat.hpp>
#include <ramgirth/errors.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace ramgirth {

namespace {

// Rounds `dst` into the joint precision before an in-place operation.
void widen(BigFloat & dst, const BigFloat & o)
{
    if (o.precision() > dst.precision())
        mpfr_prec_round(dst.get(), o.precision(), MPFR_RNDN);
}

} // namespace

BigFloat::BigFloat(mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(double value, mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigInt & value, mpfr_prec_t prec, mpfr_rnd_t rnd)
{
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, value.get_mpz_t(), rnd);
}

BigFloat::BigFloat(const Rational & value, mpfr_prec_t prec, mpfr_rnd_t rnd)
{
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, value.get_mpq_t(), rnd);
}

BigFloat::BigFloat(const BigFloat & other)
{
    mpfr_init2(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat && other) noexcept
{
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
}

BigFloat & BigFloat::operator=(const BigFloat & other)
{
    if (this != &other) {
        mpfr_set_prec(v_, other.precision());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat & BigFloat::operator=(BigFloat && other) noexcept
{
    mpfr_swap(v_, other.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::infinity(int sign, mpfr_prec_t prec)
{
    BigFloat out(prec);
    mpfr_set_inf(out.v_, sign);
    return out;
}

BigFloat BigFloat::parse(const std::string & text, mpfr_prec_t prec)
{
    BigFloat out(prec);
    if (text == "-inf") {
        mpfr_set_inf(out.v_, -1);
        return out;
    }
    if (text == "inf") {
        mpfr_set_inf(out.v_, 1);
        return out;
    }
    char * end = nullptr;
    mpfr_strtofr(out.v_, text.c_str(), &end, 10, MPFR_RNDN);
    if (end == text.c_str() || *end != '\0')
        throw InputError("not a number: '" + text + "'");
    return out;
}

std::string BigFloat::to_string() const
{
    // enough decimal digits to round-trip the binary mantissa
    int digits = static_cast<int>(std::ceil(static_cast<double>(precision()) * 0.30103)) + 1;
    return to_string(digits);
}

std::string BigFloat::to_string(int digits) const
{
    if (is_nan())
        return "nan";
    if (is_inf())
        return sign() < 0 ? "-inf" : "inf";
    char * raw = nullptr;
    mpfr_asprintf(&raw, "%.*Rg", digits, v_);
    std::string out(raw);
    mpfr_free_str(raw);
    return out;
}

BigInt BigFloat::floor() const
{
    if (is_inf() || is_nan())
        throw InputError("floor of a non-finite value");
    BigInt out;
    mpfr_get_z(out.get_mpz_t(), v_, MPFR_RNDD);
    return out;
}

BigFloat BigFloat::operator-() const
{
    BigFloat out(*this);
    mpfr_neg(out.v_, v_, MPFR_RNDN);
    return out;
}

BigFloat & BigFloat::operator+=(const BigFloat & o)
{
    widen(*this, o);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat & BigFloat::operator-=(const BigFloat & o)
{
    widen(*this, o);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat & BigFloat::operator*=(const BigFloat & o)
{
    widen(*this, o);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat & BigFloat::operator/=(const BigFloat & o)
{
    widen(*this, o);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

std::partial_ordering operator<=>(const BigFloat & a, const BigFloat & b)
{
    if (a.is_nan() || b.is_nan())
        return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.get(), b.get());
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

BigFloat log2(const BigFloat & x, mpfr_rnd_t rnd)
{
    BigFloat out(x.precision());
    mpfr_log2(out.get(), x.get(), rnd);
    return out;
}

BigFloat exp2(const BigFloat & x, mpfr_rnd_t rnd)
{
    BigFloat out(x.precision());
    mpfr_exp2(out.get(), x.get(), rnd);
    return out;
}

BigFloat log1p(const BigFloat & x, mpfr_rnd_t rnd)
{
    BigFloat out(x.precision());
    mpfr_log1p(out.get(), x.get(), rnd);
    return out;
}

BigFloat abs(const BigFloat & x)
{
    BigFloat out(x.precision());
    mpfr_abs(out.get(), x.get(), MPFR_RNDN);
    return out;
}

BigFloat log2_e(mpfr_prec_t prec)
{
    // log2(e) = 1 / ln 2
    BigFloat ln2(prec);
    mpfr_const_log2(ln2.get(), MPFR_RNDN);
    BigFloat one(1L, prec);
    return one / ln2;
}

} // namespace ramgirth
