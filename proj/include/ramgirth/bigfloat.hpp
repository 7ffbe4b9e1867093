#pragma once

#include <ramgirth/numeric.hpp>

#include <mpfr.h>

#include <compare>
#include <string>

namespace ramgirth {

inline constexpr mpfr_prec_t default_precision = 96;

/// Owning wrapper around an mpfr_t. Binary operations round to nearest at
/// the larger of the operand precisions unless a rounding mode is given.
class BigFloat
{
public:
    explicit BigFloat(mpfr_prec_t prec = default_precision);
    BigFloat(long value, mpfr_prec_t prec);
    BigFloat(double value, mpfr_prec_t prec);
    BigFloat(const BigInt & value, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
    BigFloat(const Rational & value, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);

    BigFloat(const BigFloat & other);
    BigFloat(BigFloat && other) noexcept;
    BigFloat & operator=(const BigFloat & other);
    BigFloat & operator=(BigFloat && other) noexcept;
    ~BigFloat();

    static BigFloat infinity(int sign, mpfr_prec_t prec = default_precision);
    static BigFloat parse(const std::string & text, mpfr_prec_t prec = default_precision);

    mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }
    mpfr_ptr get() noexcept { return v_; }
    mpfr_srcptr get() const noexcept { return v_; }

    bool is_inf() const noexcept { return mpfr_inf_p(v_) != 0; }
    bool is_nan() const noexcept { return mpfr_nan_p(v_) != 0; }
    bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
    int sign() const noexcept { return mpfr_sgn(v_); }

    double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Shortest %g-style decimal that carries every significant bit.
    std::string to_string() const;
    std::string to_string(int digits) const;
    BigInt floor() const;

    BigFloat operator-() const;
    BigFloat & operator+=(const BigFloat & o);
    BigFloat & operator-=(const BigFloat & o);
    BigFloat & operator*=(const BigFloat & o);
    BigFloat & operator/=(const BigFloat & o);

    friend BigFloat operator+(BigFloat a, const BigFloat & b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat & b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat & b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, const BigFloat & b) { return a /= b; }

    friend bool operator==(const BigFloat & a, const BigFloat & b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const BigFloat & a, const BigFloat & b);

private:
    mpfr_t v_;
};

BigFloat log2(const BigFloat & x, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat exp2(const BigFloat & x, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat log1p(const BigFloat & x, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat abs(const BigFloat & x);
/// log2(e) at the given precision.
BigFloat log2_e(mpfr_prec_t prec);

} // namespace ramgirth
