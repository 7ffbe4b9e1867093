#pragma once

#include <ramgirth/bigfloat.hpp>
#include <ramgirth/numeric.hpp>

#include <compare>
#include <string>

namespace ramgirth {

/// Signed real stored as (sign, log2 |x|), for quantities such as D_p^{k^2}
/// that overflow every fixed-width type.
///
/// Products, quotients and powers are a single addition or multiplication of
/// logarithms. Sums use log-sum-exp, log2(a + b) = log2 a + log2(1 + b/a),
/// evaluated through log1p, so at 96 bits the relative error of a sum stays
/// far below 2^-64.
class LogNum
{
public:
    /// Zero.
    explicit LogNum(mpfr_prec_t prec = default_precision);

    static LogNum from_log2(BigFloat log2_magnitude, int sign = 1);
    static LogNum from_int(const BigInt & v, mpfr_prec_t prec = default_precision);
    static LogNum from_int(long v, mpfr_prec_t prec = default_precision) { return from_int(BigInt(v), prec); }
    static LogNum from_rational(const Rational & v, mpfr_prec_t prec = default_precision);
    /// e^x for a real x.
    static LogNum exp(const BigFloat & x);

    int sign() const noexcept { return sign_; }
    bool is_zero() const noexcept { return sign_ == 0; }
    const BigFloat & log2() const noexcept { return log2_; }
    mpfr_prec_t precision() const noexcept { return log2_.precision(); }

    /// Natural logarithm of |x|.
    BigFloat ln() const;
    /// Nearest double; saturates to 0 or +-inf outside the double range.
    double to_double() const;
    /// Decimal value when it fits comfortably in a double, "2^<log2>" otherwise.
    std::string to_string() const;

    LogNum operator-() const;
    LogNum & operator*=(const LogNum & o);
    LogNum & operator/=(const LogNum & o);
    LogNum & operator+=(const LogNum & o);
    LogNum & operator-=(const LogNum & o) { return *this += -o; }

    friend LogNum operator*(LogNum a, const LogNum & b) { return a *= b; }
    friend LogNum operator/(LogNum a, const LogNum & b) { return a /= b; }
    friend LogNum operator+(LogNum a, const LogNum & b) { return a += b; }
    friend LogNum operator-(LogNum a, const LogNum & b) { return a -= b; }

    /// x^e for real e; requires x >= 0 unless e is an integer.
    LogNum pow(const BigFloat & e) const;
    LogNum pow(const Rational & e) const { return pow(BigFloat(e, precision())); }
    LogNum pow(long e) const;

    friend bool operator==(const LogNum & a, const LogNum & b) { return (a <=> b) == 0; }
    friend std::partial_ordering operator<=>(const LogNum & a, const LogNum & b);

private:
    int sign_ = 0;
    BigFloat log2_;
};

} // namespace ramgirth
