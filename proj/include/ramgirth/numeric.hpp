#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ramgirth {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt big(std::uint64_t v)
{
    BigInt out;
    mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return out;
}

BigInt binomial(const BigInt & n, unsigned long k);
BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt factorial(unsigned long n);

/// Parses "3", "-2/7", "0.125" or "1e-3" into an exact rational.
Rational parse_rational(const std::string & text);

std::string to_string(const BigInt & v);
std::string to_string(const Rational & v);

} // namespace ramgirth
