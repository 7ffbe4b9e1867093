#include <ramgirth/errors.hpp>
#include <ramgirth/numeric.hpp>

#include <cctype>

namespace ramgirth {

BigInt binomial(const BigInt & n, unsigned long k)
{
    BigInt out;
    mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
    return out;
}

BigInt binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    return binomial(big(n), static_cast<unsigned long>(k));
}

BigInt factorial(unsigned long n)
{
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Rational parse_rational(const std::string & text)
{
    auto fail = [&]() -> Rational { throw InputError("not a rational number: '" + text + "'"); };
    if (text.empty())
        return fail();

    if (auto slash = text.find('/'); slash != std::string::npos) {
        Rational q;
        if (q.set_str(text, 10) != 0 || q.get_den() == 0)
            return fail();
        q.canonicalize();
        return q;
    }

    // decimal with optional exponent, converted exactly
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-')
        negative = text[pos++] == '-';
    std::string digits;
    long scale = 0;
    bool seen_digit = false, seen_point = false;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            seen_digit = true;
            if (seen_point)
                --scale;
        }
        else if (c == '.' && ! seen_point)
            seen_point = true;
        else
            break;
    }
    if (! seen_digit)
        return fail();
    if (pos < text.size()) {
        if (text[pos] != 'e' && text[pos] != 'E')
            return fail();
        std::string exponent = text.substr(pos + 1);
        if (exponent.empty())
            return fail();
        std::size_t used = 0;
        long e = 0;
        try {
            e = std::stol(exponent, &used);
        }
        catch (const std::exception &) {
            return fail();
        }
        if (used != exponent.size() || e > 100000 || e < -100000)
            return fail();
        scale += e;
    }

    BigInt num(digits, 10);
    BigInt ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
    Rational q = scale < 0 ? Rational(num, ten_pow) : Rational(num * ten_pow, 1);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

std::string to_string(const BigInt & v) { return v.get_str(10); }

std::string to_string(const Rational & v) { return v.get_str(10); }

} // namespace ramgirth
