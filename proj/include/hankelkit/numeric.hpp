#ifndef HANKELKIT_NUMERIC_HPP
#define HANKELKIT_NUMERIC_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hankelkit {

// Arbitrary-precision integer. All sequence terms and determinants live here.
using Integer = mpz_class;

// Exact rational. mpq_class keeps every arithmetic result canonical
// (denominator > 0, gcd(num, den) = 1); make_rational() canonicalizes input.
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw std::domain_error("zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

inline Integer pow(const Integer& base, unsigned long exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

// (-1)^k
inline Integer sign_power(std::size_t k) { return (k % 2 == 0) ? Integer(1) : Integer(-1); }

// Binomial coefficient C(n, k); zero when k > n.
inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Same, allowing negative k (which yields 0).
inline Integer binomial(unsigned long n, long k) {
    if (k < 0) {
        return 0;
    }
    return binomial(n, static_cast<unsigned long>(k));
}

inline std::string to_string(const Integer& v) { return v.get_str(); }

// "num/den", denominator omitted when 1.
inline std::string to_string(const Rational& v) {
    if (v.get_den() == 1) {
        return v.get_num().get_str();
    }
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

// Parses an optionally signed decimal integer; throws std::invalid_argument.
Integer parse_integer(std::string_view text);

// Parses "num" or "num/den".
Rational parse_rational(std::string_view text);

} // namespace hankelkit

#endif
