#ifndef HANKELKIT_POWER_SERIES_HPP
#define HANKELKIT_POWER_SERIES_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <hankelkit/numeric.hpp>

namespace hankelkit {

// Raised when a series operation's algebraic precondition fails
// (non-invertible divisor, bad sqrt argument, non-reversible series, ...).
class SeriesError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/*
 * Truncated formal power series over the rationals.
 *
 * A series of order N stores exactly the coefficients of x^0 .. x^N. Binary
 * operations require equal orders and never extend or shrink implicitly;
 * mismatches raise SeriesError("incompatible truncation orders").
 *
 * Every coefficient of a result at index n depends only on input
 * coefficients at indices <= n, so results are exact up to the order.
 */
class PowerSeries {
public:
    // Zero series of the given order.
    explicit PowerSeries(std::size_t order = 0);

    // Takes ownership of the coefficient list; order = coefficients.size() - 1.
    // An empty list is rejected.
    explicit PowerSeries(std::vector<Rational> coefficients);

    PowerSeries(std::initializer_list<Rational> coefficients);

    static PowerSeries zero(std::size_t order) { return PowerSeries(order); }
    static PowerSeries one(std::size_t order) { return constant(Rational(1), order); }
    static PowerSeries constant(const Rational& c, std::size_t order);
    // The series x (zero at order 0).
    static PowerSeries variable(std::size_t order);
    static PowerSeries from_integers(std::span<const Integer> terms);

    std::size_t order() const noexcept { return coefficients_.size() - 1; }
    const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }
    const Rational& operator[](std::size_t n) const { return coefficients_.at(n); }

    // Index of the first nonzero coefficient, or order()+1 for the zero series.
    std::size_t valuation() const noexcept;
    bool is_zero() const noexcept { return valuation() > order(); }
    bool is_integral() const noexcept;

    // Same coefficients, cut down or zero-padded to a new order.
    PowerSeries with_order(std::size_t order) const;

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    std::vector<Rational> coefficients_;
};

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a);
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(const Rational& c, const PowerSeries& a);
// Requires b[0] != 0; otherwise SeriesError("non-invertible series").
PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);

// a^e by repeated squaring.
PowerSeries power(const PowerSeries& a, unsigned long exponent);

// outer(inner(x)). Requires inner[0] == 0.
PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner);

// Square root with constant term 1. Requires a[0] == 1.
PowerSeries sqrt(const PowerSeries& a);

// Compositional inverse u with f(u(x)) = x = u(f(x)) mod x^{N+1}.
// Requires f[0] == 0 and f[1] != 0 (f[1] may be any nonzero rational).
PowerSeries revert(const PowerSeries& f);

// Expansion of numerator / denominator (coefficient lists, lowest degree first)
// to the given order. Requires denominator[0] != 0.
PowerSeries from_rational(std::span<const Rational> numerator, std::span<const Rational> denominator,
                          std::size_t order);

enum class ShiftPolicy {
    // Shifting past a nonzero coefficient is an error.
    require_zero_prefix,
    // Leading coefficients are discarded unconditionally.
    drop_prefix,
};

// Series whose n-th coefficient is f[n + k]; the order drops by k.
PowerSeries shift_down(const PowerSeries& f, std::size_t k,
                       ShiftPolicy policy = ShiftPolicy::require_zero_prefix);

// O.g.f. of the binomial transform: (1/(1-x)) * f(x/(1-x)).
PowerSeries binomial_ogf(const PowerSeries& f);

// Exact integer coefficients; throws SeriesError naming the first
// non-integral index.
std::vector<Integer> integer_coefficients(const PowerSeries& f);

std::string to_string(const PowerSeries& f);

} // namespace hankelkit

#endif
