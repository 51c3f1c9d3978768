#include <hankelkit/power_series.hpp>

#include <algorithm>
#include <utility>

namespace hankelkit {

namespace {

void require_same_order(const PowerSeries& a, const PowerSeries& b) {
    if (a.order() != b.order()) {
        throw SeriesError("incompatible truncation orders");
    }
}

} // namespace

Integer parse_integer(std::string_view text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        ++i;
    }
    if (i == text.size() || !std::all_of(text.begin() + i, text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return Integer(digits, 10);
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return make_rational(parse_integer(text.substr(0, slash)), den);
}

PowerSeries::PowerSeries(std::size_t order) : coefficients_(order + 1, Rational(0)) {}

PowerSeries::PowerSeries(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) {
        throw std::invalid_argument("a power series needs at least one coefficient");
    }
}

PowerSeries::PowerSeries(std::initializer_list<Rational> coefficients)
    : PowerSeries(std::vector<Rational>(coefficients)) {}

PowerSeries PowerSeries::constant(const Rational& c, std::size_t order) {
    PowerSeries s(order);
    s.coefficients_[0] = c;
    return s;
}

PowerSeries PowerSeries::variable(std::size_t order) {
    PowerSeries s(order);
    if (order >= 1) {
        s.coefficients_[1] = 1;
    }
    return s;
}

PowerSeries PowerSeries::from_integers(std::span<const Integer> terms) {
    std::vector<Rational> c;
    c.reserve(terms.size());
    for (const auto& t : terms) {
        c.emplace_back(t);
    }
    return PowerSeries(std::move(c));
}

std::size_t PowerSeries::valuation() const noexcept {
    std::size_t n = 0;
    while (n < coefficients_.size() && coefficients_[n] == 0) {
        ++n;
    }
    return n;
}

bool PowerSeries::is_integral() const noexcept {
    return std::all_of(coefficients_.begin(), coefficients_.end(),
                       [](const Rational& c) { return hankelkit::is_integral(c); });
}

PowerSeries PowerSeries::with_order(std::size_t order) const {
    std::vector<Rational> c(order + 1, Rational(0));
    std::copy_n(coefficients_.begin(), std::min(c.size(), coefficients_.size()), c.begin());
    return PowerSeries(std::move(c));
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b);
    std::vector<Rational> c(a.coefficients());
    for (std::size_t n = 0; n < c.size(); ++n) {
        c[n] += b[n];
    }
    return PowerSeries(std::move(c));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b);
    std::vector<Rational> c(a.coefficients());
    for (std::size_t n = 0; n < c.size(); ++n) {
        c[n] -= b[n];
    }
    return PowerSeries(std::move(c));
}

PowerSeries operator-(const PowerSeries& a) {
    std::vector<Rational> c(a.coefficients());
    for (auto& v : c) {
        v = -v;
    }
    return PowerSeries(std::move(c));
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b);
    const std::size_t order = a.order();
    std::vector<Rational> c(order + 1, Rational(0));
    for (std::size_t i = 0; i <= order; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= order; ++j) {
            c[i + j] += a[i] * b[j];
        }
    }
    return PowerSeries(std::move(c));
}

PowerSeries operator*(const Rational& k, const PowerSeries& a) {
    std::vector<Rational> c(a.coefficients());
    for (auto& v : c) {
        v *= k;
    }
    return PowerSeries(std::move(c));
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b);
    if (b[0] == 0) {
        throw SeriesError("non-invertible series");
    }
    const std::size_t order = a.order();
    std::vector<Rational> q(order + 1, Rational(0));
    for (std::size_t n = 0; n <= order; ++n) {
        Rational acc = a[n];
        for (std::size_t k = 1; k <= n; ++k) {
            acc -= b[k] * q[n - k];
        }
        q[n] = acc / b[0];
    }
    return PowerSeries(std::move(q));
}

PowerSeries power(const PowerSeries& a, unsigned long exponent) {
    PowerSeries result = PowerSeries::one(a.order());
    PowerSeries base = a;
    while (exponent > 0) {
        if (exponent & 1UL) {
            result = result * base;
        }
        exponent >>= 1;
        if (exponent > 0) {
            base = base * base;
        }
    }
    return result;
}

PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner) {
    require_same_order(outer, inner);
    if (inner[0] != 0) {
        throw SeriesError("composition requires zero constant term");
    }
    // Horner: outer_N, then r = r*inner + outer_i for i = N-1 .. 0.
    const std::size_t order = outer.order();
    PowerSeries r = PowerSeries::constant(outer[order], order);
    for (std::size_t i = order; i-- > 0;) {
        r = r * inner;
        std::vector<Rational> c(r.coefficients());
        c[0] += outer[i];
        r = PowerSeries(std::move(c));
    }
    return r;
}

PowerSeries sqrt(const PowerSeries& a) {
    if (a[0] != 1) {
        throw SeriesError("sqrt requires unit constant term");
    }
    const std::size_t order = a.order();
    std::vector<Rational> s(order + 1, Rational(0));
    s[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        Rational acc = a[n];
        for (std::size_t k = 1; k < n; ++k) {
            acc -= s[k] * s[n - k];
        }
        s[n] = acc / 2;
    }
    return PowerSeries(std::move(s));
}

PowerSeries revert(const PowerSeries& f) {
    const std::size_t order = f.order();
    if (f[0] != 0 || order < 1 || f[1] == 0) {
        throw SeriesError("series not reversible");
    }
    // Lagrange inversion: [x^n] u = (1/n) [t^{n-1}] g(t)^n with g = t / f(t).
    std::vector<Rational> u(order + 1, Rational(0));
    const PowerSeries g = PowerSeries::one(order - 1) / shift_down(f, 1);
    PowerSeries g_pow = PowerSeries::one(order - 1);
    for (std::size_t n = 1; n <= order; ++n) {
        g_pow = g_pow * g;
        u[n] = g_pow[n - 1] / static_cast<unsigned long>(n);
    }
    return PowerSeries(std::move(u));
}

PowerSeries from_rational(std::span<const Rational> numerator, std::span<const Rational> denominator,
                          std::size_t order) {
    if (denominator.empty() || denominator[0] == 0) {
        throw SeriesError("non-invertible series");
    }
    auto to_series = [order](std::span<const Rational> poly) {
        std::vector<Rational> c(order + 1, Rational(0));
        std::copy_n(poly.begin(), std::min(poly.size(), c.size()), c.begin());
        return PowerSeries(std::move(c));
    };
    return to_series(numerator) / to_series(denominator);
}

PowerSeries shift_down(const PowerSeries& f, std::size_t k, ShiftPolicy policy) {
    if (k > f.order()) {
        throw SeriesError("shift of " + std::to_string(k) + " exceeds truncation order " +
                          std::to_string(f.order()));
    }
    if (policy == ShiftPolicy::require_zero_prefix && f.valuation() < k) {
        throw SeriesError("shift would drop a nonzero coefficient");
    }
    const auto& c = f.coefficients();
    return PowerSeries(std::vector<Rational>(c.begin() + static_cast<std::ptrdiff_t>(k), c.end()));
}

PowerSeries binomial_ogf(const PowerSeries& f) {
    const std::size_t order = f.order();
    const PowerSeries one_minus_x({1, -1});
    const PowerSeries denom = one_minus_x.with_order(order);
    const PowerSeries inner = PowerSeries::variable(order) / denom;
    return compose(f, inner) / denom;
}

std::vector<Integer> integer_coefficients(const PowerSeries& f) {
    std::vector<Integer> out;
    out.reserve(f.order() + 1);
    for (std::size_t n = 0; n <= f.order(); ++n) {
        if (!is_integral(f[n])) {
            throw SeriesError("coefficient " + std::to_string(n) + " is not an integer: " + to_string(f[n]));
        }
        out.push_back(f[n].get_num());
    }
    return out;
}

std::string to_string(const PowerSeries& f) {
    std::string s = "[";
    for (std::size_t n = 0; n <= f.order(); ++n) {
        if (n > 0) {
            s += ", ";
        }
        s += to_string(f[n]);
    }
    return s + "]";
}

} // namespace hankelkit
