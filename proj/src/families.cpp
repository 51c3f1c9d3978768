#include <hankelkit/families.hpp>

#include <algorithm>
#include <cctype>
#include <vector>

namespace hankelkit {

namespace {

void require_family(const FamilyParams& p, Family expected) {
    if (p.family != expected) {
        throw FamilyError("expected family " + to_string(expected) + ", got " + to_string(p.family));
    }
}

void require_nonzero(const Integer& v, const char* message) {
    if (v == 0) {
        throw FamilyError(message);
    }
}

PowerSeries polynomial(std::vector<Rational> coefficients, std::size_t order) {
    coefficients.resize(std::max(coefficients.size(), order + 1), Rational(0));
    return PowerSeries(std::move(coefficients)).with_order(order);
}

} // namespace

std::string to_string(Family f) {
    switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    }
    return "?";
}

Family parse_family(std::string_view text) {
    if (text.size() == 1) {
        switch (std::toupper(static_cast<unsigned char>(text[0]))) {
        case 'A': return Family::A;
        case 'B': return Family::B;
        case 'C': return Family::C;
        }
    }
    throw std::invalid_argument("unknown family '" + std::string(text) + "' (expected A, B or C)");
}

Integer catalan(std::size_t n) {
    Integer c = binomial(2 * n, n);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), n + 1);
    return c;
}

Integer family_a_term(const FamilyParams& p, std::size_t n) {
    require_family(p, Family::A);
    if (n == 0) {
        return 0;
    }
    const Integer neg_alpha = -p.alpha;
    const Integer neg_beta = -p.beta;
    Integer sum = 0;
    for (std::size_t k = 0; 2 * k <= n - 1; ++k) {
        sum += binomial(n - 1 - k, k) * pow(neg_alpha, n - 1 - 2 * k) * pow(neg_beta, k);
    }
    return sum;
}

PowerSeries family_a_ogf(const FamilyParams& p, std::size_t order) {
    require_family(p, Family::A);
    const std::vector<Rational> num{0, 1};
    const std::vector<Rational> den{1, Rational(p.alpha), Rational(p.beta)};
    return from_rational(num, den, order);
}

PowerSeries family_a_reversion_ogf(const FamilyParams& p, std::size_t order) {
    require_family(p, Family::A);
    require_nonzero(p.beta, "closed form undefined; use family C");
    const std::size_t deep = order + 1;
    const Rational a(p.alpha);
    const Rational b(p.beta);
    const PowerSeries radicand = polynomial({1, -2 * a, a * a - 4 * b}, deep);
    const PowerSeries numerator = polynomial({1, -a}, deep) - sqrt(radicand);
    return Rational(1, 1) / (2 * b) * shift_down(numerator, 1);
}

Integer family_a_reversion_term(const FamilyParams& p, std::size_t n) {
    require_family(p, Family::A);
    if (n == 0) {
        return 0;
    }
    Integer sum = 0;
    for (std::size_t k = 0; 2 * k <= n - 1; ++k) {
        sum += binomial(n - 1, 2 * k) * catalan(k) * pow(p.alpha, n - 1 - 2 * k) * pow(p.beta, k);
    }
    return sum;
}

Integer family_b_term(const FamilyParams& p, std::size_t n) {
    require_family(p, Family::B);
    require_nonzero(p.beta, "family C handles beta = 0");
    if (n == 0) {
        return 0;
    }
    if (n == 1) {
        return 1;
    }
    return (p.beta - p.alpha) * pow(p.beta, n - 2);
}

PowerSeries family_b_ogf(const FamilyParams& p, std::size_t order) {
    require_family(p, Family::B);
    const std::vector<Rational> num{0, 1, Rational(-p.alpha)};
    const std::vector<Rational> den{1, Rational(-p.beta)};
    return from_rational(num, den, order);
}

PowerSeries family_b_reversion_ogf(const FamilyParams& p, std::size_t order) {
    require_family(p, Family::B);
    require_nonzero(p.alpha, "alpha must be nonzero");
    const Rational a(p.alpha);
    const Rational b(p.beta);
    const PowerSeries radicand = polynomial({1, -2 * (2 * a - b), b * b}, order);
    const PowerSeries numerator = polynomial({1, b}, order) - sqrt(radicand);
    return Rational(1, 1) / (2 * a) * numerator;
}

Integer family_b_reversion_term(const FamilyParams& p, std::size_t n) {
    require_family(p, Family::B);
    if (n == 0) {
        return 0;
    }
    const Integer neg_beta = -p.beta;
    Integer sum = 0;
    for (std::size_t k = 0; k <= n - 1; ++k) {
        sum += binomial(n + k - 1, 2 * k) * catalan(k) * pow(p.alpha, k) * pow(neg_beta, n - k - 1);
    }
    return sum;
}

Integer family_c_term(const FamilyParams& p, std::size_t n) {
    require_family(p, Family::C);
    require_nonzero(p.alpha, "alpha must be nonzero");
    if (n == 0) {
        return 0;
    }
    return catalan(n - 1) * pow(p.alpha, n - 1);
}

PowerSeries family_c_ogf(const FamilyParams& p, std::size_t order) {
    require_family(p, Family::C);
    return polynomial({0, 1, Rational(-p.alpha)}, order);
}

PowerSeries family_c_reversion_ogf(const FamilyParams& p, std::size_t order) {
    require_family(p, Family::C);
    require_nonzero(p.alpha, "alpha must be nonzero");
    const Rational a(p.alpha);
    const PowerSeries numerator = PowerSeries::one(order) - sqrt(polynomial({1, -4 * a}, order));
    return Rational(1, 1) / (2 * a) * numerator;
}

PowerSeries family_ogf(const FamilyParams& p, std::size_t order) {
    switch (p.family) {
    case Family::A: return family_a_ogf(p, order);
    case Family::B: return family_b_ogf(p, order);
    case Family::C: return family_c_ogf(p, order);
    }
    throw std::logic_error("unknown family");
}

PowerSeries family_reversion_ogf(const FamilyParams& p, std::size_t order) {
    switch (p.family) {
    case Family::A: return family_a_reversion_ogf(p, order);
    case Family::B: return family_b_reversion_ogf(p, order);
    case Family::C: return family_c_reversion_ogf(p, order);
    }
    throw std::logic_error("unknown family");
}

IntegerSequence family_reversion_sequence(const FamilyParams& p, std::size_t length) {
    std::vector<Integer> u;
    u.reserve(length);
    for (std::size_t n = 0; n < length; ++n) {
        switch (p.family) {
        case Family::A: u.push_back(family_a_reversion_term(p, n)); break;
        case Family::B: u.push_back(family_b_reversion_term(p, n)); break;
        case Family::C: u.push_back(family_c_term(p, n)); break;
        }
    }
    return IntegerSequence(std::move(u));
}

} // namespace hankelkit
