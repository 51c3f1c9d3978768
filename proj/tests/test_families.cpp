#include <doctest.h>

#include <hankelkit/families.hpp>

#include "oracles.hpp"
#include "printing.hpp"

using namespace hankelkit;

namespace {

PowerSeries S(std::initializer_list<long> v) { return PowerSeries(oracle::ints(v)); }

FamilyParams A(long a, long b) { return {Family::A, a, b}; }
FamilyParams B(long a, long b) { return {Family::B, a, b}; }
FamilyParams C(long a) { return {Family::C, a, 0}; }

template <typename Fn>
IntegerSequence terms(Fn fn, const FamilyParams& p, std::size_t count) {
    std::vector<Integer> t;
    for (std::size_t n = 0; n < count; ++n) {
        t.push_back(fn(p, n));
    }
    return IntegerSequence(std::move(t));
}

IntegerSequence as_sequence(const PowerSeries& s) { return IntegerSequence(integer_coefficients(s)); }

// Expansion of p/q by the oracle's long division.
IntegerSequence expand(const oracle::Coeffs& p, const oracle::Coeffs& q, std::size_t order) {
    return as_sequence(PowerSeries(oracle::divide(p, q, order)));
}

IntegerSequence reverted(const oracle::Coeffs& f, std::size_t order) {
    oracle::Coeffs padded = f;
    padded.resize(order + 1, Rational(0));
    return as_sequence(PowerSeries(oracle::revert(padded, order)));
}

oracle::Coeffs family_a_den(long a, long b) { return oracle::ints({1, a, b}); }

} // namespace

TEST_CASE("catalan") {
    CHECK(terms([](const FamilyParams&, std::size_t n) { return catalan(n); }, C(1), 6) ==
          IntegerSequence{1, 1, 2, 5, 14, 42});
    for (std::size_t n = 0; n <= 12; ++n) {
        CHECK(catalan(n) == oracle::binom(2 * n, n) - oracle::binom(2 * n, n + 1));
    }
    CHECK(catalan(10) == oracle::catalan_table(11)[10]);
    CHECK(catalan(10) == 16796);
}

TEST_CASE("family_a_term") {
    CHECK(terms(family_a_term, A(-3, -5), 6) == IntegerSequence{0, 1, 3, 14, 57, 241});
    CHECK(terms(family_a_term, A(0, 0), 6) == IntegerSequence{0, 1, 0, 0, 0, 0});
    const IntegerSequence fib = expand(oracle::ints({0, 1}), oracle::ints({1, -1, -1}), 6);
    CHECK(fib == IntegerSequence{0, 1, 1, 2, 3, 5, 8});
    CHECK(terms(family_a_term, A(-1, -1), 7) == fib);
    CHECK_THROWS_AS(family_a_term(B(1, 1), 2), FamilyError);
}

TEST_CASE("family_a_reversion_ogf") {
    CHECK(family_a_reversion_ogf(A(-3, -5), 6) == S({0, 1, -3, 4, 18, -139, 357}));
    const IntegerSequence aerated = reverted(oracle::ints({0, 1, 0, -1, 0, 1, 0, -1}), 7);
    CHECK(aerated == IntegerSequence{0, 1, 0, 1, 0, 2, 0, 5});
    CHECK(as_sequence(family_a_reversion_ogf(A(0, 1), 7)) == aerated);
    const oracle::Coeffs f = oracle::divide(oracle::ints({0, 1}), family_a_den(1, 1), 4);
    CHECK(as_sequence(family_a_reversion_ogf(A(1, 1), 4)) == reverted(f, 4));
    CHECK_THROWS_WITH_AS(family_a_reversion_ogf(A(1, 0), 4), "closed form undefined; use family C", FamilyError);
}

TEST_CASE("family_a_reversion_term") {
    CHECK(terms(family_a_reversion_term, A(-3, -5), 7) == IntegerSequence{0, 1, -3, 4, 18, -139, 357});
    CHECK(terms(family_a_reversion_term, A(1, 0), 6) == reverted(oracle::divide(oracle::ints({0, 1}), family_a_den(1, 0), 5), 5));
    CHECK(terms(family_a_reversion_term, A(1, 0), 6) == IntegerSequence{0, 1, 1, 1, 1, 1});
    CHECK(terms(family_a_reversion_term, A(0, 1), 8) == IntegerSequence{0, 1, 0, 1, 0, 2, 0, 5});
}

TEST_CASE("family_b_term") {
    const IntegerSequence expected = expand(oracle::ints({0, 1, -2}), oracle::ints({1, -1}), 5);
    CHECK(expected == IntegerSequence{0, 1, -1, -1, -1, -1});
    CHECK(terms(family_b_term, B(2, 1), 6) == expected);
    CHECK(terms(family_b_term, B(1, 1), 5) == IntegerSequence{0, 1, 0, 0, 0});
    CHECK(terms(family_b_term, B(1, 2), 6) == IntegerSequence{0, 1, 1, 2, 4, 8});
    CHECK_THROWS_WITH_AS(family_b_term(B(1, 0), 3), "family C handles beta = 0", FamilyError);
}

TEST_CASE("family_b_reversion_ogf") {
    CHECK(family_b_reversion_ogf(B(1, 0), 5) == S({0, 1, 1, 2, 5, 14}));
    // By hand from u(1 - 2u) = x(1 - u): u_2 = alpha - beta, u_3 = 2 alpha^2 - 3 alpha beta + beta^2.
    CHECK(family_b_reversion_ogf(B(2, 1), 3) == S({0, 1, 1, 3}));
    CHECK(family_b_reversion_ogf(B(1, 1), 4) == S({0, 1, 0, 0, 0}));
    CHECK_THROWS_AS(family_b_reversion_ogf(B(0, 1), 4), FamilyError);
}

TEST_CASE("family_b_reversion_term") {
    CHECK(terms(family_b_reversion_term, B(2, 1), 4) == IntegerSequence{0, 1, 1, 3});
    CHECK(terms(family_b_reversion_term, B(1, 1), 4) == IntegerSequence{0, 1, 0, 0});
    CHECK(terms(family_b_reversion_term, B(1, 0), 6) == IntegerSequence{0, 1, 1, 2, 5, 14});
}

TEST_CASE("family_c_term") {
    CHECK(terms(family_c_term, C(1), 7) == IntegerSequence{0, 1, 1, 2, 5, 14, 42});
    CHECK(terms(family_c_term, C(2), 6) == IntegerSequence{0, 1, 2, 8, 40, 224});
    CHECK(terms(family_c_term, C(-1), 6) == IntegerSequence{0, 1, -1, 2, -5, 14});
    CHECK_THROWS_AS(family_c_term(C(0), 1), FamilyError);
    CHECK(family_c_ogf(C(3), 4) == S({0, 1, -3, 0, 0}));
    CHECK(family_c_reversion_ogf(C(2), 5) == S({0, 1, 2, 8, 40, 224}));
}

TEST_CASE("property: term formulas agree with o.g.f. expansions") {
    const std::size_t order = 12;
    for (long a = -5; a <= 5; ++a) {
        for (long b = -5; b <= 5; ++b) {
            CAPTURE(a);
            CAPTURE(b);
            const oracle::Coeffs ga = oracle::divide(oracle::ints({0, 1}), family_a_den(a, b), order);
            const IntegerSequence fa = as_sequence(PowerSeries(ga));
            CHECK(terms(family_a_term, A(a, b), order + 1) == fa);
            CHECK(as_sequence(family_a_ogf(A(a, b), order)) == fa);
            const IntegerSequence ua = reverted(ga, order);
            CHECK(terms(family_a_reversion_term, A(a, b), order + 1) == ua);
            if (b != 0) {
                CHECK(as_sequence(family_a_reversion_ogf(A(a, b), order)) == ua);
            }

            const oracle::Coeffs gb = oracle::divide(oracle::ints({0, 1, -a}), oracle::ints({1, -b}), order);
            if (b != 0) {
                CHECK(terms(family_b_term, B(a, b), order + 1) == as_sequence(PowerSeries(gb)));
            }
            CHECK(as_sequence(family_b_ogf(B(a, b), order)) == as_sequence(PowerSeries(gb)));
            const IntegerSequence ub = reverted(gb, order);
            CHECK(terms(family_b_reversion_term, B(a, b), order + 1) == ub);
            if (a != 0) {
                CHECK(as_sequence(family_b_reversion_ogf(B(a, b), order)) == ub);
            }
        }
        if (a != 0) {
            const IntegerSequence uc = reverted(oracle::ints({0, 1, -a}), order);
            CHECK(terms(family_c_term, C(a), order + 1) == uc);
            CHECK(as_sequence(family_c_reversion_ogf(C(a), order)) == uc);
            CHECK(as_sequence(revert(family_c_ogf(C(a), order))) == uc);
            // Family C is family B at beta = 0.
            CHECK(terms(family_b_reversion_term, B(a, 0), order + 1) == uc);
        }
    }
}

TEST_CASE("property: family A recurrence a_n = -alpha a_{n-1} - beta a_{n-2}") {
    for (long a = -5; a <= 5; ++a) {
        for (long b = -5; b <= 5; ++b) {
            const FamilyParams p = A(a, b);
            CHECK(family_a_term(p, 1) == 1);
            CHECK(family_a_term(p, 2) == -a);
            for (std::size_t n = 3; n <= 12; ++n) {
                CHECK(family_a_term(p, n) == -a * family_a_term(p, n - 1) - b * family_a_term(p, n - 2));
            }
        }
    }
}

TEST_CASE("property: binomial transform of u_{n+1} shifts alpha by one") {
    for (long a = -5; a <= 5; ++a) {
        for (long b = -5; b <= 5; ++b) {
            const IntegerSequence u = terms(family_a_reversion_term, A(a, b), 14).shifted(1);
            const IntegerSequence v = terms(family_a_reversion_term, A(a + 1, b), 14).shifted(1);
            CHECK(as_sequence(binomial_ogf(PowerSeries::from_integers(u.terms()))) == v);
        }
    }
}

TEST_CASE("dispatch helpers") {
    CHECK(parse_family("b") == Family::B);
    CHECK_THROWS_AS(parse_family("D"), std::invalid_argument);
    CHECK(family_reversion_sequence(A(-3, -5), 7) == IntegerSequence{0, 1, -3, 4, 18, -139, 357});
    CHECK(family_reversion_sequence(C(1), 4) == IntegerSequence{0, 1, 1, 2});
    CHECK(family_ogf(B(2, 1), 3) == S({0, 1, -1, -1}));
    CHECK(family_reversion_ogf(C(1), 3) == S({0, 1, 1, 2}));
}
