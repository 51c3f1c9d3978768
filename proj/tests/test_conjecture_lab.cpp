#include <doctest.h>

#include <functional>
#include <map>
#include <random>

#include <hankelkit/conjecture_lab.hpp>

#include "oracles.hpp"
#include "printing.hpp"

using namespace hankelkit;

namespace {

IntegerSequence h_star_of(const ConjectureReport& r, const std::string& label) {
    std::vector<Integer> v;
    for (const Check& c : r.checks) {
        if (c.claim == label) {
            v.push_back(c.lhs);
        }
    }
    return IntegerSequence(std::move(v));
}

std::size_t count_claims(const ConjectureReport& r, const std::string& label) {
    std::size_t k = 0;
    for (const Check& c : r.checks) {
        k += c.claim == label ? 1 : 0;
    }
    return k;
}

// det of the (n+1)x(n+1) Hankel block starting at seq[start], by rational elimination.
Integer hankel_det(const IntegerSequence& seq, std::size_t start, std::size_t n) {
    SquareMatrix m(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j <= n; ++j) {
            m(i, j) = seq[start + i + j];
        }
    }
    return oracle::det_rational(m);
}

Integer ipow(const Integer& b, long e) {
    Integer r = 1;
    for (long i = 0; i < e; ++i) {
        r *= b;
    }
    return r;
}

Integer sgn(long k) { return k % 2 == 0 ? 1 : -1; }

long c2(long m) { return m * (m - 1) / 2; }

// Family A terms from the recurrence, not the closed-form sum.
std::vector<Integer> family_a_recurrence(const Integer& alpha, const Integer& beta, std::size_t count) {
    std::vector<Integer> a{0, 1};
    while (a.size() < count) {
        const std::size_t n = a.size();
        a.push_back(-alpha * a[n - 1] - beta * a[n - 2]);
    }
    return a;
}

using Recompute = std::function<std::pair<Integer, Integer>(long n)>;

// Rebuilds lhs/rhs of each claim from the report's stored sequence prefix alone.
std::map<std::string, Recompute> recomputers(const ConjectureReport& r) {
    const IntegerSequence& u = r.sequence;
    const Integer alpha = r.params.alpha;
    const Integer beta = r.params.beta;
    auto h = [&u](long n) { return hankel_det(u, 0, n); };
    auto hs = [&u](long n) { return hankel_det(u, 1, n); };
    auto hss = [&u](long n) { return hankel_det(u, 2, n); };
    std::map<std::string, Recompute> m;
    switch (r.conjecture) {
    case ConjectureId::conjecture4: {
        const auto a = family_a_recurrence(alpha, beta, r.depth + 3);
        m["h*[n] = beta^C(n+1,2)"] = [=](long n) { return std::pair{hs(n), ipow(beta, c2(n + 1))}; };
        m["h[n] = (-1)^n beta^C(n,2) a[n]"] = [=](long n) {
            return std::pair{h(n), Integer(sgn(n) * ipow(beta, c2(n)) * a[n])};
        };
        m["h**[n] = (-1)^(n+1) beta^C(n+1,2) a[n+2]"] = [=](long n) {
            return std::pair{hss(n), Integer(sgn(n + 1) * ipow(beta, c2(n + 1)) * a[n + 2])};
        };
        m["(-1)^(n+1) h[n+1] = a[n+1] h*[n]"] = [=](long n) {
            return std::pair{Integer(sgn(n + 1) * h(n + 1)), Integer(a[n + 1] * hs(n))};
        };
        m["(-1)^(n+1) h**[n] = a[n+2] h*[n]"] = [=](long n) {
            return std::pair{Integer(sgn(n + 1) * hss(n)), Integer(a[n + 2] * hs(n))};
        };
        break;
    }
    case ConjectureId::conjecture6: {
        const Integer d = alpha - beta;
        const Integer q = alpha * d;
        m["h*[n] = (alpha(alpha-beta))^C(n+1,2)"] = [=](long n) { return std::pair{hs(n), ipow(q, c2(n + 1))}; };
        m["beta h[n] = ((alpha-beta)^n - alpha^n) (alpha(alpha-beta))^C(n,2)"] = [=](long n) {
            return std::pair{Integer(beta * h(n)), Integer((ipow(d, n) - ipow(alpha, n)) * ipow(q, c2(n)))};
        };
        m["h**[n] = (alpha-beta)^(n+1) (alpha(alpha-beta))^C(n+1,2)"] = [=](long n) {
            return std::pair{hss(n), Integer(ipow(d, n + 1) * ipow(q, c2(n + 1)))};
        };
        m["beta h[n+1] = ((alpha-beta)^(n+1) - alpha^(n+1)) h*[n]"] = [=](long n) {
            return std::pair{Integer(beta * h(n + 1)), Integer((ipow(d, n + 1) - ipow(alpha, n + 1)) * hs(n))};
        };
        m["h**[n] = (alpha-beta)^(n+1) h*[n]"] = [=](long n) {
            return std::pair{hss(n), Integer(ipow(d, n + 1) * hs(n))};
        };
        break;
    }
    case ConjectureId::conjecture8: {
        m["h[n] = -n alpha^(n^2-1)"] = [=](long n) {
            return std::pair{h(n), n == 0 ? Integer(0) : Integer(-n * ipow(alpha, n * n - 1))};
        };
        m["h*[n] = alpha^(n(n+1))"] = [=](long n) { return std::pair{hs(n), ipow(alpha, n * (n + 1))}; };
        m["h**[n] = alpha^((n+1)^2)"] = [=](long n) { return std::pair{hss(n), ipow(alpha, (n + 1) * (n + 1))}; };
        m["h[n+1] = -(n+1) alpha^n h*[n]"] = [=](long n) {
            return std::pair{h(n + 1), Integer(-(n + 1) * ipow(alpha, n) * hs(n))};
        };
        m["h**[n] = alpha^(n+1) h*[n]"] = [=](long n) {
            return std::pair{hss(n), Integer(ipow(alpha, n + 1) * hs(n))};
        };
        m["hankel(C(n) - 0^n)[n] = -n"] = [=](long n) {
            std::vector<Integer> t(u.begin() + 1, u.end());
            t[0] = 0;
            return std::pair{hankel_det(IntegerSequence(t), 0, n), Integer(-n)};
        };
        break;
    }
    default: break;
    }
    return m;
}

void recheck_random(const ConjectureReport& r, std::mt19937_64& rng, int samples = 10) {
    const auto m = recomputers(r);
    REQUIRE(!r.checks.empty());
    for (int s = 0; s < samples; ++s) {
        const Check& c = r.checks[rng() % r.checks.size()];
        CAPTURE(c.claim);
        CAPTURE(c.n);
        const auto it = m.find(c.claim);
        REQUIRE(it != m.end());
        const auto [lhs, rhs] = it->second(static_cast<long>(c.n));
        CHECK(lhs == c.lhs);
        CHECK(rhs == c.rhs);
        CHECK(c.pass == (c.lhs == c.rhs));
    }
}

// Coefficients of (1 - a x)^p (1 + a x)^q by repeated multiplication.
oracle::Coeffs binomial_product(long a, unsigned p, unsigned q) {
    const std::size_t degree = p + q;
    oracle::Coeffs r{1};
    for (unsigned i = 0; i < p; ++i) r = oracle::mul(r, oracle::ints({1, -a}), degree);
    for (unsigned i = 0; i < q; ++i) r = oracle::mul(r, oracle::ints({1, a}), degree);
    r.resize(degree + 1, Rational(0));
    return r;
}

} // namespace

TEST_CASE("verify_conjecture4") {
    const ConjectureReport r = verify_conjecture4(-3, -5, 5);
    CHECK(r.all_pass());
    CHECK(h_star_of(r, "h*[n] = beta^C(n+1,2)") ==
          IntegerSequence{1, -5, -125, 15625, 9765625, Integer("-30517578125")});
    CHECK(count_claims(r, "h*[n] = beta^C(n+1,2)") == 6);
    CHECK(count_claims(r, "(-1)^(n+1) h[n+1] = a[n+1] h*[n]") == 5);
    CHECK(r.sequence.size() == 13);
    CHECK(r.sequence.prefix(7) == IntegerSequence{0, 1, -3, 4, 18, -139, 357});

    CHECK(verify_conjecture4(2, 3, 6).all_pass());
    CHECK_THROWS_WITH_AS(verify_conjecture4(1, 0, 3), "beta must be nonzero", PreconditionError);
    CHECK_THROWS_AS(verify_conjecture4(1, 1, 0), PreconditionError);
}

TEST_CASE("verify_conjecture6") {
    const ConjectureReport r = verify_conjecture6(2, 1, 6);
    CHECK(r.all_pass());
    CHECK(r.sequence.prefix(4) == IntegerSequence{0, 1, 1, 3});
    std::vector<Integer> expected;
    for (long n = 0; n <= 6; ++n) {
        expected.push_back(ipow(2, c2(n + 1)));
    }
    CHECK(h_star_of(r, "h*[n] = (alpha(alpha-beta))^C(n+1,2)") == IntegerSequence(expected));

    const ConjectureReport degenerate = verify_conjecture6(1, 1, 4);
    CHECK(degenerate.all_pass());
    CHECK(h_star_of(degenerate, "h*[n] = (alpha(alpha-beta))^C(n+1,2)") == IntegerSequence{1, 0, 0, 0, 0});

    CHECK_THROWS_WITH_AS(verify_conjecture6(0, 2, 3), "alpha must be nonzero", PreconditionError);
    CHECK_THROWS_AS(verify_conjecture6(2, 0, 3), PreconditionError);
}

TEST_CASE("verify_conjecture8") {
    const ConjectureReport one = verify_conjecture8(1, 4);
    CHECK(one.all_pass());
    CHECK(h_star_of(one, "h[n] = -n alpha^(n^2-1)") == IntegerSequence{0, -1, -2, -3, -4});
    CHECK(h_star_of(one, "h*[n] = alpha^(n(n+1))") == IntegerSequence{1, 1, 1, 1, 1});
    CHECK(h_star_of(one, "h**[n] = alpha^((n+1)^2)") == IntegerSequence{1, 1, 1, 1, 1});
    CHECK(h_star_of(one, "hankel(C(n) - 0^n)[n] = -n") == IntegerSequence{0, -1, -2, -3, -4});
    CHECK(one.notes.size() == 1);

    const ConjectureReport two = verify_conjecture8(2, 3);
    CHECK(two.all_pass());
    CHECK(h_star_of(two, "h*[n] = alpha^(n(n+1))") == IntegerSequence{1, 4, 64, 4096});
    CHECK(two.notes.empty());

    const ConjectureReport neg = verify_conjecture8(-1, 4);
    CHECK(neg.all_pass());
    CHECK(h_star_of(neg, "h[n] = -n alpha^(n^2-1)") == IntegerSequence{0, -1, 2, -3, 4});

    CHECK_THROWS_AS(verify_conjecture8(0, 3), PreconditionError);
}

TEST_CASE("verify_alpha_shift") {
    const ConjectureReport r = verify_alpha_shift(-3, -5, 10);
    CHECK(r.all_pass());
    CHECK(r.sequence.prefix(6) == IntegerSequence{1, -3, 4, 18, -139, 357});
    CHECK(count_claims(r, "binomial(u*(alpha))[n] = u*(alpha+1)[n]") == 11);
    CHECK(count_claims(r, "hankel(u*(alpha))[n] = hankel(u*(alpha+1))[n]") == 5);
    CHECK(verify_alpha_shift(0, 1, 8).all_pass());
    CHECK_THROWS_AS(verify_alpha_shift(1, 0, 8), PreconditionError);

    // Zero applications of the transform compare a sequence with itself.
    const IntegerSequence u = family_reversion_sequence({Family::A, 4, -2}, 9).shifted(1);
    CHECK(hankel_transform(u, 3) == hankel_transform(u, 3));
}

TEST_CASE("prop9_T_matrix") {
    CHECK(prop9_T_matrix(1, 3) == SquareMatrix{{1, 0, 0, 0}, {1, 1, 0, 0}, {2, 3, 1, 0}, {5, 9, 5, 1}});
    CHECK(prop9_T_matrix(2, 1) == SquareMatrix{{1, 0}, {2, 2}});
    for (long a : {-3L, -1L, 2L, 5L}) {
        const SquareMatrix t = prop9_T_matrix(a, 7);
        for (std::size_t i = 0; i <= 7; ++i) {
            CHECK(t(i, i) == ipow(a, static_cast<long>(i)));
            for (std::size_t k = i + 1; k <= 7; ++k) {
                CHECK(t(i, k) == 0);
            }
        }
    }
}

TEST_CASE("prop9_verify") {
    const ConjectureReport one = prop9_verify(1, 3);
    CHECK(one.all_pass());
    CHECK(h_star_of(one, "det H_n = alpha^(n(n+1))") == IntegerSequence{1, 1, 1, 1});

    const ConjectureReport two = prop9_verify(2, 2);
    CHECK(two.all_pass());
    CHECK(h_star_of(two, "det H_n = alpha^(n(n+1))").terms().back() == 64);
    CHECK(oracle::det_cofactor(hankel_matrix(two.sequence, 2)) == 64);

    const ConjectureReport neg = prop9_verify(-2, 2);
    CHECK(neg.all_pass());
    CHECK(h_star_of(neg, "det H_n = alpha^(n(n+1))").terms().back() == 64);

    CHECK_THROWS_AS(prop9_verify(0, 2), PreconditionError);
}

TEST_CASE("coefficient identities") {
    CHECK(binomial_product(3, 2, 0)[1] == -6);
    CHECK(prop9_coeff_identity_1(0, 0, 3));
    CHECK(binomial_product(1, 2, 2)[2] == -2);
    CHECK(prop9_coeff_identity_1(1, 0, 1));
    CHECK(prop9_coeff_identity_1(2, 1, 2));

    CHECK(prop9_coeff_identity_2(2, 0, 5));
    CHECK(binomial_product(1, 1, 2)[1] == 1);
    CHECK(prop9_coeff_identity_2(1, 1, 1));
    CHECK(prop9_coeff_identity_2(3, 4, 2));
    CHECK_THROWS_AS(prop9_coeff_identity_2(1, 4, 1), PreconditionError);

    for (long a = -4; a <= 4; ++a) {
        for (std::size_t i = 0; i <= 5; ++i) {
            for (std::size_t j = 0; j <= 4; ++j) {
                CHECK(prop9_coeff_identity_1(i, j, a));
                const oracle::Coeffs p = binomial_product(a, 2, static_cast<unsigned>(2 * i + 2 * j));
                CHECK(p[i + j + 1] == -2 * oracle::catalan_table(i + j + 1)[i + j] * ipow(a, static_cast<long>(i + j + 1)));
            }
            for (std::size_t k = 0; k <= 2 * i + 1; ++k) {
                CHECK(prop9_coeff_identity_2(i, k, a));
            }
        }
    }
}

TEST_CASE("sweep") {
    const SweepResult four = sweep(ConjectureId::conjecture4, {-5, 5}, {-5, 5}, 6);
    CHECK(four.grid.size() == 110);
    CHECK(four.reports.size() == 110);
    CHECK(four.skipped.size() == 11);
    CHECK(four.counterexamples.empty());

    const SweepResult eight = sweep(ConjectureId::conjecture8, {-3, 3}, {0, 0}, 6);
    CHECK(eight.reports.size() == 6);
    CHECK(eight.counterexamples.empty());

    const SweepResult empty = sweep(ConjectureId::conjecture4, {-2, 2}, {0, 0}, 4);
    CHECK(empty.grid.empty());
    CHECK(empty.reports.empty());
    CHECK(empty.counterexamples.empty());
    CHECK(empty.skipped.size() == 5);
    CHECK(empty.skipped.front().reason == "beta must be nonzero");

    CHECK(sweep(ConjectureId::conjecture6, {-3, 3}, {-3, 3}, 5).counterexamples.empty());
    CHECK(sweep(ConjectureId::prop9, {-3, 3}, {0, 0}, 4).counterexamples.empty());
    CHECK(sweep(ConjectureId::alpha_shift, {-3, 3}, {-3, 3}, 10).counterexamples.empty());

    CHECK_THROWS_AS(sweep(ConjectureId::conjecture4, {1, 0}, {1, 1}, 3), std::invalid_argument);
}

TEST_CASE("property: threaded sweep matches the sequential one") {
    const SweepResult seq = sweep(ConjectureId::conjecture6, {-4, 4}, {-4, 4}, 5);
    const SweepResult par = sweep(ConjectureId::conjecture6, {-4, 4}, {-4, 4}, 5, SweepOptions{4});
    REQUIRE(seq.reports.size() == par.reports.size());
    for (std::size_t i = 0; i < seq.reports.size(); ++i) {
        CHECK(seq.reports[i].params.alpha == par.reports[i].params.alpha);
        CHECK(seq.reports[i].params.beta == par.reports[i].params.beta);
        CHECK(seq.reports[i].sequence == par.reports[i].sequence);
        REQUIRE(seq.reports[i].checks.size() == par.reports[i].checks.size());
        for (std::size_t k = 0; k < seq.reports[i].checks.size(); ++k) {
            CHECK(seq.reports[i].checks[k].lhs == par.reports[i].checks[k].lhs);
        }
    }
    CHECK(seq.skipped.size() == par.skipped.size());
}

TEST_CASE("property: report checks can be recomputed from the stored sequence") {
    std::mt19937_64 rng(616);
    for (const auto& r : sweep(ConjectureId::conjecture4, {-4, 4}, {-3, 3}, 5).reports) {
        recheck_random(r, rng);
    }
    for (const auto& r : sweep(ConjectureId::conjecture6, {-3, 3}, {-3, 3}, 5).reports) {
        recheck_random(r, rng);
    }
    for (const auto& r : sweep(ConjectureId::conjecture8, {-3, 3}, {0, 0}, 5).reports) {
        recheck_random(r, rng);
    }
}

TEST_CASE("property: failing checks are exactly the counterexamples") {
    SweepResult s = sweep(ConjectureId::conjecture8, {1, 3}, {0, 0}, 3);
    ConjectureReport& r = s.reports[1];
    r.add_check(0, "synthetic", 1, 2);
    CHECK(!r.all_pass());
    CHECK(s.reports[0].all_pass());
}

TEST_CASE("property: h* for family A does not depend on alpha") {
    for (long b = -4; b <= 4; ++b) {
        if (b == 0) {
            continue;
        }
        for (long a = -4; a <= 4; ++a) {
            const auto label = "h*[n] = beta^C(n+1,2)";
            CHECK(h_star_of(verify_conjecture4(a, b, 5), label) == h_star_of(verify_conjecture4(a + 7, b, 5), label));
        }
    }
}

TEST_CASE("conjecture ids") {
    CHECK(parse_conjecture_id("prop9") == ConjectureId::prop9);
    CHECK(parse_conjecture_id("9") == ConjectureId::prop9);
    CHECK(to_string(ConjectureId::alpha_shift) == "alpha_shift");
    CHECK_THROWS_AS(parse_conjecture_id("5"), std::invalid_argument);
    CHECK(precondition_violation(ConjectureId::prop9, 1, 0, 0) == std::nullopt);
    CHECK(precondition_violation(ConjectureId::conjecture4, 1, 1, 0) == std::string("depth must be at least 1"));
}
