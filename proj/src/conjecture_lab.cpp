#include <hankelkit/conjecture_lab.hpp>

#include <atomic>
#include <exception>
#include <thread>
#include <utility>

#include <hankelkit/power_series.hpp>

namespace hankelkit {

namespace {

// C(m, 2)
unsigned long choose2(std::size_t m) { return static_cast<unsigned long>(m * (m == 0 ? 0 : m - 1) / 2); }

void require(const std::optional<std::string>& violation) {
    if (violation) {
        throw PreconditionError(*violation);
    }
}

std::vector<Integer> integers(const PowerSeries& s) { return integer_coefficients(s); }

} // namespace

std::string to_string(ConjectureId id) {
    switch (id) {
    case ConjectureId::conjecture4: return "4";
    case ConjectureId::conjecture6: return "6";
    case ConjectureId::conjecture8: return "8";
    case ConjectureId::prop9: return "prop9";
    case ConjectureId::alpha_shift: return "alpha_shift";
    }
    return "?";
}

ConjectureId parse_conjecture_id(std::string_view text) {
    if (text == "4") return ConjectureId::conjecture4;
    if (text == "6") return ConjectureId::conjecture6;
    if (text == "8") return ConjectureId::conjecture8;
    if (text == "prop9" || text == "9") return ConjectureId::prop9;
    if (text == "alpha_shift" || text == "alpha-shift") return ConjectureId::alpha_shift;
    throw std::invalid_argument("unknown conjecture '" + std::string(text) +
                                "' (expected 4, 6, 8, prop9 or alpha_shift)");
}

void ConjectureReport::add_check(std::size_t n, std::string claim, Integer lhs, Integer rhs) {
    const bool pass = lhs == rhs;
    checks.push_back(Check{n, std::move(claim), std::move(lhs), std::move(rhs), pass});
}

std::optional<std::string> precondition_violation(ConjectureId id, const Integer& alpha, const Integer& beta,
                                                  std::size_t depth) {
    switch (id) {
    case ConjectureId::conjecture4:
        if (beta == 0) return "beta must be nonzero";
        break;
    case ConjectureId::conjecture6:
        if (alpha == 0) return "alpha must be nonzero";
        if (beta == 0) return "beta must be nonzero";
        break;
    case ConjectureId::conjecture8:
    case ConjectureId::prop9:
        if (alpha == 0) return "alpha must be nonzero";
        break;
    case ConjectureId::alpha_shift:
        if (beta == 0) return "beta must be nonzero";
        break;
    }
    if (depth < 1 && id != ConjectureId::prop9) {
        return id == ConjectureId::alpha_shift ? "order must be at least 1" : "depth must be at least 1";
    }
    return std::nullopt;
}

ConjectureReport verify_conjecture4(const Integer& alpha, const Integer& beta, std::size_t depth) {
    require(precondition_violation(ConjectureId::conjecture4, alpha, beta, depth));
    ConjectureReport r;
    r.conjecture = ConjectureId::conjecture4;
    r.params = FamilyParams{Family::A, alpha, beta};
    r.depth = depth;
    r.sequence = family_reversion_sequence(r.params, 2 * depth + 3);
    const HankelTriple t = hankel_triple(r.sequence, depth);

    std::vector<Integer> a;
    for (std::size_t n = 0; n <= depth + 2; ++n) {
        a.push_back(family_a_term(r.params, n));
    }

    for (std::size_t n = 0; n <= depth; ++n) {
        r.add_check(n, "h*[n] = beta^C(n+1,2)", t.h_star[n], pow(beta, choose2(n + 1)));
    }
    for (std::size_t n = 0; n <= depth; ++n) {
        r.add_check(n, "h[n] = (-1)^n beta^C(n,2) a[n]", t.h[n], sign_power(n) * pow(beta, choose2(n)) * a[n]);
    }
    for (std::size_t n = 0; n <= depth; ++n) {
        r.add_check(n, "h**[n] = (-1)^(n+1) beta^C(n+1,2) a[n+2]", t.h_star_star[n],
                    sign_power(n + 1) * pow(beta, choose2(n + 1)) * a[n + 2]);
    }
    for (std::size_t n = 0; n < depth; ++n) {
        r.add_check(n, "(-1)^(n+1) h[n+1] = a[n+1] h*[n]", sign_power(n + 1) * t.h[n + 1], a[n + 1] * t.h_star[n]);
    }
    for (std::size_t n = 0; n < depth; ++n) {
        r.add_check(n, "(-1)^(n+1) h**[n] = a[n+2] h*[n]", sign_power(n + 1) * t.h_star_star[n],
                    a[n + 2] * t.h_star[n]);
    }
    return r;
}

ConjectureReport verify_conjecture6(const Integer& alpha, const Integer& beta, std::size_t depth) {
    require(precondition_violation(ConjectureId::conjecture6, alpha, beta, depth));
    ConjectureReport r;
    r.conjecture = ConjectureId::conjecture6;
    r.params = FamilyParams{Family::B, alpha, beta};
    r.depth = depth;
    r.sequence = family_reversion_sequence(r.params, 2 * depth + 3);
    const HankelTriple t = hankel_triple(r.sequence, depth);

    const Integer diff = alpha - beta;
    const Integer ratio = alpha * diff;
    for (std::size_t n = 0; n <= depth; ++n) {
        r.add_check(n, "h*[n] = (alpha(alpha-beta))^C(n+1,2)", t.h_star[n], pow(ratio, choose2(n + 1)));
    }
    for (std::size_t n = 0; n <= depth; ++n) {
        r.add_check(n, "beta h[n] = ((alpha-beta)^n - alpha^n) (alpha(alpha-beta))^C(n,2)", beta * t.h[n],
                    (pow(diff, n) - pow(alpha, n)) * pow(ratio, choose2(n)));
    }
    for (std::size_t n = 0; n <= depth; ++n) {
        r.add_check(n, "h**[n] = (alpha-beta)^(n+1) (alpha(alpha-beta))^C(n+1,2)", t.h_star_star[n],
                    pow(diff, n + 1) * pow(ratio, choose2(n + 1)));
    }
    for (std::size_t n = 0; n < depth; ++n) {
        r.add_check(n, "beta h[n+1] = ((alpha-beta)^(n+1) - alpha^(n+1)) h*[n]", beta * t.h[n + 1],
                    (pow(diff, n + 1) - pow(alpha, n + 1)) * t.h_star[n]);
    }
    for (std::size_t n = 0; n < depth; ++n) {
        r.add_check(n, "h**[n] = (alpha-beta)^(n+1) h*[n]", t.h_star_star[n], pow(diff, n + 1) * t.h_star[n]);
    }
    return r;
}

ConjectureReport verify_conjecture8(const Integer& alpha, std::size_t depth) {
    require(precondition_violation(ConjectureId::conjecture8, alpha, 0, depth));
    ConjectureReport r;
    r.conjecture = ConjectureId::conjecture8;
    r.params = FamilyParams{Family::C, alpha, 0};
    r.depth = depth;
    r.sequence = family_reversion_sequence(r.params, 2 * depth + 3);
    const HankelTriple t = hankel_triple(r.sequence, depth);

    for (std::size_t n = 0; n <= depth; ++n) {
        // n = 0 has the factor 0 in front of alpha^{-1}.
        Integer expected = n == 0 ? Integer(0) : Integer(-static_cast<long>(n) * pow(alpha, n * n - 1));
        r.add_check(n, "h[n] = -n alpha^(n^2-1)", t.h[n], std::move(expected));
    }
    for (std::size_t n = 0; n <= depth; ++n) {
        r.add_check(n, "h*[n] = alpha^(n(n+1))", t.h_star[n], pow(alpha, n * (n + 1)));
    }
    for (std::size_t n = 0; n <= depth; ++n) {
        r.add_check(n, "h**[n] = alpha^((n+1)^2)", t.h_star_star[n], pow(alpha, (n + 1) * (n + 1)));
    }
    for (std::size_t n = 0; n < depth; ++n) {
        r.add_check(n, "h[n+1] = -(n+1) alpha^n h*[n]", t.h[n + 1],
                    -static_cast<long>(n + 1) * pow(alpha, n) * t.h_star[n]);
    }
    for (std::size_t n = 0; n < depth; ++n) {
        r.add_check(n, "h**[n] = alpha^(n+1) h*[n]", t.h_star_star[n], pow(alpha, n + 1) * t.h_star[n]);
    }

    if (alpha == 1) {
        // C(n) - 0^n = 0, 1, 2, 5, 14, ... is u shifted by one with a_0 zeroed.
        std::vector<Integer> terms(r.sequence.begin() + 1, r.sequence.end());
        terms[0] = 0;
        const IntegerSequence h = hankel_transform(IntegerSequence(std::move(terms)), depth);
        for (std::size_t n = 0; n <= depth; ++n) {
            r.add_check(n, "hankel(C(n) - 0^n)[n] = -n", h[n], Integer(-static_cast<long>(n)));
        }
        r.notes.push_back("C(n) - 0^n (0, 1, 2, 5, 14, ...) has Hankel transform -n; "
                          "the often-quoted value n has the wrong sign");
    }
    return r;
}

ConjectureReport verify_alpha_shift(const Integer& alpha, const Integer& beta, std::size_t order) {
    require(precondition_violation(ConjectureId::alpha_shift, alpha, beta, order));
    ConjectureReport r;
    r.conjecture = ConjectureId::alpha_shift;
    r.params = FamilyParams{Family::A, alpha, beta};
    r.depth = order;

    const FamilyParams shifted{Family::A, alpha + 1, beta};
    // o.g.f. of u_{n+1}: the closed-form reversion divided by x.
    const PowerSeries base = shift_down(family_a_reversion_ogf(r.params, order + 1), 1);
    const PowerSeries target = shift_down(family_a_reversion_ogf(shifted, order + 1), 1);
    const std::vector<Integer> lhs = integers(binomial_ogf(base));
    const std::vector<Integer> rhs = integers(target);
    r.sequence = IntegerSequence(integers(base));

    for (std::size_t n = 0; n <= order; ++n) {
        r.add_check(n, "binomial(u*(alpha))[n] = u*(alpha+1)[n]", lhs[n], rhs[n]);
    }
    const std::size_t depth = (order - 1) / 2;
    const IntegerSequence h_base = hankel_transform(r.sequence, depth);
    const IntegerSequence h_target = hankel_transform(IntegerSequence(rhs), depth);
    for (std::size_t n = 0; n <= depth; ++n) {
        r.add_check(n, "hankel(u*(alpha))[n] = hankel(u*(alpha+1))[n]", h_base[n], h_target[n]);
    }
    return r;
}

SquareMatrix prop9_T_matrix(const Integer& alpha, std::size_t n) {
    SquareMatrix t(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        const Integer scale = pow(alpha, i);
        for (std::size_t k = 0; k <= i; ++k) {
            const Rational entry = make_rational(binomial(2 * i, i + k) * (2 * k + 1), Integer(i + k + 1));
            if (!is_integral(entry)) {
                throw std::logic_error("T entry (" + std::to_string(i) + ", " + std::to_string(k) +
                                       ") is not an integer");
            }
            t(i, k) = entry.get_num() * scale;
        }
    }
    return t;
}

ConjectureReport prop9_verify(const Integer& alpha, std::size_t n) {
    require(precondition_violation(ConjectureId::prop9, alpha, 0, n));
    ConjectureReport r;
    r.conjecture = ConjectureId::prop9;
    r.params = FamilyParams{Family::C, alpha, 0};
    r.depth = n;

    std::vector<Integer> terms;
    for (std::size_t k = 0; k <= 2 * n; ++k) {
        terms.push_back(catalan(k) * pow(alpha, k));
    }
    r.sequence = IntegerSequence(std::move(terms));

    const SquareMatrix h = hankel_matrix(r.sequence, n);
    const SquareMatrix t = prop9_T_matrix(alpha, n);
    const SquareMatrix product = t * t.transposed();
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j <= n; ++j) {
            r.add_check(i, "H[n][j] = (T T^T)[n][j], j=" + std::to_string(j), h(i, j), product(i, j));
        }
    }
    for (std::size_t m = 0; m <= n; ++m) {
        r.add_check(m, "det H_n = alpha^(n(n+1))", det_exact(hankel_matrix(r.sequence, m)), pow(alpha, m * (m + 1)));
    }
    for (std::size_t m = 0; m <= n; ++m) {
        SquareMatrix leading(m + 1);
        Integer diagonal = 1;
        for (std::size_t i = 0; i <= m; ++i) {
            for (std::size_t k = 0; k <= m; ++k) {
                leading(i, k) = t(i, k);
            }
            diagonal *= t(i, i);
        }
        r.add_check(m, "det T_n = alpha^C(n+1,2)", det_exact(leading), pow(alpha, choose2(m + 1)));
        r.add_check(m, "prod diag T_n = alpha^C(n+1,2)", diagonal, pow(alpha, choose2(m + 1)));
    }
    return r;
}

bool prop9_coeff_identity_1(std::size_t i, std::size_t j, const Integer& alpha) {
    const std::size_t degree = 2 * i + 2 * j + 2;
    const Rational a(alpha);
    const PowerSeries one_minus = PowerSeries({1, -a}).with_order(degree);
    const PowerSeries one_plus = PowerSeries({1, a}).with_order(degree);
    const PowerSeries product = power(one_minus, 2) * power(one_plus, 2 * i + 2 * j);
    const Rational expected(-2 * catalan(i + j) * pow(alpha, i + j + 1));
    return product[i + j + 1] == expected;
}

bool prop9_coeff_identity_2(std::size_t i, std::size_t k, const Integer& alpha) {
    if (k > 2 * i + 1) {
        throw PreconditionError("k must be at most 2i+1");
    }
    const std::size_t degree = 2 * i + 1;
    const Rational a(alpha);
    const PowerSeries one_minus = PowerSeries({1, -a}).with_order(degree);
    const PowerSeries one_plus = PowerSeries({1, a}).with_order(degree);
    const Rational coefficient = (one_minus * power(one_plus, 2 * i))[k];

    const Integer alpha_k = pow(alpha, k);
    const Rational bracket((binomial(2 * i, k) - binomial(2 * i, static_cast<long>(k) - 1)) * alpha_k);

    const long numer = static_cast<long>(2 * i) - 2 * static_cast<long>(k) + 1;
    const long denom = static_cast<long>(2 * i) - static_cast<long>(k) + 1;
    Rational quotient;
    if (denom != 0) {
        quotient = make_rational(binomial(2 * i, k) * numer, Integer(denom)) * Rational(alpha_k);
    } else {
        quotient = make_rational(binomial(2 * i + 1, k) * numer, Integer(2 * i + 1)) * Rational(alpha_k);
    }
    return coefficient == bracket && coefficient == quotient;
}

ConjectureReport verify(ConjectureId id, const Integer& alpha, const Integer& beta, std::size_t depth) {
    switch (id) {
    case ConjectureId::conjecture4: return verify_conjecture4(alpha, beta, depth);
    case ConjectureId::conjecture6: return verify_conjecture6(alpha, beta, depth);
    case ConjectureId::conjecture8: return verify_conjecture8(alpha, depth);
    case ConjectureId::prop9: return prop9_verify(alpha, depth);
    case ConjectureId::alpha_shift: return verify_alpha_shift(alpha, beta, depth);
    }
    throw std::logic_error("unknown conjecture id");
}

SweepResult sweep(ConjectureId id, IntRange alpha, IntRange beta, std::size_t depth, const SweepOptions& options) {
    if (alpha.lo > alpha.hi || beta.lo > beta.hi) {
        throw std::invalid_argument("parameter ranges must be non-empty");
    }
    const bool uses_beta = id != ConjectureId::conjecture8 && id != ConjectureId::prop9;
    SweepResult result;
    result.conjecture = id;
    result.depth = depth;
    for (long a = alpha.lo; a <= alpha.hi; ++a) {
        const long b_lo = uses_beta ? beta.lo : 0;
        const long b_hi = uses_beta ? beta.hi : 0;
        for (long b = b_lo; b <= b_hi; ++b) {
            const Family family = id == ConjectureId::conjecture6 ? Family::B
                                  : uses_beta                     ? Family::A
                                                                  : Family::C;
            FamilyParams p{family, Integer(a), Integer(b)};
            if (auto why = precondition_violation(id, p.alpha, p.beta, depth)) {
                result.skipped.push_back(SkippedPoint{std::move(p), std::move(*why)});
            } else {
                result.grid.push_back(std::move(p));
            }
        }
    }

    result.reports.resize(result.grid.size());
    std::vector<std::exception_ptr> errors(result.grid.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < result.grid.size(); i = next++) {
            const FamilyParams& p = result.grid[i];
            try {
                result.reports[i] = verify(id, p.alpha, p.beta, depth);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned threads = std::max(1U, options.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }

    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    for (const auto& report : result.reports) {
        if (!report.all_pass()) {
            result.counterexamples.push_back(report);
        }
    }
    return result;
}

} // namespace hankelkit
