#ifndef HANKELKIT_CONJECTURE_LAB_HPP
#define HANKELKIT_CONJECTURE_LAB_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <hankelkit/families.hpp>
#include <hankelkit/hankel.hpp>
#include <hankelkit/numeric.hpp>

namespace hankelkit {

/*
 * Mechanical checks of the Hankel-ratio identities for the reversions of
 * families A, B and C, and of the T T^T factorization of the Hankel matrix
 * of C(n) alpha^n.
 *
 * Every identity is checked in product form, e.g. (-1)^{n+1} h_{n+1} is
 * compared with a_{n+1} h*_n instead of dividing by h*_n, so checks stay
 * meaningful when h*_n = 0. At depth d, claims that reference h_{n+1} are
 * checked for n = 0..d-1 and all others for n = 0..d.
 */
enum class ConjectureId { conjecture4, conjecture6, conjecture8, prop9, alpha_shift };

// "4", "6", "8", "prop9", "alpha_shift"
std::string to_string(ConjectureId id);
ConjectureId parse_conjecture_id(std::string_view text);

struct Check {
    std::size_t n = 0;
    std::string claim;
    Integer lhs;
    Integer rhs;
    bool pass = false;
};

struct ConjectureReport {
    ConjectureId conjecture = ConjectureId::conjecture4;
    FamilyParams params;
    std::size_t depth = 0;
    // Sequence prefix every check was computed from.
    IntegerSequence sequence;
    std::vector<Check> checks;
    std::vector<std::string> notes;

    void add_check(std::size_t n, std::string claim, Integer lhs, Integer rhs);
    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    }
};

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Reason a parameter point is inadmissible, or nullopt. Conjectures 8 and
// prop9 ignore beta.
std::optional<std::string> precondition_violation(ConjectureId id, const Integer& alpha, const Integer& beta,
                                                  std::size_t depth);

// Family A reversion u, triple (h, h*, h**), a = family A terms:
//   h*_n = beta^C(n+1,2)
//   h_n = (-1)^n beta^C(n,2) a_n,   (-1)^{n+1} h_{n+1} = a_{n+1} h*_n
//   h**_n = (-1)^{n+1} beta^C(n+1,2) a_{n+2},   (-1)^{n+1} h**_n = a_{n+2} h*_n
ConjectureReport verify_conjecture4(const Integer& alpha, const Integer& beta, std::size_t depth);

// Family B reversion, with r = alpha (alpha - beta):
//   h*_n = r^C(n+1,2)
//   beta h_n = ((alpha-beta)^n - alpha^n) r^C(n,2),
//   beta h_{n+1} = ((alpha-beta)^{n+1} - alpha^{n+1}) h*_n
//   h**_n = (alpha-beta)^{n+1} r^C(n+1,2),   h**_n = (alpha-beta)^{n+1} h*_n
ConjectureReport verify_conjecture6(const Integer& alpha, const Integer& beta, std::size_t depth);

// Family C reversion (C(n-1) alpha^{n-1}):
//   h_n = -n alpha^{n^2-1},  h*_n = alpha^{n(n+1)},  h**_n = alpha^{(n+1)^2}
//   h_{n+1} = -(n+1) alpha^n h*_n,  h**_n = alpha^{n+1} h*_n
// At alpha = 1 the report also checks that C(n) - 0^n has Hankel transform -n.
ConjectureReport verify_conjecture8(const Integer& alpha, std::size_t depth);

// Binomial transform of the o.g.f. of u_{n+1} (family A at alpha, beta)
// against the o.g.f. of u_{n+1} at alpha+1, to the given order, plus
// equality of both Hankel transforms to depth floor((order-1)/2).
ConjectureReport verify_alpha_shift(const Integer& alpha, const Integer& beta, std::size_t order);

// T_{i,k} = C(2i, i+k) (2k+1)/(i+k+1) alpha^i for k <= i, else 0.
// Every entry is an integer; a non-integral entry throws std::logic_error.
SquareMatrix prop9_T_matrix(const Integer& alpha, std::size_t n);

// With H[i][j] = C(i+j) alpha^{i+j} for i, j <= n: H = T T^T entrywise,
// det H_m = alpha^{m(m+1)} and det T_m = prod(diag T_m) = alpha^C(m+1,2)
// for every m <= n.
ConjectureReport prop9_verify(const Integer& alpha, std::size_t n);

// [x^{i+j+1}] (1 - alpha x)^2 (1 + alpha x)^{2i+2j} == -2 C(i+j) alpha^{i+j+1}
bool prop9_coeff_identity_1(std::size_t i, std::size_t j, const Integer& alpha);

// [x^k] (1 - alpha x)(1 + alpha x)^{2i} equals both
// (C(2i,k) - C(2i,k-1)) alpha^k and C(2i,k) (2i-2k+1)/(2i-k+1) alpha^k.
// At k = 2i+1 the quotient form is 0/0 and is taken at its continuous
// extension C(2i+1,k) (2i-2k+1)/(2i+1). Requires k <= 2i+1.
bool prop9_coeff_identity_2(std::size_t i, std::size_t k, const Integer& alpha);

struct IntRange {
    long lo = 0;
    long hi = 0;
};

struct SkippedPoint {
    FamilyParams params;
    std::string reason;
};

struct SweepResult {
    ConjectureId conjecture = ConjectureId::conjecture4;
    std::size_t depth = 0;
    // Admissible grid points, alpha-major.
    std::vector<FamilyParams> grid;
    std::vector<ConjectureReport> reports;
    std::vector<ConjectureReport> counterexamples;
    std::vector<SkippedPoint> skipped;
};

struct SweepOptions {
    // Worker threads; reports are collected in grid order regardless.
    unsigned threads = 1;
};

// Runs the verifier over alpha x beta (inclusive ranges). For conjectures 8
// and prop9 the beta range is ignored. For alpha_shift, depth is the order.
SweepResult sweep(ConjectureId id, IntRange alpha, IntRange beta, std::size_t depth, const SweepOptions& options = {});

// Single-point dispatch used by sweep and the CLI.
ConjectureReport verify(ConjectureId id, const Integer& alpha, const Integer& beta, std::size_t depth);

} // namespace hankelkit

#endif
