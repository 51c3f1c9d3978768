#ifndef HANKELKIT_FAMILIES_HPP
#define HANKELKIT_FAMILIES_HPP

#include <cstddef>
#include <string>

#include <hankelkit/hankel.hpp>
#include <hankelkit/numeric.hpp>
#include <hankelkit/power_series.hpp>

namespace hankelkit {

/*
 * The three parametric o.g.f. families and their series reversions:
 *
 *   A:  x / (1 + alpha x + beta x^2)
 *   B:  x (1 - alpha x) / (1 - beta x)
 *   C:  x (1 - alpha x)                (B at beta = 0; beta is ignored)
 *
 * Parameters are integers so that every Hankel entry is an integer.
 */
enum class Family { A, B, C };

struct FamilyParams {
    Family family = Family::A;
    Integer alpha;
    Integer beta;

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

std::string to_string(Family f);
// "A", "B" or "C" (case-insensitive); throws std::invalid_argument.
Family parse_family(std::string_view text);

// Thrown for a parameter or family-tag precondition violation.
class FamilyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// n-th Catalan number C(2n,n)/(n+1).
Integer catalan(std::size_t n);

// Family A -----------------------------------------------------------------

// Coefficient n of x/(1+alpha x+beta x^2):
// sum_{k=0}^{floor((n-1)/2)} C(n-1-k, k) (-alpha)^{n-1-2k} (-beta)^k, a_0 = 0.
Integer family_a_term(const FamilyParams& p, std::size_t n);
// Expansion of x/(1+alpha x+beta x^2).
PowerSeries family_a_ogf(const FamilyParams& p, std::size_t order);
// Closed form (1 - alpha x - sqrt(1 - 2 alpha x + (alpha^2 - 4 beta) x^2)) / (2 beta x).
// Requires beta != 0.
PowerSeries family_a_reversion_ogf(const FamilyParams& p, std::size_t order);
// u_n = sum_{k=0}^{floor((n-1)/2)} C(n-1, 2k) C(k) alpha^{n-1-2k} beta^k, u_0 = 0. Any beta.
Integer family_a_reversion_term(const FamilyParams& p, std::size_t n);

// Family B -----------------------------------------------------------------

// Coefficient n of x(1-alpha x)/(1-beta x): 0, 1, then (beta-alpha) beta^{n-2}.
// Requires beta != 0.
Integer family_b_term(const FamilyParams& p, std::size_t n);
PowerSeries family_b_ogf(const FamilyParams& p, std::size_t order);
// Closed form (1 + beta x - sqrt(1 - 2(2 alpha - beta) x + beta^2 x^2)) / (2 alpha).
// Requires alpha != 0.
PowerSeries family_b_reversion_ogf(const FamilyParams& p, std::size_t order);
// u_n = sum_{k=0}^{n-1} C(n+k-1, 2k) C(k) alpha^k (-beta)^{n-k-1}, u_0 = 0.
Integer family_b_reversion_term(const FamilyParams& p, std::size_t n);

// Family C -----------------------------------------------------------------

// Reversion coefficients of x(1 - alpha x): u_0 = 0, u_n = C(n-1) alpha^{n-1}.
// Requires alpha != 0.
Integer family_c_term(const FamilyParams& p, std::size_t n);
// The polynomial x - alpha x^2.
PowerSeries family_c_ogf(const FamilyParams& p, std::size_t order);
// Closed form (1 - sqrt(1 - 4 alpha x)) / (2 alpha). Requires alpha != 0.
PowerSeries family_c_reversion_ogf(const FamilyParams& p, std::size_t order);

// Dispatch on p.family ------------------------------------------------------

// The family's own o.g.f.
PowerSeries family_ogf(const FamilyParams& p, std::size_t order);
// Closed-form o.g.f. of the reversion.
PowerSeries family_reversion_ogf(const FamilyParams& p, std::size_t order);
// Terms u_0 .. u_{length-1} of the reversion from the term formula.
IntegerSequence family_reversion_sequence(const FamilyParams& p, std::size_t length);

} // namespace hankelkit

#endif
