#ifndef HANKELKIT_GF_EXPRESSION_HPP
#define HANKELKIT_GF_EXPRESSION_HPP

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include <hankelkit/numeric.hpp>
#include <hankelkit/power_series.hpp>

namespace hankelkit {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t offset)
        : std::invalid_argument(message + " at offset " + std::to_string(offset)), offset_(offset) {}

    // Byte offset into the parsed text.
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/*
 * Immutable expression tree for generating functions in one variable x.
 *
 * Node kinds: non-negative integer literal, the variable x, the binary
 * operators + - * /, a power with a non-negative integer literal exponent,
 * and sqrt. Unary minus has no node of its own; it is represented as 0 - e.
 * Copies share subtrees.
 */
class GfExpression {
public:
    enum class Kind { literal, variable, add, subtract, multiply, divide, power, sqrt };

    static GfExpression literal(Integer value);
    static GfExpression variable();
    static GfExpression binary(Kind kind, GfExpression lhs, GfExpression rhs);
    static GfExpression power(GfExpression base, unsigned long exponent);
    static GfExpression sqrt(GfExpression operand);

    Kind kind() const noexcept { return kind_; }
    const Integer& value() const { return value_; }
    unsigned long exponent() const noexcept { return exponent_; }
    const GfExpression& lhs() const { return *lhs_; }
    const GfExpression& rhs() const { return *rhs_; }
    // Operand of power and sqrt nodes.
    const GfExpression& operand() const { return *lhs_; }

    // True when the tree only uses literals, x, +, -, * and ^.
    bool is_polynomial() const;

    friend bool operator==(const GfExpression& a, const GfExpression& b);

private:
    GfExpression() = default;

    Kind kind_ = Kind::literal;
    Integer value_;
    unsigned long exponent_ = 0;
    std::shared_ptr<const GfExpression> lhs_;
    std::shared_ptr<const GfExpression> rhs_;
};

// Grammar (whitespace insignificant):
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := base ('^' uint)?
//   base   := uint | 'x' | '(' expr ')' | 'sqrt' '(' expr ')'
// A leading '-' applies to the first term: "-a+b" is (0-a)+b.
GfExpression parse_gf(std::string_view text);

// Fully parenthesized text; parse_gf(print_gf(e)) == e.
std::string print_gf(const GfExpression& e);

// Exact series value to the given order. Division by a series whose
// lowest nonzero term is x^v (v > 0) is allowed when the dividend is also
// divisible by x^v; operands are then evaluated v orders deeper so the
// quotient stays exact. Errors: SeriesError("non-invertible series"),
// SeriesError("sqrt requires unit constant term").
PowerSeries eval_gf(const GfExpression& e, std::size_t order);

// Expansion of p/q where both are polynomial expressions.
PowerSeries from_rational(const GfExpression& numerator, const GfExpression& denominator, std::size_t order);

} // namespace hankelkit

#endif
