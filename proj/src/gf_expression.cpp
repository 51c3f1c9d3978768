#include <hankelkit/gf_expression.hpp>

#include <cctype>
#include <limits>
#include <utility>

namespace hankelkit {

GfExpression GfExpression::literal(Integer value) {
    if (value < 0) {
        throw std::invalid_argument("literal must be non-negative");
    }
    GfExpression e;
    e.kind_ = Kind::literal;
    e.value_ = std::move(value);
    return e;
}

GfExpression GfExpression::variable() {
    GfExpression e;
    e.kind_ = Kind::variable;
    return e;
}

GfExpression GfExpression::binary(Kind kind, GfExpression lhs, GfExpression rhs) {
    if (kind != Kind::add && kind != Kind::subtract && kind != Kind::multiply && kind != Kind::divide) {
        throw std::invalid_argument("not a binary operator");
    }
    GfExpression e;
    e.kind_ = kind;
    e.lhs_ = std::make_shared<const GfExpression>(std::move(lhs));
    e.rhs_ = std::make_shared<const GfExpression>(std::move(rhs));
    return e;
}

GfExpression GfExpression::power(GfExpression base, unsigned long exponent) {
    GfExpression e;
    e.kind_ = Kind::power;
    e.exponent_ = exponent;
    e.lhs_ = std::make_shared<const GfExpression>(std::move(base));
    return e;
}

GfExpression GfExpression::sqrt(GfExpression operand) {
    GfExpression e;
    e.kind_ = Kind::sqrt;
    e.lhs_ = std::make_shared<const GfExpression>(std::move(operand));
    return e;
}

bool GfExpression::is_polynomial() const {
    switch (kind_) {
    case Kind::literal:
    case Kind::variable:
        return true;
    case Kind::add:
    case Kind::subtract:
    case Kind::multiply:
        return lhs_->is_polynomial() && rhs_->is_polynomial();
    case Kind::power:
        return lhs_->is_polynomial();
    case Kind::divide:
    case Kind::sqrt:
        return false;
    }
    return false;
}

bool operator==(const GfExpression& a, const GfExpression& b) {
    if (a.kind_ != b.kind_) {
        return false;
    }
    switch (a.kind_) {
    case GfExpression::Kind::literal:
        return a.value_ == b.value_;
    case GfExpression::Kind::variable:
        return true;
    case GfExpression::Kind::power:
        return a.exponent_ == b.exponent_ && *a.lhs_ == *b.lhs_;
    case GfExpression::Kind::sqrt:
        return *a.lhs_ == *b.lhs_;
    default:
        return *a.lhs_ == *b.lhs_ && *a.rhs_ == *b.rhs_;
    }
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    GfExpression parse() {
        GfExpression e = expr();
        skip_ws();
        if (!at_end()) {
            fail(std::string("unexpected '") + text_[pos_] + "'");
        }
        return e;
    }

private:
    using Kind = GfExpression::Kind;

    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

    bool at_end() const { return pos_ >= text_.size(); }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c) {
        skip_ws();
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    bool at_digit() const { return !at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

    std::string_view digits() {
        std::size_t start = pos_;
        while (at_digit()) {
            ++pos_;
        }
        return text_.substr(start, pos_ - start);
    }

    GfExpression expr() {
        GfExpression lhs = accept('-') ? GfExpression::binary(Kind::subtract, GfExpression::literal(0), term())
                                       : term();
        for (;;) {
            if (accept('+')) {
                lhs = GfExpression::binary(Kind::add, std::move(lhs), term());
            } else if (accept('-')) {
                lhs = GfExpression::binary(Kind::subtract, std::move(lhs), term());
            } else {
                return lhs;
            }
        }
    }

    GfExpression term() {
        GfExpression lhs = factor();
        for (;;) {
            if (accept('*')) {
                lhs = GfExpression::binary(Kind::multiply, std::move(lhs), factor());
            } else if (accept('/')) {
                lhs = GfExpression::binary(Kind::divide, std::move(lhs), factor());
            } else {
                return lhs;
            }
        }
    }

    GfExpression factor() {
        GfExpression b = base();
        if (!accept('^')) {
            return b;
        }
        skip_ws();
        if (!at_digit()) {
            fail("exponent must be a non-negative integer literal");
        }
        std::size_t start = pos_;
        Integer e(std::string(digits()), 10);
        if (e > std::numeric_limits<unsigned long>::max()) {
            pos_ = start;
            fail("exponent too large");
        }
        return GfExpression::power(std::move(b), e.get_ui());
    }

    GfExpression base() {
        skip_ws();
        if (at_end()) {
            fail("unexpected end of input");
        }
        if (at_digit()) {
            return GfExpression::literal(Integer(std::string(digits()), 10));
        }
        if (accept('(')) {
            GfExpression inner = expr();
            expect(')');
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            std::size_t start = pos_;
            while (!at_end() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            std::string_view word = text_.substr(start, pos_ - start);
            if (word == "x") {
                return GfExpression::variable();
            }
            if (word == "sqrt") {
                expect('(');
                GfExpression arg = expr();
                expect(')');
                return GfExpression::sqrt(std::move(arg));
            }
            pos_ = start;
            fail("unknown identifier '" + std::string(word) + "'");
        }
        fail(std::string("unexpected '") + text_[pos_] + "'");
    }
};

char operator_symbol(GfExpression::Kind kind) {
    switch (kind) {
    case GfExpression::Kind::add: return '+';
    case GfExpression::Kind::subtract: return '-';
    case GfExpression::Kind::multiply: return '*';
    default: return '/';
    }
}

} // namespace

GfExpression parse_gf(std::string_view text) { return Parser(text).parse(); }

std::string print_gf(const GfExpression& e) {
    using Kind = GfExpression::Kind;
    switch (e.kind()) {
    case Kind::literal:
        return e.value().get_str();
    case Kind::variable:
        return "x";
    case Kind::power:
        return "(" + print_gf(e.operand()) + ")^" + std::to_string(e.exponent());
    case Kind::sqrt:
        return "sqrt(" + print_gf(e.operand()) + ")";
    default:
        return "(" + print_gf(e.lhs()) + operator_symbol(e.kind()) + print_gf(e.rhs()) + ")";
    }
}

PowerSeries eval_gf(const GfExpression& e, std::size_t order) {
    using Kind = GfExpression::Kind;
    switch (e.kind()) {
    case Kind::literal:
        return PowerSeries::constant(Rational(e.value()), order);
    case Kind::variable:
        return PowerSeries::variable(order);
    case Kind::add:
        return eval_gf(e.lhs(), order) + eval_gf(e.rhs(), order);
    case Kind::subtract:
        return eval_gf(e.lhs(), order) - eval_gf(e.rhs(), order);
    case Kind::multiply:
        return eval_gf(e.lhs(), order) * eval_gf(e.rhs(), order);
    case Kind::power:
        return power(eval_gf(e.operand(), order), e.exponent());
    case Kind::sqrt:
        return sqrt(eval_gf(e.operand(), order));
    case Kind::divide: {
        PowerSeries num = eval_gf(e.lhs(), order);
        PowerSeries den = eval_gf(e.rhs(), order);
        const std::size_t v = den.valuation();
        if (v == 0) {
            return num / den;
        }
        if (v > order) {
            throw SeriesError("non-invertible series");
        }
        // den = x^v * (unit); cancel x^v from both sides at a deeper order.
        num = eval_gf(e.lhs(), order + v);
        den = eval_gf(e.rhs(), order + v);
        if (num.valuation() < v) {
            throw SeriesError("non-invertible series");
        }
        return shift_down(num, v) / shift_down(den, v);
    }
    }
    throw std::logic_error("unhandled expression kind");
}

PowerSeries from_rational(const GfExpression& numerator, const GfExpression& denominator, std::size_t order) {
    if (!numerator.is_polynomial() || !denominator.is_polynomial()) {
        throw std::invalid_argument("from_rational expects polynomial expressions");
    }
    return eval_gf(numerator, order) / eval_gf(denominator, order);
}

} // namespace hankelkit
