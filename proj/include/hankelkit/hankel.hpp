#ifndef HANKELKIT_HANKEL_HPP
#define HANKELKIT_HANKEL_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <hankelkit/numeric.hpp>

namespace hankelkit {

// Finite prefix a_0, a_1, ... of an integer sequence.
class IntegerSequence {
public:
    IntegerSequence() = default;
    explicit IntegerSequence(std::vector<Integer> terms) : terms_(std::move(terms)) {}
    IntegerSequence(std::initializer_list<Integer> terms) : terms_(terms) {}

    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }
    const Integer& operator[](std::size_t n) const { return terms_.at(n); }
    std::span<const Integer> terms() const noexcept { return terms_; }
    auto begin() const noexcept { return terms_.begin(); }
    auto end() const noexcept { return terms_.end(); }

    // Sequence n -> a_{n+k}; requires k <= size().
    IntegerSequence shifted(std::size_t k) const;
    // First n terms; requires n <= size().
    IntegerSequence prefix(std::size_t n) const;

    friend bool operator==(const IntegerSequence&, const IntegerSequence&) = default;

private:
    std::vector<Integer> terms_;
};

// "a_0, a_1, ..." in full decimal.
std::string to_string(const IntegerSequence& s);

// Parses a comma- or whitespace-separated list of decimal integers.
IntegerSequence parse_sequence(std::string_view text);

class SquareMatrix {
public:
    explicit SquareMatrix(std::size_t dimension = 0) : dimension_(dimension), entries_(dimension * dimension) {}
    SquareMatrix(std::initializer_list<std::initializer_list<Integer>> rows);

    std::size_t dimension() const noexcept { return dimension_; }
    Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * dimension_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * dimension_ + j]; }

    SquareMatrix transposed() const;

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t dimension_;
    std::vector<Integer> entries_;
};

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);

// Raised when a sequence prefix is too short for the requested depth.
class InsufficientTerms : public std::invalid_argument {
public:
    InsufficientTerms(std::size_t required, std::size_t available)
        : std::invalid_argument("need " + std::to_string(required) + " terms, have " + std::to_string(available)),
          required_(required) {}

    std::size_t required() const noexcept { return required_; }

private:
    std::size_t required_;
};

// (n+1)x(n+1) matrix with entry (i, j) = a[i + j]. Needs 2n+1 terms.
SquareMatrix hankel_matrix(const IntegerSequence& a, std::size_t n);

// Exact determinant by fraction-free (Bareiss) elimination with row swaps.
// The 0x0 determinant is 1.
Integer det_exact(const SquareMatrix& m);

// [det H_0, det H_1, ..., det H_depth]. Needs 2*depth+1 terms.
IntegerSequence hankel_transform(const IntegerSequence& a, std::size_t depth);

// Hankel transforms of u, u shifted by one and u shifted by two.
struct HankelTriple {
    IntegerSequence h;
    IntegerSequence h_star;
    IntegerSequence h_star_star;
    std::size_t depth = 0;
};

// Needs 2*depth+3 terms.
HankelTriple hankel_triple(const IntegerSequence& u, std::size_t depth);

// b_n = sum_k C(n,k) a_k
IntegerSequence binomial_transform(const IntegerSequence& a);
// a_n = sum_k (-1)^{n-k} C(n,k) b_k
IntegerSequence inverse_binomial_transform(const IntegerSequence& b);

// Lower-triangular (n+1)x(n+1) matrix of binomial coefficients.
SquareMatrix pascal_matrix(std::size_t n);

} // namespace hankelkit

#endif
