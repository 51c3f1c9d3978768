#include <hankelkit/hankel.hpp>

#include <cctype>
#include <utility>

namespace hankelkit {

namespace {

// Row n of Pascal's triangle from row n-1.
void next_pascal_row(std::vector<Integer>& row) {
    row.emplace_back(1);
    for (std::size_t k = row.size() - 1; k-- > 1;) {
        row[k] += row[k - 1];
    }
}

} // namespace

IntegerSequence IntegerSequence::shifted(std::size_t k) const {
    if (k > terms_.size()) {
        throw InsufficientTerms(k, terms_.size());
    }
    return IntegerSequence(std::vector<Integer>(terms_.begin() + static_cast<std::ptrdiff_t>(k), terms_.end()));
}

IntegerSequence IntegerSequence::prefix(std::size_t n) const {
    if (n > terms_.size()) {
        throw InsufficientTerms(n, terms_.size());
    }
    return IntegerSequence(std::vector<Integer>(terms_.begin(), terms_.begin() + static_cast<std::ptrdiff_t>(n)));
}

std::string to_string(const IntegerSequence& s) {
    std::string out;
    for (std::size_t n = 0; n < s.size(); ++n) {
        if (n > 0) {
            out += ", ";
        }
        out += s[n].get_str();
    }
    return out;
}

IntegerSequence parse_sequence(std::string_view text) {
    std::vector<Integer> terms;
    std::size_t i = 0;
    auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
    while (i < text.size()) {
        while (i < text.size() && is_sep(text[i])) {
            ++i;
        }
        std::size_t start = i;
        while (i < text.size() && !is_sep(text[i])) {
            ++i;
        }
        if (i > start) {
            terms.push_back(parse_integer(text.substr(start, i - start)));
        }
    }
    return IntegerSequence(std::move(terms));
}

SquareMatrix::SquareMatrix(std::initializer_list<std::initializer_list<Integer>> rows) : SquareMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != dimension_) {
            throw std::invalid_argument("matrix rows must have length " + std::to_string(dimension_));
        }
        std::size_t j = 0;
        for (const auto& v : row) {
            (*this)(i, j++) = v;
        }
        ++i;
    }
}

SquareMatrix SquareMatrix::transposed() const {
    SquareMatrix t(dimension_);
    for (std::size_t i = 0; i < dimension_; ++i) {
        for (std::size_t j = 0; j < dimension_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.dimension() != b.dimension()) {
        throw std::invalid_argument("matrix dimensions differ");
    }
    const std::size_t n = a.dimension();
    SquareMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (a(i, k) == 0) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                c(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return c;
}

SquareMatrix hankel_matrix(const IntegerSequence& a, std::size_t n) {
    if (a.size() < 2 * n + 1) {
        throw InsufficientTerms(2 * n + 1, a.size());
    }
    SquareMatrix m(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j <= n; ++j) {
            m(i, j) = a[i + j];
        }
    }
    return m;
}

Integer det_exact(const SquareMatrix& input) {
    const std::size_t n = input.dimension();
    if (n == 0) {
        return 1;
    }
    SquareMatrix m = input;
    Integer prev = 1;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && m(r, k) == 0) {
                ++r;
            }
            if (r == n) {
                return 0;
            }
            for (std::size_t j = k; j < n; ++j) {
                std::swap(m(k, j), m(r, j));
            }
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                // Bareiss: every intermediate is a minor, so the division is exact.
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m(k, k);
    }
    Integer d = m(n - 1, n - 1);
    return negate ? Integer(-d) : d;
}

IntegerSequence hankel_transform(const IntegerSequence& a, std::size_t depth) {
    if (a.size() < 2 * depth + 1) {
        throw InsufficientTerms(2 * depth + 1, a.size());
    }
    std::vector<Integer> h;
    h.reserve(depth + 1);
    for (std::size_t n = 0; n <= depth; ++n) {
        h.push_back(det_exact(hankel_matrix(a, n)));
    }
    return IntegerSequence(std::move(h));
}

HankelTriple hankel_triple(const IntegerSequence& u, std::size_t depth) {
    if (u.size() < 2 * depth + 3) {
        throw InsufficientTerms(2 * depth + 3, u.size());
    }
    return HankelTriple{hankel_transform(u, depth), hankel_transform(u.shifted(1), depth),
                        hankel_transform(u.shifted(2), depth), depth};
}

IntegerSequence binomial_transform(const IntegerSequence& a) {
    std::vector<Integer> b;
    b.reserve(a.size());
    std::vector<Integer> row;
    for (std::size_t n = 0; n < a.size(); ++n) {
        next_pascal_row(row);
        Integer sum = 0;
        for (std::size_t k = 0; k <= n; ++k) {
            sum += row[k] * a[k];
        }
        b.push_back(std::move(sum));
    }
    return IntegerSequence(std::move(b));
}

IntegerSequence inverse_binomial_transform(const IntegerSequence& b) {
    std::vector<Integer> a;
    a.reserve(b.size());
    std::vector<Integer> row;
    for (std::size_t n = 0; n < b.size(); ++n) {
        next_pascal_row(row);
        Integer sum = 0;
        for (std::size_t k = 0; k <= n; ++k) {
            if ((n - k) % 2 == 0) {
                sum += row[k] * b[k];
            } else {
                sum -= row[k] * b[k];
            }
        }
        a.push_back(std::move(sum));
    }
    return IntegerSequence(std::move(a));
}

SquareMatrix pascal_matrix(std::size_t n) {
    SquareMatrix p(n + 1);
    std::vector<Integer> row;
    for (std::size_t i = 0; i <= n; ++i) {
        next_pascal_row(row);
        for (std::size_t k = 0; k <= i; ++k) {
            p(i, k) = row[k];
        }
    }
    return p;
}

} // namespace hankelkit
