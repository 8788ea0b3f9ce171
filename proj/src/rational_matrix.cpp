#include "isokit/rational_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace isokit {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0))
{
    if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
}

std::vector<Rational> RationalMatrix::row(std::size_t r) const
{
    return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m)
{
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << "[";
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
        os << "]\n";
    }
    return os;
}

Rational determinant(const RationalMatrix& m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    RationalMatrix a = m;
    Rational prev_pivot = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Exact division: the Bareiss quotient is always an entry minor.
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev_pivot;
            }
            a(i, k) = 0;
        }
        prev_pivot = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b)
{
    if (a.rows() != a.cols()) throw std::invalid_argument("solve requires a square matrix");
    if (b.size() != a.rows()) throw std::invalid_argument("right-hand side has wrong length");
    const std::size_t n = a.rows();

    RationalMatrix aug(n, n + 1);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        aug(r, n) = b[r];
    }

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && aug(pivot, col) == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != col) {
            for (std::size_t c = 0; c <= n; ++c) std::swap(aug(col, c), aug(pivot, c));
        }
        const Rational inv = 1 / aug(col, col);
        for (std::size_t c = col; c <= n; ++c) aug(col, c) *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || aug(r, col) == 0) continue;
            const Rational factor = aug(r, col);
            for (std::size_t c = col; c <= n; ++c) aug(r, c) -= factor * aug(col, c);
        }
    }

    std::vector<Rational> x(n);
    for (std::size_t r = 0; r < n; ++r) x[r] = aug(r, n);
    return x;
}

std::vector<Rational> multiply(const RationalMatrix& a, const std::vector<Rational>& x)
{
    if (x.size() != a.cols()) throw std::invalid_argument("vector length does not match columns");
    std::vector<Rational> out(a.rows(), Rational(0));
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out[r] += a(r, c) * x[c];
    }
    return out;
}

} // namespace isokit
