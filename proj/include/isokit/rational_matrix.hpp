#pragma once

#include "isokit/isotropy_data.hpp"

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

namespace isokit {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::vector<Rational> row(std::size_t r) const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> entries_;
};

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

/// Determinant by fraction-free (Bareiss) elimination with row swaps.
/// Throws std::invalid_argument for non-square input.
Rational determinant(const RationalMatrix& m);

/// Unique solution of A x = b by exact Gauss-Jordan elimination;
/// nullopt when A is singular.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b);

/// Product A x.
std::vector<Rational> multiply(const RationalMatrix& a, const std::vector<Rational>& x);

} // namespace isokit
