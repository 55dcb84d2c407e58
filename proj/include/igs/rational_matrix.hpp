#pragma once

#include "igs/rational.hpp"

#include <cstddef>
#include <vector>

namespace igs {

/// Dense matrix over exact rationals. Small sizes only; all elimination is
/// fraction-free-ish plain Gauss with exact pivoting on nonzero entries.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const RationalMatrix& other) const = default;

    RationalMatrix operator*(const RationalMatrix& rhs) const;
    RationalMatrix transposed() const;

    std::vector<Rational> row(std::size_t r) const;
    void set_row(std::size_t r, const std::vector<Rational>& values);

    /// Rank by Gaussian elimination, exact.
    std::size_t rank() const;

    /// Basis of the right null space {v : A v = 0}, one column vector per entry.
    std::vector<std::vector<Rational>> null_space() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Solves A x = b exactly. Throws std::domain_error if A is singular.
std::vector<Rational> solve(const RationalMatrix& a, const std::vector<Rational>& b);

/// Least-squares-free membership solve: finds x with x^T R = d where the rows
/// of R span the target space. Returns empty optional-style flag via bool.
/// On success writes the coordinates into `coords`.
bool solve_row_membership(const RationalMatrix& r, const std::vector<Rational>& d,
                          std::vector<Rational>& coords);

}  // namespace igs
