#include "igs/rational_matrix.hpp"

#include <stdexcept>

namespace igs {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
    RationalMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

std::vector<Rational> RationalMatrix::row(std::size_t r) const {
    std::vector<Rational> out(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out[j] = (*this)(r, j);
    return out;
}

void RationalMatrix::set_row(std::size_t r, const std::vector<Rational>& values) {
    if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = values[j];
}

namespace {

// Row echelon reduction in place; returns pivot columns.
std::vector<std::size_t> echelon(RationalMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
        const Rational inv = Rational(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            const Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t RationalMatrix::rank() const {
    RationalMatrix work = *this;
    return echelon(work).size();
}

std::vector<std::vector<Rational>> RationalMatrix::null_space() const {
    RationalMatrix work = *this;
    const std::vector<std::size_t> pivots = echelon(work);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(cols_);
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Rational> solve(const RationalMatrix& a, const std::vector<Rational>& b) {
    if (a.rows() != a.cols() || b.size() != a.rows())
        throw std::invalid_argument("solve: shape mismatch");
    const std::size_t n = a.rows();
    RationalMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    const std::vector<std::size_t> pivots = echelon(aug);
    if (pivots.size() != n || pivots.back() == n)
        throw std::domain_error("solve: singular system");
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[pivots[i]] = aug(i, n);
    return x;
}

bool solve_row_membership(const RationalMatrix& r, const std::vector<Rational>& d,
                          std::vector<Rational>& coords) {
    if (d.size() != r.cols()) throw std::invalid_argument("membership: length mismatch");
    // Solve x^T R = d, i.e. R^T x = d^T, as an overdetermined consistent system.
    const std::size_t n = r.rows();
    RationalMatrix aug(r.cols(), n + 1);
    for (std::size_t i = 0; i < r.cols(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = r(j, i);
        aug(i, n) = d[i];
    }
    const std::vector<std::size_t> pivots = echelon(aug);
    // Inconsistent iff a pivot lands in the augmented column.
    if (!pivots.empty() && pivots.back() == n) return false;
    coords.assign(n, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) coords[pivots[i]] = aug(i, n);
    // Verify (guards against rank-deficient R with free variables set to zero).
    for (std::size_t c = 0; c < r.cols(); ++c) {
        Rational acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc += coords[j] * r(j, c);
        if (acc != d[c]) return false;
    }
    return true;
}

}  // namespace igs
