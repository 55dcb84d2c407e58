#pragma once

#include "igs/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace igs {

/// Bivariate polynomial sum c[a][b] x^a y^b with dense coefficient grid.
template <class T>
class Poly2 {
public:
    Poly2() : coeffs_(1, std::vector<T>(1, T(0))) {}
    explicit Poly2(const T& constant) : coeffs_(1, std::vector<T>(1, constant)) {}

    static Poly2 monomial(std::size_t a, std::size_t b, const T& c) {
        Poly2 p;
        p.coeffs_.assign(a + 1, std::vector<T>(b + 1, T(0)));
        p.coeffs_[a][b] = c;
        return p;
    }

    std::size_t deg_x() const { return coeffs_.size() - 1; }
    std::size_t deg_y() const { return coeffs_[0].size() - 1; }

    T coeff(std::size_t a, std::size_t b) const {
        if (a >= coeffs_.size() || b >= coeffs_[0].size()) return T(0);
        return coeffs_[a][b];
    }

    void set_coeff(std::size_t a, std::size_t b, const T& c) {
        grow(a, b);
        coeffs_[a][b] = c;
    }

    Poly2 operator+(const Poly2& rhs) const {
        Poly2 out;
        out.coeffs_.assign(std::max(coeffs_.size(), rhs.coeffs_.size()),
                           std::vector<T>(std::max(coeffs_[0].size(), rhs.coeffs_[0].size()), T(0)));
        for (std::size_t a = 0; a < out.coeffs_.size(); ++a)
            for (std::size_t b = 0; b < out.coeffs_[0].size(); ++b)
                out.coeffs_[a][b] = coeff(a, b) + rhs.coeff(a, b);
        return out;
    }

    Poly2 operator-(const Poly2& rhs) const { return *this + rhs * T(-1); }

    Poly2 operator*(const T& scalar) const {
        Poly2 out = *this;
        for (auto& row : out.coeffs_)
            for (T& c : row) c *= scalar;
        return out;
    }

    Poly2 operator*(const Poly2& rhs) const {
        Poly2 out;
        out.coeffs_.assign(deg_x() + rhs.deg_x() + 1,
                           std::vector<T>(deg_y() + rhs.deg_y() + 1, T(0)));
        for (std::size_t a = 0; a <= deg_x(); ++a)
            for (std::size_t b = 0; b <= deg_y(); ++b) {
                if (coeffs_[a][b] == T(0)) continue;
                for (std::size_t c = 0; c <= rhs.deg_x(); ++c)
                    for (std::size_t d = 0; d <= rhs.deg_y(); ++d)
                        out.coeffs_[a + c][b + d] += coeffs_[a][b] * rhs.coeffs_[c][d];
            }
        return out;
    }

    Poly2 pow(int e) const {
        if (e < 0) throw std::invalid_argument("negative polynomial power");
        Poly2 out(T(1));
        for (int i = 0; i < e; ++i) out = out * (*this);
        return out;
    }

    T eval(const T& x, const T& y) const {
        T acc(0);
        for (std::size_t a = coeffs_.size(); a-- > 0;) {
            T row(0);
            for (std::size_t b = coeffs_[0].size(); b-- > 0;) row = row * y + coeffs_[a][b];
            acc = acc * x + row;
        }
        return acc;
    }

    /// Mixed partial d^(a1+a2)/dx^a1 dy^a2 evaluated at a point.
    T partial_at(int a1, int a2, const T& x, const T& y) const {
        T acc(0);
        for (std::size_t a = a1; a <= deg_x(); ++a)
            for (std::size_t b = a2; b <= deg_y(); ++b) {
                if (coeffs_[a][b] == T(0)) continue;
                T factor = from_rational<T>(
                    Rational(factorial(static_cast<int>(a)) * factorial(static_cast<int>(b)),
                             factorial(static_cast<int>(a) - a1) * factorial(static_cast<int>(b) - a2)));
                T term = coeffs_[a][b] * factor;
                for (std::size_t e = 0; e < a - a1; ++e) term *= x;
                for (std::size_t e = 0; e < b - a2; ++e) term *= y;
                acc += term;
            }
        return acc;
    }

private:
    void grow(std::size_t a, std::size_t b) {
        const std::size_t nx = std::max(coeffs_.size(), a + 1);
        const std::size_t ny = std::max(coeffs_[0].size(), b + 1);
        if (nx == coeffs_.size() && ny == coeffs_[0].size()) return;
        std::vector<std::vector<T>> grown(nx, std::vector<T>(ny, T(0)));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < coeffs_[0].size(); ++j) grown[i][j] = coeffs_[i][j];
        coeffs_ = std::move(grown);
    }

    std::vector<std::vector<T>> coeffs_;
};

}  // namespace igs
