#pragma once

#include "igs/bspline.hpp"
#include "igs/polynomial2.hpp"
#include "igs/rational.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace igs {

/// Whether evaluation outside the triangular domain rejects or clamps.
enum class DomainPolicy { reject, clamp };

namespace detail {

template <class T>
constexpr T domain_tol() {
    if constexpr (std::is_same_v<T, double>) return 1e-12;
    else return T(0);
}

template <class T>
T ipow(T base, int e) {
    T out(1);
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

}  // namespace detail

// -------- Type A: domain {0 <= u <= 1, 0 <= v <= u}, edge collapse at u=0 --

template <class T>
bool in_domain_A(const T& u, const T& v) {
    const T tol = detail::domain_tol<T>();
    return u >= -tol && u <= T(1) + tol && v >= -tol && v <= u + tol;
}

/// beta^p_(i,j,k)(u,v) = p!/(i!j!k!) (1-u)^i v^j (u-v)^k on the type-A triangle.
template <class T>
T eval_tri_bernstein_A(int p, int i, int j, int k, T u, T v,
                       DomainPolicy policy = DomainPolicy::reject) {
    if (i < 0 || j < 0 || k < 0 || i + j + k != p)
        throw std::out_of_range("triangular index must satisfy i+j+k=p");
    if (!in_domain_A(u, v)) {
        if (policy == DomainPolicy::reject)
            throw std::domain_error("point outside the type-A triangle");
        u = std::max(T(0), std::min(T(1), u));
        v = std::max(T(0), std::min(u, v));
    }
    const T c = from_rational<T>(Rational(factorial(p), factorial(i) * factorial(j) * factorial(k)));
    const T one_minus_u = T(1) - u;
    const T u_minus_v = u - v;
    return c * detail::ipow(one_minus_u, i) * detail::ipow(v, j) * detail::ipow(u_minus_v, k);
}

template <class T>
Poly2<T> tri_bernstein_poly_A(int p, int i, int j, int k) {
    Poly2<T> one_minus_u;
    one_minus_u.set_coeff(0, 0, T(1));
    one_minus_u.set_coeff(1, 0, T(-1));
    Poly2<T> v_poly = Poly2<T>::monomial(0, 1, T(1));
    Poly2<T> u_minus_v = Poly2<T>::monomial(1, 0, T(1)) - v_poly;
    const T c = from_rational<T>(Rational(factorial(p), factorial(i) * factorial(j) * factorial(k)));
    return one_minus_u.pow(i) * v_poly.pow(j) * u_minus_v.pow(k) * c;
}

// -------- Type B: domain {0 <= u <= 1, -1+u <= v <= 1-u} ------------------

template <class T>
bool in_domain_B(const T& u, const T& v) {
    const T tol = detail::domain_tol<T>();
    return u >= -tol && u <= T(1) + tol && v >= u - T(1) - tol && v <= T(1) - u + tol;
}

/// beta^k_(i,j)(u,v) with barycentric factors (1-u-v)/2, (1-u+v)/2, u.
template <class T>
T eval_tri_bernstein_B(int k, int i, int j, const T& u, const T& v,
                       DomainPolicy policy = DomainPolicy::reject) {
    if (i < 0 || j < 0 || i + j > k)
        throw std::out_of_range("type-B index must satisfy 0 <= i+j <= k");
    if (!in_domain_B(u, v) && policy == DomainPolicy::reject)
        throw std::domain_error("point outside the type-B triangle");
    const T c = from_rational<T>(
        Rational(factorial(k), factorial(i) * factorial(j) * factorial(k - i - j)));
    const T half = from_rational<T>(Rational(1, 2));
    const T a = (T(1) - u - v) * half;
    const T b = (T(1) - u + v) * half;
    return c * detail::ipow(a, i) * detail::ipow(b, j) * detail::ipow(u, k - i - j);
}

template <class T>
Poly2<T> tri_bernstein_poly_B(int k, int i, int j) {
    const T half = from_rational<T>(Rational(1, 2));
    Poly2<T> a;  // (1-u-v)/2
    a.set_coeff(0, 0, half);
    a.set_coeff(1, 0, -half);
    a.set_coeff(0, 1, -half);
    Poly2<T> b;  // (1-u+v)/2
    b.set_coeff(0, 0, half);
    b.set_coeff(1, 0, -half);
    b.set_coeff(0, 1, half);
    Poly2<T> u_poly = Poly2<T>::monomial(1, 0, T(1));
    const T c = from_rational<T>(
        Rational(factorial(k), factorial(i) * factorial(j) * factorial(k - i - j)));
    return a.pow(i) * b.pow(j) * u_poly.pow(k - i - j) * c;
}

/// beta^k_(i,j) composed with the type-B reparameterization (s,t) -> (st, t-s).
/// Expands to C ((1+s)(1-t)/2)^i ((1-s)(1+t)/2)^j (st)^(k-i-j) in (s,t).
template <class T>
Poly2<T> tri_bernstein_B_composed(int k, int i, int j) {
    const T half = from_rational<T>(Rational(1, 2));
    Poly2<T> a;  // (1+s)(1-t)/2
    a.set_coeff(0, 0, half);
    a.set_coeff(1, 0, half);
    a.set_coeff(0, 1, -half);
    a.set_coeff(1, 1, -half);
    Poly2<T> b;  // (1-s)(1+t)/2
    b.set_coeff(0, 0, half);
    b.set_coeff(1, 0, -half);
    b.set_coeff(0, 1, half);
    b.set_coeff(1, 1, -half);
    Poly2<T> st = Poly2<T>::monomial(1, 1, T(1));
    const T c = from_rational<T>(
        Rational(factorial(k), factorial(i) * factorial(j) * factorial(k - i - j)));
    return a.pow(i) * b.pow(j) * st.pow(k - i - j) * c;
}

// -------- Reparameterizations ---------------------------------------------

template <class T>
std::array<T, 2> reparam_A(const T& s, const T& t) {
    return {s, s * t};
}

template <class T>
std::array<T, 2> reparam_A_inverse(const T& u, const T& v) {
    if (u == T(0)) throw std::domain_error("reparam_A inverse is singular at u=0");
    return {u, v / u};
}

template <class T>
std::array<T, 2> reparam_B(const T& s, const T& t) {
    return {s * t, t - s};
}

// -------- Patches ----------------------------------------------------------

/// Triangular Bezier patch over the type-A triangle: points rho_(i,j,k) in R^d.
template <class T>
class TriangularPatchA {
public:
    TriangularPatchA(int degree, int dim)
        : degree_(degree), dim_(dim),
          points_((degree + 1) * (degree + 2) / 2, std::vector<T>(dim, T(0))) {
        if (degree < 0 || dim < 1 || dim > 4)
            throw std::invalid_argument("triangular patch: bad degree or dimension");
    }

    int degree() const { return degree_; }
    int dim() const { return dim_; }

    std::vector<T>& point(int i, int j, int k) { return points_[index(i, j, k)]; }
    const std::vector<T>& point(int i, int j, int k) const { return points_[index(i, j, k)]; }

    std::vector<T> eval(const T& u, const T& v,
                        DomainPolicy policy = DomainPolicy::reject) const {
        std::vector<T> acc(dim_, T(0));
        for (int i = 0; i <= degree_; ++i)
            for (int j = 0; i + j <= degree_; ++j) {
                const int k = degree_ - i - j;
                const T w = eval_tri_bernstein_A(degree_, i, j, k, u, v, policy);
                if (w == T(0)) continue;
                const std::vector<T>& pt = point(i, j, k);
                for (int c = 0; c < dim_; ++c) acc[c] += w * pt[c];
            }
        return acc;
    }

    /// Component c as a polynomial in (u,v), for exact jets and regularity scans.
    Poly2<T> component_poly(int c) const {
        Poly2<T> acc;
        for (int i = 0; i <= degree_; ++i)
            for (int j = 0; i + j <= degree_; ++j) {
                const int k = degree_ - i - j;
                acc = acc + tri_bernstein_poly_A<T>(degree_, i, j, k) * point(i, j, k)[c];
            }
        return acc;
    }

private:
    std::size_t index(int i, int j, int k) const {
        if (i < 0 || j < 0 || k < 0 || i + j + k != degree_)
            throw std::out_of_range("triangular control index must satisfy i+j+k=p");
        // Enumerate i = 0..p, j = 0..p-i.
        std::size_t offset = 0;
        for (int a = 0; a < i; ++a) offset += degree_ - a + 1;
        return offset + j;
    }

    int degree_;
    int dim_;
    std::vector<std::vector<T>> points_;
};

/// Triangular patch over the type-B triangle, control points t_(i,j), i+j <= k.
template <class T>
class TriangularPatchB {
public:
    TriangularPatchB(int degree, int dim)
        : degree_(degree), dim_(dim),
          points_((degree + 1) * (degree + 2) / 2, std::vector<T>(dim, T(0))) {}

    int degree() const { return degree_; }
    int dim() const { return dim_; }

    std::vector<T>& point(int i, int j) { return points_[index(i, j)]; }
    const std::vector<T>& point(int i, int j) const { return points_[index(i, j)]; }

    std::vector<T> eval(const T& u, const T& v,
                        DomainPolicy policy = DomainPolicy::reject) const {
        std::vector<T> acc(dim_, T(0));
        for (int i = 0; i <= degree_; ++i)
            for (int j = 0; i + j <= degree_; ++j) {
                const T w = eval_tri_bernstein_B(degree_, i, j, u, v, policy);
                const std::vector<T>& pt = point(i, j);
                for (int c = 0; c < dim_; ++c) acc[c] += w * pt[c];
            }
        return acc;
    }

    /// Component c of the composition with reparam_B, as a polynomial in (s,t).
    Poly2<T> composed_component_poly(int c) const {
        Poly2<T> acc;
        for (int i = 0; i <= degree_; ++i)
            for (int j = 0; i + j <= degree_; ++j)
                acc = acc + tri_bernstein_B_composed<T>(degree_, i, j) * point(i, j)[c];
        return acc;
    }

private:
    std::size_t index(int i, int j) const {
        if (i < 0 || j < 0 || i + j > degree_)
            throw std::out_of_range("type-B control index must satisfy i+j<=k");
        std::size_t offset = 0;
        for (int a = 0; a < i; ++a) offset += degree_ - a + 1;
        return offset + j;
    }

    int degree_;
    int dim_;
    std::vector<std::vector<T>> points_;
};

/// Tensor-product Bezier net of points, f_(i,j) for basis b^p_i(s) b^q_j(t).
template <class T>
class TensorBezierNet {
public:
    TensorBezierNet(int deg_s, int deg_t, int dim)
        : deg_s_(deg_s), deg_t_(deg_t), dim_(dim),
          points_((deg_s + 1) * (deg_t + 1), std::vector<T>(dim, T(0))) {}

    int deg_s() const { return deg_s_; }
    int deg_t() const { return deg_t_; }
    int dim() const { return dim_; }

    std::vector<T>& point(int i, int j) { return points_[i * (deg_t_ + 1) + j]; }
    const std::vector<T>& point(int i, int j) const { return points_[i * (deg_t_ + 1) + j]; }

    std::vector<T> eval(const T& s, const T& t) const {
        std::vector<T> acc(dim_, T(0));
        for (int i = 0; i <= deg_s_; ++i) {
            const T bs = eval_bernstein(deg_s_, i, s);
            if (bs == T(0)) continue;
            for (int j = 0; j <= deg_t_; ++j) {
                const T w = bs * eval_bernstein(deg_t_, j, t);
                if (w == T(0)) continue;
                const std::vector<T>& pt = point(i, j);
                for (int c = 0; c < dim_; ++c) acc[c] += w * pt[c];
            }
        }
        return acc;
    }

private:
    int deg_s_;
    int deg_t_;
    int dim_;
    std::vector<std::vector<T>> points_;
};

/// Hu's conversion: the triangular patch as a singular tensor-product Bezier
/// patch, f_(i,j) = sum_l C(i,l) C(p-i,j-l)/C(p,j) rho_(p-i,l,i-l). Row i=0
/// collapses to the single corner point rho_(p,0,0).
template <class T>
TensorBezierNet<T> tri_to_tensor(const TriangularPatchA<T>& patch) {
    const int p = patch.degree();
    TensorBezierNet<T> net(p, p, patch.dim());
    for (int i = 0; i <= p; ++i)
        for (int j = 0; j <= p; ++j) {
            std::vector<T> acc(patch.dim(), T(0));
            for (int l = 0; l <= i; ++l) {
                const Integer num = binomial(i, l) * binomial(p - i, j - l);
                if (num == 0) continue;
                const T w = from_rational<T>(Rational(num, binomial(p, j)));
                const std::vector<T>& pt = patch.point(p - i, l, i - l);
                for (int c = 0; c < patch.dim(); ++c) acc[c] += w * pt[c];
            }
            net.point(i, j) = std::move(acc);
        }
    return net;
}

}  // namespace igs
