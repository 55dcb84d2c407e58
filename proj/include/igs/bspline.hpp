#pragma once

#include "igs/knot_vector.hpp"
#include "igs/rational.hpp"

#include <stdexcept>
#include <vector>

namespace igs {

namespace detail {

// Degree-0 basis: right-continuous at knots, left limit at the domain end
// (the last basis function equals 1 at s = 1).
template <class T>
bool span_contains(const std::vector<T>& knots, std::size_t j, const T& s) {
    if (s < knots[j] || s > knots[j + 1]) return false;
    if (s < knots[j + 1]) return knots[j] <= s;
    // s == knots[j+1]: only counts at the right end of the whole domain.
    return knots[j + 1] == knots.back() && knots[j] < knots[j + 1];
}

// Cox-de Boor over the full knot list; basis i of degree d uses knots[i..i+d+1].
template <class T>
T cox_de_boor(const std::vector<T>& knots, int d, std::size_t i, const T& s) {
    if (d == 0) return span_contains(knots, i, s) ? T(1) : T(0);
    T value(0);
    const T den_left = knots[i + d] - knots[i];
    if (den_left != T(0)) {
        const T left = cox_de_boor(knots, d - 1, i, s);
        if (left != T(0)) value += (s - knots[i]) / den_left * left;
    }
    const T den_right = knots[i + d + 1] - knots[i + 1];
    if (den_right != T(0)) {
        const T right = cox_de_boor(knots, d - 1, i + 1, s);
        if (right != T(0)) value += (knots[i + d + 1] - s) / den_right * right;
    }
    return value;
}

template <class T>
T cox_de_boor_derivative(const std::vector<T>& knots, int d, std::size_t i, const T& s, int order) {
    if (order == 0) return cox_de_boor(knots, d, i, s);
    if (order > d) return T(0);
    T value(0);
    const T den_left = knots[i + d] - knots[i];
    if (den_left != T(0))
        value += T(d) / den_left * cox_de_boor_derivative(knots, d - 1, i, s, order - 1);
    const T den_right = knots[i + d + 1] - knots[i + 1];
    if (den_right != T(0))
        value -= T(d) / den_right * cox_de_boor_derivative(knots, d - 1, i + 1, s, order - 1);
    return value;
}

template <class T>
const std::vector<T>& knot_list(const KnotVector& kv);

template <>
inline const std::vector<double>& knot_list<double>(const KnotVector& kv) {
    return kv.knots_as_double();
}
template <>
inline const std::vector<Rational>& knot_list<Rational>(const KnotVector& kv) {
    return kv.knots();
}

template <class T>
void check_eval_args(const KnotVector& kv, std::size_t i, const T& s) {
    if (i >= kv.basis_count()) throw std::out_of_range("b-spline index out of range");
    if (s < T(0) || s > T(1)) throw std::domain_error("parameter outside [0,1]");
}

}  // namespace detail

/// B^p_i[S](s) by the Cox-de Boor recursion.
template <class T>
T eval_bspline(const KnotVector& kv, std::size_t i, const T& s) {
    detail::check_eval_args(kv, i, s);
    return detail::cox_de_boor(detail::knot_list<T>(kv), kv.degree(), i, s);
}

/// order-th derivative of B^p_i[S] at s; order > p gives 0.
template <class T>
T eval_bspline_derivative(const KnotVector& kv, std::size_t i, const T& s, int order) {
    if (order < 0) throw std::invalid_argument("negative derivative order");
    detail::check_eval_args(kv, i, s);
    return detail::cox_de_boor_derivative(detail::knot_list<T>(kv), kv.degree(), i, s, order);
}

/// j-th Bernstein polynomial of degree i: b^i_j(t) = C(i,j) t^j (1-t)^(i-j).
template <class T>
T eval_bernstein(int degree, int j, const T& t) {
    if (j < 0 || j > degree) throw std::out_of_range("bernstein index out of range");
    T value = from_rational<T>(Rational(binomial(degree, j)));
    for (int a = 0; a < j; ++a) value *= t;
    for (int a = 0; a < degree - j; ++a) value *= (T(1) - t);
    return value;
}

/// order-th derivative of b^i_j via the Bernstein difference rule.
template <class T>
T eval_bernstein_derivative(int degree, int j, const T& t, int order) {
    if (order < 0) throw std::invalid_argument("negative derivative order");
    if (order == 0) return eval_bernstein(degree, j, t);
    if (order > degree) return T(0);
    auto lower = [&](int jj) {
        if (jj < 0 || jj > degree - 1) return T(0);
        return eval_bernstein_derivative(degree - 1, jj, t, order - 1);
    };
    return T(degree) * (lower(j - 1) - lower(j));
}

}  // namespace igs
