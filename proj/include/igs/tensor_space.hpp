#pragma once

#include "igs/bspline.hpp"
#include "igs/knot_vector.hpp"
#include "igs/rational_matrix.hpp"

#include <stdexcept>
#include <vector>

namespace igs {

/// Bivariate tensor-product B-spline space on [0,1]^2.
class TensorProductSpace {
public:
    TensorProductSpace(KnotVector kv_s, KnotVector kv_t)
        : kv_s_(std::move(kv_s)), kv_t_(std::move(kv_t)) {}

    const KnotVector& kv_s() const { return kv_s_; }
    const KnotVector& kv_t() const { return kv_t_; }

    std::size_t dim_s() const { return kv_s_.basis_count(); }
    std::size_t dim_t() const { return kv_t_.basis_count(); }
    std::size_t dimension() const { return dim_s() * dim_t(); }

    bool operator==(const TensorProductSpace&) const = default;

private:
    KnotVector kv_s_;
    KnotVector kv_t_;
};

/// A spline in S given by its coefficient grid, c(i,j) for basis B^p_i B^q_j.
template <class T>
class SplineCoefficients {
public:
    SplineCoefficients(TensorProductSpace space, std::vector<T> coeffs)
        : space_(std::move(space)), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != space_.dimension())
            throw std::invalid_argument("coefficient grid does not match space dimension");
    }

    static SplineCoefficients constant(const TensorProductSpace& space, const T& value) {
        return SplineCoefficients(space, std::vector<T>(space.dimension(), value));
    }

    const TensorProductSpace& space() const { return space_; }
    T& at(std::size_t i, std::size_t j) { return coeffs_[i * space_.dim_t() + j]; }
    const T& at(std::size_t i, std::size_t j) const { return coeffs_[i * space_.dim_t() + j]; }
    const std::vector<T>& raw() const { return coeffs_; }

    /// Value of the (ds,dt) mixed partial at (s,t).
    T eval(const T& s, const T& t, int ds = 0, int dt = 0) const {
        std::vector<T> bs(space_.dim_s()), bt(space_.dim_t());
        for (std::size_t i = 0; i < bs.size(); ++i)
            bs[i] = eval_bspline_derivative(space_.kv_s(), i, s, ds);
        for (std::size_t j = 0; j < bt.size(); ++j)
            bt[j] = eval_bspline_derivative(space_.kv_t(), j, t, dt);
        T acc(0);
        for (std::size_t i = 0; i < bs.size(); ++i) {
            if (bs[i] == T(0)) continue;
            T inner(0);
            for (std::size_t j = 0; j < bt.size(); ++j)
                if (bt[j] != T(0)) inner += coeffs_[i * space_.dim_t() + j] * bt[j];
            acc += bs[i] * inner;
        }
        return acc;
    }

private:
    TensorProductSpace space_;
    std::vector<T> coeffs_;
};

using SplineFn = SplineCoefficients<double>;
using RationalSplineFn = SplineCoefficients<Rational>;

inline SplineFn to_double_spline(const RationalSplineFn& f) {
    std::vector<double> c;
    c.reserve(f.raw().size());
    for (const Rational& r : f.raw()) c.push_back(to_double(r));
    return SplineFn(f.space(), std::move(c));
}

/// Monomial coefficients (index = power) of B^p_i[S] restricted to the first
/// knot span [0, s1). Exact, via rational Vandermonde interpolation at p+1
/// nodes inside the span.
std::vector<Rational> first_span_monomials(const KnotVector& kv, std::size_t i);

/// Exact m-th derivative of B^p_i[S] at s=0 (right-sided).
Rational bspline_derivative_at_zero(const KnotVector& kv, std::size_t i, int order);

}  // namespace igs
