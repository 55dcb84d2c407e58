#pragma once

#include "igs/polynomial2.hpp"
#include "igs/tensor_space.hpp"
#include "igs/transform.hpp"

#include <string>
#include <vector>

namespace igs {

enum class SingularKind { type_a, type_b };

/// One basis function of a smooth space: either a smooth function with index
/// (i,j) (type A: j <= i <= k; type B: i+j <= k) or a retained standard
/// tensor-product basis function. Coefficients are an exact row over the
/// standard basis of S, laid out as i * dim_t + j.
struct SmoothBasisFunction {
    bool smooth = false;
    int i = 0;
    int j = 0;
    std::vector<Rational> coeffs;

    RationalSplineFn as_spline(const TensorProductSpace& space) const {
        return RationalSplineFn(space, coeffs);
    }
};

struct SmoothSpace {
    TensorProductSpace space;
    int order = 0;
    SingularKind kind = SingularKind::type_a;
    std::vector<SmoothBasisFunction> basis;

    std::size_t smooth_count() const;
    /// Coefficient rows stacked into a matrix, one row per basis function.
    RationalMatrix coefficient_matrix() const;
};

/// Smooth basis for the edge-collapse (type A) construction: rows i <= k carry
/// Bernstein-profile combinations E^q_i K_tau, rows i > k keep the standard
/// basis.
SmoothSpace build_smooth_space_A(const TensorProductSpace& space, int k);

struct MembershipResult {
    bool member = false;
    /// Witness polynomial in (u,v), total degree <= k; meaningful when member.
    Poly2<Rational> witness;
};

/// Tests whether the k-jet of f at s=0 is a polynomial in (s, s t) of total
/// degree <= k, returning that polynomial when it is.
MembershipResult check_membership_A(const RationalSplineFn& f, int k);

/// Smooth basis for the collinear-corner (type B) construction: functions
/// supported on the corner block l1,l2 <= k, matching all mixed partials
/// 0 <= a1,a2 <= k of the composed triangular Bernstein functions at (0,0).
SmoothSpace build_smooth_space_B(const TensorProductSpace& space, int k);

/// Linear functional realized as a tensor-product collocation rule:
/// apply(f) = sum_{a,b} ws[a] wt[b] f(xs[a], yt[b]).
struct DualFunctional {
    bool smooth = false;
    int i = 0;
    int j = 0;
    std::vector<Rational> points_s, weights_s;
    std::vector<Rational> points_t, weights_t;

    Rational apply_exact(const RationalSplineFn& f) const;
    double apply(const SplineFn& f) const;
};

/// Dual basis for a type-A smooth space, biorthogonal to its basis list.
std::vector<DualFunctional> build_dual_basis(const SmoothSpace& space);

}  // namespace igs
