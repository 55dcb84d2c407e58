#pragma once

#include "igs/knot_vector.hpp"
#include "igs/rational_matrix.hpp"

namespace igs {

/// Degree elevation E^q_i, (i+1)x(q+1), with (b^i_l)_l = E^q_i (b^q_j)_j and
/// entry (l,j) = C(i,l) C(q-i,j-l) / C(q,j).
RationalMatrix degree_elevation_matrix(int i, int q);

/// Single-knot insertion K_x for the coarse basis on kv: coarse = K_x * fine,
/// where fine is the basis after inserting x. Shape n x (n+1), bidiagonal with
/// convex weights; columns of the fine-to-coarse relation sum to 1.
RationalMatrix single_knot_insertion_matrix(const KnotVector& kv, const Rational& new_knot);

/// K_tau = K_{t_1} K_{t_2} ... K_{t_N}: expansion of the basis on kv_from in
/// the basis with the given interior knots (which must contain kv_from's).
RationalMatrix knot_insertion_matrix(const KnotVector& kv_from,
                                     const std::vector<Rational>& target_interior);

/// The knot vector produced by knot_insertion_matrix's target.
KnotVector refined_knot_vector(const KnotVector& kv_from,
                               const std::vector<Rational>& target_interior);

/// E^q_i * K_tau: row l is the expansion of b^i_l(t) over the B-spline basis
/// of kv_t. Shape (i+1) x (N2+q+1).
RationalMatrix combined_row_coefficients(int i, const KnotVector& kv_t);

}  // namespace igs
