#pragma once

#include "igs/rational.hpp"

#include <cstddef>
#include <vector>

namespace igs {

/// Open knot vector over [0,1] with exact rational knots.
///
/// Storage is the full list of length N+2p+2: p+1 zeros, N nondecreasing
/// interior knots in (0,1), p+1 ones. Basis index i runs over 0..N+p and the
/// i-th basis function lives on knots[i..i+p+1].
class KnotVector {
public:
    KnotVector(int degree, std::vector<Rational> knots);

    /// Convenience: builds the open vector from degree and interior knots only.
    static KnotVector from_interior(int degree, std::vector<Rational> interior);

    int degree() const { return degree_; }
    const std::vector<Rational>& knots() const { return knots_; }
    const std::vector<double>& knots_as_double() const { return knots_double_; }

    /// Number of interior knots N.
    std::size_t interior_count() const { return knots_.size() - 2 * (degree_ + 1); }
    /// Number of basis functions, N + p + 1.
    std::size_t basis_count() const { return interior_count() + degree_ + 1; }

    std::vector<Rational> interior_knots() const;

    /// First knot strictly greater than 0 (1 if there are no interior knots).
    Rational first_interior_or_one() const;

    std::size_t max_interior_multiplicity() const;

    bool operator==(const KnotVector&) const = default;

private:
    int degree_;
    std::vector<Rational> knots_;
    std::vector<double> knots_double_;
};

}  // namespace igs
