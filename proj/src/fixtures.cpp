#include "igs/fixtures.hpp"

#include <cmath>
#include <stdexcept>

namespace igs::fixtures {

KnotVector quarter_knots(int degree) {
    return KnotVector::from_interior(degree,
                                     {Rational(1, 4), Rational(1, 2), Rational(3, 4)});
}

TriangularPatchA<Rational> quarter_sector_patch(int p) {
    if (p != 2 && p != 3) throw std::invalid_argument("quarter_sector_patch supports p in {2,3}");
    // Quadratic sector with apex at the origin: straight radial edges to (1,0)
    // and (0,1), outer edge bulging through the weighted midpoint (3/4, 3/4).
    TriangularPatchA<Rational> base(2, 3);
    base.point(2, 0, 0) = {Rational(1), Rational(0), Rational(0)};
    base.point(1, 1, 0) = {Rational(1), Rational(0), Rational(1, 2)};
    base.point(1, 0, 1) = {Rational(1), Rational(1, 2), Rational(0)};
    base.point(0, 2, 0) = {Rational(1), Rational(0), Rational(1)};
    base.point(0, 1, 1) = {Rational(9, 8), Rational(27, 32), Rational(27, 32)};
    base.point(0, 0, 2) = {Rational(1), Rational(1), Rational(0)};
    if (p == 2) return base;
    return degree_elevate(base);
}

HomogeneousPatch<Rational> type_a_geometry(int p) {
    const TensorBezierNet<Rational> net = tri_to_tensor(quarter_sector_patch(p));
    return HomogeneousPatch<Rational>(net_component(net, 0), net_component(net, 1),
                                      net_component(net, 2));
}

TriangularPatchB<double> quarter_circle_triangle() {
    // Homogeneous (w, wx, wy). The circular-arc edge u = 0 is the rational
    // quadratic through (1,0) and (0,1) with middle control point (1,1) and
    // weight cos(pi/4) = sqrt(2)/2.
    const double r = std::sqrt(2.0) / 2.0;
    TriangularPatchB<double> tri(2, 3);
    tri.point(0, 0) = {1.0, 0.0, 0.0};
    tri.point(0, 1) = {2.0, 0.0, 1.0};
    tri.point(0, 2) = {1.0, 0.0, 1.0};
    tri.point(1, 0) = {2.0, 1.0, 0.0};
    tri.point(1, 1) = {r, r, r};
    tri.point(2, 0) = {1.0, 1.0, 0.0};
    return tri;
}

HomogeneousPatch<double> quarter_circle_geometry() {
    const TriangularPatchB<double> tri = quarter_circle_triangle();
    TensorProductSpace space(KnotVector::from_interior(3, {}), KnotVector::from_interior(3, {}));
    std::vector<SplineCoefficients<double>> comps;
    for (int c = 0; c < 3; ++c) {
        const auto bern = monomials_to_bernstein(tri.composed_component_poly(c), 3, 3);
        std::vector<double> coeffs;
        coeffs.reserve(16);
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; j <= 3; ++j) coeffs.push_back(bern[i][j]);
        comps.emplace_back(space, std::move(coeffs));
    }
    return HomogeneousPatch<double>(std::move(comps[0]), std::move(comps[1]),
                                    std::move(comps[2]));
}

}  // namespace igs::fixtures
