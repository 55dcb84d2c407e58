#pragma once

#include "igs/geometry.hpp"
#include "igs/triangular.hpp"

namespace igs::fixtures {

/// T = (0,...,0, 1/4, 1/2, 3/4, 1,...,1) for the given degree.
KnotVector quarter_knots(int degree);

/// Regular rational triangular patch (homogeneous (rho0,rho1,rho2)) over the
/// type-A triangle: a curved quarter-disk-style sector with apex at the
/// origin, rational control data, degree p in {2,3}.
TriangularPatchA<Rational> quarter_sector_patch(int p);

/// The type-A singular geometry obtained from quarter_sector_patch via the
/// triangular-to-tensor conversion, on the knot-free (Bezier) space of
/// bidegree (p,p).
HomogeneousPatch<Rational> type_a_geometry(int p);

/// Homogeneous control points of the bi-quadratic rational triangular patch
/// tracing a quarter of the unit circle over the type-B triangle.
TriangularPatchB<double> quarter_circle_triangle();

/// The bi-cubic singular tensor-product geometry G = T o u for the quarter
/// circle, components on the knot-free bidegree (3,3) space.
HomogeneousPatch<double> quarter_circle_geometry();

/// Elevates a triangular patch by one degree (barycentric Bernstein form).
template <class T>
TriangularPatchA<T> degree_elevate(const TriangularPatchA<T>& patch) {
    const int p = patch.degree();
    TriangularPatchA<T> out(p + 1, patch.dim());
    for (int i = 0; i <= p + 1; ++i)
        for (int j = 0; i + j <= p + 1; ++j) {
            const int k = p + 1 - i - j;
            std::vector<T> acc(patch.dim(), T(0));
            const T inv = from_rational<T>(Rational(1, p + 1));
            if (i > 0)
                for (int c = 0; c < patch.dim(); ++c)
                    acc[c] += T(i) * inv * patch.point(i - 1, j, k)[c];
            if (j > 0)
                for (int c = 0; c < patch.dim(); ++c)
                    acc[c] += T(j) * inv * patch.point(i, j - 1, k)[c];
            if (k > 0)
                for (int c = 0; c < patch.dim(); ++c)
                    acc[c] += T(k) * inv * patch.point(i, j, k - 1)[c];
            out.point(i, j, k) = std::move(acc);
        }
    return out;
}

/// One component of a tensor Bezier net as a spline on the knot-free space.
template <class T>
SplineCoefficients<T> net_component(const TensorBezierNet<T>& net, int component) {
    TensorProductSpace space(KnotVector::from_interior(net.deg_s(), {}),
                             KnotVector::from_interior(net.deg_t(), {}));
    std::vector<T> coeffs;
    coeffs.reserve(space.dimension());
    for (int i = 0; i <= net.deg_s(); ++i)
        for (int j = 0; j <= net.deg_t(); ++j) coeffs.push_back(net.point(i, j)[component]);
    return SplineCoefficients<T>(space, std::move(coeffs));
}

/// Bernstein coefficients of bidegree (m,n) for a polynomial given in
/// monomial form (requires deg <= (m,n)).
template <class T>
std::vector<std::vector<T>> monomials_to_bernstein(const Poly2<T>& poly, int m, int n) {
    std::vector<std::vector<T>> out(m + 1, std::vector<T>(n + 1, T(0)));
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= n; ++j)
            for (std::size_t a = 0; a <= std::min<std::size_t>(i, poly.deg_x()); ++a)
                for (std::size_t b = 0; b <= std::min<std::size_t>(j, poly.deg_y()); ++b) {
                    const T c = poly.coeff(a, b);
                    if (c == T(0)) continue;
                    out[i][j] += c * from_rational<T>(Rational(
                        binomial(i, static_cast<int>(a)) * binomial(j, static_cast<int>(b)),
                        binomial(m, static_cast<int>(a)) * binomial(n, static_cast<int>(b))));
                }
    return out;
}

}  // namespace igs::fixtures
