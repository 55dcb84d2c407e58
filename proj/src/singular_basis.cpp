#include "igs/singular_basis.hpp"

#include "igs/triangular.hpp"

#include <algorithm>
#include <stdexcept>

namespace igs {

std::size_t SmoothSpace::smooth_count() const {
    return static_cast<std::size_t>(
        std::count_if(basis.begin(), basis.end(), [](const auto& f) { return f.smooth; }));
}

RationalMatrix SmoothSpace::coefficient_matrix() const {
    RationalMatrix m(basis.size(), space.dimension());
    for (std::size_t r = 0; r < basis.size(); ++r) m.set_row(r, basis[r].coeffs);
    return m;
}

SmoothSpace build_smooth_space_A(const TensorProductSpace& space, int k) {
    const int p = space.kv_s().degree();
    const int q = space.kv_t().degree();
    if (k < 0 || k > std::min(p, q))
        throw std::invalid_argument("smoothness order must satisfy 0 <= k <= min(p,q)");
    const std::size_t max_mult = static_cast<std::size_t>(std::min(p, q) - k);
    if (space.kv_s().max_interior_multiplicity() > max_mult ||
        space.kv_t().max_interior_multiplicity() > max_mult)
        throw std::invalid_argument(
            "interior knot multiplicity too high for the requested smoothness order");

    const std::size_t dim_s = space.dim_s();
    const std::size_t dim_t = space.dim_t();

    SmoothSpace out{space, k, SingularKind::type_a, {}};
    for (int i = 0; i <= k; ++i) {
        const RationalMatrix rows = combined_row_coefficients(i, space.kv_t());
        for (int j = 0; j <= i; ++j) {
            SmoothBasisFunction fn;
            fn.smooth = true;
            fn.i = i;
            fn.j = j;
            fn.coeffs.assign(space.dimension(), Rational(0));
            for (std::size_t c = 0; c < dim_t; ++c) fn.coeffs[i * dim_t + c] = rows(j, c);
            out.basis.push_back(std::move(fn));
        }
    }
    for (std::size_t i = k + 1; i < dim_s; ++i)
        for (std::size_t j = 0; j < dim_t; ++j) {
            SmoothBasisFunction fn;
            fn.smooth = false;
            fn.i = static_cast<int>(i);
            fn.j = static_cast<int>(j);
            fn.coeffs.assign(space.dimension(), Rational(0));
            fn.coeffs[i * dim_t + j] = 1;
            out.basis.push_back(std::move(fn));
        }
    return out;
}

MembershipResult check_membership_A(const RationalSplineFn& f, int k) {
    const TensorProductSpace& space = f.space();
    const int p = space.kv_s().degree();
    const int q = space.kv_t().degree();
    if (k < 0 || k > std::min(p, q))
        throw std::invalid_argument("smoothness order must satisfy 0 <= k <= min(p,q)");

    const std::size_t dim_s = space.dim_s();
    const std::size_t dim_t = space.dim_t();

    // Monomial pieces of each s-basis function on the first span, for exact
    // s-jets at 0. Only i <= k rows can contribute to derivatives of order <= k.
    std::vector<std::vector<Rational>> s_mono(dim_s);
    for (std::size_t i = 0; i < dim_s && i <= static_cast<std::size_t>(p); ++i)
        s_mono[i] = first_span_monomials(space.kv_s(), i);

    MembershipResult result;
    result.member = true;
    for (int m = 0; m <= k; ++m) {
        // d_j = (1/m!) d^m/ds^m f(0, .) expressed over the t-basis.
        std::vector<Rational> d(dim_t, Rational(0));
        for (std::size_t i = 0; i < dim_s; ++i) {
            if (i > static_cast<std::size_t>(std::min(p, m))) continue;
            const Rational jet = s_mono[i][m];
            if (jet == 0) continue;
            for (std::size_t j = 0; j < dim_t; ++j) d[j] += jet * f.at(i, j);
        }
        // Accept iff d lies in the span of the degree-m Bernstein profiles.
        const RationalMatrix rows = combined_row_coefficients(m, space.kv_t());
        std::vector<Rational> gamma;
        if (!solve_row_membership(rows, d, gamma)) {
            result.member = false;
            result.witness = Poly2<Rational>();
            return result;
        }
        // h_m(t) = sum_j gamma_j b^m_j(t); contributes u^(m-b) v^b terms.
        for (int b = 0; b <= m; ++b) {
            Rational coeff = 0;
            for (int j = 0; j <= std::min(b, m); ++j) {
                const Integer sign = ((b - j) % 2 == 0) ? 1 : -1;
                coeff += gamma[j] * Rational(sign * binomial(m, j) * binomial(m - j, b - j));
            }
            if (coeff != 0)
                result.witness.set_coeff(m - b, b, result.witness.coeff(m - b, b) + coeff);
        }
    }
    return result;
}

SmoothSpace build_smooth_space_B(const TensorProductSpace& space, int k) {
    const int p = space.kv_s().degree();
    const int q = space.kv_t().degree();
    if (k < 0 || k > std::min(p, q))
        throw std::invalid_argument("smoothness order must satisfy 0 <= k <= min(p,q)");

    const std::size_t dim_s = space.dim_s();
    const std::size_t dim_t = space.dim_t();
    const int n = k + 1;

    // Corner-jet matching system: unknowns are coefficients on the block
    // l1,l2 <= k, equations are mixed partials 0 <= a1,a2 <= k at (0,0).
    // The matrix is the Kronecker product of two triangular derivative tables.
    RationalMatrix sys(n * n, n * n);
    std::vector<std::vector<Rational>> ds(n, std::vector<Rational>(n)), dt(n, std::vector<Rational>(n));
    for (int a = 0; a < n; ++a)
        for (int l = 0; l < n; ++l) {
            ds[a][l] = bspline_derivative_at_zero(space.kv_s(), l, a);
            dt[a][l] = bspline_derivative_at_zero(space.kv_t(), l, a);
        }
    for (int a1 = 0; a1 < n; ++a1)
        for (int a2 = 0; a2 < n; ++a2)
            for (int l1 = 0; l1 < n; ++l1)
                for (int l2 = 0; l2 < n; ++l2)
                    sys(a1 * n + a2, l1 * n + l2) = ds[a1][l1] * dt[a2][l2];
    if (sys.rank() != static_cast<std::size_t>(n * n))
        throw std::domain_error("type-B matching system is rank deficient (rank " +
                                std::to_string(sys.rank()) + " of " + std::to_string(n * n) + ")");

    SmoothSpace out{space, k, SingularKind::type_b, {}};
    for (int i = 0; i <= k; ++i)
        for (int j = 0; i + j <= k; ++j) {
            const Poly2<Rational> target = tri_bernstein_B_composed<Rational>(k, i, j);
            std::vector<Rational> rhs(n * n);
            for (int a1 = 0; a1 < n; ++a1)
                for (int a2 = 0; a2 < n; ++a2)
                    rhs[a1 * n + a2] = target.partial_at(a1, a2, Rational(0), Rational(0));
            const std::vector<Rational> x = solve(sys, rhs);
            SmoothBasisFunction fn;
            fn.smooth = true;
            fn.i = i;
            fn.j = j;
            fn.coeffs.assign(space.dimension(), Rational(0));
            for (int l1 = 0; l1 < n; ++l1)
                for (int l2 = 0; l2 < n; ++l2) fn.coeffs[l1 * dim_t + l2] = x[l1 * n + l2];
            out.basis.push_back(std::move(fn));
        }
    for (std::size_t i = 0; i < dim_s; ++i)
        for (std::size_t j = 0; j < dim_t; ++j) {
            if (std::max(i, j) <= static_cast<std::size_t>(k)) continue;
            SmoothBasisFunction fn;
            fn.smooth = false;
            fn.i = static_cast<int>(i);
            fn.j = static_cast<int>(j);
            fn.coeffs.assign(space.dimension(), Rational(0));
            fn.coeffs[i * dim_t + j] = 1;
            out.basis.push_back(std::move(fn));
        }
    return out;
}

namespace {

std::vector<Rational> greville_points(const KnotVector& kv) {
    const int p = kv.degree();
    std::vector<Rational> pts(kv.basis_count());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        Rational acc = 0;
        for (int a = 1; a <= p; ++a) acc += kv.knots()[i + a];
        if (p > 0)
            pts[i] = acc / p;
        else
            pts[i] = (kv.knots()[i] + kv.knots()[i + 1]) / 2;
    }
    return pts;
}

// Weights w with sum_a w[a] B_i(x[a]) = delta_{i,target} for the kv basis.
std::vector<Rational> collocation_dual_weights(const KnotVector& kv,
                                               const std::vector<Rational>& pts,
                                               std::size_t target) {
    const std::size_t n = kv.basis_count();
    RationalMatrix m(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t i = 0; i < n; ++i) m(a, i) = eval_bspline(kv, i, pts[a]);
    // Solve M^T w = e_target.
    std::vector<Rational> e(n, Rational(0));
    e[target] = 1;
    return solve(m.transposed(), e);
}

std::vector<Rational> bernstein_dual_weights(int degree, const std::vector<Rational>& pts,
                                             int target) {
    const int n = degree + 1;
    RationalMatrix m(n, n);
    for (int a = 0; a < n; ++a)
        for (int j = 0; j < n; ++j) m(a, j) = eval_bernstein(degree, j, pts[a]);
    std::vector<Rational> e(n, Rational(0));
    e[target] = 1;
    return solve(m.transposed(), e);
}

}  // namespace

Rational DualFunctional::apply_exact(const RationalSplineFn& f) const {
    Rational acc = 0;
    for (std::size_t a = 0; a < points_s.size(); ++a) {
        if (weights_s[a] == 0) continue;
        Rational inner = 0;
        for (std::size_t b = 0; b < points_t.size(); ++b)
            if (weights_t[b] != 0) inner += weights_t[b] * f.eval(points_s[a], points_t[b]);
        acc += weights_s[a] * inner;
    }
    return acc;
}

double DualFunctional::apply(const SplineFn& f) const {
    double acc = 0;
    for (std::size_t a = 0; a < points_s.size(); ++a) {
        double inner = 0;
        for (std::size_t b = 0; b < points_t.size(); ++b)
            inner += to_double(weights_t[b]) * f.eval(to_double(points_s[a]), to_double(points_t[b]));
        acc += to_double(weights_s[a]) * inner;
    }
    return acc;
}

std::vector<DualFunctional> build_dual_basis(const SmoothSpace& space) {
    if (space.kind != SingularKind::type_a)
        throw std::invalid_argument("dual basis construction requires a type-A smooth space");

    const KnotVector& kv_s = space.space.kv_s();
    const KnotVector& kv_t = space.space.kv_t();
    const std::vector<Rational> gs = greville_points(kv_s);
    const std::vector<Rational> gt = greville_points(kv_t);

    std::vector<DualFunctional> out;
    out.reserve(space.basis.size());
    for (const SmoothBasisFunction& fn : space.basis) {
        DualFunctional dual;
        dual.smooth = fn.smooth;
        dual.i = fn.i;
        dual.j = fn.j;
        dual.points_s = gs;
        dual.weights_s = collocation_dual_weights(kv_s, gs, fn.i);
        if (fn.smooth) {
            // mu^i_j: dual to the degree-i Bernstein family in t.
            std::vector<Rational> pts(fn.i + 1);
            for (int r = 0; r <= fn.i; ++r)
                pts[r] = fn.i > 0 ? Rational(r, fn.i) : Rational(1, 2);
            dual.points_t = pts;
            dual.weights_t = bernstein_dual_weights(fn.i, pts, fn.j);
        } else {
            dual.points_t = gt;
            dual.weights_t = collocation_dual_weights(kv_t, gt, fn.j);
        }
        out.push_back(std::move(dual));
    }
    return out;
}

}  // namespace igs
