#include "igs/smoothness.hpp"

#include "igs/singular_basis.hpp"
#include "igs/transform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace igs {

namespace {

double richardson_last4(const std::vector<double>& v) {
    // Sample ratio 2 in the approach parameter: one level removes the O(2^-m)
    // term, the second the O(4^-m) term.
    const std::size_t n = v.size();
    if (n < 4) throw std::invalid_argument("richardson: need at least 4 samples");
    std::array<double, 4> w{v[n - 4], v[n - 3], v[n - 2], v[n - 1]};
    std::array<double, 3> r1;
    for (int i = 0; i < 3; ++i) r1[i] = 2.0 * w[i + 1] - w[i];
    std::array<double, 2> r2;
    for (int i = 0; i < 2; ++i) r2[i] = (4.0 * r1[i + 1] - r1[i]) / 3.0;
    return r2[1];
}

template <class T>
std::vector<std::array<Rational, 2>> approach_directions(SingularityType kind) {
    if (kind == SingularityType::type_a) {
        // Parameter rays t = const with s scaled down; direction (1, t).
        return {{Rational(1), Rational(0)},
                {Rational(1), Rational(1, 4)},
                {Rational(1), Rational(1, 2)},
                {Rational(1), Rational(3, 4)},
                {Rational(1), Rational(1)}};
    }
    // Rays into the corner (0,0).
    return {{Rational(1), Rational(4)},
            {Rational(1), Rational(2)},
            {Rational(1), Rational(1)},
            {Rational(2), Rational(1)},
            {Rational(4), Rational(1)}};
}

}  // namespace

template <class T>
SmoothnessVerdict verify_ck(const HomogeneousPatch<T>& geom, const SplineCoefficients<T>& f,
                            SingularityType kind, int k, VerifyOptions options) {
    if (kind == SingularityType::regular)
        throw std::invalid_argument("verify_ck expects a singular geometry");
    if (k < 0 || k > 3)
        throw std::invalid_argument("verify_ck supports orders 0..3");

    const auto dirs = approach_directions<T>(kind);
    SmoothnessVerdict verdict;
    verdict.order_tested = k;

    for (std::size_t path = 0; path < dirs.size(); ++path) {
        const Rational& da = dirs[path][0];
        const Rational& db = dirs[path][1];
        verdict.paths.push_back("dir(" + format_rational(da) + "," + format_rational(db) + ")");

        // One trace per derivative on this path.
        std::vector<DerivativeTrace> traces;
        for (int a1 = 0; a1 <= k; ++a1)
            for (int a2 = 0; a1 + a2 <= k; ++a2)
                traces.push_back({path, a1, a2, {}, 0.0});

        for (int m = options.m_min; m <= options.m_max; ++m) {
            const Rational scale = Rational(Integer(1), Integer(1) << m);
            T s, t;
            if (kind == SingularityType::type_a) {
                s = from_rational<T>(scale);
                t = from_rational<T>(db);
            } else {
                s = from_rational<T>(scale * da / 4);
                t = from_rational<T>(scale * db / 4);
            }
            const Jet2<T> jet = physical_partials_at_param(geom, f, s, t, k);
            std::size_t idx = 0;
            for (int a1 = 0; a1 <= k; ++a1)
                for (int a2 = 0; a1 + a2 <= k; ++a2) {
                    if constexpr (std::is_same_v<T, Rational>)
                        traces[idx].values.push_back(to_double(jet.at(a1, a2)));
                    else
                        traces[idx].values.push_back(jet.at(a1, a2));
                    ++idx;
                }
        }
        for (DerivativeTrace& tr : traces) {
            tr.limit = richardson_last4(tr.values);
            verdict.traces.push_back(std::move(tr));
        }
    }

    verdict.limit_spread.assign(k + 1, 0.0);
    for (int a1 = 0; a1 <= k; ++a1)
        for (int a2 = 0; a1 + a2 <= k; ++a2) {
            double lo = 1e300, hi = -1e300;
            for (const DerivativeTrace& tr : verdict.traces)
                if (tr.a1 == a1 && tr.a2 == a2) {
                    lo = std::min(lo, tr.limit);
                    hi = std::max(hi, tr.limit);
                }
            double& spread = verdict.limit_spread[a1 + a2];
            spread = std::max(spread, hi - lo);
        }

    for (int order = 0; order <= k; ++order)
        verdict.pass_per_order.push_back(verdict.limit_spread[order] <= options.tolerance(order));
    return verdict;
}

template SmoothnessVerdict verify_ck<double>(const HomogeneousPatch<double>&,
                                             const SplineCoefficients<double>&, SingularityType,
                                             int, VerifyOptions);
template SmoothnessVerdict verify_ck<Rational>(const HomogeneousPatch<Rational>&,
                                               const SplineCoefficients<Rational>&,
                                               SingularityType, int, VerifyOptions);

namespace {

// Row over the kv basis representing the polynomial sum_b c_b t^b, b <= q.
std::vector<Rational> polynomial_as_spline_row(const std::vector<Rational>& mono,
                                               const KnotVector& kv) {
    const int q = kv.degree();
    std::vector<Rational> bern(q + 1, Rational(0));
    for (std::size_t b = 0; b < mono.size(); ++b)
        for (int j = 0; j <= q; ++j) {
            const Integer num = binomial(j, static_cast<int>(b));
            if (num != 0)
                bern[j] += mono[b] * Rational(num, binomial(q, static_cast<int>(b)));
        }
    const RationalMatrix k_tau =
        knot_insertion_matrix(KnotVector::from_interior(q, {}), kv.interior_knots());
    std::vector<Rational> row(kv.basis_count(), Rational(0));
    for (int j = 0; j <= q; ++j)
        for (std::size_t c = 0; c < row.size(); ++c) row[c] += bern[j] * k_tau(j, c);
    return row;
}

}  // namespace

SplitReport verify_split(const HomogeneousPatch<Rational>& geom,
                         const TriangularPatchA<Rational>& rho, int k) {
    if (rho.dim() < 3)
        throw std::invalid_argument("verify_split needs homogeneous (rho0,rho1,rho2) control points");
    const TensorProductSpace& space = geom.space();
    const KnotVector& kv_s = space.kv_s();
    const KnotVector& kv_t = space.kv_t();
    const std::size_t dim_t = space.dim_t();

    SplitReport report;
    report.jets_match = true;

    const std::array<const RationalSplineFn*, 3> comps{&geom.g0, &geom.g1, &geom.g2};
    for (int c = 0; c < 3 && report.jets_match; ++c) {
        const Poly2<Rational> p = rho.component_poly(c);
        for (int m = 0; m <= k && report.jets_match; ++m) {
            // LHS: (1/m!) d^m/ds^m of the spline at s=0, as a row over kv_t.
            std::vector<Rational> lhs(dim_t, Rational(0));
            for (std::size_t i = 0; i <= static_cast<std::size_t>(std::min(kv_s.degree(), m)); ++i) {
                const Rational jet = first_span_monomials(kv_s, i)[m];
                if (jet == 0) continue;
                for (std::size_t j = 0; j < dim_t; ++j) lhs[j] += jet * comps[c]->at(i, j);
            }
            // RHS: coefficient of s^m in rho_c(s, s t), a t-polynomial of deg <= m.
            std::vector<Rational> mono(m + 1, Rational(0));
            for (int b = 0; b <= m; ++b) mono[b] = p.coeff(m - b, b);
            const std::vector<Rational> rhs = polynomial_as_spline_row(mono, kv_t);
            for (std::size_t j = 0; j < dim_t; ++j)
                if (lhs[j] != rhs[j]) {
                    report.jets_match = false;
                    report.mismatch_component = c;
                    report.mismatch_order = m;
                    report.mismatch_basis_index = j;
                    break;
                }
        }
    }

    // Regularity of (rho1/rho0, rho2/rho0) over the triangle, 40x40 grid.
    const Poly2<double> p0 = [&] {
        Poly2<double> out;
        const Poly2<Rational> p = rho.component_poly(0);
        for (std::size_t a = 0; a <= p.deg_x(); ++a)
            for (std::size_t b = 0; b <= p.deg_y(); ++b) out.set_coeff(a, b, to_double(p.coeff(a, b)));
        return out;
    }();
    auto to_dbl = [&](int c) {
        Poly2<double> out;
        const Poly2<Rational> p = rho.component_poly(c);
        for (std::size_t a = 0; a <= p.deg_x(); ++a)
            for (std::size_t b = 0; b <= p.deg_y(); ++b) out.set_coeff(a, b, to_double(p.coeff(a, b)));
        return out;
    };
    const Poly2<double> p1 = to_dbl(1), p2 = to_dbl(2);

    report.min_abs_det = 1e300;
    const int n = 40;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b <= a; ++b) {
            const double u = (a + 0.5) / n;
            const double v = u * (b + 0.5) / (a + 1);
            const double w = p0.eval(u, v);
            const double wu = p0.partial_at(1, 0, u, v), wv = p0.partial_at(0, 1, u, v);
            const double x = p1.eval(u, v), y = p2.eval(u, v);
            const double xu = p1.partial_at(1, 0, u, v), xv = p1.partial_at(0, 1, u, v);
            const double yu = p2.partial_at(1, 0, u, v), yv = p2.partial_at(0, 1, u, v);
            const double det =
                ((xu * w - x * wu) * (yv * w - y * wv) - (xv * w - x * wv) * (yu * w - y * wu)) /
                (w * w * w * w);
            if (std::abs(det) < report.min_abs_det) {
                report.min_abs_det = std::abs(det);
                report.min_det_location = {u, v};
            }
        }
    report.regular = report.min_abs_det > 1e-10;
    return report;
}

}  // namespace igs
