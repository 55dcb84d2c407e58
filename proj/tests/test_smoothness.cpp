#include "igs/fixtures.hpp"
#include "igs/singular_basis.hpp"
#include "igs/smoothness.hpp"

#include <doctest.h>

#include <cmath>

using namespace igs;
using namespace igs::fixtures;

namespace {

RationalSplineFn smooth_fn(const SmoothSpace& s, std::size_t index) {
    return s.basis.at(index).as_spline(s.space);
}

}  // namespace

TEST_CASE("type-A smooth basis functions pass the exact-backend C^k check") {
    const HomogeneousPatch<Rational> geom = type_a_geometry(2);
    const SmoothSpace space = build_smooth_space_A(geom.space(), 2);

    // One representative of each structural kind; the full sweep is the
    // acceptance suite's job.
    for (std::size_t idx : {std::size_t{0}, std::size_t{3}, std::size_t{5}}) {
        const SmoothnessVerdict v =
            verify_ck<Rational>(geom, smooth_fn(space, idx), SingularityType::type_a, 2);
        CHECK(v.pass());
        for (int order = 0; order <= 2; ++order) CHECK(v.limit_spread[order] < 1e-6);
    }
}

TEST_CASE("a non-member function fails the C^k check decisively") {
    const HomogeneousPatch<Rational> geom = type_a_geometry(2);
    std::vector<Rational> coeffs(geom.space().dimension(), Rational(0));
    coeffs[1 * geom.space().dim_t() + 1] = 1;  // B^2_1(s) B^2_1(t)
    const RationalSplineFn bad(geom.space(), coeffs);
    const SmoothnessVerdict v = verify_ck<Rational>(geom, bad, SingularityType::type_a, 1);
    CHECK_FALSE(v.pass());
    CHECK(v.limit_spread[1] > 1e-2);
}

TEST_CASE("the weight function itself is C^k with zero spread") {
    const HomogeneousPatch<Rational> geom = type_a_geometry(2);
    // f = g0 gives phi = 1: every path limit is identical.
    const SmoothnessVerdict v = verify_ck<Rational>(geom, geom.g0, SingularityType::type_a, 2);
    CHECK(v.pass());
    CHECK(v.limit_spread[0] == 0.0);
    for (const DerivativeTrace& tr : v.traces)
        if (tr.a1 == 0 && tr.a2 == 0) CHECK(tr.limit == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("traces converge along each path (Cauchy tail)") {
    const HomogeneousPatch<Rational> geom = type_a_geometry(2);
    const SmoothSpace space = build_smooth_space_A(geom.space(), 2);
    const SmoothnessVerdict v =
        verify_ck<Rational>(geom, smooth_fn(space, 3), SingularityType::type_a, 2);
    for (const DerivativeTrace& tr : v.traces) {
        const std::size_t n = tr.values.size();
        REQUIRE(n >= 6);
        // Differences along the tail shrink (allow slack for tiny magnitudes).
        const double d1 = std::abs(tr.values[n - 5] - tr.values[n - 6]);
        const double d2 = std::abs(tr.values[n - 1] - tr.values[n - 2]);
        CHECK(d2 <= 0.5 * d1 + 1e-12);
    }
}

TEST_CASE("type-B smooth functions on the quarter circle: C^1 always, C^2 only symmetric") {
    // Documented behavior, confirmed in exact arithmetic: the jet-matching
    // system pins down Btilde on the (k+1)^2 corner block uniquely, but the
    // residual Btilde - beta o u_B keeps off-diagonal monomials s^a t^b of
    // total degree <= 2k (e.g. s^3 t). Composed with the inverse of
    // u_B = (st, t-s), whose branch s(u,v) = (-v + sqrt(v^2+4u))/2 is not
    // smooth at the corner, such a monomial has finite but direction-dependent
    // second-derivative limits. Hence every constructed function is C^1, while
    // at order 2 only the index-symmetric ones ((0,0) and (1,1), whose
    // residuals cancel under the s<->t symmetry) have path-independent limits.
    const HomogeneousPatch<double> geom = quarter_circle_geometry();
    const SmoothSpace space = build_smooth_space_B(geom.space(), 2);
    VerifyOptions opts;
    opts.m_min = 4;
    opts.m_max = 10;  // double precision: stop before conditioning dominates

    for (std::size_t idx = 0; idx < 6; ++idx) {
        REQUIRE(space.basis.at(idx).smooth);
        const SmoothnessVerdict v = verify_ck<double>(
            geom, to_double_spline(smooth_fn(space, idx)), SingularityType::type_b, 2, opts);
        CHECK(v.limit_spread[0] < 1e-6);
        CHECK(v.limit_spread[1] < 1e-6);
        const bool symmetric = space.basis[idx].i == space.basis[idx].j;
        if (symmetric) {
            CHECK(v.pass());
            CHECK(v.limit_spread[2] < 1e-6);
        } else {
            CHECK_FALSE(v.pass());
            CHECK(v.limit_spread[2] > 1e-2);  // genuine path dependence
        }
    }

    // A bare block function (B^3_1(s) B^3_1(t), not a member of the smooth
    // space) is not even C^1 across the singular corner.
    std::vector<Rational> coeffs(geom.space().dimension(), Rational(0));
    coeffs[1 * geom.space().dim_t() + 1] = 1;
    const SmoothnessVerdict bad = verify_ck<double>(
        geom, to_double_spline(RationalSplineFn(geom.space(), coeffs)),
        SingularityType::type_b, 1, opts);
    CHECK_FALSE(bad.pass());
}

TEST_CASE("verify_ck argument validation") {
    const HomogeneousPatch<Rational> geom = type_a_geometry(2);
    CHECK_THROWS_AS(verify_ck<Rational>(geom, geom.g0, SingularityType::regular, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_ck<Rational>(geom, geom.g0, SingularityType::type_a, 4),
                    std::invalid_argument);
}

TEST_CASE("verify_split accepts the fixture geometries") {
    for (int p : {2, 3}) {
        const HomogeneousPatch<Rational> geom = type_a_geometry(p);
        const SplitReport r = verify_split(geom, quarter_sector_patch(p), p);
        CHECK(r.jets_match);
        CHECK(r.regular);
        CHECK(r.min_abs_det > 1e-3);
    }
}

TEST_CASE("verify_split detects a perturbed control point") {
    const HomogeneousPatch<Rational> geom = type_a_geometry(2);
    TriangularPatchA<Rational> rho = quarter_sector_patch(2);
    rho.point(0, 1, 1)[1] += Rational(1, 1000);
    const SplitReport r = verify_split(geom, rho, 2);
    CHECK_FALSE(r.jets_match);
    CHECK(r.mismatch_component == 1);
    CHECK(r.mismatch_order >= 1);  // value jet at the apex is unaffected
}

TEST_CASE("verify_split flags a folded triangular patch") {
    // Collapse all control points onto a line: the map is nowhere regular.
    TriangularPatchA<Rational> rho(2, 3);
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; i + j <= 2; ++j) {
            const Rational a(i), b(j);
            rho.point(i, j, 2 - i - j) = {Rational(1), a + b, (a + b) * 2};
        }
    const TensorBezierNet<Rational> net = tri_to_tensor(rho);
    const HomogeneousPatch<Rational> geom(net_component(net, 0), net_component(net, 1),
                                          net_component(net, 2));
    const SplitReport r = verify_split(geom, rho, 2);
    CHECK(r.jets_match);  // the split identity still holds
    CHECK_FALSE(r.regular);
    CHECK(r.min_abs_det < 1e-10);
}
