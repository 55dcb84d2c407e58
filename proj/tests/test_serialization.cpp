#include "igs/serialization.hpp"

#include "igs/fixtures.hpp"
#include "igs/singular_basis.hpp"
#include "igs/transform.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

using namespace igs;

namespace {

const std::vector<Rational> kQuarterKnots{Rational(1, 4), Rational(1, 2), Rational(3, 4)};

}  // namespace

TEST_CASE("matrix JSON round trip") {
    const RationalMatrix m =
        knot_insertion_matrix(KnotVector::from_interior(2, {}), kQuarterKnots);
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
    // Integer entries are also accepted.
    CHECK(matrix_from_json(Json::parse(R"([[1, "1/2"], ["-3/4", 0]])"))(1, 0) == Rational(-3, 4));
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([[1, 2], [3]])")), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([[1.5]])")), std::invalid_argument);
}

TEST_CASE("matrix text table") {
    const RationalMatrix m =
        knot_insertion_matrix(KnotVector::from_interior(2, {}), kQuarterKnots);
    CHECK(matrix_to_text(m) ==
          "1  3/4  3/8  1/8    0  0\n"
          "0  1/4  1/2  1/2  1/4  0\n"
          "0    0  1/8  3/8  3/4  1\n");
}

TEST_CASE("knot vector round trip") {
    const KnotVector kv = KnotVector::from_interior(3, kQuarterKnots);
    CHECK(knot_vector_from_json(3, knot_vector_to_json(kv)) == kv);
}

TEST_CASE("rational spline round trip") {
    const TensorProductSpace space(KnotVector::from_interior(2, kQuarterKnots),
                                   KnotVector::from_interior(2, {}));
    std::vector<Rational> coeffs(space.dimension());
    for (std::size_t c = 0; c < coeffs.size(); ++c) coeffs[c] = Rational(3 * c + 1, c + 2);
    const RationalSplineFn f(space, coeffs);
    const RationalSplineFn back = spline_from_json(spline_to_json(f));
    CHECK(back.space() == space);
    CHECK(back.raw() == f.raw());

    // Shape mismatch errors mention both shapes.
    Json j = spline_to_json(f);
    j["coeffs"].erase(0);
    CHECK_THROWS_WITH_AS(spline_from_json(j), doctest::Contains("do not match"),
                         std::invalid_argument);
}

TEST_CASE("double spline round trip") {
    const auto geom = fixtures::quarter_circle_geometry();
    const SplineFn back = double_spline_from_json(spline_to_json(geom.g0));
    CHECK(back.space() == geom.g0.space());
    CHECK(back.raw() == geom.g0.raw());
}

TEST_CASE("smooth space round trip") {
    const TensorProductSpace space(KnotVector::from_interior(2, kQuarterKnots),
                                   KnotVector::from_interior(2, kQuarterKnots));
    const SmoothSpace s = build_smooth_space_A(space, 1);
    const SmoothSpace back = smooth_space_from_json(smooth_space_to_json(s));
    CHECK(back.order == s.order);
    CHECK(back.kind == s.kind);
    CHECK(back.space == s.space);
    REQUIRE(back.basis.size() == s.basis.size());
    for (std::size_t b = 0; b < s.basis.size(); ++b) {
        CHECK(back.basis[b].smooth == s.basis[b].smooth);
        CHECK(back.basis[b].i == s.basis[b].i);
        CHECK(back.basis[b].j == s.basis[b].j);
        CHECK(back.basis[b].coeffs == s.basis[b].coeffs);
    }
}

TEST_CASE("triangular patch round trip") {
    const TriangularPatchA<Rational> p = fixtures::quarter_sector_patch(3);
    const TriangularPatchA<Rational> back = tri_patch_from_json(tri_patch_to_json(p));
    CHECK(back.degree() == p.degree());
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j) CHECK(back.point(i, j, 3 - i - j) == p.point(i, j, 3 - i - j));

    Json j = tri_patch_to_json(p);
    j["points"].erase(0);
    CHECK_THROWS_AS(tri_patch_from_json(j), std::invalid_argument);
}
