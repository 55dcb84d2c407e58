#include "igs/bspline.hpp"
#include "igs/tensor_space.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace igs;

namespace {

KnotVector quarter(int degree) {
    return KnotVector::from_interior(degree, {Rational(1, 4), Rational(1, 2), Rational(3, 4)});
}

std::vector<Rational> random_rationals(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(0, 1000);
    std::vector<Rational> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(num(rng), 1000);
    return out;
}

}  // namespace

TEST_CASE("knot vector validation") {
    CHECK_NOTHROW(KnotVector::from_interior(2, {Rational(1, 2)}));
    // Not open (missing end multiplicities).
    CHECK_THROWS_AS(KnotVector(2, {Rational(0), Rational(0), Rational(1, 2), Rational(1),
                                   Rational(1), Rational(1)}),
                    std::invalid_argument);
    // Decreasing interior knots.
    CHECK_THROWS_AS(KnotVector::from_interior(2, {Rational(3, 4), Rational(1, 4)}),
                    std::invalid_argument);
    // Interior multiplicity above the degree.
    CHECK_THROWS_AS(KnotVector::from_interior(2, {Rational(1, 2), Rational(1, 2), Rational(1, 2)}),
                    std::invalid_argument);
    // Interior knot outside (0,1).
    CHECK_THROWS_AS(KnotVector::from_interior(2, {Rational(5, 4)}), std::invalid_argument);

    const KnotVector kv = quarter(2);
    CHECK(kv.interior_count() == 3);
    CHECK(kv.basis_count() == 6);
    CHECK(kv.first_interior_or_one() == Rational(1, 4));
    CHECK(KnotVector::from_interior(3, {}).first_interior_or_one() == Rational(1));
    CHECK(KnotVector::from_interior(3, {Rational(1, 2), Rational(1, 2)})
              .max_interior_multiplicity() == 2);
}

TEST_CASE("partition of unity, nonnegativity, local support") {
    for (int p = 1; p <= 4; ++p) {
        const KnotVector kv = quarter(p);
        for (const Rational& s : random_rationals(40, 7u + p)) {
            Rational sum = 0;
            for (std::size_t i = 0; i < kv.basis_count(); ++i) {
                const Rational v = eval_bspline(kv, i, s);
                CHECK(v >= 0);
                sum += v;
                // Local support: zero outside [knots[i], knots[i+p+1]].
                if (s < kv.knots()[i] || s > kv.knots()[i + p + 1]) CHECK(v == 0);
            }
            CHECK(sum == 1);  // exact
        }
        // Double backend within 1e-14.
        for (int a = 0; a <= 50; ++a) {
            const double s = a / 50.0;
            double sum = 0;
            for (std::size_t i = 0; i < kv.basis_count(); ++i) sum += eval_bspline(kv, i, s);
            CHECK(std::abs(sum - 1.0) < 1e-14);
        }
    }
}

TEST_CASE("hat function values are exact") {
    const KnotVector kv = KnotVector::from_interior(1, {Rational(1, 2)});
    CHECK(eval_bspline(kv, 0, Rational(3, 10)) == Rational(2, 5));
    CHECK(eval_bspline(kv, 1, Rational(3, 10)) == Rational(3, 5));
    CHECK(eval_bspline(kv, 2, Rational(3, 10)) == Rational(0));
    // Endpoint conventions: right-continuous at 0, left limit at 1.
    CHECK(eval_bspline(kv, 0, Rational(0)) == 1);
    CHECK(eval_bspline(kv, 2, Rational(1)) == 1);
    CHECK(eval_bspline(kv, 1, Rational(1)) == 0);
}

TEST_CASE("bernstein values and derivatives") {
    CHECK(eval_bernstein(2, 1, Rational(1, 4)) == Rational(3, 8));
    CHECK(eval_bernstein(3, 1, Rational(1, 4)) == Rational(27, 64));
    CHECK(eval_bernstein(3, 0, Rational(1, 4)) == Rational(27, 64));
    // Partition of unity (exact).
    for (const Rational& t : random_rationals(20, 11)) {
        Rational sum = 0;
        for (int j = 0; j <= 3; ++j) sum += eval_bernstein(3, j, t);
        CHECK(sum == 1);
    }
    // d/dt b^3_1 = 3 (b^2_0 - b^2_1).
    const Rational t(2, 7);
    CHECK(eval_bernstein_derivative(3, 1, t, 1) ==
          3 * (eval_bernstein(2, 0, t) - eval_bernstein(2, 1, t)));
    CHECK(eval_bernstein_derivative(3, 1, t, 4) == 0);
}

TEST_CASE("b-spline derivatives match finite differences") {
    const KnotVector kv = quarter(3);
    const double h = 1e-5;
    for (std::size_t i = 0; i < kv.basis_count(); ++i) {
        for (double s : {0.1, 0.3, 0.6, 0.9}) {
            auto f = [&](double x) { return eval_bspline(kv, i, x); };
            const double d1 = (f(s + h) - f(s - h)) / (2 * h);
            CHECK(std::abs(eval_bspline_derivative(kv, i, s, 1) - d1) < 1e-6);
            const double d2 = (f(s + h) - 2 * f(s) + f(s - h)) / (h * h);
            CHECK(std::abs(eval_bspline_derivative(kv, i, s, 2) - d2) < 1e-4);
        }
    }
}

TEST_CASE("argument validation") {
    const KnotVector kv = quarter(2);
    CHECK_THROWS_AS(eval_bspline(kv, 6, Rational(1, 2)), std::out_of_range);
    CHECK_THROWS_AS(eval_bspline(kv, 0, Rational(-1, 2)), std::domain_error);
    CHECK_THROWS_AS(eval_bspline(kv, 0, Rational(3, 2)), std::domain_error);
    CHECK_THROWS_AS(eval_bernstein(2, 3, 0.5), std::out_of_range);
    CHECK_THROWS_AS(eval_bspline_derivative(kv, 0, Rational(1, 2), -1), std::invalid_argument);
}

TEST_CASE("tensor-product spline evaluation") {
    const TensorProductSpace space(quarter(2), KnotVector::from_interior(3, {}));
    CHECK(space.dim_s() == 6);
    CHECK(space.dim_t() == 4);
    CHECK(space.dimension() == 24);

    const auto one = RationalSplineFn::constant(space, Rational(1));
    for (const Rational& s : random_rationals(5, 3))
        for (const Rational& t : random_rationals(5, 4)) {
            CHECK(one.eval(s, t) == 1);
            CHECK(one.eval(s, t, 1, 0) == 0);
            CHECK(one.eval(s, t, 0, 2) == 0);
        }

    // Mixed partial against a finite-difference stencil.
    std::vector<double> coeffs(space.dimension());
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (double& c : coeffs) c = uni(rng);
    const SplineFn f(space, coeffs);
    const double h = 1e-4, s = 0.35, t = 0.6;
    const double fd = (f.eval(s + h, t + h) - f.eval(s + h, t - h) - f.eval(s - h, t + h) +
                       f.eval(s - h, t - h)) /
                      (4 * h * h);
    CHECK(std::abs(f.eval(s, t, 1, 1) - fd) < 1e-5);

    CHECK_THROWS_AS(RationalSplineFn(space, std::vector<Rational>(5)), std::invalid_argument);
}

TEST_CASE("first-span monomials") {
    const KnotVector kv = quarter(2);
    // B^2_0 restricted to [0, 1/4) is (1 - 4s)^2 = 1 - 8s + 16s^2.
    const auto mono0 = first_span_monomials(kv, 0);
    REQUIRE(mono0.size() == 3);
    CHECK(mono0[0] == 1);
    CHECK(mono0[1] == -8);
    CHECK(mono0[2] == 16);
    // Functions with no support on the first span restrict to zero.
    for (const Rational& c : first_span_monomials(kv, 3)) CHECK(c == 0);
    // Polynomial reproduction on the first span (exact, all i).
    for (std::size_t i = 0; i < kv.basis_count(); ++i) {
        const auto mono = first_span_monomials(kv, i);
        for (const Rational& s : {Rational(1, 16), Rational(1, 8), Rational(3, 16)}) {
            Rational acc = 0, pw = 1;
            for (const Rational& c : mono) {
                acc += c * pw;
                pw *= s;
            }
            CHECK(acc == eval_bspline(kv, i, s));
        }
    }
}

TEST_CASE("derivatives at zero agree between the two exact routes") {
    for (int p : {2, 3}) {
        const KnotVector kv = quarter(p);
        for (std::size_t i = 0; i < kv.basis_count(); ++i) {
            const auto mono = first_span_monomials(kv, i);
            for (int m = 0; m <= p; ++m) {
                const Rational lhs = bspline_derivative_at_zero(kv, i, m);
                CHECK(lhs == mono[m] * factorial(m));
                CHECK(lhs == eval_bspline_derivative(kv, i, Rational(0), m));
            }
        }
    }
}
