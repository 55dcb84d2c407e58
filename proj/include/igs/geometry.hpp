#pragma once

#include "igs/tensor_space.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace igs {

/// Mixed partials d[a1][a2] of a bivariate function up to total order <= 3.
template <class T>
struct Jet2 {
    int order = 0;
    std::array<std::array<T, 4>, 4> d{};

    const T& at(int a1, int a2) const { return d[a1][a2]; }
    T& at(int a1, int a2) { return d[a1][a2]; }
};

template <class T>
Jet2<T> spline_partials(const SplineCoefficients<T>& f, const T& s, const T& t, int order) {
    if (order < 0 || order > 3) throw std::invalid_argument("jet order must be in [0,3]");
    Jet2<T> jet;
    jet.order = order;
    for (int a1 = 0; a1 <= order; ++a1)
        for (int a2 = 0; a1 + a2 <= order; ++a2) jet.d[a1][a2] = f.eval(s, t, a1, a2);
    return jet;
}

/// Partials of num/den from partials of num and den, by the graded Leibniz
/// rule: num_(a) = sum_{b<=a} C(a,b) F_(b) den_(a-b), solved for F in order.
template <class T>
Jet2<T> quotient_partials(const Jet2<T>& num, const Jet2<T>& den) {
    if (den.at(0, 0) == T(0)) throw std::domain_error("quotient jet: zero denominator");
    Jet2<T> out;
    out.order = num.order;
    for (int total = 0; total <= num.order; ++total)
        for (int a1 = 0; a1 <= total; ++a1) {
            const int a2 = total - a1;
            T acc = num.at(a1, a2);
            for (int b1 = 0; b1 <= a1; ++b1)
                for (int b2 = 0; b2 <= a2; ++b2) {
                    if (b1 == a1 && b2 == a2) continue;
                    const T c = from_rational<T>(
                        Rational(binomial(a1, b1) * binomial(a2, b2)));
                    acc -= c * out.at(b1, b2) * den.at(a1 - b1, a2 - b2);
                }
            out.at(a1, a2) = acc / den.at(0, 0);
        }
    return out;
}

namespace detail {

template <class T>
bool better_pivot(const T& a, const T& b) {
    if constexpr (std::is_same_v<T, double>) return std::abs(a) > std::abs(b);
    else return a != T(0) && b == T(0);
}

template <class T>
std::vector<T> small_solve(std::vector<std::vector<T>> a, std::vector<T> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (better_pivot(a[r][col], a[pivot][col])) pivot = r;
        if (a[pivot][col] == T(0)) throw std::domain_error("singular pushforward system");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == T(0)) continue;
            const T f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<T> x(n);
    for (std::size_t r = n; r-- > 0;) {
        T acc = b[r];
        for (std::size_t c = r + 1; c < n; ++c) acc -= a[r][c] * x[c];
        x[r] = acc / a[r][r];
    }
    return x;
}

}  // namespace detail

/// A rational geometry patch (g1/g0, g2/g0) with optional attached numerator f
/// for an isogeometric graph surface.
template <class T>
struct HomogeneousPatch {
    SplineCoefficients<T> g0, g1, g2;

    HomogeneousPatch(SplineCoefficients<T> w, SplineCoefficients<T> x, SplineCoefficients<T> y)
        : g0(std::move(w)), g1(std::move(x)), g2(std::move(y)) {
        if (!(g0.space() == g1.space()) || !(g0.space() == g2.space()))
            throw std::invalid_argument("geometry components must share one space");
    }

    const TensorProductSpace& space() const { return g0.space(); }
};

/// Physical partials of phi = (f/g0) o G^{-1} at the parameter point (s,t),
/// for all physical orders a1+a2 <= order (order <= 3). Solves the chain-rule
/// systems with the analytic parameter jets; no geometry inversion involved.
template <class T>
Jet2<T> physical_partials_at_param(const HomogeneousPatch<T>& geom,
                                   const SplineCoefficients<T>& f, const T& s, const T& t,
                                   int order) {
    if (order < 0 || order > 3)
        throw std::invalid_argument("analytic physical derivatives support order <= 3");
    const Jet2<T> w = spline_partials(geom.g0, s, t, order);
    const Jet2<T> g1 = quotient_partials(spline_partials(geom.g1, s, t, order), w);
    const Jet2<T> g2 = quotient_partials(spline_partials(geom.g2, s, t, order), w);
    const Jet2<T> ff = quotient_partials(spline_partials(f, s, t, order), w);

    // G_{i,(a1,a2)} for i in {1,2}.
    auto g = [&](int i, int a1, int a2) -> const T& {
        return i == 1 ? g1.at(a1, a2) : g2.at(a1, a2);
    };
    // Parameter direction a in {0,1} -> unit multi-index.
    auto dir = [](int a) { return a == 0 ? std::array<int, 2>{1, 0} : std::array<int, 2>{0, 1}; };
    auto gdir = [&](int i, std::array<int, 2> m) -> const T& { return g(i, m[0], m[1]); };
    auto add = [](std::array<int, 2> x, std::array<int, 2> y) {
        return std::array<int, 2>{x[0] + y[0], x[1] + y[1]};
    };

    Jet2<T> phi;
    phi.order = order;
    phi.at(0, 0) = ff.at(0, 0);
    if (order == 0) return phi;

    // Order 1: F_a = sum_i phi_i G_{i,a}.
    std::vector<std::vector<T>> a1(2, std::vector<T>(2));
    std::vector<T> b1(2);
    for (int a = 0; a < 2; ++a) {
        const auto m = dir(a);
        for (int i = 1; i <= 2; ++i) a1[a][i - 1] = gdir(i, m);
        b1[a] = ff.at(m[0], m[1]);
    }
    const std::vector<T> grad = detail::small_solve(a1, b1);
    phi.at(1, 0) = grad[0];
    phi.at(0, 1) = grad[1];
    if (order == 1) return phi;

    // Order 2: unknowns (phi_11, phi_12, phi_22) in physical indices.
    auto hess_slot = [](int i, int j) { return (i == 1 && j == 1) ? 0 : (i == 2 && j == 2) ? 2 : 1; };
    std::vector<std::vector<T>> a2(3, std::vector<T>(3, T(0)));
    std::vector<T> b2(3);
    const std::array<std::array<int, 2>, 3> pairs2{{{0, 0}, {0, 1}, {1, 1}}};
    for (int e = 0; e < 3; ++e) {
        const auto ma = dir(pairs2[e][0]);
        const auto mb = dir(pairs2[e][1]);
        const auto mab = add(ma, mb);
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                a2[e][hess_slot(i, j)] += gdir(i, ma) * gdir(j, mb);
        T rhs = ff.at(mab[0], mab[1]);
        rhs -= grad[0] * g(1, mab[0], mab[1]) + grad[1] * g(2, mab[0], mab[1]);
        b2[e] = rhs;
    }
    const std::vector<T> hess = detail::small_solve(a2, b2);
    phi.at(2, 0) = hess[0];
    phi.at(1, 1) = hess[1];
    phi.at(0, 2) = hess[2];
    if (order == 2) return phi;

    // Order 3: unknowns phi_{xxx}, phi_{xxy}, phi_{xyy}, phi_{yyy}.
    std::vector<std::vector<T>> a3(4, std::vector<T>(4, T(0)));
    std::vector<T> b3(4);
    const std::array<std::array<int, 3>, 4> triples{{{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {1, 1, 1}}};
    for (int e = 0; e < 4; ++e) {
        const auto ma = dir(triples[e][0]);
        const auto mb = dir(triples[e][1]);
        const auto mc = dir(triples[e][2]);
        const auto mabc = add(add(ma, mb), mc);
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                for (int l = 1; l <= 2; ++l) {
                    const int slot = (i - 1) + (j - 1) + (l - 1);
                    a3[e][slot] += gdir(i, ma) * gdir(j, mb) * gdir(l, mc);
                }
        T rhs = ff.at(mabc[0], mabc[1]);
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) {
                const T h = hess[hess_slot(i, j)];
                const auto mab = add(ma, mb);
                const auto mac = add(ma, mc);
                const auto mbc = add(mb, mc);
                rhs -= h * (g(i, mab[0], mab[1]) * gdir(j, mc) +
                            g(i, mac[0], mac[1]) * gdir(j, mb) +
                            g(i, mbc[0], mbc[1]) * gdir(j, ma));
            }
        rhs -= grad[0] * g(1, mabc[0], mabc[1]) + grad[1] * g(2, mabc[0], mabc[1]);
        b3[e] = rhs;
    }
    const std::vector<T> third = detail::small_solve(a3, b3);
    phi.at(3, 0) = third[0];
    phi.at(2, 1) = third[1];
    phi.at(1, 2) = third[2];
    phi.at(0, 3) = third[3];
    return phi;
}

// -------- Double-precision geometry with inversion -------------------------

enum class SingularityType { regular, type_a, type_b };

struct SingularityReport {
    SingularityType kind = SingularityType::regular;
    std::string locus;
    double collinearity_factor = 0.0;  // lambda, type B only
};

class GeometryMap {
public:
    GeometryMap(SplineFn g0, SplineFn g1, SplineFn g2);

    const HomogeneousPatch<double>& patch() const { return patch_; }
    const TensorProductSpace& space() const { return patch_.space(); }

    std::array<double, 2> eval(double s, double t) const;
    std::array<std::array<double, 2>, 2> jacobian(double s, double t) const;
    double jacobian_det(double s, double t) const;

    SingularityReport classify() const;

    /// Newton inversion seeded from a cached 32x32 parameter grid.
    std::array<double, 2> invert(const std::array<double, 2>& x) const;
    std::array<double, 2> invert(const std::array<double, 2>& x,
                                 const std::array<double, 2>& guess) const;

    double domain_diameter() const { return diameter_; }

private:
    HomogeneousPatch<double> patch_;
    std::vector<std::array<double, 4>> seed_grid_;  // s, t, x, y
    double diameter_ = 1.0;
};

class IsogeometricFunction {
public:
    IsogeometricFunction(const GeometryMap* geometry, SplineFn f)
        : geometry_(geometry), f_(std::move(f)) {
        if (!(f_.space() == geometry->space()))
            throw std::invalid_argument("isogeometric numerator must share the geometry space");
    }

    const GeometryMap& geometry() const { return *geometry_; }
    const SplineFn& numerator() const { return f_; }

    /// Physical partial at a physical point: inverts the geometry, then
    /// pushes the parameter jet forward. Orders with a1+a2 <= 3 are analytic;
    /// higher orders fall back to central differences of the order-3 partials.
    double eval(const std::array<double, 2>& x, int a1 = 0, int a2 = 0) const;

    /// Same derivative, at a known parameter point (no inversion).
    double eval_param(double s, double t, int a1 = 0, int a2 = 0) const;

private:
    const GeometryMap* geometry_;
    SplineFn f_;
};

}  // namespace igs
