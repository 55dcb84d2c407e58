#include "igs/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace igs {

namespace {
constexpr int kSeedResolution = 32;
constexpr int kMaxNewtonIterations = 60;
constexpr double kParamTol = 1e-12;
constexpr double kDetFloor = 1e-10;
}  // namespace

GeometryMap::GeometryMap(SplineFn g0, SplineFn g1, SplineFn g2)
    : patch_(std::move(g0), std::move(g1), std::move(g2)) {
    // Weight positivity on a sample grid.
    for (int a = 0; a <= 8; ++a)
        for (int b = 0; b <= 8; ++b)
            if (patch_.g0.eval(a / 8.0, b / 8.0) <= 0.0)
                throw std::domain_error("geometry weight g0 is not positive on the patch");

    seed_grid_.reserve((kSeedResolution + 1) * (kSeedResolution + 1));
    double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
    for (int a = 0; a <= kSeedResolution; ++a)
        for (int b = 0; b <= kSeedResolution; ++b) {
            const double s = static_cast<double>(a) / kSeedResolution;
            const double t = static_cast<double>(b) / kSeedResolution;
            const auto x = eval(s, t);
            seed_grid_.push_back({s, t, x[0], x[1]});
            lo_x = std::min(lo_x, x[0]);
            hi_x = std::max(hi_x, x[0]);
            lo_y = std::min(lo_y, x[1]);
            hi_y = std::max(hi_y, x[1]);
        }
    diameter_ = std::hypot(hi_x - lo_x, hi_y - lo_y);
}

std::array<double, 2> GeometryMap::eval(double s, double t) const {
    const double w = patch_.g0.eval(s, t);
    if (w <= 0.0) throw std::domain_error("geometry weight g0 <= 0 at evaluation point");
    return {patch_.g1.eval(s, t) / w, patch_.g2.eval(s, t) / w};
}

std::array<std::array<double, 2>, 2> GeometryMap::jacobian(double s, double t) const {
    const Jet2<double> w = spline_partials(patch_.g0, s, t, 1);
    if (w.at(0, 0) <= 0.0) throw std::domain_error("geometry weight g0 <= 0 at evaluation point");
    const Jet2<double> g1 = quotient_partials(spline_partials(patch_.g1, s, t, 1), w);
    const Jet2<double> g2 = quotient_partials(spline_partials(patch_.g2, s, t, 1), w);
    return {{{g1.at(1, 0), g1.at(0, 1)}, {g2.at(1, 0), g2.at(0, 1)}}};
}

double GeometryMap::jacobian_det(double s, double t) const {
    const auto j = jacobian(s, t);
    return j[0][0] * j[1][1] - j[0][1] * j[1][0];
}

SingularityReport GeometryMap::classify() const {
    const double scale = std::max(diameter_, 1e-30);

    // Type A pattern: the whole edge s=0 maps to one point and det vanishes there.
    bool edge_collapsed = true;
    const auto corner = eval(0.0, 0.0);
    for (int b = 0; b <= 8 && edge_collapsed; ++b) {
        const auto x = eval(0.0, b / 8.0);
        if (std::hypot(x[0] - corner[0], x[1] - corner[1]) > 1e-10 * scale) edge_collapsed = false;
        if (std::abs(jacobian_det(0.0, b / 8.0)) > 1e-9 * scale * scale) edge_collapsed = false;
    }

    // Type B pattern: corner partials antiparallel with positive factor.
    const auto j = jacobian(0.0, 0.0);
    const std::array<double, 2> ds{j[0][0], j[1][0]};
    const std::array<double, 2> dt{j[0][1], j[1][1]};
    const double ns = std::hypot(ds[0], ds[1]);
    const double nt = std::hypot(dt[0], dt[1]);
    bool antiparallel = false;
    double lambda = 0.0;
    if (ns > 1e-12 * scale && nt > 1e-12 * scale) {
        const double cosang = (ds[0] * dt[0] + ds[1] * dt[1]) / (ns * nt);
        if (cosang < -1.0 + 1e-8) {
            antiparallel = true;
            lambda = ns / nt;
        }
    }

    if (edge_collapsed && antiparallel)
        throw std::domain_error("singularity classification indeterminate: both patterns present");
    if (edge_collapsed) return {SingularityType::type_a, "edge s=0", 0.0};
    if (antiparallel) return {SingularityType::type_b, "corner (0,0)", lambda};
    return {SingularityType::regular, "", 0.0};
}

std::array<double, 2> GeometryMap::invert(const std::array<double, 2>& x) const {
    double best = 1e300;
    std::array<double, 2> guess{0.5, 0.5};
    for (const auto& row : seed_grid_) {
        const double d = std::hypot(row[2] - x[0], row[3] - x[1]);
        if (d < best) {
            best = d;
            guess = {row[0], row[1]};
        }
    }
    return invert(x, guess);
}

std::array<double, 2> GeometryMap::invert(const std::array<double, 2>& x,
                                          const std::array<double, 2>& guess) const {
    double s = guess[0], t = guess[1];
    for (int it = 0; it < kMaxNewtonIterations; ++it) {
        const auto g = eval(s, t);
        const double rx = g[0] - x[0], ry = g[1] - x[1];
        const auto j = jacobian(s, t);
        const double det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
        if (std::abs(det) < kDetFloor)
            throw std::domain_error("geometry inversion: Jacobian near-singular");
        const double dels = (j[1][1] * rx - j[0][1] * ry) / det;
        const double delt = (-j[1][0] * rx + j[0][0] * ry) / det;
        s = std::clamp(s - dels, 0.0, 1.0);
        t = std::clamp(t - delt, 0.0, 1.0);
        if (std::hypot(dels, delt) < kParamTol) {
            const auto fin = eval(s, t);
            if (std::hypot(fin[0] - x[0], fin[1] - x[1]) > 1e-8 * std::max(diameter_, 1.0))
                throw std::domain_error("geometry inversion: converged outside the domain image");
            return {s, t};
        }
    }
    throw std::domain_error("geometry inversion: Newton did not converge");
}

double IsogeometricFunction::eval_param(double s, double t, int a1, int a2) const {
    if (a1 + a2 <= 3) {
        const Jet2<double> jet =
            physical_partials_at_param(geometry_->patch(), f_, s, t, a1 + a2);
        return jet.at(a1, a2);
    }
    return eval(geometry_->eval(s, t), a1, a2);
}

double IsogeometricFunction::eval(const std::array<double, 2>& x, int a1, int a2) const {
    if (a1 + a2 <= 3) {
        const auto st = geometry_->invert(x);
        const Jet2<double> jet =
            physical_partials_at_param(geometry_->patch(), f_, st[0], st[1], a1 + a2);
        return jet.at(a1, a2);
    }
    // Central differences of the next-lower derivative in physical space.
    const double h = 1e-5 * std::max(geometry_->domain_diameter(), 1.0);
    if (a1 > 0) {
        return (eval({x[0] + h, x[1]}, a1 - 1, a2) - eval({x[0] - h, x[1]}, a1 - 1, a2)) / (2 * h);
    }
    return (eval({x[0], x[1] + h}, a1, a2 - 1) - eval({x[0], x[1] - h}, a1, a2 - 1)) / (2 * h);
}

}  // namespace igs
