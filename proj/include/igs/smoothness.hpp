#pragma once

#include "igs/geometry.hpp"
#include "igs/triangular.hpp"

#include <array>
#include <cstdlib>
#include <string>
#include <vector>

namespace igs {

struct VerifyOptions {
    int m_min = 4;
    int m_max = 20;
    double tol_base = 1e-8;

    /// Reads IGS_TOL_BASE from the environment when set.
    static VerifyOptions defaults() {
        VerifyOptions o;
        if (const char* env = std::getenv("IGS_TOL_BASE")) o.tol_base = std::atof(env);
        return o;
    }

    /// Finite-difference style scaling: two decades lost per derivative order.
    double tolerance(int order) const {
        double t = tol_base;
        for (int i = 0; i < order; ++i) t *= 100.0;
        return t;
    }
};

struct DerivativeTrace {
    std::size_t path = 0;
    int a1 = 0;
    int a2 = 0;
    std::vector<double> values;  // one per sample, m = m_min..m_max
    double limit = 0.0;          // Richardson extrapolation of the last 4
};

struct SmoothnessVerdict {
    int order_tested = 0;
    std::vector<std::string> paths;
    std::vector<DerivativeTrace> traces;
    /// max over derivatives of each total order of (max - min) of path limits.
    std::vector<double> limit_spread;  // index = order
    std::vector<bool> pass_per_order;

    bool pass() const {
        for (bool b : pass_per_order)
            if (!b) return false;
        return true;
    }
};

/// Numerical C^k check at the singular point: evaluates all physical partials
/// |alpha| <= k along parameter-space approach paths, extrapolates each path
/// limit, and compares limits across paths. T = Rational runs the whole
/// derivative pipeline exactly (only the extrapolation is floating point).
template <class T>
SmoothnessVerdict verify_ck(const HomogeneousPatch<T>& geom, const SplineCoefficients<T>& f,
                            SingularityType kind, int k,
                            VerifyOptions options = VerifyOptions::defaults());

extern template SmoothnessVerdict verify_ck<double>(const HomogeneousPatch<double>&,
                                                    const SplineCoefficients<double>&,
                                                    SingularityType, int, VerifyOptions);
extern template SmoothnessVerdict verify_ck<Rational>(const HomogeneousPatch<Rational>&,
                                                      const SplineCoefficients<Rational>&,
                                                      SingularityType, int, VerifyOptions);

struct SplitReport {
    bool jets_match = false;
    /// When jets mismatch: component (0..2), s-derivative order, t-basis index.
    int mismatch_component = -1;
    int mismatch_order = -1;
    std::size_t mismatch_basis_index = 0;
    bool regular = false;
    double min_abs_det = 0.0;
    std::array<double, 2> min_det_location{0.0, 0.0};
};

/// Checks that the geometry splits as G = (rho/rho0) o u on the first s-span:
/// (a) exact s-jet equivalence of (g0,g1,g2) with (rho0,rho1,rho2) o u up to
/// order k, (b) regularity of the rational triangular map on a 40x40 grid.
SplitReport verify_split(const HomogeneousPatch<Rational>& geom,
                         const TriangularPatchA<Rational>& rho, int k);

}  // namespace igs
