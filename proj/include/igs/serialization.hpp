#pragma once

#include "igs/geometry.hpp"
#include "igs/singular_basis.hpp"
#include "igs/tensor_space.hpp"
#include "igs/triangular.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace igs {

using Json = nlohmann::json;

Json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);

/// Aligned plain-text fraction table, one matrix row per line.
std::string matrix_to_text(const RationalMatrix& m);

Json knot_vector_to_json(const KnotVector& kv);
KnotVector knot_vector_from_json(int degree, const Json& knots);

Json spline_to_json(const RationalSplineFn& f);
RationalSplineFn spline_from_json(const Json& j);

Json spline_to_json(const SplineFn& f);
SplineFn double_spline_from_json(const Json& j);

Json smooth_space_to_json(const SmoothSpace& s);
SmoothSpace smooth_space_from_json(const Json& j);

Json tri_patch_to_json(const TriangularPatchA<Rational>& p);
TriangularPatchA<Rational> tri_patch_from_json(const Json& j);

}  // namespace igs
