#include "igs/serialization.hpp"

#include <nlohmann/json.hpp>

#include <iomanip>
#include <sstream>

namespace igs {

namespace {

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw std::invalid_argument("expected exact rational (string \"num/den\" or integer)");
}

}  // namespace

Json matrix_to_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(format_rational(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RationalMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix JSON must be a row array");
    RationalMatrix m(j.size(), j[0].size());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (j[r].size() != m.cols()) throw std::invalid_argument("ragged matrix JSON");
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rational_from_json(j[r][c]);
    }
    return m;
}

std::string matrix_to_text(const RationalMatrix& m) {
    std::vector<std::size_t> widths(m.cols(), 0);
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r)
            widths[c] = std::max(widths[c], format_rational(m(r, c)).size());
    std::ostringstream os;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const std::string e = format_rational(m(r, c));
            os << std::string(widths[c] - e.size(), ' ') << e;
            if (c + 1 < m.cols()) os << "  ";
        }
        os << "\n";
    }
    return os.str();
}

Json knot_vector_to_json(const KnotVector& kv) {
    Json knots = Json::array();
    for (const Rational& k : kv.knots()) knots.push_back(format_rational(k));
    return knots;
}

KnotVector knot_vector_from_json(int degree, const Json& knots) {
    std::vector<Rational> k;
    for (const Json& e : knots) k.push_back(rational_from_json(e));
    return KnotVector(degree, std::move(k));
}

namespace {

TensorProductSpace space_from_json(const Json& j) {
    return TensorProductSpace(knot_vector_from_json(j.at("degree_s"), j.at("knots_s")),
                              knot_vector_from_json(j.at("degree_t"), j.at("knots_t")));
}

Json space_to_json(const TensorProductSpace& space) {
    Json j;
    j["degree_s"] = space.kv_s().degree();
    j["degree_t"] = space.kv_t().degree();
    j["knots_s"] = knot_vector_to_json(space.kv_s());
    j["knots_t"] = knot_vector_to_json(space.kv_t());
    return j;
}

}  // namespace

Json spline_to_json(const RationalSplineFn& f) {
    Json j = space_to_json(f.space());
    Json coeffs = Json::array();
    for (std::size_t i = 0; i < f.space().dim_s(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < f.space().dim_t(); ++c) row.push_back(format_rational(f.at(i, c)));
        coeffs.push_back(std::move(row));
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

RationalSplineFn spline_from_json(const Json& j) {
    const TensorProductSpace space = space_from_json(j);
    const Json& coeffs = j.at("coeffs");
    if (coeffs.size() != space.dim_s())
        throw std::invalid_argument("coefficient rows (" + std::to_string(coeffs.size()) +
                                    ") do not match basis count (" + std::to_string(space.dim_s()) + ")");
    std::vector<Rational> c;
    c.reserve(space.dimension());
    for (const Json& row : coeffs) {
        if (row.size() != space.dim_t())
            throw std::invalid_argument("coefficient columns (" + std::to_string(row.size()) +
                                        ") do not match basis count (" + std::to_string(space.dim_t()) + ")");
        for (const Json& e : row) c.push_back(rational_from_json(e));
    }
    return RationalSplineFn(space, std::move(c));
}

Json spline_to_json(const SplineFn& f) {
    Json j = space_to_json(f.space());
    Json coeffs = Json::array();
    for (std::size_t i = 0; i < f.space().dim_s(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < f.space().dim_t(); ++c) row.push_back(f.at(i, c));
        coeffs.push_back(std::move(row));
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

SplineFn double_spline_from_json(const Json& j) {
    const TensorProductSpace space = space_from_json(j);
    const Json& coeffs = j.at("coeffs");
    std::vector<double> c;
    c.reserve(space.dimension());
    for (const Json& row : coeffs)
        for (const Json& e : row)
            c.push_back(e.is_number() ? e.get<double>() : to_double(rational_from_json(e)));
    if (c.size() != space.dimension()) throw std::invalid_argument("coefficient grid shape mismatch");
    return SplineFn(space, std::move(c));
}

Json smooth_space_to_json(const SmoothSpace& s) {
    Json j = space_to_json(s.space);
    j["order"] = s.order;
    j["kind"] = s.kind == SingularKind::type_a ? "A" : "B";
    Json basis = Json::array();
    for (const SmoothBasisFunction& fn : s.basis) {
        Json e;
        e["smooth"] = fn.smooth;
        e["i"] = fn.i;
        e["j"] = fn.j;
        Json coeffs = Json::array();
        for (const Rational& c : fn.coeffs) coeffs.push_back(format_rational(c));
        e["coeffs"] = std::move(coeffs);
        basis.push_back(std::move(e));
    }
    j["basis"] = std::move(basis);
    return j;
}

SmoothSpace smooth_space_from_json(const Json& j) {
    SmoothSpace s{space_from_json(j), j.at("order"),
                  j.at("kind") == "A" ? SingularKind::type_a : SingularKind::type_b, {}};
    for (const Json& e : j.at("basis")) {
        SmoothBasisFunction fn;
        fn.smooth = e.at("smooth");
        fn.i = e.at("i");
        fn.j = e.at("j");
        for (const Json& c : e.at("coeffs")) fn.coeffs.push_back(rational_from_json(c));
        if (fn.coeffs.size() != s.space.dimension())
            throw std::invalid_argument("basis row length does not match space dimension");
        s.basis.push_back(std::move(fn));
    }
    return s;
}

Json tri_patch_to_json(const TriangularPatchA<Rational>& p) {
    Json j;
    j["degree"] = p.degree();
    Json points = Json::array();
    for (int i = 0; i <= p.degree(); ++i)
        for (int jj = 0; i + jj <= p.degree(); ++jj) {
            const int k = p.degree() - i - jj;
            Json e;
            e["i"] = i;
            e["j"] = jj;
            e["k"] = k;
            Json coords = Json::array();
            for (const Rational& c : p.point(i, jj, k)) coords.push_back(format_rational(c));
            e["coords"] = std::move(coords);
            points.push_back(std::move(e));
        }
    j["points"] = std::move(points);
    return j;
}

TriangularPatchA<Rational> tri_patch_from_json(const Json& j) {
    const int degree = j.at("degree");
    const Json& points = j.at("points");
    if (points.empty()) throw std::invalid_argument("triangular patch has no points");
    const int dim = static_cast<int>(points[0].at("coords").size());
    TriangularPatchA<Rational> p(degree, dim);
    std::size_t seen = 0;
    for (const Json& e : points) {
        std::vector<Rational>& pt = p.point(e.at("i"), e.at("j"), e.at("k"));
        const Json& coords = e.at("coords");
        if (static_cast<int>(coords.size()) != dim)
            throw std::invalid_argument("triangular patch point dimension mismatch");
        for (int c = 0; c < dim; ++c) pt[c] = rational_from_json(coords[c]);
        ++seen;
    }
    if (seen != static_cast<std::size_t>((degree + 1) * (degree + 2) / 2))
        throw std::invalid_argument("triangular patch point count mismatch");
    return p;
}

}  // namespace igs
