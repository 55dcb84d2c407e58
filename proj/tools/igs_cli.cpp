// Command-line front end: construction matrices, smooth-space assembly,
// membership checks, grid sampling, and numerical smoothness verification.

#include "igs/fixtures.hpp"
#include "igs/serialization.hpp"
#include "igs/singular_basis.hpp"
#include "igs/smoothness.hpp"
#include "igs/transform.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace igs;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitCheckFailed = 2;

std::vector<Rational> parse_knot_list(const std::string& csv) {
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(parse_rational(item));
    }
    return out;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
}

void write_output(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << payload;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// ---- matrices --------------------------------------------------------------

struct MatricesArgs {
    std::vector<int> elevate;  // i q
    int combined_i = -1;
    bool insert = false;
    int degree_t = -1;
    std::string knots_t;
    std::string format = "json";
    std::string out;
};

int run_matrices(const MatricesArgs& a) {
    RationalMatrix m;
    std::string name;
    if (!a.elevate.empty()) {
        m = degree_elevation_matrix(a.elevate[0], a.elevate[1]);
    } else if (a.insert || a.combined_i >= 0) {
        if (a.degree_t < 0) throw std::invalid_argument("--degree-t is required");
        const std::vector<Rational> target = parse_knot_list(a.knots_t);
        if (a.insert)
            m = knot_insertion_matrix(KnotVector::from_interior(a.degree_t, {}), target);
        else
            m = combined_row_coefficients(a.combined_i,
                                          KnotVector::from_interior(a.degree_t, target));
    } else {
        throw std::invalid_argument("matrices: pass one of --elevate, --insert, --combined");
    }
    if (a.format == "text")
        write_output(a.out, matrix_to_text(m));
    else
        write_output(a.out, matrix_to_json(m).dump(2) + "\n");
    return kExitOk;
}

// ---- build-basis -----------------------------------------------------------

struct BuildArgs {
    int degree_s = -1, degree_t = -1;
    std::string knots_s, knots_t;
    int order = -1;
    std::string type = "a";
    std::string out;
};

int run_build_basis(const BuildArgs& a) {
    const TensorProductSpace space(
        KnotVector::from_interior(a.degree_s, parse_knot_list(a.knots_s)),
        KnotVector::from_interior(a.degree_t, parse_knot_list(a.knots_t)));
    const SmoothSpace s = a.type == "b" ? build_smooth_space_B(space, a.order)
                                        : build_smooth_space_A(space, a.order);
    write_output(a.out, smooth_space_to_json(s).dump(2) + "\n");
    return kExitOk;
}

// ---- membership ------------------------------------------------------------

int run_membership(const std::string& input, int order_override) {
    const SmoothSpace s = smooth_space_from_json(load_json(input));
    if (s.kind != SingularKind::type_a)
        throw std::invalid_argument("membership checking applies to type-A spaces");
    const int k = order_override >= 0 ? order_override : s.order;
    bool all = true;
    for (const SmoothBasisFunction& fn : s.basis) {
        const MembershipResult r = check_membership_A(fn.as_spline(s.space), k);
        std::cout << (fn.smooth ? "smooth " : "standard ") << "(" << fn.i << "," << fn.j << "): "
                  << (r.member ? "member" : "NOT a member") << "\n";
        all = all && r.member;
    }
    return all ? kExitOk : kExitCheckFailed;
}

// ---- geometry input --------------------------------------------------------

struct GeometryInput {
    HomogeneousPatch<double> patch;
    std::vector<SplineFn> phi;
};

GeometryInput load_geometry(const std::string& path) {
    Json j = load_json(path);
    // Accept both a flat {g0,g1,g2,...} object and the {"geometry": {...}}
    // wrapper that `examples paper-3 --format json` emits.
    if (!j.contains("g0") && j.contains("geometry")) j = j.at("geometry");
    GeometryInput g{HomogeneousPatch<double>(double_spline_from_json(j.at("g0")),
                                             double_spline_from_json(j.at("g1")),
                                             double_spline_from_json(j.at("g2"))),
                    {}};
    if (j.contains("f")) g.phi.push_back(double_spline_from_json(j.at("f")));
    if (j.contains("phi"))
        for (const Json& e : j.at("phi")) g.phi.push_back(double_spline_from_json(e));
    return g;
}

// ---- sample ----------------------------------------------------------------

struct SampleArgs {
    std::string input;
    std::string out;
    int n = 20;
    std::string mode = "float";
};

int run_sample(const SampleArgs& a) {
    if (a.mode == "exact")
        throw std::invalid_argument("sampling runs in float mode (grid and geometry values "
                                    "are generally irrational); pass --mode float");
    const GeometryInput g = load_geometry(a.input);
    const GeometryMap map(g.patch.g0, g.patch.g1, g.patch.g2);
    std::ostringstream os;
    os << "s,t,x,y,detJ";
    for (std::size_t c = 0; c < g.phi.size(); ++c) os << ",phi" << c;
    os << "\n";
    for (int i = 0; i <= a.n; ++i)
        for (int j = 0; j <= a.n; ++j) {
            const double s = static_cast<double>(i) / a.n;
            const double t = static_cast<double>(j) / a.n;
            const auto x = map.eval(s, t);
            os << format_double(s) << "," << format_double(t) << "," << format_double(x[0])
               << "," << format_double(x[1]) << "," << format_double(map.jacobian_det(s, t));
            for (const SplineFn& f : g.phi)
                os << "," << format_double(f.eval(s, t) / g.patch.g0.eval(s, t));
            os << "\n";
        }
    write_output(a.out, os.str());
    return kExitOk;
}

// ---- check-smoothness ------------------------------------------------------

struct CheckArgs {
    std::string input;
    std::string space_path;
    int order = -1;
    std::string type = "auto";
    std::string out;
    std::string trace_csv;
};

int run_check(const CheckArgs& a) {
    const GeometryInput g = load_geometry(a.input);
    const GeometryMap map(g.patch.g0, g.patch.g1, g.patch.g2);

    SingularityType kind;
    if (a.type == "a")
        kind = SingularityType::type_a;
    else if (a.type == "b")
        kind = SingularityType::type_b;
    else {
        kind = map.classify().kind;
        if (kind == SingularityType::regular)
            throw std::invalid_argument("geometry classified as regular; pass --type a|b");
    }

    // Functions to verify: an explicit smooth space, or the f/phi entries.
    std::vector<std::pair<std::string, SplineFn>> functions;
    int k = a.order;
    if (!a.space_path.empty()) {
        const SmoothSpace s = smooth_space_from_json(load_json(a.space_path));
        if (k < 0) k = s.order;
        for (const SmoothBasisFunction& fn : s.basis)
            if (fn.smooth)
                functions.emplace_back(
                    "(" + std::to_string(fn.i) + "," + std::to_string(fn.j) + ")",
                    to_double_spline(fn.as_spline(s.space)));
    } else {
        for (std::size_t c = 0; c < g.phi.size(); ++c)
            functions.emplace_back("phi" + std::to_string(c), g.phi[c]);
    }
    if (k < 0) throw std::invalid_argument("--smooth-order is required");
    if (functions.empty())
        throw std::invalid_argument("nothing to check: provide --space or f/phi entries");

    VerifyOptions opts = VerifyOptions::defaults();
    opts.m_min = 4;
    opts.m_max = 10;  // double backend: stop before conditioning dominates

    Json report;
    report["order"] = k;
    report["kind"] = kind == SingularityType::type_a ? "A" : "B";
    report["functions"] = Json::array();
    std::ostringstream trace;
    trace << "function,path,a1,a2,m,value\n";
    bool all = true;
    for (const auto& [name, fn] : functions) {
        const SmoothnessVerdict v = verify_ck<double>(g.patch, fn, kind, k, opts);
        Json e;
        e["name"] = name;
        e["pass"] = v.pass();
        e["limit_spread"] = v.limit_spread;
        report["functions"].push_back(e);
        all = all && v.pass();
        for (const DerivativeTrace& tr : v.traces)
            for (std::size_t m = 0; m < tr.values.size(); ++m)
                trace << name << "," << v.paths[tr.path] << "," << tr.a1 << "," << tr.a2 << ","
                      << (opts.m_min + static_cast<int>(m)) << ","
                      << format_double(tr.values[m]) << "\n";
    }
    report["pass"] = all;
    write_output(a.out, report.dump(2) + "\n");
    if (!a.trace_csv.empty()) write_output(a.trace_csv, trace.str());
    return all ? kExitOk : kExitCheckFailed;
}

// ---- examples --------------------------------------------------------------

std::string example_tables(int p) {
    const std::vector<Rational> tau{Rational(1, 4), Rational(1, 2), Rational(3, 4)};
    const KnotVector kv_t = KnotVector::from_interior(p, tau);
    std::ostringstream os;
    for (int i = 0; i <= p; ++i)
        os << "E^" << p << "_" << i << "\n"
           << matrix_to_text(degree_elevation_matrix(i, p)) << "\n";
    os << "K_t\n"
       << matrix_to_text(knot_insertion_matrix(KnotVector::from_interior(p, {}), tau)) << "\n";
    for (int i = 0; i <= p; ++i) {
        os << "Btilde^" << p << "_(" << i << ",j)\n"
           << matrix_to_text(combined_row_coefficients(i, kv_t));
        if (i < p) os << "\n";
    }
    return os.str();
}

Json example3_fixture() {
    const TriangularPatchB<double> tri = fixtures::quarter_circle_triangle();
    Json j;
    j["triangle"]["degree"] = tri.degree();
    j["triangle"]["points"] = Json::array();
    for (int i = 0; i <= tri.degree(); ++i)
        for (int jj = 0; i + jj <= tri.degree(); ++jj) {
            Json e;
            e["i"] = i;
            e["j"] = jj;
            e["coords"] = tri.point(i, jj);
            j["triangle"]["points"].push_back(e);
        }
    const HomogeneousPatch<double> geom = fixtures::quarter_circle_geometry();
    j["geometry"]["g0"] = spline_to_json(geom.g0);
    j["geometry"]["g1"] = spline_to_json(geom.g1);
    j["geometry"]["g2"] = spline_to_json(geom.g2);
    return j;
}

int run_examples(const std::string& which, const std::string& format, const std::string& mode,
                 const std::string& out) {
    if (which == "paper-1" || which == "paper-2") {
        const int p = which == "paper-1" ? 2 : 3;
        if (format == "text")
            write_output(out, example_tables(p));
        else {
            const std::vector<Rational> tau{Rational(1, 4), Rational(1, 2), Rational(3, 4)};
            Json j;
            for (int i = 0; i <= p; ++i)
                j["E_" + std::to_string(i)] = matrix_to_json(degree_elevation_matrix(i, p));
            j["K_t"] =
                matrix_to_json(knot_insertion_matrix(KnotVector::from_interior(p, {}), tau));
            for (int i = 0; i <= p; ++i)
                j["Btilde_" + std::to_string(i)] = matrix_to_json(
                    combined_row_coefficients(i, KnotVector::from_interior(p, tau)));
            write_output(out, j.dump(2) + "\n");
        }
        return kExitOk;
    }
    if (which == "paper-3") {
        if (mode == "exact")
            throw std::invalid_argument(
                "paper-3 uses irrational (sqrt 2) weights; exact mode is unavailable");
        write_output(out, example3_fixture().dump(2) + "\n");
        return kExitOk;
    }
    throw std::invalid_argument("unknown example '" + which + "' (use paper-1|paper-2|paper-3)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Smooth isogeometric spaces on singular spline patches"};
    app.require_subcommand(1);

    MatricesArgs ma;
    auto* matrices = app.add_subcommand("matrices", "Emit construction matrices");
    matrices->add_option("--elevate", ma.elevate, "Degree elevation E^q_i: pass i q")
        ->expected(2);
    matrices->add_flag("--insert", ma.insert, "Knot insertion K for --degree-t/--knots-t");
    matrices->add_option("--combined", ma.combined_i, "Combined rows E^q_i K for slot i");
    matrices->add_option("--degree-t", ma.degree_t, "Degree q of the t-direction");
    matrices->add_option("--knots-t", ma.knots_t, "Comma-separated interior knots");
    matrices->add_option("--format", ma.format, "json|text")->default_val("json");
    matrices->add_option("--out", ma.out, "Output file (default stdout)");

    BuildArgs ba;
    auto* build = app.add_subcommand("build-basis", "Construct a smooth basis");
    build->add_option("--degree-s", ba.degree_s)->required();
    build->add_option("--degree-t", ba.degree_t)->required();
    build->add_option("--knots-s", ba.knots_s, "Comma-separated interior knots");
    build->add_option("--knots-t", ba.knots_t, "Comma-separated interior knots");
    build->add_option("--smooth-order", ba.order)->required();
    build->add_option("--type", ba.type, "a|b")->default_val("a");
    build->add_option("--out", ba.out);

    std::string membership_input;
    int membership_order = -1;
    auto* membership = app.add_subcommand("membership", "Check basis functions of a smooth space");
    membership->add_option("--input", membership_input)->required();
    membership->add_option("--smooth-order", membership_order, "Override the space's order");

    SampleArgs sa;
    auto* sample = app.add_subcommand("sample", "Sample geometry and functions on a grid");
    sample->add_option("--input", sa.input)->required();
    sample->add_option("--n", sa.n, "Grid resolution per direction")->default_val(20);
    sample->add_option("--mode", sa.mode, "exact|float")->default_val("float");
    sample->add_option("--out", sa.out);

    CheckArgs ca;
    auto* check = app.add_subcommand("check-smoothness", "Numerical C^k verification");
    check->add_option("--input", ca.input, "Geometry JSON (g0,g1,g2[,f,phi])")->required();
    check->add_option("--space", ca.space_path, "Smooth-space JSON to verify");
    check->add_option("--smooth-order", ca.order);
    check->add_option("--type", ca.type, "a|b|auto")->default_val("auto");
    check->add_option("--out", ca.out);
    check->add_option("--trace-csv", ca.trace_csv, "Per-path derivative traces");

    std::string example_name, example_format = "text", example_mode = "float", example_out;
    auto* examples = app.add_subcommand("examples", "Regenerate worked examples");
    examples->add_option("which", example_name, "paper-1|paper-2|paper-3")->required();
    examples->add_option("--format", example_format, "text|json")->default_val("text");
    examples->add_option("--mode", example_mode, "exact|float")->default_val("float");
    examples->add_option("--out", example_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*matrices) return run_matrices(ma);
        if (*build) return run_build_basis(ba);
        if (*membership) return run_membership(membership_input, membership_order);
        if (*sample) return run_sample(sa);
        if (*check) return run_check(ca);
        if (*examples)
            return run_examples(example_name, example_format, example_mode, example_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
