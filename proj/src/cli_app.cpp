#include "hatlas/cli_app.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "hatlas/harness.hpp"
#include "hatlas/json_writer.hpp"
#include "hatlas/metrics.hpp"
#include "hatlas/modular_q.hpp"
#include "hatlas/quadrature.hpp"
#include "hatlas/subordination.hpp"

namespace hatlas::cli {

namespace {

double parse_double_strict(const std::string& text) {
    size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("malformed number: '" + text + "'");
    return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

TruncatedSeries series_from_list(const std::vector<Complex>& coeffs, int order) {
    if (coeffs.empty()) throw std::invalid_argument("empty coefficient list");
    const int n = std::max(order, static_cast<int>(coeffs.size()) - 1);
    std::vector<Complex> c(static_cast<size_t>(n) + 1, Complex(0.0));
    for (size_t k = 0; k < coeffs.size(); ++k) c[k] = coeffs[k];
    return TruncatedSeries(std::move(c));
}

Complex json_to_complex(const nlohmann::json& v) {
    if (v.is_number()) return Complex(v.get<double>(), 0.0);
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return Complex(v[0].get<double>(), v[1].get<double>());
    throw std::invalid_argument("spec file: expected a number or [re, im] pair");
}

std::vector<Complex> json_to_complex_list(const nlohmann::json& v) {
    if (!v.is_array()) throw std::invalid_argument("spec file: expected an array of coefficients");
    std::vector<Complex> out;
    out.reserve(v.size());
    for (const auto& item : v) out.push_back(json_to_complex(item));
    return out;
}

// Options storage for one parse; lives for the duration of run().
struct Options {
    // q-coeffs / koebe
    int order = 16;
    std::string format = "json";

    // shear
    std::string phi_text;
    std::string f_text;
    int shear_order = 32;

    // ps-search
    double mu = 16.0;
    double nu = 44.0;
    int trials = 100000;
    std::uint64_t seed = 7;

    // a2-bound
    std::string c_text;
    double radius = 0.0;

    // area / distortion map spec
    std::string map_kind = "identity";
    int map_order = 32;
    std::string map_phi_text;
    std::string map_f_text;
    std::string map_scale_text;
    std::string map_h_text;
    std::string map_g_text;
    std::string spec_file;

    // area
    double rho = 0.999;
    std::string nodes = "512x512";
    std::string normalization = "paper-literal";

    // distortion
    std::string z_text;
    double boundary_rho = 0.9;
    int boundary_samples = 2048;

    // verify
    std::string suite = "all";
    int verify_trials = 1000;
    int series_order = 32;
    int convexity_order = 200;
    std::string out_path;
};

void add_map_flags(CLI::App* sub, Options& o) {
    sub->add_option("--map", o.map_kind,
                    "Map kind: koebe-harmonic, identity, shear, q-subordinate or polynomial")
        ->check(CLI::IsMember({"koebe-harmonic", "identity", "shear", "q-subordinate", "polynomial"}));
    sub->add_option("--order", o.map_order, "Truncation order of the map series");
    sub->add_option("--phi", o.map_phi_text,
                    "Dilatation / inner-function coefficients c0,c1,... (token re or re:im)");
    sub->add_option("--F", o.map_f_text,
                    "Shear target coefficients c0,c1,... (defaults to z/(1-z))");
    sub->add_option("--scale", o.map_scale_text, "Outer scale a for q-subordinate maps (re,im)");
    sub->add_option("--h-coeffs", o.map_h_text, "Polynomial analytic part coefficients c0,c1,...");
    sub->add_option("--g-coeffs", o.map_g_text,
                    "Polynomial co-analytic part coefficients c0,c1,...");
    sub->add_option("--spec-file", o.spec_file,
                    "JSON map spec file; overrides the inline map flags");
}

MapSpec mapspec_from_options(const Options& o) {
    if (!o.spec_file.empty()) return mapspec_from_json_file(o.spec_file);
    MapSpec spec;
    spec.kind = o.map_kind;
    spec.order = o.map_order;
    if (!o.map_phi_text.empty()) spec.phi = parse_complex_list(o.map_phi_text);
    if (!o.map_f_text.empty()) spec.f_series = parse_complex_list(o.map_f_text);
    if (!o.map_scale_text.empty()) spec.scale_a = parse_complex(o.map_scale_text);
    if (!o.map_h_text.empty()) spec.h_coeffs = parse_complex_list(o.map_h_text);
    if (!o.map_g_text.empty()) spec.g_coeffs = parse_complex_list(o.map_g_text);
    return spec;
}

void write_report_fields(JsonWriter& w, const VerificationReport& r) {
    w.begin_object();
    w.key("check_name");
    w.value(r.check_name);
    w.key("computed");
    w.value(r.computed);
    w.key("bound");
    w.value(r.bound);
    w.key("margin");
    w.value(r.margin);
    w.key("passed");
    w.value(r.passed);
    w.key("tolerance");
    w.value(r.tolerance);
    w.key("provenance");
    w.value(r.provenance);
    w.key("inputs_digest");
    w.value(r.inputs_digest);
    if (r.skipped) {
        w.key("skipped");
        w.value(true);
    }
    w.end_object();
}

void write_series_array(JsonWriter& w, const TruncatedSeries& s) {
    w.begin_array();
    for (int k = 0; k <= s.order(); ++k) w.value(s.coeff(k));
    w.end_array();
}

int cmd_q_coeffs(const Options& o, std::ostream& out) {
    const IntSeries s = q_coefficients(o.order);
    if (o.format == "csv") {
        out << "n,A,B,C\n";
        for (int n = 1; n <= s.order(); ++n)
            out << n << ',' << s.a(n).str() << ',' << s.b(n).str() << ',' << s.c(n).str() << '\n';
        return 0;
    }
    JsonWriter w;
    w.begin_object();
    w.key("order");
    w.value(s.order());
    w.key("rows");
    w.begin_array();
    for (int n = 1; n <= s.order(); ++n) {
        w.begin_object();
        w.key("n");
        w.value(n);
        w.key("A");
        w.value(s.a(n).str());
        w.key("B");
        w.value(s.b(n).str());
        w.key("C");
        w.value(s.c(n).str());
        w.end_object();
    }
    w.end_array();
    w.end_object();
    out << w.str() << '\n';
    return 0;
}

int cmd_koebe(const Options& o, std::ostream& out) {
    const HarmonicMap k = harmonic_koebe(o.order);
    if (o.format == "csv") {
        char buf[96];
        out << "n,a,b\n";
        for (int n = 0; n <= o.order; ++n) {
            std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g\n", n, k.h.coeff(n).real(),
                          k.g.coeff(n).real());
            out << buf;
        }
        return 0;
    }
    JsonWriter w;
    w.begin_object();
    w.key("order");
    w.value(o.order);
    w.key("rows");
    w.begin_array();
    for (int n = 0; n <= o.order; ++n) {
        w.begin_object();
        w.key("n");
        w.value(n);
        w.key("a");
        w.value(k.h.coeff(n));
        w.key("b");
        w.value(k.g.coeff(n));
        w.end_object();
    }
    w.end_array();
    w.end_object();
    out << w.str() << '\n';
    return 0;
}

int cmd_shear(const Options& o, std::ostream& out) {
    if (o.phi_text.empty()) throw std::invalid_argument("shear: --phi is required");
    const TruncatedSeries phi = series_from_list(parse_complex_list(o.phi_text), o.shear_order);
    TruncatedSeries F = [&] {
        if (!o.f_text.empty()) return series_from_list(parse_complex_list(o.f_text), o.shear_order);
        std::vector<Complex> c(static_cast<size_t>(o.shear_order) + 1, Complex(1.0));
        c[0] = 0.0;
        return TruncatedSeries(std::move(c));
    }();
    const HarmonicMap f = shear_construct(phi, F);

    if (o.format == "csv") {
        out << "# h\n";
        write_csv(f.h, out);
        out << "# g\n";
        write_csv(f.g, out);
        return 0;
    }

    JsonWriter w;
    w.begin_object();
    w.key("kind");
    w.value("shear");
    w.key("order");
    w.value(f.h.order());
    w.key("normalized");
    w.value(f.normalized);
    w.key("class0");
    w.value(f.class0);
    w.key("h");
    write_series_array(w, f.h);
    w.key("g");
    write_series_array(w, f.g);
    w.end_object();
    out << w.str() << '\n';
    return 0;
}

int cmd_ps_search(const Options& o, std::ostream& out) {
    const PsSearchResult r = ps_search(o.mu, o.nu, o.trials, o.seed);
    JsonWriter w;
    w.begin_object();
    w.key("mu");
    w.value(o.mu);
    w.key("nu");
    w.value(o.nu);
    w.key("trials");
    w.value(o.trials);
    w.key("seed");
    w.value(static_cast<std::uint64_t>(o.seed));
    w.key("max_value");
    w.value(r.max_value);
    w.key("bound");
    w.value(std::abs(o.nu));
    w.key("argmax_index");
    w.value(static_cast<std::uint64_t>(r.argmax_index));
    w.key("argmax_construction");
    w.value(r.argmax.construction == SchwarzCandidate::Kind::blaschke ? "blaschke"
                                                                      : "scaled-polynomial");
    w.key("argmax_beta");
    w.begin_array();
    for (int k = 1; k <= 3; ++k) w.value(r.argmax.series.coeff(k));
    w.end_array();
    w.end_object();
    out << w.str() << '\n';
    return 0;
}

int cmd_a2_bound(const Options& o, std::ostream& out) {
    if (o.c_text.empty()) throw std::invalid_argument("a2-bound: --c is required");
    MissedDiskDatum datum;
    datum.c = parse_complex(o.c_text);
    datum.r = o.radius;
    const double bound = missed_disk_a2_bound(datum);
    JsonWriter w;
    w.begin_object();
    w.key("c");
    w.value(datum.c);
    w.key("r");
    w.value(datum.r);
    w.key("alpha");
    w.value(2.0 * std::log(std::abs(datum.c) / datum.r));
    w.key("bound");
    w.value(bound);
    w.end_object();
    out << w.str() << '\n';
    return 0;
}

int cmd_area(const Options& o, std::ostream& out) {
    const MapSpec spec = mapspec_from_options(o);
    const HarmonicMap f = build_map(spec);

    const std::vector<std::string> node_parts = split(o.nodes, 'x');
    if (node_parts.size() != 2)
        throw std::invalid_argument("area: --nodes expects RADIALxANGULAR, e.g. 512x512");
    const int radial = std::stoi(node_parts[0]);
    const int angular = std::stoi(node_parts[1]);

    const SphereNormalization norm = o.normalization == "curvature-plus-4"
                                         ? SphereNormalization::curvature_plus_4
                                         : SphereNormalization::paper_literal;
    const AreaResult res = spherical_area(f, DiskQuadrature::polar(radial, angular, o.rho), norm);

    JsonWriter w;
    w.begin_object();
    w.key("kind");
    w.value(spec.kind);
    w.key("value");
    w.value(res.value);
    w.key("rho_max");
    w.value(res.rho_max);
    w.key("nodes");
    w.value(o.nodes);
    w.key("estimated_error");
    w.value(res.estimated_error);
    w.key("normalization");
    w.value(o.normalization);
    w.end_object();
    out << w.str() << '\n';
    return 0;
}

int cmd_distortion(const Options& o, std::ostream& out) {
    if (o.z_text.empty()) throw std::invalid_argument("distortion: --z is required");
    const MapSpec spec = mapspec_from_options(o);
    const HarmonicMap f = build_map(spec);
    const Complex z = parse_complex(o.z_text);

    const BoundaryCurve omega = BoundaryCurve::map_image(f, o.boundary_rho, o.boundary_samples);
    const BoundaryCurve dcurve =
        BoundaryCurve::analytic_image(f.h, o.boundary_rho, o.boundary_samples);
    const std::vector<VerificationReport> checks = distortion_checks(f, z, omega, dcurve);

    JsonWriter w;
    w.begin_object();
    w.key("kind");
    w.value(spec.kind);
    w.key("z");
    w.value(z);
    w.key("boundary_rho");
    w.value(o.boundary_rho);
    w.key("boundary_samples");
    w.value(o.boundary_samples);
    w.key("checks");
    w.begin_array();
    for (const VerificationReport& r : checks) write_report_fields(w, r);
    w.end_array();
    w.end_object();
    out << w.str() << '\n';
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
    SuiteConfig cfg;
    cfg.seed = o.seed;
    cfg.trials = o.verify_trials;
    cfg.series_order = o.series_order;
    cfg.convexity_order = o.convexity_order;
    const RunDocument doc = run_suites(cfg, {o.suite});

    if (!o.out_path.empty()) {
        std::ofstream file(o.out_path, std::ios::binary);
        if (!file) throw std::invalid_argument("verify: cannot open --out file " + o.out_path);
        file << doc.json << '\n';
        out << "passed=" << doc.summary.passed << " failed=" << doc.summary.failed
            << " skipped=" << doc.summary.skipped << '\n';
    } else {
        out << doc.json << '\n';
    }
    return doc.summary.failed == 0 ? 0 : 1;
}

std::unique_ptr<CLI::App> build_app(Options& o) {
    auto app = std::make_unique<CLI::App>(
        "harmonic-atlas: modular q-expansions, harmonic-map coefficient bounds and "
        "spherical/hyperbolic metric checks");
    app->name("harmonic-atlas");
    app->require_subcommand(1);

    CLI::App* qc = app->add_subcommand("q-coeffs", "Exact integer expansion of the modular product");
    qc->add_option("--order", o.order, "Number of coefficients A_1..A_N")
        ->required()
        ->check(CLI::PositiveNumber);
    qc->add_option("--format", o.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* ko = app->add_subcommand("koebe", "Coefficient table of the harmonic Koebe map");
    ko->add_option("--order", o.order, "Truncation order")->check(CLI::PositiveNumber);
    ko->add_option("--format", o.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* sh = app->add_subcommand("shear", "Shear construction with prescribed dilatation");
    sh->add_option("--phi", o.phi_text, "Dilatation coefficients c0,c1,... (token re or re:im)")
        ->required();
    sh->add_option("--F", o.f_text, "Target coefficients c0,c1,... (defaults to z/(1-z))");
    sh->add_option("--order", o.shear_order, "Truncation order")->check(CLI::PositiveNumber);
    sh->add_option("--format", o.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* ps = app->add_subcommand("ps-search",
                                       "Random-search maximum of |b3 + mu b1 b2 + nu b1^3|");
    ps->add_option("--mu", o.mu, "Coefficient mu of the functional");
    ps->add_option("--nu", o.nu, "Coefficient nu of the functional (also the bound)");
    ps->add_option("--trials", o.trials, "Number of random candidates")->check(CLI::PositiveNumber);
    ps->add_option("--seed", o.seed, "Random seed");
    ps->add_option("--format", o.format, "Output format: json")->check(CLI::IsMember({"json"}));

    CLI::App* a2 = app->add_subcommand("a2-bound", "Second-coefficient bound from an omitted disk");
    a2->add_option("--c", o.c_text, "Center of the omitted disk, re,im")->required();
    a2->add_option("--r", o.radius, "Radius of the omitted disk")
        ->required()
        ->check(CLI::PositiveNumber);
    a2->add_option("--format", o.format, "Output format: json")->check(CLI::IsMember({"json"}));

    CLI::App* ar = app->add_subcommand("area", "Spherical area of a harmonic map over a sub-disk");
    add_map_flags(ar, o);
    ar->add_option("--rho", o.rho, "Sub-disk radius in (0, 1)");
    ar->add_option("--nodes", o.nodes, "Quadrature nodes as RADIALxANGULAR, e.g. 512x512");
    ar->add_option("--normalization", o.normalization,
                   "Sphere normalization: paper-literal (plane area pi) or curvature-plus-4 (4 pi)")
        ->check(CLI::IsMember({"paper-literal", "curvature-plus-4"}));
    ar->add_option("--format", o.format, "Output format: json")->check(CLI::IsMember({"json"}));

    CLI::App* di = app->add_subcommand("distortion", "Distortion inequality margins at a point");
    add_map_flags(di, o);
    di->add_option("--z", o.z_text, "Evaluation point, re,im")->required();
    di->add_option("--boundary-rho", o.boundary_rho, "Circle radius mapped to the boundary proxy");
    di->add_option("--boundary-samples", o.boundary_samples, "Samples on the boundary proxy")
        ->check(CLI::PositiveNumber);
    di->add_option("--format", o.format, "Output format: json")->check(CLI::IsMember({"json"}));

    CLI::App* ve = app->add_subcommand("verify", "Run the named verification suites");
    ve->add_option("--suite", o.suite, "Suite: all, modular-q, theorem1, theorem2, area, distortion")
        ->check(CLI::IsMember({"all", "modular-q", "theorem1", "theorem2", "area", "distortion"}));
    ve->add_option("--seed", o.seed, "Seed every suite draws its randomness from");
    ve->add_option("--trials", o.verify_trials, "Sampling trials per randomized check")
        ->check(CLI::PositiveNumber);
    ve->add_option("--series-order", o.series_order, "Working truncation order")
        ->check(CLI::PositiveNumber);
    ve->add_option("--convexity-order", o.convexity_order,
                   "Depth of the exact convexity scan of the q-coefficients")
        ->check(CLI::PositiveNumber);
    ve->add_option("--out", o.out_path, "Write the JSON report to this file");
    ve->add_option("--format", o.format, "Output format: json")->check(CLI::IsMember({"json"}));

    return app;
}

}  // namespace

Complex parse_complex(const std::string& text) {
    const std::vector<std::string> parts = split(text, ',');
    if (parts.size() == 1) return Complex(parse_double_strict(parts[0]), 0.0);
    if (parts.size() == 2)
        return Complex(parse_double_strict(parts[0]), parse_double_strict(parts[1]));
    throw std::invalid_argument("expected 're' or 're,im': '" + text + "'");
}

std::vector<Complex> parse_complex_list(const std::string& text) {
    std::vector<Complex> out;
    for (const std::string& token : split(text, ',')) {
        const std::vector<std::string> parts = split(token, ':');
        if (parts.size() == 1) {
            out.push_back(Complex(parse_double_strict(parts[0]), 0.0));
        } else if (parts.size() == 2) {
            out.push_back(Complex(parse_double_strict(parts[0]), parse_double_strict(parts[1])));
        } else {
            throw std::invalid_argument("expected 're' or 're:im' token: '" + token + "'");
        }
    }
    return out;
}

MapSpec mapspec_from_json_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open spec file " + path);
    nlohmann::json doc;
    try {
        file >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("spec file parse error: ") + e.what());
    }

    MapSpec spec;
    if (!doc.contains("kind") || !doc["kind"].is_string())
        throw std::invalid_argument("spec file: 'kind' string is required");
    spec.kind = doc["kind"].get<std::string>();
    if (doc.contains("order")) spec.order = doc["order"].get<int>();
    if (doc.contains("phi")) spec.phi = json_to_complex_list(doc["phi"]);
    if (doc.contains("F")) spec.f_series = json_to_complex_list(doc["F"]);
    if (doc.contains("scale")) spec.scale_a = json_to_complex(doc["scale"]);
    if (doc.contains("h")) spec.h_coeffs = json_to_complex_list(doc["h"]);
    if (doc.contains("g")) spec.g_coeffs = json_to_complex_list(doc["g"]);
    return spec;
}

HarmonicMap build_map(const MapSpec& spec) {
    if (spec.order < 1) throw std::invalid_argument("map spec: order must be >= 1");

    if (spec.kind == "identity") return identity_map(spec.order);
    if (spec.kind == "koebe-harmonic") return harmonic_koebe(spec.order);

    if (spec.kind == "shear") {
        if (spec.phi.empty()) throw std::invalid_argument("shear spec: phi coefficients required");
        const TruncatedSeries phi = series_from_list(spec.phi, spec.order);
        TruncatedSeries F = [&] {
            if (!spec.f_series.empty()) return series_from_list(spec.f_series, spec.order);
            std::vector<Complex> c(static_cast<size_t>(spec.order) + 1, Complex(1.0));
            c[0] = 0.0;
            return TruncatedSeries(std::move(c));
        }();
        return shear_construct(phi, F);
    }

    if (spec.kind == "q-subordinate") {
        if (spec.phi.empty())
            throw std::invalid_argument("q-subordinate spec: phi coefficients required");
        const TruncatedSeries phi = series_from_list(spec.phi, spec.order);
        const TruncatedSeries qs = to_series(q_coefficients(std::max(spec.order, 1)));
        HarmonicMap f;
        f.h = compose(scale(qs, spec.scale_a), phi);
        f.g = TruncatedSeries::zero(f.h.order());
        return f;
    }

    if (spec.kind == "polynomial") {
        if (spec.h_coeffs.empty())
            throw std::invalid_argument("polynomial spec: h coefficients required");
        HarmonicMap f;
        f.h = series_from_list(spec.h_coeffs, spec.order);
        f.g = spec.g_coeffs.empty() ? TruncatedSeries::zero(f.h.order())
                                    : series_from_list(spec.g_coeffs, f.h.order());
        return f;
    }

    throw std::invalid_argument("unknown map kind '" + spec.kind + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    std::unique_ptr<CLI::App> app = build_app(o);

    std::vector<const char*> argv;
    argv.push_back("harmonic-atlas");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app->parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app->help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app->help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (app->got_subcommand("q-coeffs")) return cmd_q_coeffs(o, out);
        if (app->got_subcommand("koebe")) return cmd_koebe(o, out);
        if (app->got_subcommand("shear")) return cmd_shear(o, out);
        if (app->got_subcommand("ps-search")) return cmd_ps_search(o, out);
        if (app->got_subcommand("a2-bound")) return cmd_a2_bound(o, out);
        if (app->got_subcommand("area")) return cmd_area(o, out);
        if (app->got_subcommand("distortion")) return cmd_distortion(o, out);
        if (app->got_subcommand("verify")) return cmd_verify(o, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    err << "usage error: no subcommand\n";
    return 2;
}

std::vector<FlagInfo> flag_registry() {
    Options o;
    std::unique_ptr<CLI::App> app = build_app(o);

    std::vector<FlagInfo> flags;
    auto collect = [&flags](const CLI::App* sub, const std::string& name) {
        for (const CLI::Option* opt : sub->get_options()) {
            flags.push_back({name, opt->get_name(), opt->get_description()});
        }
    };
    collect(app.get(), "");
    for (const CLI::App* sub : app->get_subcommands([](const CLI::App*) { return true; }))
        collect(sub, sub->get_name());
    return flags;
}

}  // namespace hatlas::cli
