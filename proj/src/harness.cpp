#include "hatlas/harness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hatlas/harmonic.hpp"
#include "hatlas/json_writer.hpp"
#include "hatlas/metrics.hpp"
#include "hatlas/modular_q.hpp"
#include "hatlas/quadrature.hpp"
#include "hatlas/series.hpp"
#include "hatlas/subordination.hpp"

namespace hatlas {

namespace {

constexpr double kC0Literal = 4.37688;

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t x) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

/* Runs one check body; a throw becomes a skipped report so that a single
 * bad truncation cannot mask every other result. */
void run_check(std::vector<VerificationReport>& out, const std::string& name,
               const std::string& digest,
               const std::function<VerificationReport()>& body) {
    try {
        VerificationReport r = body();
        r.check_name = name;
        r.inputs_digest = digest;
        out.push_back(std::move(r));
    } catch (const std::exception& e) {
        VerificationReport r;
        r.check_name = name;
        r.inputs_digest = digest;
        r.skipped = true;
        r.passed = false;
        r.provenance = std::string("skipped: ") + e.what();
        out.push_back(std::move(r));
    }
}

VerificationReport equality_check(double computed, double target, double tolerance,
                                  std::string provenance) {
    VerificationReport r;
    r.computed = computed;
    r.bound = target;
    r.margin = -std::abs(computed - target);
    r.tolerance = tolerance;
    r.passed = r.margin >= -tolerance;
    r.provenance = std::move(provenance);
    return r;
}

VerificationReport upper_bound_check(double computed, double bound, double tolerance,
                                     std::string provenance) {
    VerificationReport r;
    r.computed = computed;
    r.bound = bound;
    r.margin = bound - computed;
    r.tolerance = tolerance;
    r.passed = r.margin >= -tolerance;
    r.provenance = std::move(provenance);
    return r;
}

// h(rho z) / rho: coefficient k picks up rho^{k-1}.
TruncatedSeries dilate_normalized(const TruncatedSeries& h, double rho) {
    std::vector<Complex> c(h.coeffs());
    double p = 1.0 / rho;
    for (size_t k = 0; k < c.size(); ++k) {
        c[k] *= p;
        p *= rho;
    }
    return TruncatedSeries(std::move(c));
}

// z/(1-z) truncated: the normalized half-plane map.
TruncatedSeries cayley_series(int order) {
    std::vector<Complex> c(static_cast<size_t>(order) + 1, Complex(1.0));
    c[0] = 0.0;
    return TruncatedSeries(std::move(c));
}

// z/(1-z)^2 truncated: the analytic Koebe map.
TruncatedSeries koebe_analytic_series(int order) {
    std::vector<Complex> c(static_cast<size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) c[static_cast<size_t>(k)] = static_cast<double>(k);
    return TruncatedSeries(std::move(c));
}

/* Dilatation that is safe to hand to shear_construct: a certified
 * polynomial self-map shrunk to sup 0.95, so the truncation itself
 * stays below modulus 1 everywhere. */
TruncatedSeries random_safe_dilatation(std::uint64_t seed, int order) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int degree = 1 + static_cast<int>(unit(rng) * 4.0);
    std::vector<Complex> raw(static_cast<size_t>(degree));
    for (Complex& x : raw) x = Complex(2.0 * unit(rng) - 1.0, 2.0 * unit(rng) - 1.0);
    const SchwarzCandidate c = polynomial_candidate(raw, order);
    return scale(c.series, 0.95);
}

// Schwarz candidate with |beta_1| bounded away from 0 so the scale
// a = -1/(16 beta_1) stays finite; deterministic in the seed.
SchwarzCandidate candidate_with_beta1(std::uint64_t seed, int order) {
    for (std::uint64_t salt = 0;; ++salt) {
        SchwarzCandidate c = random_candidate(seed + 0x51ed270b * salt, order);
        if (std::abs(c.series.coeff(1)) >= 0.05) return c;
    }
}

/* Float-engine expansion of the modular product at the same truncation,
 * eighth powers by eight sequential multiplies: an independent route to
 * the same coefficients as the exact integer path. */
TruncatedSeries q_float_series(int order) {
    TruncatedSeries acc = TruncatedSeries::constant(1.0, order - 1);
    for (int n = 1; 2 * n - 1 <= order; ++n) {
        std::vector<Complex> den(static_cast<size_t>(order), Complex(0.0));
        den[0] = 1.0;
        if (static_cast<size_t>(2 * n - 1) < den.size()) den[static_cast<size_t>(2 * n - 1)] = -1.0;
        std::vector<Complex> num(static_cast<size_t>(order), Complex(0.0));
        num[0] = 1.0;
        if (static_cast<size_t>(2 * n) < num.size()) num[static_cast<size_t>(2 * n)] = 1.0;
        const TruncatedSeries factor =
            mul(TruncatedSeries(std::move(num)), reciprocal(TruncatedSeries(std::move(den))));
        for (int p = 0; p < 8; ++p) acc = mul(acc, factor);
    }
    // Shift by one degree and scale by 16.
    std::vector<Complex> shifted(static_cast<size_t>(order) + 1, Complex(0.0));
    for (int k = 0; k < order; ++k) shifted[static_cast<size_t>(k) + 1] = 16.0 * acc.coeff(k);
    return TruncatedSeries(std::move(shifted));
}

/* Wrapped angle increment along a curve arc, bisecting until each step
 * turns by less than one radian so the total cannot alias a full loop.
 * Values are taken relative to the winding center w0. */
double winding_increment(const std::function<Complex(double)>& f, double t0, double t1,
                         Complex a, Complex b, Complex w0, int depth) {
    if (std::abs(a) < 1e-12 || std::abs(b) < 1e-12)
        throw std::runtime_error("winding_increment: curve passes through the test point");
    const double inc = std::arg(b / a);
    if (std::abs(inc) <= 1.0 || depth == 0) return inc;
    const double tm = 0.5 * (t0 + t1);
    const Complex m = f(tm) - w0;
    return winding_increment(f, t0, tm, a, m, w0, depth - 1) +
           winding_increment(f, tm, t1, m, b, w0, depth - 1);
}

struct NamedMap {
    std::string name;
    HarmonicMap map;
    double boundary_rho;
};

std::vector<NamedMap> distortion_test_maps(const SuiteConfig& cfg) {
    std::vector<NamedMap> maps;
    const int order = std::max(cfg.series_order, 256);
    maps.push_back({"identity", identity_map(8), 0.95});
    maps.push_back({"koebe", harmonic_koebe(order), 0.9});
    maps.push_back({"shear05",
                    shear_construct(scale(TruncatedSeries::identity(order), 0.5), cayley_series(order)),
                    0.9});
    return maps;
}

}  // namespace

std::map<std::string, double> SuiteConfig::default_tolerances() {
    return {
        {"exact-integer", 1e-9},
        {"constant-table", 1e-4},
        {"float-vs-exact", 1e-9},
        {"rogosinski", 1e-9},
        {"beta-relations", 1e-10},
        {"identity-algebra", 1e-12},
        {"ps-bound", 1e-8},
        {"area-oracle", 1e-8},
        {"area-extrapolation", 1e-5},
        {"plane-area", 1e-6},
        {"area-inequality", 1e-8},
        {"path-equality", 1e-12},
        {"coefficient-bound", 1e-9},
        {"distortion-budget", 2e-3},
    };
}

double SuiteConfig::tol(const std::string& name) const {
    const auto it = tolerances.find(name);
    if (it == tolerances.end())
        throw std::invalid_argument("SuiteConfig: unknown tolerance '" + name + "'");
    return it->second;
}

void SuiteConfig::validate() const {
    if (trials < 1) throw std::invalid_argument("SuiteConfig: trials must be >= 1");
    if (series_order < 8) throw std::invalid_argument("SuiteConfig: series_order must be >= 8");
    if (convexity_order < 1)
        throw std::invalid_argument("SuiteConfig: convexity_order must be >= 1");
}

std::string SuiteConfig::canonical_json() const {
    JsonWriter w;
    w.begin_object();
    w.key("seed");
    w.value(static_cast<std::uint64_t>(seed));
    w.key("trials");
    w.value(trials);
    w.key("series_order");
    w.value(series_order);
    w.key("convexity_order");
    w.value(convexity_order);
    w.key("quadrature");
    w.begin_object();
    w.key("radial");
    w.value(quadrature.radial);
    w.key("angular");
    w.value(quadrature.angular);
    w.key("rho_max");
    w.value(quadrature.rho_max);
    w.end_object();
    w.key("tolerances");
    w.begin_object();
    for (const auto& [k, v] : tolerances) {
        w.key(k);
        w.value(v);
    }
    w.end_object();
    w.key("constants");
    w.begin_object();
    w.key("q_a1");
    w.value(constants.q_a1);
    w.key("q_a2");
    w.value(constants.q_a2);
    w.key("q_a3");
    w.value(constants.q_a3);
    w.key("a2_cap_conformal");
    w.value(constants.a2_cap_conformal);
    w.key("eight_ln2");
    w.value(constants.eight_ln2);
    w.key("a2_cap_harmonic");
    w.value(constants.a2_cap_harmonic);
    w.key("c0");
    w.value(constants.c0);
    w.end_object();
    w.end_object();
    return w.str();
}

std::string SuiteConfig::digest() const { return hex64(fnv1a64(canonical_json())); }

std::vector<VerificationReport> suite_modular_q(const SuiteConfig& cfg) {
    std::vector<VerificationReport> out;
    const std::string d = cfg.digest();

    const IntSeries exact = q_coefficients(std::max(cfg.convexity_order, 3));
    const double tol_int = cfg.tol("exact-integer");

    run_check(out, "modular-q/table-a1", d, [&] {
        return equality_check(exact.a(1).convert_to<double>(), cfg.constants.q_a1, tol_int,
                              "leading coefficient of the modular product: A_1 = 16");
    });
    run_check(out, "modular-q/table-a2", d, [&] {
        return equality_check(exact.a(2).convert_to<double>(), cfg.constants.q_a2, tol_int,
                              "Q/16 expansion w + 8 w^2 + 44 w^3: A_2 = 16 * 8 = 128");
    });
    run_check(out, "modular-q/table-a3", d, [&] {
        return equality_check(exact.a(3).convert_to<double>(), cfg.constants.q_a3, tol_int,
                              "Q/16 expansion w + 8 w^2 + 44 w^3: A_3 = 16 * 44 = 704");
    });

    run_check(out, "modular-q/convex-nondecreasing", d, [&] {
        VerificationReport r = check_convex_nondecreasing(exact);
        return r;
    });

    run_check(out, "modular-q/divisible-by-16", d, [&] {
        int violations = 0;
        for (int n = 1; n <= exact.order(); ++n) {
            if (exact.a(n) % 16 != 0 || exact.a(n) < 0) ++violations;
        }
        VerificationReport r;
        r.computed = violations;
        r.bound = 0.0;
        r.margin = -violations;
        r.tolerance = 0.0;
        r.passed = violations == 0;
        r.provenance = "every A_n is a non-negative multiple of the leading factor 16";
        return r;
    });

    run_check(out, "modular-q/truncation-stability", d, [&] {
        const IntSeries shorter = q_coefficients(std::min(exact.order(), 50) / 2 + 1);
        int violations = 0;
        for (int n = 1; n <= shorter.order(); ++n) {
            if (shorter.a(n) != exact.a(n)) ++violations;
        }
        VerificationReport r;
        r.computed = violations;
        r.bound = 0.0;
        r.margin = -violations;
        r.tolerance = 0.0;
        r.passed = violations == 0;
        r.provenance = "prefixes of the expansion do not depend on the truncation order";
        return r;
    });

    run_check(out, "modular-q/j-sign-flip", d, [&] {
        const int m = std::min(exact.order(), 64);
        const IntSeries j = j_coefficients(m);
        int violations = 0;
        for (int n = 1; n <= m; ++n) {
            const BigInt expected = (n % 2 == 0) ? BigInt(-exact.a(n)) : exact.a(n);
            if (j.a(n) != expected) ++violations;
        }
        VerificationReport r;
        r.computed = violations;
        r.bound = 0.0;
        r.margin = -violations;
        r.tolerance = 0.0;
        r.passed = violations == 0;
        r.provenance = "J(z) = -Q(-z) flips the sign of even-index coefficients only";
        return r;
    });

    run_check(out, "modular-q/float-engine-rel-error", d, [&] {
        const int m = 40;
        const TruncatedSeries approx = q_float_series(m);
        double worst = 0.0;
        for (int n = 1; n <= m; ++n) {
            const double ref = exact.a(n).convert_to<double>();
            worst = std::max(worst, std::abs(approx.coeff(n).real() - ref) / ref);
        }
        return upper_bound_check(worst, cfg.tol("float-vs-exact"), 0.0,
                                 "independent floating-point product expansion matches the exact "
                                 "integers at order 40");
    });

    run_check(out, "modular-q/rogosinski-self-equality", d, [&] {
        const int m = std::min(cfg.series_order, 40);
        const TruncatedSeries qs = to_series(q_coefficients(m));
        const TruncatedSeries composed = compose(qs, TruncatedSeries::identity(m));
        IntSeries majorant = q_coefficients(m);
        // The table value of A_2 feeds the majorant, so a corrupted table
        // breaks the self-subordination equality margins.
        majorant.coeffs[1] = BigInt(static_cast<long long>(std::llround(cfg.constants.q_a2)));
        VerificationReport r = rogosinski_check(composed, majorant, 1.0, cfg.tol("rogosinski"));
        r.provenance = "self-subordination Q = Q o id meets the majorant with zero margins";
        return r;
    });

    return out;
}

std::vector<VerificationReport> suite_theorem1(const SuiteConfig& cfg) {
    std::vector<VerificationReport> out;
    const std::string d = cfg.digest();
    const double ln2 = std::log(2.0);
    const double tol_table = cfg.tol("constant-table");

    run_check(out, "theorem1/constant-8ln2", d, [&] {
        return equality_check(8.0 * ln2, cfg.constants.eight_ln2, tol_table,
                              "alpha cap 2 log 16 = 8 log 2 of the omitted-disk argument");
    });
    run_check(out, "theorem1/constant-a2-cap", d, [&] {
        return equality_check(8.0 * ln2 * (4.0 * ln2 + 1.0), cfg.constants.a2_cap_harmonic,
                              tol_table,
                              "second-coefficient cap 8 log 2 (4 log 2 + 1) for normalized "
                              "harmonic maps");
    });
    run_check(out, "theorem1/missed-disk-at-1-16", d, [&] {
        MissedDiskDatum datum;
        datum.c = Complex(1.0, 0.0);
        datum.r = 1.0 / 16.0;
        return equality_check(missed_disk_a2_bound(datum), cfg.constants.a2_cap_harmonic,
                              tol_table,
                              "omitted disk at radius ratio 1/16 reproduces the cap constant");
    });

    run_check(out, "theorem1/koebe-a2-below-cap", d, [&] {
        const HarmonicMap k = harmonic_koebe(std::max(cfg.series_order, 8));
        return upper_bound_check(std::abs(k.h.coeff(2)), cfg.constants.a2_cap_harmonic, 0.0,
                                 "|a_2| = 5/2 of the harmonic Koebe map sits below the cap");
    });

    run_check(out, "theorem1/sampled-a2-below-cap", d, [&] {
        const int order = std::max(cfg.series_order, 16);
        const int samples = std::min(cfg.trials, 64);
        const TruncatedSeries F = cayley_series(order);
        double worst = 0.0;
        for (int i = 0; i < samples; ++i) {
            const TruncatedSeries phi = random_safe_dilatation(cfg.seed + 7919u * i, order);
            const HarmonicMap f = shear_construct(phi, F);
            worst = std::max(worst, std::abs(f.h.coeff(2)));
        }
        return upper_bound_check(worst, cfg.constants.a2_cap_harmonic, 0.0,
                                 "sampled shear constructions keep |a_2| below the cap "
                                 "(sampled subfamilies: evidence, not a proof surrogate)");
    });

    run_check(out, "theorem1/dilation-sequence-monotone", d, [&] {
        const HarmonicMap k = harmonic_koebe(std::max(cfg.series_order, 8));
        double previous = 0.0;
        double min_step = std::numeric_limits<double>::infinity();
        double last = 0.0;
        for (int j = 1; j <= 10; ++j) {
            const double rho = 1.0 - std::ldexp(1.0, -j);
            last = std::abs(dilate_normalized(k.h, rho).coeff(2));
            min_step = std::min(min_step, last - previous);
            previous = last;
        }
        VerificationReport r;
        r.computed = last;
        r.bound = 0.0;
        r.margin = min_step;
        r.tolerance = 0.0;
        r.passed = min_step >= 0.0;
        r.provenance = "|a_2| rho_n increases along the dilation sequence rho_n = 1 - 2^{-n}";
        return r;
    });

    run_check(out, "theorem1/dilation-sequence-limit", d, [&] {
        const HarmonicMap k = harmonic_koebe(std::max(cfg.series_order, 8));
        const double a2 = std::abs(k.h.coeff(2));
        const double rho = 1.0 - std::ldexp(1.0, -10);
        const double gap = a2 - std::abs(dilate_normalized(k.h, rho).coeff(2));
        return equality_check(gap, a2 * std::ldexp(1.0, -10), cfg.tol("identity-algebra"),
                              "|a_2 rho_n| converges to |a_2| as rho_n -> 1");
    });

    return out;
}

std::vector<VerificationReport> suite_theorem2_3(const SuiteConfig& cfg) {
    std::vector<VerificationReport> out;
    const std::string d = cfg.digest();

    run_check(out, "theorem2/identity-16x44", d, [&] {
        return equality_check(16.0 * 44.0, cfg.constants.q_a3, cfg.tol("exact-integer"),
                              "third-coefficient cap factorizes as 16 * 44 = 704");
    });
    run_check(out, "theorem2/a-function-at-1", d, [&] {
        return equality_check(nearest_point_bounds(1.0, BoundVariant::f_class).a2_bound,
                              cfg.constants.a2_cap_conformal, cfg.tol("exact-integer"),
                              "A(x) = 16x + 1/(2x) evaluates to 16.5 at x = 1");
    });
    run_check(out, "theorem2/a-function-monotone", d, [&] {
        const double left = 1.0 / (4.0 * std::sqrt(2.0));
        double previous = 16.0 * left + 0.5 / left;
        double min_step = std::numeric_limits<double>::infinity();
        const int samples = 256;
        for (int i = 1; i <= samples; ++i) {
            const double x = left + (1.0 - left) * i / samples;
            const double value = 16.0 * x + 0.5 / x;
            min_step = std::min(min_step, value - previous);
            previous = value;
        }
        VerificationReport r;
        r.computed = min_step;
        r.bound = 0.0;
        r.margin = min_step;
        r.tolerance = 0.0;
        r.passed = min_step >= 0.0;
        r.provenance = "A(x) = 16x + 1/(2x) is increasing on [1/(4 sqrt 2), 1]";
        return r;
    });

    run_check(out, "theorem2/ps-region-16-44", d, [&] {
        VerificationReport r;
        const bool ok = ps_region_check(16.0, 44.0);
        r.computed = ok ? 1.0 : 0.0;
        r.bound = 1.0;
        r.margin = r.computed.real() - 1.0;
        r.tolerance = 0.0;
        r.passed = ok;
        r.provenance = "(mu, nu) = (16, 44) lies in the region |mu| >= 4, nu >= (2/3)(|mu| - 1)";
        return r;
    });
    run_check(out, "theorem2/ps-witness-beta-z", d, [&] {
        const SchwarzCandidate rotation = blaschke_candidate({}, Complex(1.0, 0.0), 3);
        return equality_check(prokhorov_szynal_value(rotation, 16.0, 44.0), 44.0, 0.0,
                              "the functional attains its bound |nu| = 44 at beta(z) = z");
    });
    run_check(out, "theorem2/ps-search-max", d, [&] {
        const int trials = std::max(cfg.trials * 50, 10000);
        const PsSearchResult r = ps_search(16.0, 44.0, trials, cfg.seed);
        return upper_bound_check(r.max_value, 44.0, cfg.tol("ps-bound"),
                                 "random-search maximum of |b3 + 16 b1 b2 + 44 b1^3| over Schwarz "
                                 "candidates stays below 44");
    });

    // Sampled F-class constructions f = (-a) Q(phi), normalized via
    // a = -1/(16 beta_1).
    {
        const int order = 8;
        double min_scale_margin = std::numeric_limits<double>::infinity();
        double min_a2_margin = std::numeric_limits<double>::infinity();
        double min_a3_margin = std::numeric_limits<double>::infinity();
        double max_beta1_dev = 0.0;
        std::string sampling_error;
        try {
            for (int i = 0; i < cfg.trials; ++i) {
                const SchwarzCandidate cand = candidate_with_beta1(cfg.seed + 104729u * i, order);
                const Complex b1 = cand.series.coeff(1);
                const Complex a = -1.0 / (16.0 * b1);
                const double a_mod = std::abs(a);
                const BetaRelations br = beta_relations(a, cand);
                min_scale_margin = std::min(min_scale_margin, a_mod - 1.0 / 16.0);
                const NearestPointBounds npb = nearest_point_bounds(a_mod, BoundVariant::f_class);
                min_a2_margin = std::min(min_a2_margin, npb.a2_bound - std::abs(br.a2));
                min_a3_margin = std::min(min_a3_margin, npb.a3_bound - std::abs(br.a3));
                max_beta1_dev =
                    std::max(max_beta1_dev, std::abs(std::abs(b1) - 1.0 / (16.0 * a_mod)));
            }
        } catch (const std::exception& e) {
            sampling_error = e.what();
        }
        auto need_samples = [&] {
            if (!sampling_error.empty())
                throw std::runtime_error("candidate sampling failed: " + sampling_error);
        };
        run_check(out, "theorem2/sampled-scale-window", d, [&] {
            need_samples();
            VerificationReport r;
            r.computed = min_scale_margin + 1.0 / 16.0;
            r.bound = 1.0 / 16.0;
            r.margin = min_scale_margin;
            r.tolerance = 0.0;
            r.passed = min_scale_margin >= 0.0;
            r.provenance = "normalization a_1 = 1 forces |a| = 1/(16 |beta_1|) >= 1/16";
            return r;
        });
        run_check(out, "theorem2/sampled-a2-bound", d, [&] {
            need_samples();
            VerificationReport r;
            r.computed = min_a2_margin;
            r.bound = 0.0;
            r.margin = min_a2_margin;
            r.tolerance = cfg.tol("coefficient-bound");
            r.passed = r.margin >= -r.tolerance;
            r.provenance = "|a_2| <= 16|a| + 1/(2|a|) on sampled constructions";
            return r;
        });
        run_check(out, "theorem2/sampled-a3-bound", d, [&] {
            need_samples();
            VerificationReport r;
            r.computed = min_a3_margin;
            r.bound = 0.0;
            r.margin = min_a3_margin;
            r.tolerance = cfg.tol("coefficient-bound");
            r.passed = r.margin >= -r.tolerance;
            r.provenance = "|a_3| <= 704|a| on sampled constructions";
            return r;
        });
        run_check(out, "theorem2/beta1-scale-relation", d, [&] {
            need_samples();
            VerificationReport r;
            r.computed = max_beta1_dev;
            r.bound = 0.0;
            r.margin = -max_beta1_dev;
            r.tolerance = cfg.tol("identity-algebra");
            r.passed = r.margin >= -r.tolerance;
            r.provenance = "|beta_1| = 1/(16|a|) after renormalization";
            return r;
        });
    }

    run_check(out, "theorem2/beta-relations-vs-compose", d, [&] {
        const int order = 8;
        const TruncatedSeries qs = to_series(q_coefficients(order));
        std::mt19937_64 rng(cfg.seed ^ 0xbe7a0000ull);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const SchwarzCandidate cand = random_candidate(cfg.seed + 15485863u * i, order);
            const Complex a = std::polar(0.1 + 1.9 * unit(rng), 2.0 * std::numbers::pi * unit(rng));
            const TruncatedSeries composed = compose(scale(qs, -a), cand.series);
            const BetaRelations br = beta_relations(a, cand);
            worst = std::max(worst, std::abs(composed.coeff(1) - br.a1));
            worst = std::max(worst, std::abs(composed.coeff(2) - br.a2));
            worst = std::max(worst, std::abs(composed.coeff(3) - br.a3));
        }
        VerificationReport r;
        r.computed = worst;
        r.bound = 0.0;
        r.margin = -worst;
        r.tolerance = cfg.tol("beta-relations");
        r.passed = r.margin >= -r.tolerance;
        r.provenance = "closed-form first three coefficients of (-a) Q(phi) agree with series "
                       "composition";
        return r;
    });

    run_check(out, "theorem2/rogosinski-sweep", d, [&] {
        const int order = 30;
        const IntSeries ints = q_coefficients(order);
        const TruncatedSeries qs = to_series(ints);
        const double scales[] = {1.0 / 16.0, 0.25, 1.0};
        double worst = std::numeric_limits<double>::infinity();
        const int sweep = std::min(cfg.trials, 200);
        for (int i = 0; i < sweep; ++i) {
            const SchwarzCandidate cand = random_candidate(cfg.seed + 32452843u * i, order);
            for (const double s : scales) {
                const TruncatedSeries f = compose(scale(qs, s), cand.series);
                const VerificationReport r = rogosinski_check(f, ints, s, cfg.tol("rogosinski"));
                worst = std::min(worst, r.margin);
            }
        }
        VerificationReport r;
        r.computed = worst;
        r.bound = 0.0;
        r.margin = worst;
        r.tolerance = cfg.tol("rogosinski");
        r.passed = r.margin >= -r.tolerance;
        r.provenance = "every constructed subordination scale * Q o phi obeys the scaled "
                       "coefficient majorant";
        return r;
    });

    run_check(out, "theorem2/rogosinski-embed-q", d, [&] {
        const int order = std::min(cfg.series_order, 40);
        const IntSeries ints = q_coefficients(order);
        const TruncatedSeries qs = to_series(ints);
        std::mt19937_64 rng(cfg.seed ^ 0xe3bedull);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        double worst = std::numeric_limits<double>::infinity();
        for (int i = 0; i < 8; ++i) {
            const Complex a = std::polar(1.0, 2.0 * std::numbers::pi * unit(rng));
            const TruncatedSeries embedded = f_class_embed(scale(qs, a), a);
            const VerificationReport r = rogosinski_check(embedded, ints, 1.0, cfg.tol("rogosinski"));
            worst = std::min(worst, r.margin);
        }
        VerificationReport r;
        r.computed = worst;
        r.bound = 0.0;
        r.margin = worst;
        r.tolerance = cfg.tol("rogosinski");
        r.passed = r.margin >= -r.tolerance;
        r.provenance = "the F-class embedding z(a - h)/a of h = a Q stays under the unscaled "
                       "majorant (coefficients shift to -A_{n-1})";
        return r;
    });

    // Window 1/16.5 <= d(0, dD) <= 1 on concrete normalized conformal maps,
    // with proxy boundaries from near-unit circles.
    {
        struct WindowCase {
            const char* name;
            TruncatedSeries h;
            double rho;
        };
        std::vector<WindowCase> cases;
        cases.push_back({"identity", TruncatedSeries::identity(8), 0.997});
        cases.push_back({"halfplane", cayley_series(2048), 0.99});
        cases.push_back({"koebe-analytic", koebe_analytic_series(2048), 0.97});
        for (const WindowCase& c : cases) {
            run_check(out, std::string("theorem3/window-") + c.name, d, [&] {
                const BoundaryCurve curve = BoundaryCurve::analytic_image(c.h, c.rho, 2048);
                const NearestBoundary nb = nearest_boundary(Complex(0.0), curve);
                VerificationReport r;
                r.computed = nb.distance;
                r.bound = 1.0;
                r.margin = std::min(nb.distance - 1.0 / 16.5, 1.0 - nb.distance);
                r.tolerance = nb.local_resolution + cfg.tol("distortion-budget");
                r.passed = r.margin >= -r.tolerance;
                r.provenance = "1/16.5 <= d(0, dD) <= 1 for normalized conformal maps onto "
                               "hyperbolic domains (upper bound tested non-strictly)";
                return r;
            });
        }
    }

    run_check(out, "theorem3/embed-second-coefficient", d, [&] {
        std::mt19937_64 rng(cfg.seed ^ 0x3a7f00dull);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        double worst = 0.0;
        for (int i = 0; i < 64; ++i) {
            std::vector<Complex> coeffs(10, Complex(0.0));
            coeffs[1] = 1.0;
            for (size_t k = 2; k < coeffs.size(); ++k)
                coeffs[k] = 0.25 * Complex(2.0 * unit(rng) - 1.0, 2.0 * unit(rng) - 1.0);
            const TruncatedSeries h{std::vector<Complex>(coeffs)};
            const Complex a = std::polar(0.2 + 1.8 * unit(rng), 2.0 * std::numbers::pi * unit(rng));
            const TruncatedSeries embedded = f_class_embed(h, a);
            worst = std::max(worst, std::abs(embedded.coeff(2) + 1.0 / a));
        }
        VerificationReport r;
        r.computed = worst;
        r.bound = 0.0;
        r.margin = -worst;
        r.tolerance = cfg.tol("beta-relations");
        r.passed = r.margin >= -r.tolerance;
        r.provenance = "the embedding of a normalized h has second coefficient -1/a";
        return r;
    });

    return out;
}

std::vector<VerificationReport> suite_area(const SuiteConfig& cfg) {
    std::vector<VerificationReport> out;
    const std::string d = cfg.digest();

    // Grid construction failures must surface as skipped checks, not a
    // dead suite, so the grid is materialized inside each check body.
    DiskQuadrature quad;
    bool quad_ok = true;
    std::string quad_error;
    try {
        quad = DiskQuadrature::polar(cfg.quadrature.radial, cfg.quadrature.angular,
                                     cfg.quadrature.rho_max);
    } catch (const std::exception& e) {
        quad_ok = false;
        quad_error = e.what();
    }
    auto need_quad = [&] {
        if (!quad_ok) throw std::runtime_error("quadrature spec invalid: " + quad_error);
    };

    run_check(out, "area/identity-closed-form", d, [&] {
        need_quad();
        const double computed = spherical_area(identity_map(8), quad).value;
        const double rho2 = quad.rho_max * quad.rho_max;
        const double closed = 2.0 * std::numbers::pi * (0.5 - 0.5 / (1.0 + rho2));
        return equality_check(computed, closed, cfg.tol("area-oracle"),
                              "sub-disk spherical area of the identity matches the antiderivative "
                              "-1/(2(1+r^2))");
    });

    run_check(out, "area/identity-extrapolated", d, [&] {
        const double extrapolated = spherical_area_extrapolated(
            identity_map(8), cfg.quadrature.radial, cfg.quadrature.angular, 0.998, 0.999);
        return equality_check(extrapolated, std::numbers::pi / 2.0, cfg.tol("area-extrapolation"),
                              "full-disk spherical area of the identity extrapolates to pi/2");
    });

    run_check(out, "area/plane-literal", d, [&] {
        return equality_check(plane_spherical_area(SphereNormalization::paper_literal),
                              std::numbers::pi, cfg.tol("plane-area"),
                              "the literal metric |dz|/(1+|z|^2) gives the whole plane area pi, "
                              "not 4 pi; the 4 pi figure needs the curvature-(+4) convention");
    });
    run_check(out, "area/plane-curvature-plus-4", d, [&] {
        return equality_check(plane_spherical_area(SphereNormalization::curvature_plus_4),
                              4.0 * std::numbers::pi, cfg.tol("plane-area"),
                              "under the curvature-(+4) convention the plane covered once has "
                              "area 4 pi");
    });

    run_check(out, "area/analytic-vs-harmonic-path", d, [&] {
        need_quad();
        std::mt19937_64 rng(cfg.seed ^ 0xa4ea5ull);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::vector<Complex> coeffs(12, Complex(0.0));
        coeffs[1] = 1.0;
        for (size_t k = 2; k < coeffs.size(); ++k)
            coeffs[k] = 0.3 * Complex(2.0 * unit(rng) - 1.0, 2.0 * unit(rng) - 1.0);
        const TruncatedSeries h{std::vector<Complex>(coeffs)};
        HarmonicMap f;
        f.h = h;
        f.g = TruncatedSeries::zero(h.order());
        const double harmonic_path = spherical_area(f, quad).value;
        const double analytic_path = spherical_area_analytic(h, quad).value;
        return equality_check(harmonic_path, analytic_path, cfg.tol("path-equality"),
                              "with g = 0 the harmonic and analytic area integrands coincide");
    });

    const double cap = plane_spherical_area(SphereNormalization::paper_literal);

    run_check(out, "area/univalent-cap-identity", d, [&] {
        need_quad();
        return upper_bound_check(spherical_area(identity_map(8), quad).value, cap,
                                 cfg.tol("area-inequality"),
                                 "a univalent image covers no more than the full sphere cap");
    });
    run_check(out, "area/univalent-cap-koebe", d, [&] {
        const DiskQuadrature inner = DiskQuadrature::polar(cfg.quadrature.radial,
                                                           cfg.quadrature.angular, 0.9);
        return upper_bound_check(spherical_area(harmonic_koebe(256), inner).value, cap,
                                 cfg.tol("area-inequality"),
                                 "a univalent image covers no more than the full sphere cap");
    });

    /* Shears of z/(1-z) have coefficients growing linearly, so near the
     * default quadrature rim rho = 0.98 the truncation needs order ~1000
     * before the Jacobian sign is trustworthy. */
    const int shear_order = std::max(cfg.series_order, 1024);

    const double alphas[] = {0.3, 0.5, 0.7, 0.9};
    for (const double alpha : alphas) {
        std::ostringstream name;
        name << "area/theorem4-shear-" << alpha;
        run_check(out, name.str(), d, [&] {
            need_quad();
            const HarmonicMap f = shear_construct(
                scale(TruncatedSeries::identity(shear_order), alpha), cayley_series(shear_order));
            return area_inequality_check(f, quad, cfg.tol("area-inequality"));
        });
    }

    run_check(out, "area/theorem4-koebe", d, [&] {
        const DiskQuadrature inner =
            DiskQuadrature::polar(cfg.quadrature.radial, cfg.quadrature.angular, 0.9);
        return area_inequality_check(harmonic_koebe(256), inner, cfg.tol("area-inequality"));
    });

    run_check(out, "area/jacobian-positive-grid", d, [&] {
        need_quad();
        double min_jacobian = std::numeric_limits<double>::infinity();
        for (int i = 0; i < 8; ++i) {
            const TruncatedSeries phi = random_safe_dilatation(cfg.seed + 2097593u * i, shear_order);
            const HarmonicMap f = shear_construct(phi, cayley_series(shear_order));
            const TruncatedSeries hp = derivative(f.h);
            const TruncatedSeries gp = derivative(f.g);
            for (const Complex& z : quad.nodes()) {
                const double j = std::norm(evaluate(hp, z)) - std::norm(evaluate(gp, z));
                min_jacobian = std::min(min_jacobian, j);
            }
        }
        VerificationReport r;
        r.computed = min_jacobian;
        r.bound = 0.0;
        r.margin = min_jacobian;
        r.tolerance = 0.0;
        r.passed = min_jacobian > 0.0;
        r.provenance = "J_f > 0 on the grid for every sampled map with |phi| <= 0.95";
        return r;
    });

    return out;
}

std::vector<VerificationReport> suite_distortion(const SuiteConfig& cfg) {
    std::vector<VerificationReport> out;
    const std::string d = cfg.digest();
    const double budget = cfg.tol("distortion-budget");

    run_check(out, "distortion/c0-literal-guard", d, [&] {
        return equality_check(cfg.constants.c0, kC0Literal, cfg.tol("constant-table"),
                              "printed decimal of the covering constant C0 (cited constant; no "
                              "defining formula in scope)");
    });

    run_check(out, "distortion/euchypdom-disk", d, [&] {
        const BoundaryCurve circle = BoundaryCurve::circle(Complex(0.0), 1.0, 1024);
        return euchypdom_bounds_check(Complex(0.0), circle, 1.0, cfg.constants.c0, budget);
    });

    // Koebe quarter window on univalent reference maps: the identity
    // attains the upper end, the slit map the lower, the half-plane map
    // sits at 1/2.
    {
        struct QuarterCase {
            const char* name;
            TruncatedSeries h;
            double rho;
        };
        std::vector<QuarterCase> cases;
        cases.push_back({"identity", TruncatedSeries::identity(8), 0.997});
        cases.push_back({"halfplane", cayley_series(2048), 0.99});
        cases.push_back({"koebe-analytic", koebe_analytic_series(2048), 0.97});
        for (const QuarterCase& c : cases) {
            run_check(out, std::string("distortion/koebe-window-") + c.name, d, [&] {
                const BoundaryCurve curve = BoundaryCurve::analytic_image(c.h, c.rho, 4096);
                return koebe_bounds_check(c.h, Complex(0.0), curve, budget);
            });
        }
    }

    std::vector<NamedMap> test_maps;
    std::string maps_error;
    try {
        test_maps = distortion_test_maps(cfg);
    } catch (const std::exception& e) {
        maps_error = e.what();
        for (const char* base : {"bdf-", "eq31-", "bdf1a-", "eq31-left-at-zero-"}) {
            for (const char* name : {"identity", "koebe", "shear05"}) {
                VerificationReport r;
                r.check_name = std::string("distortion/") + base + name;
                r.inputs_digest = d;
                r.skipped = true;
                r.provenance = "skipped: test map construction failed: " + maps_error;
                out.push_back(std::move(r));
            }
        }
    }

    for (const NamedMap& tm : test_maps) {
        const BoundaryCurve omega = BoundaryCurve::map_image(tm.map, tm.boundary_rho, 2048);
        const BoundaryCurve dcurve = BoundaryCurve::analytic_image(tm.map.h, tm.boundary_rho, 2048);

        // 64 probe points on four interior circles.
        std::vector<Complex> probes;
        for (const double r : {0.1, 0.25, 0.4, 0.5}) {
            for (int j = 0; j < 16; ++j) {
                const double t = 2.0 * std::numbers::pi * j / 16.0;
                probes.push_back(Complex(r * std::cos(t), r * std::sin(t)));
            }
        }

        run_check(out, "distortion/bdf-" + tm.name, d, [&] {
            VerificationReport worst;
            worst.margin = std::numeric_limits<double>::infinity();
            for (const Complex& z : probes) {
                const auto checks = distortion_checks(tm.map, z, omega, dcurve, 2.0, budget);
                if (checks[1].margin < worst.margin) worst = checks[1];
            }
            return worst;
        });

        run_check(out, "distortion/eq31-" + tm.name, d, [&] {
            VerificationReport worst;
            worst.margin = std::numeric_limits<double>::infinity();
            for (const Complex& z : probes) {
                const auto checks = distortion_checks(tm.map, z, omega, dcurve, 2.0, budget);
                if (checks[0].margin < worst.margin) worst = checks[0];
            }
            return worst;
        });

        run_check(out, "distortion/bdf1a-" + tm.name, d, [&] {
            return distortion_checks(tm.map, Complex(0.0), omega, dcurve, 2.0, budget)[2];
        });

        run_check(out, "distortion/eq31-left-at-zero-" + tm.name, d, [&] {
            const double mu0 = std::abs(dilatation_at(tm.map, Complex(0.0)));
            return equality_check((1.0 - mu0) / 16.0, 1.0 / 16.0, cfg.tol("identity-algebra"),
                                  "with g'(0) = 0 the left side of the density window is exactly "
                                  "1/16 at the origin");
        });
    }

    run_check(out, "distortion/bdf1a-fclass", d, [&] {
        /* The constructions f = Q(phi)/(16 beta_1) are heavily multivalent,
         * so the image curve re-enters the interior and a curve minimum
         * underestimates d(0, dD). The claim d(0, dD) >= rho/16 says the
         * disk of that radius is covered, which the argument principle can
         * certify: every test point inside it must have winding >= 1. */
        const int order = 256;
        const TruncatedSeries qs = to_series(q_coefficients(order));
        std::mt19937_64 rng(cfg.seed ^ 0xfc1a55ull);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const double rho = 0.995;
        const double test_radius = 1.0 / 16.0 - budget;
        const int constructions = std::min(cfg.trials, 50);
        const int curve_samples = 4096;

        long min_winding = std::numeric_limits<long>::max();
        for (int i = 0; i < constructions; ++i) {
            // Zero-free inner function s z (1 - c z)/(1 + |c|), |c| < 1:
            // the construction vanishes only at 0, so it stays in the class.
            const double s = 0.3 + 0.4 * unit(rng);
            const Complex c = std::polar(0.8 * unit(rng), 2.0 * std::numbers::pi * unit(rng));
            const double denom = 1.0 + std::abs(c);
            const Complex scale_a = denom / (16.0 * s);
            auto f = [&](double t) {
                const Complex z = std::polar(rho, t);
                return scale_a * evaluate(qs, s * z * (1.0 - c * z) / denom);
            };
            std::vector<Complex> base(curve_samples);
            for (int j = 0; j < curve_samples; ++j)
                base[static_cast<size_t>(j)] = f(2.0 * std::numbers::pi * j / curve_samples);

            for (int p = 0; p < 16; ++p) {
                const Complex w0 = std::polar(test_radius, 2.0 * std::numbers::pi * p / 16.0);
                double total = 0.0;
                for (int j = 0; j < curve_samples; ++j) {
                    const double t0 = 2.0 * std::numbers::pi * j / curve_samples;
                    const double t1 = 2.0 * std::numbers::pi * (j + 1) / curve_samples;
                    total += winding_increment(f, t0, t1, base[static_cast<size_t>(j)] - w0,
                                               base[static_cast<size_t>((j + 1) % curve_samples)] - w0,
                                               w0, 24);
                }
                min_winding = std::min(min_winding,
                                       std::lround(total / (2.0 * std::numbers::pi)));
            }
        }

        VerificationReport r;
        r.computed = static_cast<double>(min_winding);
        r.bound = 1.0;
        r.margin = static_cast<double>(min_winding) - 1.0;
        r.tolerance = 0.0;
        r.passed = min_winding >= 1;
        std::ostringstream prov;
        prov << "every point of the disk of radius 1/16 - " << budget
             << " is covered by each sampled normalized zero-free construction "
                "(argument-principle form of d(0, dD) >= 1/16)";
        r.provenance = prov.str();
        return r;
    });

    return out;
}

RunDocument run_suites(const SuiteConfig& cfg, const std::vector<std::string>& names) {
    cfg.validate();
    std::vector<VerificationReport> checks;
    auto wants = [&](const char* suite) {
        for (const std::string& n : names) {
            if (n == "all" || n == suite) return true;
        }
        return false;
    };

    if (wants("modular-q")) {
        auto r = suite_modular_q(cfg);
        checks.insert(checks.end(), r.begin(), r.end());
    }
    if (wants("theorem1")) {
        auto r = suite_theorem1(cfg);
        checks.insert(checks.end(), r.begin(), r.end());
    }
    if (wants("theorem2")) {
        auto r = suite_theorem2_3(cfg);
        checks.insert(checks.end(), r.begin(), r.end());
    }
    if (wants("area")) {
        auto r = suite_area(cfg);
        checks.insert(checks.end(), r.begin(), r.end());
    }
    if (wants("distortion")) {
        auto r = suite_distortion(cfg);
        checks.insert(checks.end(), r.begin(), r.end());
    }

    std::sort(checks.begin(), checks.end(),
              [](const VerificationReport& a, const VerificationReport& b) {
                  return a.check_name < b.check_name;
              });

    RunDocument doc;
    doc.checks = std::move(checks);
    for (const VerificationReport& r : doc.checks) {
        if (r.skipped)
            ++doc.summary.skipped;
        else if (r.passed)
            ++doc.summary.passed;
        else
            ++doc.summary.failed;
    }
    doc.json = report_json(cfg, doc.checks, doc.summary);
    return doc;
}

RunDocument run_all(const SuiteConfig& cfg) { return run_suites(cfg, {"all"}); }

std::string report_json(const SuiteConfig& cfg, const std::vector<VerificationReport>& checks,
                        const RunSummary& summary) {
    JsonWriter w;
    w.begin_object();
    w.key("version");
    w.value("1.0");
    w.key("config");
    // Splice the canonical config document (already JSON).
    // JsonWriter has no raw-splice; rebuild the same fields here.
    w.begin_object();
    w.key("seed");
    w.value(static_cast<std::uint64_t>(cfg.seed));
    w.key("trials");
    w.value(cfg.trials);
    w.key("series_order");
    w.value(cfg.series_order);
    w.key("convexity_order");
    w.value(cfg.convexity_order);
    w.key("quadrature");
    w.begin_object();
    w.key("radial");
    w.value(cfg.quadrature.radial);
    w.key("angular");
    w.value(cfg.quadrature.angular);
    w.key("rho_max");
    w.value(cfg.quadrature.rho_max);
    w.end_object();
    w.key("tolerances");
    w.begin_object();
    for (const auto& [k, v] : cfg.tolerances) {
        w.key(k);
        w.value(v);
    }
    w.end_object();
    w.key("digest");
    w.value(cfg.digest());
    w.end_object();

    w.key("checks");
    w.begin_array();
    for (const VerificationReport& r : checks) {
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
    w.end_array();

    w.key("summary");
    w.begin_object();
    w.key("passed");
    w.value(summary.passed);
    w.key("failed");
    w.value(summary.failed);
    w.key("skipped");
    w.value(summary.skipped);
    w.end_object();

    w.end_object();
    return w.str();
}

}  // namespace hatlas
