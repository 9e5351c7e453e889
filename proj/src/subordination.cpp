#include "hatlas/subordination.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "hatlas/errors.hpp"
#include "hatlas/parallel.hpp"

namespace hatlas {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Complex circle_point(double radius, double angle) {
    return Complex(radius * std::cos(angle), radius * std::sin(angle));
}

// (z - a) / (1 - conj(a) z) truncated at `order`; geometric tail in conj(a).
TruncatedSeries mobius_factor(Complex a, int order) {
    std::vector<Complex> geo(static_cast<size_t>(order) + 1);
    Complex p(1.0);
    for (int k = 0; k <= order; ++k) {
        geo[static_cast<size_t>(k)] = p;
        p *= std::conj(a);
    }
    std::vector<Complex> num(static_cast<size_t>(order) + 1, Complex(0.0));
    num[0] = -a;
    if (order >= 1) num[1] = 1.0;
    return mul(TruncatedSeries(std::move(num)), TruncatedSeries(std::move(geo)));
}

}  // namespace

Complex SchwarzCandidate::value(Complex z) const {
    if (construction == Kind::blaschke) {
        Complex w = phase * z;
        for (const Complex& a : zeros) w *= (z - a) / (Complex(1.0) - std::conj(a) * z);
        return w;
    }
    Complex w(0.0);
    for (size_t k = scaled_coeffs.size(); k > 0; --k) w = (w + scaled_coeffs[k - 1]) * z;
    return w;
}

SchwarzCandidate blaschke_candidate(const std::vector<Complex>& zeros, Complex phase, int order) {
    if (order < 1) throw std::invalid_argument("blaschke_candidate: order must be >= 1");
    if (std::abs(std::abs(phase) - 1.0) > 1e-12)
        throw std::invalid_argument("blaschke_candidate: phase must be unimodular");
    for (const Complex& a : zeros) {
        if (std::abs(a) >= 1.0)
            throw std::invalid_argument("blaschke_candidate: zeros must lie inside the disk");
    }

    SchwarzCandidate c;
    c.construction = SchwarzCandidate::Kind::blaschke;
    c.zeros = zeros;
    c.phase = phase;
    TruncatedSeries s = scale(TruncatedSeries::identity(order), phase);
    for (const Complex& a : zeros) s = mul(s, mobius_factor(a, order));
    c.series = std::move(s);

    for (int j = 0; j < 256; ++j) {
        const Complex z = circle_point(0.999, 2.0 * std::numbers::pi * j / 256.0);
        if (!(std::abs(c.value(z)) < 1.0))
            throw std::invalid_argument("blaschke_candidate: modulus reached 1 on the test circle");
    }
    return c;
}

SchwarzCandidate polynomial_candidate(const std::vector<Complex>& raw_coeffs, int order) {
    if (order < 1) throw std::invalid_argument("polynomial_candidate: order must be >= 1");

    const int degree = static_cast<int>(raw_coeffs.size());
    const int kCircle = 1024;
    double sampled_max = 0.0;
    for (int j = 0; j < kCircle; ++j) {
        const Complex z = circle_point(1.0, 2.0 * std::numbers::pi * j / kCircle);
        Complex w(0.0);
        for (size_t k = raw_coeffs.size(); k > 0; --k) w = (w + raw_coeffs[k - 1]) * z;
        sampled_max = std::max(sampled_max, std::abs(w));
    }

    SchwarzCandidate c;
    c.construction = SchwarzCandidate::Kind::scaled_polynomial;
    if (sampled_max < 1e-300) {
        c.series = TruncatedSeries::zero(order);
        return c;
    }

    /* Bernstein: |p'| <= d max|p| on the circle, so the true maximum
     * exceeds the sampled one by at most a factor 1/(1 - d pi / K).
     * Dividing by the corrected value certifies the self-map property. */
    const double corrected = sampled_max / (1.0 - degree * std::numbers::pi / kCircle);
    c.scaled_coeffs = raw_coeffs;
    for (Complex& x : c.scaled_coeffs) x /= corrected;

    std::vector<Complex> coeffs(static_cast<size_t>(order) + 1, Complex(0.0));
    for (size_t k = 0; k < c.scaled_coeffs.size() && k + 1 <= static_cast<size_t>(order); ++k)
        coeffs[k + 1] = c.scaled_coeffs[k];
    c.series = TruncatedSeries(std::move(coeffs));
    return c;
}

SchwarzCandidate random_candidate(std::uint64_t seed, int order) {
    std::mt19937_64 rng(splitmix64(seed));
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    if (unit(rng) < 0.65) {
        const int extra_zeros = 1 + static_cast<int>(unit(rng) * 3.0);  // total degree 2..4
        std::vector<Complex> zeros;
        zeros.reserve(static_cast<size_t>(extra_zeros));
        for (int k = 0; k < extra_zeros; ++k) {
            const double r = 0.95 * std::sqrt(unit(rng));
            zeros.push_back(circle_point(r, 2.0 * std::numbers::pi * unit(rng)));
        }
        const Complex phase = circle_point(1.0, 2.0 * std::numbers::pi * unit(rng));
        return blaschke_candidate(zeros, phase, order);
    }

    const int degree = 2 + static_cast<int>(unit(rng) * 5.0);  // 2..6
    std::vector<Complex> raw(static_cast<size_t>(degree));
    for (Complex& x : raw) x = Complex(2.0 * unit(rng) - 1.0, 2.0 * unit(rng) - 1.0);
    return polynomial_candidate(raw, order);
}

VerificationReport rogosinski_check(const TruncatedSeries& f, const IntSeries& majorant,
                                    double scale, double tolerance) {
    const int n_max = std::min(f.order(), majorant.order());
    if (n_max < 1) throw std::invalid_argument("rogosinski_check: nothing to compare");

    double worst_margin = std::numeric_limits<double>::infinity();
    int worst_n = 1;
    for (int n = 1; n <= n_max; ++n) {
        const double cap = scale * majorant.a(n).convert_to<double>();
        const double margin = cap - std::abs(f.coeff(n));
        if (margin < worst_margin) {
            worst_margin = margin;
            worst_n = n;
        }
    }

    VerificationReport r;
    r.check_name = "rogosinski-dominance";
    r.computed = std::abs(f.coeff(worst_n));
    r.bound = scale * majorant.a(worst_n).convert_to<double>();
    r.margin = worst_margin;
    r.tolerance = tolerance;
    r.passed = worst_margin >= -tolerance;
    r.provenance = "coefficient dominance |a_n| <= scale * A_n under subordination to the "
                   "scaled modular majorant (Rogosinski)";
    return r;
}

BetaRelations beta_relations(Complex a, const SchwarzCandidate& beta) {
    if (beta.series.order() < 3)
        throw std::invalid_argument("beta_relations: candidate order must be >= 3");
    const Complex b1 = beta.series.coeff(1);
    const Complex b2 = beta.series.coeff(2);
    const Complex b3 = beta.series.coeff(3);
    const Complex m = -16.0 * a;
    return {m * b1, m * (b2 + 8.0 * b1 * b1), m * (b3 + 16.0 * b1 * b2 + 44.0 * b1 * b1 * b1)};
}

double prokhorov_szynal_value(const SchwarzCandidate& beta, double mu, double nu) {
    if (beta.series.order() < 3)
        throw std::invalid_argument("prokhorov_szynal_value: candidate order must be >= 3");
    const Complex b1 = beta.series.coeff(1);
    const Complex b2 = beta.series.coeff(2);
    const Complex b3 = beta.series.coeff(3);
    return std::abs(b3 + mu * b1 * b2 + nu * b1 * b1 * b1);
}

bool ps_region_check(double mu, double nu) {
    return std::abs(mu) >= 4.0 && nu >= (2.0 / 3.0) * (std::abs(mu) - 1.0);
}

PsSearchResult ps_search(double mu, double nu, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("ps_search: trials must be >= 1");

    std::vector<double> values(static_cast<size_t>(trials));
    parallel_for(static_cast<size_t>(trials), [&](size_t i) {
        const SchwarzCandidate c = random_candidate(seed + i, 3);
        values[i] = prokhorov_szynal_value(c, mu, nu);
    });

    size_t best = 0;
    for (size_t i = 1; i < values.size(); ++i) {
        if (values[i] > values[best]) best = i;
    }

    PsSearchResult r;
    r.max_value = values[best];
    r.argmax_index = best;
    r.argmax = random_candidate(seed + best, 3);
    return r;
}

TruncatedSeries e_alpha_coefficients(double alpha, int order) {
    if (!(alpha > 0.0)) throw std::invalid_argument("e_alpha_coefficients: alpha must be > 0");
    if (order < 2) throw std::invalid_argument("e_alpha_coefficients: order must be >= 2");
    // alpha z / (1 - z) = alpha (z + z^2 + ...).
    std::vector<Complex> w(static_cast<size_t>(order) + 1, Complex(alpha));
    w[0] = 0.0;
    return exp_series(TruncatedSeries(std::move(w)));
}

double missed_disk_a2_bound(const MissedDiskDatum& d) {
    const double c_mod = std::abs(d.c);
    if (!(d.r > 0.0)) throw InvalidGeometry("missed_disk_a2_bound: radius must be positive");
    if (d.r > c_mod) throw InvalidGeometry("missed_disk_a2_bound: omitted disk would contain 0");
    const double alpha = 2.0 * std::log(c_mod / d.r);
    return c_mod * alpha * (alpha + 2.0) / 2.0;
}

NearestPointBounds nearest_point_bounds(double a_mod, BoundVariant variant) {
    if (!(a_mod > 0.0)) throw std::invalid_argument("nearest_point_bounds: |a| must be > 0");

    NearestPointBounds out;
    out.a2_bound = 16.0 * a_mod + 1.0 / (2.0 * a_mod);
    out.a3_bound = 704.0 * a_mod;

    VerificationReport w;
    w.computed = a_mod;
    w.tolerance = 0.0;
    if (variant == BoundVariant::f_class) {
        w.check_name = "nearest-point-window-f-class";
        w.bound = 1.0 / 16.0;
        w.margin = a_mod - 1.0 / 16.0;
        w.provenance = "nearest boundary point of an F-class image satisfies |a| >= 1/16";
    } else {
        w.check_name = "nearest-point-window-hyperbolic";
        w.bound = 1.0;
        w.margin = std::min(a_mod - 1.0 / 16.5, 1.0 - a_mod);
        w.provenance = "normalized conformal map onto a hyperbolic domain: 1/16.5 <= |a| <= 1 "
                       "(upper bound tested non-strictly)";
    }
    w.passed = w.margin >= -w.tolerance;
    out.window = w;
    return out;
}

TruncatedSeries f_class_embed(const TruncatedSeries& h, Complex a) {
    if (a == Complex(0.0)) throw ZeroBoundaryPoint("f_class_embed: nearest boundary point is 0");
    std::vector<Complex> e(static_cast<size_t>(h.order()) + 2, Complex(0.0));
    e[1] = 1.0 - h.coeff(0) / a;
    for (int k = 1; k <= h.order(); ++k) e[static_cast<size_t>(k) + 1] = -h.coeff(k) / a;
    return TruncatedSeries(std::move(e));
}

}  // namespace hatlas
