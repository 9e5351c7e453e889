#include "hatlas/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hatlas/errors.hpp"

namespace hatlas {

namespace {

double norm_factor(SphereNormalization norm) {
    return norm == SphereNormalization::curvature_plus_4 ? 4.0 : 1.0;
}

double sq(double x) { return x * x; }

AreaResult area_impl(const HarmonicMap& f, const DiskQuadrature& q, SphereNormalization norm,
                     bool analytic_only) {
    const TruncatedSeries hp = derivative(f.h);
    const TruncatedSeries gp = derivative(f.g);

    auto integrand = [&](Complex z) {
        const double dh2 = std::norm(evaluate(hp, z));
        double jac = dh2;
        Complex w = evaluate(f.h, z);
        if (!analytic_only) {
            jac -= std::norm(evaluate(gp, z));
            w += std::conj(evaluate(f.g, z));
            if (jac < 0.0) {
                std::ostringstream msg;
                msg << "spherical_area: negative Jacobian " << jac << " at node ("
                    << z.real() << ", " << z.imag() << ")";
                throw NegativeJacobianNode(msg.str());
            }
        }
        return jac / sq(1.0 + std::norm(w));
    };

    AreaResult out;
    out.rho_max = q.rho_max;
    out.value = norm_factor(norm) * q.integrate(integrand);

    const DiskQuadrature coarse = DiskQuadrature::polar(
        std::max<int>(1, static_cast<int>(q.radial_nodes.size()) / 2),
        std::max(1, q.angular_count / 2), q.rho_max);
    out.estimated_error = std::abs(out.value - norm_factor(norm) * coarse.integrate(integrand));
    return out;
}

}  // namespace

AreaResult spherical_area(const HarmonicMap& f, const DiskQuadrature& q, SphereNormalization norm) {
    return area_impl(f, q, norm, /*analytic_only=*/false);
}

AreaResult spherical_area_analytic(const TruncatedSeries& h, const DiskQuadrature& q,
                                   SphereNormalization norm) {
    HarmonicMap f;
    f.h = h;
    f.g = TruncatedSeries::zero(h.order());
    return area_impl(f, q, norm, /*analytic_only=*/true);
}

double spherical_area_extrapolated(const HarmonicMap& f, int radial_count, int angular_count,
                                   double rho1, double rho2, SphereNormalization norm) {
    if (!(rho1 < rho2)) throw std::invalid_argument("spherical_area_extrapolated: need rho1 < rho2");
    const double a1 = spherical_area(f, DiskQuadrature::polar(radial_count, angular_count, rho1), norm).value;
    const double a2 = spherical_area(f, DiskQuadrature::polar(radial_count, angular_count, rho2), norm).value;
    return a2 + (a2 - a1) / (rho2 - rho1) * (1.0 - rho2);
}

double plane_spherical_area(SphereNormalization norm) {
    // 2 pi int_0^inf r (1+r^2)^{-2} dr after r = u/(1-u): the transformed
    // integrand u(1-u)/((1-u)^2 + u^2)^2 is smooth on [0, 1].
    const GaussLegendre gl = gauss_legendre(128);
    std::vector<double> terms(gl.nodes.size());
    for (size_t i = 0; i < gl.nodes.size(); ++i) {
        const double u = 0.5 * (gl.nodes[i] + 1.0);
        const double denom = sq(sq(1.0 - u) + sq(u));
        terms[i] = 0.5 * gl.weights[i] * u * (1.0 - u) / denom;
    }
    return norm_factor(norm) * 2.0 * std::numbers::pi * pairwise_sum(terms);
}

VerificationReport area_inequality_check(const HarmonicMap& f, const DiskQuadrature& q,
                                         double tolerance, SphereNormalization norm) {
    const double alpha = dilatation_sup(f, q).value;
    const double a_h = spherical_area_analytic(f.h, q, norm).value;
    const double a_f = spherical_area(f, q, norm).value;
    const double dominated = (1.0 - alpha * alpha) / 4.0 * a_h;

    VerificationReport r;
    r.check_name = "area-domination";
    r.computed = dominated;
    r.bound = a_f;
    r.margin = a_f - dominated;
    r.tolerance = tolerance;
    r.passed = r.margin >= -tolerance;
    std::ostringstream prov;
    prov << "(1 - alpha^2)/4 * A_s(h) <= A_s(f) with grid dilatation sup alpha = " << alpha;
    r.provenance = prov.str();
    return r;
}

double hyperbolic_density_disk(Complex z) {
    const double n = std::norm(z);
    if (n >= 1.0) throw OutsideDisk("hyperbolic_density_disk: |z| >= 1");
    return 1.0 / (1.0 - n);
}

double hyperbolic_density_image(const TruncatedSeries& h, Complex z) {
    const double dh = std::abs(evaluate(derivative(h), z));
    if (dh < 1e-13) throw DegenerateDerivative("hyperbolic_density_image: |h'(z)| < 1e-13");
    return hyperbolic_density_disk(z) / dh;
}

double BoundaryCurve::resolution() const {
    if (points.size() < 2) return 0.0;
    double worst = 0.0;
    for (size_t i = 0; i + 1 < points.size(); ++i)
        worst = std::max(worst, std::abs(points[i + 1] - points[i]));
    if (closed) worst = std::max(worst, std::abs(points.front() - points.back()));
    return worst;
}

BoundaryCurve BoundaryCurve::circle(Complex center, double radius, int samples) {
    if (samples < 3) throw std::invalid_argument("BoundaryCurve::circle: need at least 3 samples");
    BoundaryCurve c;
    c.points.reserve(static_cast<size_t>(samples));
    for (int j = 0; j < samples; ++j) {
        const double t = 2.0 * std::numbers::pi * j / samples;
        c.points.push_back(center + radius * Complex(std::cos(t), std::sin(t)));
    }
    return c;
}

BoundaryCurve BoundaryCurve::map_image(const HarmonicMap& f, double rho, int samples) {
    if (samples < 3) throw std::invalid_argument("BoundaryCurve::map_image: need at least 3 samples");
    if (!(rho > 0.0) || !(rho < 1.0))
        throw std::invalid_argument("BoundaryCurve::map_image: rho must lie in (0, 1)");
    BoundaryCurve c;
    c.points.reserve(static_cast<size_t>(samples));
    for (int j = 0; j < samples; ++j) {
        const double t = 2.0 * std::numbers::pi * j / samples;
        c.points.push_back(map_value(f, rho * Complex(std::cos(t), std::sin(t))));
    }
    return c;
}

BoundaryCurve BoundaryCurve::analytic_image(const TruncatedSeries& h, double rho, int samples) {
    HarmonicMap f;
    f.h = h;
    f.g = TruncatedSeries::zero(h.order());
    return map_image(f, rho, samples);
}

NearestBoundary nearest_boundary(Complex w, const BoundaryCurve& curve) {
    const size_t m = curve.points.size();
    if (m < 3) throw std::invalid_argument("nearest_boundary: curve needs at least 3 points");

    const size_t segment_count = curve.closed ? m : m - 1;
    double best = std::numeric_limits<double>::infinity();
    size_t best_segment = 0;
    Complex best_point = curve.points[0];

    for (size_t i = 0; i < segment_count; ++i) {
        const Complex p = curve.points[i];
        const Complex q = curve.points[(i + 1) % m];
        const Complex d = q - p;
        const double len2 = std::norm(d);
        double t = 0.0;
        if (len2 > 0.0) {
            t = ((w - p).real() * d.real() + (w - p).imag() * d.imag()) / len2;
            t = std::clamp(t, 0.0, 1.0);
        }
        const Complex foot = p + t * d;
        const double dist = std::abs(w - foot);
        if (dist < best) {
            best = dist;
            best_segment = i;
            best_point = foot;
        }
    }

    auto segment_length = [&](size_t i) {
        return std::abs(curve.points[(i + 1) % m] - curve.points[i % m]);
    };
    double local = segment_length(best_segment);
    local = std::max(local, segment_length((best_segment + segment_count - 1) % segment_count));
    local = std::max(local, segment_length((best_segment + 1) % segment_count));

    return {best, best_point, local};
}

double boundary_distance(Complex w, const BoundaryCurve& curve) {
    return nearest_boundary(w, curve).distance;
}

double beta_omega(Complex w, const BoundaryCurve& curve) {
    const size_t m = curve.points.size();
    if (m < 3) throw std::invalid_argument("beta_omega: curve needs at least 3 points");

    size_t anchor = 0;
    double anchor_dist = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < m; ++i) {
        const double d = std::abs(w - curve.points[i]);
        if (d < anchor_dist) {
            anchor_dist = d;
            anchor = i;
        }
    }
    if (anchor_dist == 0.0) throw std::invalid_argument("beta_omega: w lies on the boundary");

    const Complex a = curve.points[anchor];
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < m; ++i) {
        if (i == anchor) continue;
        const double ba = std::abs(curve.points[i] - a);
        if (ba == 0.0) continue;  // duplicate sample
        best = std::min(best, std::abs(std::log(anchor_dist / ba)));
    }
    return best;
}

VerificationReport koebe_bounds_check(const TruncatedSeries& h, Complex z,
                                      const BoundaryCurve& curve, double extra_tolerance) {
    const Complex w = evaluate(h, z);
    const NearestBoundary nb = nearest_boundary(w, curve);
    const double lambda = hyperbolic_density_image(h, z);
    const double product = nb.distance * lambda;

    VerificationReport r;
    r.check_name = "koebe-quarter-window";
    r.computed = product;
    r.bound = 1.0;
    r.margin = std::min(product - 0.25, 1.0 - product);
    r.tolerance = nb.local_resolution * lambda + extra_tolerance;
    r.passed = r.margin >= -r.tolerance;
    r.provenance = "1/4 <= d(w, dOmega) lambda_Omega(w) <= 1 for univalent maps onto simply "
                   "connected domains (Koebe quarter theorem)";
    return r;
}

VerificationReport euchypdom_bounds_check(Complex w, const BoundaryCurve& curve,
                                          double lambda_value, double c0,
                                          double extra_tolerance) {
    const NearestBoundary nb = nearest_boundary(w, curve);
    const double beta = beta_omega(w, curve);
    const double product = nb.distance * lambda_value;
    const double lower = 1.0 / (2.0 * (beta + c0));
    const double upper = std::min(1.0, (2.0 * c0 + std::numbers::pi / 2.0) / (2.0 * (beta + c0)));

    VerificationReport r;
    r.check_name = "hyperbolic-domain-window";
    r.computed = product;
    r.bound = upper;
    r.margin = std::min(product - lower, upper - product);
    r.tolerance = nb.local_resolution * lambda_value + extra_tolerance;
    r.passed = r.margin >= -r.tolerance;
    std::ostringstream prov;
    prov << "1/(2(beta + C0)) <= d lambda <= min{1, (2 C0 + pi/2)/(2(beta + C0))} with C0 = "
         << c0 << ", beta = " << beta;
    r.provenance = prov.str();
    return r;
}

std::vector<VerificationReport> distortion_checks(const HarmonicMap& f, Complex z,
                                                  const BoundaryCurve& omega_boundary,
                                                  const BoundaryCurve& d_boundary,
                                                  double c_upper, double extra_tolerance) {
    std::vector<VerificationReport> out;

    const Complex w_f = map_value(f, z);
    const Complex w_h = evaluate(f.h, z);
    const NearestBoundary nb_omega = nearest_boundary(w_f, omega_boundary);
    const NearestBoundary nb_d = nearest_boundary(w_h, d_boundary);
    const double mu = std::abs(dilatation_at(f, z));
    const double lambda_d = hyperbolic_density_image(f.h, z);

    {
        VerificationReport r;
        r.check_name = "distortion-density-window";
        const double mid = nb_omega.distance * lambda_d;
        const double left = (1.0 - mu) / 16.0;
        r.computed = mid;
        r.bound = c_upper;
        r.margin = std::min(mid - left, c_upper - mid);
        r.tolerance = nb_omega.local_resolution * lambda_d + extra_tolerance;
        r.passed = r.margin >= -r.tolerance;
        r.provenance = "(1 - |mu(z)|)/16 <= d(f(z), dOmega) lambda_D(h(z)) <= c, worst case c = 2";
        out.push_back(std::move(r));
    }

    {
        VerificationReport r;
        r.check_name = "distortion-distance-doubling";
        r.computed = nb_omega.distance;
        r.bound = 2.0 * nb_d.distance;
        r.margin = r.bound - nb_omega.distance;
        r.tolerance = nb_omega.local_resolution + 2.0 * nb_d.local_resolution + extra_tolerance;
        r.passed = r.margin >= -r.tolerance;
        r.provenance = "d(f(z), dOmega) <= 2 d(h(z), dD): the co-analytic part cannot more than "
                       "double the escape distance";
        out.push_back(std::move(r));
    }

    {
        VerificationReport r;
        r.check_name = "distortion-origin-window";
        const NearestBoundary nb0 = nearest_boundary(Complex(0.0), d_boundary);
        r.computed = nb0.distance;
        r.bound = 1.0;
        r.margin = std::min(nb0.distance - 1.0 / 16.0, 1.0 - nb0.distance);
        r.tolerance = nb0.local_resolution + extra_tolerance;
        r.passed = r.margin >= -r.tolerance;
        r.provenance = "1/16 <= d(0, dD) <= 1 for the analytic part of a normalized harmonic map";
        out.push_back(std::move(r));
    }

    return out;
}

}  // namespace hatlas
