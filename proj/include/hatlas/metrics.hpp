#ifndef HATLAS_METRICS_HPP
#define HATLAS_METRICS_HPP

#include <vector>

#include "hatlas/harmonic.hpp"
#include "hatlas/quadrature.hpp"
#include "hatlas/report.hpp"
#include "hatlas/series.hpp"

namespace hatlas {

/* The literal spherical metric |dz|/(1+|z|^2) gives the full plane,
 * covered once, total area pi. The curvature-(+4) convention
 * 2|dz|/(1+|z|^2) scales every area by 4, making that value 4 pi. The
 * inequalities checked here are covariant under the choice; both are
 * offered and the literal form is the default. */
enum class SphereNormalization { paper_literal, curvature_plus_4 };

struct AreaResult {
    double value = 0.0;
    double rho_max = 0.0;      // integration stopped at this sub-disk radius
    double estimated_error = 0.0;  // node-halving difference
};

// Integral of J_f / (1 + |f|^2)^2 over the sub-disk covered by `q`.
// Throws NegativeJacobianNode if the truncation loses sense-preservation
// at a node.
AreaResult spherical_area(const HarmonicMap& f, const DiskQuadrature& q,
                          SphereNormalization norm = SphereNormalization::paper_literal);

// Analytic specialization: integral of |h'|^2 / (1 + |h|^2)^2.
AreaResult spherical_area_analytic(const TruncatedSeries& h, const DiskQuadrature& q,
                                   SphereNormalization norm = SphereNormalization::paper_literal);

// Linear extrapolation of the sub-disk areas at rho1 < rho2 to rho = 1.
double spherical_area_extrapolated(const HarmonicMap& f, int radial_count, int angular_count,
                                   double rho1, double rho2,
                                   SphereNormalization norm = SphereNormalization::paper_literal);

// Spherical area of the whole plane covered once, computed by quadrature
// after the substitution r = u/(1-u); pi or 4 pi depending on `norm`.
double plane_spherical_area(SphereNormalization norm);

/* Theorem-style domination check: with alpha the grid sup of |g'/h'|,
 * passes iff (1 - alpha^2)/4 * A_s(h) <= A_s(f) + tolerance, both areas
 * on the same grid. */
VerificationReport area_inequality_check(const HarmonicMap& f, const DiskQuadrature& q,
                                         double tolerance = 1e-8,
                                         SphereNormalization norm = SphereNormalization::paper_literal);

// 1/(1 - |z|^2); throws OutsideDisk for |z| >= 1.
double hyperbolic_density_disk(Complex z);

// Density of h(D) at h(z) for univalent h (caller-asserted):
// lambda_D(z)/|h'(z)|.
double hyperbolic_density_image(const TruncatedSeries& h, Complex z);

/* Ordered boundary samples of an image domain. Image boundaries come
 * from pushing a dense near-boundary circle through the truncated map:
 * polynomials have no boundary values of their own, so the circle image
 * is the proxy for the ideal boundary. */
struct BoundaryCurve {
    std::vector<Complex> points;
    bool closed = true;

    // Largest consecutive gap (including the closing edge when closed).
    double resolution() const;

    static BoundaryCurve circle(Complex center, double radius, int samples);
    static BoundaryCurve map_image(const HarmonicMap& f, double rho, int samples);
    static BoundaryCurve analytic_image(const TruncatedSeries& h, double rho, int samples);
};

struct NearestBoundary {
    double distance = 0.0;
    Complex point{0.0, 0.0};       // foot of the minimal segment distance
    double local_resolution = 0.0; // sample spacing around that segment
};

// Minimum point-to-segment distance over the polyline.
NearestBoundary nearest_boundary(Complex w, const BoundaryCurve& curve);
double boundary_distance(Complex w, const BoundaryCurve& curve);

/* beta_Omega(w) = min over samples b != a of |log(|w - a| / |b - a|)|,
 * anchored at the nearest boundary sample a. Zero (up to resolution) for
 * connected boundaries; positive when the boundary splits into distant
 * clusters. */
double beta_omega(Complex w, const BoundaryCurve& curve);

/* Koebe quarter-theorem window: d(h(z), dOmega) * lambda_Omega(h(z)) in
 * [1/4, 1] for univalent h onto a simply connected domain. The tolerance
 * budget is the local boundary resolution scaled by the density, plus
 * whatever the caller adds for truncation effects. */
VerificationReport koebe_bounds_check(const TruncatedSeries& h, Complex z,
                                      const BoundaryCurve& curve, double extra_tolerance = 0.0);

/* Hyperbolic-domain window with the annulus-modulus correction:
 * 1/(2(beta + C0)) <= d * lambda <= min{1, (2 C0 + pi/2)/(2(beta + C0))},
 * C0 = 4.37688. The density value is supplied by the caller. */
VerificationReport euchypdom_bounds_check(Complex w, const BoundaryCurve& curve,
                                          double lambda_value, double c0 = 4.37688,
                                          double extra_tolerance = 0.0);

/* The three distortion inequalities for f = h + conj(g) at a point z,
 * against sampled boundaries of Omega = f(D) and D = h(D):
 *   (1 - |mu(z)|)/16 <= d(f(z), dOmega) lambda_D(h(z)) <= c   (c = 2 worst case)
 *   d(f(z), dOmega) <= 2 d(h(z), dD)
 *   1/16 <= d(0, dD) <= 1
 * One report per inequality, margins and budgets included. */
std::vector<VerificationReport> distortion_checks(const HarmonicMap& f, Complex z,
                                                  const BoundaryCurve& omega_boundary,
                                                  const BoundaryCurve& d_boundary,
                                                  double c_upper = 2.0,
                                                  double extra_tolerance = 0.0);

}  // namespace hatlas

#endif
