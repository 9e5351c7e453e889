#ifndef HATLAS_SUBORDINATION_HPP
#define HATLAS_SUBORDINATION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hatlas/modular_q.hpp"
#include "hatlas/report.hpp"
#include "hatlas/series.hpp"

namespace hatlas {

/* A concrete analytic self-map of the disk fixing 0, carried both as its
 * defining construction (so the true function stays evaluable) and as a
 * coefficient truncation beta_1 z + beta_2 z^2 + ... for coefficient
 * work. Truncations of Blaschke products stray above modulus 1 near the
 * boundary, so validation always goes through value(), never the series. */
struct SchwarzCandidate {
    enum class Kind { blaschke, scaled_polynomial };

    TruncatedSeries series;
    Kind construction = Kind::blaschke;

    // Blaschke data: zeros besides the forced one at the origin, and the
    // unimodular rotation.
    std::vector<Complex> zeros;
    Complex phase{1.0, 0.0};

    // Polynomial data: coefficients c_1..c_d after rescaling.
    std::vector<Complex> scaled_coeffs;

    // Exact construction value (not the truncation).
    Complex value(Complex z) const;
};

/* phase * z * prod (z - a_k)/(1 - conj(a_k) z), degree 1 + zeros.size().
 * Requires |a_k| < 1 and |phase| = 1; the result is checked to stay below
 * modulus 1 on a 256-point circle of radius 0.999. */
SchwarzCandidate blaschke_candidate(const std::vector<Complex>& zeros, Complex phase, int order);

/* sum c_k z^k rescaled by a certified bound on its boundary maximum
 * (sampled maximum corrected by the Bernstein derivative estimate), so
 * the scaled polynomial is genuinely a self-map of the disk. */
SchwarzCandidate polynomial_candidate(const std::vector<Complex>& raw_coeffs, int order);

// Seeded mix of the two families: Blaschke products of degree 2..4 with
// zeros in |a| <= 0.95, and polynomials of degree 2..6.
SchwarzCandidate random_candidate(std::uint64_t seed, int order);

/* Term-by-term dominance |f_n| <= scale * A_n + tolerance for all n up
 * to the common order. Valid as a subordination consequence when the
 * majorant sequence is non-negative, non-decreasing and convex. */
VerificationReport rogosinski_check(const TruncatedSeries& f, const IntSeries& majorant,
                                    double scale, double tolerance = 1e-9);

/* First three coefficients of (-a) Q(phi(z)) straight from the algebra
 *   a_1 = -16 a b1, a_2 = -16 a (b2 + 8 b1^2),
 *   a_3 = -16 a (b3 + 16 b1 b2 + 44 b1^3),
 * an independent route cross-checked against series composition. */
struct BetaRelations {
    Complex a1, a2, a3;
};
BetaRelations beta_relations(Complex a, const SchwarzCandidate& beta);

// |beta_3 + mu beta_1 beta_2 + nu beta_1^3|.
double prokhorov_szynal_value(const SchwarzCandidate& beta, double mu, double nu);

// The parameter region |mu| >= 4, nu >= (2/3)(|mu| - 1) in which the
// functional above is bounded by |nu| over all Schwarz functions.
bool ps_region_check(double mu, double nu);

/* Seeded random search for the maximum of the functional. Candidate i is
 * derived from (seed, i) alone, so batches may run on any number of
 * workers and the reduction (max, ties to the lowest index) is stable. */
struct PsSearchResult {
    double max_value = 0.0;
    std::uint64_t argmax_index = 0;
    SchwarzCandidate argmax;
};
PsSearchResult ps_search(double mu, double nu, int trials, std::uint64_t seed);

// Taylor coefficients of exp(alpha z / (1 - z)); leading terms
// 1 + alpha z + alpha(alpha+2)/2 z^2 + ...
TruncatedSeries e_alpha_coefficients(double alpha, int order);

/* Disk D(c, r) omitted by a normalized analytic function, touching the
 * image boundary; `a` is the nearest boundary point to 0 when known. */
struct MissedDiskDatum {
    Complex c;
    double r = 0.0;
    std::optional<Complex> a;
};

// |c| alpha(alpha+2)/2 with alpha = 2 log(|c|/r): the second-coefficient
// bound extracted from the omitted disk. Throws InvalidGeometry if r > |c|.
double missed_disk_a2_bound(const MissedDiskDatum& d);

enum class BoundVariant {
    f_class,                // nearest point of an F-class image: |a| >= 1/16
    hyperbolic_normalized,  // normalized conformal onto a hyperbolic domain:
                            // 1/16.5 <= |a| <= 1 (strictness not certifiable
                            // in floating point, so tested non-strictly)
};

struct NearestPointBounds {
    double a2_bound;  // 16|a| + 1/(2|a|)
    double a3_bound;  // 704|a|
    VerificationReport window;
};
NearestPointBounds nearest_point_bounds(double a_mod, BoundVariant variant);

// z (a - h(z)) / a, the F-class embedding of h with nearest boundary
// point a; second coefficient -1/a for normalized h.
TruncatedSeries f_class_embed(const TruncatedSeries& h, Complex a);

}  // namespace hatlas

#endif
