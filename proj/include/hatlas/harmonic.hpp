#ifndef HATLAS_HARMONIC_HPP
#define HATLAS_HARMONIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <utility>
#include <vector>

#include "hatlas/quadrature.hpp"
#include "hatlas/report.hpp"
#include "hatlas/series.hpp"

namespace hatlas {

using Rational = boost::multiprecision::cpp_rational;

/* Planar harmonic map f = h + conj(g) through its analytic and
 * co-analytic truncations. Sense-preservation (J_f > 0) is a property of
 * the sampled grid, checked numerically where needed, never assumed. */
struct HarmonicMap {
    TruncatedSeries h;
    TruncatedSeries g;
    bool normalized = false;  // h(0) = 0, h'(0) = 1
    bool class0 = false;      // g'(0) = 0
};

// f = z (g identically zero).
HarmonicMap identity_map(int order);

/* The harmonic Koebe map, assembled from the analytic decomposition
 * h = (A + B)/2, g = (A - B)/2 with A = (z + z^3/3)/(1-z)^3 and
 * B = z/(1-z)^2. The closed coefficient forms (n+1)(2n+1)/6 and
 * (n-1)(2n-1)/6 are deliberately left to the tests as a cross-check. */
HarmonicMap harmonic_koebe(int order);

// Same decomposition carried out in exact rational arithmetic; returns
// (h coefficients, g coefficients), each of length order + 1.
std::pair<std::vector<Rational>, std::vector<Rational>> harmonic_koebe_exact(int order);

// f(z) = h(z) + conj(g(z)).
Complex map_value(const HarmonicMap& f, Complex z);

// J_f(z) = |h'(z)|^2 - |g'(z)|^2.
double jacobian(const HarmonicMap& f, Complex z);

// g'(z)/h'(z). Throws DegenerateDerivative when |h'(z)| < 1e-13.
Complex dilatation_at(const HarmonicMap& f, Complex z);

/* Grid maximum of |g'/h'|: a lower estimate of the true sup norm, so the
 * grid's outer radius is reported next to the value. */
struct DilatationSup {
    double value;
    double rho_max;
};
DilatationSup dilatation_sup(const HarmonicMap& f, const DiskQuadrature& grid);

// ((n+1)(2n+1)/6, (n-1)(2n-1)/6, n) for n >= 2.
struct ConjecturedBounds {
    double analytic;
    double coanalytic;
    double difference;
};
ConjecturedBounds conjectured_bounds(int n);

/* Shear construction: given a dilatation phi (|phi| < 1 on the
 * validation circle) and a normalized analytic F, solves h - g = F,
 * g' = phi h' at the truncation order. Throws NonContractiveDilatation
 * when the sampled |phi| reaches 1. */
HarmonicMap shear_construct(const TruncatedSeries& phi, const TruncatedSeries& F);

/* Samples `samples` random point pairs and reports the smallest
 * |Phi_theta(z1) - Phi_theta(z2)| found for Phi_theta = h + e^{i theta} g.
 * A value below 1e-9 at distinct points is a collision certificate
 * against univalence of Phi_theta; absence of collisions is evidence
 * only, and the report says so. */
VerificationReport phi_theta_univalence_spotcheck(const HarmonicMap& f, double theta,
                                                  int samples, std::uint64_t seed);

}  // namespace hatlas

#endif
