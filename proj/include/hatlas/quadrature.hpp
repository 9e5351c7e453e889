#ifndef HATLAS_QUADRATURE_HPP
#define HATLAS_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "hatlas/series.hpp"

namespace hatlas {

// Gauss-Legendre nodes and weights on [-1, 1], by Newton iteration on the
// Legendre recurrence. Good to machine precision for n up to a few thousand.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussLegendre gauss_legendre(int n);

// Numerically stable sum with a fixed reduction tree: the result depends
// only on the values and their order, never on chunking or scheduling.
double pairwise_sum(const std::vector<double>& values);

/* Tensor-product rule on the closed sub-disk of radius rho_max:
 * Gauss-Legendre in r (with the area element r folded into the weight),
 * uniform (trapezoid) nodes in theta. For smooth 2pi-periodic integrands
 * the angular rule is spectrally accurate. */
struct DiskQuadrature {
    struct RadialNode {
        double r;
        double weight;  // GL weight times r
    };

    std::vector<RadialNode> radial_nodes;
    int angular_count = 0;
    double rho_max = 0.0;

    static DiskQuadrature polar(int radial_count, int angular_count, double rho_max);

    double angular_spacing() const;

    // Integral of a pointwise integrand over the sub-disk. Node values are
    // gathered first (in parallel when workers are available) and reduced
    // pairwise, so the result is bitwise-stable for a fixed node count.
    double integrate(const std::function<double(Complex)>& integrand) const;

    // All grid points r_i e^{i theta_j}.
    std::vector<Complex> nodes() const;
};

}  // namespace hatlas

#endif
