#include "hatlas/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hatlas/parallel.hpp"

namespace hatlas {

GaussLegendre gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    GaussLegendre gl;
    gl.nodes.resize(static_cast<size_t>(n));
    gl.weights.resize(static_cast<size_t>(n));

    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi initial guess, then Newton on P_n.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        gl.nodes[static_cast<size_t>(i)] = -x;
        gl.weights[static_cast<size_t>(i)] = w;
        gl.nodes[static_cast<size_t>(n - 1 - i)] = x;
        gl.weights[static_cast<size_t>(n - 1 - i)] = w;
    }
    return gl;
}

double pairwise_sum(const std::vector<double>& values) {
    // Bottom-up halving; the tree shape depends only on the length.
    if (values.empty()) return 0.0;
    std::vector<double> level = values;
    while (level.size() > 1) {
        const size_t half = level.size() / 2;
        for (size_t i = 0; i < half; ++i) level[i] = level[2 * i] + level[2 * i + 1];
        if (level.size() % 2 == 1) level[half] = level.back();
        level.resize(half + level.size() % 2);
    }
    return level[0];
}

DiskQuadrature DiskQuadrature::polar(int radial_count, int angular_count, double rho_max) {
    if (radial_count < 1 || angular_count < 1)
        throw std::invalid_argument("DiskQuadrature: node counts must be >= 1");
    if (!(rho_max > 0.0) || !(rho_max < 1.0))
        throw std::invalid_argument("DiskQuadrature: rho_max must lie in (0, 1)");

    const GaussLegendre gl = gauss_legendre(radial_count);
    DiskQuadrature q;
    q.angular_count = angular_count;
    q.rho_max = rho_max;
    q.radial_nodes.resize(static_cast<size_t>(radial_count));
    for (int i = 0; i < radial_count; ++i) {
        const double r = 0.5 * rho_max * (gl.nodes[static_cast<size_t>(i)] + 1.0);
        const double w = 0.5 * rho_max * gl.weights[static_cast<size_t>(i)];
        q.radial_nodes[static_cast<size_t>(i)] = {r, w * r};
    }
    return q;
}

double DiskQuadrature::angular_spacing() const {
    return 2.0 * std::numbers::pi / angular_count;
}

std::vector<Complex> DiskQuadrature::nodes() const {
    std::vector<Complex> pts;
    pts.reserve(radial_nodes.size() * static_cast<size_t>(angular_count));
    const double dt = angular_spacing();
    for (const RadialNode& rn : radial_nodes) {
        for (int j = 0; j < angular_count; ++j) {
            const double t = dt * j;
            pts.push_back(Complex(rn.r * std::cos(t), rn.r * std::sin(t)));
        }
    }
    return pts;
}

double DiskQuadrature::integrate(const std::function<double(Complex)>& integrand) const {
    const size_t na = static_cast<size_t>(angular_count);
    const size_t total = radial_nodes.size() * na;
    std::vector<double> terms(total);
    const double dt = angular_spacing();

    parallel_for(total, [&](size_t idx) {
        const size_t i = idx / na;
        const size_t j = idx % na;
        const double t = dt * static_cast<double>(j);
        const RadialNode& rn = radial_nodes[i];
        const Complex z(rn.r * std::cos(t), rn.r * std::sin(t));
        terms[idx] = integrand(z) * rn.weight * dt;
    });

    return pairwise_sum(terms);
}

}  // namespace hatlas
