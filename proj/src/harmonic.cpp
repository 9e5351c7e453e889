#include "hatlas/harmonic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hatlas/errors.hpp"

namespace hatlas {

namespace {

constexpr double kDegenerateDerivative = 1e-13;

// (z + z^3/3) and z/(1-z)^2 building blocks at a given order.
TruncatedSeries koebe_numerator(int order) {
    std::vector<Complex> c(static_cast<size_t>(order) + 1, Complex(0.0));
    c[1] = 1.0;
    if (order >= 3) c[3] = 1.0 / 3.0;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries one_minus_z_power(int power, int order) {
    // (1 - z)^power expanded by repeated multiplication; exact small integers.
    std::vector<Complex> padded(static_cast<size_t>(order) + 1, Complex(0.0));
    padded[0] = 1.0;
    padded[1] = -1.0;
    TruncatedSeries acc = TruncatedSeries::constant(1.0, order);
    const TruncatedSeries b(std::move(padded));
    for (int i = 0; i < power; ++i) acc = mul(acc, b);
    return acc;
}

std::vector<Rational> rational_reciprocal(const std::vector<Rational>& a) {
    std::vector<Rational> b(a.size());
    b[0] = Rational(1) / a[0];
    for (size_t k = 1; k < a.size(); ++k) {
        Rational s = 0;
        for (size_t j = 1; j <= k; ++j) s += a[j] * b[k - j];
        b[k] = -s / a[0];
    }
    return b;
}

std::vector<Rational> rational_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> c(a.size());
    for (size_t k = 0; k < a.size(); ++k) {
        Rational s = 0;
        for (size_t j = 0; j <= k; ++j) s += a[j] * b[k - j];
        c[k] = s;
    }
    return c;
}

}  // namespace

HarmonicMap identity_map(int order) {
    HarmonicMap f;
    f.h = TruncatedSeries::identity(order);
    f.g = TruncatedSeries::zero(order);
    f.normalized = true;
    f.class0 = true;
    return f;
}

HarmonicMap harmonic_koebe(int order) {
    if (order < 1) throw std::invalid_argument("harmonic_koebe: order must be >= 1");
    const TruncatedSeries a = mul(koebe_numerator(order), reciprocal(one_minus_z_power(3, order)));
    const TruncatedSeries b = mul(TruncatedSeries::identity(order), reciprocal(one_minus_z_power(2, order)));
    HarmonicMap k;
    k.h = scale(add(a, b), 0.5);
    k.g = scale(sub(a, b), 0.5);
    k.normalized = true;
    k.class0 = true;
    return k;
}

std::pair<std::vector<Rational>, std::vector<Rational>> harmonic_koebe_exact(int order) {
    if (order < 1) throw std::invalid_argument("harmonic_koebe_exact: order must be >= 1");
    const size_t len = static_cast<size_t>(order) + 1;

    std::vector<Rational> numer(len), zs(len), cube(len), square(len);
    numer[1] = 1;
    if (order >= 3) numer[3] = Rational(1, 3);
    zs[1] = 1;
    // (1-z)^3 and (1-z)^2.
    cube[0] = 1; cube[1] = -3;
    if (order >= 2) cube[2] = 3;
    if (order >= 3) cube[3] = -1;
    square[0] = 1; square[1] = -2;
    if (order >= 2) square[2] = 1;

    const std::vector<Rational> a = rational_mul(numer, rational_reciprocal(cube));
    const std::vector<Rational> b = rational_mul(zs, rational_reciprocal(square));

    std::vector<Rational> h(len), g(len);
    for (size_t k = 0; k < len; ++k) {
        h[k] = (a[k] + b[k]) / 2;
        g[k] = (a[k] - b[k]) / 2;
    }
    return {std::move(h), std::move(g)};
}

Complex map_value(const HarmonicMap& f, Complex z) {
    return evaluate(f.h, z) + std::conj(evaluate(f.g, z));
}

double jacobian(const HarmonicMap& f, Complex z) {
    const double hp = std::abs(evaluate(derivative(f.h), z));
    const double gp = std::abs(evaluate(derivative(f.g), z));
    return hp * hp - gp * gp;
}

Complex dilatation_at(const HarmonicMap& f, Complex z) {
    const Complex hp = evaluate(derivative(f.h), z);
    if (std::abs(hp) < kDegenerateDerivative) {
        std::ostringstream msg;
        msg << "dilatation: |h'| < 1e-13 at z = (" << z.real() << ", " << z.imag() << ")";
        throw DegenerateDerivative(msg.str());
    }
    return evaluate(derivative(f.g), z) / hp;
}

DilatationSup dilatation_sup(const HarmonicMap& f, const DiskQuadrature& grid) {
    const TruncatedSeries hp = derivative(f.h);
    const TruncatedSeries gp = derivative(f.g);
    double best = 0.0;
    for (const Complex& z : grid.nodes()) {
        const Complex dh = evaluate(hp, z);
        if (std::abs(dh) < kDegenerateDerivative) {
            std::ostringstream msg;
            msg << "dilatation_sup: |h'| < 1e-13 at z = (" << z.real() << ", " << z.imag() << ")";
            throw DegenerateDerivative(msg.str());
        }
        best = std::max(best, std::abs(evaluate(gp, z) / dh));
    }
    return {best, grid.rho_max};
}

ConjecturedBounds conjectured_bounds(int n) {
    if (n < 2) throw std::invalid_argument("conjectured_bounds: n must be >= 2");
    const double nn = n;
    return {(nn + 1.0) * (2.0 * nn + 1.0) / 6.0, (nn - 1.0) * (2.0 * nn - 1.0) / 6.0, nn};
}

HarmonicMap shear_construct(const TruncatedSeries& phi, const TruncatedSeries& F) {
    if (std::abs(phi.coeff(0)) >= 1.0)
        throw NonContractiveDilatation("shear_construct: |phi(0)| >= 1");
    // Sample the dilatation on a near-boundary circle before trusting it.
    const int kSamples = 256;
    for (int j = 0; j < kSamples; ++j) {
        const double t = 2.0 * std::numbers::pi * j / kSamples;
        const Complex z = 0.999 * Complex(std::cos(t), std::sin(t));
        if (std::abs(evaluate(phi, z)) >= 1.0) {
            std::ostringstream msg;
            msg << "shear_construct: sampled |phi| >= 1 at angle " << t;
            throw NonContractiveDilatation(msg.str());
        }
    }

    // h' (1 - phi) = F', then g' = phi h'; integrate both from 0.
    const TruncatedSeries one_minus_phi = sub(TruncatedSeries::constant(1.0, phi.order()), phi);
    const TruncatedSeries hp = mul(derivative(F), reciprocal(one_minus_phi));
    const TruncatedSeries gp = mul(phi, hp);

    HarmonicMap f;
    f.h = antiderivative(hp);
    f.g = antiderivative(gp);
    f.normalized = f.h.coeff(0) == Complex(0.0) && f.h.coeff(1) == Complex(1.0);
    f.class0 = f.g.coeff(1) == Complex(0.0);
    return f;
}

VerificationReport phi_theta_univalence_spotcheck(const HarmonicMap& f, double theta,
                                                  int samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("phi_theta_univalence_spotcheck: samples must be >= 1");
    const Complex rotation = std::polar(1.0, theta);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto draw = [&]() {
        const double r = 0.98 * std::sqrt(unit(rng));
        const double t = 2.0 * std::numbers::pi * unit(rng);
        return Complex(r * std::cos(t), r * std::sin(t));
    };

    double min_separation = std::numeric_limits<double>::infinity();
    constexpr double kCollision = 1e-9;
    for (int i = 0; i < samples; ++i) {
        const Complex z1 = draw();
        const Complex z2 = draw();
        if (std::abs(z1 - z2) < 1e-6) continue;  // too close to witness anything
        const Complex w1 = evaluate(f.h, z1) + rotation * evaluate(f.g, z1);
        const Complex w2 = evaluate(f.h, z2) + rotation * evaluate(f.g, z2);
        min_separation = std::min(min_separation, std::abs(w1 - w2));
    }

    VerificationReport r;
    r.check_name = "phi-theta-univalence-spotcheck";
    r.computed = min_separation;
    r.bound = kCollision;
    r.margin = min_separation - kCollision;
    r.tolerance = 0.0;
    r.passed = r.margin >= 0.0;
    r.provenance =
        "random point-pair collision scan of Phi_theta = h + e^{i theta} g; "
        "a collision disproves univalence for this theta, absence is evidence only";
    return r;
}

}  // namespace hatlas
