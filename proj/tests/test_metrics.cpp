#include <cmath>
#include <numbers>
#include <random>

#include <cstdlib>

#include "doctest.h"
#include "hatlas/errors.hpp"
#include "hatlas/harmonic.hpp"
#include "hatlas/metrics.hpp"
#include "hatlas/quadrature.hpp"
#include "hatlas/subordination.hpp"

using hatlas::AreaResult;
using hatlas::BoundaryCurve;
using hatlas::Complex;
using hatlas::DiskQuadrature;
using hatlas::HarmonicMap;
using hatlas::SphereNormalization;
using hatlas::TruncatedSeries;

namespace {

TruncatedSeries cayley(int order) {
    std::vector<Complex> c(static_cast<size_t>(order) + 1, Complex(1.0));
    c[0] = 0.0;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries koebe_analytic(int order) {
    std::vector<Complex> c(static_cast<size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) c[static_cast<size_t>(k)] = static_cast<double>(k);
    return TruncatedSeries(std::move(c));
}

}  // namespace

TEST_CASE("gauss-legendre integrates high-degree polynomials exactly") {
    const auto gl = hatlas::gauss_legendre(8);
    double weight_sum = 0.0, x13 = 0.0, x12 = 0.0;
    for (size_t i = 0; i < gl.nodes.size(); ++i) {
        weight_sum += gl.weights[i];
        x13 += gl.weights[i] * std::pow(gl.nodes[i], 13);
        x12 += gl.weights[i] * std::pow(gl.nodes[i], 12);
    }
    CHECK(weight_sum == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(std::abs(x13) < 1e-14);                      // odd power
    CHECK(x12 == doctest::Approx(2.0 / 13.0).epsilon(1e-13));
}

TEST_CASE("pairwise sum equals the plain sum on benign data") {
    std::vector<double> v;
    double plain = 0.0;
    for (int i = 1; i <= 1000; ++i) {
        v.push_back(1.0 / i);
        plain += 1.0 / i;
    }
    CHECK(hatlas::pairwise_sum(v) == doctest::Approx(plain).epsilon(1e-14));
    CHECK(hatlas::pairwise_sum({}) == 0.0);
    CHECK(hatlas::pairwise_sum({3.5}) == 3.5);
}

TEST_CASE("disk quadrature reproduces the sub-disk area on the constant integrand") {
    for (const double rho : {0.5, 0.9, 0.999}) {
        const DiskQuadrature q = DiskQuadrature::polar(64, 32, rho);
        const double area = q.integrate([](Complex) { return 1.0; });
        CHECK(std::abs(area - std::numbers::pi * rho * rho) <= 1e-10);
    }
    CHECK_THROWS_AS(DiskQuadrature::polar(16, 16, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(DiskQuadrature::polar(0, 16, 0.5), std::invalid_argument);
}

TEST_CASE("spherical area of the identity matches the closed form") {
    const double rho = 0.999;
    const DiskQuadrature q = DiskQuadrature::polar(256, 64, rho);
    const AreaResult res = hatlas::spherical_area(hatlas::identity_map(4), q);
    const double closed = 2.0 * std::numbers::pi * (0.5 - 0.5 / (1.0 + rho * rho));
    CHECK(std::abs(res.value - closed) <= 1e-8);
    CHECK(res.rho_max == rho);
    CHECK(res.estimated_error <= 1e-10);
}

TEST_CASE("scaled identity approaches the plane value") {
    // f = R z covers the disk of radius R rho; closed form
    // 2 pi (1/2 - 1/(2(1 + R^2 r^2))) at r = rho.
    const double rho = 0.9;
    const DiskQuadrature q = DiskQuadrature::polar(256, 32, rho);
    HarmonicMap f;
    f.h = scale(TruncatedSeries::identity(4), 2.0);
    f.g = TruncatedSeries::zero(4);
    const double closed = 2.0 * std::numbers::pi * (0.5 - 0.5 / (1.0 + 4.0 * rho * rho));
    CHECK(hatlas::spherical_area(f, q).value == doctest::Approx(closed).epsilon(1e-10));
}

TEST_CASE("plane area is pi literally and 4 pi under curvature-plus-4") {
    CHECK(std::abs(hatlas::plane_spherical_area(SphereNormalization::paper_literal) -
                   std::numbers::pi) <= 1e-12);
    CHECK(std::abs(hatlas::plane_spherical_area(SphereNormalization::curvature_plus_4) -
                   4.0 * std::numbers::pi) <= 1e-12);
}

TEST_CASE("extrapolated identity area reaches pi/2") {
    const double extrapolated =
        hatlas::spherical_area_extrapolated(hatlas::identity_map(4), 128, 16, 0.998, 0.999);
    CHECK(std::abs(extrapolated - std::numbers::pi / 2.0) <= 1e-5);
}

TEST_CASE("analytic and harmonic area paths agree for g = 0") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<Complex> c(10, Complex(0.0));
    c[1] = 1.0;
    for (size_t k = 2; k < c.size(); ++k) c[k] = 0.25 * Complex(unit(rng), unit(rng));
    const TruncatedSeries h(std::move(c));
    HarmonicMap f;
    f.h = h;
    f.g = TruncatedSeries::zero(h.order());
    const DiskQuadrature q = DiskQuadrature::polar(48, 96, 0.95);
    CHECK(std::abs(hatlas::spherical_area(f, q).value -
                   hatlas::spherical_area_analytic(h, q).value) <= 1e-12);
}

TEST_CASE("negative Jacobian nodes are reported") {
    HarmonicMap f;
    f.h = TruncatedSeries::identity(4);
    f.g = scale(TruncatedSeries::identity(4), 2.0);  // |g'| > |h'| everywhere
    const DiskQuadrature q = DiskQuadrature::polar(8, 8, 0.5);
    CHECK_THROWS_AS(hatlas::spherical_area(f, q), hatlas::NegativeJacobianNode);
}

TEST_CASE("area domination for a zero dilatation is the trivial quarter bound") {
    const DiskQuadrature q = DiskQuadrature::polar(48, 96, 0.95);
    const auto report = hatlas::area_inequality_check(hatlas::identity_map(4), q);
    CHECK(report.passed);
    // (1/4) A <= A leaves margin (3/4) A.
    const double a = hatlas::spherical_area(hatlas::identity_map(4), q).value;
    CHECK(report.margin == doctest::Approx(0.75 * a).epsilon(1e-12));
}

TEST_CASE("area domination for a moderate shear") {
    const int order = 512;
    const HarmonicMap f =
        hatlas::shear_construct(scale(TruncatedSeries::identity(order), 0.7), cayley(order));
    const DiskQuadrature q = DiskQuadrature::polar(64, 128, 0.9);
    const auto report = hatlas::area_inequality_check(f, q);
    CHECK(report.passed);
    CHECK(report.margin > 0.0);
}

TEST_CASE("hyperbolic density of the disk") {
    CHECK(hatlas::hyperbolic_density_disk(Complex(0.0)) == 1.0);
    CHECK(hatlas::hyperbolic_density_disk(Complex(0.5, 0.0)) == doctest::Approx(4.0 / 3.0));
    // Depends only on |z|.
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        const double r = 0.95 * unit(rng);
        const double t = 2.0 * std::numbers::pi * unit(rng);
        CHECK(hatlas::hyperbolic_density_disk(std::polar(r, t)) ==
              doctest::Approx(hatlas::hyperbolic_density_disk(Complex(r, 0.0))).epsilon(1e-14));
    }
    CHECK_THROWS_AS(hatlas::hyperbolic_density_disk(Complex(1.0, 0.0)), hatlas::OutsideDisk);
}

TEST_CASE("hyperbolic density of an image domain") {
    // Identity: reduces to the disk density.
    const TruncatedSeries id = TruncatedSeries::identity(4);
    CHECK(hatlas::hyperbolic_density_image(id, Complex(0.3, 0.1)) ==
          doctest::Approx(hatlas::hyperbolic_density_disk(Complex(0.3, 0.1))));
    // Normalized map at the origin: density 1.
    CHECK(hatlas::hyperbolic_density_image(cayley(16), Complex(0.0)) == doctest::Approx(1.0));
    // Pure scaling h = 2z: density 1/2 at the origin.
    CHECK(hatlas::hyperbolic_density_image(scale(id, 2.0), Complex(0.0)) == doctest::Approx(0.5));
    CHECK_THROWS_AS(hatlas::hyperbolic_density_image(TruncatedSeries::constant(1.0, 4), Complex(0.0)),
                    hatlas::DegenerateDerivative);
}

TEST_CASE("boundary distance on sampled circles") {
    const BoundaryCurve unit_circle = BoundaryCurve::circle(Complex(0.0), 1.0, 1024);
    CHECK(std::abs(hatlas::boundary_distance(Complex(0.0), unit_circle) - 1.0) <= 1e-5);
    CHECK(std::abs(hatlas::boundary_distance(Complex(0.5, 0.0), unit_circle) - 0.5) <= 1e-5);

    const BoundaryCurve shifted = BoundaryCurve::circle(Complex(1.0, 0.0), 2.0, 2048);
    CHECK(std::abs(hatlas::boundary_distance(Complex(0.0), shifted) - 1.0) <= 1e-5);
}

TEST_CASE("boundary distance error shrinks linearly (or better) with resolution") {
    double previous = std::numeric_limits<double>::infinity();
    for (const int samples : {64, 128, 256, 512}) {
        const BoundaryCurve circle = BoundaryCurve::circle(Complex(0.0), 1.0, samples);
        const double error = std::abs(hatlas::boundary_distance(Complex(0.0), circle) - 1.0);
        CHECK(error < previous);
        previous = error;
    }
}

TEST_CASE("beta_omega vanishes for connected boundaries, detects split ones") {
    const BoundaryCurve circle = BoundaryCurve::circle(Complex(0.0), 1.0, 1024);
    CHECK(hatlas::beta_omega(Complex(0.0), circle) <= 0.01);
    CHECK(hatlas::beta_omega(Complex(0.2, 0.1), circle) <= 0.02);

    // Two tiny circles far apart: the anchor cluster is tiny, the far
    // cluster is at a very different distance, so no ratio comes near 1.
    BoundaryCurve split;
    split.closed = false;
    for (int j = 0; j < 64; ++j) {
        const double t = 2.0 * std::numbers::pi * j / 64.0;
        split.points.push_back(Complex(-4.0, 0.0) + 0.01 * std::polar(1.0, t));
    }
    for (int j = 0; j < 64; ++j) {
        const double t = 2.0 * std::numbers::pi * j / 64.0;
        split.points.push_back(Complex(4.0, 0.0) + 0.01 * std::polar(1.0, t));
    }
    const double beta = hatlas::beta_omega(Complex(-2.0, 0.0), split);
    CHECK(beta > 0.5);

    // Brute-force oracle over all anchor/sample pairs.
    double anchor_dist = std::numeric_limits<double>::infinity();
    size_t anchor = 0;
    const Complex w(-2.0, 0.0);
    for (size_t i = 0; i < split.points.size(); ++i) {
        if (std::abs(w - split.points[i]) < anchor_dist) {
            anchor_dist = std::abs(w - split.points[i]);
            anchor = i;
        }
    }
    double oracle = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < split.points.size(); ++i) {
        if (i == anchor) continue;
        oracle = std::min(oracle, std::abs(std::log(anchor_dist /
                                                    std::abs(split.points[i] - split.points[anchor]))));
    }
    CHECK(beta == doctest::Approx(oracle));
}

TEST_CASE("beta_omega is invariant under rigid motions") {
    const BoundaryCurve circle = BoundaryCurve::circle(Complex(0.3, -0.2), 1.3, 512);
    const Complex w(0.1, 0.4);
    const double base = hatlas::beta_omega(w, circle);

    const Complex rot = std::polar(1.0, 0.7);
    const Complex shift(2.5, -1.25);
    BoundaryCurve moved = circle;
    for (Complex& p : moved.points) p = rot * p + shift;
    CHECK(std::abs(hatlas::beta_omega(rot * w + shift, moved) - base) <= 1e-12);
}

TEST_CASE("koebe quarter window at the canonical examples") {
    // Identity at the origin: product 1, the upper bound attained.
    const BoundaryCurve disk = BoundaryCurve::circle(Complex(0.0), 1.0, 2048);
    const auto id_report =
        hatlas::koebe_bounds_check(TruncatedSeries::identity(8), Complex(0.0), disk);
    CHECK(id_report.passed);
    CHECK(id_report.computed.real() == doctest::Approx(1.0).epsilon(1e-5));

    // Analytic Koebe map: the slit sits at distance 1/4.
    const TruncatedSeries k = koebe_analytic(1024);
    const BoundaryCurve k_boundary = BoundaryCurve::analytic_image(k, 0.97, 4096);
    const auto k_report = hatlas::koebe_bounds_check(k, Complex(0.0), k_boundary, 1e-3);
    CHECK(k_report.computed.real() == doctest::Approx(0.25).epsilon(1e-2));
    CHECK(k_report.passed);

    // Half-plane map: image is Re w > -1/2, product 1/2.
    const TruncatedSeries c = cayley(2048);
    const BoundaryCurve c_boundary = BoundaryCurve::analytic_image(c, 0.99, 4096);
    const auto c_report = hatlas::koebe_bounds_check(c, Complex(0.0), c_boundary, 1e-2);
    CHECK(c_report.computed.real() == doctest::Approx(0.5).epsilon(2e-2));
    CHECK(c_report.passed);
}

TEST_CASE("koebe product stays in [0.24, 1.01] for disk automorphism images") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int rep = 0; rep < 100; ++rep) {
        // (z - a)/(1 - conj(a) z) up to rotation, |a| <= 0.6.
        const Complex a = std::polar(0.6 * unit(rng), 2.0 * std::numbers::pi * unit(rng));
        const Complex rot = std::polar(1.0, 2.0 * std::numbers::pi * unit(rng));
        const int order = 192;
        std::vector<Complex> geo(static_cast<size_t>(order) + 1);
        Complex p(1.0);
        for (int k = 0; k <= order; ++k) {
            geo[static_cast<size_t>(k)] = p;
            p *= std::conj(a);
        }
        std::vector<Complex> num(static_cast<size_t>(order) + 1, Complex(0.0));
        num[0] = -a;
        num[1] = 1.0;
        const TruncatedSeries moebius =
            scale(mul(TruncatedSeries(std::move(num)), TruncatedSeries(std::move(geo))), rot);

        const BoundaryCurve boundary = BoundaryCurve::analytic_image(moebius, 0.995, 1024);
        const double r = 0.5 * unit(rng);
        const double t = 2.0 * std::numbers::pi * unit(rng);
        const auto report = hatlas::koebe_bounds_check(moebius, std::polar(r, t), boundary);
        CHECK(report.computed.real() >= 0.24);
        CHECK(report.computed.real() <= 1.01);
    }
}

TEST_CASE("hyperbolic-domain window on the disk and its scaling covariance") {
    const BoundaryCurve disk = BoundaryCurve::circle(Complex(0.0), 1.0, 1024);
    const auto base = hatlas::euchypdom_bounds_check(Complex(0.0), disk, 1.0);
    CHECK(base.passed);
    // Lower bound 1/(2 C0) with beta ~ 0.
    CHECK(1.0 / (2.0 * (0.0 + 4.37688)) == doctest::Approx(0.114234).epsilon(1e-4));
    CHECK(base.computed.real() == doctest::Approx(1.0).epsilon(1e-4));

    // (w, curve, lambda) -> (2w, 2 curve, lambda/2) leaves every margin
    // unchanged; doubling is exact in floating point.
    BoundaryCurve doubled = disk;
    for (Complex& p : doubled.points) p *= 2.0;
    const auto scaled = hatlas::euchypdom_bounds_check(Complex(0.0), doubled, 0.5);
    CHECK(std::abs(scaled.margin - base.margin) <= 1e-10);
    CHECK(std::abs(scaled.computed.real() - base.computed.real()) <= 1e-10);
}

TEST_CASE("distortion checks on the identity map") {
    const HarmonicMap id = hatlas::identity_map(8);
    const BoundaryCurve omega = BoundaryCurve::map_image(id, 0.95, 1024);
    const BoundaryCurve dcurve = BoundaryCurve::analytic_image(id.h, 0.95, 1024);
    const auto checks = hatlas::distortion_checks(id, Complex(0.3, 0.1), omega, dcurve);
    REQUIRE(checks.size() == 3);
    for (const auto& r : checks) {
        CHECK(r.passed);
        CHECK(!r.provenance.empty());
    }
    // For the identity the two distances coincide, so the doubling bound
    // has margin equal to the distance itself.
    CHECK(checks[1].margin == doctest::Approx(checks[1].computed.real()).epsilon(1e-9));
}

TEST_CASE("distortion checks on the harmonic Koebe map probe grid") {
    const HarmonicMap k = hatlas::harmonic_koebe(256);
    const BoundaryCurve omega = BoundaryCurve::map_image(k, 0.9, 2048);
    const BoundaryCurve dcurve = BoundaryCurve::analytic_image(k.h, 0.9, 2048);
    for (int j = 0; j < 16; ++j) {
        const Complex z = std::polar(0.5, 2.0 * std::numbers::pi * j / 16.0);
        const auto checks = hatlas::distortion_checks(k, z, omega, dcurve, 2.0, 2e-3);
        CHECK(checks[0].passed);
        CHECK(checks[1].passed);
        CHECK(checks[2].passed);
    }
    // mu(0) = 0 for class-0 maps: the left side of the density window is
    // exactly 1/16 at the origin.
    CHECK(std::abs(hatlas::dilatation_at(k, Complex(0.0))) == 0.0);
}

TEST_CASE("boundary curve resolution and validation") {
    const BoundaryCurve c = BoundaryCurve::circle(Complex(0.0), 1.0, 256);
    CHECK(c.resolution() == doctest::Approx(2.0 * std::numbers::pi / 256.0).epsilon(1e-3));
    CHECK_THROWS_AS(BoundaryCurve::circle(Complex(0.0), 1.0, 2), std::invalid_argument);
    BoundaryCurve degenerate;
    degenerate.points = {Complex(0.0), Complex(1.0)};
    CHECK_THROWS_AS(hatlas::boundary_distance(Complex(0.0), degenerate), std::invalid_argument);
    CHECK_THROWS_AS(hatlas::beta_omega(Complex(1.0, 0.0),
                                       BoundaryCurve::circle(Complex(0.0), 1.0, 16)),
                    std::invalid_argument);
}

TEST_CASE("quadrature error shrinks under node doubling on a peaked integrand") {
    // Scaled identity R = 6: the integrand concentrates near the origin.
    HarmonicMap f;
    f.h = scale(TruncatedSeries::identity(4), 6.0);
    f.g = TruncatedSeries::zero(4);
    const double rho = 0.9;
    const double closed = 2.0 * std::numbers::pi * (0.5 - 0.5 / (1.0 + 36.0 * rho * rho));
    double previous = std::numeric_limits<double>::infinity();
    for (const int n : {8, 16, 32, 64}) {
        const double err = std::abs(
            hatlas::spherical_area(f, DiskQuadrature::polar(n, 16, rho)).value - closed);
        const bool improved = (err < previous) || (err < 1e-14);
        CHECK(improved);
        previous = err;
    }
    CHECK(previous <= 1e-10);
}

TEST_CASE("radial weights are positive and sum to the disk area") {
    const DiskQuadrature q = DiskQuadrature::polar(128, 7, 0.77);
    double sum = 0.0;
    for (const auto& rn : q.radial_nodes) {
        CHECK(rn.weight > 0.0);
        CHECK(rn.r > 0.0);
        CHECK(rn.r < 0.77);
        sum += rn.weight;
    }
    CHECK(sum * q.angular_spacing() * q.angular_count ==
          doctest::Approx(std::numbers::pi * 0.77 * 0.77).epsilon(1e-12));
}

TEST_CASE("results are bitwise independent of the worker count") {
    const DiskQuadrature q = DiskQuadrature::polar(64, 128, 0.95);
    const HarmonicMap k = hatlas::harmonic_koebe(256);

    setenv("HARMONIC_ATLAS_THREADS", "1", 1);
    const double serial_area = hatlas::spherical_area(k, DiskQuadrature::polar(64, 128, 0.9)).value;
    const auto serial_search = hatlas::ps_search(16.0, 44.0, 5000, 13);

    setenv("HARMONIC_ATLAS_THREADS", "4", 1);
    const double parallel_area =
        hatlas::spherical_area(k, DiskQuadrature::polar(64, 128, 0.9)).value;
    const auto parallel_search = hatlas::ps_search(16.0, 44.0, 5000, 13);
    unsetenv("HARMONIC_ATLAS_THREADS");

    CHECK(serial_area == parallel_area);
    CHECK(serial_search.max_value == parallel_search.max_value);
    CHECK(serial_search.argmax_index == parallel_search.argmax_index);
    (void)q;
}
