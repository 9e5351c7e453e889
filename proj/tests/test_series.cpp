#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "hatlas/errors.hpp"
#include "hatlas/series.hpp"

using hatlas::Complex;
using hatlas::TruncatedSeries;

namespace {

// Oracle: plain double-loop convolution, independent of mul()'s layout.
std::vector<Complex> convolve_oracle(const std::vector<Complex>& a, const std::vector<Complex>& b,
                                     size_t out_len) {
    std::vector<Complex> c(out_len, Complex(0.0));
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < b.size(); ++j) {
            if (i + j < out_len) c[i + j] += a[i] * b[j];
        }
    }
    return c;
}

TruncatedSeries random_series(std::mt19937_64& rng, int order, double scale = 1.0) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<Complex> c(static_cast<size_t>(order) + 1);
    for (Complex& x : c) x = scale * Complex(unit(rng), unit(rng));
    return TruncatedSeries(std::move(c));
}

}  // namespace

TEST_CASE("add: cancellation, identity element, componentwise sum") {
    const TruncatedSeries one_plus(std::vector<Complex>{1.0, 1.0});
    const TruncatedSeries one_minus(std::vector<Complex>{1.0, -1.0});
    const TruncatedSeries sum = add(one_plus, one_minus);
    CHECK(sum.order() == 1);
    CHECK(sum.coeff(0) == Complex(2.0));
    CHECK(sum.coeff(1) == Complex(0.0));

    const TruncatedSeries z = TruncatedSeries::identity(4);
    const TruncatedSeries same = add(z, TruncatedSeries::zero(4));
    for (int k = 0; k <= 4; ++k) CHECK(same.coeff(k) == z.coeff(k));

    const TruncatedSeries p(std::vector<Complex>{0.0, 1.0, 2.0});
    const TruncatedSeries q(std::vector<Complex>{0.0, 1.0, 3.0});
    const TruncatedSeries r = add(p, q);
    CHECK(r.coeff(1) == Complex(2.0));
    CHECK(r.coeff(2) == Complex(5.0));
}

TEST_CASE("mul: geometric-series inverse and binomial square") {
    const TruncatedSeries one_minus(std::vector<Complex>{1.0, -1.0, 0.0, 0.0});
    const TruncatedSeries geo(std::vector<Complex>{1.0, 1.0, 1.0, 1.0});
    const TruncatedSeries prod = mul(one_minus, geo);
    CHECK(prod.order() == 3);
    CHECK(prod.coeff(0) == Complex(1.0));
    for (int k = 1; k <= 3; ++k) CHECK(prod.coeff(k) == Complex(0.0));

    const TruncatedSeries one_plus(std::vector<Complex>{1.0, 1.0, 0.0});
    const TruncatedSeries square = mul(one_plus, one_plus);
    CHECK(square.coeff(0) == Complex(1.0));
    CHECK(square.coeff(1) == Complex(2.0));
    CHECK(square.coeff(2) == Complex(1.0));
}

TEST_CASE("mul: square of sum (n+1) z^n against the hand convolution") {
    // (1 + 2z + 3z^2 + 4z^3)^2 = 1 + 4z + 10z^2 + 20z^3 + ...
    const TruncatedSeries s(std::vector<Complex>{1.0, 2.0, 3.0, 4.0});
    const TruncatedSeries sq = mul(s, s);
    CHECK(sq.coeff(0).real() == doctest::Approx(1.0));
    CHECK(sq.coeff(1).real() == doctest::Approx(4.0));
    CHECK(sq.coeff(2).real() == doctest::Approx(10.0));
    CHECK(sq.coeff(3).real() == doctest::Approx(20.0));
}

TEST_CASE("mul matches the brute-force convolution oracle on random input") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        const TruncatedSeries a = random_series(rng, 24);
        const TruncatedSeries b = random_series(rng, 24);
        const std::vector<Complex> expected = convolve_oracle(a.coeffs(), b.coeffs(), 25);
        const TruncatedSeries got = mul(a, b);
        for (int k = 0; k <= 24; ++k)
            CHECK(std::abs(got.coeff(k) - expected[static_cast<size_t>(k)]) < 1e-12);
    }
}

TEST_CASE("mul is commutative and associative up to 1e-12 relative error") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 10; ++rep) {
        const TruncatedSeries a = random_series(rng, 64);
        const TruncatedSeries b = random_series(rng, 64);
        const TruncatedSeries c = random_series(rng, 64);

        const TruncatedSeries ab = mul(a, b);
        const TruncatedSeries ba = mul(b, a);
        const TruncatedSeries abc1 = mul(ab, c);
        const TruncatedSeries abc2 = mul(a, mul(b, c));
        for (int k = 0; k <= 64; ++k) {
            CHECK(std::abs(ab.coeff(k) - ba.coeff(k)) <= 1e-12 * (1.0 + std::abs(ab.coeff(k))));
            CHECK(std::abs(abc1.coeff(k) - abc2.coeff(k)) <=
                  1e-12 * (1.0 + std::abs(abc1.coeff(k))));
        }
    }
}

TEST_CASE("compose: scaling, identity Schwarz function, z^2 substitution") {
    // f(z) = z^2, phi(z) = 2z -> 4z^2.
    const TruncatedSeries f(std::vector<Complex>{0.0, 0.0, 1.0});
    const TruncatedSeries phi(std::vector<Complex>{0.0, 2.0, 0.0});
    CHECK(compose(f, phi).coeff(2) == Complex(4.0));

    // Identity inner function leaves any polynomial unchanged, exactly.
    std::mt19937_64 rng(23);
    const TruncatedSeries g = random_series(rng, 16);
    const TruncatedSeries same = compose(g, TruncatedSeries::identity(16));
    for (int k = 0; k <= 16; ++k) CHECK(same.coeff(k) == g.coeff(k));

    // z/(1-z) at order 4 composed with z^2: z^2 + z^4.
    const TruncatedSeries cayley(std::vector<Complex>{0.0, 1.0, 1.0, 1.0, 1.0});
    std::vector<Complex> sq(5, Complex(0.0));
    sq[2] = 1.0;
    const TruncatedSeries composed = compose(cayley, TruncatedSeries(std::move(sq)));
    CHECK(composed.coeff(0) == Complex(0.0));
    CHECK(composed.coeff(1) == Complex(0.0));
    CHECK(composed.coeff(2) == Complex(1.0));
    CHECK(composed.coeff(3) == Complex(0.0));
    CHECK(composed.coeff(4) == Complex(1.0));
}

TEST_CASE("compose rejects a nonvanishing constant term") {
    const TruncatedSeries f = TruncatedSeries::identity(3);
    const TruncatedSeries bad(std::vector<Complex>{0.5, 1.0, 0.0, 0.0});
    CHECK_THROWS_AS(compose(f, bad), hatlas::NonvanishingConstantTerm);
}

TEST_CASE("reciprocal: geometric series, constants, binomial oracle") {
    const TruncatedSeries one_minus(std::vector<Complex>{1.0, -1.0, 0.0, 0.0, 0.0});
    const TruncatedSeries inv = reciprocal(one_minus);
    for (int k = 0; k <= 4; ++k) CHECK(inv.coeff(k).real() == doctest::Approx(1.0));

    CHECK(reciprocal(TruncatedSeries::constant(2.0)).coeff(0) == Complex(0.5));

    // (1-z)^{-2} = sum (n+1) z^n, the binomial-series oracle.
    const TruncatedSeries sq(std::vector<Complex>{1.0, -2.0, 1.0, 0.0, 0.0, 0.0});
    const TruncatedSeries invsq = reciprocal(sq);
    for (int k = 0; k <= 5; ++k) CHECK(invsq.coeff(k).real() == doctest::Approx(k + 1.0));

    CHECK_THROWS_AS(reciprocal(TruncatedSeries::identity(3)), hatlas::DivisionByZeroConstantTerm);
}

TEST_CASE("reciprocal is a two-sided inverse at the working order") {
    std::mt19937_64 rng(29);
    for (int rep = 0; rep < 10; ++rep) {
        TruncatedSeries a = random_series(rng, 32, 0.5);
        // Keep it well-conditioned: constant term of modulus >= 1.
        std::vector<Complex> c = a.coeffs();
        c[0] = Complex(1.0) + 0.2 * c[0];
        a = TruncatedSeries(std::move(c));

        const TruncatedSeries left = mul(a, reciprocal(a));
        const TruncatedSeries right = mul(reciprocal(a), a);
        CHECK(std::abs(left.coeff(0) - Complex(1.0)) < 1e-10);
        for (int k = 1; k <= 32; ++k) {
            CHECK(std::abs(left.coeff(k)) < 1e-10);
            CHECK(std::abs(right.coeff(k)) < 1e-10);
        }
    }
}

TEST_CASE("derivative: polynomials, constants, log series") {
    const TruncatedSeries p(std::vector<Complex>{0.0, 1.0, 1.0});
    const TruncatedSeries dp = derivative(p);
    CHECK(dp.order() == 1);
    CHECK(dp.coeff(0) == Complex(1.0));
    CHECK(dp.coeff(1) == Complex(2.0));

    const TruncatedSeries c = derivative(TruncatedSeries::constant(5.0));
    CHECK(c.order() == 0);
    CHECK(c.coeff(0) == Complex(0.0));

    // sum z^n / n for n >= 1, order 4: derivative is 1 + z + z^2 + z^3.
    const TruncatedSeries log_series(
        std::vector<Complex>{0.0, 1.0, 1.0 / 2.0, 1.0 / 3.0, 1.0 / 4.0});
    const TruncatedSeries dl = derivative(log_series);
    for (int k = 0; k <= 3; ++k) CHECK(dl.coeff(k).real() == doctest::Approx(1.0));
}

TEST_CASE("antiderivative undoes derivative up to the constant term") {
    std::mt19937_64 rng(31);
    const TruncatedSeries a = random_series(rng, 20);
    const TruncatedSeries back = derivative(antiderivative(a));
    for (int k = 0; k <= 20; ++k) CHECK(std::abs(back.coeff(k) - a.coeff(k)) < 1e-15);
}

TEST_CASE("evaluate: constants and the truncated geometric sum") {
    const TruncatedSeries p(std::vector<Complex>{1.0, 1.0, 1.0});
    CHECK(evaluate(p, Complex(0.0)) == Complex(1.0));

    // z/(1-z) truncated at order 20, evaluated at 0.5: the closed form of
    // the truncated geometric sum is 1 - 0.5^20.
    std::vector<Complex> c(21, Complex(1.0));
    c[0] = 0.0;
    const TruncatedSeries cayley(std::move(c));
    const double expected = 1.0 - std::pow(0.5, 20);
    CHECK(std::abs(evaluate(cayley, Complex(0.5)) - Complex(expected)) < 1e-15);
    CHECK(expected == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("derivative/evaluate agree with central finite differences") {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double eps = 1e-6;
    for (int rep = 0; rep < 10; ++rep) {
        const TruncatedSeries a = random_series(rng, 32);
        const double r = 0.8 * std::sqrt(unit(rng));
        const double t = 2.0 * 3.14159265358979323846 * unit(rng);
        const Complex z(r * std::cos(t), r * std::sin(t));
        const Complex direct = evaluate(derivative(a), z);
        const Complex fd =
            (evaluate(a, z + Complex(eps)) - evaluate(a, z - Complex(eps))) / Complex(2.0 * eps);
        CHECK(std::abs(direct - fd) <= 1e-5);
    }
}

TEST_CASE("exp_series needs a vanishing constant term and matches exp coefficients") {
    CHECK_THROWS_AS(exp_series(TruncatedSeries::constant(1.0, 3)), hatlas::NonvanishingConstantTerm);

    // exp(z): coefficients 1/k!.
    const TruncatedSeries e = exp_series(TruncatedSeries::identity(10));
    double factorial = 1.0;
    for (int k = 0; k <= 10; ++k) {
        if (k > 0) factorial *= k;
        CHECK(e.coeff(k).real() == doctest::Approx(1.0 / factorial));
    }
}

TEST_CASE("constructor rejects empty and non-finite input") {
    CHECK_THROWS_AS(TruncatedSeries(std::vector<Complex>{}), std::invalid_argument);
    CHECK_THROWS_AS(
        TruncatedSeries(std::vector<Complex>{Complex(std::nan(""), 0.0)}),
        std::invalid_argument);
}

TEST_CASE("csv dump has one row per coefficient") {
    const TruncatedSeries p(std::vector<Complex>{1.0, Complex(0.0, 2.0)});
    std::ostringstream out;
    write_csv(p, out);
    CHECK(out.str() == "index,re,im\n0,1,0\n1,0,2\n");
}
