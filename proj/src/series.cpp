#include "hatlas/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "hatlas/errors.hpp"

namespace hatlas {

namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: empty coefficient list");
    for (const Complex& c : coeffs_) {
        if (!finite(c)) throw std::invalid_argument("TruncatedSeries: non-finite coefficient");
    }
}

TruncatedSeries TruncatedSeries::zero(int order) {
    return TruncatedSeries(std::vector<Complex>(static_cast<size_t>(order) + 1, Complex(0.0)));
}

TruncatedSeries TruncatedSeries::constant(Complex value, int order) {
    std::vector<Complex> c(static_cast<size_t>(order) + 1, Complex(0.0));
    c[0] = value;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::identity(int order) {
    if (order < 1) throw std::invalid_argument("identity: order must be >= 1");
    std::vector<Complex> c(static_cast<size_t>(order) + 1, Complex(0.0));
    c[1] = 1.0;
    return TruncatedSeries(std::move(c));
}

Complex TruncatedSeries::coeff(int k) const {
    if (k < 0) throw std::out_of_range("TruncatedSeries::coeff: negative index");
    if (k > order()) return Complex(0.0);
    return coeffs_[static_cast<size_t>(k)];
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Complex> c(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<size_t>(k)] = a.coeff(k) + b.coeff(k);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Complex> c(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<size_t>(k)] = a.coeff(k) - b.coeff(k);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries scale(const TruncatedSeries& a, Complex factor) {
    std::vector<Complex> c(a.coeffs());
    for (Complex& x : c) x *= factor;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Complex> c(static_cast<size_t>(n) + 1, Complex(0.0));
    for (int k = 0; k <= n; ++k) {
        Complex s(0.0);
        for (int j = 0; j <= k; ++j) s += a.coeff(j) * b.coeff(k - j);
        c[static_cast<size_t>(k)] = s;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& phi) {
    if (std::abs(phi.coeff(0)) > 0.0)
        throw NonvanishingConstantTerm("compose: inner function must vanish at 0");
    const int n = std::min(f.order(), phi.order());
    /* With phi(0) = 0, the degree-k coefficient of f(phi) only sees
     * f_0..f_k and phi_1..phi_k, so coefficients of f beyond n cannot
     * reach the retained degrees. */
    TruncatedSeries result = TruncatedSeries::constant(f.coeff(n), n);
    for (int j = n - 1; j >= 0; --j) {
        result = add(mul(result, phi), TruncatedSeries::constant(f.coeff(j), n));
    }
    return result;
}

TruncatedSeries reciprocal(const TruncatedSeries& a) {
    const Complex a0 = a.coeff(0);
    if (a0 == Complex(0.0))
        throw DivisionByZeroConstantTerm("reciprocal: constant term is zero");
    const int n = a.order();
    std::vector<Complex> b(static_cast<size_t>(n) + 1);
    b[0] = 1.0 / a0;
    for (int k = 1; k <= n; ++k) {
        Complex s(0.0);
        for (int j = 1; j <= k; ++j) s += a.coeff(j) * b[static_cast<size_t>(k - j)];
        b[static_cast<size_t>(k)] = -s / a0;
    }
    return TruncatedSeries(std::move(b));
}

TruncatedSeries derivative(const TruncatedSeries& a) {
    if (a.order() == 0) return TruncatedSeries::zero(0);
    std::vector<Complex> c(static_cast<size_t>(a.order()));
    for (int k = 0; k < a.order(); ++k)
        c[static_cast<size_t>(k)] = static_cast<double>(k + 1) * a.coeff(k + 1);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries antiderivative(const TruncatedSeries& a) {
    std::vector<Complex> c(static_cast<size_t>(a.order()) + 2, Complex(0.0));
    for (int k = 0; k <= a.order(); ++k)
        c[static_cast<size_t>(k) + 1] = a.coeff(k) / static_cast<double>(k + 1);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries exp_series(const TruncatedSeries& a) {
    if (a.coeff(0) != Complex(0.0))
        throw NonvanishingConstantTerm("exp_series: constant term must be zero");
    const int n = a.order();
    std::vector<Complex> e(static_cast<size_t>(n) + 1, Complex(0.0));
    e[0] = 1.0;
    for (int k = 1; k <= n; ++k) {
        Complex s(0.0);
        for (int j = 1; j <= k; ++j) s += static_cast<double>(j) * a.coeff(j) * e[static_cast<size_t>(k - j)];
        e[static_cast<size_t>(k)] = s / static_cast<double>(k);
    }
    return TruncatedSeries(std::move(e));
}

Complex evaluate(const TruncatedSeries& a, Complex z) {
    Complex r(0.0);
    for (int k = a.order(); k >= 0; --k) r = r * z + a.coeff(k);
    return r;
}

void write_csv(const TruncatedSeries& a, std::ostream& out) {
    out << "index,re,im\n";
    char buf[128];
    for (int k = 0; k <= a.order(); ++k) {
        std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g\n", k, a.coeff(k).real(), a.coeff(k).imag());
        out << buf;
    }
}

}  // namespace hatlas
