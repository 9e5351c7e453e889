#include "hatlas/modular_q.hpp"

#include <stdexcept>
#include <utility>

namespace hatlas {

namespace {

using Poly = std::vector<BigInt>;  // coefficients by degree, fixed length

// Convolution truncated to the common length.
Poly poly_mul(const Poly& a, const Poly& b) {
    const size_t n = a.size();
    Poly c(n);
    for (size_t k = 0; k < n; ++k) {
        BigInt s = 0;
        for (size_t j = 0; j <= k; ++j) {
            if (!a[j].is_zero() && !b[k - j].is_zero()) s += a[j] * b[k - j];
        }
        c[k] = std::move(s);
    }
    return c;
}

}  // namespace

const BigInt& IntSeries::a(int n) const {
    if (n < 1 || n > order()) throw std::out_of_range("IntSeries::a: index outside [1, order]");
    return coeffs[static_cast<size_t>(n - 1)];
}

BigInt IntSeries::b(int n) const {
    if (n < 1 || n > order()) throw std::out_of_range("IntSeries::b: index outside [1, order]");
    return n == 1 ? a(1) : a(n) - a(n - 1);
}

BigInt IntSeries::c(int n) const {
    // B_0 = A_0 - A_{-1} = 0, so C_1 = B_1.
    if (n < 1 || n > order()) throw std::out_of_range("IntSeries::c: index outside [1, order]");
    return n == 1 ? b(1) : b(n) - b(n - 1);
}

IntSeries q_coefficients(int order) {
    if (order < 1) throw std::invalid_argument("q_coefficients: order must be >= 1");

    // Work at degrees 0..order-1; the leading 16 z shifts everything up by one.
    const size_t len = static_cast<size_t>(order);
    Poly acc(len);
    acc[0] = 1;

    for (int n = 1; 2 * n - 1 <= order; ++n) {
        // (1 + z^{2n}) / (1 - z^{2n-1}) as an exact truncated series:
        // the denominator inverts to the geometric series in z^{2n-1}.
        Poly factor(len);
        for (size_t k = 0; k * static_cast<size_t>(2 * n - 1) < len; ++k)
            factor[k * static_cast<size_t>(2 * n - 1)] = 1;
        if (static_cast<size_t>(2 * n) < len) {
            Poly numer(len);
            numer[0] = 1;
            numer[static_cast<size_t>(2 * n)] = 1;
            factor = poly_mul(factor, numer);
        }

        // Eighth power by three squarings.
        factor = poly_mul(factor, factor);
        factor = poly_mul(factor, factor);
        factor = poly_mul(factor, factor);

        acc = poly_mul(acc, factor);
    }

    IntSeries result;
    result.coeffs.resize(len);
    for (size_t k = 0; k < len; ++k) result.coeffs[k] = 16 * acc[k];
    return result;
}

IntSeries j_coefficients(int order) {
    IntSeries q = q_coefficients(order);
    // -Q(-z): coefficient n picks up -(-1)^n.
    for (int n = 1; n <= order; ++n) {
        if (n % 2 == 0) q.coeffs[static_cast<size_t>(n - 1)] = -q.coeffs[static_cast<size_t>(n - 1)];
    }
    return q;
}

VerificationReport check_convex_nondecreasing(const IntSeries& s) {
    if (s.order() == 0) throw std::invalid_argument("check_convex_nondecreasing: empty sequence");

    BigInt worst = s.b(1);
    int worst_index = 1;
    for (int n = 1; n <= s.order(); ++n) {
        const BigInt bn = s.b(n);
        const BigInt cn = s.c(n);
        if (bn < worst) { worst = bn; worst_index = n; }
        if (cn < worst) { worst = cn; worst_index = n; }
    }

    VerificationReport r;
    r.check_name = "convex-nondecreasing";
    r.computed = static_cast<double>(worst_index);
    r.bound = 0.0;
    // Worst difference value; negative means a violated step. Saturates
    // for huge integers, which only flattens comfortable margins.
    r.margin = worst.convert_to<double>();
    r.tolerance = 0.0;
    r.passed = worst >= 0;
    r.provenance = "coefficient sequence of the modular product is non-decreasing and convex";
    return r;
}

TruncatedSeries to_series(const IntSeries& s) {
    std::vector<Complex> c(static_cast<size_t>(s.order()) + 1, Complex(0.0));
    for (int n = 1; n <= s.order(); ++n)
        c[static_cast<size_t>(n)] = s.a(n).convert_to<double>();
    return TruncatedSeries(std::move(c));
}

}  // namespace hatlas
