#ifndef HATLAS_MODULAR_Q_HPP
#define HATLAS_MODULAR_Q_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "hatlas/report.hpp"
#include "hatlas/series.hpp"

namespace hatlas {

using BigInt = boost::multiprecision::cpp_int;

/* Exact integer coefficient sequence A_1..A_N, indexed from 1 through
 * a(n). The first and second difference sequences B_n = A_n - A_{n-1}
 * and C_n = B_n - B_{n-1} use the convention A_0 = A_{-1} = 0. */
struct IntSeries {
    std::vector<BigInt> coeffs;  // coeffs[i] holds A_{i+1}

    int order() const { return static_cast<int>(coeffs.size()); }
    const BigInt& a(int n) const;  // n in [1, order]
    BigInt b(int n) const;         // A_n - A_{n-1},   n in [1, order]
    BigInt c(int n) const;         // B_n - B_{n-1},   n in [1, order]
};

/* Exact Taylor coefficients A_1..A_N of the modular function
 *
 *   Q(z) = 16 z prod_{n>=1} ((1 + z^{2n}) / (1 - z^{2n-1}))^8,
 *
 * expanded from the finite sub-product with 2n-1 <= N; factor n first
 * touches degree 2n-1, so dropping the rest leaves degrees <= N intact.
 * Each factor's eighth power is formed by three repeated squarings. */
IntSeries q_coefficients(int order);

// J(z) = -Q(-z): the same magnitudes with alternating signs.
IntSeries j_coefficients(int order);

// Passes iff B_n >= 0 and C_n >= 0 throughout, i.e. the sequence is
// non-decreasing and convex from A_0 = A_{-1} = 0 on.
VerificationReport check_convex_nondecreasing(const IntSeries& s);

// Floating series 0 + A_1 z + ... + A_N z^N for composition work.
// Exact as long as every A_n fits a double (n <= ~55); rounded beyond.
TruncatedSeries to_series(const IntSeries& s);

}  // namespace hatlas

#endif
