#ifndef HATLAS_SERIES_HPP
#define HATLAS_SERIES_HPP

#include <complex>
#include <iosfwd>
#include <vector>

namespace hatlas {

using Complex = std::complex<double>;

/* Truncated complex Taylor expansion c_0 + c_1 z + ... + c_N z^N.
 *
 * Values are immutable after construction, so they can be shared freely
 * between threads. Binary operations truncate at the smaller of the two
 * operand orders: coefficients of the result beyond that degree would be
 * contaminated by the missing tails and are never exposed. */
class TruncatedSeries {
  public:
    // Zero series of order 0.
    TruncatedSeries() : coeffs_(1, Complex(0.0)) {}

    // Takes ownership of the coefficient list c_0..c_N (order = size - 1).
    // Rejects empty lists and non-finite coefficients.
    explicit TruncatedSeries(std::vector<Complex> coeffs);

    static TruncatedSeries zero(int order);
    static TruncatedSeries constant(Complex value, int order = 0);
    // The monomial z, padded with zeros up to `order`.
    static TruncatedSeries identity(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    // c_k, or 0 beyond the truncation order.
    Complex coeff(int k) const;

  private:
    std::vector<Complex> coeffs_;
};

// Componentwise sum/difference, truncated at min(a.order, b.order).
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries scale(const TruncatedSeries& a, Complex factor);

// Cauchy product truncated at min(a.order, b.order).
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/* Taylor coefficients of f(phi(z)) up to min(f.order, phi.order), by
 * right-to-left Horner nesting. Requires phi(0) = 0; with that, every
 * retained coefficient is exact for polynomial inputs (no truncation
 * error enters from discarded degrees). */
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& phi);

// Multiplicative inverse at the truncation order: mul(a, reciprocal(a)) = 1
// up to rounding. Requires a nonzero constant term.
TruncatedSeries reciprocal(const TruncatedSeries& a);

// Termwise derivative; the order drops by one (a constant maps to the
// zero series of order 0).
TruncatedSeries derivative(const TruncatedSeries& a);

// Antiderivative with integration constant 0; the order grows by one.
TruncatedSeries antiderivative(const TruncatedSeries& a);

// exp(a(z)) for a series with a(0) = 0, by the standard convolution
// recurrence e_n = (1/n) sum_{k=1..n} k a_k e_{n-k}.
TruncatedSeries exp_series(const TruncatedSeries& a);

// Horner evaluation of the truncated polynomial.
Complex evaluate(const TruncatedSeries& a, Complex z);

// CSV rows "index,re,im" with round-trippable doubles.
void write_csv(const TruncatedSeries& a, std::ostream& out);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }
inline TruncatedSeries operator*(Complex s, const TruncatedSeries& a) { return scale(a, s); }
inline TruncatedSeries operator*(const TruncatedSeries& a, Complex s) { return scale(a, s); }

}  // namespace hatlas

#endif
