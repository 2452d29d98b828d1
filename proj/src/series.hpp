#pragma once

#include <string>
#include <vector>

#include "bigfloat.hpp"
#include "rational.hpp"

namespace asx {

// Formal power series in 1/n truncated at order m, exact rational
// coefficients. coeff(k) is the coefficient of n^-k; a series of order m
// carries exactly m+1 coefficients and no information beyond them.
class TruncatedSeries {
public:
    // All-zero series of the given order.
    explicit TruncatedSeries(long order);
    // order = coeffs.size() - 1; the list must not be empty.
    explicit TruncatedSeries(std::vector<Rational> coeffs);

    long order() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Rational& coeff(long k) const;
    void set_coeff(long k, Rational v);

private:
    std::vector<Rational> coeffs_;
};

// Termwise sum/difference truncated at min(orders).
TruncatedSeries series_add(const TruncatedSeries& x, const TruncatedSeries& y);
TruncatedSeries series_sub(const TruncatedSeries& x, const TruncatedSeries& y);

// Cauchy product truncated at min(orders).
TruncatedSeries series_mul(const TruncatedSeries& x, const TruncatedSeries& y);

// Termwise equality. Comparing series of different orders is a caller bug
// and throws DomainError instead of truncating silently.
bool series_equal(const TruncatedSeries& x, const TruncatedSeries& y);

// Prefix copy; new_order must not exceed the series order.
TruncatedSeries truncated(const TruncatedSeries& f, long new_order);

// Row weights of the two index-shift re-expansions, for 1 <= j <= k.
// These are the only two places the shift matrices exist; the solvers in
// recurrences.cpp reuse them for their coupling rows.
Rational forward_shift_weight(long k, long j);   // (-1)^(k-j) C(k-1, j-1)
Rational backward_shift_weight(long k, long j);  // C(k-1, j-1)

// Re-expands f evaluated at argument n+1 as a series in 1/n. The constant
// term passes through unchanged; for k >= 1,
//   g_k = sum_{j=1..k} f_j (-1)^(k-j) C(k-1, j-1).
TruncatedSeries shift_forward(const TruncatedSeries& f);

// Re-expands f evaluated at argument n-1 as a series in 1/n:
//   g_k = sum_{j=1..k} f_j C(k-1, j-1).
TruncatedSeries shift_backward(const TruncatedSeries& f);

// Coefficients of (1 - c/n)^alpha: coeff j = (alpha)_j / j! * (-c)^j with
// the falling factorial (alpha)_j.
TruncatedSeries binomial_series(const Rational& alpha, const Rational& c, long order);

// Exact rational Horner evaluation at integer n >= 1 followed by a single
// rounding to the requested precision.
BigFloat evaluate(const TruncatedSeries& f, long n, long digits);

// Text exchange form: first line "order m", then coefficients 0..m one per
// line in rational text form.
std::string to_text(const TruncatedSeries& f);
TruncatedSeries series_from_text(const std::string& text);

inline TruncatedSeries operator+(const TruncatedSeries& x, const TruncatedSeries& y) {
    return series_add(x, y);
}
inline TruncatedSeries operator-(const TruncatedSeries& x, const TruncatedSeries& y) {
    return series_sub(x, y);
}
inline TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y) {
    return series_mul(x, y);
}

} // namespace asx
