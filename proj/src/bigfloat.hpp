#pragma once

#include <mpfr.h>

#include <string>

#include "rational.hpp"

namespace asx {

// Arbitrary-precision floating-point value with an explicit decimal-digit
// precision. Every operation is correctly rounded (nearest, ties to even)
// at the precision of its result, so a single operation's relative error
// stays far below 10^(1-digits).
//
// Precision propagates: a binary operation carries max(digits of the two
// operands). Downgrades happen only through the explicit round_to().
class BigFloat {
public:
    static constexpr long min_digits = 10;

    explicit BigFloat(long digits = min_digits);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    static BigFloat from_long(long v, long digits);
    // Exact rational in, one rounding out.
    static BigFloat from_rational(const Rational& r, long digits);
    static BigFloat from_string(const std::string& text, long digits);

    static BigFloat pi(long digits);
    static BigFloat e(long digits);
    static BigFloat euler_gamma(long digits);

    long digits() const { return digits_; }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat operator-() const;

    BigFloat abs() const;
    BigFloat sqrt() const;  // DomainError on negative input
    BigFloat log() const;   // DomainError on non-positive input
    BigFloat log2() const;  // DomainError on non-positive input
    BigFloat pow_ui(unsigned long e) const;

    // Re-round to a new precision; the one sanctioned way to change digits.
    BigFloat round_to(long digits) const;

    int cmp(const BigFloat& o) const { return mpfr_cmp(f_, o.f_); }
    bool is_zero() const { return mpfr_zero_p(f_) != 0; }
    int sgn() const { return mpfr_sgn(f_); }

    double to_double() const { return mpfr_get_d(f_, MPFR_RNDN); }

    // Positional decimal with exactly `decimals` digits after the point,
    // round-half-even. Used for display-rounded table output.
    std::string to_fixed(long decimals) const;

    // Scientific decimal carrying the full working precision.
    std::string to_sci() const;

    mpfr_srcptr raw() const { return f_; }

private:
    long digits_;
    mpfr_t f_;

    static mpfr_prec_t bits_for(long digits);
};

} // namespace asx
