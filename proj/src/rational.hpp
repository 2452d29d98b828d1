#pragma once

#include <gmp.h>

#include <string>

namespace asx {

// Exact arbitrary-precision rational number.
//
// Canonical form is maintained after every operation:
//   - denominator > 0,
//   - gcd(|numerator|, denominator) == 1,
//   - zero is 0/1.
// All arithmetic is exact; there is no rounding anywhere in this type.
// Values have no shared mutable state and can be copied across threads.
class Rational {
public:
    Rational() { mpq_init(q_); }
    Rational(long n) {
        mpq_init(q_);
        mpq_set_si(q_, n, 1);
    }
    // num/den, reduced; throws DomainError when den == 0.
    Rational(long num, long den);

    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    // Parses "p" or "p/q" with an optional leading sign; q must be a
    // positive integer. Throws ParseError on anything else.
    static Rational from_string(const std::string& text);

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    int sgn() const { return mpq_sgn(q_); }

    // "p/q" with "/q" omitted when q == 1, e.g. "-1/12", "10", "0".
    std::string to_string() const;

    int cmp(const Rational& o) const { return mpq_cmp(q_, o.q_); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_, b.q_) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return a.cmp(b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.cmp(b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.cmp(b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.cmp(b) >= 0; }

    mpq_srcptr raw() const { return q_; }

private:
    mpq_t q_;

    friend Rational binomial(unsigned long n, long k);
};

// C(n, k) as an exact integer-valued rational. Returns 0 outside
// 0 <= k <= n so recurrence sums can use unconditional binomials.
Rational binomial(unsigned long n, long k);

// Falling factorial s(s-1)(s-2)...(s-n+1), with (s)_0 == 1.
Rational falling_factorial(const Rational& s, unsigned long n);

// Bernoulli number B_m under the B_1 = -1/2 convention, from the standard
// recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0 seeded with B_0 = 1.
Rational bernoulli(unsigned long m);

} // namespace asx
