#include "bigfloat.hpp"

#include <cmath>

#include "errors.hpp"

namespace asx {

mpfr_prec_t BigFloat::bits_for(long digits) {
    // log2(10) per decimal digit plus headroom so the last kept decimal
    // digit is never contaminated by the binary representation.
    return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits) * 3.321928094887362)) + 16;
}

BigFloat::BigFloat(long digits) : digits_(digits) {
    if (digits < min_digits)
        throw DomainError("bigfloat: precision must be at least 10 decimal digits");
    mpfr_init2(f_, bits_for(digits));
    mpfr_set_zero(f_, 1);
}

BigFloat::BigFloat(const BigFloat& o) : digits_(o.digits_) {
    mpfr_init2(f_, mpfr_get_prec(o.f_));
    mpfr_set(f_, o.f_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept : digits_(o.digits_) {
    mpfr_init2(f_, mpfr_get_prec(o.f_));
    mpfr_swap(f_, o.f_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(f_, mpfr_get_prec(o.f_));
        mpfr_set(f_, o.f_, MPFR_RNDN);
        digits_ = o.digits_;
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    mpfr_swap(f_, o.f_);
    std::swap(digits_, o.digits_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(f_); }

BigFloat BigFloat::from_long(long v, long digits) {
    BigFloat r(digits);
    mpfr_set_si(r.f_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_rational(const Rational& q, long digits) {
    BigFloat r(digits);
    mpfr_set_q(r.f_, q.raw(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_string(const std::string& text, long digits) {
    BigFloat r(digits);
    if (text.empty() || mpfr_set_str(r.f_, text.c_str(), 10, MPFR_RNDN) != 0)
        throw ParseError("bigfloat: invalid decimal literal '" + text + "'");
    return r;
}

BigFloat BigFloat::pi(long digits) {
    BigFloat r(digits);
    mpfr_const_pi(r.f_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::e(long digits) {
    BigFloat r(digits);
    mpfr_set_si(r.f_, 1, MPFR_RNDN);
    mpfr_exp(r.f_, r.f_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::euler_gamma(long digits) {
    BigFloat r(digits);
    mpfr_const_euler(r.f_, MPFR_RNDN);
    return r;
}

namespace {
long result_digits(const BigFloat& a, const BigFloat& b) {
    return a.digits() > b.digits() ? a.digits() : b.digits();
}
} // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(result_digits(a, b));
    mpfr_add(r.f_, a.f_, b.f_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(result_digits(a, b));
    mpfr_sub(r.f_, a.f_, b.f_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(result_digits(a, b));
    mpfr_mul(r.f_, a.f_, b.f_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    if (b.is_zero())
        throw DomainError("bigfloat: division by zero");
    BigFloat r(result_digits(a, b));
    mpfr_div(r.f_, a.f_, b.f_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(digits_);
    mpfr_neg(r.f_, f_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(digits_);
    mpfr_abs(r.f_, f_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sqrt() const {
    if (sgn() < 0)
        throw DomainError("bigfloat: sqrt of a negative value");
    BigFloat r(digits_);
    mpfr_sqrt(r.f_, f_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::log() const {
    if (sgn() <= 0)
        throw DomainError("bigfloat: log of a non-positive value");
    BigFloat r(digits_);
    mpfr_log(r.f_, f_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::log2() const {
    if (sgn() <= 0)
        throw DomainError("bigfloat: log2 of a non-positive value");
    BigFloat r(digits_);
    mpfr_log2(r.f_, f_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow_ui(unsigned long e) const {
    BigFloat r(digits_);
    mpfr_pow_ui(r.f_, f_, e, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::round_to(long digits) const {
    BigFloat r(digits);
    mpfr_set(r.f_, f_, MPFR_RNDN);
    return r;
}

std::string BigFloat::to_fixed(long decimals) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*R*f", static_cast<int>(decimals), MPFR_RNDN, f_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

std::string BigFloat::to_sci() const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*R*e", static_cast<int>(digits_ - 1), MPFR_RNDN, f_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

} // namespace asx
