#include "rational.hpp"

#include <cctype>
#include <cstring>
#include <vector>

#include "errors.hpp"

namespace asx {

Rational::Rational(long num, long den) {
    mpq_init(q_);
    if (den == 0)
        throw DomainError("rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    mpq_set_si(q_, num, static_cast<unsigned long>(den));
    mpq_canonicalize(q_);
}

Rational Rational::from_string(const std::string& text) {
    // Grammar: [+-]? digits ( "/" digits )?   with a nonzero denominator.
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    const std::string s = text.substr(b, e - b);
    if (s.empty())
        throw ParseError("rational: empty string");

    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') ++i;
    std::size_t num_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == num_begin)
        throw ParseError("rational: invalid syntax '" + s + "'");
    std::string den;
    if (i < s.size()) {
        if (s[i] != '/')
            throw ParseError("rational: invalid syntax '" + s + "'");
        ++i;
        std::size_t den_begin = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == den_begin || i != s.size())
            throw ParseError("rational: invalid syntax '" + s + "'");
        den = s.substr(den_begin);
    }

    Rational r;
    std::string canonical = (s[0] == '+') ? s.substr(1) : s;
    if (mpq_set_str(r.q_, canonical.c_str(), 10) != 0)
        throw ParseError("rational: invalid syntax '" + s + "'");
    if (!den.empty() && mpz_sgn(mpq_denref(r.q_)) == 0)
        throw ParseError("rational: zero denominator in '" + s + "'");
    mpq_canonicalize(r.q_);
    return r;
}

std::string Rational::to_string() const {
    char* s = mpq_get_str(nullptr, 10, q_);
    std::string out(s);
    void (*freefunc)(void*, size_t) = nullptr;
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(s, std::strlen(s) + 1);
    return out;
}

Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    mpq_add(r.q_, a.q_, b.q_);
    return r;
}

Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    mpq_sub(r.q_, a.q_, b.q_);
    return r;
}

Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    mpq_mul(r.q_, a.q_, b.q_);
    return r;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero())
        throw DomainError("rational: division by zero");
    Rational r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
}

Rational Rational::operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
}

Rational binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n)
        return Rational();
    Rational r;
    mpz_bin_uiui(mpq_numref(r.q_), n, static_cast<unsigned long>(k));
    return r;
}

Rational falling_factorial(const Rational& s, unsigned long n) {
    Rational r(1);
    for (unsigned long i = 0; i < n; ++i)
        r = r * (s - Rational(static_cast<long>(i)));
    return r;
}

Rational bernoulli(unsigned long m) {
    std::vector<Rational> b(m + 1);
    b[0] = Rational(1);
    for (unsigned long i = 1; i <= m; ++i) {
        Rational acc;
        for (unsigned long j = 0; j < i; ++j)
            acc = acc + binomial(i + 1, static_cast<long>(j)) * b[j];
        b[i] = -(acc / Rational(static_cast<long>(i) + 1));
    }
    return b[m];
}

} // namespace asx
