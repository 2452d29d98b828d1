#include "series.hpp"

#include <sstream>

#include "errors.hpp"

namespace asx {

TruncatedSeries::TruncatedSeries(long order) {
    if (order < 0)
        throw DomainError("series: negative order");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational());
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw DomainError("series: a series needs at least the constant term");
}

const Rational& TruncatedSeries::coeff(long k) const {
    if (k < 0 || k > order())
        throw DomainError("series: coefficient index out of range");
    return coeffs_[static_cast<std::size_t>(k)];
}

void TruncatedSeries::set_coeff(long k, Rational v) {
    if (k < 0 || k > order())
        throw DomainError("series: coefficient index out of range");
    coeffs_[static_cast<std::size_t>(k)] = std::move(v);
}

namespace {
long min_order(const TruncatedSeries& x, const TruncatedSeries& y) {
    return x.order() < y.order() ? x.order() : y.order();
}
} // namespace

TruncatedSeries series_add(const TruncatedSeries& x, const TruncatedSeries& y) {
    TruncatedSeries r(min_order(x, y));
    for (long k = 0; k <= r.order(); ++k)
        r.set_coeff(k, x.coeff(k) + y.coeff(k));
    return r;
}

TruncatedSeries series_sub(const TruncatedSeries& x, const TruncatedSeries& y) {
    TruncatedSeries r(min_order(x, y));
    for (long k = 0; k <= r.order(); ++k)
        r.set_coeff(k, x.coeff(k) - y.coeff(k));
    return r;
}

TruncatedSeries series_mul(const TruncatedSeries& x, const TruncatedSeries& y) {
    TruncatedSeries r(min_order(x, y));
    for (long k = 0; k <= r.order(); ++k) {
        Rational acc;
        for (long j = 0; j <= k; ++j)
            acc = acc + x.coeff(j) * y.coeff(k - j);
        r.set_coeff(k, acc);
    }
    return r;
}

bool series_equal(const TruncatedSeries& x, const TruncatedSeries& y) {
    if (x.order() != y.order())
        throw DomainError("series: comparing series of different orders");
    for (long k = 0; k <= x.order(); ++k)
        if (x.coeff(k) != y.coeff(k))
            return false;
    return true;
}

TruncatedSeries truncated(const TruncatedSeries& f, long new_order) {
    if (new_order < 0 || new_order > f.order())
        throw DomainError("series: truncation order out of range");
    TruncatedSeries r(new_order);
    for (long k = 0; k <= new_order; ++k)
        r.set_coeff(k, f.coeff(k));
    return r;
}

Rational forward_shift_weight(long k, long j) {
    Rational w = binomial(static_cast<unsigned long>(k - 1), j - 1);
    return ((k - j) % 2 != 0) ? -w : w;
}

Rational backward_shift_weight(long k, long j) {
    return binomial(static_cast<unsigned long>(k - 1), j - 1);
}

TruncatedSeries shift_forward(const TruncatedSeries& f) {
    TruncatedSeries g(f.order());
    g.set_coeff(0, f.coeff(0));
    for (long k = 1; k <= f.order(); ++k) {
        Rational acc;
        for (long j = 1; j <= k; ++j)
            acc = acc + f.coeff(j) * forward_shift_weight(k, j);
        g.set_coeff(k, acc);
    }
    return g;
}

TruncatedSeries shift_backward(const TruncatedSeries& f) {
    TruncatedSeries g(f.order());
    g.set_coeff(0, f.coeff(0));
    for (long k = 1; k <= f.order(); ++k) {
        Rational acc;
        for (long j = 1; j <= k; ++j)
            acc = acc + f.coeff(j) * backward_shift_weight(k, j);
        g.set_coeff(k, acc);
    }
    return g;
}

TruncatedSeries binomial_series(const Rational& alpha, const Rational& c, long order) {
    if (order < 0)
        throw DomainError("series: negative order");
    TruncatedSeries r(order);
    Rational term(1);      // (alpha)_j / j! * (-c)^j, updated incrementally
    r.set_coeff(0, term);
    for (long j = 1; j <= order; ++j) {
        term = term * (alpha - Rational(j - 1)) / Rational(j) * (-c);
        r.set_coeff(j, term);
    }
    return r;
}

BigFloat evaluate(const TruncatedSeries& f, long n, long digits) {
    if (n < 1)
        throw DomainError("series: evaluation point must be a positive integer");
    if (digits < BigFloat::min_digits)
        throw DomainError("series: precision must be at least 10 decimal digits");
    const Rational at(n);
    Rational acc = f.coeff(f.order());
    for (long k = f.order() - 1; k >= 0; --k)
        acc = f.coeff(k) + acc / at;
    return BigFloat::from_rational(acc, digits);
}

std::string to_text(const TruncatedSeries& f) {
    std::ostringstream out;
    out << "order " << f.order() << "\n";
    for (long k = 0; k <= f.order(); ++k)
        out << f.coeff(k).to_string() << "\n";
    return out.str();
}

TruncatedSeries series_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    long lineno = 0;

    auto next_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            std::size_t b = line.find_first_not_of(" \t");
            if (b == std::string::npos)
                continue;  // skip blank lines
            std::size_t e = line.find_last_not_of(" \t");
            out = line.substr(b, e - b + 1);
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_line(header) || header.rfind("order ", 0) != 0)
        throw ParseError("series text: expected 'order m' on the first line");
    long order = 0;
    try {
        std::size_t pos = 0;
        order = std::stol(header.substr(6), &pos);
        if (pos != header.size() - 6)
            throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw ParseError("series text: invalid order in '" + header + "'");
    }
    if (order < 0)
        throw ParseError("series text: negative order");

    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(order) + 1);
    std::string tok;
    while (static_cast<long>(coeffs.size()) <= order) {
        if (!next_line(tok))
            throw ParseError("series text: expected " + std::to_string(order + 1) +
                             " coefficients, got " + std::to_string(coeffs.size()));
        try {
            coeffs.push_back(Rational::from_string(tok));
        } catch (const ParseError& e) {
            throw ParseError("series text: line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (next_line(tok))
        throw ParseError("series text: line " + std::to_string(lineno) +
                         ": trailing content after the last coefficient");
    return TruncatedSeries(std::move(coeffs));
}

} // namespace asx
