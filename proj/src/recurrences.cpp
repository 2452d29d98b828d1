#include "recurrences.hpp"

#include <vector>

#include "errors.hpp"

namespace asx {

const char* kind_name(StreamKind kind) {
    switch (kind) {
        case StreamKind::difference: return "difference";
        case StreamKind::product: return "product";
        case StreamKind::ratio: return "ratio";
    }
    throw DomainError("stream: unknown kind");
}

StreamKind kind_from_name(const std::string& name) {
    if (name == "difference") return StreamKind::difference;
    if (name == "product") return StreamKind::product;
    if (name == "ratio") return StreamKind::ratio;
    throw ParseError("stream: unknown kind '" + name + "' (expected difference, product or ratio)");
}

Rational CoeffStream::at(long k) const {
    if (k < 0)
        throw DomainError("stream: negative coefficient index");
    return at_(k);
}

namespace {

// Fetch a_0..a_max once; the determinism contract makes this caching
// observationally pure.
std::vector<Rational> fetch(const CoeffStream& a, long max_index) {
    std::vector<Rational> av;
    av.reserve(static_cast<std::size_t>(max_index) + 1);
    for (long k = 0; k <= max_index; ++k)
        av.push_back(a.at(k));
    return av;
}

void require_kind(const CoeffStream& a, StreamKind expected) {
    if (a.kind() != expected)
        throw DomainError(std::string("solver: stream kind mismatch, expected ") +
                          kind_name(expected) + ", got " + kind_name(a.kind()));
}

void require_order(long order) {
    if (order < 0)
        throw DomainError("solver: negative order");
}

} // namespace

TruncatedSeries solve_difference(const CoeffStream& a, long order, DifferenceSign sign) {
    require_kind(a, StreamKind::difference);
    require_order(order);
    const std::vector<Rational> av = fetch(a, order + 1);
    if (!av[0].is_zero() || !av[1].is_zero())
        throw NormalizationError("difference stream requires a_0 = a_1 = 0, got a_0 = " +
                                 av[0].to_string() + ", a_1 = " + av[1].to_string());

    TruncatedSeries b(order);
    b.set_coeff(0, Rational(1));
    for (long k = 1; k <= order; ++k) {
        Rational acc = av[static_cast<std::size_t>(k) + 1];
        for (long j = 1; j <= k - 1; ++j) {
            Rational term = binomial(static_cast<unsigned long>(k), j - 1) * b.coeff(j);
            const bool negate = (sign == DifferenceSign::canonical) ? ((j + k + 1) % 2 != 0)
                                                                    : ((j + k) % 2 != 0);
            acc = negate ? acc - term : acc + term;
        }
        b.set_coeff(k, acc / Rational(k));
    }
    return b;
}

TruncatedSeries solve_product(const CoeffStream& a, long order) {
    require_kind(a, StreamKind::product);
    require_order(order);
    const std::vector<Rational> av = fetch(a, order);
    if (av[0] != Rational(1))
        throw NormalizationError("product stream requires a_0 = 1, got a_0 = " + av[0].to_string());

    TruncatedSeries b(order);
    b.set_coeff(0, Rational(1));
    if (order >= 1)
        b.set_coeff(1, av[1] / Rational(2));

    // c_i = sum_{j=1..i} C(i-1, j-1) b_j, filled as soon as b_i is known.
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    c[0] = Rational(1);
    for (long k = 2; k <= order; ++k) {
        Rational ck;
        for (long j = 1; j <= k - 1; ++j)
            ck = ck + backward_shift_weight(k - 1, j) * b.coeff(j);
        c[static_cast<std::size_t>(k) - 1] = ck;

        Rational acc = av[static_cast<std::size_t>(k)];
        for (long i = 1; i <= k - 1; ++i)
            acc = acc - b.coeff(k - i) * c[static_cast<std::size_t>(i)];
        for (long j = 1; j <= k - 1; ++j)
            acc = acc - backward_shift_weight(k, j) * b.coeff(j);
        b.set_coeff(k, acc / Rational(2));
    }
    return b;
}

TruncatedSeries solve_ratio(const CoeffStream& a, long order) {
    require_kind(a, StreamKind::ratio);
    require_order(order);
    const std::vector<Rational> av = fetch(a, order + 1);
    if (av[0] != Rational(1) || !av[1].is_zero())
        throw NormalizationError("ratio stream requires a_0 = 1 and a_1 = 0, got a_0 = " +
                                 av[0].to_string() + ", a_1 = " + av[1].to_string());

    TruncatedSeries b(order);
    b.set_coeff(0, Rational(1));
    if (order >= 1)
        b.set_coeff(1, -av[2]);

    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    c[0] = Rational(1);
    for (long k = 2; k <= order; ++k) {
        Rational ck;
        for (long j = 1; j <= k - 1; ++j)
            ck = ck + backward_shift_weight(k - 1, j) * b.coeff(j);
        c[static_cast<std::size_t>(k) - 1] = ck;

        Rational acc;
        for (long j = 0; j <= k - 1; ++j)
            acc = acc + c[static_cast<std::size_t>(j)] * av[static_cast<std::size_t>(k) + 1 - j];
        for (long j = 1; j <= k - 1; ++j)
            acc = acc + binomial(static_cast<unsigned long>(k), j - 1) * b.coeff(j);
        b.set_coeff(k, -(acc / Rational(k)));
    }
    return b;
}

TruncatedSeries pow_one_minus_inv_square(long order) {
    require_order(order);
    TruncatedSeries s(order);
    s.set_coeff(0, Rational(1));
    for (long k = 1; k <= order; ++k) {
        Rational acc;
        for (long j = 1; j <= (k + 1) / 2; ++j)
            acc = acc + Rational(2 * j - 1, j) * s.coeff(k + 1 - 2 * j);
        s.set_coeff(k, -(acc / Rational(k)));
    }
    return s;
}

TruncatedSeries additive_expansion(const CoeffStream& a, long order) {
    TruncatedSeries t = solve_difference(a, order);
    t.set_coeff(0, Rational());
    return t;
}

} // namespace asx
