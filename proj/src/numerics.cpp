#include "numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"

namespace asx {

BigFloat limit_value(LimitConstant limit, long digits) {
    switch (limit) {
        case LimitConstant::gamma: return BigFloat::euler_gamma(digits);
        case LimitConstant::e: return BigFloat::e(digits);
        case LimitConstant::none: break;
    }
    throw CapabilityError("sequence has no named limit constant");
}

namespace {

// Exact rational sum of the first k+1 terms at integer n.
Rational horner_prefix(const TruncatedSeries& b, long k, long n) {
    const Rational at(n);
    Rational acc = b.coeff(k);
    for (long j = k - 1; j >= 0; --j)
        acc = b.coeff(j) + acc / at;
    return acc;
}

} // namespace

BigFloat estimate(const SequenceSpec& spec, const TruncatedSeries& b, long n, long k, long digits) {
    if (n < 1)
        throw DomainError("estimate: n must be a positive integer");
    if (k < 0 || k > b.order())
        throw DomainError("estimate: truncation index " + std::to_string(k) +
                          " outside 0.." + std::to_string(b.order()));
    if (digits < BigFloat::min_digits)
        throw DomainError("estimate: precision must be at least 10 decimal digits");

    const long w = digits + 10;
    const BigFloat tail = BigFloat::from_rational(horner_prefix(b, k, n), w);
    if (spec.additive())
        return (limit_value(spec.limit, w) + tail).round_to(digits);
    if (!spec.eval_y)
        throw CapabilityError("expansion-only sequence: no normalizer evaluator");
    return (spec.eval_y(n, w) * tail).round_to(digits);
}

BigFloat exact_value(const SequenceSpec& spec, long n, long digits) {
    if (!spec.has_exact())
        throw CapabilityError("expansion-only sequence: no exact evaluator for x_n");
    return spec.eval_x(n, digits);
}

ErrorTable error_table(const SequenceSpec& spec, const TruncatedSeries& b,
                       const std::vector<long>& n_values, const std::vector<long>& k_values,
                       long digits) {
    if (!spec.has_exact())
        throw CapabilityError("expansion-only sequence: error tables need the exact evaluator");

    std::vector<long> ns = n_values;
    std::vector<long> ks = k_values;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

    ErrorTable table{spec.name, digits, {}};
    for (long n : ns) {
        const BigFloat exact = exact_value(spec, n, digits);
        for (long k : ks) {
            BigFloat est = estimate(spec, b, n, k, digits);
            BigFloat err = (exact - est).abs();
            table.rows.push_back(ErrorRow{n, k, std::move(est), exact, std::move(err)});
        }
    }
    return table;
}

double convergence_order(const SequenceSpec& spec, const TruncatedSeries& b, long k, long n0,
                         long digits) {
    if (n0 < 1)
        throw DomainError("convergence_order: n0 must be a positive integer");

    auto truncation_error = [&](long n) {
        const BigFloat exact = exact_value(spec, n, digits);
        const BigFloat est = estimate(spec, b, n, k, digits);
        BigFloat err = (exact - est).abs();
        if (!spec.additive())
            err = err / spec.eval_y(n, digits);
        return err;
    };

    const BigFloat e1 = truncation_error(n0);
    const BigFloat e2 = truncation_error(2 * n0);
    if (e1.is_zero() && e2.is_zero())
        throw DegenerateError("convergence_order: truncation error vanishes identically");

    // Below this everything is rounding noise of the working precision.
    const BigFloat floor = BigFloat::from_string("1e-" + std::to_string(digits - 4), digits);
    if (e1.cmp(floor) < 0 || e2.cmp(floor) < 0)
        throw PrecisionError("convergence_order: truncation error is at the precision floor; "
                             "increase the working precision");

    return (e1 / e2).log2().to_double();
}

std::string render_plain(const ErrorTable& table) {
    std::ostringstream out;
    out << "sequence: " << table.sequence << "  (precision " << table.digits << ")\n";

    std::vector<std::array<std::string, 5>> cells;
    cells.push_back({"n", "k", "estimate", "exact", "abs_error"});
    for (const ErrorRow& row : table.rows) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.3e", row.abs_error.to_double());
        cells.push_back({std::to_string(row.n), std::to_string(row.k), row.estimate.to_fixed(9),
                         row.exact.to_fixed(9), std::string(buf)});
    }

    std::array<std::size_t, 5> width{};
    for (const auto& row : cells)
        for (std::size_t c = 0; c < 5; ++c)
            width[c] = std::max(width[c], row[c].size());
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < 5; ++c) {
            out << row[c];
            if (c + 1 < 5)
                out << std::string(width[c] - row[c].size() + 2, ' ');
        }
        out << "\n";
    }
    return out.str();
}

std::string render_csv(const ErrorTable& table) {
    std::ostringstream out;
    out << "n,k,estimate,exact,abs_error\n";
    for (const ErrorRow& row : table.rows)
        out << row.n << "," << row.k << "," << row.estimate.to_sci() << "," << row.exact.to_sci()
            << "," << row.abs_error.to_sci() << "\n";
    return out.str();
}

std::string render_json(const ErrorTable& table) {
    nlohmann::json doc;
    doc["sequence"] = table.sequence;
    doc["precision"] = table.digits;
    doc["rows"] = nlohmann::json::array();
    for (const ErrorRow& row : table.rows) {
        doc["rows"].push_back({{"n", row.n},
                               {"k", row.k},
                               {"estimate", row.estimate.to_sci()},
                               {"exact", row.exact.to_sci()},
                               {"abs_error", row.abs_error.to_sci()}});
    }
    return doc.dump(2) + "\n";
}

std::string render(const ErrorTable& table, const std::string& format) {
    if (format == "plain") return render_plain(table);
    if (format == "csv") return render_csv(table);
    if (format == "json") return render_json(table);
    throw ParseError("unknown table format '" + format + "' (expected plain, csv or json)");
}

namespace {

// First index > k with a nonzero coefficient, or -1 when the series tail
// vanishes: the exponent a correct expansion should exhibit at cutoff k.
long next_nonzero_index(const TruncatedSeries& b, long k) {
    for (long j = k + 1; j <= b.order(); ++j)
        if (!b.coeff(j).is_zero())
            return j;
    return -1;
}

class ReportBuilder {
public:
    explicit ReportBuilder(std::string header) { out_ << header << "\n"; }

    void check(bool ok, const std::string& what) {
        out_ << (ok ? "  ok    " : "  FAIL  ") << what << "\n";
        passed_ = passed_ && ok;
    }
    void note(const std::string& what) { out_ << "  note  " << what << "\n"; }

    VerifyReport finish() {
        out_ << "result: " << (passed_ ? "PASS" : "FAIL") << "\n";
        return VerifyReport{passed_, out_.str()};
    }

private:
    std::ostringstream out_;
    bool passed_ = true;
};

} // namespace

VerifyReport verify_sequence(const SequenceSpec& spec, long order, std::vector<long> n_values,
                             long digits) {
    if (!spec.has_exact())
        throw CapabilityError("expansion-only sequence: nothing to verify against");
    if (order < 1)
        throw DomainError("verify: order must be at least 1");

    std::ostringstream header;
    header << "verify " << spec.name << " (" << kind_name(spec.kind) << "), order " << order
           << ", precision " << digits;
    ReportBuilder report(header.str());

    const TruncatedSeries b = expansion_for(spec, order);

    // Known coefficients must be reproduced exactly.
    for (const ReferenceCoeff& ref : spec.reference_coeffs) {
        if (ref.index > order)
            continue;
        const bool ok = b.coeff(ref.index) == ref.value;
        report.check(ok, "coefficient b_" + std::to_string(ref.index) + " = " +
                             ref.value.to_string() + " (" + ref.note + ")" +
                             (ok ? "" : ", got " + b.coeff(ref.index).to_string()));
    }

    // Re-substitute the solved coefficients into the defining relation.
    {
        TruncatedSeries a_series(order);
        for (long j = 0; j <= order; ++j)
            a_series.set_coeff(j, spec.a_stream.at(j));
        bool closure = false;
        switch (spec.kind) {
            case StreamKind::difference: {
                TruncatedSeries full = solve_difference(spec.a_stream, order);
                closure = series_equal(series_sub(full, shift_forward(full)), a_series);
                break;
            }
            case StreamKind::product:
                closure = series_equal(series_mul(b, shift_backward(b)), a_series);
                break;
            case StreamKind::ratio:
                closure = series_equal(series_mul(shift_backward(b), a_series), b);
                break;
        }
        report.check(closure, "defining-relation closure holds exactly to order " +
                                  std::to_string(order));
    }

    // Euler only: the expansion encodes the Bernoulli numbers.
    if (spec.limit == LimitConstant::gamma && spec.kind == StreamKind::difference) {
        bool ok = true;
        for (long j = 2; j <= order; ++j)
            ok = ok && (Rational(-j) * b.coeff(j) == bernoulli(static_cast<unsigned long>(j)));
        report.check(ok, "Bernoulli identity -j*b_j = B_j for j = 2.." + std::to_string(order));
    }

    // Numeric reproduction at the requested n values.
    if (n_values.empty()) {
        for (const ReferenceValue& ref : spec.reference_values)
            n_values.push_back(ref.n);
        if (n_values.empty())
            n_values.push_back(100);
    }
    std::sort(n_values.begin(), n_values.end());
    n_values.erase(std::unique(n_values.begin(), n_values.end()), n_values.end());

    for (long n : n_values) {
        const BigFloat exact = exact_value(spec, n, digits);

        // Truncation error shrinks as more terms are kept; adding a zero
        // coefficient reproduces the same estimate bit for bit.
        bool monotone = true;
        BigFloat prev = (exact - estimate(spec, b, n, 0, digits)).abs();
        const BigFloat tiny = BigFloat::from_string("1e-" + std::to_string(digits - 4), digits);
        for (long k = 1; k <= order; ++k) {
            const BigFloat cur = (exact - estimate(spec, b, n, k, digits)).abs();
            if (prev.cmp(tiny) < 0 || cur.cmp(tiny) < 0)
                break;  // at the precision floor, ordering is noise
            monotone = monotone && (b.coeff(k).is_zero() ? cur.cmp(prev) == 0 : cur.cmp(prev) < 0);
            prev = cur;
        }
        report.check(monotone,
                     "n=" + std::to_string(n) + ": truncation error decreases through k = 0.." +
                         std::to_string(order));

        for (const ReferenceValue& ref : spec.reference_values) {
            if (ref.n != n || ref.k > order)
                continue;
            const BigFloat expected = BigFloat::from_string(ref.printed, digits);
            const BigFloat tol = BigFloat::from_string(ref.tolerance, digits);
            const BigFloat got = (ref.k < 0) ? exact : estimate(spec, b, n, ref.k, digits);
            const bool ok = (got - expected).abs().cmp(tol) <= 0;
            const std::string label =
                (ref.k < 0) ? "exact value x_" + std::to_string(n)
                            : "estimate (n=" + std::to_string(n) + ", k=" + std::to_string(ref.k) + ")";
            report.check(ok, label + " matches published " + ref.printed + " within " +
                                 ref.tolerance + (ok ? "" : ", got " + got.to_fixed(9)));
        }
    }

    // Convergence exponents at small cutoffs; n0 = 100 with at least 60
    // digits keeps the measurements far from the precision floor.
    const long conv_digits = std::max(digits, 60L);
    for (long k = 1; k <= std::min(3L, order - 1); ++k) {
        const long expected = next_nonzero_index(b, k);
        if (expected < 0) {
            report.note("convergence at k=" + std::to_string(k) +
                        " skipped: remaining coefficients vanish");
            continue;
        }
        try {
            const double measured = convergence_order(spec, b, k, 100, conv_digits);
            const bool ok = std::abs(measured - static_cast<double>(expected)) <= 0.35;
            char buf[96];
            std::snprintf(buf, sizeof(buf), "convergence at k=%ld: measured %.3f (expected %ld)",
                          k, measured, expected);
            report.check(ok, buf);
        } catch (const PrecisionError&) {
            report.note("convergence at k=" + std::to_string(k) +
                        " skipped: precision floor reached");
        }
    }

    return report.finish();
}

} // namespace asx
