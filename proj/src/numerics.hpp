#pragma once

#include <string>
#include <vector>

#include "catalog.hpp"

namespace asx {

struct ErrorRow {
    long n;
    long k;
    BigFloat estimate;
    BigFloat exact;
    BigFloat abs_error;
};

// Verification table for one sequence: rows sorted by (n, k), the exact
// column identical across rows that share n.
struct ErrorTable {
    std::string sequence;
    long digits = 0;
    std::vector<ErrorRow> rows;
};

// Value of a named limit constant at the requested precision.
BigFloat limit_value(LimitConstant limit, long digits);

// Truncated estimate of x_n from the first k+1 expansion coefficients:
//   multiplicative kinds:  y_n * sum_{j=0..k} b_j n^-j
//   additive (difference): L + sum_{j=1..k} t_j n^-j
// The coefficient sum is evaluated exactly and rounded once.
BigFloat estimate(const SequenceSpec& spec, const TruncatedSeries& b, long n, long k, long digits);

// Exact sequence value; CapabilityError on expansion-only entries.
BigFloat exact_value(const SequenceSpec& spec, long n, long digits);

ErrorTable error_table(const SequenceSpec& spec, const TruncatedSeries& b,
                       const std::vector<long>& n_values, const std::vector<long>& k_values,
                       long digits);

// Empirical convergence exponent log2(err(n0) / err(2 n0)) where err is
// the k-truncation error, relative (scaled by y_n) for multiplicative
// kinds and absolute for additive ones. Approximates the index of the
// first omitted nonzero coefficient. Throws DegenerateError when the error
// vanishes identically and PrecisionError below the precision floor.
double convergence_order(const SequenceSpec& spec, const TruncatedSeries& b, long k, long n0,
                         long digits);

// Renderers. Plain mode display-rounds to 9 decimal places (half-even);
// csv and json carry the full working precision.
std::string render_plain(const ErrorTable& table);
std::string render_csv(const ErrorTable& table);
std::string render_json(const ErrorTable& table);
std::string render(const ErrorTable& table, const std::string& format);

struct VerifyReport {
    bool passed = true;
    std::string text;
};

// Runs the whole check battery for one sequence: reference coefficients,
// the defining-relation closure, the Bernoulli identity for the Euler
// entry, error-monotonicity and published-value reproduction at the given
// n values, and convergence-exponent measurements.
VerifyReport verify_sequence(const SequenceSpec& spec, long order, std::vector<long> n_values,
                             long digits);

} // namespace asx
