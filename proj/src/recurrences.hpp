#pragma once

#include <functional>
#include <string>

#include "series.hpp"

namespace asx {

// The three relation kinds an expansion can be solved from:
//   difference: x_n/y_n - x_{n+1}/y_{n+1} = sum a_j / n^j   (a_0 = a_1 = 0)
//   product:    (x_n/y_n)(x_{n-1}/y_{n-1}) = sum a_j / n^j  (a_0 = 1)
//   ratio:      (x_n/y_n)/(x_{n-1}/y_{n-1}) = sum a_j / n^j (a_0 = 1, a_1 = 0)
enum class StreamKind { difference, product, ratio };

const char* kind_name(StreamKind kind);
StreamKind kind_from_name(const std::string& name);  // ParseError if unknown

// On-demand generator of the a-coefficients of a relation. The callable
// must be deterministic: repeated queries at the same index return the
// same value, which lets solvers cache whatever they fetch.
class CoeffStream {
public:
    CoeffStream(StreamKind kind, std::function<Rational(long)> at)
        : kind_(kind), at_(std::move(at)) {}

    StreamKind kind() const { return kind_; }
    Rational at(long k) const;  // k >= 0

private:
    StreamKind kind_;
    std::function<Rational(long)> at_;
};

// Sign convention applied inside the difference-form coupling sum.
// `canonical` is derived from the defining telescoping relation and is the
// one that reproduces the known Euler-constant expansion; `alternate`
// reproduces a misprinted published variant and exists purely as a
// regression guard (see ERRATA.md).
enum class DifferenceSign { canonical, alternate };

// Difference form: b_0 = 1 and, for 1 <= k <= order,
//   b_k = (1/k) ( a_{k+1} + sum_{j=1..k-1} (-1)^(j+k+1) C(k, j-1) b_j ).
// Queries the stream up to index order+1.
TruncatedSeries solve_difference(const CoeffStream& a, long order,
                                 DifferenceSign sign = DifferenceSign::canonical);

// Product form: b_0 = 1, b_1 = a_1/2 and, for k >= 2,
//   b_k = (1/2) ( a_k - sum_{i=1..k-1} b_{k-i} c_i
//                     - sum_{j=1..k-1} C(k-1, j-1) b_j ),
// where c is the backward shift of b, maintained triangularly.
TruncatedSeries solve_product(const CoeffStream& a, long order);

// Ratio form: b_0 = 1, b_1 = -a_2 and, for k >= 2,
//   b_k = -(1/k) ( sum_{j=0..k-1} c_j a_{k+1-j}
//                + sum_{j=1..k-1} C(k, j-1) b_j ).
// Queries the stream up to index order+1.
TruncatedSeries solve_ratio(const CoeffStream& a, long order);

// Coefficients s_k of (1 - 1/n^2)^n: s_0 = 1 and
//   s_k = -(1/k) sum_{j=1..floor((k+1)/2)} ((2j-1)/j) s_{k+1-2j}.
TruncatedSeries pow_one_minus_inv_square(long order);

// Difference-form tail around the externally supplied limit L:
//   x_n - L = sum_{k>=1} t_k / n^k
// with t_k equal to the solve_difference output for k >= 1 and a zero
// constant slot (the k >= 1 recurrence never references b_0).
TruncatedSeries additive_expansion(const CoeffStream& a, long order);

} // namespace asx
