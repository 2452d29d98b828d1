#pragma once

#include <functional>
#include <string>
#include <vector>

#include "recurrences.hpp"

namespace asx {

// Named limit constant of a difference-form (additive) sequence, or the
// constant prefactor of a multiplicative one. Only these two transcendental
// constants appear in the catalog; they come from the arbitrary-precision
// layer, never from this library's own expansions.
enum class LimitConstant { none, gamma, e };

struct ReferenceCoeff {
    long index;
    Rational value;
    std::string note;
};

// A known decimal reference for the truncated estimate at (n, k);
// k == -1 marks the exact sequence value x_n itself.
struct ReferenceValue {
    long n;
    long k;
    std::string printed;    // published decimal string
    std::string tolerance;  // absolute comparison tolerance, decimal string
};

// A catalog entry: relation kind, exact a-coefficient stream, exact
// evaluators for x_n and the normalizer y_n, and known reference data.
// Entries are immutable once built; evaluators are pure.
struct SequenceSpec {
    std::string name;
    StreamKind kind;
    CoeffStream a_stream;
    std::function<BigFloat(long n, long digits)> eval_x;  // empty: expansion-only
    std::function<BigFloat(long n, long digits)> eval_y;
    LimitConstant limit = LimitConstant::none;
    std::vector<ReferenceCoeff> reference_coeffs;
    std::vector<ReferenceValue> reference_values;
    long max_coeff_index = -1;   // largest queryable a-index; -1 = unbounded
    long declared_order = -1;    // order stated in a sequence file; -1 builtin

    bool has_exact() const { return static_cast<bool>(eval_x); }
    // Difference-form sequences expand additively around their limit.
    bool additive() const { return kind == StreamKind::difference; }
};

// x_n = H_n - ln n, limit gamma; a_k = (-1)^k (k-1)/k for k >= 2.
SequenceSpec euler_spec();

// Wallis cosine integral I_n = (1/pi) Int_{-pi/2}^{pi/2} cos^n t dt with
// y_n = sqrt(2/(pi n)); exact values via n I_n I_{n-1} = 2/pi from I_0 = 1.
SequenceSpec wallis_spec();

// x_n = (1 + 1/n)^n with y_n = e; a-coefficients are the partial sums of
// the (1 - 1/n^2)^n expansion.
SequenceSpec napier_spec();

// J_n = Int_0^inf (1 + t^2)^{-n} dt with y_n = (1/2) sqrt(pi/n); exact
// values via J_n = (2n-3)/(2n-2) J_{n-1} from J_1 = pi/2.
SequenceSpec beta_integral_spec();

// Expansion-only entry backed by an explicit list a_0..a_{len-1}. Checks
// the kind's normalization eagerly; queries past the end of the list throw
// ParseError naming the required index.
SequenceSpec custom_spec(StreamKind kind, std::vector<Rational> coeffs);

// Plain-text custom sequence format:
//   kind: difference|product|ratio
//   order: m
//   a_0            (one rational per line; difference and ratio kinds need
//   ...             m+2 values because the solvers read a_{m+1}; product
//   a_last          needs m+1; extra lines extend the usable range)
SequenceSpec spec_from_text(const std::string& text, const std::string& origin = "input");
SequenceSpec spec_from_file(const std::string& path);

const std::vector<std::string>& builtin_names();     // sorted by name
SequenceSpec builtin_spec(const std::string& name);  // ParseError if unknown

// Dispatches the right solver for the entry's kind: additive_expansion for
// difference-form entries, solve_product / solve_ratio otherwise.
TruncatedSeries expansion_for(const SequenceSpec& spec, long order);

} // namespace asx
