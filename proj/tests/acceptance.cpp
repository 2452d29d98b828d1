// Acceptance suite: end-to-end checks of the expansion engine against its
// published reference values and its own defining relations, one pass/fail
// line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "errors.hpp"
#include "numerics.hpp"

using asx::BigFloat;
using asx::CoeffStream;
using asx::Rational;
using asx::SequenceSpec;
using asx::StreamKind;
using asx::TruncatedSeries;

namespace {

struct CheckFailure {
    std::string message;
};

void require(bool ok, const std::string& what) {
    if (!ok)
        throw CheckFailure{what};
}

void require_coeff(const TruncatedSeries& b, long k, const Rational& expected) {
    require(b.coeff(k) == expected, "coefficient " + std::to_string(k) + ": expected " +
                                        expected.to_string() + ", got " + b.coeff(k).to_string());
}

bool near(const BigFloat& value, const char* literal, const char* tol, long digits = 60) {
    return (value - BigFloat::from_string(literal, digits)).abs()
               .cmp(BigFloat::from_string(tol, digits)) <= 0;
}

std::mt19937_64 rng(0xace5'eed1);

Rational random_rational(long max_abs) {
    std::uniform_int_distribution<long> num(-max_abs, max_abs);
    std::uniform_int_distribution<long> den(1, max_abs);
    return Rational(num(rng), den(rng));
}

CoeffStream random_stream(StreamKind kind, long max_index) {
    auto values = std::make_shared<std::vector<Rational>>();
    for (long k = 0; k <= max_index; ++k)
        values->push_back(random_rational(100));
    (*values)[0] = (kind == StreamKind::difference) ? Rational(0) : Rational(1);
    if (kind != StreamKind::product)
        (*values)[1] = Rational(0);
    return CoeffStream(kind, [values](long k) { return values->at(static_cast<std::size_t>(k)); });
}

TruncatedSeries a_series_of(const CoeffStream& a, long order) {
    TruncatedSeries s(order);
    for (long k = 0; k <= order; ++k)
        s.set_coeff(k, a.at(k));
    return s;
}

TruncatedSeries random_series(long order) {
    TruncatedSeries f(order);
    for (long k = 0; k <= order; ++k)
        f.set_coeff(k, random_rational(1000));
    return f;
}

// --- criteria ---------------------------------------------------------------

void criterion_euler_coefficients() {
    TruncatedSeries b = asx::solve_difference(asx::euler_spec().a_stream, 10);
    require_coeff(b, 1, Rational(1, 2));
    require_coeff(b, 2, Rational(-1, 12));
    require_coeff(b, 3, Rational(0));
    require_coeff(b, 4, Rational(1, 120));
    require_coeff(b, 6, Rational(-1, 252));
    require_coeff(b, 8, Rational(1, 240));
    require_coeff(b, 10, Rational(-1, 132));
}

void criterion_bernoulli_identity() {
    TruncatedSeries b = asx::solve_difference(asx::euler_spec().a_stream, 20);
    for (long j = 2; j <= 20; ++j)
        require(Rational(-j) * b.coeff(j) == asx::bernoulli(static_cast<unsigned long>(j)),
                "-j b_j != B_j at j = " + std::to_string(j));
    for (long k = 1; k <= 9; ++k)
        require(b.coeff(2 * k + 1).is_zero(),
                "b_" + std::to_string(2 * k + 1) + " expected to vanish");
}

void criterion_wallis_coefficients() {
    TruncatedSeries b = asx::solve_product(asx::wallis_spec().a_stream, 5);
    require_coeff(b, 0, Rational(1));
    require_coeff(b, 1, Rational(-1, 4));
    require_coeff(b, 2, Rational(1, 32));
    require_coeff(b, 3, Rational(5, 128));
    require_coeff(b, 4, Rational(-21, 2048));
    require_coeff(b, 5, Rational(-399, 8192));
}

void criterion_wallis_table() {
    const long digits = 40;
    SequenceSpec spec = asx::wallis_spec();
    TruncatedSeries b = asx::expansion_for(spec, 5);
    require(near(asx::exact_value(spec, 11, digits), "0.235172672", "5e-10"),
            "I_11 mismatch");
    const char* printed[] = {"0.235103718", "0.235165849", "0.235172910", "0.235172741",
                             "0.235172669"};
    for (long k = 1; k <= 5; ++k)
        require(near(asx::estimate(spec, b, 11, k, digits), printed[k - 1], "5e-10"),
                "I_{11," + std::to_string(k) + "} mismatch");
}

void criterion_napier_coefficients() {
    TruncatedSeries b = asx::solve_ratio(asx::napier_spec().a_stream, 6);
    require_coeff(b, 0, Rational(1));
    require_coeff(b, 1, Rational(-1, 2));
    require_coeff(b, 2, Rational(11, 24));
    require_coeff(b, 3, Rational(-7, 16));
    require_coeff(b, 4, Rational(2447, 5760));
    require_coeff(b, 5, Rational(-959, 2304));
    require_coeff(b, 6, Rational(238043, 580608));
}

void criterion_beta_fourth_coefficient() {
    SequenceSpec spec = asx::beta_integral_spec();
    TruncatedSeries b = asx::solve_ratio(spec.a_stream, 4);
    require_coeff(b, 1, Rational(3, 8));
    require_coeff(b, 2, Rational(25, 128));
    require_coeff(b, 3, Rational(105, 1024));

    // The printed fourth coefficient 302/5965 is NOT reproduced; the
    // recurrence-derived value must instead satisfy the defining relation
    // exactly and drive the estimate at the n^-5 rate.
    require(b.coeff(4) != Rational(302, 5965), "printed fourth coefficient unexpectedly matched");
    require(asx::series_equal(asx::series_mul(asx::shift_backward(b), a_series_of(spec.a_stream, 4)), b),
            "ratio closure failed at order 4");

    const double exponent = asx::convergence_order(spec, b, 4, 100, 60);
    require(exponent >= 4.6 && exponent <= 5.4,
            "convergence exponent " + std::to_string(exponent) + " outside [4.6, 5.4]");

    // |J_n - estimate(n, 4)| <= C n^-5 y_n with a modest constant.
    const long digits = 60;
    BigFloat err = (asx::exact_value(spec, 100, digits) - asx::estimate(spec, b, 100, 4, digits))
                       .abs() / spec.eval_y(100, digits);
    BigFloat bound = BigFloat::from_long(10, digits) / BigFloat::from_long(100, digits).pow_ui(5);
    require(err.cmp(bound) <= 0, "n^-5 error bound violated at n = 100");
}

void criterion_beta_table() {
    const long digits = 40;
    SequenceSpec spec = asx::beta_integral_spec();
    TruncatedSeries b = asx::expansion_for(spec, 4);
    require(near(asx::exact_value(spec, 10, digits), "0.291336507", "5e-10"),
            "J_10 mismatch");
    const char* printed[] = {"0.280249561", "0.290758919", "0.291306282", "0.291335018"};
    for (long k = 0; k <= 3; ++k)
        require(near(asx::estimate(spec, b, 10, k, digits), printed[k], "5e-10"),
                "J_{10," + std::to_string(k) + "} mismatch");

    // The published J_{10,4} was computed from the true coefficient, so the
    // recurrence-derived estimate lands within 1e-6 of it; the residual is
    // recorded in ERRATA.md.
    BigFloat est4 = asx::estimate(spec, b, 10, 4, digits);
    require(near(est4, "0.291336437", "1e-6"), "J_{10,4} mismatch beyond the documented residual");
    std::printf("         J_{10,4} recomputed = %s (published 0.291336437, residual %.2e)\n",
                est4.to_fixed(9).c_str(),
                std::fabs(est4.to_double() - 0.291336437));
}

void criterion_oracle_closures() {
    const int cases = 200;
    std::uniform_int_distribution<long> ord(1, 15);

    for (int i = 0; i < cases; ++i) {
        long m = ord(rng);
        CoeffStream a = random_stream(StreamKind::difference, m + 1);
        TruncatedSeries b = asx::solve_difference(a, m);
        require(asx::series_equal(asx::series_sub(b, asx::shift_forward(b)), a_series_of(a, m)),
                "difference closure failed");
    }
    for (int i = 0; i < cases; ++i) {
        long m = ord(rng);
        CoeffStream a = random_stream(StreamKind::product, m);
        TruncatedSeries b = asx::solve_product(a, m);
        require(asx::series_equal(asx::series_mul(b, asx::shift_backward(b)), a_series_of(a, m)),
                "product closure failed");
    }
    for (int i = 0; i < cases; ++i) {
        long m = ord(rng);
        CoeffStream a = random_stream(StreamKind::ratio, m + 1);
        TruncatedSeries b = asx::solve_ratio(a, m);
        require(asx::series_equal(asx::series_mul(asx::shift_backward(b), a_series_of(a, m)), b),
                "ratio closure failed");
    }
}

void criterion_shift_round_trip() {
    std::uniform_int_distribution<long> ord(0, 30);
    for (int i = 0; i < 500; ++i) {
        TruncatedSeries f = random_series(ord(rng));
        require(asx::series_equal(asx::shift_backward(asx::shift_forward(f)), f),
                "backward(forward(f)) != f");
        require(asx::series_equal(asx::shift_forward(asx::shift_backward(f)), f),
                "forward(backward(f)) != f");
    }
}

void criterion_sign_erratum_guard() {
    TruncatedSeries wrong =
        asx::solve_difference(asx::euler_spec().a_stream, 2, asx::DifferenceSign::alternate);
    require(wrong.coeff(2) == Rational(-7, 12),
            "alternate sign no longer yields -7/12; got " + wrong.coeff(2).to_string());
    TruncatedSeries right = asx::solve_difference(asx::euler_spec().a_stream, 2);
    require(right.coeff(2) == Rational(-1, 12), "canonical sign must yield -1/12");
}

void criterion_convergence_orders() {
    const long digits = 60;
    for (const char* name : {"wallis", "beta_integral"}) {
        SequenceSpec spec = asx::builtin_spec(name);
        TruncatedSeries b = asx::expansion_for(spec, 6);
        for (long k = 1; k <= 3; ++k) {
            double measured = asx::convergence_order(spec, b, k, 100, digits);
            require(std::fabs(measured - static_cast<double>(k + 1)) <= 0.35,
                    std::string(name) + " k=" + std::to_string(k) + ": measured " +
                        std::to_string(measured) + ", expected " + std::to_string(k + 1));
        }
    }
    SequenceSpec euler = asx::euler_spec();
    TruncatedSeries eb = asx::expansion_for(euler, 6);
    double measured = asx::convergence_order(euler, eb, 2, 100, digits);
    require(std::fabs(measured - 4.0) <= 0.35,
            "euler k=2: measured " + std::to_string(measured) + ", expected 4");
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<void()> body;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Euler difference-form coefficients b_1..b_10", 1.0, criterion_euler_coefficients},
        {2, "Bernoulli identity -j b_j = B_j and vanishing odd terms", 1.0,
         criterion_bernoulli_identity},
        {3, "Wallis product-form coefficients b_0..b_5", 1.0, criterion_wallis_coefficients},
        {4, "Wallis table row n = 11 within 5e-10", 1.0, criterion_wallis_table},
        {5, "Napier ratio-form coefficients b_0..b_6", 1.0, criterion_napier_coefficients},
        {6, "Beta-integral b_1..b_3 exact, derived b_4 validated by closure + rate", 5.0,
         criterion_beta_fourth_coefficient},
        {7, "Beta-integral table row n = 10, documented residual at k = 4", 1.0,
         criterion_beta_table},
        {8, "Oracle closures on 200 random streams per kind", 30.0, criterion_oracle_closures},
        {9, "Shift round-trip identity on 500 random series", 10.0, criterion_shift_round_trip},
        {10, "Alternate difference sign reproduces the misprint (b_2 = -7/12)", 1.0,
         criterion_sign_erratum_guard},
        {11, "Convergence exponents match the first omitted terms", 5.0,
         criterion_convergence_orders},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string failure;
        try {
            criterion.body();
        } catch (const CheckFailure& f) {
            failure = f.message;
        } catch (const std::exception& e) {
            failure = std::string("unexpected exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (failure.empty() && elapsed > criterion.budget_seconds)
            failure = "exceeded time budget of " + std::to_string(criterion.budget_seconds) + " s";

        if (failure.empty()) {
            std::printf("[PASS] criterion %2d (%6.2fs): %s\n", criterion.id, elapsed,
                        criterion.name);
        } else {
            std::printf("[FAIL] criterion %2d (%6.2fs): %s\n         %s\n", criterion.id, elapsed,
                        criterion.name, failure.c_str());
            ++failures;
        }
    }

    if (failures == 0)
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    else
        std::printf("acceptance: %d of %zu criteria FAILED\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
