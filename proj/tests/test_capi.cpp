#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <asx/asx.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

namespace {

// Takes ownership of a C-API string.
std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    asx_string_free(s);
    return out;
}

struct SpecHandle {
    asx_spec* p = nullptr;
    ~SpecHandle() { asx_spec_free(p); }
};

struct SeriesHandle {
    asx_series* p = nullptr;
    ~SeriesHandle() { asx_series_free(p); }
};

struct TableHandle {
    asx_table* p = nullptr;
    ~TableHandle() { asx_table_free(p); }
};

} // namespace

TEST_CASE("version and builtin registry") {
    CHECK(asx_version() != nullptr);
    REQUIRE(asx_builtin_count() == 4);

    std::vector<std::string> names;
    for (size_t i = 0; i < asx_builtin_count(); ++i) {
        char* name = nullptr;
        char* kind = nullptr;
        REQUIRE(asx_builtin_info(i, &name, &kind) == ASX_OK);
        names.push_back(take(name));
        std::string k = take(kind);
        CHECK((k == "difference" || k == "product" || k == "ratio"));
    }
    CHECK(names == std::vector<std::string>({"beta_integral", "euler", "napier", "wallis"}));

    char* name = nullptr;
    char* kind = nullptr;
    CHECK(asx_builtin_info(99, &name, &kind) == ASX_ERR_INVALID);
}

TEST_CASE("wallis expansion coefficients") {
    SpecHandle spec;
    REQUIRE(asx_spec_builtin("wallis", &spec.p) == ASX_OK);

    char* name = nullptr;
    REQUIRE(asx_spec_name(spec.p, &name) == ASX_OK);
    CHECK(take(name) == "wallis");
    CHECK(asx_spec_has_exact(spec.p) == 1);
    CHECK(asx_spec_is_additive(spec.p) == 0);
    CHECK(asx_spec_declared_order(spec.p) == -1);

    char* kind = nullptr;
    REQUIRE(asx_spec_kind(spec.p, &kind) == ASX_OK);
    CHECK(take(kind) == "product");

    SeriesHandle series;
    REQUIRE(asx_expand(spec.p, 5, &series.p) == ASX_OK);
    CHECK(asx_series_order(series.p) == 5);

    const char* expected[] = {"1", "-1/4", "1/32", "5/128", "-21/2048", "-399/8192"};
    for (long k = 0; k <= 5; ++k) {
        char* coeff = nullptr;
        REQUIRE(asx_series_coeff(series.p, k, &coeff) == ASX_OK);
        CHECK(take(coeff) == expected[k]);
    }

    char* coeff = nullptr;
    CHECK(asx_series_coeff(series.p, 6, &coeff) == ASX_ERR_INVALID);
    CHECK(std::string(asx_last_error()).find("out of range") != std::string::npos);
}

TEST_CASE("additive sequences are flagged") {
    SpecHandle spec;
    REQUIRE(asx_spec_builtin("euler", &spec.p) == ASX_OK);
    CHECK(asx_spec_is_additive(spec.p) == 1);
    char* limit = nullptr;
    REQUIRE(asx_spec_limit_name(spec.p, &limit) == ASX_OK);
    CHECK(take(limit) == "gamma");
}

TEST_CASE("unknown names fail cleanly") {
    asx_spec* spec = nullptr;
    CHECK(asx_spec_builtin("stirling", &spec) == ASX_ERR_INVALID);
    CHECK(spec == nullptr);
    CHECK(std::string(asx_last_error()).find("unknown sequence") != std::string::npos);
    CHECK(asx_spec_builtin(nullptr, &spec) == ASX_ERR_INVALID);
}

TEST_CASE("custom sequences from text and file") {
    SpecHandle good;
    REQUIRE(asx_spec_from_text("kind: ratio\norder: 2\n1\n0\n1/2\n-1/3\n", &good.p) == ASX_OK);
    CHECK(asx_spec_has_exact(good.p) == 0);
    CHECK(asx_spec_declared_order(good.p) == 2);

    asx_spec* bad = nullptr;
    CHECK(asx_spec_from_text("kind: ratio\norder: 2\n2\n0\n1/2\n-1/3\n", &bad) ==
          ASX_ERR_NORMALIZATION);
    CHECK(asx_spec_from_text("kind: what\norder: 2\n1\n0\n", &bad) == ASX_ERR_INVALID);

    const char* path = "capi_seq_test.txt";
    {
        std::ofstream out(path);
        out << "kind: product\norder: 2\n1\n-1/2\n-1/8\n";
    }
    SpecHandle from_file;
    REQUIRE(asx_spec_from_file(path, &from_file.p) == ASX_OK);
    SeriesHandle series;
    REQUIRE(asx_expand(from_file.p, 2, &series.p) == ASX_OK);
    char* coeff = nullptr;
    REQUIRE(asx_series_coeff(series.p, 1, &coeff) == ASX_OK);
    CHECK(take(coeff) == "-1/4");
    std::remove(path);

    CHECK(asx_spec_from_file("/nonexistent/file.seq", &bad) == ASX_ERR_INVALID);
}

TEST_CASE("numeric surface") {
    SpecHandle spec;
    REQUIRE(asx_spec_builtin("wallis", &spec.p) == ASX_OK);
    SeriesHandle series;
    REQUIRE(asx_expand(spec.p, 5, &series.p) == ASX_OK);

    char* text = nullptr;
    REQUIRE(asx_estimate(spec.p, series.p, 11, 5, 40, &text) == ASX_OK);
    CHECK(std::strtod(take(text).c_str(), nullptr) == doctest::Approx(0.235172669).epsilon(1e-7));

    REQUIRE(asx_exact_value(spec.p, 11, 40, &text) == ASX_OK);
    CHECK(std::strtod(take(text).c_str(), nullptr) == doctest::Approx(0.235172672).epsilon(1e-7));

    CHECK(asx_estimate(spec.p, series.p, 11, 9, 40, &text) == ASX_ERR_INVALID);

    double order = 0.0;
    REQUIRE(asx_convergence_order(spec.p, series.p, 2, 100, 60, &order) == ASX_OK);
    CHECK(order == doctest::Approx(3.0).epsilon(0.1));
}

TEST_CASE("error tables and rendering") {
    SpecHandle spec;
    REQUIRE(asx_spec_builtin("beta_integral", &spec.p) == ASX_OK);
    SeriesHandle series;
    REQUIRE(asx_expand(spec.p, 4, &series.p) == ASX_OK);

    const long ns[] = {10};
    const long ks[] = {0, 1, 2, 3, 4};
    TableHandle table;
    REQUIRE(asx_error_table(spec.p, series.p, ns, 1, ks, 5, 40, &table.p) == ASX_OK);
    REQUIRE(asx_table_rows(table.p) == 5);

    long n = 0, k = 0;
    char* estimate = nullptr;
    char* exact = nullptr;
    char* abs_error = nullptr;
    REQUIRE(asx_table_cell(table.p, 0, &n, &k, &estimate, &exact, &abs_error) == ASX_OK);
    CHECK(n == 10);
    CHECK(k == 0);
    CHECK(std::strtod(take(estimate).c_str(), nullptr) == doctest::Approx(0.280249561).epsilon(1e-7));
    CHECK(std::strtod(take(exact).c_str(), nullptr) == doctest::Approx(0.291336507).epsilon(1e-7));
    take(abs_error);

    CHECK(asx_table_cell(table.p, 9, &n, &k, nullptr, nullptr, nullptr) == ASX_ERR_INVALID);

    char* rendered = nullptr;
    REQUIRE(asx_table_render(table.p, "csv", &rendered) == ASX_OK);
    std::string csv = take(rendered);
    CHECK(csv.rfind("n,k,estimate,exact,abs_error\n", 0) == 0);

    REQUIRE(asx_table_render(table.p, "json", &rendered) == ASX_OK);
    nlohmann::json doc = nlohmann::json::parse(take(rendered));
    CHECK(doc["rows"].size() == 5);

    CHECK(asx_table_render(table.p, "xml", &rendered) == ASX_ERR_INVALID);
}

TEST_CASE("verification") {
    SpecHandle spec;
    REQUIRE(asx_spec_builtin("wallis", &spec.p) == ASX_OK);
    char* report = nullptr;
    int passed = 0;
    REQUIRE(asx_verify(spec.p, 5, nullptr, 0, 50, &report, &passed) == ASX_OK);
    std::string text = take(report);
    INFO(text);
    CHECK(passed == 1);
    CHECK(text.find("result: PASS") != std::string::npos);

    SpecHandle custom;
    REQUIRE(asx_spec_from_text("kind: product\norder: 1\n1\n-1/2\n", &custom.p) == ASX_OK);
    CHECK(asx_verify(custom.p, 1, nullptr, 0, 50, &report, &passed) == ASX_ERR_CAPABILITY);
}
