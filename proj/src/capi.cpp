#include "asx/asx.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "errors.hpp"
#include "numerics.hpp"

struct asx_spec {
    asx::SequenceSpec impl;
};

struct asx_series {
    asx::TruncatedSeries impl;
};

struct asx_table {
    asx::ErrorTable impl;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

asx_status fail(asx_status code, const char* what) {
    g_last_error = what;
    return code;
}

// Runs the body and translates exceptions into status codes.
template <typename Fn>
asx_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return ASX_OK;
    } catch (const asx::NormalizationError& e) {
        return fail(ASX_ERR_NORMALIZATION, e.what());
    } catch (const asx::CapabilityError& e) {
        return fail(ASX_ERR_CAPABILITY, e.what());
    } catch (const asx::PrecisionError& e) {
        return fail(ASX_ERR_PRECISION, e.what());
    } catch (const asx::DegenerateError& e) {
        return fail(ASX_ERR_DEGENERATE, e.what());
    } catch (const asx::ParseError& e) {
        return fail(ASX_ERR_INVALID, e.what());
    } catch (const asx::DomainError& e) {
        return fail(ASX_ERR_INVALID, e.what());
    } catch (const std::bad_alloc&) {
        return fail(ASX_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(ASX_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(ASX_ERR_INTERNAL, "unknown error");
    }
}

asx_status require(bool ok, const char* what) {
    return ok ? ASX_OK : fail(ASX_ERR_INVALID, what);
}

} // namespace

extern "C" {

const char* asx_version(void) { return "1.0.0"; }

const char* asx_last_error(void) { return g_last_error.c_str(); }

void asx_string_free(char* s) { std::free(s); }

size_t asx_builtin_count(void) { return asx::builtin_names().size(); }

asx_status asx_builtin_info(size_t index, char** name, char** kind) {
    if (require(name != nullptr && kind != nullptr, "builtin_info: null output") != ASX_OK)
        return ASX_ERR_INVALID;
    return guarded([&] {
        const auto& names = asx::builtin_names();
        if (index >= names.size())
            throw asx::DomainError("builtin_info: index out of range");
        asx::SequenceSpec spec = asx::builtin_spec(names[index]);
        *name = dup_string(spec.name);
        *kind = dup_string(asx::kind_name(spec.kind));
    });
}

asx_status asx_spec_builtin(const char* name, asx_spec** out) {
    if (require(name != nullptr && out != nullptr, "spec_builtin: null argument") != ASX_OK)
        return ASX_ERR_INVALID;
    return guarded([&] { *out = new asx_spec{asx::builtin_spec(name)}; });
}

asx_status asx_spec_from_file(const char* path, asx_spec** out) {
    if (require(path != nullptr && out != nullptr, "spec_from_file: null argument") != ASX_OK)
        return ASX_ERR_INVALID;
    return guarded([&] { *out = new asx_spec{asx::spec_from_file(path)}; });
}

asx_status asx_spec_from_text(const char* text, asx_spec** out) {
    if (require(text != nullptr && out != nullptr, "spec_from_text: null argument") != ASX_OK)
        return ASX_ERR_INVALID;
    return guarded([&] { *out = new asx_spec{asx::spec_from_text(text)}; });
}

void asx_spec_free(asx_spec* spec) { delete spec; }

asx_status asx_spec_name(const asx_spec* spec, char** out) {
    if (require(spec != nullptr && out != nullptr, "spec_name: null argument") != ASX_OK)
        return ASX_ERR_INVALID;
    return guarded([&] { *out = dup_string(spec->impl.name); });
}

asx_status asx_spec_kind(const asx_spec* spec, char** out) {
    if (require(spec != nullptr && out != nullptr, "spec_kind: null argument") != ASX_OK)
        return ASX_ERR_INVALID;
    return guarded([&] { *out = dup_string(asx::kind_name(spec->impl.kind)); });
}

asx_status asx_spec_limit_name(const asx_spec* spec, char** out) {
    if (require(spec != nullptr && out != nullptr, "spec_limit_name: null argument") != ASX_OK)
        return ASX_ERR_INVALID;
    return guarded([&] {
        switch (spec->impl.limit) {
            case asx::LimitConstant::gamma: *out = dup_string("gamma"); return;
            case asx::LimitConstant::e: *out = dup_string("e"); return;
            case asx::LimitConstant::none: *out = dup_string(""); return;
        }
        throw asx::DomainError("spec_limit_name: unknown constant");
    });
}

int asx_spec_has_exact(const asx_spec* spec) {
    return (spec != nullptr && spec->impl.has_exact()) ? 1 : 0;
}

int asx_spec_is_additive(const asx_spec* spec) {
    return (spec != nullptr && spec->impl.additive()) ? 1 : 0;
}

long asx_spec_declared_order(const asx_spec* spec) {
    return spec != nullptr ? spec->impl.declared_order : -1;
}

asx_status asx_expand(const asx_spec* spec, long order, asx_series** out) {
    if (require(spec != nullptr && out != nullptr, "expand: null argument") != ASX_OK)
        return ASX_ERR_INVALID;
    return guarded([&] { *out = new asx_series{asx::expansion_for(spec->impl, order)}; });
}

void asx_series_free(asx_series* series) { delete series; }

long asx_series_order(const asx_series* series) {
    return series != nullptr ? series->impl.order() : -1;
}

asx_status asx_series_coeff(const asx_series* series, long k, char** out) {
    if (require(series != nullptr && out != nullptr, "series_coeff: null argument") != ASX_OK)
        return ASX_ERR_INVALID;
    return guarded([&] { *out = dup_string(series->impl.coeff(k).to_string()); });
}

asx_status asx_estimate(const asx_spec* spec, const asx_series* series, long n, long k,
                        long digits, char** out) {
    if (require(spec != nullptr && series != nullptr && out != nullptr,
                "estimate: null argument") != ASX_OK)
        return ASX_ERR_INVALID;
    return guarded([&] {
        *out = dup_string(asx::estimate(spec->impl, series->impl, n, k, digits).to_sci());
    });
}

asx_status asx_exact_value(const asx_spec* spec, long n, long digits, char** out) {
    if (require(spec != nullptr && out != nullptr, "exact_value: null argument") != ASX_OK)
        return ASX_ERR_INVALID;
    return guarded([&] { *out = dup_string(asx::exact_value(spec->impl, n, digits).to_sci()); });
}

asx_status asx_error_table(const asx_spec* spec, const asx_series* series, const long* n_values,
                           size_t n_count, const long* k_values, size_t k_count, long digits,
                           asx_table** out) {
    if (require(spec != nullptr && series != nullptr && out != nullptr &&
                    (n_count == 0 || n_values != nullptr) && (k_count == 0 || k_values != nullptr),
                "error_table: null argument") != ASX_OK)
        return ASX_ERR_INVALID;
    return guarded([&] {
        std::vector<long> ns(n_values, n_values + n_count);
        std::vector<long> ks(k_values, k_values + k_count);
        *out = new asx_table{asx::error_table(spec->impl, series->impl, ns, ks, digits)};
    });
}

void asx_table_free(asx_table* table) { delete table; }

size_t asx_table_rows(const asx_table* table) {
    return table != nullptr ? table->impl.rows.size() : 0;
}

asx_status asx_table_cell(const asx_table* table, size_t row, long* n, long* k, char** estimate,
                          char** exact, char** abs_error) {
    if (require(table != nullptr, "table_cell: null table") != ASX_OK)
        return ASX_ERR_INVALID;
    return guarded([&] {
        if (row >= table->impl.rows.size())
            throw asx::DomainError("table_cell: row index out of range");
        const asx::ErrorRow& r = table->impl.rows[row];
        if (n != nullptr) *n = r.n;
        if (k != nullptr) *k = r.k;
        if (estimate != nullptr) *estimate = dup_string(r.estimate.to_sci());
        if (exact != nullptr) *exact = dup_string(r.exact.to_sci());
        if (abs_error != nullptr) *abs_error = dup_string(r.abs_error.to_sci());
    });
}

asx_status asx_table_render(const asx_table* table, const char* format, char** out) {
    if (require(table != nullptr && format != nullptr && out != nullptr,
                "table_render: null argument") != ASX_OK)
        return ASX_ERR_INVALID;
    return guarded([&] { *out = dup_string(asx::render(table->impl, format)); });
}

asx_status asx_convergence_order(const asx_spec* spec, const asx_series* series, long k, long n0,
                                 long digits, double* out) {
    if (require(spec != nullptr && series != nullptr && out != nullptr,
                "convergence_order: null argument") != ASX_OK)
        return ASX_ERR_INVALID;
    return guarded(
        [&] { *out = asx::convergence_order(spec->impl, series->impl, k, n0, digits); });
}

asx_status asx_verify(const asx_spec* spec, long order, const long* n_values, size_t n_count,
                      long digits, char** report, int* passed) {
    if (require(spec != nullptr && report != nullptr && passed != nullptr &&
                    (n_count == 0 || n_values != nullptr),
                "verify: null argument") != ASX_OK)
        return ASX_ERR_INVALID;
    return guarded([&] {
        std::vector<long> ns(n_values, n_values + n_count);
        asx::VerifyReport result = asx::verify_sequence(spec->impl, order, ns, digits);
        *report = dup_string(result.text);
        *passed = result.passed ? 1 : 0;
    });
}

} // extern "C"
