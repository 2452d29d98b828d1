// asx command-line tool: expansions, verification and error tables for
// asymptotic power series. Thin client of the C API in <asx/asx.h>.

#include <asx/asx.h>

#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <sys/stat.h>
#include <vector>

namespace {

// Exit codes: 0 success, 1 failed checks, 2 input error, 3 normalization
// violation, 4 capability error (sequence cannot support the operation).
int exit_code_for(asx_status status) {
    switch (status) {
        case ASX_OK: return 0;
        case ASX_ERR_INVALID: return 2;
        case ASX_ERR_NORMALIZATION: return 3;
        case ASX_ERR_CAPABILITY:
        case ASX_ERR_PRECISION:
        case ASX_ERR_DEGENERATE: return 4;
        case ASX_ERR_INTERNAL: break;
    }
    return 1;
}

int report_failure(asx_status status) {
    std::fprintf(stderr, "error: %s\n", asx_last_error());
    return exit_code_for(status);
}

struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { asx_string_free(s); }
};

struct OwnedSpec {
    asx_spec* p = nullptr;
    ~OwnedSpec() { asx_spec_free(p); }
};

struct OwnedSeries {
    asx_series* p = nullptr;
    ~OwnedSeries() { asx_series_free(p); }
};

struct OwnedTable {
    asx_table* p = nullptr;
    ~OwnedTable() { asx_table_free(p); }
};

bool is_builtin(const std::string& name) {
    for (size_t i = 0; i < asx_builtin_count(); ++i) {
        OwnedString n, k;
        if (asx_builtin_info(i, &n.s, &k.s) == ASX_OK && name == n.s)
            return true;
    }
    return false;
}

// A builtin name, or a path to a sequence file.
asx_status resolve_sequence(const std::string& sequence, OwnedSpec& spec) {
    if (is_builtin(sequence))
        return asx_spec_builtin(sequence.c_str(), &spec.p);
    struct stat st{};
    if (stat(sequence.c_str(), &st) == 0)
        return asx_spec_from_file(sequence.c_str(), &spec.p);
    return asx_spec_builtin(sequence.c_str(), &spec.p);  // fails with "unknown sequence"
}

std::string limit_display(const asx_spec* spec) {
    OwnedString limit;
    if (asx_spec_limit_name(spec, &limit.s) != ASX_OK || limit.s[0] == '\0')
        return "(limit)";
    if (std::string(limit.s) == "gamma")
        return "(limit \xCE\xB3)";
    return std::string("(limit ") + limit.s + ")";
}

int cmd_expand(const std::string& sequence, long order, bool order_given) {
    OwnedSpec spec;
    if (asx_status st = resolve_sequence(sequence, spec); st != ASX_OK)
        return report_failure(st);
    if (!order_given && asx_spec_declared_order(spec.p) > 0)
        order = asx_spec_declared_order(spec.p);

    OwnedSeries series;
    if (asx_status st = asx_expand(spec.p, order, &series.p); st != ASX_OK)
        return report_failure(st);

    for (long k = 0; k <= asx_series_order(series.p); ++k) {
        if (k == 0 && asx_spec_is_additive(spec.p)) {
            std::printf("0: %s\n", limit_display(spec.p).c_str());
            continue;
        }
        OwnedString coeff;
        if (asx_status st = asx_series_coeff(series.p, k, &coeff.s); st != ASX_OK)
            return report_failure(st);
        std::printf("%ld: %s\n", k, coeff.s);
    }
    return 0;
}

int cmd_verify(const std::string& sequence, long order, const std::vector<long>& ns, long digits) {
    OwnedSpec spec;
    if (asx_status st = resolve_sequence(sequence, spec); st != ASX_OK)
        return report_failure(st);

    OwnedString report;
    int passed = 0;
    if (asx_status st = asx_verify(spec.p, order, ns.empty() ? nullptr : ns.data(), ns.size(),
                                   digits, &report.s, &passed);
        st != ASX_OK)
        return report_failure(st);
    std::fputs(report.s, stdout);
    return passed ? 0 : 1;
}

int cmd_table(const std::string& sequence, long order, bool order_given, std::vector<long> ns,
              std::vector<long> ks, long digits, const std::string& format) {
    OwnedSpec spec;
    if (asx_status st = resolve_sequence(sequence, spec); st != ASX_OK)
        return report_failure(st);
    if (!order_given && asx_spec_declared_order(spec.p) > 0)
        order = asx_spec_declared_order(spec.p);

    OwnedSeries series;
    if (asx_status st = asx_expand(spec.p, order, &series.p); st != ASX_OK)
        return report_failure(st);

    if (ks.empty())
        for (long k = 0; k <= order; ++k)
            ks.push_back(k);

    OwnedTable table;
    if (asx_status st = asx_error_table(spec.p, series.p, ns.data(), ns.size(), ks.data(),
                                        ks.size(), digits, &table.p);
        st != ASX_OK)
        return report_failure(st);

    OwnedString text;
    if (asx_status st = asx_table_render(table.p, format.c_str(), &text.s); st != ASX_OK)
        return report_failure(st);
    std::fputs(text.s, stdout);
    return 0;
}

int cmd_list(const std::string& format) {
    if (format == "json") {
        std::printf("[");
        for (size_t i = 0; i < asx_builtin_count(); ++i) {
            OwnedString name, kind;
            if (asx_status st = asx_builtin_info(i, &name.s, &kind.s); st != ASX_OK)
                return report_failure(st);
            std::printf("%s{\"name\":\"%s\",\"kind\":\"%s\"}", i == 0 ? "" : ",", name.s, kind.s);
        }
        std::printf("]\n");
        return 0;
    }
    for (size_t i = 0; i < asx_builtin_count(); ++i) {
        OwnedString name, kind;
        if (asx_status st = asx_builtin_info(i, &name.s, &kind.s); st != ASX_OK)
            return report_failure(st);
        std::printf("%s(%s)\n", name.s, kind.s);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"asymptotic power series toolkit"};
    app.require_subcommand(1);

    std::string sequence;
    long order = 6;
    long digits = 50;
    std::vector<long> ns;
    std::vector<long> ks;
    std::string format = "plain";

    CLI::App* expand = app.add_subcommand("expand", "print exact expansion coefficients");
    expand->add_option("--sequence,-s", sequence, "builtin name or sequence file")->required();
    CLI::Option* expand_order = expand->add_option("--order,-m", order, "truncation order");

    CLI::App* verify = app.add_subcommand("verify", "check the expansion against exact values");
    verify->add_option("--sequence,-s", sequence, "builtin name")->required();
    verify->add_option("--order,-m", order, "truncation order");
    verify->add_option("--n", ns, "sequence indices to check at");
    verify->add_option("--precision,-p", digits, "working precision, decimal digits");

    CLI::App* table = app.add_subcommand("table", "estimate/exact/error table");
    table->add_option("--sequence,-s", sequence, "builtin name")->required();
    CLI::Option* table_order = table->add_option("--order,-m", order, "truncation order");
    table->add_option("--n", ns, "sequence indices (required)")->required();
    table->add_option("--k", ks, "truncation cutoffs (default 0..order)");
    table->add_option("--precision,-p", digits, "working precision, decimal digits");
    table->add_option("--format,-f", format, "plain, csv or json");

    CLI::App* list = app.add_subcommand("list", "list built-in sequences");
    list->add_option("--format,-f", format, "plain or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (order < 1) {
        std::fprintf(stderr, "error: --order must be at least 1\n");
        return 2;
    }
    if (digits < 10) {
        std::fprintf(stderr, "error: --precision must be at least 10\n");
        return 2;
    }
    for (long n : ns)
        if (n < 1) {
            std::fprintf(stderr, "error: --n values must be positive\n");
            return 2;
        }
    if (format != "plain" && format != "csv" && format != "json") {
        std::fprintf(stderr, "error: unknown format '%s'\n", format.c_str());
        return 2;
    }

    if (app.got_subcommand(expand))
        return cmd_expand(sequence, order, expand_order->count() > 0);
    if (app.got_subcommand(verify))
        return cmd_verify(sequence, order, ns, digits);
    if (app.got_subcommand(table))
        return cmd_table(sequence, order, table_order->count() > 0, ns, ks, digits, format);
    return cmd_list(format);
}
