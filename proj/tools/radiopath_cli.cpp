// Command line front end: optimal colorings, closed-form evaluation,
// verification of user-supplied colorings, layer structure dumps and grid
// sweeps. Data goes to stdout (or --out), diagnostics to stderr.
//
// Exit codes: 0 success / valid / all certified rows equal;
//             1 domain failure (k threshold, invalid coloring, mismatch);
//             2 usage or schema error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "radiopath/oracle.hpp"
#include "radiopath/serialize.hpp"
#include "radiopath/verify.hpp"

using namespace radiopath;

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << text;
}

void emit_json(const ordered_json& j, const std::string& out_path) {
    emit(j.dump(2) + "\n", out_path);
}

// Inclusive integer range "A" or "A..B".
std::vector<int> parse_range(const std::string& text, const std::string& flag) {
    const auto bad = [&]() {
        return CLI::ValidationError(flag, "expected N or A..B, got '" + text + "'");
    };
    const auto parse_int = [&](const std::string& tok) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw bad();
        }
        if (used != tok.size()) throw bad();
        return value;
    };
    const std::size_t dots = text.find("..");
    const int lo = parse_int(dots == std::string::npos ? text : text.substr(0, dots));
    const int hi = dots == std::string::npos ? lo : parse_int(text.substr(dots + 2));
    if (hi < lo) throw bad();
    std::vector<int> values;
    for (int v = lo; v <= hi; ++v) values.push_back(v);
    return values;
}

// One end of a k specification: a literal value or hyp+offset.
struct KBound {
    bool relative = false;
    int value = 0;  // literal, or offset from the instance's smallest certified k

    int resolve(int n, int m) const { return relative ? hypothesis_min_k(n, m) + value : value; }
};

struct KSpecItem {
    KBound lo, hi;
};

KBound parse_k_bound(const std::string& tok, const std::string& flag) {
    const auto bad = [&]() {
        return CLI::ValidationError(flag,
                                    "expected K, hyp, or hyp+D in '" + tok + "'");
    };
    if (tok.rfind("hyp", 0) == 0) {
        if (tok.size() == 3) return {true, 0};
        if (tok[3] != '+') throw bad();
        try {
            std::size_t used = 0;
            const int off = std::stoi(tok.substr(4), &used);
            if (used != tok.size() - 4 || off < 0) throw bad();
            return {true, off};
        } catch (const CLI::ValidationError&) {
            throw;
        } catch (const std::exception&) {
            throw bad();
        }
    }
    try {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size()) throw bad();
        return {false, v};
    } catch (const std::exception&) {
        throw bad();
    }
}

// Comma-separated items, each K or A..B where either bound may be hyp+D.
std::vector<KSpecItem> parse_k_spec(const std::string& text, const std::string& flag) {
    std::vector<KSpecItem> items;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        const std::string tok = text.substr(start, comma - start);
        const std::size_t dots = tok.find("..");
        KSpecItem item;
        item.lo = parse_k_bound(dots == std::string::npos ? tok : tok.substr(0, dots), flag);
        item.hi = dots == std::string::npos ? item.lo : parse_k_bound(tok.substr(dots + 2), flag);
        items.push_back(item);
        start = comma + 1;
    }
    return items;
}

std::vector<int> resolve_k(const std::vector<KSpecItem>& spec, int n, int m) {
    std::vector<int> ks;
    for (const KSpecItem& item : spec) {
        const int lo = item.lo.resolve(n, m);
        const int hi = item.hi.resolve(n, m);
        for (int k = lo; k <= hi; ++k) ks.push_back(k);
    }
    return ks;
}

int cmd_color(int n, int m, int k, bool unchecked, const std::string& out_path) {
    const PathPowerGraph g(n, m);
    if (!hypothesis_holds(n, m, k)) {
        if (!unchecked)
            throw HypothesisError("k = " + std::to_string(k) +
                                  " is below the certified threshold " +
                                  std::to_string(hypothesis_min_k(n, m)) +
                                  " (rerun with --unchecked to emit anyway)");
        std::cerr << "warning: k below the certified threshold; "
                     "the coloring is not certified optimal\n";
    }
    const RadioColoring c = construct_optimal(n, m, k, false);
    if (!hypothesis_holds(n, m, k) && !check_coloring(g, c).valid)
        std::cerr << "warning: emitted coloring violates the radio condition at this k\n";
    emit_json(coloring_json(g, c), out_path);
    return 0;
}

int cmd_formula(int n, int m, int k, const std::string& variant_name, bool unchecked,
                const std::string& out_path) {
    const FormulaVariant variant = variant_from_string(variant_name);
    const SpanFormulaResult r = closed_form_span(n, m, k, variant, !unchecked);
    if (!r.hypothesis_holds)
        std::cerr << "warning: k below the certified threshold; value not certified\n";
    if (variant == FormulaVariant::AsPrinted &&
        r.case_tag == CaseTag{DiamParity::Even, Divisibility::NotDivides}) {
        const SpanFormulaResult c = closed_form_span(n, m, k, FormulaVariant::Consistent, false);
        std::cerr << "warning: the as-printed even/not-dividing formula uses (m+s)^2 and "
                     "overshoots; the consistent value is "
                  << c.value << "\n";
    }
    emit_json(formula_json(r), out_path);
    return 0;
}

int cmd_verify(const std::string& input_path, bool with_decomposition,
               const std::string& out_path) {
    std::ifstream in(input_path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file: " + input_path);
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("input is not valid JSON: " + std::string(e.what()));
    }

    int n = 0, m = 0;
    const RadioColoring c = coloring_from_json(j, n, m);
    const PathPowerGraph g(n, m);
    const ValidityReport report = check_coloring(g, c);

    ordered_json out = report_json(report);
    if (with_decomposition && report.valid) {
        const Layering ly(g);
        out["decomposition"] = decomposition_json(decompose(g, ly, c));
        out["certificate"] = lower_bound_certificate(g, ly, c);
    }
    emit_json(out, out_path);
    return report.valid ? 0 : 1;
}

int cmd_layering(int n, int m, const std::string& out_path) {
    emit_json(layering_json(Layering{build_graph(n, m)}), out_path);
    return 0;
}

int cmd_sweep(const std::string& n_range, const std::string& m_range, const std::string& k_spec,
              const std::string& variant_name, bool oracle, const std::string& format,
              const std::string& out_path, int max_vertices, long long max_nodes) {
    GridOptions opts;
    opts.variant = variant_from_string(variant_name);
    opts.oracle = oracle;
    opts.limits.max_vertices = max_vertices;
    opts.limits.max_nodes = max_nodes;
    if (format != "csv" && format != "json")
        throw CLI::ValidationError("--format", "expected csv or json");

    const std::vector<int> ns = parse_range(n_range, "--n");
    const std::vector<int> ms = parse_range(m_range, "--m");
    const std::vector<KSpecItem> ks = parse_k_spec(k_spec, "--k");

    std::vector<Instance> grid;
    for (int n : ns) {
        if (n < 1) throw CLI::ValidationError("--n", "n must be positive");
        for (int m : ms) {
            if (m < 1) throw CLI::ValidationError("--m", "m must be positive");
            if (m > n) continue;
            for (int k : resolve_k(ks, n, m)) grid.push_back({n, m, k});
        }
    }

    const std::vector<CertifyRow> rows = certify_grid(grid, opts);
    emit(format == "csv" ? rows_csv(rows) : rows_json(rows).dump(2) + "\n", out_path);

    int mismatches = 0, inconclusive = 0;
    for (const CertifyRow& row : rows) {
        if (row.status == "mismatch") ++mismatches;
        if (row.status == "inconclusive") ++inconclusive;
    }
    if (mismatches > 0)
        std::cerr << "sweep: " << mismatches << " mismatching row(s) out of " << rows.size()
                  << "\n";
    if (inconclusive > 0)
        std::cerr << "sweep: " << inconclusive << " inconclusive row(s); raise --max-nodes\n";
    return mismatches > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"radio k-colorings of path powers: optimal construction, closed-form "
                 "spans, verification and exact certification"};
    app.require_subcommand(1);

    int n = 0, m = 0, k = 0;
    std::string out_path;
    std::string variant = "consistent";
    bool unchecked = false;

    CLI::App* color = app.add_subcommand("color", "construct an optimal coloring");
    color->add_option("--n", n, "path length (vertices 0..n)")->required();
    color->add_option("--m", m, "power")->required();
    color->add_option("--k", k, "radio condition parameter")->required();
    color->add_flag("--unchecked", unchecked, "emit even when k is below the threshold");
    color->add_option("--out", out_path, "write to a file instead of stdout");

    CLI::App* formula = app.add_subcommand("formula", "evaluate the closed-form span");
    formula->add_option("--n", n, "path length")->required();
    formula->add_option("--m", m, "power")->required();
    formula->add_option("--k", k, "radio condition parameter")->required();
    formula->add_option("--variant", variant, "consistent (default) or as-printed");
    formula->add_flag("--unchecked", unchecked, "evaluate even when k is below the threshold");
    formula->add_option("--out", out_path, "write to a file instead of stdout");

    std::string input_path;
    bool with_decomposition = false;
    CLI::App* verify = app.add_subcommand("verify", "check a coloring file");
    verify->add_option("input", input_path, "coloring JSON file")->required();
    verify->add_flag("--decompose", with_decomposition,
                     "include the run decomposition and the certificate");
    verify->add_option("--out", out_path, "write to a file instead of stdout");

    CLI::App* layering = app.add_subcommand("layering", "print the layer structure");
    layering->add_option("--n", n, "path length")->required();
    layering->add_option("--m", m, "power")->required();
    layering->add_option("--out", out_path, "write to a file instead of stdout");

    std::string n_range, m_range, k_spec = "hyp";
    std::string format = "csv";
    bool oracle = false;
    int max_vertices = 11;
    long long max_nodes = 100'000'000;
    CLI::App* sweep = app.add_subcommand("sweep", "certify a grid of instances");
    sweep->add_option("--n", n_range, "n values, N or A..B")->required();
    sweep->add_option("--m", m_range, "m values, N or A..B")->required();
    sweep->add_option("--k", k_spec,
                      "k values per instance: K, A..B, hyp, hyp+D, hyp..hyp+D, comma lists");
    sweep->add_option("--variant", variant, "formula variant to certify against");
    sweep->add_flag("--oracle", oracle, "also run the exact search on each instance");
    sweep->add_option("--format", format, "csv (default) or json");
    sweep->add_option("--out", out_path, "write to a file instead of stdout");
    sweep->add_option("--max-vertices", max_vertices, "exact-search vertex cap (default 11)");
    sweep->add_option("--max-nodes", max_nodes, "exact-search node budget per instance");

    try {
        app.parse(argc, argv);
        if (color->parsed()) return cmd_color(n, m, k, unchecked, out_path);
        if (formula->parsed()) return cmd_formula(n, m, k, variant, unchecked, out_path);
        if (verify->parsed()) return cmd_verify(input_path, with_decomposition, out_path);
        if (layering->parsed()) return cmd_layering(n, m, out_path);
        if (sweep->parsed())
            return cmd_sweep(n_range, m_range, k_spec, variant, oracle, format, out_path,
                             max_vertices, max_nodes);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints usage or help text
        return code == 0 ? 0 : 2;
    } catch (const HypothesisError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
