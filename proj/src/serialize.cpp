#include "radiopath/serialize.hpp"

#include <sstream>

#include "radiopath/verify.hpp"

namespace radiopath {

ordered_json layering_json(const Layering& ly) {
    ordered_json names = ordered_json::object();
    for (int t = 0; t < ly.central_count(); ++t)
        names["c" + std::to_string(t)] = ly.central(t);
    for (int i = 1; i <= ly.q(); ++i) {
        for (int j = 1; j <= ly.m(); ++j)
            names["l" + std::to_string(i) + std::to_string(j)] = ly.left(i, j);
        for (int j = 1; j <= ly.right_cols(i); ++j)
            names["r" + std::to_string(i) + std::to_string(j)] = ly.right(i, j);
    }
    return ordered_json{{"q", ly.q()},
                        {"diam", ly.diam()},
                        {"layers", ly.layers()},
                        {"names", names},
                        {"sLayer", ly.s_layer()},
                        {"sMod", ly.s_mod()}};
}

ordered_json formula_json(const SpanFormulaResult& r) {
    return ordered_json{{"value", r.value},
                        {"case", to_string(r.case_tag)},
                        {"alpha1", r.alpha1},
                        {"alpha2LowerBound", r.alpha2_lower_bound},
                        {"variant", to_string(r.variant)},
                        {"hypothesisHolds", r.hypothesis_holds}};
}

ordered_json coloring_json(const PathPowerGraph& g, const RadioColoring& c) {
    return ordered_json{{"n", g.n},
                        {"m", g.m},
                        {"k", c.k},
                        {"colors", c.colors},
                        {"span", c.span()},
                        {"sequence", sequence_of(c).order}};
}

namespace {

int require_int(const ordered_json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw std::invalid_argument(std::string("coloring file: field '") + field +
                                    "' missing or not an integer");
    return j[field].get<int>();
}

}  // namespace

RadioColoring coloring_from_json(const ordered_json& j, int& n_out, int& m_out) {
    if (!j.is_object()) throw std::invalid_argument("coloring file: top level must be an object");
    n_out = require_int(j, "n");
    m_out = require_int(j, "m");

    RadioColoring c;
    c.k = require_int(j, "k");
    if (!j.contains("colors") || !j["colors"].is_array())
        throw std::invalid_argument("coloring file: field 'colors' missing or not an array");
    for (std::size_t i = 0; i < j["colors"].size(); ++i) {
        const auto& entry = j["colors"][i];
        if (!entry.is_number_integer())
            throw std::invalid_argument("coloring file: colors[" + std::to_string(i) +
                                        "] is not an integer");
        c.colors.push_back(entry.get<int64_t>());
    }
    return c;
}

ordered_json report_json(const ValidityReport& r) {
    ordered_json violations = ordered_json::array();
    for (const Violation& v : r.violations)
        violations.push_back(ordered_json{{"u", v.u},
                                          {"v", v.v},
                                          {"distance", v.distance},
                                          {"gap", v.gap},
                                          {"required", v.required}});
    return ordered_json{{"valid", r.valid}, {"span", r.span}, {"violations", violations}};
}

namespace {

const char* to_string(PairClass pc) { return pc == PairClass::Optimal ? "optimal" : "loose"; }

const char* to_string(Polarity p) {
    switch (p) {
        case Polarity::Leftist: return "leftist";
        case Polarity::Balanced: return "balanced";
        default: return "rightist";
    }
}

}  // namespace

ordered_json decomposition_json(const Decomposition& d) {
    ordered_json runs = ordered_json::array();
    std::size_t pol = 0;
    for (const Run& run : d.runs) {
        ordered_json entry{{"kind", run.kind == RunKind::Optimal ? "optimal" : "loose"},
                           {"vertices", run.vertices}};
        if (run.kind == RunKind::Optimal && pol < d.polarities.size())
            entry["polarity"] = to_string(d.polarities[pol++]);
        runs.push_back(std::move(entry));
    }
    ordered_json pair_classes = ordered_json::array();
    for (PairClass pc : d.pair_classes) pair_classes.push_back(to_string(pc));
    return ordered_json{{"t", d.t},
                        {"alpha2", d.alpha2},
                        {"looseLengths", d.loose_lengths},
                        {"pairClasses", pair_classes},
                        {"runs", runs}};
}

namespace {

ordered_json row_json(const CertifyRow& r) {
    ordered_json j{{"n", r.n},
                   {"m", r.m},
                   {"k", r.k},
                   {"case", to_string(r.case_tag)},
                   {"diam", r.diam},
                   {"formula_consistent", r.formula_consistent},
                   {"formula_as_printed", r.formula_as_printed}};
    j["constructed_span"] = r.constructed_span ? ordered_json(*r.constructed_span)
                                               : ordered_json(nullptr);
    j["oracle_span"] = r.oracle_span ? ordered_json(*r.oracle_span) : ordered_json(nullptr);
    j["status"] = r.status;
    return j;
}

}  // namespace

ordered_json rows_json(const std::vector<CertifyRow>& rows) {
    ordered_json arr = ordered_json::array();
    for (const CertifyRow& r : rows) arr.push_back(row_json(r));
    return arr;
}

std::string rows_csv(const std::vector<CertifyRow>& rows) {
    std::ostringstream out;
    out << "n,m,k,case,diam,formula_consistent,formula_as_printed,"
           "constructed_span,oracle_span,status\n";
    for (const CertifyRow& r : rows) {
        out << r.n << ',' << r.m << ',' << r.k << ',' << to_string(r.case_tag) << ',' << r.diam
            << ',' << r.formula_consistent << ',' << r.formula_as_printed << ',';
        if (r.constructed_span) out << *r.constructed_span;
        out << ',';
        if (r.oracle_span) out << *r.oracle_span;
        out << ',' << r.status << '\n';
    }
    return out.str();
}

}  // namespace radiopath
