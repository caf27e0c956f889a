#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "radiopath/chain.hpp"
#include "radiopath/oracle.hpp"
#include "radiopath/path_power.hpp"
#include "radiopath/span_formula.hpp"
#include "radiopath/verify.hpp"

namespace radiopath {

using ordered_json = nlohmann::ordered_json;

// {q, diam, layers, names, sLayer, sMod}; names maps "c0", "l11", "r12", ...
// to positions.
ordered_json layering_json(const Layering& ly);

// {value, case, alpha1, alpha2LowerBound, variant, hypothesisHolds}
ordered_json formula_json(const SpanFormulaResult& r);

// The coloring interchange format, {n, m, k, colors, span, sequence} with
// colors indexed by position and sequence sorted by color. Byte-stable for
// a given instance, which is what the golden-file tests rely on.
ordered_json coloring_json(const PathPowerGraph& g, const RadioColoring& c);

// Parses the coloring format. n, m, k, colors are required; span and
// sequence are recomputed rather than trusted. Throws std::invalid_argument
// naming the offending field.
RadioColoring coloring_from_json(const ordered_json& j, int& n_out, int& m_out);

// {valid, span, violations: [{u, v, distance, gap, required}]}
ordered_json report_json(const ValidityReport& r);

ordered_json decomposition_json(const Decomposition& d);

ordered_json rows_json(const std::vector<CertifyRow>& rows);

// Header: n,m,k,case,diam,formula_consistent,formula_as_printed,
// constructed_span,oracle_span,status. Absent optionals are empty fields.
std::string rows_csv(const std::vector<CertifyRow>& rows);

}  // namespace radiopath
