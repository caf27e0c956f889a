#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "radiopath/chain.hpp"
#include "radiopath/path_power.hpp"
#include "radiopath/span_formula.hpp"

namespace radiopath {

struct SearchLimits {
    int max_vertices = 11;           // refuse instances with n+1 above this
    int64_t max_nodes = 100'000'000; // expanded-node budget; <= 0 means unlimited
};

enum class SearchStatus { Exact, Inconclusive };

struct OracleResult {
    SearchStatus status = SearchStatus::Exact;
    int64_t value = 0;        // optimum when Exact; best known upper bound otherwise
    int64_t lower_bound = 0;  // proven lower bound (= value when Exact)
    RadioColoring witness;    // valid coloring attaining `value`
    int64_t nodes = 0;        // expanded search nodes
};

// Minimum span of a valid coloring whose color-order equals `order`:
// color(v_0) = 0, color(v_{i+1}) = max over placed u of
// color(u) + k + 1 - d(u, v_{i+1}). Greedy is exact for a fixed order
// because every constraint is a lower bound on a difference of ordered
// colors. Requires k > diam so colors are forced strictly increasing.
int64_t greedy_span_of_order(const PathPowerGraph& g, const std::vector<int>& order, int k);

// Same computation, returning the coloring itself (always valid).
RadioColoring greedy_coloring_of_order(const PathPowerGraph& g, const std::vector<int>& order, int k);

// Exact minimum span over all colorings, by branch-and-bound over color
// orders. Branches place the next vertex of the order; candidates are tried
// in ascending position, the first vertex is restricted to the left half by
// the reflection symmetry p <-> n-p, and a branch is cut when its prefix
// span plus a layer-gap path bound on the remainder reaches the incumbent.
// The reported value and witness are deterministic. If the node budget runs
// out the result is explicitly Inconclusive with value = incumbent upper
// bound and lower_bound = the root bound, never a silent wrong answer.
OracleResult rc_exact(const PathPowerGraph& g, int k, const SearchLimits& limits = {});

struct CertifyRow {
    int n = 0;
    int m = 0;
    int k = 0;
    CaseTag case_tag{};
    int diam = 0;
    int64_t formula_consistent = 0;
    int64_t formula_as_printed = 0;
    std::optional<int64_t> constructed_span;
    std::optional<int64_t> oracle_span;
    std::string status;  // ok | mismatch | inconclusive | skipped | uncertified
};

struct GridOptions {
    FormulaVariant variant = FormulaVariant::Consistent;
    bool oracle = true;
    SearchLimits limits{};
};

struct Instance {
    int n = 0;
    int m = 0;
    int k = 0;
};

CertifyRow certify_instance(const Instance& inst, const GridOptions& opts);

// Per-instance equality check closed form == constructed span == exact
// search over a grid. Empty grid yields an empty report.
std::vector<CertifyRow> certify_grid(const std::vector<Instance>& grid,
                                     const GridOptions& opts);

bool any_mismatch(const std::vector<CertifyRow>& rows);

}  // namespace radiopath
