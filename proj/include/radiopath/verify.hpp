#pragma once

#include <cstdint>
#include <vector>

#include "radiopath/chain.hpp"
#include "radiopath/path_power.hpp"

namespace radiopath {

struct Violation {
    int u = 0;
    int v = 0;
    int distance = 0;
    int64_t gap = 0;       // |color(u) - color(v)|
    int64_t required = 0;  // k + 1 - distance
};

struct ValidityReport {
    bool valid = false;
    int64_t span = 0;
    std::vector<Violation> violations;  // every violating pair, (u,v) ascending
};

// Checks |color(u) - color(v)| >= k + 1 - d(u, v) for every pair.
// The report lists all violations, not just the first.
ValidityReport check_coloring(const PathPowerGraph& g, const RadioColoring& c);

// Vertices sorted by increasing color. Throws on tied colors (which cannot
// occur in a valid coloring with k > diam).
ColorSequence sequence_of(const RadioColoring& c);

enum class PairClass { Optimal, Loose };

// Classifies a consecutive pair of the color sequence against the layer
// bound gap >= k - f(v_i) - f(v_j) + epsilon: Optimal on equality, Loose on
// strict excess. Throws if the pair is not consecutive, or if the gap falls
// below the bound (not a valid radio coloring).
PairClass classify_pair(const PathPowerGraph& g, const Layering& ly,
                        const RadioColoring& c, int vi, int vj);

enum class RunKind { Loose, Optimal };
enum class Polarity { Leftist, Balanced, Rightist };

struct Run {
    RunKind kind = RunKind::Loose;
    std::vector<int> vertices;
};

// The split of a color sequence into the alternation Y_0 X_1 Y_1 ... X_t Y_t
// of loose runs Y_i (possibly empty) and maximal optimal runs X_j.
struct Decomposition {
    std::vector<Run> runs;                  // always 2t+1 entries, Y/X alternating
    int t = 0;                              // number of optimal runs
    std::vector<int> loose_lengths;         // |Y_0| .. |Y_t|
    std::vector<PairClass> pair_classes;    // per consecutive pair of the sequence
    std::vector<Polarity> polarities;       // per optimal run; even diameter only
    int64_t alpha2 = 0;                     // f(v_0) + f(v_n) + sum |Y_i| + t - 1
};

Decomposition decompose(const PathPowerGraph& g, const Layering& ly,
                        const RadioColoring& c);

// More left vertices than right-plus-central: Leftist; equal: Balanced;
// fewer: Rightist. Defined for optimal runs of even-diameter instances only.
Polarity run_polarity(const Run& run, const Layering& ly);

// alpha1 + alpha2 of the given coloring's decomposition. Never exceeds the
// coloring's span; meets it exactly for the constructed colorings, which is
// what certifies their optimality.
int64_t lower_bound_certificate(const PathPowerGraph& g, const Layering& ly,
                                const RadioColoring& c);

}  // namespace radiopath
