#pragma once

#include <cstdint>
#include <vector>

#include "radiopath/path_power.hpp"
#include "radiopath/span_formula.hpp"

namespace radiopath {

enum class Side { Left, Right };

// A vertex addressed by its layer name: side, layer row i, column j.
// Row 0 only occurs for centrals temporarily counted as right vertices in
// the odd, non-dividing construction.
struct NamedVertex {
    Side side;
    int i;
    int j;

    bool operator==(const NamedVertex&) const = default;
};

// Column-major order with alternating row direction: a < b iff j < j', or
// j == j' and (-1)^(j-1) i < (-1)^(j'-1) i'. Both arguments must be on the
// same side.
bool prec1_less(const NamedVertex& a, const NamedVertex& b);

// Same shape but the row direction alternates relative to the last column:
// j < j', or j == j' and (-1)^(m-j) i < (-1)^(m-j') i'.
bool prec2_less(const NamedVertex& a, const NamedVertex& b, int m);

struct ColorSequence {
    enum class Provenance { Constructed, FromColoring };

    std::vector<int> order;  // v_0..v_n, a permutation of 0..n
    Provenance provenance = Provenance::Constructed;
};

// Interleaving (a_1, b_1, ..., a_p, b_p) of the right vertices ascending by
// prec1 with the left vertices descending by prec2. Requires equally many
// vertices on both sides.
std::vector<int> special_chain(const Layering& ly);

// Mirror image: left vertices ascending by prec1 interleaved with right
// vertices descending by prec2.
std::vector<int> reverse_chain(const Layering& ly);

// The optimal vertex ordering, by case:
//   even, m | n:  special chain, then c_0;
//   odd,  m | n:  c_m, the reverse chain, then (c_0, ..., c_{m-1});
//   odd,  m ∤ n:  reverse chain with c_{s+1}..c_m counted as right vertices
//                 r_{0,s+1}..r_{0,m}, then (c_0, ..., c_s);
//   even, m ∤ n:  special chain with l_11..l_1(m-s) withheld, then
//                 (c_0, l_11, ..., l_1(m-s)).
// The renamed / withheld vertices are handled as views; the layering is
// never modified.
ColorSequence case_sequence(const PathPowerGraph& g, const Layering& ly);

// An assignment of non-negative integer colors, indexed by position.
struct RadioColoring {
    int k = 0;
    std::vector<int64_t> colors;  // colors[v] for v = 0..n

    int64_t span() const;
};

// The recursive coloring psi along a sequence: psi(v_0) = 0 and
// psi(v_{i+1}) = psi(v_i) + k + 1 - d(v_i, v_{i+1}).
RadioColoring greedy_color(const PathPowerGraph& g, const ColorSequence& seq, int k);

// case_sequence + greedy_color. With checked (the default) the k-threshold
// is enforced and the result is a valid radio k-coloring whose span equals
// closed_form_span(..., Consistent).
RadioColoring construct_optimal(int n, int m, int k, bool checked = true);

}  // namespace radiopath
