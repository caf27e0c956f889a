#pragma once

#include <stdexcept>
#include <vector>

namespace radiopath {

// The m-th power of a path on n+1 vertices. Vertices sit at integer
// positions 0..n on an axis; two distinct vertices are adjacent iff their
// positions differ by at most m. The metric is closed-form, so no adjacency
// structure is ever materialized.
struct PathPowerGraph {
    int n = 0;  // highest position; the graph has n+1 vertices
    int m = 0;  // power, 1 <= m <= n

    PathPowerGraph(int n, int m);

    int vertex_count() const { return n + 1; }
    bool contains(int v) const { return v >= 0 && v <= n; }

    // Graph distance, ceil(|u - v| / m). Throws on out-of-range vertices.
    int distance(int u, int v) const;

    // ceil(n / m); also the maximum pairwise distance.
    int diameter() const;
};

// Validating construction. Rejects m > n (callers may note that
// P_n^m = P_n^n and resubmit with m = n).
PathPowerGraph build_graph(int n, int m);

// Layer structure of a path power around its central vertex set L_0.
//
// With diam = ceil(n/m) and q = floor(diam/2):
//   - even diam: L_0 = { qm }, the single central vertex c_0;
//   - odd diam:  L_0 = { qm, qm+1, ..., qm+m }, centrals c_0..c_m.
// L_i is the set of vertices at distance i from L_0. Vertices left of L_0
// in layer i are named l_i1..l_im by increasing position gap from c_0;
// right vertices are r_i1..r_im (r_q1..r_qs in the last layer, where
// s = (n+1) - (2q-1)m - |L_0|).
//
// Names are a view computed from positions; only the layer index per
// vertex and the layer sets are stored.
class Layering {
public:
    explicit Layering(const PathPowerGraph& g);

    int n() const { return n_; }
    int m() const { return m_; }
    int q() const { return q_; }
    int diam() const { return diam_; }
    bool diam_even() const { return diam_ % 2 == 0; }

    // Residual size of the outermost right block, in 1..m. Equals n mod m
    // when m does not divide n, and m when it does.
    int s_layer() const { return s_layer_; }
    // n mod m, kept separately so the two conventions never get conflated.
    int s_mod() const { return s_mod_; }

    // f(v): index of the layer containing v.
    int layer_of(int v) const;

    // L_0..L_q, each sorted by position.
    const std::vector<std::vector<int>>& layers() const { return layers_; }

    int central_count() const;           // 1 (even diam) or m+1 (odd diam)
    int left_count() const;              // q*m
    int right_count() const;             // (q-1)*m + s
    int right_cols(int i) const;         // columns present in row i: m, or s for i == q

    // Positions of the named vertices. All throw std::invalid_argument on
    // names that do not exist for this instance.
    int central(int t) const;            // c_t
    int left(int i, int j) const;        // l_ij, 1 <= i <= q, 1 <= j <= m
    int right(int i, int j) const;       // r_ij, 1 <= i <= q, 1 <= j <= right_cols(i)

    bool is_left(int v) const;           // position left of the central block
    bool is_right(int v) const;          // position right of the central block
    bool is_central(int v) const { return layer_of(v) == 0; }

private:
    int n_, m_, q_, diam_, s_layer_, s_mod_;
    int central_lo_, central_hi_;        // position range of L_0
    std::vector<int> layer_of_;
    std::vector<std::vector<int>> layers_;
};

Layering build_layering(const PathPowerGraph& g);

}  // namespace radiopath
