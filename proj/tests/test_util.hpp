#pragma once

#include <algorithm>
#include <deque>
#include <random>
#include <vector>

#include "radiopath/chain.hpp"
#include "radiopath/oracle.hpp"
#include "radiopath/path_power.hpp"

namespace radiopath::testutil {

// Independent distance oracle: breadth-first search over the explicit
// adjacency rule |u - v| <= m.
inline int bfs_distance(const PathPowerGraph& g, int source, int target) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        if (u == target) return dist[u];
        for (int v = std::max(0, u - g.m); v <= std::min(g.n, u + g.m); ++v) {
            if (v != u && dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist[target];
}

// Independent alpha1 oracle, straight from its definition
// n(k + eps) - 2 * sum_i i * |L_i| over the actual layering.
inline long long alpha1_from_definition(int n, int m, int k) {
    const Layering ly{PathPowerGraph(n, m)};
    long long weighted = 0;
    for (int i = 0; i <= ly.q(); ++i)
        weighted += static_cast<long long>(i) * static_cast<long long>(ly.layers()[i].size());
    const int eps = ly.diam_even() ? 1 : 0;
    return static_cast<long long>(n) * (k + eps) - 2 * weighted;
}

// Exhaustive minimum span over all colorings with the given color order:
// tries every useful increment (1..k) at every step. Independent of the
// max-plus greedy it is used to check.
inline long long exhaustive_span_of_order(const PathPowerGraph& g, const std::vector<int>& order,
                                          int k) {
    const int n = g.n;
    std::vector<long long> colors(g.vertex_count(), 0);
    long long best = -1;

    auto feasible = [&](int idx) {
        for (int p = 0; p < idx; ++p) {
            const long long required = k + 1 - g.distance(order[p], order[idx]);
            if (colors[order[idx]] - colors[order[p]] < required) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, int idx) -> void {
        if (idx > n) {
            const long long span = colors[order[n]] - colors[order[0]];
            if (best < 0 || span < best) best = span;
            return;
        }
        for (int inc = 1; inc <= k; ++inc) {
            colors[order[idx]] = colors[order[idx - 1]] + inc;
            if (best >= 0 && colors[order[idx]] >= best) break;
            if (feasible(idx)) self(self, idx + 1);
        }
    };

    colors[order[0]] = 0;
    rec(rec, 1);
    return best;
}

// Valid colorings drawn by greedy-coloring random orders; validity follows
// from the full-history gap rule and is re-checked by callers.
inline RadioColoring random_valid_coloring(const PathPowerGraph& g, int k, std::mt19937& rng) {
    std::vector<int> order(g.vertex_count());
    for (int v = 0; v <= g.n; ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    return greedy_coloring_of_order(g, order, k);
}

}  // namespace radiopath::testutil
