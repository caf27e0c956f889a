#include "radiopath/verify.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace radiopath {

namespace {

void require_cover(const PathPowerGraph& g, const RadioColoring& c) {
    if (static_cast<int>(c.colors.size()) != g.vertex_count())
        throw std::invalid_argument("coloring must assign a color to each of the " +
                                    std::to_string(g.vertex_count()) + " vertices");
    for (int64_t x : c.colors)
        if (x < 0) throw std::invalid_argument("colors must be non-negative");
    if (c.k < 1) throw std::invalid_argument("k must be a positive integer");
}

}  // namespace

ValidityReport check_coloring(const PathPowerGraph& g, const RadioColoring& c) {
    require_cover(g, c);

    ValidityReport report;
    report.span = c.span();
    for (int u = 0; u <= g.n; ++u) {
        for (int v = u + 1; v <= g.n; ++v) {
            const int d = g.distance(u, v);
            const int64_t required = static_cast<int64_t>(c.k) + 1 - d;
            const int64_t gap = std::abs(c.colors[u] - c.colors[v]);
            if (gap < required) report.violations.push_back({u, v, d, gap, required});
        }
    }
    report.valid = report.violations.empty();
    return report;
}

ColorSequence sequence_of(const RadioColoring& c) {
    std::vector<int> order(c.colors.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return c.colors[a] < c.colors[b]; });
    for (std::size_t i = 1; i < order.size(); ++i)
        if (c.colors[order[i - 1]] == c.colors[order[i]])
            throw std::invalid_argument("coloring has tied colors; no color sequence exists");
    return ColorSequence{std::move(order), ColorSequence::Provenance::FromColoring};
}

PairClass classify_pair(const PathPowerGraph& g, const Layering& ly,
                        const RadioColoring& c, int vi, int vj) {
    require_cover(g, c);
    if (!g.contains(vi) || !g.contains(vj))
        throw std::invalid_argument("vertex out of range");
    if (c.colors[vi] >= c.colors[vj])
        throw std::invalid_argument("pair must be given in increasing color order");
    for (int w = 0; w <= g.n; ++w)
        if (c.colors[w] > c.colors[vi] && c.colors[w] < c.colors[vj])
            throw std::invalid_argument("pair is not consecutive in the color sequence");

    const int64_t gap = c.colors[vj] - c.colors[vi];
    const int64_t bound = static_cast<int64_t>(c.k) - ly.layer_of(vi) - ly.layer_of(vj) +
                          parity_epsilon(g);
    if (gap < bound)
        throw std::invalid_argument("consecutive gap below the layer bound; "
                                    "not a valid radio coloring");
    return gap == bound ? PairClass::Optimal : PairClass::Loose;
}

Decomposition decompose(const PathPowerGraph& g, const Layering& ly, const RadioColoring& c) {
    const ColorSequence seq = sequence_of(c);
    const auto& order = seq.order;
    const int n = g.n;
    const int eps = parity_epsilon(g);

    Decomposition dec;
    dec.pair_classes.reserve(n);
    for (int i = 0; i < n; ++i) {
        const int64_t gap = c.colors[order[i + 1]] - c.colors[order[i]];
        const int64_t bound = static_cast<int64_t>(c.k) - ly.layer_of(order[i]) -
                              ly.layer_of(order[i + 1]) + eps;
        if (gap < bound)
            throw std::invalid_argument("consecutive gap below the layer bound; "
                                        "not a valid radio coloring");
        dec.pair_classes.push_back(gap == bound ? PairClass::Optimal : PairClass::Loose);
    }

    // Walk the sequence grouping maximal stretches of optimal pairs into X
    // runs; everything in between (possibly nothing) forms the Y runs.
    int pos = 0;
    while (pos <= n) {
        Run loose{RunKind::Loose, {}};
        while (pos <= n) {
            const bool starts_optimal = pos < n && dec.pair_classes[pos] == PairClass::Optimal;
            if (starts_optimal) break;
            loose.vertices.push_back(order[pos]);
            ++pos;
        }
        dec.loose_lengths.push_back(static_cast<int>(loose.vertices.size()));
        dec.runs.push_back(std::move(loose));
        if (pos > n) break;

        Run optimal{RunKind::Optimal, {order[pos]}};
        while (pos < n && dec.pair_classes[pos] == PairClass::Optimal) {
            optimal.vertices.push_back(order[pos + 1]);
            ++pos;
        }
        ++pos;  // the run consumed vertices up to index pos-1
        dec.runs.push_back(std::move(optimal));
        ++dec.t;
    }
    // A trailing optimal run needs its (empty) Y_t after it.
    if (dec.runs.back().kind == RunKind::Optimal) {
        dec.runs.push_back(Run{RunKind::Loose, {}});
        dec.loose_lengths.push_back(0);
    }

    int64_t loose_sum = 0;
    for (int len : dec.loose_lengths) loose_sum += len;
    dec.alpha2 = ly.layer_of(order.front()) + ly.layer_of(order.back()) + loose_sum + dec.t - 1;

    // The accounting identity: loose pairs number (t - 1) + sum |Y_i|.
    int64_t direct = 0;
    for (PairClass pc : dec.pair_classes)
        if (pc == PairClass::Loose) ++direct;
    if (direct != dec.t - 1 + loose_sum)
        throw std::logic_error("loose pair accounting identity violated");

    if (ly.diam_even())
        for (const Run& run : dec.runs)
            if (run.kind == RunKind::Optimal) dec.polarities.push_back(run_polarity(run, ly));

    return dec;
}

Polarity run_polarity(const Run& run, const Layering& ly) {
    if (!ly.diam_even())
        throw std::domain_error("run polarity is defined for even diameters only");
    if (run.kind != RunKind::Optimal || run.vertices.size() < 2)
        throw std::invalid_argument("polarity applies to optimal runs of length >= 2");

    int lefts = 0, others = 0;
    for (int v : run.vertices) (ly.is_left(v) ? lefts : others)++;
    if (lefts > others) return Polarity::Leftist;
    if (lefts == others) return Polarity::Balanced;
    return Polarity::Rightist;
}

int64_t lower_bound_certificate(const PathPowerGraph& g, const Layering& ly,
                                const RadioColoring& c) {
    return alpha1(g.n, g.m, c.k) + decompose(g, ly, c).alpha2;
}

}  // namespace radiopath
