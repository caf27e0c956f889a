#include "radiopath/chain.hpp"

#include <algorithm>
#include <string>

namespace radiopath {

namespace {

void require_same_side(const NamedVertex& a, const NamedVertex& b) {
    if (a.side != b.side)
        throw std::invalid_argument("order is defined within one side only");
}

// j ascending; within a column, rows run upward or downward depending on
// the column's sign.
bool column_major_less(const NamedVertex& a, const NamedVertex& b, bool odd_exponent_a,
                       bool odd_exponent_b) {
    if (a.j != b.j) return a.j < b.j;
    const int sa = odd_exponent_a ? -1 : 1;
    const int sb = odd_exponent_b ? -1 : 1;
    return sa * a.i < sb * b.i;
}

}  // namespace

bool prec1_less(const NamedVertex& a, const NamedVertex& b) {
    require_same_side(a, b);
    // sign (-1)^(j-1): negative for even columns
    return column_major_less(a, b, a.j % 2 == 0, b.j % 2 == 0);
}

bool prec2_less(const NamedVertex& a, const NamedVertex& b, int m) {
    require_same_side(a, b);
    // sign (-1)^(m-j): negative when m and j have opposite parity
    return column_major_less(a, b, (m - a.j) % 2 != 0, (m - b.j) % 2 != 0);
}

namespace {

int position_of(const Layering& ly, const NamedVertex& v) {
    if (v.side == Side::Left) return ly.left(v.i, v.j);
    if (v.i == 0) return ly.central(v.j);  // renamed central, odd diameter only
    return ly.right(v.i, v.j);
}

std::vector<NamedVertex> all_lefts(const Layering& ly) {
    std::vector<NamedVertex> out;
    for (int i = 1; i <= ly.q(); ++i)
        for (int j = 1; j <= ly.m(); ++j) out.push_back({Side::Left, i, j});
    return out;
}

std::vector<NamedVertex> all_rights(const Layering& ly) {
    std::vector<NamedVertex> out;
    for (int i = 1; i <= ly.q(); ++i)
        for (int j = 1; j <= ly.right_cols(i); ++j) out.push_back({Side::Right, i, j});
    return out;
}

// (a_1, b_1, ..., a_p, b_p): a's ascending by prec1, b's descending by prec2.
std::vector<int> interleave(const Layering& ly, std::vector<NamedVertex> ascending,
                            std::vector<NamedVertex> descending) {
    if (ascending.size() != descending.size())
        throw std::invalid_argument("alternating chain needs equally many vertices per side (" +
                                    std::to_string(ascending.size()) + " vs " +
                                    std::to_string(descending.size()) + ")");
    std::sort(ascending.begin(), ascending.end(), prec1_less);
    std::sort(descending.begin(), descending.end(),
              [&](const NamedVertex& a, const NamedVertex& b) { return prec2_less(b, a, ly.m()); });

    std::vector<int> chain;
    chain.reserve(2 * ascending.size());
    for (std::size_t idx = 0; idx < ascending.size(); ++idx) {
        chain.push_back(position_of(ly, ascending[idx]));
        chain.push_back(position_of(ly, descending[idx]));
    }
    return chain;
}

}  // namespace

std::vector<int> special_chain(const Layering& ly) {
    return interleave(ly, all_rights(ly), all_lefts(ly));
}

std::vector<int> reverse_chain(const Layering& ly) {
    return interleave(ly, all_lefts(ly), all_rights(ly));
}

ColorSequence case_sequence(const PathPowerGraph& g, const Layering& ly) {
    const CaseTag tag = case_of(g.n, g.m);
    const int s = ly.s_layer();
    const int m = g.m;

    std::vector<int> order;
    order.reserve(g.vertex_count());

    if (tag.parity == DiamParity::Even && tag.divisibility == Divisibility::Divides) {
        order = special_chain(ly);
        order.push_back(ly.central(0));
    } else if (tag.parity == DiamParity::Odd && tag.divisibility == Divisibility::Divides) {
        order.push_back(ly.central(m));
        const std::vector<int> chain = reverse_chain(ly);
        order.insert(order.end(), chain.begin(), chain.end());
        for (int t = 0; t < m; ++t) order.push_back(ly.central(t));
    } else if (tag.parity == DiamParity::Odd) {
        // Centrals c_{s+1}..c_m stand in for the missing right vertices.
        std::vector<NamedVertex> rights = all_rights(ly);
        for (int j = s + 1; j <= m; ++j) rights.push_back({Side::Right, 0, j});
        order = interleave(ly, all_lefts(ly), std::move(rights));
        for (int t = 0; t <= s; ++t) order.push_back(ly.central(t));
    } else {
        // Withhold l_11..l_1(m-s) from the chain; they follow c_0 at the end.
        std::vector<NamedVertex> lefts;
        for (int i = 1; i <= ly.q(); ++i)
            for (int j = 1; j <= m; ++j)
                if (i != 1 || j > m - s) lefts.push_back({Side::Left, i, j});
        order = interleave(ly, all_rights(ly), std::move(lefts));
        order.push_back(ly.central(0));
        for (int j = 1; j <= m - s; ++j) order.push_back(ly.left(1, j));
    }

    return ColorSequence{std::move(order), ColorSequence::Provenance::Constructed};
}

int64_t RadioColoring::span() const {
    if (colors.empty()) return 0;
    const auto [lo, hi] = std::minmax_element(colors.begin(), colors.end());
    return *hi - *lo;
}

namespace {

void require_permutation(const PathPowerGraph& g, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != g.vertex_count())
        throw std::invalid_argument("sequence must list all " +
                                    std::to_string(g.vertex_count()) + " vertices");
    std::vector<bool> seen(g.vertex_count(), false);
    for (int v : order) {
        if (!g.contains(v) || seen[v])
            throw std::invalid_argument("sequence is not a permutation of 0..n");
        seen[v] = true;
    }
}

}  // namespace

RadioColoring greedy_color(const PathPowerGraph& g, const ColorSequence& seq, int k) {
    if (k < 1) throw std::invalid_argument("k must be a positive integer");
    require_permutation(g, seq.order);

    RadioColoring col;
    col.k = k;
    col.colors.assign(g.vertex_count(), 0);
    int64_t c = 0;
    col.colors[seq.order.front()] = 0;
    for (std::size_t i = 1; i < seq.order.size(); ++i) {
        c += k + 1 - g.distance(seq.order[i - 1], seq.order[i]);
        col.colors[seq.order[i]] = c;
    }
    return col;
}

RadioColoring construct_optimal(int n, int m, int k, bool checked) {
    if (checked && !hypothesis_holds(n, m, k))
        throw HypothesisError("k = " + std::to_string(k) + " is below the certified threshold " +
                              std::to_string(hypothesis_min_k(n, m)) + " for n = " +
                              std::to_string(n) + ", m = " + std::to_string(m));
    const PathPowerGraph g(n, m);
    const Layering ly(g);
    return greedy_color(g, case_sequence(g, ly), k);
}

}  // namespace radiopath
