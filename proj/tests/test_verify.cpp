#include <doctest.h>

#include <random>

#include "radiopath/oracle.hpp"
#include "radiopath/verify.hpp"
#include "test_util.hpp"

using namespace radiopath;

TEST_CASE("coloring check accepts and rejects") {
    const PathPowerGraph g(4, 2);

    const RadioColoring good{3, {2, 6, 9, 0, 4}};
    const ValidityReport ok = check_coloring(g, good);
    CHECK(ok.valid);
    CHECK(ok.span == 9);
    CHECK(ok.violations.empty());

    const RadioColoring bad{3, {0, 1, 2, 3, 4}};
    const ValidityReport r = check_coloring(g, bad);
    CHECK_FALSE(r.valid);
    REQUIRE_FALSE(r.violations.empty());
    // adjacent pair (0,1) needs a gap of 3
    const Violation& v = r.violations.front();
    CHECK(v.u == 0);
    CHECK(v.v == 1);
    CHECK(v.distance == 1);
    CHECK(v.gap == 1);
    CHECK(v.required == 3);

    CHECK_THROWS_AS(check_coloring(g, RadioColoring{3, {0, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(check_coloring(g, RadioColoring{3, {0, 3, 6, 9, -1}}), std::invalid_argument);
}

TEST_CASE("constructed colorings pass the check") {
    CHECK(check_coloring(build_graph(4, 2), construct_optimal(4, 2, 3)).valid);
    CHECK(check_coloring(build_graph(6, 2), construct_optimal(6, 2, 5)).valid);
    CHECK(check_coloring(build_graph(5, 3), construct_optimal(5, 3, 3)).valid);
}

TEST_CASE("color sequence extraction") {
    CHECK(sequence_of(RadioColoring{3, {2, 6, 9, 0, 4}}).order ==
          std::vector<int>{3, 0, 4, 1, 2});
    CHECK(sequence_of(RadioColoring{3, {5, 0}}).order == std::vector<int>{1, 0});
    CHECK_THROWS_AS(sequence_of(RadioColoring{3, {2, 6, 2, 0, 4}}), std::invalid_argument);
}

TEST_CASE("pair classification against the layer bound") {
    const PathPowerGraph g42(4, 2);
    const Layering ly42(g42);
    const RadioColoring c42 = construct_optimal(4, 2, 3);
    CHECK(classify_pair(g42, ly42, c42, 3, 0) == PairClass::Optimal);
    CHECK_THROWS_AS(classify_pair(g42, ly42, c42, 3, 4), std::invalid_argument);  // not consecutive
    CHECK_THROWS_AS(classify_pair(g42, ly42, c42, 0, 3), std::invalid_argument);  // wrong order

    const PathPowerGraph g53(5, 3);
    const Layering ly53(g53);
    const RadioColoring c53 = construct_optimal(5, 3, 3);
    CHECK(classify_pair(g53, ly53, c53, 3, 2) == PairClass::Optimal);  // (c_0, l_11)

    // consecutive left vertices exceed the bound by one: gap k vs k-1
    const PathPowerGraph g54(5, 4);
    const Layering ly54(g54);
    const RadioColoring c54 = construct_optimal(5, 4, 3);
    CHECK(classify_pair(g54, ly54, c54, 3, 2) == PairClass::Loose);
    CHECK(classify_pair(g54, ly54, c54, 2, 1) == PairClass::Loose);
}

TEST_CASE("decomposition of the constructed colorings") {
    const PathPowerGraph g42(4, 2);
    const Layering ly42(g42);
    const Decomposition d42 = decompose(g42, ly42, construct_optimal(4, 2, 3));
    CHECK(d42.t == 1);
    CHECK(d42.loose_lengths == std::vector<int>{0, 0});
    CHECK(d42.alpha2 == 1);
    REQUIRE(d42.runs.size() == 3);
    CHECK(d42.runs[1].vertices == std::vector<int>{3, 0, 4, 1, 2});
    REQUIRE(d42.polarities.size() == 1);
    CHECK(d42.polarities[0] == Polarity::Rightist);

    const PathPowerGraph g53(5, 3);
    const Decomposition d53 = decompose(g53, Layering(g53), construct_optimal(5, 3, 3));
    CHECK(d53.t == 1);
    CHECK(d53.alpha2 == 2);
    for (PairClass pc : d53.pair_classes) CHECK(pc == PairClass::Optimal);

    // m - s - 1 = 2 loose pairs, exactly the consecutive withheld lefts
    const PathPowerGraph g54(5, 4);
    const Decomposition d54 = decompose(g54, Layering(g54), construct_optimal(5, 4, 3));
    int loose_pairs = 0;
    for (PairClass pc : d54.pair_classes)
        if (pc == PairClass::Loose) ++loose_pairs;
    CHECK(loose_pairs == 2);
    CHECK(d54.alpha2 == 4);  // m - s + 1
}

TEST_CASE("outside the even/not-dividing case the construction is one optimal run") {
    for (int n = 1; n <= 40; ++n) {
        for (int m = 1; m <= std::min(n, 10); ++m) {
            if (case_of(n, m) == CaseTag{DiamParity::Even, Divisibility::NotDivides}) continue;
            const PathPowerGraph g(n, m);
            const Layering ly(g);
            const int k = hypothesis_min_k(n, m);
            const Decomposition d = decompose(g, ly, construct_optimal(n, m, k));
            REQUIRE(d.t == 1);
            for (PairClass pc : d.pair_classes) REQUIRE(pc == PairClass::Optimal);
        }
    }
}

TEST_CASE("run polarity") {
    const Layering ly{build_graph(4, 2)};

    CHECK(run_polarity(Run{RunKind::Optimal, {3, 0, 4, 1}}, ly) == Polarity::Balanced);
    CHECK(run_polarity(Run{RunKind::Optimal, {3, 0, 4, 1, 2}}, ly) == Polarity::Rightist);
    CHECK(run_polarity(Run{RunKind::Optimal, {0, 3, 1}}, ly) == Polarity::Leftist);
    CHECK_THROWS_AS(run_polarity(Run{RunKind::Optimal, {1}}, ly), std::invalid_argument);
    CHECK_THROWS_AS(run_polarity(Run{RunKind::Loose, {0, 1}}, ly), std::invalid_argument);

    const Layering odd{build_graph(6, 2)};
    CHECK_THROWS_AS(run_polarity(Run{RunKind::Optimal, {1, 6}}, odd), std::domain_error);
}

TEST_CASE("certificate equals span for constructed colorings") {
    const PathPowerGraph g42(4, 2);
    CHECK(lower_bound_certificate(g42, Layering(g42), construct_optimal(4, 2, 3)) == 9);
    const PathPowerGraph g53(5, 3);
    CHECK(lower_bound_certificate(g53, Layering(g53), construct_optimal(5, 3, 3)) == 12);
}

TEST_CASE("properties of random valid colorings") {
    std::mt19937 rng(20260808);
    for (const auto& [n, m] : std::vector<std::pair<int, int>>{
             {4, 2}, {5, 3}, {6, 2}, {7, 3}, {8, 3}, {9, 4}, {10, 3}}) {
        const PathPowerGraph g(n, m);
        const Layering ly(g);
        const int eps = parity_epsilon(g);
        for (int trial = 0; trial < 200; ++trial) {
            const int k = hypothesis_min_k(n, m) + trial % 3;
            const RadioColoring c = testutil::random_valid_coloring(g, k, rng);
            REQUIRE(check_coloring(g, c).valid);

            const ColorSequence seq = sequence_of(c);

            // distinct colors throughout (k > diam)
            for (std::size_t i = 1; i < seq.order.size(); ++i)
                REQUIRE(c.colors[seq.order[i - 1]] < c.colors[seq.order[i]]);

            // consecutive gaps respect the layer bound
            for (std::size_t i = 0; i + 1 < seq.order.size(); ++i) {
                const int64_t gap = c.colors[seq.order[i + 1]] - c.colors[seq.order[i]];
                REQUIRE(gap >= k - ly.layer_of(seq.order[i]) - ly.layer_of(seq.order[i + 1]) +
                                   eps);
            }

            const Decomposition dec = decompose(g, ly, c);

            // flattening the runs reproduces the sequence
            std::vector<int> flat;
            for (const Run& run : dec.runs)
                flat.insert(flat.end(), run.vertices.begin(), run.vertices.end());
            REQUIRE(flat == seq.order);
            REQUIRE(dec.runs.size() == static_cast<std::size_t>(2 * dec.t + 1));

            // re-classifying every consecutive pair reproduces the classes
            for (std::size_t i = 0; i + 1 < seq.order.size(); ++i)
                REQUIRE(classify_pair(g, ly, c, seq.order[i], seq.order[i + 1]) ==
                        dec.pair_classes[i]);

            REQUIRE(dec.alpha2 >= alpha2_lower_bound(n, m));
            REQUIRE(lower_bound_certificate(g, ly, c) <= c.span());
        }
    }
}
