#include <doctest.h>

#include <numeric>

#include "radiopath/path_power.hpp"
#include "test_util.hpp"

using namespace radiopath;

TEST_CASE("graph construction validates its arguments") {
    CHECK(build_graph(4, 2).vertex_count() == 5);
    CHECK(build_graph(5, 3).vertex_count() == 6);
    CHECK_THROWS_AS(build_graph(4, 7), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(3, -1), std::invalid_argument);
}

TEST_CASE("closed-form distance") {
    CHECK(build_graph(6, 2).distance(1, 4) == 2);
    CHECK(build_graph(6, 2).distance(4, 1) == 2);
    CHECK(build_graph(9, 3).distance(5, 5) == 0);
    CHECK(build_graph(5, 3).distance(0, 5) == 2);
    CHECK_THROWS_AS(build_graph(5, 3).distance(0, 6), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(5, 3).distance(-1, 0), std::invalid_argument);
}

TEST_CASE("diameter equals ceil(n/m) and the brute-force maximum") {
    CHECK(build_graph(4, 2).diameter() == 2);
    CHECK(build_graph(5, 2).diameter() == 3);
    CHECK(build_graph(5, 3).diameter() == 2);

    for (int n = 1; n <= 40; ++n) {
        for (int m = 1; m <= n; ++m) {
            const PathPowerGraph g(n, m);
            int max_dist = 0;
            for (int u = 0; u <= n; ++u)
                for (int v = u + 1; v <= n; ++v) max_dist = std::max(max_dist, g.distance(u, v));
            CHECK(g.diameter() == max_dist);
        }
    }
}

TEST_CASE("closed-form distance equals breadth-first search") {
    for (int n = 1; n <= 20; ++n) {
        for (int m = 1; m <= n; ++m) {
            const PathPowerGraph g(n, m);
            for (int u = 0; u <= n; ++u)
                for (int v = 0; v <= n; ++v)
                    CHECK(g.distance(u, v) == testutil::bfs_distance(g, u, v));
        }
    }
}

TEST_CASE("distance is a metric") {
    for (int n = 1; n <= 20; ++n) {
        for (int m = 1; m <= n; ++m) {
            const PathPowerGraph g(n, m);
            for (int u = 0; u <= n; ++u) {
                CHECK(g.distance(u, u) == 0);
                for (int v = 0; v <= n; ++v) {
                    CHECK(g.distance(u, v) == g.distance(v, u));
                    if (u != v) CHECK(g.distance(u, v) > 0);
                    for (int w = 0; w <= n; ++w)
                        CHECK(g.distance(u, w) <= g.distance(u, v) + g.distance(v, w));
                }
            }
        }
    }
}

TEST_CASE("layering of (6,2): odd diameter names") {
    const PathPowerGraph g(6, 2);
    const Layering ly(g);
    CHECK(ly.diam() == 3);
    CHECK_FALSE(ly.diam_even());
    CHECK(ly.q() == 1);
    CHECK(ly.layers()[0] == std::vector<int>{2, 3, 4});
    CHECK(ly.central(0) == 2);
    CHECK(ly.central(1) == 3);
    CHECK(ly.central(2) == 4);
    CHECK(ly.left(1, 1) == 1);
    CHECK(ly.left(1, 2) == 0);
    CHECK(ly.right(1, 1) == 5);
    CHECK(ly.right(1, 2) == 6);
    CHECK(ly.s_layer() == 2);
    CHECK(ly.s_mod() == 0);
}

TEST_CASE("layering of (4,2): even diameter names") {
    const Layering ly{build_graph(4, 2)};
    CHECK(ly.diam() == 2);
    CHECK(ly.diam_even());
    CHECK(ly.q() == 1);
    CHECK(ly.layers()[0] == std::vector<int>{2});
    CHECK(ly.central(0) == 2);
    CHECK_THROWS_AS(ly.central(1), std::invalid_argument);
    CHECK(ly.left(1, 1) == 1);
    CHECK(ly.left(1, 2) == 0);
    CHECK(ly.right(1, 1) == 3);
    CHECK(ly.right(1, 2) == 4);
    CHECK(ly.s_layer() == 2);
}

TEST_CASE("layering of (7,3): residual block size") {
    const Layering ly{build_graph(7, 3)};
    CHECK(ly.diam() == 3);
    CHECK(ly.q() == 1);
    CHECK(ly.layers()[0] == std::vector<int>{3, 4, 5, 6});
    CHECK(ly.s_layer() == 1);
    CHECK(ly.s_mod() == 1);
    CHECK(ly.right_cols(1) == 1);
    CHECK(ly.right(1, 1) == 7);
    CHECK_THROWS_AS(ly.right(1, 2), std::invalid_argument);
}

TEST_CASE("layering invariants across the grid") {
    for (int n = 1; n <= 40; ++n) {
        for (int m = 1; m <= n; ++m) {
            const PathPowerGraph g(n, m);
            const Layering ly(g);
            const int diam = g.diameter();
            CHECK(ly.q() == diam / 2);

            // layer sizes and the partition of the vertex set
            CHECK(static_cast<int>(ly.layers()[0].size()) == (diam % 2 == 0 ? 1 : m + 1));
            std::size_t total = 0;
            for (const auto& layer : ly.layers()) total += layer.size();
            CHECK(total == static_cast<std::size_t>(n + 1));
            for (int i = 1; i + 1 <= ly.q(); ++i)
                CHECK(static_cast<int>(ly.layers()[i].size()) == 2 * m);
            if (ly.q() >= 1)
                CHECK(static_cast<int>(ly.layers()[ly.q()].size()) == m + ly.s_layer());

            // the two s conventions
            CHECK(ly.s_layer() == (n + 1) - (2 * ly.q() - 1) * m -
                                      static_cast<int>(ly.layers()[0].size()));
            if (n % m == 0)
                CHECK(ly.s_layer() == m);
            else
                CHECK(ly.s_layer() == n % m);
            CHECK(ly.s_mod() == n % m);
            CHECK(1 <= ly.s_layer());
            CHECK(ly.s_layer() <= m);

            // f is the distance to the nearest central vertex
            for (int v = 0; v <= n; ++v) {
                int nearest = diam + 1;
                for (int c : ly.layers()[0]) nearest = std::min(nearest, g.distance(v, c));
                CHECK(ly.layer_of(v) == nearest);
            }

            // named positions agree with the layer sets
            CHECK(ly.left_count() + ly.right_count() +
                      static_cast<int>(ly.layers()[0].size()) == n + 1);
            for (int i = 1; i <= ly.q(); ++i) {
                for (int j = 1; j <= m; ++j) CHECK(ly.layer_of(ly.left(i, j)) == i);
                for (int j = 1; j <= ly.right_cols(i); ++j)
                    CHECK(ly.layer_of(ly.right(i, j)) == i);
            }
        }
    }
}

TEST_CASE("layer indices bound distances both ways") {
    for (int n = 1; n <= 40; ++n) {
        for (int m = 1; m <= n; ++m) {
            const PathPowerGraph g(n, m);
            const Layering ly(g);
            const int slack = g.diameter() % 2 == 0 ? 0 : 1;
            for (int u = 0; u <= n; ++u) {
                for (int v = 0; v <= n; ++v) {
                    const int d = g.distance(u, v);
                    CHECK(std::abs(ly.layer_of(u) - ly.layer_of(v)) <= d);
                    if (u != v) CHECK(d <= ly.layer_of(u) + ly.layer_of(v) + slack);
                }
            }
        }
    }
}
