#include <doctest.h>

#include "chroma/coloring.hpp"
#include "oracles.hpp"

using namespace chroma;

namespace {

Coloring col(std::vector<int> a) { return Coloring::from_assignment(std::move(a)); }

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

}  // namespace

TEST_CASE("coloring construction keeps theta consistent") {
    Coloring c = col({0, 1, 0, 2});
    CHECK(c.colour_count == 3);
    CHECK(c.theta == std::vector<int>{2, 1, 1});
    CHECK_THROWS_AS(col({0, 2}), std::invalid_argument);  // colour 1 unused
    CHECK_THROWS_AS(col({-1, 0}), std::invalid_argument);
}

TEST_CASE("is_proper and bad_edges") {
    CHECK(is_proper(make_cycle(4), col({0, 1, 0, 1})));
    CHECK_FALSE(is_proper(make_complete(3), col({0, 0, 1})));
    CHECK(is_proper(Graph(3), col({0, 0, 0})));

    CHECK(bad_edges(make_complete(3), col({0, 0, 1})) == std::vector<Edge>{{0, 1}});
    CHECK(bad_edges(make_cycle(4), col({0, 1, 0, 1})).empty());
    CHECK(bad_edges(make_cycle(5), col({0, 1, 0, 1, 0})) == std::vector<Edge>{{0, 4}});

    CHECK_THROWS_AS(is_proper(make_cycle(4), col({0, 1, 0})), std::invalid_argument);
}

TEST_CASE("chromatic number fixtures") {
    CHECK(chromatic_number(Graph(0)) == 0);
    CHECK(chromatic_number(Graph(6)) == 1);
    CHECK(chromatic_number(make_path(2)) == 2);
    CHECK(chromatic_number(make_cycle(5)) == 3);
    CHECK(chromatic_number(make_cycle(6)) == 2);
    CHECK(chromatic_number(make_complete(4)) == 4);
    CHECK(chromatic_number(petersen()) == 3);
    CHECK(chromatic_number(make_complete_multipartite({2, 2, 2})) == 3);
}

TEST_CASE("chromatic number matches the brute-force oracle exhaustively to order 5") {
    for (int n = 1; n <= 5; ++n)
        for_each_graph(n, false, [&](const Graph& g) {
            CHECK(chromatic_number(g) == oracles::brute_chromatic_number(g));
            return true;
        });
}

TEST_CASE("join and union chromatic identities on random pairs") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Graph g = make_random(static_cast<int>(seed % 5) + 2, 0.5, seed);
        Graph h = make_random(static_cast<int>(seed % 4) + 2, 0.4, seed + 50);
        CHECK(chromatic_number(join(g, h)) == chromatic_number(g) + chromatic_number(h));
        CHECK(chromatic_number(disjoint_union(g, h)) ==
              std::max(chromatic_number(g), chromatic_number(h)));
    }
}

TEST_CASE("canonical chromatic colouring enumeration") {
    CHECK(chromatic_colorings(make_path(4)).size() == 1);   // unique bipartition
    CHECK(chromatic_colorings(make_cycle(5)).size() == 5);  // 30 colourings / 3!
    CHECK(chromatic_colorings(make_complete(3)).size() == 1);

    // Every representative is proper, uses exactly chi colours, every class
    // nonempty, and appears in first-use canonical order.
    for (const Graph& g : {make_cycle(5), make_cycle(6), petersen()}) {
        int chi = chromatic_number(g);
        int seen = 0;
        for_each_chromatic_coloring(g, [&](const Coloring& c) {
            ++seen;
            CHECK(is_proper(g, c));
            CHECK(c.colour_count == chi);
            for (int t : c.theta) CHECK(t >= 1);
            int max_seen = -1;
            for (int colour : c.assignment) {
                CHECK(colour <= max_seen + 1);
                max_seen = std::max(max_seen, colour);
            }
            return true;
        });
        CHECK(seen > 0);
    }

    CHECK_THROWS_AS(chromatic_colorings(make_path(13)), CapExceeded);
    CHECK(chromatic_colorings(make_path(13), 13).size() == 1);  // cap is adjustable
}

TEST_CASE("counting proper colourings") {
    CHECK(count_proper_colorings(make_cycle(5), 3) == 30);  // (k-1)^n + (-1)^n (k-1)
    CHECK(count_proper_colorings(make_complete(3), 3) == 6);
    CHECK(count_proper_colorings(make_path(4), 2) == 2);  // k(k-1)^{n-1}
    CHECK(count_proper_colorings(make_cycle(6), 2) == 2);
    CHECK(count_proper_colorings(Graph(3), 2) == 8);
    CHECK(count_proper_colorings(Graph(0), 5) == 1);
    CHECK(count_proper_colorings(make_complete(3), 2) == 0);
    CHECK_THROWS_AS(count_proper_colorings(make_path(13), 2), CapExceeded);

    for (int n = 1; n <= 4; ++n)
        for_each_graph(n, false, [&](const Graph& g) {
            for (int k = 0; k <= 4; ++k)
                CHECK(count_proper_colorings(g, k) == oracles::brute_count_proper(g, k));
            return true;
        });
}

TEST_CASE("surjective-count identity: canonical orbits times k! (inclusion-exclusion oracle)") {
    auto binomial = [](int a, int b) {
        std::uint64_t r = 1;
        for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
        return r;
    };
    auto factorial = [](int k) {
        std::uint64_t r = 1;
        for (int i = 2; i <= k; ++i) r *= i;
        return r;
    };
    std::vector<Graph> samples = {make_cycle(5),     make_cycle(8),       make_path(7),
                                  petersen(),        make_complete(5),    make_star(6),
                                  make_wheel(5),     make_random(8, 0.5, 7), make_random(8, 0.3, 9),
                                  make_random(7, 0.6, 3)};
    for (const Graph& g : samples) {
        int chi = chromatic_number(g);
        for (int k = chi; k <= chi + 1; ++k) {
            std::uint64_t canonical = 0;
            for_each_coloring_with(g, k, [&](const Coloring&) {
                ++canonical;
                return true;
            });
            // Surjective proper colourings with palette [k], by inclusion-
            // exclusion over the brute-force recursion.
            std::int64_t surjective = 0;
            for (int i = 0; i <= k; ++i) {
                std::int64_t term = static_cast<std::int64_t>(
                    binomial(k, i) * oracles::brute_count_proper(g, k - i));
                surjective += (i % 2 == 0) ? term : -term;
            }
            CHECK(canonical * factorial(k) == static_cast<std::uint64_t>(surjective));
        }
    }
}

TEST_CASE("partition_of quotients out colour interchange") {
    VertexPartition p = partition_of(col({0, 1, 0, 1}));
    CHECK(p.classes == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
    CHECK(partition_of(col({1, 0, 1, 0})) == p);  // swapped colours, same value
    CHECK(partition_of(col({0, 1, 2})).classes.size() == 3);

    CHECK(p.to_coloring() == col({0, 1, 0, 1}));
    CHECK(p.class_sizes() == std::vector<int>{2, 2});
}
