#include <doctest.h>

#include "chroma/completion.hpp"
#include "chroma/graph_io.hpp"
#include "oracles.hpp"

using namespace chroma;

namespace {

Coloring col(std::vector<int> a) { return Coloring::from_assignment(std::move(a)); }

// Set-of-partitions view of a CompletionResult for oracle comparison.
oracles::PartitionSet partition_set(const CompletionResult& r) {
    oracles::PartitionSet out;
    for (const auto& p : r.lucky_partitions) out.insert(p.classes);
    return out;
}

}  // namespace

TEST_CASE("pseudo completion size") {
    CHECK(pseudo_completion_size({2, 2}) == 4);
    CHECK(pseudo_completion_size({1, 1, 1, 1}) == 6);
    CHECK(pseudo_completion_size({3, 2, 2}) == 16);  // 6+6+4 = (49-17)/2
    CHECK(pseudo_completion_size({}) == 0);
    CHECK(pseudo_completion_size({5}) == 0);
    CHECK_THROWS_AS(pseudo_completion_size({2, 0}), std::invalid_argument);
}

TEST_CASE("completion edges") {
    CHECK(completion_edges(make_path(4), col({0, 1, 0, 1})) == std::vector<Edge>{{0, 3}});
    CHECK(completion_edges(make_complete(3), col({0, 1, 2})).empty());
    CHECK(completion_edges(make_cycle(4), col({0, 1, 0, 1})).empty());  // C_4 fills K_{2,2}
    CHECK_THROWS_WITH_AS(completion_edges(make_complete(3), col({0, 0, 1})),
                         doctest::Contains("(0,1)"), std::invalid_argument);
}

TEST_CASE("zeta on fixtures") {
    for (int n = 2; n <= 8; ++n) {
        CompletionResult r = zeta(make_complete(n));
        CHECK(r.zeta == 0);
        CHECK(r.lucky_partitions.size() == 1);
        CHECK(r.witness_edge_sets.front().empty());
    }
    CHECK(zeta(make_complete_multipartite({2, 2, 2})).zeta == 0);

    CompletionResult c5 = zeta(make_cycle(5));
    CHECK(c5.zeta == 3);
    CHECK(c5.chi == 3);
    CHECK(c5.epsilon == 5);
    CHECK(c5.lucky_partitions.size() == 5);
    for (const auto& p : c5.lucky_partitions) {
        auto sizes = p.class_sizes();
        std::sort(sizes.begin(), sizes.end());
        CHECK(sizes == std::vector<int>{1, 2, 2});
    }

    CompletionResult p4 = zeta(make_path(4));
    CHECK(p4.zeta == 1);
    CHECK(p4.lucky_partitions.size() == 1);
    CHECK(p4.witness_edge_sets.front() == std::vector<Edge>{{0, 3}});

    CHECK(zeta(Graph(5)).zeta == 0);  // edgeless: one class, nothing to add
    CHECK(zeta(Graph(0)).zeta == 0);
}

TEST_CASE("zeta invariants for each optimal partition") {
    for (const Graph& g :
         {make_cycle(5), make_cycle(6), make_path(5), make_random(6, 0.4, 11),
          make_random(7, 0.5, 12), Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}})}) {
        CompletionResult r = zeta(g);
        REQUIRE(!r.lucky_partitions.empty());
        CHECK(std::is_sorted(r.lucky_partitions.begin(), r.lucky_partitions.end()));
        for (std::size_t i = 0; i < r.lucky_partitions.size(); ++i) {
            // Sum-product of class sizes minus epsilon reproduces zeta.
            CHECK(pseudo_completion_size(r.lucky_partitions[i].class_sizes()) - r.epsilon ==
                  r.zeta);
            CHECK(static_cast<int>(r.witness_edge_sets[i].size()) == r.zeta);
            // Witness edges are non-edges joining distinct classes, and adding
            // them leaves the colouring bad-edge-free.
            Graph completed = g;
            Coloring c = r.lucky_partitions[i].to_coloring();
            for (auto [u, v] : r.witness_edge_sets[i]) {
                CHECK_FALSE(g.adjacent(u, v));
                CHECK(c.assignment[u] != c.assignment[v]);
                completed.add_edge(u, v);
            }
            CHECK(bad_edges(completed, c).empty());
        }
    }
}

TEST_CASE("zeta agrees with the assignment-sweep oracle on every graph up to order 5") {
    for (int n = 1; n <= 5; ++n)
        for_each_graph(n, false, [&](const Graph& g) {
            auto expected = oracles::brute_zeta(g);
            CompletionResult got = zeta(g);
            CHECK(got.chi == expected.chi);
            CHECK(got.zeta == expected.zeta);
            CHECK(partition_set(got) == expected.lucky_partitions);
            return true;
        });
}

TEST_CASE("zeta and all optimal partitions match the oracle on every connected order-6 graph") {
    for_each_graph(6, true, [&](const Graph& g) {
        auto expected = oracles::brute_zeta(g);
        CompletionResult got = zeta(g);
        bool duplicate_free = std::adjacent_find(got.lucky_partitions.begin(),
                                                 got.lucky_partitions.end()) ==
                              got.lucky_partitions.end();
        if (got.zeta != expected.zeta || !duplicate_free ||
            partition_set(got) != expected.lucky_partitions) {
            CAPTURE(to_graph6(g));
            REQUIRE(got.zeta == expected.zeta);
            REQUIRE(duplicate_free);
            REQUIRE(partition_set(got) == expected.lucky_partitions);
        }
        return true;
    });
}

TEST_CASE("zeta agrees with the oracle on seeded order-7 samples") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = make_random(7, 0.2 + 0.1 * (seed % 6), seed);
        auto expected = oracles::brute_zeta(g);
        CompletionResult got = zeta(g);
        CHECK(got.zeta == expected.zeta);
        CHECK(partition_set(got) == expected.lucky_partitions);
    }
}

TEST_CASE("lucky sum-product") {
    CHECK(lucky_sum_product(5, 2) == 6);   // parts 2,3
    CHECK(lucky_sum_product(7, 3) == 16);  // parts 3,2,2
    CHECK(lucky_sum_product(4, 4) == 6);   // forced all-ones, epsilon(K_4)
    CHECK(balanced_parts(7, 3) == std::vector<int>{3, 2, 2});
    CHECK_THROWS_AS(lucky_sum_product(4, 5), std::invalid_argument);
    CHECK_THROWS_AS(lucky_sum_product(4, 0), std::invalid_argument);

    for (int n = 1; n <= 30; ++n)
        for (int p = 1; p <= std::min(n, 6); ++p) {
            auto oracle = oracles::brute_sum_product(n, p);
            CHECK(lucky_sum_product(n, p) == oracle.best);
            CHECK(lucky_sum_product_bruteforce(n, p) == oracle.best);
            // The balanced split is the unique maximiser.
            CHECK(oracle.argmax.size() == 1);
            CHECK(*oracle.argmax.begin() == balanced_parts(n, p));
        }
}

TEST_CASE("near-lucky greedy colouring") {
    NearLuckyResult c5 = near_lucky_coloring(make_cycle(5));
    CHECK(is_proper(make_cycle(5), c5.coloring));
    {
        auto sizes = c5.coloring.theta;
        std::sort(sizes.begin(), sizes.end());
        CHECK(sizes == std::vector<int>{1, 2, 2});
    }
    CHECK(c5.completion_count == 3);

    for (int n = 4; n <= 10; n += 2)
        CHECK(near_lucky_coloring(make_cycle(n)).completion_count == n * n / 4 - n);

    CHECK(near_lucky_coloring(make_complete(4)).completion_count == 0);
    CHECK(near_lucky_coloring(make_complete(4)).coloring.colour_count == 4);
    CHECK(near_lucky_coloring(Graph(6)).completion_count == 0);
    CHECK(near_lucky_coloring(Graph(0)).completion_count == 0);

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = make_random(6, 0.15 * (seed % 5 + 1), seed);
        NearLuckyResult nl = near_lucky_coloring(g);
        CHECK(is_proper(g, nl.coloring));
        CHECK(nl.completion_count ==
              pseudo_completion_size(nl.coloring.theta) - g.size());
        CHECK(nl.coloring.colour_count >= chromatic_number(g));
    }
}

TEST_CASE("greedy colouring can land below exact zeta") {
    // The position rotation hands a vertex its preferred colour whenever no
    // neighbour blocks it, even when that class is already the largest.
    // Triangle 0-1-2 with pendants 3,4 on vertex 0: pendant 4 prefers
    // colour 1 (4 mod 3) and joins {1,3}, ending at classes (1,3,1) and
    // count 2 while the balanced (1,2,2) split reaches 3.
    Graph g = parse_graph6("D{_");
    NearLuckyResult nl = near_lucky_coloring(g);
    CHECK(is_proper(g, nl.coloring));
    CHECK(nl.completion_count == 2);
    CHECK(zeta(g).zeta == 3);

    // Same effect with an isolated vertex: it takes colour (i mod 2) = 1
    // and lands in the bigger class.
    Graph two_pendants = parse_graph6("Co");  // edges 01, 02, isolated 3
    CHECK(near_lucky_coloring(two_pendants).completion_count == 1);
    CHECK(zeta(two_pendants).zeta == 2);
}

TEST_CASE("upper bound report") {
    BoundReport c5 = zeta_upper_bounds(make_cycle(5));
    CHECK(c5.complement_bound == 5);
    CHECK(c5.lucky_bound == 3);  // L(5,3) - 5
    CHECK(c5.near_lucky_bound == 3);
    CHECK_FALSE(c5.zeta_exact.has_value());

    BoundReport k4 = zeta_upper_bounds(make_complete(4));
    CHECK(k4.complement_bound == 0);
    CHECK(k4.lucky_bound == 0);
    CHECK(k4.near_lucky_bound == 0);

    BoundReport p4 = zeta_upper_bounds(make_path(4));
    CHECK(p4.complement_bound == 3);
    CHECK(p4.lucky_bound == 1);

    // The complement and balanced bounds dominate the exact value on every
    // graph; the greedy count is a bound only where the greedy ends
    // balanced, so it is reported but not asserted here (see the greedy
    // regression test above).
    for (int n = 1; n <= 5; ++n)
        for_each_graph(n, false, [&](const Graph& g) {
            BoundReport b = zeta_upper_bounds(g);
            int exact = zeta(g).zeta;
            CHECK(exact <= b.complement_bound);
            CHECK(exact <= b.lucky_bound);
            CHECK((exact == b.complement_bound) == g.is_complete());
            return true;
        });
}
