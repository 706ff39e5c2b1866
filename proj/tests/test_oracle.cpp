#include <doctest.h>

#include <ied/oracle.hpp>

#include "support.hpp"

using namespace ied;
using namespace ied::testsupport;

TEST_CASE("exhaustive coloring search") {
    const Hypergraph h(4, {{1, 2, 3}, {2, 3, 4}});
    const auto lists = ListAssignment::uniform_range(4, 3);
    const auto witness = brute_force_coloring(h, lists, Mode::sets);
    REQUIRE(witness);
    CHECK_FALSE(verify(h, *witness, Mode::sets));
    // Vertex-then-position order: the least witness is (1,1,1,2).
    CHECK(*witness == std::vector<Color>{1, 1, 1, 2});

    const ListAssignment single(std::vector<std::vector<Color>>{{5}, {5}, {5}, {5}});
    CHECK_FALSE(brute_force_coloring(h, single, Mode::sets));
}

TEST_CASE("search space guard") {
    const Hypergraph h(8, {{1, 2, 3}, {4, 5, 6}});
    CHECK_THROWS_AS(brute_force_coloring(h, ListAssignment::uniform_range(8, 10), Mode::sets),
                    SearchSpaceTooLargeError);
}

TEST_CASE("sequence oracle") {
    const Hypergraph h(5, {{1, 2, 3}, {1, 4, 5}});
    const auto pi = PermutationFamily::identity_only(3);
    const auto witness =
        brute_force_coloring_sequences(h, pi, ListAssignment::uniform_range(5, 2));
    REQUIRE(witness);
    CHECK_FALSE(verify_sequences(h, pi, *witness));
}

TEST_CASE("brute force gndi") {
    CHECK(brute_force_gndi(Graph(3, {{1, 2}, {2, 3}})) == 2);
    CHECK(brute_force_gndi(Graph(4, {{1, 2}, {2, 3}, {3, 4}})) == 3);
    CHECK(brute_force_gndi(Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})) == 2);
    CHECK(brute_force_gndi(petersen_graph()) == 3);
    std::vector<std::pair<Vertex, Vertex>> big;
    for (int i = 1; i <= 23; ++i) big.emplace_back(i, i + 1);
    CHECK_THROWS_AS(brute_force_gndi(Graph(24, big)), TooLargeError);
}

TEST_CASE("oracle existence is invariant under vertex relabeling") {
    SplitMix64 gen(606);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 6;
        const Hypergraph h = random_uniform_hypergraph(n, 3, 3, 3, gen);
        std::vector<Vertex> relabel(n + 1);
        for (int v = 1; v <= n; ++v) relabel[v] = v;
        for (int v = n; v > 1; --v)
            std::swap(relabel[v], relabel[1 + static_cast<int>(gen.below(v))]);
        std::vector<std::vector<Vertex>> edges;
        for (EdgeId e = 1; e <= h.edge_count(); ++e) {
            std::vector<Vertex> mapped;
            for (Vertex v : h.edge(e)) mapped.push_back(relabel[v]);
            edges.push_back(std::move(mapped));
        }
        const Hypergraph permuted(n, edges);
        const auto lists = ListAssignment::uniform_range(n, 2);
        for (Mode mode : {Mode::sets, Mode::multisets})
            CHECK(brute_force_coloring(h, lists, mode).has_value() ==
                  brute_force_coloring(permuted, lists, mode).has_value());
    }
}

TEST_CASE("algorithm success implies oracle success") {
    SplitMix64 gen(808);
    int complete_runs = 0;
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 6;
        const Hypergraph h = random_uniform_hypergraph(n, 3, 3, 3, gen);
        const int r = 3;
        const auto lists = ListAssignment::uniform_range(n, r);
        RunOptions options;
        options.max_iterations = 500;
        const auto result =
            run(h, lists, Mode::multisets, DrawSequence::seeded(trial, r), options);
        if (!result.completed()) continue;
        ++complete_runs;
        CHECK(brute_force_coloring(h, lists, Mode::multisets).has_value());
    }
    CHECK(complete_runs > 0);
}
