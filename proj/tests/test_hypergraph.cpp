#include <doctest.h>

#include <ied/gen.hpp>
#include <ied/hypergraph.hpp>

using namespace ied;

namespace {
// Two intersecting triples on four vertices.
Hypergraph h1() { return Hypergraph(4, {{1, 2, 3}, {2, 3, 4}}); }
constexpr Color a = 0, b = 1, c = 2, d = 3;
}  // namespace

TEST_CASE("hypergraph construction rejects bad input") {
    CHECK_THROWS_AS(Hypergraph(3, {{1, 2, 4}}), InvalidInputError);
    CHECK_THROWS_AS(Hypergraph(3, {{1, 1, 2}}), InvalidInputError);
    CHECK_THROWS_AS(Hypergraph(3, {{1, 2}, {2, 1}}), InvalidInputError);
    CHECK_THROWS_AS(Hypergraph(3, {{}}), InvalidInputError);
    const Hypergraph h = h1();
    CHECK(h.degree(2) == 2);
    CHECK(h.degree(1) == 1);
    CHECK(h.max_degree() == 2);
    CHECK(h.incident_edges(3) == std::vector<EdgeId>{1, 2});
}

TEST_CASE("uniformity") {
    CHECK(uniformity(h1()) == 3);
    CHECK(uniformity(Hypergraph(2, {{1, 2}})) == 2);
    CHECK_THROWS_AS(uniformity(Hypergraph(3, {{1, 2}, {1, 2, 3}})), NotUniformError);
}

TEST_CASE("difference spectrum") {
    CHECK(difference_spectrum(h1()) == std::vector<int>{1});
    CHECK(difference_spectrum(Hypergraph(6, {{1, 2, 3}, {4, 5, 6}})).empty());
    // Dual of any k-regular graph has I = {k-1}; K4 is 3-regular.
    const Hypergraph dual(6, {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 5, 6}});
    CHECK(difference_spectrum(dual) == std::vector<int>{2});
}

TEST_CASE("verify distinguishes complete colorings") {
    const Hypergraph h = h1();
    CHECK(verify(h, {a, b, c, a}, Mode::sets) == Violation{1, 2});
    CHECK_FALSE(verify(h, {a, b, c, d}, Mode::sets));
    // <a,a,b> vs <a,b,b> differ as multisets but agree as sets.
    CHECK_FALSE(verify(h, {a, a, b, b}, Mode::multisets));
    CHECK(verify(h, {a, a, b, b}, Mode::sets) == Violation{1, 2});
    CHECK_THROWS_AS(verify(h, {a, b, c}, Mode::sets), InvalidInputError);
}

TEST_CASE("verify_partial checks pairs with colored symmetric difference") {
    const Hypergraph h = h1();
    PartialColoring phi(4);
    phi.set(1, a);
    phi.set(4, a);
    CHECK(verify_partial(h, phi, Mode::sets) == Violation{1, 2});
    CHECK(verify_partial(h, phi, Mode::multisets) == Violation{1, 2});
    phi.set(4, b);
    CHECK_FALSE(verify_partial(h, phi, Mode::sets));
    CHECK_FALSE(verify_partial(h, phi, Mode::multisets));
    // Uncolored symmetric difference: nothing to check yet.
    PartialColoring sparse(4);
    sparse.set(2, a);
    sparse.set(3, a);
    CHECK_FALSE(verify_partial(h, sparse, Mode::sets));
}

TEST_CASE("verify_partial agrees with verify on complete colorings") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 5 + static_cast<int>(rng.below(5));
        const Hypergraph h = random_uniform_hypergraph(n, 3, 4, 3, rng);
        std::vector<Color> colors(n);
        for (auto& col : colors) col = static_cast<Color>(rng.below(3));
        for (Mode mode : {Mode::sets, Mode::multisets}) {
            CHECK(verify(h, colors, mode) ==
                  verify_partial(h, PartialColoring::complete(colors), mode));
        }
    }
}

TEST_CASE("set distinction implies multiset distinction") {
    SplitMix64 rng(77);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 5 + static_cast<int>(rng.below(6));
        const Hypergraph h = random_uniform_hypergraph(n, 3, 5, 3, rng);
        std::vector<Color> colors(n);
        for (auto& col : colors) col = static_cast<Color>(rng.below(4));
        if (!verify(h, colors, Mode::sets)) {
            CHECK_FALSE(verify(h, colors, Mode::multisets));
            ++checked;
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("a failing complete coloring is caught before completion in pair order") {
    const Hypergraph h(5, {{1, 2, 3}, {2, 3, 4}});
    const std::vector<Color> bad{a, b, c, a, a};
    const auto violation = verify(h, bad, Mode::sets);
    REQUIRE(violation);
    // Color the violating pair's vertices first: the partial check trips
    // before every vertex is colored.
    PartialColoring phi(5);
    std::vector<Vertex> order{1, 2, 3, 4, 5};
    int tripped_at = 0;
    for (std::size_t step = 0; step < order.size(); ++step) {
        phi.set(order[step], bad[order[step] - 1]);
        if (verify_partial(h, phi, Mode::sets)) {
            tripped_at = static_cast<int>(step) + 1;
            break;
        }
    }
    CHECK(tripped_at == 4);
    CHECK(tripped_at < 5);
}

TEST_CASE("sequence verification") {
    const Hypergraph h = h1();
    const auto id3 = PermutationFamily::identity_only(3);
    // seq(P) = (a,b,c), seq(Q) = (b,c,a): never positionwise equal.
    CHECK_FALSE(verify_sequences(h, id3, {a, b, c, a}));
    // Two intersecting edges with identical color sequences.
    const Hypergraph shared(5, {{1, 2, 3}, {1, 4, 5}});
    CHECK(verify_sequences(shared, id3, {a, b, c, b, c}) == SequenceViolation{1, 2, 1});
    CHECK_THROWS_AS(verify_sequences(h, PermutationFamily::identity_only(4), {a, b, c, a}),
                    ArityMismatchError);
}

TEST_CASE("positionwise similarity") {
    const Hypergraph h(5, {{1, 2, 3}, {3, 4, 5}});
    const std::vector<int> id{1, 2, 3};
    PartialColoring phi(5);
    // Same edge against itself: every position holds the same vertex.
    CHECK(similar_under(h, 1, 1, id, phi));
    phi.set(1, a);
    phi.set(3, a);
    phi.set(2, b);
    phi.set(4, b);
    phi.set(5, a);
    CHECK(similar_under(h, 1, 2, id, phi));
    phi.set(4, c);  // position 2 now differs
    CHECK_FALSE(similar_under(h, 1, 2, id, phi));
}

TEST_CASE("permutation family invariants") {
    CHECK_THROWS_AS(PermutationFamily(3, {{2, 3, 1}}), PiNotClosedError);
    const PermutationFamily cyclic(3, {{2, 3, 1}, {3, 1, 2}});
    CHECK(cyclic.inverse_index(1) == 2);
    CHECK(cyclic.inverse_index(2) == 1);
    CHECK(PermutationFamily::identity_and_reversal(1).size() == 1);
    CHECK(PermutationFamily::identity_and_reversal(2).size() == 2);
    CHECK(PermutationFamily::identity_and_reversal(4).size() == 2);
    CHECK_THROWS_AS(PermutationFamily(3, {{1, 1, 2}}), InvalidInputError);
}
