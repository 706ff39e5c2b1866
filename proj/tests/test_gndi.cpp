#include <doctest.h>

#include <algorithm>
#include <set>

#include <ied/gndi.hpp>
#include <ied/oracle.hpp>

#include "support.hpp"

using namespace ied;
using namespace ied::testsupport;

namespace {
Graph c4() { return Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }
Graph p4() { return Graph(4, {{1, 2}, {2, 3}, {3, 4}}); }
Graph k33() {
    return Graph(6, {{1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}});
}

// All edge labelings with labels {1,2} that distinguish neighbors by sets.
template <typename F>
void for_each_valid_two_labeling(const Graph& g, F visit) {
    const int m = g.edge_count();
    for (int mask = 0; mask < (1 << m); ++mask) {
        std::vector<int> labels(m);
        for (int e = 0; e < m; ++e) labels[e] = (mask >> e & 1) + 1;
        if (!distinguishing_violation(g, labels, Mode::sets)) visit(labels);
    }
}
}  // namespace

TEST_CASE("nae satisfiability") {
    NaeFormula single;
    single.num_vars = 3;
    single.clauses = {{1, 2, 3}};
    const auto assignment = nae_satisfiable(single);
    REQUIRE(assignment);
    // Depth-first with false tried first: the least witness is F,F,T.
    CHECK(*assignment == std::vector<bool>{false, false, true});

    NaeFormula pair;
    pair.num_vars = 2;
    pair.clauses = {{1, 2}};
    CHECK(nae_satisfiable(pair));
    CHECK_FALSE(nae_satisfiable(pair, {1, 2}));

    // The clause system of the Fano plane.
    NaeFormula fano;
    fano.num_vars = 7;
    for (EdgeId e = 1; e <= 7; ++e) fano.clauses.push_back(fano_plane().edge_set(e));
    CHECK_FALSE(nae_satisfiable(fano));
}

TEST_CASE("property B") {
    CHECK(property_b(Hypergraph(2, {{1, 2}})));
    CHECK_FALSE(property_b(fano_plane()));
    // Cyclic 4-uniform 4-regular hypergraphs are 2-colorable.
    for (int n : {8, 9, 11, 14}) {
        std::vector<std::vector<Vertex>> edges;
        for (int i = 0; i < n; ++i)
            edges.push_back({i + 1, (i + 1) % n + 1, (i + 2) % n + 1, (i + 3) % n + 1});
        const Hypergraph h(n, edges);
        CHECK(uniformity(h) == 4);
        CHECK(h.max_degree() == 4);
        const auto coloring = property_b(h);
        REQUIRE(coloring);
        for (EdgeId e = 1; e <= h.edge_count(); ++e) {
            std::set<int> colors;
            for (Vertex v : h.edge(e)) colors.insert((*coloring)[v - 1]);
            CHECK(colors.size() == 2);
        }
    }
}

TEST_CASE("derived formulas") {
    const auto sides = bipartition_sides(k33());
    const auto derived = derived_formula(k33(), sides, 0);
    CHECK(derived.formula.num_vars == 3);
    REQUIRE(derived.formula.clauses.size() == 3);
    for (const auto& clause : derived.formula.clauses)
        CHECK(clause == std::vector<int>{1, 2, 3});

    const Graph p3(3, {{1, 2}, {2, 3}});
    const auto p3_sides = bipartition_sides(p3);
    // Vertex 1 seeds class A, so A = {1, 3} and the clause class is {2}.
    const auto p3_derived = derived_formula(p3, p3_sides, 0);
    CHECK(p3_derived.formula.num_vars == 2);
    REQUIRE(p3_derived.formula.clauses.size() == 1);
    CHECK(p3_derived.formula.clauses[0] == std::vector<int>{1, 2});

    // The incidence graph of a derived formula is the original graph.
    for (const Graph& g : {k33(), c4(), cube_graph()}) {
        const auto s = bipartition_sides(g);
        const auto d = derived_formula(g, s, 0);
        std::set<std::pair<Vertex, Vertex>> rebuilt;
        for (std::size_t c = 0; c < d.formula.clauses.size(); ++c)
            for (int var : d.formula.clauses[c]) {
                Vertex a = d.var_vertex[var - 1];
                Vertex b = d.clause_vertex[c];
                rebuilt.insert({std::min(a, b), std::max(a, b)});
            }
        std::set<std::pair<Vertex, Vertex>> original;
        for (EdgeId e = 1; e <= g.edge_count(); ++e) original.insert(g.edge(e));
        CHECK(rebuilt == original);
    }
}

TEST_CASE("labelings from assignments and back") {
    const Graph g = k33();
    const auto derived = derived_formula(g, bipartition_sides(g), 0);
    const std::vector<bool> assignment{true, false, false};
    const auto labels = labeling_from_assignment(g, derived, assignment);
    CHECK_FALSE(distinguishing_violation(g, labels, Mode::sets));
    for (EdgeId e = 1; e <= g.edge_count(); ++e) {
        const auto [u, v] = g.edge(e);
        const Vertex a_side = u <= 3 ? u : v;
        CHECK(labels[e - 1] == (a_side == 1 ? 1 : 2));
    }
    CHECK(assignment_from_labeling(g, derived, labels) == assignment);

    // An all-equal assignment leaves every clause constant.
    CHECK_THROWS_AS(labeling_from_assignment(g, derived, {true, true, true}),
                    NotDistinguishingError);
}

TEST_CASE("gndi of small bipartite graphs") {
    CHECK(gndi_bipartite(p4()).value == 3);
    const auto c4_result = gndi_bipartite(c4());
    CHECK(c4_result.value == 2);
    REQUIRE(c4_result.labeling);
    CHECK_FALSE(distinguishing_violation(c4(), *c4_result.labeling, Mode::sets));
    CHECK(gndi_bipartite(k33()).value == 2);
    CHECK_THROWS_AS(gndi_bipartite(Graph(3, {{1, 2}, {2, 3}, {1, 3}})), NotBipartiteError);
    CHECK_THROWS_AS(gndi_bipartite(Graph(2, {{1, 2}})), InvalidInputError);
}

TEST_CASE("forced edges can push gndi to three") {
    // On C4 any 2-labeling pairs opposite edges with distinct labels, so
    // forcing both diagonal-opposite edges to 1 is unsatisfiable.
    CHECK(gndi_bipartite(c4(), {1, 3}).value == 3);
    CHECK(gndi_bipartite(c4(), {1}).value == 2);
    const auto forced = gndi_bipartite(c4(), {2});
    REQUIRE(forced.labeling);
    CHECK((*forced.labeling)[1] == 1);
}

TEST_CASE("fano incidence graph") {
    const Graph gf = fano_incidence();
    CHECK(gf.vertex_count() == 14);
    CHECK(gf.edge_count() == 21);
    CHECK(gf.regular_degree() == 3);
    CHECK_FALSE(bipartition_sides(gf).empty());
    CHECK(gndi_bipartite(gf).value == 3);
}

TEST_CASE("decomposition under a valid labeling") {
    const auto d = decompose(c4(), {1, 1, 2, 2});
    CHECK(d.y == std::vector<Vertex>{1, 3});
    CHECK(d.x1 == std::vector<Vertex>{2});
    CHECK(d.x2 == std::vector<Vertex>{4});

    const Graph star(4, {{1, 2}, {1, 3}, {1, 4}});
    const auto ds = decompose(star, {1, 2, 1});
    CHECK(ds.y == std::vector<Vertex>{1});
    CHECK(ds.x1 == std::vector<Vertex>{2, 4});
    CHECK(ds.x2 == std::vector<Vertex>{3});
    // Leaves always land in X.
    for (Vertex leaf : {2, 3, 4})
        CHECK(std::find(ds.x.begin(), ds.x.end(), leaf) != ds.x.end());

    CHECK_THROWS_AS(decompose(c4(), {1, 1, 1, 1}), LabelingInvalidError);
    CHECK_THROWS_AS(decompose(c4(), {1, 3, 1, 2}), LabelingInvalidError);
}

TEST_CASE("hardness gadget for a single two-variable clause") {
    NaeFormula phi;
    phi.num_vars = 2;
    phi.clauses = {{1, 2}};
    const Gadget gadget = hardness_gadget(phi, 4);
    CHECK(gadget.graph.vertex_count() == 11);
    CHECK(gadget.graph.edge_count() == 10);
    CHECK_FALSE(girth(gadget.graph));  // a tree
    CHECK(bipartition_sides(gadget.graph).size() == 12);
    CHECK(gndi_of(gadget.graph).value == 2);
}

TEST_CASE("gadget structure for larger girth targets") {
    SplitMix64 gen(5);
    for (int trial = 0; trial < 12; ++trial) {
        NaeFormula phi;
        phi.num_vars = 2 + static_cast<int>(gen.below(3));
        const int clause_count = 2 + static_cast<int>(gen.below(3));
        for (int c = 0; c < clause_count; ++c) {
            std::vector<int> clause;
            const int size = phi.num_vars > 2 ? 2 + static_cast<int>(gen.below(2)) : 2;
            while (static_cast<int>(clause.size()) < size) {
                const int var = 1 + static_cast<int>(gen.below(phi.num_vars));
                if (std::find(clause.begin(), clause.end(), var) == clause.end())
                    clause.push_back(var);
            }
            phi.clauses.push_back(clause);
        }
        for (int g : {4, 6, 8}) {
            const Gadget gadget = hardness_gadget(phi, g);
            for (Vertex v = 1; v <= gadget.graph.vertex_count(); ++v)
                CHECK(gadget.graph.degree(v) <= 3);
            CHECK_NOTHROW(bipartition_sides(gadget.graph));
            const auto cycle = girth(gadget.graph);
            if (cycle) CHECK(*cycle >= g);
        }
    }
    NaeFormula bad;
    bad.num_vars = 4;
    bad.clauses = {{1, 2, 3, 4}};
    CHECK_THROWS_AS(hardness_gadget(bad, 4), BadClauseSizeError);
}

TEST_CASE("variable paths are rigid in every valid 2-labeling") {
    NaeFormula phi;
    phi.num_vars = 2;
    phi.clauses = {{1, 2}, {1, 2}};
    const Gadget gadget = hardness_gadget(phi, 4);
    REQUIRE(gadget.graph.edge_count() <= 20);
    int seen = 0;
    for_each_valid_two_labeling(gadget.graph, [&](const std::vector<int>& labels) {
        ++seen;
        const auto label_set = [&](Vertex v) {
            std::set<int> out;
            for (EdgeId e : gadget.graph.incident_edges(v)) out.insert(labels[e - 1]);
            return out;
        };
        for (int var = 0; var < phi.num_vars; ++var)
            for (Vertex x : gadget.x_vertices[var])
                CHECK(label_set(x) == label_set(gadget.y_vertex[var]));
    });
    CHECK(seen > 0);
}

TEST_CASE("disconnected gadgets dispatch per component") {
    NaeFormula phi;
    phi.num_vars = 4;
    phi.clauses = {{1, 2}, {3, 4}};
    const Gadget gadget = hardness_gadget(phi, 4);
    CHECK(gadget.graph.components().size() == 2);
    CHECK(gndi_of(gadget.graph).value == 2);
    CHECK_THROWS_AS(gndi_bipartite(gadget.graph), InvalidInputError);
}

TEST_CASE("derived-formula satisfiability matches labelings with a fixed X class") {
    // Exhaustive over connected bipartite graphs on up to 6 vertices: the
    // A-derived formula is satisfiable iff some 2-labeling distinguishes
    // neighbors by sets with A exactly the monochromatic class.
    for (int n = 3; n <= 6; ++n) {
        for (int a = 1; 2 * a <= n; ++a) {
            const int b = n - a;
            for (int mask = 1; mask < (1 << (a * b)); ++mask) {
                std::vector<std::pair<Vertex, Vertex>> edges;
                for (int i = 0; i < a; ++i)
                    for (int j = 0; j < b; ++j)
                        if (mask >> (i * b + j) & 1) edges.emplace_back(i + 1, a + j + 1);
                const Graph g(n, edges);
                if (g.components().size() != 1) continue;
                std::vector<int> sides(n + 1, 1);
                for (Vertex v = 1; v <= a; ++v) sides[v] = 0;
                const auto derived = derived_formula(g, sides, 0);
                const bool formula_sat = nae_satisfiable(derived.formula).has_value();

                bool labeling_exists = false;
                const int m = g.edge_count();
                for (int lm = 0; lm < (1 << m) && !labeling_exists; ++lm) {
                    std::vector<int> labels(m);
                    for (int e = 0; e < m; ++e) labels[e] = (lm >> e & 1) + 1;
                    if (distinguishing_violation(g, labels, Mode::sets)) continue;
                    bool a_monochromatic = true;
                    for (Vertex v = 1; v <= a && a_monochromatic; ++v) {
                        std::set<int> seen;
                        for (EdgeId e : g.incident_edges(v)) seen.insert(labels[e - 1]);
                        a_monochromatic = seen.size() <= 1;
                    }
                    labeling_exists = a_monochromatic;
                }
                CHECK(formula_sat == labeling_exists);
            }
        }
    }
}

TEST_CASE("property B agrees with exhaustive 2-coloring search") {
    SplitMix64 gen(313);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 5 + static_cast<int>(gen.below(7));
        const Hypergraph h =
            random_uniform_hypergraph(n, 2 + static_cast<int>(gen.below(3)), n / 2 + 1, 4, gen);
        bool exhaustive_found = false;
        for (int mask = 0; mask < (1 << n) && !exhaustive_found; ++mask) {
            bool proper = true;
            for (EdgeId e = 1; e <= h.edge_count() && proper; ++e) {
                bool saw0 = false, saw1 = false;
                for (Vertex v : h.edge(e)) (mask >> (v - 1) & 1 ? saw1 : saw0) = true;
                proper = saw0 && saw1;
            }
            exhaustive_found = proper;
        }
        const auto coloring = property_b(h);
        CHECK(coloring.has_value() == exhaustive_found);
        if (coloring)
            for (EdgeId e = 1; e <= h.edge_count(); ++e) {
                std::set<int> colors;
                for (Vertex v : h.edge(e)) colors.insert((*coloring)[v - 1]);
                CHECK(colors.size() == 2);
            }
    }
}

TEST_CASE("girth computation") {
    CHECK(girth(c4()) == 4);
    CHECK(girth(petersen_graph()) == 5);
    CHECK(girth(cube_graph()) == 4);
    CHECK_FALSE(girth(p4()));
}
