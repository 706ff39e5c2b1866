#pragma once

#include <optional>
#include <vector>

#include "ied/graph.hpp"
#include "ied/hypergraph.hpp"

namespace ied {

// Positive not-all-equal formula: clauses are sets of variable indices, all
// literals positive. The clause list order induces the occurrence order used
// by the hardness gadget.
struct NaeFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
};

NaeFormula validate_formula(NaeFormula formula);

// A truth assignment leaving no clause constant, with the given variables
// forced true; nullopt when unsatisfiable. Deterministic witness: depth-first
// over variables in index order, false before true.
std::optional<std::vector<bool>> nae_satisfiable(const NaeFormula& formula,
                                                 const std::vector<int>& forced_true = {});

// Proper 2-coloring with no monochromatic edge (colors 1 and 2), or nullopt.
std::optional<std::vector<int>> property_b(const Hypergraph& h);

// side[v] is 0 or 1; within each component the least vertex gets side 0 (the
// A class). Throws NotBipartite.
std::vector<int> bipartition_sides(const Graph& g);

struct DerivedFormula {
    NaeFormula formula;
    std::vector<Vertex> var_vertex;     // variable index -> graph vertex
    std::vector<Vertex> clause_vertex;  // clause index -> graph vertex
    std::vector<int> var_of_vertex;     // graph vertex -> variable index (0 if none)
};

// One variable per vertex of the chosen class, one clause per vertex of the
// other class listing its neighborhood.
DerivedFormula derived_formula(const Graph& g, const std::vector<int>& sides, int var_side);

// The two explicit constructions relating satisfying assignments and
// 2-labelings with X equal to the variable class.
std::vector<int> labeling_from_assignment(const Graph& g, const DerivedFormula& derived,
                                          const std::vector<bool>& assignment);
std::vector<bool> assignment_from_labeling(const Graph& g, const DerivedFormula& derived,
                                           const std::vector<int>& edge_labels);

struct GndiResult {
    int value = 0;                             // 2 or 3
    std::optional<std::vector<int>> labeling;  // witness when value == 2
};

// gndi of a connected nice bipartite graph on >= 3 vertices; 2 iff one of the
// two derived formulas is NAE-satisfiable under the forced edges (an edge
// forced to label 1 fixes its variable-side endpoint to true).
GndiResult gndi_bipartite(const Graph& g, const std::vector<EdgeId>& forced_ones = {});

// Per-component dispatch for graphs that need not be connected (components
// that are single edges are rejected as not nice; isolated vertices are fine).
GndiResult gndi_of(const Graph& g, const std::vector<EdgeId>& forced_ones = {});

struct BipartiteDecomposition {
    std::vector<Vertex> x;   // monochromatic incident label set
    std::vector<Vertex> y;   // incident labels {1,2}
    std::vector<Vertex> x1;  // c(E(v)) = {1}
    std::vector<Vertex> x2;  // c(E(v)) = {2}
};

// Splits the vertices of a connected graph under a valid {1,2}-labeling and
// asserts the structural facts (bipartite with classes X and Y, leaves in X,
// degree-2 Y vertices between X1 and X2).
BipartiteDecomposition decompose(const Graph& g, const std::vector<int>& edge_labels);

struct Gadget {
    Graph graph;
    // x_vertices[v][i] is the connector for the (i+1)-th occurrence of
    // variable v+1; y_vertex[v] ends the path; clause_vertex[c] is z^C.
    std::vector<std::vector<Vertex>> x_vertices;
    std::vector<Vertex> y_vertex;
    std::vector<Vertex> clause_vertex;
};

// The girth-preserving reduction: a path of g'*d(v)+1 vertices per variable
// with connectors every g' steps, one vertex per clause joined to the
// connectors of its occurrences. Bipartite, subcubic, girth >= 2g' >= g.
Gadget hardness_gadget(const NaeFormula& formula, int girth);

// Incidence graph of the Fano plane: points 1..7, lines 8..14 with line sets
// {124, 235, 346, 457, 561, 672, 713}.
Graph fano_incidence();
Hypergraph fano_plane();

// Shortest cycle length, or nullopt for forests.
std::optional<int> girth(const Graph& g);

}  // namespace ied
