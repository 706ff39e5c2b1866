#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ied/entropy.hpp"
#include "ied/hypergraph.hpp"

namespace ied {

// Simple undirected graph on vertices 1..n; edge order is the input order.
class Graph {
  public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<Vertex, Vertex>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    // Endpoints with u < v, 1-based edge id.
    std::pair<Vertex, Vertex> edge(EdgeId e) const { return edges_[e - 1]; }
    const std::vector<EdgeId>& incident_edges(Vertex v) const { return incident_[v]; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return neighbors_[v]; }
    int degree(Vertex v) const { return static_cast<int>(incident_[v].size()); }

    // Common degree if the graph is regular.
    std::optional<int> regular_degree() const;
    // Vertices grouped into connected components, each ascending.
    std::vector<std::vector<Vertex>> components() const;

  private:
    int n_ = 0;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::vector<EdgeId>> incident_;
    std::vector<std::vector<Vertex>> neighbors_;
};

// Dual hypergraph: one vertex per edge of G (numbered by edge id), one
// hyperedge E(v) per vertex of G.
Hypergraph dual_hypergraph(const Graph& g);

// Total hypergraph on V u E: vertices of G keep their ids, edge e becomes
// vertex n + e; hyperedge of v is {v} u E(v).
Hypergraph total_hypergraph(const Graph& g);

// No connected component is a single edge.
bool is_nice(const Graph& g);

// Direct graph-side checks that an edge (or total) labeling distinguishes
// neighbors; labels are indexed by edge id (and vertex id for totals).
std::optional<Violation> distinguishing_violation(const Graph& g,
                                                  const std::vector<int>& edge_labels, Mode mode);
std::optional<Violation> distinguishing_violation_total(const Graph& g,
                                                        const std::vector<int>& vertex_labels,
                                                        const std::vector<int>& edge_labels,
                                                        Mode mode);

struct EdgeLabeling {
    std::vector<int> labels;  // by edge id
    std::uint64_t iterations = 0;
};

struct TotalLabeling {
    std::vector<int> vertex_labels;
    std::vector<int> edge_labels;
    std::uint64_t iterations = 0;
};

// Neighbor-distinguishing labelings of a k-regular graph through the dual
// (resp. total) hypergraph; the result is checked both on the hypergraph and
// directly on the graph. Lists are indexed by edge id (vertices first for
// totals, matching the total hypergraph numbering).
EdgeLabeling label_edges(const Graph& g, const ListAssignment& edge_lists, Mode mode,
                         DrawSequence draws, const RunOptions& options = {});
TotalLabeling label_total(const Graph& g, const ListAssignment& vertex_then_edge_lists, Mode mode,
                          DrawSequence draws, const RunOptions& options = {});

struct GapViolation {
    Vertex u = 0;
    Vertex v = 0;
    bool operator==(const GapViolation&) const = default;
};

// Gap vertex coloring induced by an edge labeling: the label itself on leaves,
// max minus min of the incident labels elsewhere; ok iff proper.
std::optional<GapViolation> verify_gap(const Graph& g, const std::vector<int>& edge_labels);
std::vector<int> gap_coloring(const Graph& g, const std::vector<int>& edge_labels);

// Combinatorial line arrangement: lines as point sets, pairwise sharing at
// most one point, no point on three lines.
Hypergraph line_arrangement(int points, const std::vector<std::vector<Vertex>>& lines);

struct Configuration {
    int points = 0;
    int lines = 0;
    int k = 0;  // points per line
    int r = 0;  // lines per point
    std::vector<std::vector<Vertex>> line_sets;
};

Configuration make_configuration(int points, const std::vector<std::vector<Vertex>>& lines);
Hypergraph configuration_hypergraph(const Configuration& cfg);

}  // namespace ied
