#pragma once

#include <optional>
#include <vector>

#include "ied/errors.hpp"

namespace ied {

using Vertex = int;  // 1-based; the numeric order is the linear order on vertices
using EdgeId = int;  // 1-based; the input order is the linear order on edges
using Color = int;   // nonnegative

enum class Mode { sets, multisets };

struct Violation {
    EdgeId p = 0;
    EdgeId q = 0;
    bool operator==(const Violation&) const = default;
};

struct SequenceViolation {
    EdgeId p = 0;
    EdgeId q = 0;
    int sigma = 0;  // 1-based index into the permutation family
    bool operator==(const SequenceViolation&) const = default;
};

// A hypergraph on vertices 1..n. Each edge is an ordered sequence of distinct
// vertices; the sequence order only matters in sequence mode, set semantics
// ignore it. Multiple edges (equal as sets) are rejected. Immutable after
// construction.
class Hypergraph {
  public:
    Hypergraph(int n, std::vector<std::vector<Vertex>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Edge as given (sequence order), 1-based id.
    const std::vector<Vertex>& edge(EdgeId e) const { return edges_[e - 1]; }
    // Edge as a sorted vertex set.
    const std::vector<Vertex>& edge_set(EdgeId e) const { return sorted_[e - 1]; }

    // E(v): ids of edges containing v, ascending.
    const std::vector<EdgeId>& incident_edges(Vertex v) const { return incident_[v]; }
    int degree(Vertex v) const { return static_cast<int>(incident_[v].size()); }
    int max_degree() const { return max_degree_; }

    // Edges sharing at least one vertex with e (excluding e itself), ascending.
    const std::vector<EdgeId>& intersecting_edges(EdgeId e) const { return intersecting_[e - 1]; }

    bool edge_contains(EdgeId e, Vertex v) const;

  private:
    int n_ = 0;
    std::vector<std::vector<Vertex>> edges_;
    std::vector<std::vector<Vertex>> sorted_;
    std::vector<std::vector<EdgeId>> incident_;
    std::vector<std::vector<EdgeId>> intersecting_;
    int max_degree_ = 0;
};

// Partial vertex coloring; -1 marks uncolored.
class PartialColoring {
  public:
    PartialColoring() = default;
    explicit PartialColoring(int n) : colors_(n + 1, -1) {}
    static PartialColoring complete(const std::vector<Color>& colors);

    int vertex_count() const { return static_cast<int>(colors_.size()) - 1; }
    bool is_colored(Vertex v) const { return colors_[v] >= 0; }
    Color color(Vertex v) const { return colors_[v]; }
    void set(Vertex v, Color c) { colors_[v] = c; }
    void unset(Vertex v) { colors_[v] = -1; }

    int colored_count() const;
    bool is_complete() const;
    // Colors of all vertices; throws IncompleteColoring on the least uncolored one.
    std::vector<Color> to_complete() const;

    bool operator==(const PartialColoring&) const = default;

  private:
    std::vector<Color> colors_;  // index 0 unused
};

// Per-vertex color lists; each list is an ordered sequence of distinct
// nonnegative colors.
class ListAssignment {
  public:
    ListAssignment() = default;
    explicit ListAssignment(std::vector<std::vector<Color>> lists);
    // Lists 1..r for every vertex.
    static ListAssignment uniform_range(int n, int r);

    int vertex_count() const { return static_cast<int>(lists_.size()) - 1; }
    const std::vector<Color>& list(Vertex v) const { return lists_[v]; }

    // Keeps the first r colors of every list; throws ListTooShort.
    ListAssignment truncated(int r) const;

  private:
    std::vector<std::vector<Color>> lists_;  // index 0 unused
};

// A set of permutations of [k], closed under inverse.
class PermutationFamily {
  public:
    PermutationFamily(int k, std::vector<std::vector<int>> perms);
    static PermutationFamily identity_only(int k);
    static PermutationFamily identity_and_reversal(int k);

    int arity() const { return k_; }
    int size() const { return static_cast<int>(perms_.size()); }
    // sigma_s(j), both 1-based.
    int image(int s, int j) const { return perms_[s - 1][j - 1]; }
    // Index of the inverse of permutation s.
    int inverse_index(int s) const { return inverse_[s - 1]; }
    const std::vector<int>& perm(int s) const { return perms_[s - 1]; }

  private:
    int k_ = 0;
    std::vector<std::vector<int>> perms_;
    std::vector<int> inverse_;
};

// Common uniformity k, or throws NotUniform with the first offending edge.
int uniformity(const Hypergraph& h);

// I(H) = { |P \ Q| : P,Q edges } intersected with [k-1], ascending.
std::vector<int> difference_spectrum(const Hypergraph& h);

// Complete-coloring verifiers. Return the least violating pair (by edge index,
// p < q) or nullopt when the coloring distinguishes all intersecting pairs.
std::optional<Violation> verify(const Hypergraph& h, const std::vector<Color>& phi, Mode mode);

// Partial-coloring check over pairs whose symmetric difference is fully colored.
std::optional<Violation> verify_partial(const Hypergraph& h, const PartialColoring& phi,
                                        Mode mode);

// No two intersecting edges carry Pi-compatible color sequences.
std::optional<SequenceViolation> verify_sequences(const Hypergraph& h,
                                                  const PermutationFamily& pi,
                                                  const std::vector<Color>& phi);

// Positionwise similarity of sigma(P) and Q: at every position either both
// entries are colored with equal colors, or the same vertex sits there.
bool similar_under(const Hypergraph& h, EdgeId p, EdgeId q, const std::vector<int>& sigma,
                   const PartialColoring& phi);

namespace detail {
// Sorted-vector set helpers used across modules.
std::vector<Vertex> set_difference(const std::vector<Vertex>& a, const std::vector<Vertex>& b);
std::vector<Vertex> set_intersection(const std::vector<Vertex>& a, const std::vector<Vertex>& b);
bool all_colored(const std::vector<Vertex>& vs, const PartialColoring& phi);
// Distinct colors of the colored vertices among vs, ascending.
std::vector<Color> color_set(const std::vector<Vertex>& vs, const PartialColoring& phi);
// Colors of all vertices of vs with multiplicity, ascending; all must be colored.
std::vector<Color> color_multiset(const std::vector<Vertex>& vs, const PartialColoring& phi);
// Condition for a conflict on an applicable pair (symmetric difference colored).
bool pair_conflicts(const Hypergraph& h, const PartialColoring& phi, EdgeId p, EdgeId q,
                    Mode mode);
bool pair_applicable(const Hypergraph& h, const PartialColoring& phi, EdgeId p, EdgeId q);
}  // namespace detail

}  // namespace ied
