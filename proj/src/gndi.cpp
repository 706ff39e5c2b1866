#include "ied/gndi.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace ied {

NaeFormula validate_formula(NaeFormula formula) {
    if (formula.num_vars < 0) throw InvalidInputError("negative variable count");
    for (auto& clause : formula.clauses) {
        if (clause.empty()) throw InvalidInputError("empty clause");
        std::sort(clause.begin(), clause.end());
        if (std::adjacent_find(clause.begin(), clause.end()) != clause.end())
            throw InvalidInputError("clause repeats a variable");
        if (clause.front() < 1 || clause.back() > formula.num_vars)
            throw InvalidInputError("clause variable outside range");
    }
    return formula;
}

namespace {

// Backtracking with the not-all-equal prune: a clause whose variables are all
// assigned and equal kills the branch. Variables are decided in index order,
// false first, so the first witness is deterministic.
struct NaeSolver {
    const NaeFormula& formula;
    std::vector<std::vector<int>> clauses_of_var;  // 1-based var -> clause indices
    std::vector<int> assignment;                   // -1 unset, 0 false, 1 true
    std::vector<int> forced;                       // -1 free, else forced value

    explicit NaeSolver(const NaeFormula& f) : formula(f) {
        clauses_of_var.assign(f.num_vars + 1, {});
        for (std::size_t c = 0; c < f.clauses.size(); ++c)
            for (int v : f.clauses[c]) clauses_of_var[v].push_back(static_cast<int>(c));
        assignment.assign(f.num_vars + 1, -1);
        forced.assign(f.num_vars + 1, -1);
    }

    bool clause_constant(int c) const {
        const auto& clause = formula.clauses[c];
        const int first = assignment[clause.front()];
        if (first < 0) return false;
        for (int v : clause) {
            if (assignment[v] < 0 || assignment[v] != first) return false;
        }
        return true;
    }

    bool consistent_after(int var) const {
        for (int c : clauses_of_var[var])
            if (clause_constant(c)) return false;
        return true;
    }

    bool search(int var) {
        if (var > formula.num_vars) return true;
        for (int value = 0; value <= 1; ++value) {
            if (forced[var] >= 0 && forced[var] != value) continue;
            assignment[var] = value;
            if (consistent_after(var) && search(var + 1)) return true;
        }
        assignment[var] = -1;
        return false;
    }
};

}  // namespace

std::optional<std::vector<bool>> nae_satisfiable(const NaeFormula& formula,
                                                 const std::vector<int>& forced_true) {
    const NaeFormula f = validate_formula(formula);
    NaeSolver solver(f);
    for (int v : forced_true) {
        if (v < 1 || v > f.num_vars) throw InvalidInputError("forced variable outside range");
        solver.forced[v] = 1;
    }
    if (!solver.search(1)) return std::nullopt;
    std::vector<bool> out(f.num_vars);
    for (int v = 1; v <= f.num_vars; ++v) out[v - 1] = solver.assignment[v] == 1;
    return out;
}

std::optional<std::vector<int>> property_b(const Hypergraph& h) {
    NaeFormula formula;
    formula.num_vars = h.vertex_count();
    for (EdgeId e = 1; e <= h.edge_count(); ++e) formula.clauses.push_back(h.edge_set(e));
    const auto assignment = nae_satisfiable(formula);
    if (!assignment) return std::nullopt;
    std::vector<int> colors(h.vertex_count());
    for (Vertex v = 1; v <= h.vertex_count(); ++v) colors[v - 1] = (*assignment)[v - 1] ? 1 : 2;
    return colors;
}

std::vector<int> bipartition_sides(const Graph& g) {
    std::vector<int> side(g.vertex_count() + 1, -1);
    for (Vertex start = 1; start <= g.vertex_count(); ++start) {
        if (side[start] != -1) continue;
        side[start] = 0;
        std::deque<Vertex> queue{start};
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop_front();
            for (Vertex u : g.neighbors(v)) {
                if (side[u] == -1) {
                    side[u] = 1 - side[v];
                    queue.push_back(u);
                } else if (side[u] == side[v]) {
                    throw NotBipartiteError();
                }
            }
        }
    }
    return side;
}

DerivedFormula derived_formula(const Graph& g, const std::vector<int>& sides, int var_side) {
    if (var_side != 0 && var_side != 1) throw InvalidInputError("class must be 0 or 1");
    DerivedFormula out;
    out.var_of_vertex.assign(g.vertex_count() + 1, 0);
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
        if (sides[v] != var_side) continue;
        out.var_vertex.push_back(v);
        out.var_of_vertex[v] = static_cast<int>(out.var_vertex.size());
    }
    out.formula.num_vars = static_cast<int>(out.var_vertex.size());
    for (Vertex u = 1; u <= g.vertex_count(); ++u) {
        if (sides[u] == var_side || g.degree(u) == 0) continue;
        std::vector<int> clause;
        for (Vertex v : g.neighbors(u)) clause.push_back(out.var_of_vertex[v]);
        std::sort(clause.begin(), clause.end());
        out.clause_vertex.push_back(u);
        out.formula.clauses.push_back(std::move(clause));
    }
    return out;
}

std::vector<int> labeling_from_assignment(const Graph& g, const DerivedFormula& derived,
                                          const std::vector<bool>& assignment) {
    if (static_cast<int>(assignment.size()) != derived.formula.num_vars)
        throw InvalidInputError("assignment size differs from variable count");
    std::vector<int> labels(g.edge_count(), 0);
    for (EdgeId e = 1; e <= g.edge_count(); ++e) {
        const auto [u, v] = g.edge(e);
        const int var = derived.var_of_vertex[u] != 0 ? derived.var_of_vertex[u]
                                                      : derived.var_of_vertex[v];
        if (var == 0) throw InvalidInputError("edge with no variable-side endpoint");
        labels[e - 1] = assignment[var - 1] ? 1 : 2;
    }
    if (distinguishing_violation(g, labels, Mode::sets))
        throw NotDistinguishingError("assignment does not satisfy the derived formula");
    return labels;
}

std::vector<bool> assignment_from_labeling(const Graph& g, const DerivedFormula& derived,
                                           const std::vector<int>& edge_labels) {
    if (distinguishing_violation(g, edge_labels, Mode::sets))
        throw NotDistinguishingError("labeling does not distinguish neighbors by sets");
    std::vector<bool> out(derived.formula.num_vars);
    for (int var = 1; var <= derived.formula.num_vars; ++var) {
        const Vertex v = derived.var_vertex[var - 1];
        std::set<int> seen;
        for (EdgeId e : g.incident_edges(v)) {
            const int label = edge_labels[e - 1];
            if (label != 1 && label != 2)
                throw LabelingInvalidError("labels must be 1 or 2");
            seen.insert(label);
        }
        if (seen.size() != 1)
            throw NotDistinguishingError("variable class is not the monochromatic class X");
        out[var - 1] = *seen.begin() == 1;
    }
    return out;
}

namespace {

GndiResult gndi_connected(const Graph& g, const std::vector<int>& sides,
                          const std::vector<EdgeId>& forced_ones) {
    constexpr int kMaxClassSize = 40;
    for (int var_side = 0; var_side <= 1; ++var_side) {
        const DerivedFormula derived = derived_formula(g, sides, var_side);
        if (derived.formula.num_vars > kMaxClassSize)
            throw TooLargeError("bipartition class too large for the NAE search");
        std::vector<int> forced_vars;
        for (EdgeId e : forced_ones) {
            if (e < 1 || e > g.edge_count()) throw InvalidInputError("forced edge id");
            const auto [u, v] = g.edge(e);
            const int var = derived.var_of_vertex[u] != 0 ? derived.var_of_vertex[u]
                                                          : derived.var_of_vertex[v];
            forced_vars.push_back(var);
        }
        std::sort(forced_vars.begin(), forced_vars.end());
        forced_vars.erase(std::unique(forced_vars.begin(), forced_vars.end()),
                          forced_vars.end());
        if (const auto assignment = nae_satisfiable(derived.formula, forced_vars)) {
            GndiResult result;
            result.value = 2;
            result.labeling = labeling_from_assignment(g, derived, *assignment);
            return result;
        }
    }
    return GndiResult{3, std::nullopt};
}

}  // namespace

GndiResult gndi_bipartite(const Graph& g, const std::vector<EdgeId>& forced_ones) {
    if (g.vertex_count() < 3) throw InvalidInputError("gndi needs at least 3 vertices");
    if (g.components().size() != 1) throw InvalidInputError("gndi_bipartite needs a connected graph");
    if (!is_nice(g)) throw NotNiceError();
    return gndi_connected(g, bipartition_sides(g), forced_ones);
}

GndiResult gndi_of(const Graph& g, const std::vector<EdgeId>& forced_ones) {
    if (!is_nice(g)) throw NotNiceError();
    bipartition_sides(g);  // reject non-bipartite inputs up front
    const auto comps = g.components();

    GndiResult out;
    out.value = 2;
    out.labeling = std::vector<int>(g.edge_count(), 0);
    for (const auto& comp : comps) {
        if (comp.size() < 2) continue;
        // Relabel the component to 1..|comp| and solve it on its own.
        std::vector<int> local_id(g.vertex_count() + 1, 0);
        for (std::size_t i = 0; i < comp.size(); ++i) local_id[comp[i]] = static_cast<int>(i + 1);
        std::vector<std::pair<Vertex, Vertex>> local_edges;
        std::vector<EdgeId> global_edge;
        std::vector<EdgeId> local_forced;
        std::set<EdgeId> forced_set(forced_ones.begin(), forced_ones.end());
        for (EdgeId e = 1; e <= g.edge_count(); ++e) {
            const auto [u, v] = g.edge(e);
            if (local_id[u] == 0 || local_id[v] == 0) continue;
            local_edges.emplace_back(local_id[u], local_id[v]);
            global_edge.push_back(e);
            if (forced_set.count(e))
                local_forced.push_back(static_cast<EdgeId>(local_edges.size()));
        }
        const Graph sub(static_cast<int>(comp.size()), local_edges);
        const auto result = gndi_connected(sub, bipartition_sides(sub), local_forced);
        if (result.value == 3) return GndiResult{3, std::nullopt};
        for (std::size_t i = 0; i < global_edge.size(); ++i)
            (*out.labeling)[global_edge[i] - 1] = (*result.labeling)[i];
    }
    return out;
}

BipartiteDecomposition decompose(const Graph& g, const std::vector<int>& edge_labels) {
    if (g.components().size() != 1)
        throw InvalidInputError("decomposition is defined for connected graphs");
    for (int label : edge_labels)
        if (label != 1 && label != 2) throw LabelingInvalidError("labels must be 1 or 2");
    if (distinguishing_violation(g, edge_labels, Mode::sets))
        throw LabelingInvalidError("labeling does not distinguish neighbors by sets");

    BipartiteDecomposition out;
    std::vector<int> kind(g.vertex_count() + 1, 0);  // 1 -> X1, 2 -> X2, 3 -> Y
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
        std::set<int> seen;
        for (EdgeId e : g.incident_edges(v)) seen.insert(edge_labels[e - 1]);
        if (seen.size() == 2) {
            kind[v] = 3;
            out.y.push_back(v);
        } else if (seen.count(1)) {
            kind[v] = 1;
            out.x.push_back(v);
            out.x1.push_back(v);
        } else {
            kind[v] = 2;
            out.x.push_back(v);
            out.x2.push_back(v);
        }
    }
    // The facts of the decomposition; a failure marks a verifier bug, not bad input.
    bipartition_sides(g);
    for (EdgeId e = 1; e <= g.edge_count(); ++e) {
        const auto [u, v] = g.edge(e);
        if ((kind[u] == 3) == (kind[v] == 3))
            throw std::logic_error("Y is not one bipartition class");
    }
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
        if (g.degree(v) == 1 && kind[v] == 3) throw std::logic_error("leaf outside X");
        if (kind[v] == 3 && g.degree(v) == 2) {
            const auto& nb = g.neighbors(v);
            if (kind[nb[0]] + kind[nb[1]] != 3)
                throw std::logic_error("degree-2 Y vertex must sit between X1 and X2");
        }
    }
    return out;
}

Gadget hardness_gadget(const NaeFormula& input, int girth_target) {
    const NaeFormula formula = validate_formula(input);
    if (girth_target < 4) throw InvalidInputError("girth target must be at least 4");
    for (const auto& clause : formula.clauses)
        if (clause.size() < 2 || clause.size() > 3)
            throw BadClauseSizeError("gadget requires clause sizes 2 or 3");

    int g_prime = 4;
    while (2 * g_prime <= girth_target) g_prime += 4;
    // g' is the least multiple of 4 exceeding girth_target / 2.

    std::vector<int> occurrences(formula.num_vars + 1, 0);
    for (const auto& clause : formula.clauses)
        for (int v : clause) ++occurrences[v];

    Gadget out;
    out.x_vertices.assign(formula.num_vars, {});
    out.y_vertex.assign(formula.num_vars, 0);
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<Vertex> path_start(formula.num_vars + 1, 0);
    int next = 1;
    for (int v = 1; v <= formula.num_vars; ++v) {
        const int length = g_prime * occurrences[v] + 1;
        path_start[v] = next;
        for (int j = 0; j + 1 < length; ++j)
            edges.emplace_back(next + j, next + j + 1);
        for (int i = 1; i <= occurrences[v]; ++i)
            out.x_vertices[v - 1].push_back(path_start[v] + (i - 1) * g_prime);
        out.y_vertex[v - 1] = next + length - 1;
        next += length;
    }
    std::vector<int> used(formula.num_vars + 1, 0);
    for (const auto& clause : formula.clauses) {
        const Vertex z = next++;
        out.clause_vertex.push_back(z);
        for (int v : clause) {
            ++used[v];
            edges.emplace_back(out.x_vertices[v - 1][used[v] - 1], z);
        }
    }
    out.graph = Graph(next - 1, std::move(edges));
    return out;
}

Hypergraph fano_plane() {
    return Hypergraph(7, {{1, 2, 4},
                          {2, 3, 5},
                          {3, 4, 6},
                          {4, 5, 7},
                          {5, 6, 1},
                          {6, 7, 2},
                          {7, 1, 3}});
}

Graph fano_incidence() {
    const Hypergraph fano = fano_plane();
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (EdgeId line = 1; line <= fano.edge_count(); ++line)
        for (Vertex point : fano.edge(line)) edges.emplace_back(point, 7 + line);
    return Graph(14, std::move(edges));
}

std::optional<int> girth(const Graph& g) {
    // BFS from every vertex; a non-tree edge at depths d1, d2 closes a cycle
    // of length d1 + d2 + 1.
    std::optional<int> best;
    for (Vertex start = 1; start <= g.vertex_count(); ++start) {
        std::vector<int> dist(g.vertex_count() + 1, -1);
        std::vector<Vertex> parent(g.vertex_count() + 1, 0);
        std::deque<Vertex> queue{start};
        dist[start] = 0;
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop_front();
            for (Vertex u : g.neighbors(v)) {
                if (dist[u] == -1) {
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    queue.push_back(u);
                } else if (u != parent[v]) {
                    const int cycle = dist[u] + dist[v] + 1;
                    if (!best || cycle < *best) best = cycle;
                }
            }
        }
    }
    return best;
}

}  // namespace ied
