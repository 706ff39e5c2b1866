#include "ied/oracle.hpp"

#include <algorithm>

namespace ied {

namespace {

constexpr double kSearchSpaceGuard = 1e7;

void check_search_space(const Hypergraph& h, const ListAssignment& lists) {
    double product = 1.0;
    for (Vertex v = 1; v <= h.vertex_count(); ++v) {
        product *= static_cast<double>(lists.list(v).size());
        if (product > kSearchSpaceGuard)
            throw SearchSpaceTooLargeError("list size product exceeds 1e7");
    }
}

struct ColoringSearch {
    const Hypergraph& h;
    const ListAssignment& lists;
    Mode mode = Mode::sets;
    const PermutationFamily* pi = nullptr;
    PartialColoring phi;

    ColoringSearch(const Hypergraph& hg, const ListAssignment& ls)
        : h(hg), lists(ls), phi(hg.vertex_count()) {}

    // Any pair through v that became a conflict kills the branch; a complete
    // leaf that survived every incremental check is still verified in full.
    bool consistent_after(Vertex v) const {
        for (EdgeId p : h.incident_edges(v)) {
            for (EdgeId q : h.intersecting_edges(p)) {
                if (pi) {
                    for (int s = 1; s <= pi->size(); ++s)
                        if (similar_under(h, p, q, pi->perm(s), phi)) return false;
                    continue;
                }
                if (!detail::pair_applicable(h, phi, p, q)) continue;
                if (detail::pair_conflicts(h, phi, p, q, mode)) return false;
            }
        }
        return true;
    }

    bool valid_leaf() const {
        const auto colors = phi.to_complete();
        if (pi) return !verify_sequences(h, *pi, colors).has_value();
        return !verify(h, colors, mode).has_value();
    }

    bool search(Vertex v) {
        if (v > h.vertex_count()) return valid_leaf();
        for (Color c : lists.list(v)) {
            phi.set(v, c);
            if (consistent_after(v) && search(v + 1)) return true;
        }
        phi.unset(v);
        return false;
    }
};

}  // namespace

std::optional<std::vector<Color>> brute_force_coloring(const Hypergraph& h,
                                                       const ListAssignment& lists, Mode mode) {
    if (lists.vertex_count() != h.vertex_count())
        throw InvalidInputError("list assignment size differs from vertex count");
    check_search_space(h, lists);
    ColoringSearch search(h, lists);
    search.mode = mode;
    if (!search.search(1)) return std::nullopt;
    return search.phi.to_complete();
}

std::optional<std::vector<Color>> brute_force_coloring_sequences(const Hypergraph& h,
                                                                 const PermutationFamily& pi,
                                                                 const ListAssignment& lists) {
    if (lists.vertex_count() != h.vertex_count())
        throw InvalidInputError("list assignment size differs from vertex count");
    if (h.edge_count() > 0 && pi.arity() != uniformity(h))
        throw ArityMismatchError(uniformity(h), pi.arity());
    check_search_space(h, lists);
    ColoringSearch search(h, lists);
    search.pi = &pi;
    if (!search.search(1)) return std::nullopt;
    return search.phi.to_complete();
}

namespace {

struct GndiSearch {
    const Graph& g;
    int labels = 2;
    std::vector<int> assignment;      // by edge id, 0 = unlabeled
    std::vector<int> remaining;       // unlabeled incident edges per vertex

    explicit GndiSearch(const Graph& graph) : g(graph) {
        assignment.assign(g.edge_count(), 0);
        remaining.assign(g.vertex_count() + 1, 0);
        for (Vertex v = 1; v <= g.vertex_count(); ++v) remaining[v] = g.degree(v);
    }

    std::vector<int> label_set(Vertex v) const {
        std::vector<int> out;
        for (EdgeId e : g.incident_edges(v)) out.push_back(assignment[e - 1]);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    // Check v against every fully labeled neighbor once v itself is fully
    // labeled.
    bool vertex_ok(Vertex v) const {
        const auto mine = label_set(v);
        for (Vertex u : g.neighbors(v))
            if (remaining[u] == 0 && label_set(u) == mine) return false;
        return true;
    }

    bool search(EdgeId e) {
        if (e > g.edge_count()) return true;
        const auto [u, v] = g.edge(e);
        for (int label = 1; label <= labels; ++label) {
            assignment[e - 1] = label;
            --remaining[u];
            --remaining[v];
            const bool ok = (remaining[u] > 0 || vertex_ok(u)) &&
                            (remaining[v] > 0 || vertex_ok(v));
            if (ok && search(e + 1)) return true;
            ++remaining[u];
            ++remaining[v];
        }
        assignment[e - 1] = 0;
        return false;
    }
};

}  // namespace

int brute_force_gndi(const Graph& g, int max_labels) {
    if (g.edge_count() > 22) throw TooLargeError("brute-force gndi handles at most 22 edges");
    for (int t = 1; t <= max_labels; ++t) {
        GndiSearch search(g);
        search.labels = t;
        if (search.search(1)) return t;
    }
    throw TooLargeError("no labeling found within the label cap");
}

}  // namespace ied
