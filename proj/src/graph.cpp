#include "ied/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ied {

Graph::Graph(int n, std::vector<std::pair<Vertex, Vertex>> edges) : n_(n) {
    if (n_ < 0) throw InvalidInputError("negative vertex count");
    edges_.reserve(edges.size());
    std::set<std::pair<Vertex, Vertex>> seen;
    for (auto [u, v] : edges) {
        if (u < 1 || u > n_ || v < 1 || v > n_)
            throw InvalidInputError("edge endpoint outside 1..n");
        if (u == v) throw InvalidInputError("loop edge");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) throw InvalidInputError("parallel edge");
        edges_.emplace_back(u, v);
    }
    incident_.assign(n_ + 1, {});
    neighbors_.assign(n_ + 1, {});
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const auto [u, v] = edges_[e];
        incident_[u].push_back(static_cast<EdgeId>(e + 1));
        incident_[v].push_back(static_cast<EdgeId>(e + 1));
        neighbors_[u].push_back(v);
        neighbors_[v].push_back(u);
    }
    for (Vertex v = 1; v <= n_; ++v) std::sort(neighbors_[v].begin(), neighbors_[v].end());
}

std::optional<int> Graph::regular_degree() const {
    if (n_ == 0) return std::nullopt;
    const int d = degree(1);
    for (Vertex v = 2; v <= n_; ++v)
        if (degree(v) != d) return std::nullopt;
    return d;
}

std::vector<std::vector<Vertex>> Graph::components() const {
    std::vector<int> comp(n_ + 1, 0);
    std::vector<std::vector<Vertex>> out;
    for (Vertex start = 1; start <= n_; ++start) {
        if (comp[start] != 0) continue;
        const int id = static_cast<int>(out.size()) + 1;
        std::vector<Vertex> stack{start}, members;
        comp[start] = id;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (Vertex u : neighbors_[v])
                if (comp[u] == 0) {
                    comp[u] = id;
                    stack.push_back(u);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

Hypergraph dual_hypergraph(const Graph& g) {
    std::vector<std::vector<Vertex>> hyperedges;
    hyperedges.reserve(g.vertex_count());
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
        if (g.degree(v) == 0)
            throw InvalidInputError("isolated vertex has an empty incident edge set");
        hyperedges.push_back(g.incident_edges(v));
    }
    return Hypergraph(g.edge_count(), std::move(hyperedges));
}

Hypergraph total_hypergraph(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<Vertex>> hyperedges;
    hyperedges.reserve(n);
    for (Vertex v = 1; v <= n; ++v) {
        std::vector<Vertex> he{v};
        for (EdgeId e : g.incident_edges(v)) he.push_back(n + e);
        hyperedges.push_back(std::move(he));
    }
    return Hypergraph(n + g.edge_count(), std::move(hyperedges));
}

bool is_nice(const Graph& g) {
    for (const auto& comp : g.components()) {
        if (comp.size() != 2) continue;
        if (g.degree(comp[0]) == 1 && g.degree(comp[1]) == 1) return false;
    }
    return true;
}

namespace {

std::vector<int> incident_label_multiset(const Graph& g, Vertex v,
                                         const std::vector<int>& edge_labels) {
    std::vector<int> out;
    for (EdgeId e : g.incident_edges(v)) out.push_back(edge_labels[e - 1]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> as_set(std::vector<int> multiset) {
    multiset.erase(std::unique(multiset.begin(), multiset.end()), multiset.end());
    return multiset;
}

}  // namespace

std::optional<Violation> distinguishing_violation(const Graph& g,
                                                  const std::vector<int>& edge_labels,
                                                  Mode mode) {
    if (static_cast<int>(edge_labels.size()) != g.edge_count())
        throw InvalidInputError("label vector size differs from edge count");
    for (EdgeId e = 1; e <= g.edge_count(); ++e) {
        const auto [u, v] = g.edge(e);
        auto mu = incident_label_multiset(g, u, edge_labels);
        auto mv = incident_label_multiset(g, v, edge_labels);
        if (mode == Mode::sets) {
            if (as_set(std::move(mu)) == as_set(std::move(mv))) return Violation{u, v};
        } else if (mu == mv) {
            return Violation{u, v};
        }
    }
    return std::nullopt;
}

std::optional<Violation> distinguishing_violation_total(const Graph& g,
                                                        const std::vector<int>& vertex_labels,
                                                        const std::vector<int>& edge_labels,
                                                        Mode mode) {
    if (static_cast<int>(vertex_labels.size()) != g.vertex_count() ||
        static_cast<int>(edge_labels.size()) != g.edge_count())
        throw InvalidInputError("label vector size mismatch");
    for (EdgeId e = 1; e <= g.edge_count(); ++e) {
        const auto [u, v] = g.edge(e);
        auto mu = incident_label_multiset(g, u, edge_labels);
        auto mv = incident_label_multiset(g, v, edge_labels);
        mu.insert(std::lower_bound(mu.begin(), mu.end(), vertex_labels[u - 1]),
                  vertex_labels[u - 1]);
        mv.insert(std::lower_bound(mv.begin(), mv.end(), vertex_labels[v - 1]),
                  vertex_labels[v - 1]);
        if (mode == Mode::sets) {
            if (as_set(std::move(mu)) == as_set(std::move(mv))) return Violation{u, v};
        } else if (mu == mv) {
            return Violation{u, v};
        }
    }
    return std::nullopt;
}

EdgeLabeling label_edges(const Graph& g, const ListAssignment& edge_lists, Mode mode,
                         DrawSequence draws, const RunOptions& options) {
    if (!g.regular_degree()) throw NotRegularError();
    const Hypergraph dual = dual_hypergraph(g);
    const RunResult result = run(dual, edge_lists, mode, std::move(draws), options);
    if (!result.completed())
        throw TooLargeError("iteration cap reached before a labeling was found");
    EdgeLabeling out;
    out.iterations = result.iterations;
    out.labels = result.coloring.to_complete();
    if (verify(dual, out.labels, mode))
        throw std::logic_error("labeling fails the hypergraph verifier");
    if (distinguishing_violation(g, out.labels, mode))
        throw std::logic_error("labeling fails the direct graph check");
    return out;
}

TotalLabeling label_total(const Graph& g, const ListAssignment& vertex_then_edge_lists, Mode mode,
                          DrawSequence draws, const RunOptions& options) {
    if (!g.regular_degree()) throw NotRegularError();
    const Hypergraph total = total_hypergraph(g);
    const RunResult result = run(total, vertex_then_edge_lists, mode, std::move(draws), options);
    if (!result.completed())
        throw TooLargeError("iteration cap reached before a labeling was found");
    const auto colors = result.coloring.to_complete();
    TotalLabeling out;
    out.iterations = result.iterations;
    out.vertex_labels.assign(colors.begin(), colors.begin() + g.vertex_count());
    out.edge_labels.assign(colors.begin() + g.vertex_count(), colors.end());
    if (verify(total, colors, mode))
        throw std::logic_error("labeling fails the hypergraph verifier");
    if (distinguishing_violation_total(g, out.vertex_labels, out.edge_labels, mode))
        throw std::logic_error("labeling fails the direct graph check");
    return out;
}

std::vector<int> gap_coloring(const Graph& g, const std::vector<int>& edge_labels) {
    if (static_cast<int>(edge_labels.size()) != g.edge_count())
        throw InvalidInputError("label vector size differs from edge count");
    std::vector<int> f(g.vertex_count());
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
        const auto& inc = g.incident_edges(v);
        if (inc.empty()) throw InvalidInputError("gap coloring needs minimum degree 1");
        if (inc.size() == 1) {
            f[v - 1] = edge_labels[inc[0] - 1];
            continue;
        }
        int lo = edge_labels[inc[0] - 1], hi = lo;
        for (EdgeId e : inc) {
            lo = std::min(lo, edge_labels[e - 1]);
            hi = std::max(hi, edge_labels[e - 1]);
        }
        f[v - 1] = hi - lo;
    }
    return f;
}

std::optional<GapViolation> verify_gap(const Graph& g, const std::vector<int>& edge_labels) {
    if (g.vertex_count() < 2 || g.components().size() != 1)
        throw InvalidInputError("gap labeling is defined for connected graphs on >= 2 vertices");
    const auto f = gap_coloring(g, edge_labels);
    for (EdgeId e = 1; e <= g.edge_count(); ++e) {
        const auto [u, v] = g.edge(e);
        if (f[u - 1] == f[v - 1]) return GapViolation{u, v};
    }
    return std::nullopt;
}

namespace {

void check_incidences(int points, const std::vector<std::vector<Vertex>>& lines,
                      bool configuration) {
    std::vector<int> point_degree(points + 1, 0);
    std::map<std::pair<Vertex, Vertex>, int> pair_lines;
    for (std::size_t l = 0; l < lines.size(); ++l) {
        std::vector<Vertex> s(lines[l]);
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw InvalidInputError("line repeats a point");
        for (Vertex p : s) {
            if (p < 1 || p > points) throw InvalidInputError("point outside range");
            ++point_degree[p];
        }
        for (std::size_t a = 0; a < s.size(); ++a)
            for (std::size_t b = a + 1; b < s.size(); ++b) ++pair_lines[{s[a], s[b]}];
    }
    for (const auto& [pair, count] : pair_lines)
        if (count > 1) {
            if (configuration)
                throw NotConfigurationError("two lines share two points");
            throw NotGeneralPositionError("two lines share two points");
        }
    if (!configuration)
        for (Vertex p = 1; p <= points; ++p)
            if (point_degree[p] > 2)
                throw NotGeneralPositionError("three lines meet in point " + std::to_string(p));
}

}  // namespace

Hypergraph line_arrangement(int points, const std::vector<std::vector<Vertex>>& lines) {
    if (lines.empty()) throw InvalidInputError("no lines");
    const std::size_t k = lines.front().size();
    for (const auto& l : lines)
        if (l.size() != k) throw NotGeneralPositionError("line sizes differ");
    check_incidences(points, lines, /*configuration=*/false);
    return Hypergraph(points, lines);
}

Configuration make_configuration(int points, const std::vector<std::vector<Vertex>>& lines) {
    if (lines.empty()) throw NotConfigurationError("no lines");
    const int k = static_cast<int>(lines.front().size());
    for (const auto& l : lines)
        if (static_cast<int>(l.size()) != k)
            throw NotConfigurationError("line sizes differ");
    check_incidences(points, lines, /*configuration=*/true);
    std::vector<int> point_degree(points + 1, 0);
    for (const auto& l : lines)
        for (Vertex p : l) ++point_degree[p];
    const int r = points >= 1 ? point_degree[1] : 0;
    for (Vertex p = 1; p <= points; ++p)
        if (point_degree[p] != r)
            throw NotConfigurationError("point " + std::to_string(p) + " lies on " +
                                        std::to_string(point_degree[p]) + " lines, expected " +
                                        std::to_string(r));
    Configuration cfg;
    cfg.points = points;
    cfg.lines = static_cast<int>(lines.size());
    cfg.k = k;
    cfg.r = r;
    cfg.line_sets = lines;
    return cfg;
}

Hypergraph configuration_hypergraph(const Configuration& cfg) {
    return Hypergraph(cfg.points, cfg.line_sets);
}

}  // namespace ied
