#pragma once

#include <ied/bounds.hpp>
#include <ied/entropy.hpp>
#include <ied/gen.hpp>
#include <ied/gndi.hpp>
#include <ied/graph.hpp>
#include <ied/hypergraph.hpp>
#include <ied/oracle.hpp>

#include <vector>

namespace ied::testsupport {

// The 3-dimensional hypercube graph: 8 vertices, 12 edges, 3-regular.
inline Graph cube_graph() {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int v = 0; v < 8; ++v)
        for (int bit : {1, 2, 4}) {
            const int u = v ^ bit;
            if (u > v) edges.emplace_back(v + 1, u + 1);
        }
    return Graph(8, std::move(edges));
}

// K_n minus a perfect matching: (n-2)-regular for even n.
inline Graph complement_of_matching(int n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) {
            const bool matched = (u % 2 == 1) && v == u + 1;
            if (!matched) edges.emplace_back(u, v);
        }
    return Graph(n, std::move(edges));
}

// Circulant graph on n vertices: v adjacent to v +- each offset (mod n).
// Offsets equal to n/2 contribute one edge per vertex.
inline Graph circulant_graph(int n, const std::vector<int>& offsets) {
    std::set<std::pair<Vertex, Vertex>> edges;
    for (int v = 0; v < n; ++v)
        for (int d : offsets) {
            const int u = (v + d) % n;
            edges.insert({std::min(v, u) + 1, std::max(v, u) + 1});
        }
    return Graph(n, {edges.begin(), edges.end()});
}

// Petersen graph, 3-regular on 10 vertices.
inline Graph petersen_graph() {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i + 1, (i + 1) % 5 + 1);        // outer cycle
        edges.emplace_back(i + 6, (i + 2) % 5 + 6);        // inner pentagram
        edges.emplace_back(i + 1, i + 6);                  // spokes
    }
    return Graph(10, std::move(edges));
}

// Combinatorial arrangement of `lines` pairwise-crossing lines with k points
// per line: every pair of lines shares one point, the rest are private.
inline Hypergraph pairwise_crossing_lines(int lines, int k) {
    std::vector<std::vector<Vertex>> line_sets(lines);
    int next = 1;
    std::vector<std::vector<Vertex>> crossing(lines, std::vector<Vertex>(lines, 0));
    for (int a = 0; a < lines; ++a)
        for (int b = a + 1; b < lines; ++b) crossing[a][b] = crossing[b][a] = next++;
    for (int a = 0; a < lines; ++a) {
        for (int b = 0; b < lines; ++b)
            if (b != a) line_sets[a].push_back(crossing[a][b]);
        while (static_cast<int>(line_sets[a].size()) < k) line_sets[a].push_back(next++);
    }
    return line_arrangement(next - 1, line_sets);
}

struct CorpusInstance {
    Hypergraph hypergraph;
    int k = 0;
    const char* kind = "";
};

// k-uniform hypergraphs with k in {3,4,5}, at most 60 vertices and degree at
// most 4: duals and totals of random regular graphs plus random instances.
inline std::vector<CorpusInstance> acceptance_corpus(SplitMix64& rng) {
    std::vector<CorpusInstance> out;
    for (int n : {8, 12, 16})
        out.push_back({dual_hypergraph(random_regular_graph(n, 3, rng)), 3, "dual-3-regular"});
    for (int n : {10, 16, 20})
        out.push_back({dual_hypergraph(random_regular_graph(n, 4, rng)), 4, "dual-4-regular"});
    for (int n : {12, 16})
        out.push_back({dual_hypergraph(random_regular_graph(n, 5, rng)), 5, "dual-5-regular"});
    for (int n : {10, 14})
        out.push_back({total_hypergraph(random_regular_graph(n, 2, rng)), 3, "total-2-regular"});
    for (int n : {8, 12})
        out.push_back({total_hypergraph(random_regular_graph(n, 3, rng)), 4, "total-3-regular"});
    out.push_back({total_hypergraph(random_regular_graph(10, 4, rng)), 5, "total-4-regular"});
    for (int n : {12, 20, 30})
        out.push_back({random_uniform_hypergraph(n, 3, n / 2, 4, rng), 3, "random-3-uniform"});
    for (int n : {16, 24})
        out.push_back({random_uniform_hypergraph(n, 4, n / 2, 4, rng), 4, "random-4-uniform"});
    for (int n : {20, 30})
        out.push_back({random_uniform_hypergraph(n, 5, n / 3, 4, rng), 5, "random-5-uniform"});
    return out;
}

inline int guaranteed_bound(const Hypergraph& h, Mode mode) {
    const int k = uniformity(h);
    const auto spectrum = difference_spectrum(h);
    return mode == Mode::sets ? bound_ieds(k, std::max(2, h.max_degree()), spectrum)
                              : bound_iedm(k, std::max(2, h.max_degree()), spectrum);
}

}  // namespace ied::testsupport
