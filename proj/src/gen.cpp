#include "ied/gen.hpp"

#include <algorithm>
#include <set>

namespace ied {

Graph random_regular_graph(int n, int k, SplitMix64& rng) {
    if (n < k + 1 || (n * k) % 2 != 0)
        throw InvalidInputError("no k-regular graph on these parameters");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<Vertex> stubs;
        stubs.reserve(n * k);
        for (Vertex v = 1; v <= n; ++v)
            for (int j = 0; j < k; ++j) stubs.push_back(v);
        for (std::size_t i = stubs.size() - 1; i > 0; --i)
            std::swap(stubs[i], stubs[rng.below(i + 1)]);
        std::set<std::pair<Vertex, Vertex>> seen;
        std::vector<std::pair<Vertex, Vertex>> edges;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            Vertex u = stubs[i], v = stubs[i + 1];
            if (u == v) {
                ok = false;
                break;
            }
            if (u > v) std::swap(u, v);
            if (!seen.insert({u, v}).second) {
                ok = false;
                break;
            }
            edges.emplace_back(u, v);
        }
        if (ok) return Graph(n, std::move(edges));
    }
    throw InvalidInputError("pairing model failed to produce a simple graph");
}

Hypergraph random_uniform_hypergraph(int n, int k, int m, int max_degree, SplitMix64& rng) {
    if (k > n) throw InvalidInputError("edge size exceeds vertex count");
    for (int attempt = 0; attempt < 2000; ++attempt) {
        std::vector<int> degree(n + 1, 0);
        std::set<std::vector<Vertex>> seen;
        std::vector<std::vector<Vertex>> edges;
        for (int tries = 0; static_cast<int>(edges.size()) < m && tries < 100 * m + 100;
             ++tries) {
            std::vector<Vertex> pool;
            for (Vertex v = 1; v <= n; ++v)
                if (degree[v] < max_degree) pool.push_back(v);
            if (static_cast<int>(pool.size()) < k) break;  // stuck, restart
            std::vector<Vertex> edge;
            for (int j = 0; j < k; ++j) {
                const std::size_t pick = rng.below(pool.size() - j);
                std::swap(pool[pick], pool[pool.size() - 1 - j]);
                edge.push_back(pool[pool.size() - 1 - j]);
            }
            std::vector<Vertex> sorted(edge);
            std::sort(sorted.begin(), sorted.end());
            if (!seen.insert(sorted).second) continue;
            for (Vertex v : edge) ++degree[v];
            edges.push_back(std::move(edge));
        }
        if (static_cast<int>(edges.size()) == m) return Hypergraph(n, std::move(edges));
    }
    throw InvalidInputError("could not place the requested edges within the degree cap");
}

}  // namespace ied
