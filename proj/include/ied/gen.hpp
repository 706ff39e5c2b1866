#pragma once

#include "ied/graph.hpp"
#include "ied/hypergraph.hpp"
#include "ied/rng.hpp"

namespace ied {

// Simple k-regular graph on n vertices by the pairing model with rejection of
// loops and parallel edges; n*k must be even.
Graph random_regular_graph(int n, int k, SplitMix64& rng);

// k-uniform hypergraph with m edges, every vertex degree at most max_degree,
// no two edges equal as sets. Gives up (throws) when rejection stalls.
Hypergraph random_uniform_hypergraph(int n, int k, int m, int max_degree, SplitMix64& rng);

}  // namespace ied
