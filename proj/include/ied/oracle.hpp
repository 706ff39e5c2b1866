#pragma once

#include <optional>
#include <vector>

#include "ied/graph.hpp"
#include "ied/hypergraph.hpp"

namespace ied {

// Exhaustive search over list-respecting colorings, vertices in index order and
// list positions in list order, so the witness is the least valid coloring in
// that ordering. Guarded by the search-space product.
std::optional<std::vector<Color>> brute_force_coloring(const Hypergraph& h,
                                                       const ListAssignment& lists, Mode mode);

std::optional<std::vector<Color>> brute_force_coloring_sequences(const Hypergraph& h,
                                                                 const PermutationFamily& pi,
                                                                 const ListAssignment& lists);

// Least number of labels admitting an edge labeling that distinguishes
// neighbors by sets. |E| <= 22.
int brute_force_gndi(const Graph& g, int max_labels = 8);

}  // namespace ied
