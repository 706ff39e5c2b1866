#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ied/entropy.hpp"
#include "ied/gndi.hpp"
#include "ied/graph.hpp"
#include "ied/hypergraph.hpp"

namespace ied {

// Text formats. `#` starts a comment line, blank lines are skipped, vertices
// are 1-based. Parse errors report the line number.
//
//   hypergraph: `H <n> <m>` then m lines `E <v1> ... <vk>`,
//               optional `L <v> <c1> <c2> ...` list lines
//   graph:      `G <n> <m>` then m lines `E <u> <v>`
//   permutations: `P <k> <count>` then count lines of k images
//   formula:    `F <nvars> <nclauses>` then `C <v1> ...` lines
//   coloring:   `<v> <color>` lines, then `# iterations <t> seed <s>`

struct HypergraphInput {
    Hypergraph hypergraph;
    std::optional<ListAssignment> lists;  // present when the file carries L lines
};

HypergraphInput parse_hypergraph(std::istream& in);
HypergraphInput parse_hypergraph_file(const std::string& path);
std::string format_hypergraph(const Hypergraph& h);

Graph parse_graph(std::istream& in);
Graph parse_graph_file(const std::string& path);
std::string format_graph(const Graph& g);

PermutationFamily parse_permutations(std::istream& in);
PermutationFamily parse_permutations_file(const std::string& path);

NaeFormula parse_formula(std::istream& in);
NaeFormula parse_formula_file(const std::string& path);
std::string format_formula(const NaeFormula& formula);

std::string format_coloring(const PartialColoring& phi, std::uint64_t iterations,
                            std::uint64_t seed);
std::vector<Color> parse_coloring(std::istream& in, int n);
std::vector<Color> parse_coloring_file(const std::string& path, int n);

// Conflict log trace: one record per line, gamma as u:w pairs.
//   `+` | `S1 xp xq u:w ...` | `S2 xp xq u:w ...` | `M xp xq u:w ...`
//   | `QD x|s xp xq aux sigma` | `QS xp xq sigma`
std::string format_log(const ConflictLog& log);
ConflictLog parse_log(std::istream& in);

}  // namespace ied
