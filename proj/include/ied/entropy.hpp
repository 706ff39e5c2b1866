#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "ied/hypergraph.hpp"
#include "ied/rng.hpp"

namespace ied {

// The sequence C of draws from [R]: either fixed up front or generated on
// demand from a seeded PRNG. Consumed values are retained so that decoder
// round trips can be checked against the exact prefix.
class DrawSequence {
  public:
    static DrawSequence seeded(std::uint64_t seed, int r);
    static DrawSequence fixed(std::vector<int> values, int r);

    int r() const { return r_; }
    int next();
    const std::vector<int>& consumed() const { return consumed_; }

  private:
    DrawSequence(int r, std::optional<SplitMix64> rng, std::vector<int> fixed);
    int r_;
    std::optional<SplitMix64> rng_;
    std::vector<int> fixed_;
    std::size_t pos_ = 0;
    std::vector<int> consumed_;
};

// One iteration of the conflict table T. Vertices in gamma maps are stored as
// (erased vertex, color reference vertex) pairs, ascending by erased vertex;
// the reference vertex is colored when the record is written.
struct PlusRecord {
    bool operator==(const PlusRecord&) const = default;
};

using GammaMap = std::vector<std::pair<Vertex, Vertex>>;

// Sets, conflict created by a vertex of P \ Q.
struct SetCase1Record {
    int x_p = 0;
    int x_q = 0;
    GammaMap gamma;
    bool operator==(const SetCase1Record&) const = default;
};

// Sets, conflict created by a vertex of P int Q; oriented so the new color
// lies in phi(Q \ P).
struct SetCase2Record {
    int x_p = 0;
    int x_q = 0;
    GammaMap gamma;
    bool operator==(const SetCase2Record&) const = default;
};

struct MultisetRecord {
    int x_p = 0;
    int x_q = 0;
    GammaMap gamma;
    bool operator==(const MultisetRecord&) const = default;
};

enum class SeqEncoding { via_difference, via_shared };

// Sequences, conflict created by a vertex of P \ Q. With via_difference the
// aux field is the index of i = |P \ Q| within I(H); with via_shared it is the
// position of the chosen shared vertex within P \ {v}.
struct SeqDisjointRecord {
    SeqEncoding encoding = SeqEncoding::via_difference;
    int x_p = 0;
    int x_q = 0;
    int aux = 0;
    int sigma = 0;
    bool operator==(const SeqDisjointRecord&) const = default;
};

struct SeqSharedRecord {
    int x_p = 0;
    int x_q = 0;
    int sigma = 0;
    bool operator==(const SeqSharedRecord&) const = default;
};

using ConflictRecord = std::variant<PlusRecord, SetCase1Record, SetCase2Record, MultisetRecord,
                                    SeqDisjointRecord, SeqSharedRecord>;

struct ConflictLog {
    std::vector<ConflictRecord> records;
    bool operator==(const ConflictLog&) const = default;
};

struct RunOptions {
    std::optional<std::uint64_t> max_iterations;
    // Assert verify_partial (or its sequence analogue) after every iteration.
    bool check_each_iteration = false;
};

struct RunResult {
    enum class Outcome { complete, exhausted };
    Outcome outcome = Outcome::exhausted;
    PartialColoring coloring;
    ConflictLog log;
    std::uint64_t iterations = 0;
    std::vector<int> draws;  // the consumed prefix of C

    bool completed() const { return outcome == Outcome::complete; }
};

// The iterative recoloring procedure: color the least uncolored vertex with the
// next draw, log + or a conflict record, and uncolor per the record case.
RunResult run(const Hypergraph& h, const ListAssignment& lists, Mode mode, DrawSequence draws,
              const RunOptions& options = {});

RunResult run_sequences(const Hypergraph& h, const PermutationFamily& pi,
                        const ListAssignment& lists, DrawSequence draws,
                        const RunOptions& options = {});

// Exact reconstruction of the consumed draw prefix from the conflict table and
// the final partial coloring. Throws InconsistentLog when any step has no
// unique answer.
std::vector<int> decode(const Hypergraph& h, const ListAssignment& lists, Mode mode, int r,
                        const ConflictLog& log, const PartialColoring& final_coloring);

std::vector<int> decode_sequences(const Hypergraph& h, const PermutationFamily& pi,
                                  const ListAssignment& lists, int r, const ConflictLog& log,
                                  const PartialColoring& final_coloring);

// First phi-similar intersecting pair, or nullopt; reduces to verify_sequences
// on complete colorings.
std::optional<SequenceViolation> verify_partial_sequences(const Hypergraph& h,
                                                          const PermutationFamily& pi,
                                                          const PartialColoring& phi);

struct IterationStats {
    double mean = 0.0;
    std::uint64_t max = 0;
    std::vector<std::uint64_t> counts;
    int incomplete = 0;  // trials that hit the iteration cap
};

// Empirical iteration counts over independent seeded trials (seeds
// seed_base, seed_base+1, ...).
IterationStats iteration_stats(const Hypergraph& h, const ListAssignment& lists, Mode mode,
                               int trials, std::uint64_t seed_base, int r,
                               const RunOptions& options = {});

}  // namespace ied
