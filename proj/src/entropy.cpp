#include "ied/entropy.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ied {

DrawSequence::DrawSequence(int r, std::optional<SplitMix64> rng, std::vector<int> fixed)
    : r_(r), rng_(rng), fixed_(std::move(fixed)) {
    if (r_ < 1) throw InvalidInputError("draw range must be at least 1");
}

DrawSequence DrawSequence::seeded(std::uint64_t seed, int r) {
    return DrawSequence(r, SplitMix64(seed), {});
}

DrawSequence DrawSequence::fixed(std::vector<int> values, int r) {
    for (int v : values)
        if (v < 1 || v > r) throw InvalidInputError("fixed draw outside [R]");
    return DrawSequence(r, std::nullopt, std::move(values));
}

int DrawSequence::next() {
    int value;
    if (rng_) {
        value = rng_->in(r_);
    } else {
        if (pos_ >= fixed_.size()) throw DrawExhaustedError();
        value = fixed_[pos_++];
    }
    consumed_.push_back(value);
    return value;
}

namespace {

using detail::set_difference;
using detail::set_intersection;

// 1-based position of x in a container, or 0 when absent.
template <typename C>
int position_of(const C& container, typename C::value_type x) {
    auto it = std::find(container.begin(), container.end(), x);
    if (it == container.end()) return 0;
    return static_cast<int>(it - container.begin()) + 1;
}

std::vector<EdgeId> incident_without(const Hypergraph& h, Vertex v, EdgeId skip) {
    std::vector<EdgeId> out;
    for (EdgeId e : h.incident_edges(v))
        if (e != skip) out.push_back(e);
    return out;
}

// X = edges K with |P \ K| = i and v not in K, ascending by edge id. Every
// such K intersects P, so the intersecting list suffices.
std::vector<EdgeId> conflict_candidates(const Hypergraph& h, EdgeId p, Vertex v, int i) {
    const auto& ps = h.edge_set(p);
    const int k = static_cast<int>(ps.size());
    std::vector<EdgeId> out;
    for (EdgeId e : h.intersecting_edges(p)) {
        if (h.edge_contains(e, v)) continue;
        const int shared = static_cast<int>(set_intersection(ps, h.edge_set(e)).size());
        if (k - shared == i) out.push_back(e);
    }
    return out;
}

Vertex least_colored_with_color(const std::vector<Vertex>& candidates, const PartialColoring& phi,
                                Color c, Vertex excluded = 0) {
    for (Vertex u : candidates)
        if (u != excluded && phi.is_colored(u) && phi.color(u) == c) return u;
    throw std::logic_error("no color-preserving target for gamma");
}

struct RunContext {
    const Hypergraph& h;
    int k = 0;
    int delta = 0;
    std::vector<int> spectrum;
    PartialColoring phi;
    std::set<Vertex> uncolored;

    explicit RunContext(const Hypergraph& hg) : h(hg), phi(hg.vertex_count()) {
        delta = hg.max_degree();
        if (hg.edge_count() > 0) {
            k = uniformity(hg);
            spectrum = difference_spectrum(hg);
        }
        for (Vertex v = 1; v <= hg.vertex_count(); ++v) uncolored.insert(v);
    }

    int xq_range(int i) const { return ((delta - 1) * (k - 1)) / (k - i); }

    void uncolor(const std::vector<Vertex>& vs) {
        for (Vertex u : vs) {
            phi.unset(u);
            uncolored.insert(u);
        }
    }

    void check_range(bool ok) const {
        if (!ok) throw std::logic_error("conflict record field outside its S_i/M_i range");
    }
};

struct SetConflict {
    EdgeId p = 0;
    EdgeId q = 0;
    bool shared = false;  // v in P int Q (sets case 2)
};

// Least oriented violating pair involving v, by (index of P, index of Q); P is
// the edge designated to contain v, with case-2 orientation already applied.
std::optional<SetConflict> find_conflict(const RunContext& ctx, Vertex v, Mode mode) {
    std::optional<SetConflict> best;
    const auto consider = [&](const SetConflict& c) {
        if (!best || std::pair(c.p, c.q) < std::pair(best->p, best->q)) best = c;
    };
    for (EdgeId p : ctx.h.incident_edges(v)) {
        for (EdgeId q : ctx.h.intersecting_edges(p)) {
            const bool v_shared = ctx.h.edge_contains(q, v);
            if (mode == Mode::multisets && v_shared) continue;
            if (!detail::pair_applicable(ctx.h, ctx.phi, p, q)) continue;
            if (!detail::pair_conflicts(ctx.h, ctx.phi, p, q, mode)) continue;
            if (!v_shared) {
                consider({p, q, false});
                continue;
            }
            // Orient so that phi(v) lies in phi(Q \ P); the reversed pair is
            // met when the outer loop reaches q.
            const Color c = ctx.phi.color(v);
            const auto private_p =
                detail::color_set(set_difference(ctx.h.edge_set(p), ctx.h.edge_set(q)), ctx.phi);
            const auto private_q =
                detail::color_set(set_difference(ctx.h.edge_set(q), ctx.h.edge_set(p)), ctx.phi);
            const bool in_p = std::binary_search(private_p.begin(), private_p.end(), c);
            const bool in_q = std::binary_search(private_q.begin(), private_q.end(), c);
            if (in_p == in_q)
                throw std::logic_error("case-2 conflict color must lie in exactly one side");
            if (in_q) consider({p, q, true});
        }
    }
    return best;
}

// Writes the record for a sets/multisets conflict and erases colors per case.
ConflictRecord record_conflict(RunContext& ctx, Vertex v, const SetConflict& c, Mode mode) {
    const auto& ps = ctx.h.edge_set(c.p);
    const auto& qs = ctx.h.edge_set(c.q);
    const auto p_private = set_difference(ps, qs);
    const int i = static_cast<int>(p_private.size());
    const int x_p = position_of(ctx.h.incident_edges(v), c.p);
    ctx.check_range(x_p >= 1 && x_p <= ctx.delta);

    if (!c.shared) {
        const auto candidates = conflict_candidates(ctx.h, c.p, v, i);
        const int x_q = position_of(candidates, c.q);
        ctx.check_range(x_q >= 1 && x_q <= ctx.xq_range(i));
        GammaMap gamma;
        if (mode == Mode::sets) {
            for (Vertex u : p_private)
                gamma.emplace_back(u, least_colored_with_color(qs, ctx.phi, ctx.phi.color(u)));
        } else {
            // Canonical bijection P\Q -> Q\P: match both sides ordered by
            // (color, vertex).
            auto by_color = [&](Vertex a, Vertex b) {
                return std::pair(ctx.phi.color(a), a) < std::pair(ctx.phi.color(b), b);
            };
            std::vector<Vertex> dom(p_private);
            std::vector<Vertex> range = set_difference(qs, ps);
            std::sort(dom.begin(), dom.end(), by_color);
            std::sort(range.begin(), range.end(), by_color);
            for (std::size_t j = 0; j < dom.size(); ++j) {
                if (ctx.phi.color(dom[j]) != ctx.phi.color(range[j]))
                    throw std::logic_error("multiset gamma is not color-preserving");
                gamma.emplace_back(dom[j], range[j]);
            }
            std::sort(gamma.begin(), gamma.end());
        }
        ctx.uncolor(p_private);
        if (mode == Mode::sets) return SetCase1Record{x_p, x_q, std::move(gamma)};
        return MultisetRecord{x_p, x_q, std::move(gamma)};
    }

    // Case 2: v in P int Q, phi(v) in phi(Q \ P).
    const int x_q = position_of(incident_without(ctx.h, v, c.p), c.q);
    ctx.check_range(x_q >= 1 && x_q <= ctx.delta - 1);
    const Vertex w = p_private.front();
    std::vector<Vertex> erased;
    for (Vertex u : p_private)
        if (u != w) erased.push_back(u);
    erased.push_back(v);
    std::sort(erased.begin(), erased.end());
    GammaMap gamma;
    for (Vertex u : erased)
        gamma.emplace_back(u, least_colored_with_color(qs, ctx.phi, ctx.phi.color(u), v));
    ctx.uncolor(erased);
    return SetCase2Record{x_p, x_q, std::move(gamma)};
}

struct SeqConflict {
    EdgeId p = 0;
    EdgeId q = 0;
    int sigma = 0;
};

// The loops ascend, so the first hit is the least conflict by (p, q, sigma).
std::optional<SeqConflict> find_conflict_seq(const RunContext& ctx, const PermutationFamily& pi,
                                             Vertex v) {
    for (EdgeId p : ctx.h.incident_edges(v))
        for (EdgeId q : ctx.h.intersecting_edges(p))
            for (int s = 1; s <= pi.size(); ++s)
                if (similar_under(ctx.h, p, q, pi.perm(s), ctx.phi)) return SeqConflict{p, q, s};
    return std::nullopt;
}

ConflictRecord record_conflict_seq(RunContext& ctx, const PermutationFamily& pi, Vertex v,
                                   const SeqConflict& c) {
    const auto& pseq = ctx.h.edge(c.p);
    const auto& qseq = ctx.h.edge(c.q);
    const auto& ps = ctx.h.edge_set(c.p);
    const auto& qs = ctx.h.edge_set(c.q);
    const auto p_private = set_difference(ps, qs);
    const int i = static_cast<int>(p_private.size());
    const int x_p = position_of(ctx.h.incident_edges(v), c.p);
    ctx.check_range(x_p >= 1 && x_p <= ctx.delta);

    if (!ctx.h.edge_contains(c.q, v)) {
        // v in P \ Q: pick the cheaper of the two encodings for this i.
        const long long via_diff = 1LL * ctx.xq_range(i) * static_cast<int>(ctx.spectrum.size());
        const long long via_shared = 1LL * (ctx.delta - 1) * (ctx.k - 1);
        SeqDisjointRecord rec;
        rec.sigma = c.sigma;
        rec.x_p = x_p;
        if (via_diff <= via_shared) {
            rec.encoding = SeqEncoding::via_difference;
            rec.aux = position_of(ctx.spectrum, i);
            rec.x_q = position_of(conflict_candidates(ctx.h, c.p, v, i), c.q);
            ctx.check_range(rec.aux >= 1 && rec.x_q >= 1 && rec.x_q <= ctx.xq_range(i));
        } else {
            rec.encoding = SeqEncoding::via_shared;
            const Vertex shared = set_intersection(ps, qs).front();
            std::vector<Vertex> p_without_v;
            for (Vertex u : ps)
                if (u != v) p_without_v.push_back(u);
            rec.aux = position_of(p_without_v, shared);
            rec.x_q = position_of(incident_without(ctx.h, shared, c.p), c.q);
            ctx.check_range(rec.aux >= 1 && rec.aux <= ctx.k - 1 && rec.x_q >= 1 &&
                            rec.x_q <= ctx.delta - 1);
        }
        ctx.uncolor(p_private);
        return rec;
    }

    // v in P int Q.
    const int x_q = position_of(incident_without(ctx.h, v, c.p), c.q);
    ctx.check_range(x_q >= 1 && x_q <= ctx.delta - 1);
    const int j_v = position_of(qseq, v);
    const Vertex v_mirror = pseq[pi.image(c.sigma, j_v) - 1];
    if (v_mirror == v)
        throw std::logic_error("sequence conflict maps v to itself; it predates coloring v");
    const Vertex w = !ctx.h.edge_contains(c.q, v_mirror) ? v_mirror : p_private.front();
    std::vector<Vertex> erased;
    for (Vertex u : p_private)
        if (u != w) erased.push_back(u);
    erased.push_back(v);
    std::sort(erased.begin(), erased.end());
    ctx.uncolor(erased);
    return SeqSharedRecord{x_p, x_q, c.sigma};
}

enum class Variant { set_like, sequence };

RunResult run_impl(const Hypergraph& h, const ListAssignment& all_lists,
                   const PermutationFamily* pi, Mode mode, DrawSequence draws,
                   const RunOptions& options) {
    if (all_lists.vertex_count() != h.vertex_count())
        throw InvalidInputError("list assignment size differs from vertex count");
    const ListAssignment lists = all_lists.truncated(draws.r());
    if (pi && h.edge_count() > 0 && pi->arity() != uniformity(h))
        throw ArityMismatchError(uniformity(h), pi->arity());

    RunContext ctx(h);
    RunResult result;
    while (true) {
        if (ctx.uncolored.empty()) {
            result.outcome = RunResult::Outcome::complete;
            break;
        }
        if (options.max_iterations && result.iterations >= *options.max_iterations) {
            result.outcome = RunResult::Outcome::exhausted;
            break;
        }
        ++result.iterations;
        const Vertex v = *ctx.uncolored.begin();
        const int draw = draws.next();
        ctx.phi.set(v, lists.list(v)[draw - 1]);

        if (!pi) {
            if (auto conflict = find_conflict(ctx, v, mode)) {
                result.log.records.push_back(record_conflict(ctx, v, *conflict, mode));
            } else {
                result.log.records.push_back(PlusRecord{});
                ctx.uncolored.erase(v);
            }
            if (options.check_each_iteration && verify_partial(h, ctx.phi, mode))
                throw std::logic_error("partial coloring invariant violated");
        } else {
            if (auto conflict = find_conflict_seq(ctx, *pi, v)) {
                result.log.records.push_back(record_conflict_seq(ctx, *pi, v, *conflict));
            } else {
                result.log.records.push_back(PlusRecord{});
                ctx.uncolored.erase(v);
            }
            if (options.check_each_iteration && verify_partial_sequences(h, *pi, ctx.phi))
                throw std::logic_error("partial coloring invariant violated");
        }
    }
    result.coloring = std::move(ctx.phi);
    result.draws = draws.consumed();
    return result;
}

}  // namespace

RunResult run(const Hypergraph& h, const ListAssignment& lists, Mode mode, DrawSequence draws,
              const RunOptions& options) {
    return run_impl(h, lists, nullptr, mode, std::move(draws), options);
}

RunResult run_sequences(const Hypergraph& h, const PermutationFamily& pi,
                        const ListAssignment& lists, DrawSequence draws,
                        const RunOptions& options) {
    return run_impl(h, lists, &pi, Mode::sets, std::move(draws), options);
}

std::optional<SequenceViolation> verify_partial_sequences(const Hypergraph& h,
                                                          const PermutationFamily& pi,
                                                          const PartialColoring& phi) {
    for (EdgeId p = 1; p <= h.edge_count(); ++p)
        for (EdgeId q : h.intersecting_edges(p)) {
            if (q <= p) continue;
            for (int s = 1; s <= pi.size(); ++s)
                if (similar_under(h, p, q, pi.perm(s), phi)) return SequenceViolation{p, q, s};
        }
    return std::nullopt;
}

namespace {

struct DecodedStep {
    Vertex v = 0;
    EdgeId p = 0;
    EdgeId q = 0;
    Vertex w = 0;  // kept vertex in the shared cases
};

[[noreturn]] void bad_log(const std::string& what) { throw InconsistentLogError(what); }

template <typename C>
typename C::value_type at_position(const C& container, int pos, const char* what) {
    if (pos < 1 || pos > static_cast<int>(container.size()))
        bad_log(std::string(what) + " position out of range");
    return container[pos - 1];
}

// Forward pass of the reconstruction: recover the colored vertex and the edge
// pair of every iteration from the uncolored-set evolution alone.
std::vector<DecodedStep> decode_forward(const Hypergraph& h, const PermutationFamily* pi,
                                        const ConflictLog& log, std::set<Vertex>& uncolored,
                                        const std::vector<int>& spectrum) {
    std::vector<DecodedStep> steps;
    steps.reserve(log.records.size());
    for (const auto& record : log.records) {
        if (uncolored.empty()) bad_log("record after all vertices were colored");
        DecodedStep step;
        step.v = *uncolored.begin();
        const Vertex v = step.v;

        if (std::holds_alternative<PlusRecord>(record)) {
            uncolored.erase(v);
            steps.push_back(step);
            continue;
        }

        const auto locate_case1 = [&](int x_p, int x_q, int i) {
            step.p = at_position(h.incident_edges(v), x_p, "x_P");
            const auto candidates = conflict_candidates(h, step.p, v, i);
            step.q = at_position(candidates, x_q, "x_Q");
        };
        const auto locate_shared = [&](int x_p, int x_q) {
            step.p = at_position(h.incident_edges(v), x_p, "x_P");
            step.q = at_position(incident_without(h, v, step.p), x_q, "x_Q");
        };
        const auto p_private = [&]() {
            return set_difference(h.edge_set(step.p), h.edge_set(step.q));
        };

        if (const auto* rec = std::get_if<SetCase1Record>(&record)) {
            locate_case1(rec->x_p, rec->x_q, static_cast<int>(rec->gamma.size()));
            for (Vertex u : p_private()) uncolored.insert(u);
        } else if (const auto* rec = std::get_if<MultisetRecord>(&record)) {
            locate_case1(rec->x_p, rec->x_q, static_cast<int>(rec->gamma.size()));
            for (Vertex u : p_private()) uncolored.insert(u);
        } else if (const auto* rec = std::get_if<SetCase2Record>(&record)) {
            locate_shared(rec->x_p, rec->x_q);
            const auto priv = p_private();
            if (priv.empty()) bad_log("case-2 pair with empty difference");
            step.w = priv.front();
            for (Vertex u : priv)
                if (u != step.w) uncolored.insert(u);
        } else if (const auto* rec = std::get_if<SeqDisjointRecord>(&record)) {
            if (!pi) bad_log("sequence record in a set/multiset log");
            step.p = at_position(h.incident_edges(v), rec->x_p, "x_P");
            if (rec->encoding == SeqEncoding::via_difference) {
                const int i = at_position(spectrum, rec->aux, "I index");
                const auto candidates = conflict_candidates(h, step.p, v, i);
                step.q = at_position(candidates, rec->x_q, "x_Q");
            } else {
                std::vector<Vertex> p_without_v;
                for (Vertex u : h.edge_set(step.p))
                    if (u != v) p_without_v.push_back(u);
                const Vertex shared = at_position(p_without_v, rec->aux, "shared vertex");
                step.q = at_position(incident_without(h, shared, step.p), rec->x_q, "x_Q");
                if (!h.edge_contains(step.q, shared)) bad_log("shared vertex not on Q");
            }
            for (Vertex u : p_private()) uncolored.insert(u);
        } else if (const auto* rec = std::get_if<SeqSharedRecord>(&record)) {
            if (!pi) bad_log("sequence record in a set/multiset log");
            locate_shared(rec->x_p, rec->x_q);
            const int j_v = position_of(h.edge(step.q), v);
            if (j_v == 0) bad_log("colored vertex not on Q in a shared conflict");
            const Vertex mirror = h.edge(step.p)[pi->image(rec->sigma, j_v) - 1];
            if (mirror == v) bad_log("sigma maps v to itself");
            const auto priv = p_private();
            if (priv.empty()) bad_log("shared pair with empty difference");
            step.w = !h.edge_contains(step.q, mirror) ? mirror : priv.front();
            for (Vertex u : priv)
                if (u != step.w) uncolored.insert(u);
        }
        steps.push_back(step);
    }
    return steps;
}

int color_position(const ListAssignment& lists, Vertex v, Color c) {
    const int pos = position_of(lists.list(v), c);
    if (pos == 0) bad_log("reconstructed color is not on the vertex list");
    return pos;
}

std::vector<int> decode_impl(const Hypergraph& h, const PermutationFamily* pi,
                             const ListAssignment& all_lists, Mode mode, int r,
                             const ConflictLog& log, const PartialColoring& final_coloring) {
    const ListAssignment lists = all_lists.truncated(r);
    std::set<Vertex> uncolored;
    for (Vertex v = 1; v <= h.vertex_count(); ++v) uncolored.insert(v);
    const std::vector<int> spectrum =
        h.edge_count() > 0 ? difference_spectrum(h) : std::vector<int>{};
    const auto steps = decode_forward(h, pi, log, uncolored, spectrum);

    // The uncolored set reached by the forward pass must match the final
    // coloring's domain.
    for (Vertex v = 1; v <= h.vertex_count(); ++v) {
        const bool should_be_colored = uncolored.find(v) == uncolored.end();
        if (final_coloring.is_colored(v) != should_be_colored)
            bad_log("final coloring domain does not match the reconstructed one");
    }

    PartialColoring phi = final_coloring;
    std::vector<int> draws(log.records.size(), 0);
    for (std::size_t idx = log.records.size(); idx-- > 0;) {
        const auto& record = log.records[idx];
        const auto& step = steps[idx];
        const Vertex v = step.v;

        if (std::holds_alternative<PlusRecord>(record)) {
            if (!phi.is_colored(v)) bad_log("+ iteration left its vertex uncolored");
            draws[idx] = color_position(lists, v, phi.color(v));
            phi.unset(v);
            continue;
        }

        const auto restore_from_gamma = [&](const GammaMap& gamma) {
            bool saw_v = false;
            for (const auto& [u, ref] : gamma) {
                if (!phi.is_colored(ref)) bad_log("gamma reference vertex is uncolored");
                const Color c = phi.color(ref);
                if (u == v) {
                    draws[idx] = color_position(lists, v, c);
                    saw_v = true;
                } else {
                    if (phi.is_colored(u)) bad_log("erased vertex is still colored");
                    phi.set(u, c);
                }
            }
            if (!saw_v) bad_log("gamma does not cover the colored vertex");
        };
        const auto restore_from_sigma = [&](int sigma, const std::vector<Vertex>& erased) {
            const int inv = pi->inverse_index(sigma);
            const auto& pseq = h.edge(step.p);
            const auto& qseq = h.edge(step.q);
            for (Vertex u : erased) {
                const int t = position_of(pseq, u);
                if (t == 0) bad_log("erased vertex not on P");
                const Vertex ref = qseq[pi->image(inv, t) - 1];
                if (ref == u || !phi.is_colored(ref)) bad_log("sequence reference unusable");
                const Color c = phi.color(ref);
                if (u == v) {
                    draws[idx] = color_position(lists, v, c);
                } else {
                    if (phi.is_colored(u)) bad_log("erased vertex is still colored");
                    phi.set(u, c);
                }
            }
        };
        const auto p_private = [&]() {
            return set_difference(h.edge_set(step.p), h.edge_set(step.q));
        };

        if (const auto* rec = std::get_if<SetCase1Record>(&record)) {
            (void)mode;
            restore_from_gamma(rec->gamma);
        } else if (const auto* rec = std::get_if<MultisetRecord>(&record)) {
            restore_from_gamma(rec->gamma);
        } else if (const auto* rec = std::get_if<SetCase2Record>(&record)) {
            restore_from_gamma(rec->gamma);
        } else if (const auto* rec = std::get_if<SeqDisjointRecord>(&record)) {
            restore_from_sigma(rec->sigma, p_private());
        } else if (const auto* rec = std::get_if<SeqSharedRecord>(&record)) {
            std::vector<Vertex> erased;
            for (Vertex u : p_private())
                if (u != step.w) erased.push_back(u);
            erased.push_back(v);
            std::sort(erased.begin(), erased.end());
            // v's own color is read through sigma at v's position on Q.
            const int j_v = position_of(h.edge(step.q), v);
            const Vertex mirror = h.edge(step.p)[pi->image(rec->sigma, j_v) - 1];
            if (!phi.is_colored(mirror)) bad_log("mirror vertex is uncolored");
            draws[idx] = color_position(lists, v, phi.color(mirror));
            for (Vertex u : erased) {
                if (u == v) continue;
                const int t = position_of(h.edge(step.p), u);
                const Vertex ref = h.edge(step.q)[pi->image(pi->inverse_index(rec->sigma), t) - 1];
                if (ref == u || !phi.is_colored(ref)) bad_log("sequence reference unusable");
                if (phi.is_colored(u)) bad_log("erased vertex is still colored");
                phi.set(u, phi.color(ref));
            }
        }
    }
    if (phi.colored_count() != 0) bad_log("initial coloring is not empty");
    return draws;
}

}  // namespace

std::vector<int> decode(const Hypergraph& h, const ListAssignment& lists, Mode mode, int r,
                        const ConflictLog& log, const PartialColoring& final_coloring) {
    return decode_impl(h, nullptr, lists, mode, r, log, final_coloring);
}

std::vector<int> decode_sequences(const Hypergraph& h, const PermutationFamily& pi,
                                  const ListAssignment& lists, int r, const ConflictLog& log,
                                  const PartialColoring& final_coloring) {
    return decode_impl(h, &pi, lists, Mode::sets, r, log, final_coloring);
}

IterationStats iteration_stats(const Hypergraph& h, const ListAssignment& lists, Mode mode,
                               int trials, std::uint64_t seed_base, int r,
                               const RunOptions& options) {
    IterationStats stats;
    stats.counts.reserve(trials);
    for (int t = 0; t < trials; ++t) {
        const auto result =
            run(h, lists, mode, DrawSequence::seeded(seed_base + static_cast<std::uint64_t>(t), r),
                options);
        stats.counts.push_back(result.iterations);
        stats.max = std::max(stats.max, result.iterations);
        if (!result.completed()) ++stats.incomplete;
    }
    double total = 0;
    for (auto c : stats.counts) total += static_cast<double>(c);
    stats.mean = stats.counts.empty() ? 0.0 : total / static_cast<double>(stats.counts.size());
    return stats;
}

}  // namespace ied
