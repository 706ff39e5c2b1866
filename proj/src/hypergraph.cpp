#include "ied/hypergraph.hpp"

#include <algorithm>
#include <set>

namespace ied {

namespace detail {

std::vector<Vertex> set_difference(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::vector<Vertex> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<Vertex> set_intersection(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool all_colored(const std::vector<Vertex>& vs, const PartialColoring& phi) {
    return std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return phi.is_colored(v); });
}

std::vector<Color> color_set(const std::vector<Vertex>& vs, const PartialColoring& phi) {
    std::vector<Color> out;
    for (Vertex v : vs)
        if (phi.is_colored(v)) out.push_back(phi.color(v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Color> color_multiset(const std::vector<Vertex>& vs, const PartialColoring& phi) {
    std::vector<Color> out;
    out.reserve(vs.size());
    for (Vertex v : vs) out.push_back(phi.color(v));
    std::sort(out.begin(), out.end());
    return out;
}

bool pair_applicable(const Hypergraph& h, const PartialColoring& phi, EdgeId p, EdgeId q) {
    const auto& ps = h.edge_set(p);
    const auto& qs = h.edge_set(q);
    return all_colored(set_difference(ps, qs), phi) && all_colored(set_difference(qs, ps), phi);
}

bool pair_conflicts(const Hypergraph& h, const PartialColoring& phi, EdgeId p, EdgeId q,
                    Mode mode) {
    const auto& ps = h.edge_set(p);
    const auto& qs = h.edge_set(q);
    if (mode == Mode::sets) return color_set(ps, phi) == color_set(qs, phi);
    return color_multiset(set_difference(ps, qs), phi) ==
           color_multiset(set_difference(qs, ps), phi);
}

}  // namespace detail

Hypergraph::Hypergraph(int n, std::vector<std::vector<Vertex>> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw InvalidInputError("negative vertex count");
    sorted_.reserve(edges_.size());
    std::set<std::vector<Vertex>> seen;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const auto& verts = edges_[e];
        if (verts.empty())
            throw InvalidInputError("edge " + std::to_string(e + 1) + " is empty");
        for (Vertex v : verts)
            if (v < 1 || v > n_)
                throw InvalidInputError("edge " + std::to_string(e + 1) +
                                        " contains vertex " + std::to_string(v) +
                                        " outside 1.." + std::to_string(n_));
        std::vector<Vertex> s(verts);
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw InvalidInputError("edge " + std::to_string(e + 1) + " repeats a vertex");
        if (!seen.insert(s).second)
            throw InvalidInputError("edge " + std::to_string(e + 1) +
                                    " duplicates an earlier edge as a set");
        sorted_.push_back(std::move(s));
    }
    incident_.assign(n_ + 1, {});
    for (std::size_t e = 0; e < edges_.size(); ++e)
        for (Vertex v : sorted_[e]) incident_[v].push_back(static_cast<EdgeId>(e + 1));
    for (Vertex v = 1; v <= n_; ++v)
        max_degree_ = std::max(max_degree_, static_cast<int>(incident_[v].size()));

    intersecting_.assign(edges_.size(), {});
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        std::set<EdgeId> touch;
        for (Vertex v : sorted_[e])
            for (EdgeId f : incident_[v])
                if (f != static_cast<EdgeId>(e + 1)) touch.insert(f);
        intersecting_[e].assign(touch.begin(), touch.end());
    }
}

bool Hypergraph::edge_contains(EdgeId e, Vertex v) const {
    const auto& s = sorted_[e - 1];
    return std::binary_search(s.begin(), s.end(), v);
}

PartialColoring PartialColoring::complete(const std::vector<Color>& colors) {
    PartialColoring phi(static_cast<int>(colors.size()));
    for (std::size_t i = 0; i < colors.size(); ++i) {
        if (colors[i] < 0) throw InvalidInputError("negative color");
        phi.set(static_cast<Vertex>(i + 1), colors[i]);
    }
    return phi;
}

int PartialColoring::colored_count() const {
    int c = 0;
    for (std::size_t v = 1; v < colors_.size(); ++v)
        if (colors_[v] >= 0) ++c;
    return c;
}

bool PartialColoring::is_complete() const { return colored_count() == vertex_count(); }

std::vector<Color> PartialColoring::to_complete() const {
    std::vector<Color> out;
    out.reserve(colors_.size() - 1);
    for (std::size_t v = 1; v < colors_.size(); ++v) {
        if (colors_[v] < 0) throw IncompleteColoringError(static_cast<int>(v));
        out.push_back(colors_[v]);
    }
    return out;
}

ListAssignment::ListAssignment(std::vector<std::vector<Color>> lists) {
    lists_.reserve(lists.size() + 1);
    lists_.emplace_back();
    for (std::size_t i = 0; i < lists.size(); ++i) {
        auto& l = lists[i];
        if (l.empty())
            throw InvalidInputError("empty list for vertex " + std::to_string(i + 1));
        std::vector<Color> sorted(l);
        std::sort(sorted.begin(), sorted.end());
        if (sorted.front() < 0)
            throw InvalidInputError("negative color in list of vertex " + std::to_string(i + 1));
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InvalidInputError("repeated color in list of vertex " + std::to_string(i + 1));
        lists_.push_back(std::move(l));
    }
}

ListAssignment ListAssignment::uniform_range(int n, int r) {
    std::vector<std::vector<Color>> lists(n);
    for (auto& l : lists) {
        l.resize(r);
        for (int c = 0; c < r; ++c) l[c] = c + 1;
    }
    return ListAssignment(std::move(lists));
}

ListAssignment ListAssignment::truncated(int r) const {
    ListAssignment out;
    out.lists_ = lists_;
    for (std::size_t v = 1; v < out.lists_.size(); ++v) {
        auto& l = out.lists_[v];
        if (static_cast<int>(l.size()) < r)
            throw ListTooShortError(static_cast<int>(v), static_cast<int>(l.size()), r);
        l.resize(r);
    }
    return out;
}

PermutationFamily::PermutationFamily(int k, std::vector<std::vector<int>> perms)
    : k_(k), perms_(std::move(perms)) {
    if (k_ < 1) throw InvalidInputError("permutation arity must be positive");
    if (perms_.empty()) throw InvalidInputError("permutation family is empty");
    for (const auto& p : perms_) {
        if (static_cast<int>(p.size()) != k_)
            throw InvalidInputError("permutation length differs from arity");
        std::vector<bool> hit(k_ + 1, false);
        for (int x : p) {
            if (x < 1 || x > k_ || hit[x]) throw InvalidInputError("not a permutation of [k]");
            hit[x] = true;
        }
    }
    std::set<std::vector<int>> uniq(perms_.begin(), perms_.end());
    if (uniq.size() != perms_.size()) throw InvalidInputError("duplicate permutation in family");

    inverse_.assign(perms_.size(), 0);
    for (std::size_t s = 0; s < perms_.size(); ++s) {
        std::vector<int> inv(k_);
        for (int j = 1; j <= k_; ++j) inv[perms_[s][j - 1] - 1] = j;
        auto it = std::find(perms_.begin(), perms_.end(), inv);
        if (it == perms_.end()) throw PiNotClosedError();
        inverse_[s] = static_cast<int>(it - perms_.begin()) + 1;
    }
}

PermutationFamily PermutationFamily::identity_only(int k) {
    std::vector<int> id(k);
    for (int j = 0; j < k; ++j) id[j] = j + 1;
    return PermutationFamily(k, {id});
}

PermutationFamily PermutationFamily::identity_and_reversal(int k) {
    std::vector<int> id(k), rev(k);
    for (int j = 0; j < k; ++j) {
        id[j] = j + 1;
        rev[j] = k - j;
    }
    if (id == rev) return PermutationFamily(k, {id});
    return PermutationFamily(k, {id, rev});
}

int uniformity(const Hypergraph& h) {
    if (h.edge_count() == 0) throw InvalidInputError("uniformity of an edgeless hypergraph");
    const int k = static_cast<int>(h.edge(1).size());
    for (EdgeId e = 2; e <= h.edge_count(); ++e)
        if (static_cast<int>(h.edge(e).size()) != k)
            throw NotUniformError(e, static_cast<int>(h.edge(e).size()));
    return k;
}

std::vector<int> difference_spectrum(const Hypergraph& h) {
    const int k = uniformity(h);
    std::set<int> spectrum;
    for (EdgeId p = 1; p <= h.edge_count(); ++p)
        for (EdgeId q : h.intersecting_edges(p)) {
            if (q <= p) continue;
            const int shared =
                static_cast<int>(detail::set_intersection(h.edge_set(p), h.edge_set(q)).size());
            const int diff = k - shared;
            if (diff >= 1 && diff <= k - 1) spectrum.insert(diff);
        }
    return {spectrum.begin(), spectrum.end()};
}

std::optional<Violation> verify(const Hypergraph& h, const std::vector<Color>& phi, Mode mode) {
    if (static_cast<int>(phi.size()) != h.vertex_count())
        throw InvalidInputError("coloring size differs from vertex count");
    const PartialColoring full = PartialColoring::complete(phi);
    for (EdgeId p = 1; p <= h.edge_count(); ++p)
        for (EdgeId q : h.intersecting_edges(p)) {
            if (q <= p) continue;
            if (detail::pair_conflicts(h, full, p, q, mode)) return Violation{p, q};
        }
    return std::nullopt;
}

std::optional<Violation> verify_partial(const Hypergraph& h, const PartialColoring& phi,
                                        Mode mode) {
    for (EdgeId p = 1; p <= h.edge_count(); ++p)
        for (EdgeId q : h.intersecting_edges(p)) {
            if (q <= p) continue;
            if (!detail::pair_applicable(h, phi, p, q)) continue;
            if (detail::pair_conflicts(h, phi, p, q, mode)) return Violation{p, q};
        }
    return std::nullopt;
}

bool similar_under(const Hypergraph& h, EdgeId p, EdgeId q, const std::vector<int>& sigma,
                   const PartialColoring& phi) {
    const auto& ps = h.edge(p);
    const auto& qs = h.edge(q);
    if (ps.size() != qs.size() || sigma.size() != ps.size())
        throw ArityMismatchError(static_cast<int>(ps.size()), static_cast<int>(sigma.size()));
    for (std::size_t j = 0; j < qs.size(); ++j) {
        const Vertex a = ps[sigma[j] - 1];
        const Vertex b = qs[j];
        if (a == b) continue;
        if (!phi.is_colored(a) || !phi.is_colored(b) || phi.color(a) != phi.color(b))
            return false;
    }
    return true;
}

std::optional<SequenceViolation> verify_sequences(const Hypergraph& h,
                                                  const PermutationFamily& pi,
                                                  const std::vector<Color>& phi) {
    const int k = uniformity(h);
    if (pi.arity() != k) throw ArityMismatchError(k, pi.arity());
    const PartialColoring full = PartialColoring::complete(phi);
    for (EdgeId p = 1; p <= h.edge_count(); ++p)
        for (EdgeId q : h.intersecting_edges(p)) {
            if (q <= p) continue;
            for (int s = 1; s <= pi.size(); ++s)
                if (similar_under(h, p, q, pi.perm(s), full))
                    return SequenceViolation{p, q, s};
        }
    return std::nullopt;
}

}  // namespace ied
