#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rmideal/errors.hpp"
#include "rmideal/graph.hpp"
#include "rmideal/patterns.hpp"
#include "rmideal/stable_sets.hpp"

namespace rmideal {

/// Two chordless odd cycles, vertex-disjoint and with no edge between them.
struct HochsterWitness {
    std::vector<Vertex> c1;  // sorted
    std::vector<Vertex> c2;  // sorted

    friend bool operator==(const HochsterWitness&, const HochsterWitness&) = default;
};

enum class CoverNormality { Normal, NotNormal, UndecidedBeta0TooLarge };

inline const char* to_string(CoverNormality v) {
    switch (v) {
        case CoverNormality::Normal: return "normal";
        case CoverNormality::NotNormal: return "not_normal";
        case CoverNormality::UndecidedBeta0TooLarge: return "undecided_beta0_gt_2";
    }
    return "?";
}

/// True iff `members` induces a chordless cycle of length >= 3.
inline bool induces_cycle(const Graph& g, const VertexSet& members) {
    const std::size_t k = members.count();
    if (k < 3) return false;
    bool degrees_ok = true;
    members.for_each([&](Vertex v) {
        if ((g.neighbors(v) & members).count() != 2) degrees_ok = false;
    });
    return degrees_ok && component_count(g, members) == 1;
}

inline bool is_valid_hochster(const Graph& g, const HochsterWitness& w) {
    for (const auto* c : {&w.c1, &w.c2}) {
        if (c->size() % 2 == 0) return false;
        for (Vertex v : *c) {
            if (v >= g.order()) return false;
        }
    }
    const auto a = VertexSet::from_range(g.order(), w.c1);
    const auto b = VertexSet::from_range(g.order(), w.c2);
    if (a.count() != w.c1.size() || b.count() != w.c2.size()) return false;
    if (!induces_cycle(g, a) || !induces_cycle(g, b)) return false;
    return !closed_neighborhood(g, b).intersects(a);
}

namespace detail {

// Depth-first enumeration of chordless cycles. Each cycle is rooted at its
// smallest vertex and traversed in the direction whose second vertex is the
// smaller of the root's two cycle neighbours, so it is reported once.
//
// `keep(path)` may abandon a partial chordless path (return false);
// `emit(cycle)` returns false to stop the whole enumeration.
template <class Keep, class Emit>
class ChordlessCycleWalker {
public:
    ChordlessCycleWalker(const Graph& g, std::size_t max_len, Keep keep, Emit emit)
        : g_(g), max_len_(max_len), keep_(std::move(keep)), emit_(std::move(emit)) {}

    void run() {
        const std::size_t n = g_.order();
        for (Vertex r = 0; r < n && !stopped_; ++r) {
            VertexSet below = VertexSet::full(n);
            below.erase_through(r);
            below = ~below;
            VertexSet starts = g_.neighbors(r) - below;
            starts.for_each([&](Vertex v1) {
                if (stopped_) return;
                path_ = {r, v1};
                VertexSet forbidden = below;
                forbidden.insert(v1);
                if (keep_(path_)) extend(r, forbidden, VertexSet(n));
            });
        }
    }

private:
    // forbidden: vertices <= root, on the path, or adjacent to an interior
    // vertex other than the current end. interior_reach accumulates N(v1..vk-1).
    void extend(Vertex root, const VertexSet& forbidden, const VertexSet& interior_reach) {
        const Vertex end = path_.back();
        const Vertex second = path_[1];
        const VertexSet candidates = g_.neighbors(end) - forbidden - interior_reach;
        const VertexSet& root_nb = g_.neighbors(root);
        const std::size_t cycle_len = path_.size() + 1;
        candidates.for_each([&](Vertex w) {
            if (stopped_) return;
            if (root_nb.contains(w)) {
                if (second < w && cycle_len <= max_len_) {
                    path_.push_back(w);
                    if (!emit_(path_)) stopped_ = true;
                    path_.pop_back();
                }
                return;
            }
            if (cycle_len + 1 > max_len_) return;
            path_.push_back(w);
            if (keep_(path_)) {
                VertexSet next_forbidden = forbidden;
                next_forbidden.insert(w);
                VertexSet reach = interior_reach;
                if (path_.size() > 2) reach |= g_.neighbors(end);
                extend(root, next_forbidden, reach);
            }
            path_.pop_back();
        });
    }

    const Graph& g_;
    std::size_t max_len_;
    Keep keep_;
    Emit emit_;
    std::vector<Vertex> path_;
    bool stopped_ = false;
};

template <class Keep, class Emit>
void walk_chordless_cycles(const Graph& g, std::size_t max_len, Keep keep, Emit emit) {
    ChordlessCycleWalker<Keep, Emit>(g, max_len, std::move(keep), std::move(emit)).run();
}

// Shortens an odd cycle (vertex sequence) along chords until it is chordless.
inline std::vector<Vertex> shrink_to_chordless(const Graph& g, std::vector<Vertex> cycle) {
    for (bool changed = true; changed;) {
        changed = false;
        const std::size_t len = cycle.size();
        for (std::size_t i = 0; i < len && !changed; ++i) {
            for (std::size_t j = i + 2; j < len && !changed; ++j) {
                if (i == 0 && j == len - 1) continue;
                if (!g.adjacent(cycle[i], cycle[j])) continue;
                std::vector<Vertex> inner(cycle.begin() + static_cast<std::ptrdiff_t>(i),
                                          cycle.begin() + static_cast<std::ptrdiff_t>(j) + 1);
                if (inner.size() % 2 == 1) {
                    cycle = std::move(inner);
                } else {
                    std::vector<Vertex> outer(cycle.begin() + static_cast<std::ptrdiff_t>(j), cycle.end());
                    outer.insert(outer.end(), cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                    cycle = std::move(outer);
                }
                changed = true;
            }
        }
    }
    return cycle;
}

// Some chordless odd cycle inside the subgraph induced on `within`, if any.
inline std::optional<std::vector<Vertex>> chordless_odd_cycle(const Graph& g, const VertexSet& within) {
    const std::size_t n = g.order();
    VertexSet unseen = within;
    std::vector<Vertex> parent(n, 0);
    while (auto root = unseen.first()) {
        unseen.erase(*root);
        parent[*root] = *root;
        std::vector<Vertex> layer{*root};
        while (!layer.empty()) {
            VertexSet in_layer = VertexSet::from_range(n, layer);
            for (Vertex u : layer) {
                const VertexSet clash = g.neighbors(u) & in_layer;
                if (auto v = clash.first()) {
                    std::vector<Vertex> up{u};
                    std::vector<Vertex> down{*v};
                    while (up.back() != down.back()) {
                        up.push_back(parent[up.back()]);
                        down.push_back(parent[down.back()]);
                    }
                    down.pop_back();
                    std::vector<Vertex> cycle(up.rbegin(), up.rend());
                    cycle.insert(cycle.end(), down.begin(), down.end());
                    return shrink_to_chordless(g, std::move(cycle));
                }
            }
            std::vector<Vertex> next;
            for (Vertex u : layer) {
                VertexSet fresh = g.neighbors(u) & unseen;
                fresh.for_each([&](Vertex v) {
                    parent[v] = u;
                    next.push_back(v);
                });
                unseen -= fresh;
            }
            layer = std::move(next);
        }
    }
    return std::nullopt;
}

inline HochsterWitness make_witness(std::vector<Vertex> a, std::vector<Vertex> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (b.front() < a.front()) std::swap(a, b);
    return {std::move(a), std::move(b)};
}

}  // namespace detail

/// Vertex sets of all chordless odd cycles with length in [3, max_len]
/// (max_len = 0 means no limit), each reported once, sorted lexicographically.
inline std::vector<VertexSet> induced_odd_cycles(const Graph& g, std::size_t max_len = 0) {
    if (max_len == 0) max_len = g.order();
    if (max_len < 3) throw ParameterError("max_len must be at least 3");
    std::vector<VertexSet> out;
    detail::walk_chordless_cycles(
        g, max_len, [](const std::vector<Vertex>&) { return true; },
        [&](const std::vector<Vertex>& cycle) {
            if (cycle.size() % 2 == 1) out.push_back(VertexSet::from_range(g.order(), cycle));
            return true;
        });
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
        return a.count() != b.count() ? a.count() < b.count() : lex_less(a, b);
    });
    return out;
}

/// Searches for a Hochster configuration.
///
/// A configuration exists iff some chordless odd cycle C1 leaves a
/// non-bipartite graph after deleting N[C1]: any odd cycle there shortens
/// along chords to a chordless odd cycle of G that does not touch C1. Partial
/// paths whose closed neighbourhood already leaves a bipartite remainder are
/// abandoned, since extending a path only shrinks the remainder.
inline std::optional<HochsterWitness> find_hochster(const Graph& g) {
    const std::size_t n = g.order();
    if (n < 6 || is_bipartite(g)) return std::nullopt;

    for (const auto& tri : triangles(g)) {
        const VertexSet rest = ~closed_neighborhood(g, tri);
        if (auto other = detail::chordless_odd_cycle(g, rest)) {
            return detail::make_witness(tri.to_vector(), std::move(*other));
        }
    }

    auto remainder = [&](const std::vector<Vertex>& path) {
        VertexSet reach = VertexSet::from_range(n, path);
        for (Vertex v : path) reach |= g.neighbors(v);
        return ~reach;
    };
    std::optional<HochsterWitness> found;
    detail::walk_chordless_cycles(
        g, n, [&](const std::vector<Vertex>& path) { return !is_bipartite(g, remainder(path)); },
        [&](const std::vector<Vertex>& cycle) {
            if (cycle.size() % 2 == 0 || cycle.size() == 3) return true;
            if (auto other = detail::chordless_odd_cycle(g, remainder(cycle))) {
                found = detail::make_witness(cycle, std::move(*other));
                return false;
            }
            return true;
        });
    return found;
}

/// Blind oracle for find_hochster: lists every vertex subset that induces an
/// odd cycle, then tests all pairs. Exponential; meant for n <= 16.
inline std::optional<HochsterWitness> find_hochster_naive(const Graph& g) {
    const std::size_t n = g.order();
    if (n > 24) throw ResourceError("find_hochster_naive is limited to n <= 24");
    std::vector<VertexSet> odd;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const int k = std::popcount(mask);
        if (k < 3 || k % 2 == 0) continue;
        VertexSet s(n);
        for (Vertex v = 0; v < n; ++v) {
            if ((mask >> v) & 1U) s.insert(v);
        }
        if (induces_cycle(g, s)) odd.push_back(std::move(s));
    }
    for (std::size_t i = 0; i < odd.size(); ++i) {
        for (std::size_t j = i + 1; j < odd.size(); ++j) {
            if (odd[i].intersects(odd[j])) continue;
            bool touching = false;
            odd[i].for_each([&](Vertex v) { touching = touching || g.neighbors(v).intersects(odd[j]); });
            if (!touching) return detail::make_witness(odd[i].to_vector(), odd[j].to_vector());
        }
    }
    return std::nullopt;
}

/// I(G) is normal iff G has no Hochster configuration.
inline bool edge_ideal_normal(const Graph& g) { return !find_hochster(g).has_value(); }

/// Normality of I_c(G): bipartite graphs are perfect, so their cover ideals
/// are normal; for beta_0 <= 2 the duality criterion applies to the
/// complement; otherwise no criterion is available.
inline CoverNormality cover_ideal_normality(const Graph& g) {
    if (is_bipartite(g)) return CoverNormality::Normal;
    if (has_independent_set(g, 3)) return CoverNormality::UndecidedBeta0TooLarge;
    return find_hochster(complement(g)) ? CoverNormality::NotNormal : CoverNormality::Normal;
}

}  // namespace rmideal
