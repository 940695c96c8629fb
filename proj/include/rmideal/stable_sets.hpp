#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "rmideal/errors.hpp"
#include "rmideal/graph.hpp"

namespace rmideal {

namespace detail {

// Greedy sequential colouring of `candidates` in the graph `g`. Fills `order`
// with the vertices grouped by colour class and `bound[i]` with the colour
// number of order[i]; any clique inside order[0..i] has at most bound[i]
// vertices.
inline void colour_sort(const Graph& g, const VertexSet& candidates, std::vector<Vertex>& order,
                        std::vector<std::size_t>& bound) {
    order.clear();
    bound.clear();
    VertexSet uncoloured = candidates;
    std::size_t colour = 0;
    while (!uncoloured.empty()) {
        ++colour;
        VertexSet available = uncoloured;
        while (auto v = available.first()) {
            order.push_back(*v);
            bound.push_back(colour);
            uncoloured.erase(*v);
            available.erase(*v);
            available -= g.neighbors(*v);
        }
    }
}

// Branch and bound maximum clique with colouring bounds. When `target` is
// nonzero the search stops as soon as a clique of that size is found.
class CliqueSearch {
public:
    CliqueSearch(const Graph& g, std::size_t target) : g_(g), target_(target) {}

    std::size_t run() {
        if (g_.order() == 0) return 0;
        expand(0, g_.vertices());
        return best_;
    }

private:
    bool done() const { return target_ != 0 && best_ >= target_; }

    void expand(std::size_t depth, VertexSet candidates) {
        std::vector<Vertex> order;
        std::vector<std::size_t> bound;
        colour_sort(g_, candidates, order, bound);
        const std::size_t goal = target_ != 0 ? target_ - 1 : best_;
        for (std::size_t i = order.size(); i-- > 0;) {
            const std::size_t need = target_ != 0 ? goal : best_;
            if (depth + bound[i] <= need) return;
            const Vertex v = order[i];
            VertexSet next = candidates & g_.neighbors(v);
            if (next.empty()) {
                best_ = std::max(best_, depth + 1);
            } else {
                expand(depth + 1, std::move(next));
            }
            if (done()) return;
            candidates.erase(v);
        }
    }

    const Graph& g_;
    std::size_t target_;
    std::size_t best_ = 0;
};

}  // namespace detail

inline std::size_t clique_number(const Graph& g) { return detail::CliqueSearch(g, 0).run(); }

inline bool has_clique(const Graph& g, std::size_t k) {
    if (k == 0) return true;
    if (k > g.order()) return false;
    return detail::CliqueSearch(g, k).run() >= k;
}

/// Exact independence number beta_0, as the clique number of the complement.
inline std::size_t independence_number(const Graph& g) { return clique_number(complement(g)); }

/// beta_0(g) >= t, stopping at the first stable t-set found.
inline bool has_independent_set(const Graph& g, std::size_t t) {
    if (t == 0) return true;
    if (t > g.order()) return false;
    if (t == 1) return true;
    return has_clique(complement(g), t);
}

inline constexpr std::size_t kDefaultEnumerationLimit = 1'000'000;

/// All maximal cliques (Bron-Kerbosch with Tomita pivoting), sorted
/// lexicographically by member list.
inline std::vector<VertexSet> maximal_cliques(const Graph& g, std::size_t limit = kDefaultEnumerationLimit) {
    if (limit == 0) throw ParameterError("enumeration limit must be positive");
    std::vector<VertexSet> out;
    const std::size_t n = g.order();
    if (n == 0) return out;

    auto recurse = [&](auto& self, VertexSet current, VertexSet candidates, VertexSet excluded) -> void {
        if (candidates.empty()) {
            if (excluded.empty()) {
                if (out.size() == limit) {
                    throw ResourceError("maximal set enumeration exceeded limit " + std::to_string(limit) + " (reached " +
                                        std::to_string(out.size() + 1) + ")");
                }
                out.push_back(std::move(current));
            }
            return;
        }
        // Pivot maximising |candidates ∩ N(pivot)|.
        Vertex pivot = 0;
        std::size_t best = 0;
        bool have = false;
        (candidates | excluded).for_each([&](Vertex u) {
            const std::size_t c = (candidates & g.neighbors(u)).count();
            if (!have || c > best) {
                pivot = u;
                best = c;
                have = true;
            }
        });
        const VertexSet branch = candidates - g.neighbors(pivot);
        branch.for_each([&](Vertex v) {
            VertexSet next = current;
            next.insert(v);
            self(self, std::move(next), candidates & g.neighbors(v), excluded & g.neighbors(v));
            candidates.erase(v);
            excluded.insert(v);
        });
    };
    recurse(recurse, VertexSet(n), g.vertices(), VertexSet(n));
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return lex_less(a, b); });
    return out;
}

/// All maximal stable sets; throws ResourceError once more than `limit` exist.
inline std::vector<VertexSet> maximal_independent_sets(const Graph& g, std::size_t limit = kDefaultEnumerationLimit) {
    return maximal_cliques(complement(g), limit);
}

}  // namespace rmideal
