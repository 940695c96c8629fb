#pragma once

// Named graphs and deliberately naive reference implementations used to
// cross-check the library. Everything here is subset enumeration; keep n small.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "rmideal/rmideal.hpp"

namespace fixtures {

using rmideal::Graph;
using rmideal::Vertex;

// 5-cycle 0-1-2-3-4 with chords 1-4 and 2-4; beta0 = 2.
inline Graph five_cycle_chords() {
    return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 4}, {2, 4}});
}

// Triangles {0,1,2} and {4,5,6} linked through vertex 3: a Hochster configuration.
inline Graph joined_triangles() {
    return Graph::from_edges(7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 6}});
}

// Seven vertices; its restriction to {0,1,3,4,5} is a triangle plus a disjoint edge.
inline Graph kite_tail() {
    return Graph::from_edges(7, {{3, 4}, {2, 3}, {0, 2}, {1, 2}, {0, 1}, {0, 5}, {1, 6}, {5, 6}, {1, 5}});
}

inline std::vector<Vertex> bits_to_vertices(std::uint64_t mask) {
    std::vector<Vertex> out;
    for (Vertex v = 0; mask != 0; ++v, mask >>= 1) {
        if (mask & 1U) out.push_back(v);
    }
    return out;
}

inline bool independent(const Graph& g, const std::vector<Vertex>& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (g.adjacent(s[i], s[j])) return false;
        }
    }
    return true;
}

inline bool clique(const Graph& g, const std::vector<Vertex>& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (!g.adjacent(s[i], s[j])) return false;
        }
    }
    return true;
}

inline std::size_t naive_independence_number(const Graph& g) {
    std::size_t best = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m) {
        const auto s = bits_to_vertices(m);
        if (s.size() > best && independent(g, s)) best = s.size();
    }
    return best;
}

inline std::size_t naive_clique_number(const Graph& g) {
    std::size_t best = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m) {
        const auto s = bits_to_vertices(m);
        if (s.size() > best && clique(g, s)) best = s.size();
    }
    return best;
}

// Minimal vertex covers as sorted vertex lists, lexicographically ordered.
inline std::vector<std::vector<Vertex>> naive_minimal_covers(const Graph& g) {
    const std::size_t n = g.order();
    auto covers = [&](std::uint64_t m) {
        for (const auto& e : g.edges()) {
            if (!((m >> e.u) & 1U) && !((m >> e.v) & 1U)) return false;
        }
        return true;
    };
    std::vector<std::vector<Vertex>> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        if (!covers(m)) continue;
        bool minimal = true;
        for (Vertex v = 0; v < n && minimal; ++v) {
            if (((m >> v) & 1U) && covers(m & ~(std::uint64_t{1} << v))) minimal = false;
        }
        if (minimal) out.push_back(bits_to_vertices(m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Induced copies of pattern `h` in `g`: vertex subsets of size |h| whose
// induced subgraph is isomorphic to h.
inline std::uint64_t naive_count_induced(const Graph& g, const Graph& h) {
    const std::size_t k = h.order();
    std::uint64_t count = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m) {
        if (static_cast<std::size_t>(__builtin_popcountll(m)) != k) continue;
        const auto s = bits_to_vertices(m);
        if (rmideal::isomorphic_brute_force(rmideal::induced(g, std::span<const Vertex>(s)), h)) ++count;
    }
    return count;
}

// 2-colouring by exhaustive search over colourings.
inline bool naive_bipartite(const Graph& g) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m) {
        bool ok = true;
        for (const auto& e : g.edges()) {
            if (((m >> e.u) & 1U) == ((m >> e.v) & 1U)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

inline Graph random_graph(std::size_t n, double p, std::uint64_t seed, std::uint64_t index) {
    return rmideal::sample_er({n, p, seed, index});
}

}  // namespace fixtures
