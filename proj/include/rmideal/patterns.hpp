#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rmideal/errors.hpp"
#include "rmideal/graph.hpp"

namespace rmideal {

/// The two pattern graphs whose induced copies drive the moment arguments:
/// T, two vertex-disjoint triangles with no edge between them, and E_t, the
/// edgeless graph on t vertices.
class PatternGraph {
public:
    enum class Kind { TwoTriangles, Empty };

    static PatternGraph two_triangles() { return PatternGraph(Kind::TwoTriangles, 6); }

    static PatternGraph empty(std::size_t t) {
        if (t < 2) throw ParameterError("E_t needs t > 1, got " + std::to_string(t));
        return PatternGraph(Kind::Empty, t);
    }

    /// "T" or "E<t>" (also "E_<t>").
    static PatternGraph parse(std::string_view text) {
        if (text == "T") return two_triangles();
        if (!text.empty() && text.front() == 'E') {
            text.remove_prefix(1);
            if (!text.empty() && text.front() == '_') text.remove_prefix(1);
            std::size_t t = 0;
            if (text.empty()) throw ParameterError("pattern E needs a size, e.g. E3");
            for (char c : text) {
                if (c < '0' || c > '9') throw ParameterError("bad pattern size in '" + std::string(text) + "'");
                t = t * 10 + static_cast<std::size_t>(c - '0');
            }
            return empty(t);
        }
        throw ParameterError("unknown pattern '" + std::string(text) + "' (expected T or E<t>)");
    }

    Kind kind() const noexcept { return kind_; }
    std::size_t order() const noexcept { return order_; }
    std::string name() const { return kind_ == Kind::TwoTriangles ? "T" : "E" + std::to_string(order_); }

    Graph graph() const {
        if (kind_ == Kind::Empty) return Graph(order_);
        return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    }

    friend bool operator==(const PatternGraph&, const PatternGraph&) = default;

private:
    PatternGraph(Kind k, std::size_t order) : kind_(k), order_(order) {}

    Kind kind_;
    std::size_t order_;
};

namespace detail {

inline std::uint64_t count_cliques_of_size(const Graph& g, const VertexSet& candidates, std::size_t k) {
    if (k == 0) return 1;
    if (k == 1) return candidates.count();
    std::uint64_t total = 0;
    candidates.for_each([&](Vertex v) {
        VertexSet next = candidates & g.neighbors(v);
        next.erase_through(v);
        if (next.count() + 1 >= k) total += count_cliques_of_size(g, next, k - 1);
    });
    return total;
}

}  // namespace detail

/// Number of stable t-sets of g.
inline std::uint64_t count_independent_sets(const Graph& g, std::size_t t) {
    const Graph h = complement(g);
    return detail::count_cliques_of_size(h, h.vertices(), t);
}

/// Triangles {a<b<c} of g in lexicographic order.
inline std::vector<VertexSet> triangles(const Graph& g) {
    std::vector<VertexSet> out;
    for (Vertex a = 0; a < g.order(); ++a) {
        VertexSet bs = g.neighbors(a);
        bs.erase_through(a);
        bs.for_each([&](Vertex b) {
            VertexSet cs = bs & g.neighbors(b);
            cs.erase_through(b);
            cs.for_each([&](Vertex c) { out.push_back(VertexSet::of(g.order(), {a, b, c})); });
        });
    }
    return out;
}

/// Closed neighbourhood N[s] = s ∪ N(s).
inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet out = s;
    s.for_each([&](Vertex v) { out |= g.neighbors(v); });
    return out;
}

/// Y_pat(g): vertex subsets whose induced subgraph is isomorphic to pat.
///
/// A 6-set induces T exactly when it splits into two triangles with no edge
/// between them, so Y_T counts unordered pairs of non-touching triangles.
inline std::uint64_t count_induced(const Graph& g, const PatternGraph& pat) {
    if (pat.kind() == PatternGraph::Kind::Empty) return count_independent_sets(g, pat.order());
    const auto tri = triangles(g);
    std::vector<VertexSet> reach;
    reach.reserve(tri.size());
    for (const auto& t : tri) reach.push_back(closed_neighborhood(g, t));
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < tri.size(); ++i) {
        for (std::size_t j = i + 1; j < tri.size(); ++j) {
            if (!tri[j].intersects(reach[i])) ++count;
        }
    }
    return count;
}

}  // namespace rmideal
