#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rmideal/errors.hpp"
#include "rmideal/vertex_set.hpp"

namespace rmideal {

struct Edge {
    Vertex u;
    Vertex v;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1, stored as a packed symmetric
/// bit matrix with an empty diagonal.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : rows_(n, VertexSet(n)) {}

    /// Rejects self-loops, duplicate edges and out-of-range endpoints.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
        Graph g(n);
        for (const Edge& e : edges) {
            if (e.u >= n || e.v >= n) {
                throw ParameterError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range for n=" +
                                     std::to_string(n));
            }
            if (e.u == e.v) throw ParameterError("self-loop at vertex " + std::to_string(e.u));
            if (g.adjacent(e.u, e.v)) {
                throw ParameterError("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
            }
            g.add_edge(e.u, e.v);
        }
        return g;
    }

    static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    static Graph complete(std::size_t n) {
        Graph g(n);
        for (Vertex u = 0; u < n; ++u) {
            g.rows_[u] = VertexSet::full(n);
            g.rows_[u].erase(u);
        }
        return g;
    }

    static Graph cycle(std::size_t n) {
        if (n < 3) throw ParameterError("cycle needs at least 3 vertices");
        Graph g(n);
        for (Vertex u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
        return g;
    }

    std::size_t order() const noexcept { return rows_.size(); }

    std::size_t size() const noexcept {
        std::size_t twice = 0;
        for (const auto& r : rows_) twice += r.count();
        return twice / 2;
    }

    bool adjacent(Vertex u, Vertex v) const noexcept { return u < order() && rows_[u].contains(v); }

    void add_edge(Vertex u, Vertex v) {
        if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
        rows_.at(u).insert(v);
        rows_.at(v).insert(u);
    }

    void remove_edge(Vertex u, Vertex v) {
        rows_.at(u).erase(v);
        rows_.at(v).erase(u);
    }

    const VertexSet& neighbors(Vertex v) const { return rows_.at(v); }
    std::size_t degree(Vertex v) const { return rows_.at(v).count(); }
    VertexSet vertices() const { return VertexSet::full(order()); }

    /// Edges with u < v in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (Vertex u = 0; u < order(); ++u) {
            VertexSet later = rows_[u];
            later.erase_through(u);
            later.for_each([&](Vertex v) { out.push_back({u, v}); });
        }
        return out;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<VertexSet> rows_;
};

inline Graph complement(const Graph& g) {
    const std::size_t n = g.order();
    Graph h(n);
    for (Vertex u = 0; u < n; ++u) {
        VertexSet non = ~g.neighbors(u);
        non.erase_through(u);
        non.for_each([&](Vertex v) { h.add_edge(u, v); });
    }
    return h;
}

/// Subgraph induced on `s`, relabelled so that the i-th smallest member of
/// `s` becomes vertex i.
inline Graph induced(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order()) {
        const auto members = s.to_vector();
        if (!members.empty() && members.back() >= g.order()) {
            throw ParameterError("vertex " + std::to_string(members.back()) + " out of range for n=" +
                                 std::to_string(g.order()));
        }
        return induced(g, VertexSet::from_range(g.order(), members));
    }
    const auto members = s.to_vector();
    Graph h(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (g.adjacent(members[i], members[j])) h.add_edge(i, j);
        }
    }
    return h;
}

inline Graph induced(const Graph& g, std::span<const Vertex> members) {
    for (Vertex v : members) {
        if (v >= g.order()) {
            throw ParameterError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(g.order()));
        }
    }
    return induced(g, VertexSet::from_range(g.order(), members));
}

/// Vertex-disjoint union; vertices of `b` are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (const Edge& e : a.edges()) g.add_edge(e.u, e.v);
    for (const Edge& e : b.edges()) g.add_edge(e.u + a.order(), e.v + a.order());
    return g;
}

/// Connected components of the subgraph induced on `within`.
inline std::size_t component_count(const Graph& g, const VertexSet& within) {
    VertexSet unseen = within;
    std::size_t components = 0;
    while (auto root = unseen.first()) {
        ++components;
        VertexSet frontier(g.order());
        frontier.insert(*root);
        unseen.erase(*root);
        while (!frontier.empty()) {
            VertexSet next(g.order());
            frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
            next &= unseen;
            unseen -= next;
            frontier = std::move(next);
        }
    }
    return components;
}

inline std::size_t component_count(const Graph& g) { return component_count(g, g.vertices()); }

/// A graph is a forest iff |E| = n - #components.
inline bool has_cycle(const Graph& g) { return g.size() + component_count(g) > g.order(); }

/// 2-colourability of the subgraph induced on `within`. Level-synchronous BFS
/// over bitsets: an edge inside one BFS layer is an odd closed walk.
inline bool is_bipartite(const Graph& g, const VertexSet& within) {
    VertexSet unseen = within;
    while (auto root = unseen.first()) {
        VertexSet layer(g.order());
        layer.insert(*root);
        unseen.erase(*root);
        while (!layer.empty()) {
            VertexSet next(g.order());
            bool clash = false;
            layer.for_each([&](Vertex v) {
                const VertexSet& nb = g.neighbors(v);
                if (nb.intersects(layer)) clash = true;
                next |= nb;
            });
            if (clash) return false;
            next &= unseen;
            unseen -= next;
            layer = std::move(next);
        }
    }
    return true;
}

inline bool is_bipartite(const Graph& g) { return is_bipartite(g, g.vertices()); }

}  // namespace rmideal
