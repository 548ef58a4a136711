#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "spandec/error.hpp"
#include "spandec/union_find.hpp"

namespace spandec {

using VertexId = int;
using VertexSet = std::set<VertexId>;

// Unordered vertex pair, stored normalized (u < v).
struct Edge {
    VertexId u;
    VertexId v;

    Edge(VertexId a, VertexId b) : u(std::min(a, b)), v(std::max(a, b)) {
        detail::require(a != b, "self-loop edge " + std::to_string(a));
    }

    bool operator==(const Edge& o) const { return u == o.u && v == o.v; }
    bool operator<(const Edge& o) const { return u < o.u || (u == o.u && v < o.v); }
};

using EdgeSet = std::set<Edge>;

// Finite simple undirected graph over nonnegative integer vertex ids.
// Immutable by convention once built; all operations below are pure.
class Graph {
public:
    Graph() = default;

    void add_vertex(VertexId v) {
        detail::require(v >= 0, "negative vertex id " + std::to_string(v));
        vertices_.insert(v);
        adj_.try_emplace(v);
    }

    // Endpoints are added as vertices if missing.
    void add_edge(VertexId a, VertexId b) {
        Edge e(a, b);
        add_vertex(a);
        add_vertex(b);
        if (edges_.insert(e).second) {
            adj_[a].insert(b);
            adj_[b].insert(a);
        }
    }

    bool has_vertex(VertexId v) const { return vertices_.count(v) > 0; }

    bool has_edge(VertexId a, VertexId b) const {
        return a != b && edges_.count(Edge(a, b)) > 0;
    }

    const VertexSet& vertices() const { return vertices_; }
    const EdgeSet& edges() const { return edges_; }

    const VertexSet& neighbors(VertexId v) const {
        auto it = adj_.find(v);
        detail::require(it != adj_.end(), "unknown vertex id " + std::to_string(v));
        return it->second;
    }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool operator==(const Graph& o) const {
        return vertices_ == o.vertices_ && edges_ == o.edges_;
    }

private:
    VertexSet vertices_;
    EdgeSet edges_;
    std::map<VertexId, VertexSet> adj_;
};

namespace detail {
inline void require_subset(const VertexSet& x, const Graph& g, const std::string& op) {
    for (VertexId v : x)
        require(g.has_vertex(v), op + ": unknown vertex id " + std::to_string(v));
}
}  // namespace detail

// G[X]: subgraph induced by x.
inline Graph induced_subgraph(const Graph& g, const VertexSet& x) {
    detail::require_subset(x, g, "induced_subgraph");
    Graph r;
    for (VertexId v : x) r.add_vertex(v);
    for (const Edge& e : g.edges())
        if (x.count(e.u) && x.count(e.v)) r.add_edge(e.u, e.v);
    return r;
}

// N_G(X): vertices outside x with a neighbor in x.
inline VertexSet neighbor_set(const Graph& g, const VertexSet& x) {
    detail::require_subset(x, g, "neighbor_set");
    VertexSet r;
    for (VertexId v : x)
        for (VertexId w : g.neighbors(v))
            if (!x.count(w)) r.insert(w);
    return r;
}

// Maximal connected vertex sets, ordered by smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    VertexSet seen;
    for (VertexId s : g.vertices()) {
        if (seen.count(s)) continue;
        VertexSet comp;
        std::vector<VertexId> stack{s};
        seen.insert(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.insert(v);
            for (VertexId w : g.neighbors(v))
                if (seen.insert(w).second) stack.push_back(w);
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    return connected_components(g).size() <= 1;
}

inline bool is_acyclic(const Graph& g) {
    UnionFind uf;
    for (const Edge& e : g.edges())
        if (!uf.unite(e.u, e.v)) return false;
    return true;
}

// Torso of g on x: u,v adjacent iff some u-v path has all internal vertices
// outside x. Computed by cliquing N(C) ∩ x over the components C of g - x,
// plus the direct x-x edges.
inline Graph torso(const Graph& g, const VertexSet& x) {
    detail::require_subset(x, g, "torso");
    Graph r;
    for (VertexId v : x) r.add_vertex(v);
    for (const Edge& e : g.edges())
        if (x.count(e.u) && x.count(e.v)) r.add_edge(e.u, e.v);

    VertexSet outside;
    for (VertexId v : g.vertices())
        if (!x.count(v)) outside.insert(v);
    for (const VertexSet& comp : connected_components(induced_subgraph(g, outside))) {
        VertexSet attach;
        for (VertexId v : neighbor_set(g, comp))
            if (x.count(v)) attach.insert(v);
        for (auto it = attach.begin(); it != attach.end(); ++it)
            for (auto jt = std::next(it); jt != attach.end(); ++jt)
                r.add_edge(*it, *jt);
    }
    return r;
}

// Inclusion-wise maximal M ⊆ candidates with f + M acyclic. Candidates are
// taken in sorted order, so the result is reproducible.
inline EdgeSet extend_to_maximal_forest(const Graph& f, const EdgeSet& candidates) {
    detail::require(is_acyclic(f), "extend_to_maximal_forest: input contains a cycle");
    for (const Edge& e : candidates) {
        detail::require(f.has_vertex(e.u) && f.has_vertex(e.v),
                        "extend_to_maximal_forest: candidate endpoint not in forest");
    }
    UnionFind uf;
    for (VertexId v : f.vertices()) uf.add(v);
    for (const Edge& e : f.edges()) uf.unite(e.u, e.v);
    EdgeSet m;
    for (const Edge& e : candidates)
        if (uf.unite(e.u, e.v)) m.insert(e);
    return m;
}

// Union of vertex and edge sets.
inline Graph graph_union(const Graph& a, const Graph& b) {
    Graph r = a;
    for (VertexId v : b.vertices()) r.add_vertex(v);
    for (const Edge& e : b.edges()) r.add_edge(e.u, e.v);
    return r;
}

inline Graph graph_plus_edges(const Graph& g, const EdgeSet& extra) {
    Graph r = g;
    for (const Edge& e : extra) r.add_edge(e.u, e.v);
    return r;
}

inline VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(r, r.end()));
    return r;
}

inline VertexSet set_intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(r, r.end()));
    return r;
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet r = a;
    r.insert(b.begin(), b.end());
    return r;
}

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace spandec
