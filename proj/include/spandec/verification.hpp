#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "spandec/error.hpp"
#include "spandec/forest_decomposition.hpp"
#include "spandec/graph.hpp"
#include "spandec/validation.hpp"

namespace spandec {

namespace detail {
inline bool induces_connected(const Graph& f, const VertexSet& nodes) {
    if (nodes.empty()) return false;
    VertexSet seen;
    std::vector<VertexId> stack{*nodes.begin()};
    seen.insert(*nodes.begin());
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : f.neighbors(v))
            if (nodes.count(w) && seen.insert(w).second) stack.push_back(w);
    }
    return seen == nodes;
}
}  // namespace detail

// Forest-decomposition properties: every vertex's node set is nonempty and
// connected in the forest, and every edge is contained in some bag.
inline ValidationReport validate_forest_decomposition(const Graph& g,
                                                      const ForestDecomposition& d) {
    ValidationReport rep;
    if (!is_acyclic(d.forest)) rep.add("forest-acyclic", "index graph contains a cycle");
    for (const auto& [x, bag] : d.bags)
        if (!d.forest.has_vertex(x))
            rep.add("bag-node", "bag node " + std::to_string(x) + " not in the forest");
    std::map<VertexId, VertexSet> node_sets;
    for (const auto& [x, bag] : d.bags)
        for (VertexId u : bag) node_sets[u].insert(x);
    for (VertexId u : g.vertices()) {
        auto it = node_sets.find(u);
        if (it == node_sets.end()) {
            rep.add("vertex-connected", "vertex " + std::to_string(u) + " is in no bag");
            continue;
        }
        if (!detail::induces_connected(d.forest, it->second))
            rep.add("vertex-connected", "bag nodes of vertex " + std::to_string(u) +
                                            " are disconnected in the forest");
    }
    for (const Edge& e : g.edges()) {
        bool covered = false;
        for (const auto& [x, bag] : d.bags)
            if (bag.count(e.u) && bag.count(e.v)) {
                covered = true;
                break;
            }
        if (!covered)
            rep.add("edge-coverage", "edge " + std::to_string(e.u) + "-" +
                                         std::to_string(e.v) + " is in no bag");
    }
    return rep;
}

// Suitability adds: the forest is a subgraph of g spanning all its vertices,
// every vertex lies in its own bag, and for connected hosts the forest is
// connected (hence a spanning tree).
inline ValidationReport validate_suitable(const Graph& g, const ForestDecomposition& d) {
    ValidationReport rep = validate_forest_decomposition(g, d);
    if (d.forest.vertices() != g.vertices())
        rep.add("forest-spanning", "V(F) differs from V(G)");
    for (const Edge& e : d.forest.edges())
        if (!g.has_edge(e.u, e.v))
            rep.add("forest-subgraph", "forest edge " + std::to_string(e.u) + "-" +
                                           std::to_string(e.v) + " is not a graph edge");
    for (VertexId u : g.vertices()) {
        auto it = d.bags.find(u);
        if (it == d.bags.end() || !it->second.count(u))
            rep.add("own-bag", "vertex " + std::to_string(u) + " is not in its own bag");
    }
    if (is_connected(g) && g.vertex_count() > 0 && !is_connected(d.forest))
        rep.add("forest-connected", "host graph is connected but the forest is not");
    return rep;
}

inline constexpr std::size_t kCmpOracleLimit = 7;

namespace detail {

// All connected vertex subsets of tree t containing u.
inline std::vector<VertexSet> subtrees_containing(const Graph& t, VertexId u) {
    std::vector<VertexSet> result{{u}};
    // BFS over partial subtrees, growing by one adjacent vertex; dedupe.
    std::set<VertexSet> seen{{VertexSet{u}}};
    for (std::size_t i = 0; i < result.size(); ++i) {
        VertexSet cur = result[i];
        for (VertexId v : cur)
            for (VertexId w : t.neighbors(v)) {
                if (cur.count(w)) continue;
                VertexSet next = cur;
                next.insert(w);
                if (seen.insert(next).second) result.push_back(next);
            }
    }
    return result;
}

// Can bags of size <= cap realize a suitable decomposition indexed by t?
// Backtracking over per-vertex subtree choices with load pruning.
class BagSearch {
public:
    BagSearch(const Graph& g, const Graph& t, int cap)
        : g_(g), tree_(t), cap_(cap) {
        for (VertexId v : g.vertices()) order_.push_back(v);
        // handle high-degree vertices first
        std::sort(order_.begin(), order_.end(), [&](VertexId a, VertexId b) {
            auto da = g.neighbors(a).size(), db = g.neighbors(b).size();
            return da != db ? da > db : a < b;
        });
        for (VertexId v : order_) options_[v] = subtrees_containing(t, v);
        for (VertexId x : g.vertices()) load_[x] = 0;
    }

    bool feasible() { return assign(0); }

private:
    bool assign(std::size_t idx) {
        if (idx == order_.size()) return true;
        VertexId u = order_[idx];
        for (const VertexSet& nodes : options_[u]) {
            if (static_cast<int>(nodes.size()) > 0 && !fits(nodes)) continue;
            bool ok = true;
            // edge constraints against already-assigned vertices
            for (VertexId v : g_.neighbors(u)) {
                auto it = chosen_.find(v);
                if (it == chosen_.end()) continue;
                if (set_intersect(nodes, it->second).empty()) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            chosen_[u] = nodes;
            for (VertexId x : nodes) ++load_[x];
            if (assign(idx + 1)) return true;
            for (VertexId x : nodes) --load_[x];
            chosen_.erase(u);
        }
        return false;
    }

    bool fits(const VertexSet& nodes) {
        for (VertexId x : nodes)
            if (load_[x] + 1 > cap_) return false;
        return true;
    }

    const Graph& g_;
    const Graph& tree_;
    int cap_;
    std::vector<VertexId> order_;
    std::map<VertexId, std::vector<VertexSet>> options_;
    std::map<VertexId, VertexSet> chosen_;
    std::map<VertexId, int> load_;
};

// Spanning trees of a connected graph, by brute force over edge subsets.
inline std::vector<Graph> spanning_trees(const Graph& g) {
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    const std::size_t n = g.vertex_count();
    std::vector<Graph> trees;
    if (n == 1) {
        Graph t;
        t.add_vertex(*g.vertices().begin());
        trees.push_back(std::move(t));
        return trees;
    }
    const std::size_t need = n - 1;
    std::vector<std::size_t> pick(need);
    // enumerate all (m choose n-1) subsets
    std::vector<std::size_t> idx(need);
    for (std::size_t i = 0; i < need; ++i) idx[i] = i;
    if (edges.size() < need) return trees;
    while (true) {
        UnionFind uf;
        bool acyclic = true;
        for (std::size_t i : idx)
            if (!uf.unite(edges[i].u, edges[i].v)) {
                acyclic = false;
                break;
            }
        if (acyclic) {
            Graph t;
            for (VertexId v : g.vertices()) t.add_vertex(v);
            for (std::size_t i : idx) t.add_edge(edges[i].u, edges[i].v);
            if (is_connected(t)) trees.push_back(std::move(t));
        }
        // next combination
        std::size_t pos = need;
        while (pos > 0) {
            --pos;
            if (idx[pos] != pos + edges.size() - need) break;
            if (pos == 0) return trees;
        }
        if (idx[pos] == pos + edges.size() - need) return trees;
        ++idx[pos];
        for (std::size_t i = pos + 1; i < need; ++i) idx[i] = idx[i - 1] + 1;
    }
}

int brute_force_cmp_connected(const Graph& g);

}  // namespace detail

// Exact cmp(g): minimum width over all suitable forest decompositions.
// Exhaustive; guarded to small instances.
inline int brute_force_cmp(const Graph& g) {
    if (g.vertex_count() > kCmpOracleLimit)
        throw GuardError("brute_force_cmp: instance too large (" +
                         std::to_string(g.vertex_count()) + " > " +
                         std::to_string(kCmpOracleLimit) + " vertices)");
    if (g.vertex_count() == 0) return 0;
    int best = 0;
    for (const VertexSet& comp : connected_components(g))
        best = std::max(best,
                        detail::brute_force_cmp_connected(induced_subgraph(g, comp)));
    return best;
}

namespace detail {

// For a connected graph the indexing forest of a suitable decomposition is
// necessarily a spanning tree, so trying all spanning trees is exhaustive.
inline int brute_force_cmp_connected(const Graph& g) {
    if (g.vertex_count() == 1) return 0;
    std::vector<Graph> trees = spanning_trees(g);
    ensure(!trees.empty(), "brute_force_cmp: connected graph without spanning tree");
    int n = static_cast<int>(g.vertex_count());
    for (int width = 0; width < n; ++width) {
        for (const Graph& t : trees) {
            BagSearch search(g, t, width + 1);
            if (search.feasible()) return width;
        }
    }
    return n - 1;
}

}  // namespace detail

}  // namespace spandec
