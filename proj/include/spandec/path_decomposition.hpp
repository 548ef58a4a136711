#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "spandec/error.hpp"
#include "spandec/graph.hpp"
#include "spandec/interface_graph.hpp"
#include "spandec/validation.hpp"

namespace spandec {

// Ordered bag sequence over a host graph.
struct PathDecomposition {
    std::vector<VertexSet> bags;

    // Max bag size minus one; -1 for an all-empty decomposition.
    int width() const {
        std::size_t m = 0;
        for (const auto& b : bags) m = std::max(m, b.size());
        return static_cast<int>(m) - 1;
    }
};

inline std::string format_vertex_set(const VertexSet& s) {
    std::string r = "{";
    for (VertexId v : s) {
        if (r.size() > 1) r += ",";
        r += std::to_string(v);
    }
    return r + "}";
}

// Checks the two path-decomposition properties plus membership of bag
// contents in the host graph. All violations are reported with witnesses.
inline ValidationReport validate_pathdec(const Graph& g, const PathDecomposition& p) {
    ValidationReport rep;
    std::map<VertexId, std::vector<std::size_t>> occ;
    for (std::size_t i = 0; i < p.bags.size(); ++i) {
        for (VertexId v : p.bags[i]) {
            if (!g.has_vertex(v)) {
                rep.add("foreign-vertex", "bag " + std::to_string(i + 1) +
                                              " contains unknown vertex " +
                                              std::to_string(v));
                continue;
            }
            occ[v].push_back(i);
        }
    }
    for (VertexId v : g.vertices()) {
        auto it = occ.find(v);
        if (it == occ.end()) {
            rep.add("vertex-missing", "vertex " + std::to_string(v) + " is in no bag");
            continue;
        }
        const auto& idxs = it->second;
        if (idxs.back() - idxs.front() + 1 != idxs.size())
            rep.add("vertex-interval", "vertex " + std::to_string(v) +
                                           " occurs in a non-contiguous bag range");
    }
    for (const Edge& e : g.edges()) {
        bool covered = false;
        for (const auto& b : p.bags)
            if (b.count(e.u) && b.count(e.v)) {
                covered = true;
                break;
            }
        if (!covered)
            rep.add("edge-coverage", "edge " + std::to_string(e.u) + "-" +
                                         std::to_string(e.v) + " is in no bag");
    }
    return rep;
}

// Turns a valid decomposition into a nice one of the same width: between
// consecutive bags, forget W_i \ W_{i+1} in ascending order, then introduce
// W_{i+1} \ W_i in ascending order; equal consecutive bags are collapsed.
inline PathDecomposition make_nice(const PathDecomposition& p) {
    // Interval violations would silently break the construction; they are
    // checkable without the host graph, so reject them here.
    std::map<VertexId, std::vector<std::size_t>> occ;
    for (std::size_t i = 0; i < p.bags.size(); ++i)
        for (VertexId v : p.bags[i]) occ[v].push_back(i);
    for (const auto& [v, idxs] : occ)
        detail::require(idxs.back() - idxs.front() + 1 == idxs.size(),
                        "make_nice: vertex " + std::to_string(v) +
                            " has a non-contiguous bag range");

    PathDecomposition out;
    auto push = [&out](const VertexSet& b) {
        if (out.bags.empty() || out.bags.back() != b) out.bags.push_back(b);
    };
    if (p.bags.empty()) return out;
    push(p.bags.front());
    for (std::size_t i = 0; i + 1 < p.bags.size(); ++i) {
        VertexSet cur = p.bags[i];
        const VertexSet& next = p.bags[i + 1];
        for (VertexId v : set_minus(p.bags[i], next)) {
            cur.erase(v);
            push(cur);
        }
        for (VertexId v : set_minus(next, p.bags[i])) {
            cur.insert(v);
            push(cur);
        }
    }
    return out;
}

inline bool is_nice(const PathDecomposition& p) {
    for (std::size_t i = 0; i + 1 < p.bags.size(); ++i) {
        std::size_t diff = set_minus(p.bags[i], p.bags[i + 1]).size() +
                           set_minus(p.bags[i + 1], p.bags[i]).size();
        if (diff != 1) return false;
    }
    return true;
}

// Greedy coloring along a nice decomposition: a vertex first appearing in a
// bag receives the smallest label unused by the rest of that bag. The result
// is injective on every bag (the co-bag graph is an interval graph and bags
// appear in left-endpoint order).
inline Labeling interval_coloring(const Graph& g, const PathDecomposition& p, int k) {
    detail::require(k >= 1, "interval_coloring: k must be positive");
    detail::require(is_nice(p), "interval_coloring: decomposition is not nice");
    Labeling phi;
    for (const auto& bag : p.bags) {
        detail::require(static_cast<int>(bag.size()) <= k,
                        "interval_coloring: bag exceeds k=" + std::to_string(k));
        for (VertexId v : bag) {
            detail::require(g.has_vertex(v), "interval_coloring: foreign vertex");
            if (phi.count(v)) continue;
            LabelSet used;
            for (VertexId w : bag)
                if (w != v && phi.count(w)) used.insert(phi.at(w));
            Label l = 1;
            while (used.count(l)) ++l;
            detail::require(l <= k, "interval_coloring: ran out of labels");
            phi[v] = l;
        }
    }
    return phi;
}

// Letters of the pipeline word: G_i = (G[W_i], phi|W_i, L_i, R_i) with
// L_1 = R_m = {} and L_i = R_i = W_i elsewhere. Niceness makes consecutive
// letters compatible and the whole sequence glue back to (g, phi, {}, {}).
inline std::vector<InterfaceGraph> to_interface_word(const Graph& g,
                                                     const PathDecomposition& p,
                                                     const Labeling& phi, int k) {
    detail::require(is_nice(p), "to_interface_word: decomposition is not nice");
    detail::require(!p.bags.empty(), "to_interface_word: empty decomposition");
    std::vector<InterfaceGraph> word;
    const std::size_t m = p.bags.size();
    for (std::size_t i = 0; i < m; ++i) {
        const VertexSet& bag = p.bags[i];
        Labeling sub;
        for (VertexId v : bag) sub[v] = phi.at(v);
        VertexSet l = (i == 0) ? VertexSet{} : bag;
        VertexSet r = (i + 1 == m) ? VertexSet{} : bag;
        word.emplace_back(induced_subgraph(g, bag), std::move(sub), std::move(l),
                          std::move(r), k);
    }
    return word;
}

}  // namespace spandec
