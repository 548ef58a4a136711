#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "spandec/error.hpp"
#include "spandec/graph.hpp"

namespace spandec {

using Label = int;  // 1..k
using LabelSet = std::set<Label>;
using Labeling = std::map<VertexId, Label>;

// k-interface graph (G, phi, L, R): phi labels every vertex with a value in
// [1..k] and is injective on each of L and R.
struct InterfaceGraph {
    Graph g;
    Labeling phi;
    VertexSet left;
    VertexSet right;
    int k = 1;

    InterfaceGraph() = default;

    InterfaceGraph(Graph graph, Labeling labeling, VertexSet l, VertexSet r, int kk)
        : g(std::move(graph)), phi(std::move(labeling)),
          left(std::move(l)), right(std::move(r)), k(kk) {
        detail::require(k >= 1, "interface graph: k must be positive");
        for (VertexId v : g.vertices()) {
            auto it = phi.find(v);
            detail::require(it != phi.end(),
                            "interface graph: vertex " + std::to_string(v) + " unlabeled");
            detail::require(it->second >= 1 && it->second <= k,
                            "interface graph: label out of range at vertex " +
                                std::to_string(v));
        }
        detail::require(phi.size() == g.vertex_count(),
                        "interface graph: labeling mentions unknown vertices");
        detail::require(is_subset(left, g.vertices()), "interface graph: L not in V");
        detail::require(is_subset(right, g.vertices()), "interface graph: R not in V");
        detail::require(injective_on(left), "interface graph: phi not injective on L");
        detail::require(injective_on(right), "interface graph: phi not injective on R");
    }

    bool injective_on(const VertexSet& s) const {
        LabelSet seen;
        for (VertexId v : s)
            if (!seen.insert(phi.at(v)).second) return false;
        return true;
    }

    LabelSet labels_of(const VertexSet& s) const {
        LabelSet r;
        for (VertexId v : s) r.insert(phi.at(v));
        return r;
    }

    // Vertices of s whose label lies in j.
    VertexSet preimage_in(const LabelSet& j, const VertexSet& s) const {
        VertexSet r;
        for (VertexId v : s)
            if (j.count(phi.at(v))) r.insert(v);
        return r;
    }

    bool is_basic() const { return set_union(left, right) == g.vertices(); }
};

inline LabelSet set_intersect_labels(const LabelSet& a, const LabelSet& b) {
    LabelSet r;
    for (Label l : a)
        if (b.count(l)) r.insert(l);
    return r;
}

// Compatibility of a pair: with J = phi1(R1) ∩ phi2(L2), the shared vertices
// must be exactly phi1^-1(J) ∩ R1 = phi2^-1(J) ∩ L2, with agreeing labels.
inline bool compatible(const InterfaceGraph& a, const InterfaceGraph& b) {
    detail::require(a.k == b.k, "compatible: mismatched k");
    LabelSet j = set_intersect_labels(a.labels_of(a.right), b.labels_of(b.left));
    VertexSet shared = set_intersect(a.g.vertices(), b.g.vertices());
    if (shared != a.preimage_in(j, a.right)) return false;
    if (shared != b.preimage_in(j, b.left)) return false;
    for (VertexId v : shared)
        if (a.phi.at(v) != b.phi.at(v)) return false;
    return true;
}

// Pairwise compatibility plus the interval condition: a vertex present in
// letters i and l must be present in every letter in between.
inline bool compatible_sequence(const std::vector<InterfaceGraph>& seq) {
    detail::require(!seq.empty(), "compatible_sequence: empty sequence");
    for (std::size_t i = 1; i < seq.size(); ++i)
        detail::require(seq[i].k == seq[0].k, "compatible_sequence: mismatched k");
    if (seq.size() == 1) return true;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (!compatible(seq[i], seq[i + 1])) return false;
    std::map<VertexId, std::vector<std::size_t>> occ;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (VertexId v : seq[i].g.vertices()) occ[v].push_back(i);
    for (const auto& [v, idxs] : occ)
        if (idxs.back() - idxs.front() + 1 != idxs.size()) return false;
    return true;
}

// Gluing of a compatible sequence: union of graphs and labelings, with
// L = first.left and R = last.right.
inline InterfaceGraph glue(const std::vector<InterfaceGraph>& seq) {
    detail::require(!seq.empty(), "glue: empty sequence");
    detail::require(compatible_sequence(seq), "glue: incompatible sequence");
    Graph g = seq.front().g;
    Labeling phi = seq.front().phi;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        g = graph_union(g, seq[i].g);
        for (const auto& [v, l] : seq[i].phi) phi[v] = l;
    }
    return InterfaceGraph(std::move(g), std::move(phi), seq.front().left,
                          seq.back().right, seq.front().k);
}

inline InterfaceGraph glue(const InterfaceGraph& a, const InterfaceGraph& b) {
    return glue(std::vector<InterfaceGraph>{a, b});
}

}  // namespace spandec
