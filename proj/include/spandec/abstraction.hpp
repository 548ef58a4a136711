#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "spandec/error.hpp"
#include "spandec/graph.hpp"
#include "spandec/interface_graph.hpp"

namespace spandec {

// Side of a canonical vertex within a basic interface graph.
enum class Side : int { LeftOnly = 0, RightOnly = 1, Both = 2 };

// (label, side) identifies a vertex of a basic interface graph completely,
// because phi is injective on L and on R separately.
using CanonVertex = std::pair<Label, int>;
using CanonEdge = std::pair<CanonVertex, CanonVertex>;

inline CanonEdge make_canon_edge(CanonVertex a, CanonVertex b) {
    return a < b ? CanonEdge{a, b} : CanonEdge{b, a};
}

// Canonical form of a basic k-interface graph; the isomorphism class is
// recovered from label sets per side plus edges between canonical vertices.
struct CanonicalAbstraction {
    int k = 1;
    LabelSet left_labels;    // phi(L)
    LabelSet right_labels;   // phi(R)
    LabelSet both_labels;    // phi(L ∩ R)
    std::set<CanonEdge> edges;

    bool operator==(const CanonicalAbstraction& o) const {
        return k == o.k && left_labels == o.left_labels &&
               right_labels == o.right_labels && both_labels == o.both_labels &&
               edges == o.edges;
    }

    bool operator<(const CanonicalAbstraction& o) const {
        return std::tie(k, left_labels, right_labels, both_labels, edges) <
               std::tie(o.k, o.left_labels, o.right_labels, o.both_labels, o.edges);
    }

    std::vector<CanonVertex> canonical_vertices() const {
        std::vector<CanonVertex> vs;
        for (Label l : left_labels)
            if (!both_labels.count(l)) vs.push_back({l, static_cast<int>(Side::LeftOnly)});
        for (Label l : right_labels)
            if (!both_labels.count(l)) vs.push_back({l, static_cast<int>(Side::RightOnly)});
        for (Label l : both_labels) vs.push_back({l, static_cast<int>(Side::Both)});
        std::sort(vs.begin(), vs.end());
        return vs;
    }

    // Deterministic one-line dump, for golden tests and debugging.
    std::string dump_line() const {
        auto labels = [](const LabelSet& s) {
            std::string r;
            for (Label l : s) {
                if (!r.empty()) r += ",";
                r += std::to_string(l);
            }
            return r;
        };
        auto cv = [](const CanonVertex& v) {
            static const char* side[] = {"L", "R", "B"};
            return std::to_string(v.first) + side[v.second];
        };
        std::string r = "k=" + std::to_string(k) + " L={" + labels(left_labels) +
                        "} R={" + labels(right_labels) + "} B={" + labels(both_labels) +
                        "} E={";
        bool first = true;
        for (const auto& e : edges) {
            if (!first) r += ",";
            first = false;
            r += cv(e.first) + "-" + cv(e.second);
        }
        return r + "}";
    }
};

// Abstraction of an interface graph: torso on L ∪ R, then renaming of every
// vertex to its (label, side) identity. Independent of concrete vertex ids.
inline CanonicalAbstraction abstraction(const InterfaceGraph& ig) {
    CanonicalAbstraction a;
    a.k = ig.k;
    a.left_labels = ig.labels_of(ig.left);
    a.right_labels = ig.labels_of(ig.right);
    a.both_labels = ig.labels_of(set_intersect(ig.left, ig.right));
    VertexSet lr = set_union(ig.left, ig.right);
    Graph t = torso(ig.g, lr);
    auto canon = [&ig](VertexId v) -> CanonVertex {
        bool inl = ig.left.count(v) > 0, inr = ig.right.count(v) > 0;
        Side s = inl && inr ? Side::Both : (inl ? Side::LeftOnly : Side::RightOnly);
        return {ig.phi.at(v), static_cast<int>(s)};
    };
    for (const Edge& e : t.edges())
        a.edges.insert(make_canon_edge(canon(e.u), canon(e.v)));
    return a;
}

// Concrete basic representative with dense vertex ids starting at base,
// assigned in canonical vertex order.
inline InterfaceGraph materialize(const CanonicalAbstraction& a, VertexId base = 0) {
    std::vector<CanonVertex> vs = a.canonical_vertices();
    std::map<CanonVertex, VertexId> id;
    Graph g;
    Labeling phi;
    VertexSet l, r;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        VertexId v = base + static_cast<VertexId>(i);
        id[vs[i]] = v;
        g.add_vertex(v);
        phi[v] = vs[i].first;
        int side = vs[i].second;
        if (side != static_cast<int>(Side::RightOnly)) l.insert(v);
        if (side != static_cast<int>(Side::LeftOnly)) r.insert(v);
    }
    for (const auto& e : a.edges) g.add_edge(id.at(e.first), id.at(e.second));
    return InterfaceGraph(std::move(g), std::move(phi), std::move(l), std::move(r), a.k);
}

// Semigroup operation on abstractions: materialize compatible representatives
// (identifying exactly the vertices forced by J = right(x) ∩ left(y)), glue,
// abstract.
inline CanonicalAbstraction boxplus(const CanonicalAbstraction& x,
                                    const CanonicalAbstraction& y) {
    detail::require(x.k == y.k, "boxplus: mismatched k");
    InterfaceGraph gx = materialize(x, 0);
    LabelSet j = set_intersect_labels(x.right_labels, y.left_labels);

    // Right vertices of the x-representative, by label.
    std::map<Label, VertexId> right_by_label;
    for (VertexId v : gx.right) right_by_label[gx.phi.at(v)] = v;

    std::vector<CanonVertex> ys = y.canonical_vertices();
    VertexId fresh = static_cast<VertexId>(gx.g.vertex_count());
    std::map<CanonVertex, VertexId> id;
    Graph g;
    Labeling phi;
    VertexSet l, r;
    for (const CanonVertex& cv : ys) {
        bool shared = cv.second != static_cast<int>(Side::RightOnly) && j.count(cv.first);
        VertexId v = shared ? right_by_label.at(cv.first) : fresh++;
        id[cv] = v;
        g.add_vertex(v);
        phi[v] = cv.first;
        if (cv.second != static_cast<int>(Side::RightOnly)) l.insert(v);
        if (cv.second != static_cast<int>(Side::LeftOnly)) r.insert(v);
    }
    for (const auto& e : y.edges) g.add_edge(id.at(e.first), id.at(e.second));
    InterfaceGraph gy(std::move(g), std::move(phi), std::move(l), std::move(r), y.k);

    detail::ensure(compatible(gx, gy), "boxplus: representatives not compatible");
    return abstraction(glue(gx, gy));
}

}  // namespace spandec
