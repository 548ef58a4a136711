#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "spandec/error.hpp"
#include "spandec/factorization.hpp"
#include "spandec/forest_decomposition.hpp"
#include "spandec/graph.hpp"
#include "spandec/interface_graph.hpp"
#include "spandec/path_decomposition.hpp"
#include "spandec/semigroup.hpp"
#include "spandec/verification.hpp"

namespace spandec {

// Suitable decomposition of any graph: a maximal acyclic subgraph with each
// bag equal to its vertex's connected component.
inline ForestDecomposition trivial_decomposition(const Graph& g) {
    Graph forest;
    for (VertexId v : g.vertices()) forest.add_vertex(v);
    EdgeSet m = extend_to_maximal_forest(forest, g.edges());
    ForestDecomposition d;
    d.forest = graph_plus_edges(forest, m);
    for (const VertexSet& comp : connected_components(g))
        for (VertexId v : comp) d.bags[v] = comp;
    return d;
}

// Base case of the recursion: a single letter minus X, decomposed trivially.
inline ForestDecomposition base_decompose(const InterfaceGraph& a, const VertexSet& x) {
    detail::require(is_subset(x, a.left), "base_decompose: X is not within L");
    detail::require(a.g.vertex_count() <= 2 * static_cast<std::size_t>(a.k),
                    "base_decompose: letter has more than 2k vertices");
    Graph rest = induced_subgraph(a.g, set_minus(a.g.vertices(), x));
    ForestDecomposition d = trivial_decomposition(rest);
    detail::ensure(d.width() <= 2 * a.k - 1, "base_decompose: width exceeds 2k-1");
    return d;
}

// Merge along a near partition {A, B} of V(g): join the two forests with a
// maximal acyclic set of A-B edges, then add to every bag the vertices of
// N_g(B) reachable in the joined forest.
inline ForestDecomposition merge_partition(const ForestDecomposition& da,
                                           const ForestDecomposition& db,
                                           const Graph& g, const VertexSet& b) {
    const VertexSet a = da.forest.vertices();
    detail::require(db.forest.vertices() == b,
                    "merge_partition: dB does not cover B");
    detail::require(set_intersect(a, b).empty(),
                    "merge_partition: {A,B} is not a near partition");
    detail::require(set_union(a, b) == g.vertices(),
                    "merge_partition: {A,B} does not cover V(g)");
    if (b.empty()) return da;
    if (a.empty()) return db;
    {
        auto ra = validate_suitable(induced_subgraph(g, a), da);
        detail::require(ra.ok(), "merge_partition: dA not suitable: " + ra.summary());
        auto rb = validate_suitable(induced_subgraph(g, b), db);
        detail::require(rb.ok(), "merge_partition: dB not suitable: " + rb.summary());
    }

    Graph joined = graph_union(da.forest, db.forest);
    EdgeSet crossing;
    for (const Edge& e : g.edges())
        if ((a.count(e.u) && b.count(e.v)) || (a.count(e.v) && b.count(e.u)))
            crossing.insert(e);
    EdgeSet m = extend_to_maximal_forest(joined, crossing);
    ForestDecomposition out;
    out.forest = graph_plus_edges(joined, m);

    VertexSet nb = neighbor_set(g, b);
    std::map<VertexId, const VertexSet*> comp_of;
    std::vector<VertexSet> comps = connected_components(out.forest);
    for (const VertexSet& comp : comps)
        for (VertexId v : comp) comp_of[v] = &comp;

    for (VertexId x : g.vertices()) {
        const auto& source = a.count(x) ? da.bags : db.bags;
        VertexSet bag = source.at(x);
        for (VertexId v : set_intersect(*comp_of.at(x), nb)) bag.insert(v);
        out.bags[x] = std::move(bag);
    }

    detail::ensure(out.width() <= std::max(da.width(), db.width()) +
                                      static_cast<int>(nb.size()),
                   "merge_partition: width exceeds max(wA,wB) + |N(B)|");
    return out;
}

// Reinsert X into a decomposition of g - X; bags of X-vertices stay inside X,
// so the width grows by at most |X|.
inline ForestDecomposition add_back(const ForestDecomposition& d, const Graph& g,
                                    const VertexSet& x) {
    detail::require(is_subset(x, g.vertices()), "add_back: X not within V(g)");
    if (x.empty()) return d;
    VertexSet rest = set_minus(g.vertices(), x);
    detail::require(d.forest.vertices() == rest, "add_back: d does not cover V - X");
    ForestDecomposition dx = trivial_decomposition(induced_subgraph(g, x));
    ForestDecomposition out = merge_partition(dx, d, g, rest);
    detail::ensure(out.width() <= d.width() + static_cast<int>(x.size()),
                   "add_back: width exceeds cmp(G-X) + |X|");
    return out;
}

namespace detail {

inline InterfaceGraph concrete_of(const std::vector<InterfaceGraph>& letters,
                                  std::size_t begin, std::size_t end) {
    std::vector<InterfaceGraph> part(letters.begin() + begin, letters.begin() + end);
    return glue(part);
}

struct NodeContext {
    const std::vector<InterfaceGraph>& letters;
    const SemigroupTable* table;  // optional cross-check of cached evaluations
};

ForestDecomposition decompose_node_impl(const NodeContext& ctx, const FactorTree& node,
                                        const VertexSet& x);

inline ForestDecomposition decompose_unranked(const NodeContext& ctx,
                                              const FactorTree& node,
                                              const InterfaceGraph& concrete,
                                              const VertexSet& x) {
    const std::size_t n = node.children.size();
    std::vector<InterfaceGraph> parts;
    parts.reserve(n);
    for (const auto& c : node.children)
        parts.push_back(concrete_of(ctx.letters, c.begin, c.end));

    // Persistent elements: membership in L_i ∩ R_i is index-independent.
    VertexSet persistent = set_intersect(parts[0].left, parts[0].right);
    for (std::size_t r = 1; r < n; ++r)
        ensure(set_intersect(parts[r].left, parts[r].right) == persistent,
               "unranked: persistent-element claim violated");

    const VertexSet l1 = parts[0].left;
    std::vector<VertexSet> xs(n), vs(n);
    xs[0] = l1;
    for (std::size_t r = 1; r < n; ++r)
        xs[r] = set_intersect(parts[r - 1].right, parts[r].left);
    for (std::size_t r = 0; r < n; ++r)
        vs[r] = set_minus(parts[r].g.vertices(), xs[r]);

    // Structure of the V_i: a near partition of V(G) - L1 whose classes
    // absorb the later separators and cover all remaining edges pairwise.
    VertexSet rest = set_minus(concrete.g.vertices(), l1);
    {
        VertexSet seen;
        for (std::size_t r = 0; r < n; ++r) {
            ensure(set_intersect(seen, vs[r]).empty(),
                   "unranked: V_i sets are not disjoint");
            seen = set_union(seen, vs[r]);
        }
        ensure(seen == rest, "unranked: V_i sets do not cover V(G) - L1");
        for (std::size_t r = 1; r < n; ++r)
            ensure(is_subset(set_minus(xs[r], l1), vs[r - 1]),
                   "unranked: X_i - L1 not inside V_{i-1}");
    }
    Graph g_rest = induced_subgraph(concrete.g, rest);
    {
        std::map<VertexId, std::size_t> owner;
        for (std::size_t r = 0; r < n; ++r)
            for (VertexId v : vs[r]) owner[v] = r;
        for (const Edge& e : g_rest.edges()) {
            std::size_t ru = owner.at(e.u), rv = owner.at(e.v);
            std::size_t lo = std::min(ru, rv), hi = std::max(ru, rv);
            ensure(hi - lo <= 1, "unranked: edge spans non-adjacent V_i classes");
        }
    }

    std::vector<ForestDecomposition> sub;
    sub.reserve(n);
    for (std::size_t r = 0; r < n; ++r)
        sub.push_back(decompose_node_impl(ctx, node.children[r], xs[r]));

    // Pairwise joins: maximal acyclic sets of V_i - V_{i+1} edges.
    std::vector<EdgeSet> joins(n - 1);
    std::vector<Graph> two_layer(n - 1);
    for (std::size_t r = 0; r + 1 < n; ++r) {
        Graph seed = graph_union(sub[r].forest, sub[r + 1].forest);
        EdgeSet candidates;
        for (const Edge& e : g_rest.edges())
            if ((vs[r].count(e.u) && vs[r + 1].count(e.v)) ||
                (vs[r].count(e.v) && vs[r + 1].count(e.u)))
                candidates.insert(e);
        joins[r] = extend_to_maximal_forest(seed, candidates);
        two_layer[r] = graph_plus_edges(seed, joins[r]);
    }

    Graph forest;
    for (VertexId v : rest) forest.add_vertex(v);
    for (std::size_t r = 0; r < n; ++r)
        for (const Edge& e : sub[r].forest.edges()) forest.add_edge(e.u, e.v);
    for (const auto& m : joins)
        for (const Edge& e : m) forest.add_edge(e.u, e.v);
    ensure(is_acyclic(forest) && forest.vertices() == rest,
           "unranked: joined index graph is not a spanning forest of G - L1");

    // Bag augmentation by the interface vertices reachable in the two-layer
    // forests on either side.
    std::vector<std::map<VertexId, const VertexSet*>> comp_of(n - 1);
    std::vector<std::vector<VertexSet>> comps(n - 1);
    for (std::size_t r = 0; r + 1 < n; ++r) {
        comps[r] = connected_components(two_layer[r]);
        for (const VertexSet& comp : comps[r])
            for (VertexId v : comp) comp_of[r][v] = &comp;
    }
    ForestDecomposition merged;
    merged.forest = std::move(forest);
    for (std::size_t r = 0; r < n; ++r) {
        for (VertexId v : vs[r]) {
            VertexSet bag = sub[r].bags.at(v);
            if (r > 0)
                for (VertexId w :
                     set_intersect(*comp_of[r - 1].at(v), parts[r - 1].right))
                    bag.insert(w);
            if (r + 1 < n)
                for (VertexId w : set_intersect(*comp_of[r].at(v), parts[r].right))
                    bag.insert(w);
            merged.bags[v] = std::move(bag);
        }
    }
    {
        auto rep = validate_suitable(g_rest, merged);
        ensure(rep.ok(), "unranked: merged decomposition of G - L1 not suitable: " +
                             rep.summary());
    }

    // The recursion proved cmp(G - L1); reinsert L1 - X.
    Graph g_minus_x =
        induced_subgraph(concrete.g, set_minus(concrete.g.vertices(), x));
    return add_back(merged, g_minus_x, set_minus(l1, x));
}

inline ForestDecomposition decompose_node_impl(const NodeContext& ctx,
                                               const FactorTree& node,
                                               const VertexSet& x) {
    InterfaceGraph concrete = concrete_of(ctx.letters, node.begin, node.end);
    require(is_subset(x, concrete.left), "decompose_node: X is not within L");
    if (ctx.table)
        ensure(abstraction(concrete) == ctx.table->element(node.value),
               "decompose_node: concrete abstraction differs from the cached "
               "evaluation");

    ForestDecomposition d;
    switch (node.kind) {
        case FactorTree::Kind::Leaf:
            d = base_decompose(concrete, x);
            break;
        case FactorTree::Kind::Binary: {
            const FactorTree& left = node.children.front();
            const FactorTree& right = node.children.back();
            InterfaceGraph cl = concrete_of(ctx.letters, left.begin, left.end);
            InterfaceGraph cr = concrete_of(ctx.letters, right.begin, right.end);
            VertexSet x2 = set_intersect(cl.right, cr.left);
            ForestDecomposition d1 = decompose_node_impl(ctx, left, x);
            ForestDecomposition d2 = decompose_node_impl(ctx, right, x2);
            Graph g_minus_x =
                induced_subgraph(concrete.g, set_minus(concrete.g.vertices(), x));
            VertexSet bpart = set_minus(cr.g.vertices(), x2);
            ensure(is_subset(neighbor_set(g_minus_x, bpart), x2),
                   "binary: N_{G-X}(V2 - X2) escapes X2");
            d = merge_partition(d1, d2, g_minus_x, bpart);
            break;
        }
        case FactorTree::Kind::Unranked:
            d = decompose_unranked(ctx, node, concrete, x);
            break;
    }

    const int k = concrete.k;
    const int h = tree_height(node);
    ensure(d.width() <= 3 * k * h - 1,
           "decompose_node: width " + std::to_string(d.width()) +
               " exceeds 3k*h - 1 = " + std::to_string(3 * k * h - 1));
    return d;
}

}  // namespace detail

// Recursion over a factorization tree, after the main technical lemma:
// produces a suitable forest decomposition of (glued letters) - X of width
// at most 3k*h - 1, where h is the height of the factor subtree.
inline ForestDecomposition decompose_node(const std::vector<InterfaceGraph>& letters,
                                          const FactorTree& node, const VertexSet& x,
                                          const SemigroupTable* table = nullptr) {
    detail::require(!letters.empty(), "decompose_node: empty word");
    detail::NodeContext ctx{letters, table};
    return detail::decompose_node_impl(ctx, node, x);
}

struct DecomposeResult {
    ForestDecomposition decomposition;
    int k = 1;                        // bag-size budget of the decomposition
    int height = 1;                   // realized factorization-tree height
    std::size_t subsemigroup_size = 0;
    int certified_bound = 0;          // 3k*height - 1
};

// Full pipeline: nice-ify, color, cut into letters, abstract, factorize,
// then run the recursion with X = {}. The result is indexed by a spanning
// tree of g and every vertex lies in its own bag.
inline DecomposeResult decompose(const Graph& g, const PathDecomposition& p) {
    detail::require(g.vertex_count() > 0, "decompose: empty graph");
    detail::require(is_connected(g), "decompose: the graph must be connected; a "
                                     "spanning-tree-indexed decomposition exists "
                                     "only for connected graphs");
    {
        auto rep = validate_pathdec(g, p);
        detail::require(rep.ok(), "decompose: invalid path decomposition: " +
                                      rep.summary());
    }
    int k = std::max(1, p.width() + 1);

    PathDecomposition nice = make_nice(p);
    Labeling phi = interval_coloring(g, nice, k);
    std::vector<InterfaceGraph> letters = to_interface_word(g, nice, phi, k);

    std::vector<CanonicalAbstraction> abstractions;
    abstractions.reserve(letters.size());
    for (const auto& l : letters) abstractions.push_back(abstraction(l));
    SemigroupTable table = generate_subsemigroup(abstractions);
    std::vector<int> word;
    word.reserve(abstractions.size());
    for (const auto& a : abstractions) word.push_back(table.index_of(a));

    FactorTree tree = factorize(word, table);
    {
        auto rep = verify_factor_tree(tree, word, table);
        detail::ensure(rep.ok(), "decompose: factor tree invalid: " + rep.summary());
    }

    DecomposeResult result;
    result.k = k;
    result.height = tree_height(tree);
    result.subsemigroup_size = table.size();
    result.certified_bound = 3 * k * result.height - 1;
    result.decomposition = decompose_node(letters, tree, {}, &table);

    auto rep = validate_suitable(g, result.decomposition);
    detail::ensure(rep.ok(), "decompose: output not suitable: " + rep.summary());
    detail::ensure(result.decomposition.width() <= result.certified_bound,
                   "decompose: width exceeds the certified bound");
    return result;
}

// Left-to-right greedy baseline: repeatedly merge the processed prefix with
// the newly introduced vertices of the next bag. Always correct; the width
// may grow with the number of bags.
inline ForestDecomposition naive_sequential(const Graph& g, const PathDecomposition& p) {
    detail::require(g.vertex_count() > 0, "naive_sequential: empty graph");
    detail::require(is_connected(g), "naive_sequential: graph must be connected");
    {
        auto rep = validate_pathdec(g, p);
        detail::require(rep.ok(), "naive_sequential: invalid path decomposition: " +
                                      rep.summary());
    }
    ForestDecomposition d;
    VertexSet processed;
    for (const VertexSet& bag : p.bags) {
        VertexSet fresh = set_minus(bag, processed);
        if (processed.empty()) {
            d = trivial_decomposition(induced_subgraph(g, fresh));
            processed = fresh;
            continue;
        }
        if (fresh.empty()) continue;
        VertexSet next = set_union(processed, fresh);
        ForestDecomposition db = trivial_decomposition(induced_subgraph(g, fresh));
        d = merge_partition(d, db, induced_subgraph(g, next), fresh);
        processed = std::move(next);
    }
    detail::ensure(processed == g.vertices(),
                   "naive_sequential: decomposition does not cover the graph");
    return d;
}

}  // namespace spandec
