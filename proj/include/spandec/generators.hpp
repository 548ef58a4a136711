#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "spandec/error.hpp"
#include "spandec/graph.hpp"
#include "spandec/path_decomposition.hpp"

namespace spandec {

namespace detail {

// Thin wrapper over mt19937_64 that avoids std distributions, whose output
// is not specified bit-exactly across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }

    bool chance(double p) {
        if (p >= 1.0) return true;
        if (p <= 0.0) return false;
        return static_cast<double>(engine_()) <
               p * 18446744073709551616.0;  // 2^64
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace detail

struct GeneratedInstance {
    Graph graph;
    PathDecomposition pathdec;
    std::vector<std::string> names;  // vertex id -> display name
};

// The three-track family: two paths u_1..u_n and w_1..w_n, a pendant v_i on
// every (u_i, w_i) rung, and v_0 attached to u_1 and w_1; together with its
// width-2 path decomposition (W_1, ..., W_{3n-1}).
inline GeneratedInstance gen_fig1(int n) {
    detail::require(n >= 1, "gen_fig1: n must be positive");
    GeneratedInstance inst;
    // ids: v_i -> i (0..n), u_i -> n + i (1..n), w_i -> 2n + i (1..n)
    auto v = [](int i) { return i; };
    auto u = [n](int i) { return n + i; };
    auto w = [n](int i) { return 2 * n + i; };
    inst.names.resize(3 * n + 1);
    for (int i = 0; i <= n; ++i) inst.names[v(i)] = "v" + std::to_string(i);
    for (int i = 1; i <= n; ++i) inst.names[u(i)] = "u" + std::to_string(i);
    for (int i = 1; i <= n; ++i) inst.names[w(i)] = "w" + std::to_string(i);

    Graph& g = inst.graph;
    for (int i = 0; i <= n; ++i) g.add_vertex(v(i));
    for (int i = 1; i <= n; ++i) g.add_vertex(u(i));
    for (int i = 1; i <= n; ++i) g.add_vertex(w(i));
    for (int i = 1; i < n; ++i) {
        g.add_edge(u(i), u(i + 1));
        g.add_edge(w(i), w(i + 1));
    }
    g.add_edge(v(0), u(1));
    g.add_edge(v(0), w(1));
    for (int i = 1; i <= n; ++i) {
        g.add_edge(v(i), u(i));
        g.add_edge(v(i), w(i));
    }

    std::vector<VertexSet>& bags = inst.pathdec.bags;
    bags.resize(3 * n - 1);
    bags[0] = {u(1), v(0), w(1)};                         // W_1
    for (int i = 1; i <= n - 1; ++i) {
        bags[3 * i - 2] = {u(i), v(i), w(i)};             // W_{3i-1}
        bags[3 * i - 1] = {u(i), u(i + 1), w(i)};         // W_{3i}
        bags[3 * i] = {u(i + 1), w(i), w(i + 1)};         // W_{3i+1}
    }
    bags[3 * n - 2] = {u(n), v(n), w(n)};                 // W_{3n-1}
    return inst;
}

// Random connected instance certified by construction: a random nice bag walk
// with bag size <= k, co-bag pairs sampled as edges with the given density,
// then lexicographically-first co-bag edges added until connected.
inline GeneratedInstance gen_random_pathdec(int k, int m, double density,
                                            std::uint64_t seed) {
    detail::require(k >= 1, "gen_random_pathdec: k must be positive");
    detail::require(m >= 1, "gen_random_pathdec: m must be positive");
    detail::Rng rng(seed);

    std::vector<VertexSet> bags;
    VertexSet current;
    VertexId next_id = 0;
    current.insert(next_id++);
    bags.push_back(current);
    while (static_cast<int>(bags.size()) < m) {
        bool can_introduce = static_cast<int>(current.size()) < k;
        bool can_forget = current.size() >= 2;  // keep consecutive bags chained
        if (!can_introduce && !can_forget) break;  // k == 1: single vertex only
        bool introduce = can_introduce && (!can_forget || rng.below(2) == 0);
        if (introduce) {
            current.insert(next_id++);
        } else {
            auto it = current.begin();
            std::advance(it, rng.below(current.size()));
            current.erase(it);
        }
        bags.push_back(current);
    }

    GeneratedInstance inst;
    inst.pathdec.bags = bags;
    Graph& g = inst.graph;
    for (VertexId v = 0; v < next_id; ++v) g.add_vertex(v);

    EdgeSet cobag;
    for (const VertexSet& bag : bags)
        for (auto it = bag.begin(); it != bag.end(); ++it)
            for (auto jt = std::next(it); jt != bag.end(); ++jt)
                cobag.insert(Edge(*it, *jt));
    for (const Edge& e : cobag)
        if (rng.chance(density)) g.add_edge(e.u, e.v);

    // connectivity patch: bridge components with the smallest co-bag edges
    while (!is_connected(g)) {
        UnionFind uf;
        for (VertexId v : g.vertices()) uf.add(v);
        for (const Edge& e : g.edges()) uf.unite(e.u, e.v);
        bool bridged = false;
        for (const Edge& e : cobag) {
            if (!uf.connected(e.u, e.v)) {
                g.add_edge(e.u, e.v);
                bridged = true;
                break;
            }
        }
        detail::ensure(bridged, "gen_random_pathdec: co-bag graph disconnected");
    }

    inst.names.resize(next_id);
    for (VertexId v = 0; v < next_id; ++v) inst.names[v] = std::to_string(v);
    return inst;
}

}  // namespace spandec
