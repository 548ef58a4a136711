#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spandec/error.hpp"
#include "spandec/graph.hpp"
#include "spandec/path_decomposition.hpp"

namespace spandec {

inline constexpr std::size_t kPathwidthOracleLimit = 12;

namespace detail {

struct VsnContext {
    std::vector<VertexId> verts;           // index -> vertex id
    std::vector<std::uint32_t> nbr;        // index -> neighbor bitmask
    std::vector<int> best;                 // subset -> optimal value

    explicit VsnContext(const Graph& g) {
        require(g.vertex_count() <= kPathwidthOracleLimit,
                "pathwidth oracle limited to " +
                    std::to_string(kPathwidthOracleLimit) + " vertices");
        verts.assign(g.vertices().begin(), g.vertices().end());
        const std::size_t n = verts.size();
        std::map<VertexId, int> pos;
        for (std::size_t i = 0; i < n; ++i) pos[verts[i]] = static_cast<int>(i);
        nbr.assign(n, 0);
        for (const Edge& e : g.edges()) {
            nbr[pos[e.u]] |= 1u << pos[e.v];
            nbr[pos[e.v]] |= 1u << pos[e.u];
        }
        // boundary(S) = #{u in S with a neighbor outside S}; the vertex
        // separation number over subsets satisfies
        //   best(S) = max(boundary(S), min_{v in S} best(S \ v)).
        best.assign(std::size_t{1} << n, 0);
        for (std::uint32_t s = 1; s < (1u << n); ++s) {
            int b = 0;
            for (std::size_t i = 0; i < n; ++i)
                if ((s >> i & 1u) && (nbr[i] & ~s)) ++b;
            int m = static_cast<int>(n);
            for (std::size_t i = 0; i < n; ++i)
                if (s >> i & 1u) m = std::min(m, best[s & ~(1u << i)]);
            best[s] = std::max(b, m);
        }
    }

    int boundary(std::uint32_t s) const {
        int b = 0;
        for (std::size_t i = 0; i < verts.size(); ++i)
            if ((s >> i & 1u) && (nbr[i] & ~s)) ++b;
        return b;
    }

    // Optimal elimination ordering, reconstructed back to front; ties are
    // broken toward the smallest vertex index.
    std::vector<int> ordering() const {
        const std::size_t n = verts.size();
        std::vector<int> order(n, -1);
        std::uint32_t s = (n == 32) ? ~0u : ((1u << n) - 1);
        for (std::size_t slot = n; slot-- > 0;) {
            int pick = -1, pickval = static_cast<int>(n) + 1;
            for (std::size_t i = 0; i < n; ++i) {
                if (!(s >> i & 1u)) continue;
                int v = best[s & ~(1u << i)];
                if (v < pickval) {
                    pickval = v;
                    pick = static_cast<int>(i);
                }
            }
            order[slot] = pick;
            s &= ~(1u << pick);
        }
        return order;
    }
};

}  // namespace detail

// Exact pathwidth via the vertex separation number (they coincide).
// Guarded: throws GuardError above kPathwidthOracleLimit vertices.
inline int exact_pathwidth(const Graph& g) {
    if (g.vertex_count() > kPathwidthOracleLimit)
        throw GuardError("exact_pathwidth: instance too large (" +
                         std::to_string(g.vertex_count()) + " > " +
                         std::to_string(kPathwidthOracleLimit) + " vertices)");
    if (g.vertex_count() == 0) return -1;
    detail::VsnContext ctx(g);
    return ctx.best.back();
}

// A minimum-width path decomposition extracted from an optimal elimination
// ordering: B_i = {v_i} ∪ {earlier vertices with a neighbor at position >= i}.
inline PathDecomposition optimal_path_decomposition(const Graph& g) {
    if (g.vertex_count() > kPathwidthOracleLimit)
        throw GuardError("optimal_path_decomposition: instance too large (" +
                         std::to_string(g.vertex_count()) + " > " +
                         std::to_string(kPathwidthOracleLimit) + " vertices)");
    PathDecomposition p;
    if (g.vertex_count() == 0) return p;
    detail::VsnContext ctx(g);
    std::vector<int> order = ctx.ordering();
    const std::size_t n = order.size();
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
    for (std::size_t i = 0; i < n; ++i) {
        VertexSet bag{ctx.verts[order[i]]};
        for (std::size_t j = 0; j < i; ++j) {
            std::uint32_t nb = ctx.nbr[order[j]];
            for (std::size_t l = 0; l < n; ++l)
                if ((nb >> l & 1u) && position[l] >= i) {
                    bag.insert(ctx.verts[order[j]]);
                    break;
                }
        }
        p.bags.push_back(std::move(bag));
    }
    return p;
}

}  // namespace spandec
