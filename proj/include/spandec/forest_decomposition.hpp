#pragma once

#include <algorithm>
#include <map>

#include "spandec/graph.hpp"

namespace spandec {

// Forest-indexed decomposition: one bag per forest node. For suitable
// decompositions the forest nodes are exactly the host graph's vertices.
struct ForestDecomposition {
    Graph forest;
    std::map<VertexId, VertexSet> bags;

    int width() const {
        std::size_t m = 0;
        for (const auto& [x, bag] : bags) m = std::max(m, bag.size());
        return static_cast<int>(m) - 1;
    }
};

}  // namespace spandec
