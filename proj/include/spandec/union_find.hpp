#pragma once

#include <map>
#include <vector>

namespace spandec {

// Union-find over arbitrary integer keys, path halving + union by size.
class UnionFind {
public:
    void add(int x) {
        if (!parent_.count(x)) {
            parent_[x] = x;
            size_[x] = 1;
        }
    }

    int find(int x) {
        add(x);
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // Returns false if x and y were already in the same component.
    bool unite(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return false;
        if (size_[rx] < size_[ry]) std::swap(rx, ry);
        parent_[ry] = rx;
        size_[rx] += size_[ry];
        return true;
    }

    bool connected(int x, int y) { return find(x) == find(y); }

private:
    std::map<int, int> parent_;
    std::map<int, int> size_;
};

}  // namespace spandec
