#pragma once

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "spandec/error.hpp"
#include "spandec/semigroup.hpp"
#include "spandec/validation.hpp"

namespace spandec {

// Factorization tree over a word of semigroup elements. Leaves are word
// positions; an unranked node groups >= 2 consecutive factors that all
// evaluate to one idempotent.
struct FactorTree {
    enum class Kind { Leaf, Binary, Unranked };

    Kind kind = Kind::Leaf;
    std::size_t begin = 0;  // word interval [begin, end)
    std::size_t end = 0;
    int value = -1;         // cached evaluation of the spanned subword
    std::vector<FactorTree> children;

    std::size_t length() const { return end - begin; }
};

inline int tree_height(const FactorTree& t) {
    if (t.children.empty()) return 1;
    int h = 0;
    for (const auto& c : t.children) h = std::max(h, tree_height(c));
    return 1 + h;
}

namespace detail {

// Construction state for one factorize() call.
struct FactorBuilder {
    const std::vector<int>& word;
    const SemigroupTable& table;
    std::vector<int> idems;

    FactorBuilder(const std::vector<int>& w, const SemigroupTable& t)
        : word(w), table(t), idems(t.idempotents()) {}

    int eval_range(std::size_t lo, std::size_t hi) const {
        int acc = word[lo];
        for (std::size_t i = lo + 1; i < hi; ++i) acc = table.product(acc, word[i]);
        return acc;
    }

    FactorTree leaf(std::size_t pos) const {
        return FactorTree{FactorTree::Kind::Leaf, pos, pos + 1, word[pos], {}};
    }

    FactorTree binary(FactorTree l, FactorTree r) const {
        FactorTree t;
        t.kind = FactorTree::Kind::Binary;
        t.begin = l.begin;
        t.end = r.end;
        t.value = table.product(l.value, r.value);
        t.children.push_back(std::move(l));
        t.children.push_back(std::move(r));
        return t;
    }

    FactorTree unranked(std::vector<FactorTree> children, int e) const {
        FactorTree t;
        t.kind = FactorTree::Kind::Unranked;
        t.begin = children.front().begin;
        t.end = children.back().end;
        t.value = e;
        t.children = std::move(children);
        return t;
    }

    // reach[j]: [lo..lo+j) splits into blocks all evaluating to e;
    // mm[j]: minimal possible maximum block length over such splits.
    void block_dp(std::size_t lo, std::size_t hi, int e, std::vector<int>& mm) const {
        const std::size_t m = hi - lo;
        mm.assign(m + 1, std::numeric_limits<int>::max());
        mm[0] = 0;
        for (std::size_t j = 1; j <= m; ++j) {
            int prod = -1;
            for (std::size_t i = j; i-- > 0;) {
                prod = (prod < 0) ? word[lo + i]
                                  : table.product(word[lo + i], prod);
                if (prod != e || mm[i] == std::numeric_limits<int>::max()) continue;
                mm[j] = std::min(mm[j], std::max(mm[i], static_cast<int>(j - i)));
            }
        }
    }

    // Splits [lo..hi) into >= 2 blocks all evaluating to e with maximum block
    // length <= cap; blocks are taken shortest-last (largest feasible cut).
    std::vector<std::pair<std::size_t, std::size_t>> reconstruct_blocks(
        std::size_t lo, std::size_t hi, int e, const std::vector<int>& mm,
        int cap) const {
        std::vector<std::pair<std::size_t, std::size_t>> blocks;
        std::size_t j = hi;
        while (j > lo) {
            std::size_t pick = lo;
            bool found = false;
            int prod = -1;
            for (std::size_t i = j - lo; i-- > 0;) {
                prod = (prod < 0) ? word[lo + i]
                                  : table.product(word[lo + i], prod);
                if (prod != e) continue;
                if (mm[i] == std::numeric_limits<int>::max()) continue;
                if (std::max(mm[i], static_cast<int>(j - lo - i)) > cap) continue;
                pick = lo + i;
                found = true;
                break;  // largest i first because of the downward loop order
            }
            ensure(found, "factorize: block reconstruction failed");
            blocks.push_back({pick, j});
            j = pick;
        }
        std::reverse(blocks.begin(), blocks.end());
        ensure(blocks.size() >= 2, "factorize: reconstruction yielded one block");
        return blocks;
    }

    FactorTree build(std::size_t lo, std::size_t hi) {
        const std::size_t m = hi - lo;
        if (m == 1) return leaf(lo);

        // Whole-interval unranked split, best idempotent by minimax block.
        int best_e = -1, best_cap = std::numeric_limits<int>::max();
        std::vector<int> best_mm;
        std::vector<int> mm;
        for (int e : idems) {
            block_dp(lo, hi, e, mm);
            if (mm[m] == std::numeric_limits<int>::max()) continue;
            // mm[m] with >= 2 blocks: the single-block split has max = m.
            int cap = mm[m];
            if (cap == static_cast<int>(m)) {
                // Only the trivial one-block split may exist; check for a
                // nontrivial one via the final cut.
                int prod = -1;
                int alt = std::numeric_limits<int>::max();
                for (std::size_t i = m; i-- > 1;) {
                    prod = (prod < 0) ? word[lo + i]
                                      : table.product(word[lo + i], prod);
                    if (prod != e || mm[i] == std::numeric_limits<int>::max()) continue;
                    alt = std::min(alt, std::max(mm[i], static_cast<int>(m - i)));
                }
                cap = alt;
            }
            if (cap < best_cap) {
                best_cap = cap;
                best_e = e;
                best_mm = mm;
            }
        }
        if (best_e >= 0 && best_cap < static_cast<int>(m)) {
            auto blocks = reconstruct_blocks(lo, hi, best_e, best_mm, best_cap);
            std::vector<FactorTree> children;
            children.reserve(blocks.size());
            for (auto [b, t] : blocks) children.push_back(build(b, t));
            for (const auto& c : children)
                ensure(c.value == best_e, "factorize: block does not evaluate to e");
            return unranked(std::move(children), best_e);
        }

        // Longest run of >= 2 consecutive e-blocks anywhere in the interval;
        // peel the remainder with binary nodes when the run dominates.
        std::size_t core_b = 0, core_t = 0;
        int core_e = -1;
        find_core(lo, hi, core_b, core_t, core_e);
        if (core_e >= 0 && 2 * (core_t - core_b) >= m) {
            std::vector<int> cmm;
            block_dp(core_b, core_t, core_e, cmm);
            auto blocks = reconstruct_blocks(core_b, core_t, core_e, cmm,
                                             cmm[core_t - core_b]);
            std::vector<FactorTree> children;
            for (auto [b, t] : blocks) children.push_back(build(b, t));
            FactorTree node = unranked(std::move(children), core_e);
            if (core_t < hi) node = binary(std::move(node), build(core_t, hi));
            if (core_b > lo) node = binary(build(lo, core_b), std::move(node));
            return node;
        }

        std::size_t mid = lo + m / 2;
        return binary(build(lo, mid), build(mid, hi));
    }

    // Longest interval [b..t) splitting into >= 2 blocks that all evaluate to
    // one idempotent. Ties: smaller start, then smaller idempotent index.
    void find_core(std::size_t lo, std::size_t hi, std::size_t& core_b,
                   std::size_t& core_t, int& core_e) const {
        const std::size_t m = hi - lo;
        core_e = -1;
        std::size_t best_len = 1;
        for (int e : idems) {
            // chain[j]: longest suffix of [lo..lo+j) splitting into e-blocks;
            // nb[j]: block count of that chain (maximized on ties).
            std::vector<int> chain(m + 1, -1), nb(m + 1, 0);
            chain[0] = 0;
            for (std::size_t j = 1; j <= m; ++j) {
                int prod = -1;
                for (std::size_t i = j; i-- > 0;) {
                    prod = (prod < 0) ? word[lo + i]
                                      : table.product(word[lo + i], prod);
                    if (prod != e) continue;
                    int len = static_cast<int>(j - i) + std::max(chain[i], 0);
                    int blocks = 1 + (chain[i] > 0 ? nb[i] : 0);
                    if (len > chain[j] || (len == chain[j] && blocks > nb[j])) {
                        chain[j] = len;
                        nb[j] = blocks;
                    }
                }
            }
            for (std::size_t j = 1; j <= m; ++j) {
                if (chain[j] <= 0 || nb[j] < 2) continue;
                std::size_t len = static_cast<std::size_t>(chain[j]);
                std::size_t b = lo + j - len;
                if (len > best_len || (len == best_len && core_e >= 0 && b < core_b)) {
                    best_len = len;
                    core_b = b;
                    core_t = lo + j;
                    core_e = e;
                }
            }
        }
    }
};

}  // namespace detail

// Deterministic factorization-tree construction. The height contract
// (<= 3 * table size) is the verifier's check below; the construction favors
// unranked splits over idempotent block runs and falls back to balanced
// binary splits.
inline FactorTree factorize(const std::vector<int>& word, const SemigroupTable& t) {
    detail::require(!word.empty(), "factorize: empty word");
    for (int s : word)
        detail::require(s >= 0 && s < static_cast<int>(t.size()),
                        "factorize: letter outside table");
    detail::FactorBuilder b(word, t);
    return b.build(0, word.size());
}

namespace detail {
inline void collect_leaves(const FactorTree& t, std::vector<std::size_t>& out) {
    if (t.kind == FactorTree::Kind::Leaf) {
        out.push_back(t.begin);
        return;
    }
    for (const auto& c : t.children) collect_leaves(c, out);
}

inline void verify_node(const FactorTree& t, const std::vector<int>& word,
                        const SemigroupTable& tab, ValidationReport& rep) {
    std::string at = "node [" + std::to_string(t.begin + 1) + ".." +
                     std::to_string(t.end) + "]";
    if (t.begin >= t.end || t.end > word.size()) {
        rep.add("interval", at + " is out of range");
        return;
    }
    switch (t.kind) {
        case FactorTree::Kind::Leaf:
            if (t.length() != 1) rep.add("interval", at + " leaf spans more than one position");
            if (t.value != word[t.begin]) rep.add("cached-eval", at + " leaf value mismatch");
            return;
        case FactorTree::Kind::Binary:
            if (t.children.size() != 2) {
                rep.add("arity", at + " binary node without two children");
                return;
            }
            break;
        case FactorTree::Kind::Unranked: {
            if (t.children.size() < 2) {
                rep.add("arity", at + " unranked node with fewer than two children");
                return;
            }
            bool idem = t.value >= 0 && t.value < static_cast<int>(tab.size()) &&
                        tab.is_idempotent(t.value);
            if (!idem) rep.add("unranked-idempotent", at + " value is not idempotent");
            for (const auto& c : t.children)
                if (c.value != t.value)
                    rep.add("unranked-idempotent",
                            at + " child does not evaluate to the node idempotent");
            break;
        }
    }
    std::size_t cursor = t.begin;
    for (const auto& c : t.children) {
        if (c.begin != cursor)
            rep.add("interval", at + " children do not tile the interval");
        cursor = c.end;
        verify_node(c, word, tab, rep);
    }
    if (cursor != t.end) rep.add("interval", at + " children do not reach the end");
    if (!t.children.empty()) {
        int acc = t.children.front().value;
        for (std::size_t i = 1; i < t.children.size(); ++i)
            acc = tab.product(acc, t.children[i].value);
        if (acc != t.value) rep.add("cached-eval", at + " cached evaluation mismatch");
    }
}
}  // namespace detail

// Structural check of a factor tree against its word: leaf coverage and
// order, arities, the unranked idempotence condition, cached evaluations,
// and the height bound 3|S|.
inline ValidationReport verify_factor_tree(const FactorTree& t,
                                           const std::vector<int>& word,
                                           const SemigroupTable& tab) {
    ValidationReport rep;
    if (word.empty()) {
        rep.add("word", "empty word");
        return rep;
    }
    std::vector<std::size_t> leaves;
    detail::collect_leaves(t, leaves);
    bool cover = leaves.size() == word.size() && t.begin == 0 && t.end == word.size();
    for (std::size_t i = 0; cover && i < leaves.size(); ++i)
        if (leaves[i] != i) cover = false;
    if (!cover)
        rep.add("leaf-coverage", "leaves do not enumerate word positions in order");
    detail::verify_node(t, word, tab, rep);
    int h = tree_height(t);
    int bound = 3 * static_cast<int>(tab.size());
    if (h > bound)
        rep.add("height-bound", "height " + std::to_string(h) + " exceeds 3|S| = " +
                                    std::to_string(bound));
    return rep;
}

}  // namespace spandec
