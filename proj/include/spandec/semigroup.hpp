#pragma once

#include <map>
#include <string>
#include <vector>

#include "spandec/abstraction.hpp"
#include "spandec/error.hpp"

namespace spandec {

// Multiplication table of the subsemigroup generated by a letter set.
// Frozen after construction; element order is closure discovery order.
class SemigroupTable {
public:
    static SemigroupTable generate(const std::vector<CanonicalAbstraction>& letters) {
        detail::require(!letters.empty(), "generate_subsemigroup: no letters");
        for (const auto& a : letters)
            detail::require(a.k == letters.front().k,
                            "generate_subsemigroup: mismatched k");
        SemigroupTable t;
        for (const auto& a : letters) t.intern(a);
        std::size_t done = 0;
        while (done < t.elements_.size()) {
            std::size_t n = t.elements_.size();
            for (std::size_t i = 0; i < n; ++i)
                t.product_.at(i).resize(n, -1);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    if (i < done && j < done) continue;
                    int p = t.intern(boxplus(t.elements_[i], t.elements_[j]));
                    t.product_[i][j] = p;
                }
            }
            done = n;
        }
        for (std::size_t i = 0; i < t.elements_.size(); ++i)
            t.idempotent_.push_back(t.product_[i][i] == static_cast<int>(i));
        return t;
    }

    std::size_t size() const { return elements_.size(); }

    const CanonicalAbstraction& element(int i) const { return elements_.at(i); }

    int index_of(const CanonicalAbstraction& a) const {
        auto it = index_.find(a);
        detail::require(it != index_.end(), "semigroup table: unknown element");
        return it->second;
    }

    int product(int i, int j) const { return product_.at(i).at(j); }

    bool is_idempotent(int i) const { return idempotent_.at(i); }

    std::vector<int> idempotents() const {
        std::vector<int> r;
        for (std::size_t i = 0; i < elements_.size(); ++i)
            if (idempotent_[i]) r.push_back(static_cast<int>(i));
        return r;
    }

private:
    int intern(const CanonicalAbstraction& a) {
        auto it = index_.find(a);
        if (it != index_.end()) return it->second;
        int idx = static_cast<int>(elements_.size());
        index_.emplace(a, idx);
        elements_.push_back(a);
        product_.emplace_back();
        return idx;
    }

    std::vector<CanonicalAbstraction> elements_;
    std::map<CanonicalAbstraction, int> index_;
    std::vector<std::vector<int>> product_;
    std::vector<bool> idempotent_;
};

inline SemigroupTable generate_subsemigroup(const std::vector<CanonicalAbstraction>& letters) {
    return SemigroupTable::generate(letters);
}

// Left fold of the word under the table product.
inline int evaluate(const std::vector<int>& word, const SemigroupTable& t) {
    detail::require(!word.empty(), "evaluate: empty word");
    int acc = word.front();
    for (std::size_t i = 1; i < word.size(); ++i) acc = t.product(acc, word[i]);
    return acc;
}

}  // namespace spandec
