#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "arbor/permutation.hpp"

namespace arbor {

/// A small group materialized as leaf permutations with index arithmetic.
/// Everything in group_structure runs against this table, so analyses stay
/// within an explicit element budget.
class GroupTable {
public:
    static GroupTable from_elements(std::vector<Permutation> elements);
    /// Closure of the generators; TooLarge past `limit` elements.
    static GroupTable generated_by(const std::vector<Permutation>& generators,
                                   long long limit);

    int size() const { return static_cast<int>(elements_.size()); }
    int identity() const { return identity_; }
    const Permutation& element(int i) const {
        return elements_[static_cast<std::size_t>(i)];
    }
    int index_of(const Permutation& p) const;  // -1 when absent

    /// Index of element(i) ∘ element(j), j applied first.
    int mult(int i, int j) const;
    int inv(int i) const { return inverses_[static_cast<std::size_t>(i)]; }
    int conj(int g, int x) const { return mult(mult(g, x), inv(g)); }

    /// Small generating set found greedily; used to drive conjugation orbits.
    const std::vector<int>& generators() const { return generators_; }

private:
    void finish_build();

    std::vector<Permutation> elements_;
    std::unordered_map<std::string, int> index_;
    std::vector<int> inverses_;
    std::vector<int> generators_;
    int identity_ = 0;
};

/// Sorted element indices of the subgroup generated by `gens`.
std::vector<int> subgroup_closure(const GroupTable& g, const std::vector<int>& gens);

/// One representative per conjugacy class, in index order.
std::vector<int> conjugacy_class_reps(const GroupTable& g);

/// Conjugacy class of one element, sorted.
std::vector<int> conjugacy_class_of(const GroupTable& g, int x);

}  // namespace arbor
