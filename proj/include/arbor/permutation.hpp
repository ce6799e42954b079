#pragma once

#include <string>
#include <vector>

namespace arbor {

/// Permutation of {0, ..., k-1} stored as its image table.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int degree);
    /// Cycle given as a vertex list, e.g. {0,1,2} maps 0->1->2->0.
    static Permutation from_cycle(int degree, const std::vector<int>& cycle);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }
    bool is_identity() const;

    /// Byte key for hashing (degree <= 255 enforced at construction).
    std::string key() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// compose(a, b) applies b first: compose(a, b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);

/// +1 for even, -1 for odd.
int parity(const Permutation& p);

/// Nontrivial cycles, each starting at its least element, ordered by it.
std::vector<std::vector<int>> cycles(const Permutation& p);

/// All permutations of degree n in lexicographic image order.
std::vector<Permutation> all_permutations(int n);

/// u with u * x * u^{-1} == y, built by matching same-length cycles in least-
/// element order. Errors when the cycle types differ.
Permutation conjugating_map(const Permutation& x, const Permutation& y);

}  // namespace arbor
