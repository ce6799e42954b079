#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "arbor/permutation.hpp"
#include "arbor/rng.hpp"
#include "arbor/tree_index.hpp"

namespace arbor {

/// Automorphism of the complete d-ary tree of fixed depth: one permutation
/// per internal vertex, acting on that vertex's branches before the levels
/// above relabel them, so composition satisfies
///   compose(a, b).child(c) = compose(a.child(b.root()(c)), b.child(c)).
///
/// Storage is a single flat table: level k holds d^k permutations of degree
/// d, indexed by the level-k vertex labels (the level-k tree's leaf labels),
/// root first. One pass over the table is a pass over the whole tree.
class TreeAutomorphism {
public:
    TreeAutomorphism() = default;  // depth-0 identity

    static TreeAutomorphism identity(const TreeShape& shape);

    /// Depth >= 1 node from a root permutation and `degree` branch
    /// automorphisms of one depth less.
    TreeAutomorphism(const Permutation& root, const std::vector<TreeAutomorphism>& children);

    TreeShape shape() const { return {degree_, depth_}; }
    int degree() const { return degree_; }
    int depth() const { return depth_; }

    Permutation root() const;               // valid for depth >= 1
    TreeAutomorphism child(int branch) const;
    std::vector<TreeAutomorphism> children() const;

    /// Image table of the permutation applied at one vertex.
    std::span<const int> vertex_images(int level, long long vertex) const;
    /// All of one level's permutations, d^level contiguous blocks of d.
    std::span<const int> level_images(int level) const;
    long long level_width(int level) const;  // d^level

    bool is_identity() const;

    // Depth-0 values are the unique identity regardless of the degree they
    // were created with, so the degree is not compared.
    friend bool operator==(const TreeAutomorphism& a, const TreeAutomorphism& b) {
        return a.depth_ == b.depth_ && a.table_ == b.table_;
    }

private:
    friend TreeAutomorphism compose(const TreeAutomorphism&, const TreeAutomorphism&);
    friend TreeAutomorphism inverse(const TreeAutomorphism&);
    friend TreeAutomorphism truncate(const TreeAutomorphism&, int);
    friend struct FlatAccess;

    TreeAutomorphism(int degree, int depth) : degree_(degree), depth_(depth) {}
    long long level_offset(int level) const;
    int* slot(int level, long long vertex);
    const int* slot(int level, long long vertex) const;

    int degree_ = 2;
    int depth_ = 0;
    std::vector<int> table_;  // sum over levels k < depth of d^k blocks of d images
};

/// Function-composition order: b acts first.
TreeAutomorphism compose(const TreeAutomorphism& a, const TreeAutomorphism& b);
TreeAutomorphism inverse(const TreeAutomorphism& a);

long long act_on_leaf(const TreeAutomorphism& a, long long leaf);

/// The permutation a induces on the d^n leaves; injective and a homomorphism
/// under `compose`.
Permutation leaf_permutation(const TreeAutomorphism& a);

/// Inverse of leaf_permutation where one exists; errors NotTreeRespecting
/// when some level's subtree blocks are not permuted as sets.
TreeAutomorphism from_leaf_permutation(const Permutation& p, const TreeShape& shape);

/// Truncation to the top `level` levels; a surjective homomorphism.
TreeAutomorphism truncate(const TreeAutomorphism& a, int level);

/// Split into the depth-`level` top part and the d^level subtree parts
/// hanging below it, indexed by the top part's leaf labels.
struct Decomposition {
    TreeAutomorphism top;
    std::vector<TreeAutomorphism> hanging;
};

Decomposition split_at_level(const TreeAutomorphism& a, int level);
TreeAutomorphism join_at_level(const TreeAutomorphism& top,
                               const std::vector<TreeAutomorphism>& hanging);

/// Uniform over the full automorphism group: independent uniform permutation
/// at every vertex, consumed root-first then branches in order.
TreeAutomorphism random_automorphism(const TreeShape& shape, Rng& rng);
TreeAutomorphism random_automorphism(const TreeShape& shape, std::uint64_t seed);

/// Every automorphism of the shape, errors TooLarge past `limit`.
std::vector<TreeAutomorphism> enumerate_all(const TreeShape& shape, long long limit);

/// Nested record {"perm": [...], "children": [...]}; round-trips bit-exactly.
std::string to_json(const TreeAutomorphism& a);
TreeAutomorphism automorphism_from_json(const std::string& text);

}  // namespace arbor
