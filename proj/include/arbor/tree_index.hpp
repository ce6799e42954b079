#pragma once

#include <vector>

namespace arbor {

/// Shape of the complete rooted d-ary tree: `degree` branches per internal
/// vertex, `depth` levels below the root.
struct TreeShape {
    int degree = 2;  // >= 2
    int depth = 0;   // >= 0

    long long leaf_count() const;    // degree^depth
    long long vertex_count() const;  // (degree^(depth+1) - 1) / (degree - 1)

    friend bool operator==(const TreeShape&, const TreeShape&) = default;
};

void validate(const TreeShape& shape);

/// Branch choices along a root-to-vertex walk, listed deepest-first: the last
/// entry is the branch taken at the root. Leaves of one level-m subtree agree
/// on their trailing m entries, i.e. on their m least-significant base-d
/// digits, so same_subtree is a congruence mod d^m.
using VertexPath = std::vector<int>;

/// Index of a full-depth path: fold of base-d digits, most significant first.
long long leaf_index(const VertexPath& path, const TreeShape& shape);

VertexPath path_of_index(long long index, const TreeShape& shape);

/// Whether leaves i and j lie in the same subtree rooted at level `level`.
bool same_subtree(long long i, long long j, int level, const TreeShape& shape);

}  // namespace arbor
