#pragma once

#include "arbor/automorphism.hpp"

namespace arbor {

/// Parity of the leaf permutation, computed in one pass over the tree: a
/// root cycle of length L induces d^(depth-1) leaf cycles of length L, so the
/// root permutation contributes its own parity exactly when that count is
/// odd (depth 1, or odd d).
int sign(const TreeAutomorphism& a);

/// sign of the truncation to `level`; sign_at(a, depth) == sign(a),
/// sign_at(a, 0) == +1.
int sign_at(const TreeAutomorphism& a, int level);

/// Product of the signs of the d^level subtrees hanging below `level`.
/// Boundary values: level 0 gives sign(a), level == depth gives +1.
int sign_below(const TreeAutomorphism& a, int level);

/// The two combined sign characters cut out the E/F group towers; both need
/// depth >= m > mp > 0. They satisfy sign_e * sign_f == sign_at(mp), and by
/// parity: odd d gives sign_e == sign_at(m), sign_f == sign_at(m)*sign_at(mp);
/// even d swaps the two.
int sign_e(const TreeAutomorphism& a, int m, int mp);
int sign_f(const TreeAutomorphism& a, int m, int mp);

}  // namespace arbor
