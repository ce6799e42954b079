#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arbor/automorphism.hpp"
#include "arbor/group_table.hpp"
#include "arbor/overgroups.hpp"

namespace arbor {

/// Materialize a spec'd group at the given depth as a leaf-permutation table.
GroupTable materialize(const GroupSpec& spec, int depth, long long limit);

/// Smallest normal subgroup containing `element`, as sorted indices.
std::vector<int> normal_closure(const GroupTable& g, int element);

/// Smallest normal subgroup containing the (normal) subgroup `base` and
/// `element`.
std::vector<int> normal_closure_over(const GroupTable& g, const std::vector<int>& base,
                                     int element);

/// Whether normal_closure(g, element) contains `probe`, stopping the closure
/// as soon as the probe appears.
bool normal_closure_contains(const GroupTable& g, int element, int probe);

/// All distinct minimal normal subgroups, via normal closures of one
/// representative per conjugacy class filtered to inclusion-minimal.
std::vector<std::vector<int>> minimal_normal_subgroups(const GroupTable& g);

struct ChiefSeries {
    std::vector<std::vector<int>> subgroups;  // ascending chain {1} .. G
    std::vector<long long> orders;
    std::vector<std::string> factor_hints;  // "C3^3", "C2", "nonabelian(60)", ...
    bool unique = false;  // exactly one minimal normal subgroup at every step
};

ChiefSeries chief_series(const GroupTable& g);

/// k elements generating g, from seeded random trials plus, for small
/// searches, a deterministic sweep ordered by cycle type. nullopt when the
/// budget is exhausted without a witness.
std::optional<std::vector<int>> find_generating_set(const GroupTable& g, int k,
                                                    int trials, std::uint64_t seed);

/// Invariant factors of g/[g,g], ascending divisibility order.
std::vector<long long> abelian_invariants(const GroupTable& g);

/// Sign-tuple normalization: rotate three consecutive entries, or multiply
/// the tuple by its own cyclic shift. Replaying the move log from the input
/// reproduces the result (-1,-1,+1,...,+1).
struct TupleMove {
    enum class Kind { Rotate3, ShiftMultiply };
    Kind kind = Kind::Rotate3;
    int index = 0;  // leftmost position of the rotated triple

    friend bool operator==(const TupleMove&, const TupleMove&) = default;
};

struct TupleNormalization {
    std::vector<int> result;
    std::vector<TupleMove> moves;
};

std::vector<int> apply_move(const std::vector<int>& tuple, const TupleMove& move);
TupleNormalization normalize_tuple(const std::vector<int>& tuple);

/// tau with tau * a * tau^{-1} == inverse(a). Bottom-level pieces are solved
/// by cycle matching along the orbits of the truncated action; the truncation
/// is handled recursively.
TreeAutomorphism inverting_conjugator(const TreeAutomorphism& a);

/// c inside the last-level kernel (truncate(c, depth-1) trivial), a member of
/// `spec`, with s*c*s^{-1}*c^{-1} != 1. Structured candidates first, then
/// seeded random ones; NoWitness when the budget is exhausted.
TreeAutomorphism commutator_witness(const TreeAutomorphism& s, const GroupSpec& spec,
                                    std::uint64_t seed = 1);

}  // namespace arbor
