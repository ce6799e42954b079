#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arbor/automorphism.hpp"
#include "arbor/numeric.hpp"

namespace arbor {

/// Names one group of the sign-kernel towers inside Aut(T_n(d)). Family E
/// uses the mixed character sign_e, family F uses sign_f, and an absent m'
/// degenerates E to the plain level-m sign kernel. Full is the whole
/// automorphism group ("Aut:d=3" in the string form).
struct GroupSpec {
    enum class Family { E, F, Full };

    Family family = Family::Full;
    int degree = 2;
    int m = 0;
    std::optional<int> mp;

    void validate() const;
    std::string str() const;
    /// "E:d=3,m=2", "E:d=3,m=4,mp=2", "F:d=3,m=3,mp=1", "Aut:d=3".
    static GroupSpec parse(const std::string& text);

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Recursive membership: depth below m is unconstrained; at depth >= m the
/// element's level sign must be +1 and every branch must again be a member.
bool is_member(const TreeAutomorphism& a, const GroupSpec& spec);

/// (d!)^((d^n-1)/(d-1)), divided by 2^((d^(n-m+1)-1)/(d-1)) once n >= m.
/// m' never enters: the towers for both families have equal order.
Int group_order(const GroupSpec& spec, int depth);

/// Every member exactly once; TooLarge when the order exceeds `limit`.
std::vector<TreeAutomorphism> enumerate_members(const GroupSpec& spec, int depth,
                                                long long limit);

/// Exactly uniform over the group. Branches are sampled recursively; the
/// level sign constraint is met by rejection, resampling only the root when
/// the sign depends on it and the whole level otherwise (both fibers are
/// exactly halved because the sign character is surjective).
TreeAutomorphism random_member(const GroupSpec& spec, int depth, Rng& rng);
TreeAutomorphism random_member(const GroupSpec& spec, int depth, std::uint64_t seed);

/// Orbit of a leaf under the group, sorted. Computed by a full-enumeration
/// sweep when the order fits the budget, otherwise by breadth-first closure
/// over per-vertex even generators (sound and complete for degree >= 3, where
/// they already act transitively on every branch set).
std::vector<long long> leaf_orbit(const GroupSpec& spec, int depth, long long leaf,
                                  long long budget);

}  // namespace arbor
