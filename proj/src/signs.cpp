#include "arbor/signs.hpp"

#include <string>

#include "arbor/errors.hpp"

namespace arbor {

namespace {

/// Summed inversion count over `blocks` consecutive d-blocks, branchless;
/// the product of the block parities is (-1)^total. Cheaper than a cycle
/// walk for the small vertex degrees, and the tight loop over the flat
/// table is what makes the one-pass sign beat the leaf expansion.
long long range_inversions(const int* p, long long blocks, int d) {
    long long inversions = 0;
    if (d == 2) {
        for (long long b = 0; b < blocks; ++b, p += 2) inversions += p[0] > p[1];
    } else if (d == 3) {
        for (long long b = 0; b < blocks; ++b, p += 3)
            inversions += (p[0] > p[1]) + (p[0] > p[2]) + (p[1] > p[2]);
    } else {
        for (long long b = 0; b < blocks; ++b, p += d)
            for (int i = 0; i < d; ++i)
                for (int j = i + 1; j < d; ++j) inversions += p[i] > p[j];
    }
    return inversions;
}

/// Product of the parities of every vertex permutation in levels
/// [from, to), counting a level only when the one-pass rule says it reaches
/// the leaves an odd number of times: for odd degree always, for even degree
/// only the level `bottom` (the deepest level of the tree being evaluated).
int range_sign(const TreeAutomorphism& a, int from, int to, int bottom) {
    const int d = a.degree();
    long long inversions = 0;
    if (d % 2 == 1) {
        long long blocks = 0;
        long long width = 1;
        for (int level = 0; level < to; ++level) {
            if (level >= from) blocks += width;
            width *= d;
        }
        if (blocks > 0)
            inversions = range_inversions(a.level_images(from).data(), blocks, d);
    } else if (from <= bottom && bottom < to) {
        inversions = range_inversions(a.level_images(bottom).data(), a.level_width(bottom), d);
    }
    return inversions % 2 == 0 ? 1 : -1;
}

void check_level(const TreeAutomorphism& a, int level) {
    if (level < 0 || level > a.depth())
        fail(errkind::out_of_range, "sign level out of range: " + std::to_string(level));
}

}  // namespace

int sign(const TreeAutomorphism& a) { return range_sign(a, 0, a.depth(), a.depth() - 1); }

int sign_at(const TreeAutomorphism& a, int level) {
    check_level(a, level);
    return range_sign(a, 0, level, level - 1);
}

int sign_below(const TreeAutomorphism& a, int level) {
    check_level(a, level);
    // Every hanging subtree bottoms out at the tree's own last level, so the
    // product over all of them is one range pass.
    return range_sign(a, level, a.depth(), a.depth() - 1);
}

namespace {

void check_level_pair(const TreeAutomorphism& a, int m, int mp) {
    if (!(a.depth() >= m && m > mp && mp > 0))
        fail(errkind::invalid_argument,
             "levels must satisfy depth >= m > m' > 0, got m=" + std::to_string(m) +
                 ", m'=" + std::to_string(mp));
}

}  // namespace

int sign_e(const TreeAutomorphism& a, int m, int mp) {
    check_level_pair(a, m, mp);
    // sign_below(truncate(a, m), mp) * sign_at(a, mp), without the copy.
    return range_sign(a, mp, m, m - 1) * range_sign(a, 0, mp, mp - 1);
}

int sign_f(const TreeAutomorphism& a, int m, int mp) {
    check_level_pair(a, m, mp);
    return range_sign(a, mp, m, m - 1);
}

}  // namespace arbor
