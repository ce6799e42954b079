#include "arbor/overgroups.hpp"

#include <algorithm>
#include <set>

#include "arbor/errors.hpp"
#include "arbor/signs.hpp"

namespace arbor {

void GroupSpec::validate() const {
    if (degree < 2) fail(errkind::invalid_argument, "spec degree must be >= 2");
    if (family == Family::Full) return;
    if (m <= 0) fail(errkind::invalid_argument, "spec level m must be > 0");
    if (mp && !(m > *mp && *mp > 0))
        fail(errkind::invalid_argument, "spec levels must satisfy m > m' > 0");
    if (family == Family::F && !mp)
        fail(errkind::invalid_argument, "family F needs both levels m and m'");
}

std::string GroupSpec::str() const {
    switch (family) {
        case Family::Full:
            return "Aut:d=" + std::to_string(degree);
        case Family::E:
        case Family::F: {
            std::string s = family == Family::E ? "E" : "F";
            s += ":d=" + std::to_string(degree) + ",m=" + std::to_string(m);
            if (mp) s += ",mp=" + std::to_string(*mp);
            return s;
        }
    }
    return {};
}

namespace {

int parse_int_field(const std::string& part, const std::string& key) {
    const std::string prefix = key + "=";
    if (part.rfind(prefix, 0) != 0)
        fail(errkind::parse_error, "expected " + prefix + "<int>, got '" + part + "'");
    try {
        std::size_t used = 0;
        const int v = std::stoi(part.substr(prefix.size()), &used);
        if (used != part.size() - prefix.size()) throw std::invalid_argument(part);
        return v;
    } catch (const std::exception&) {
        fail(errkind::parse_error, "bad integer in spec field '" + part + "'");
    }
}

}  // namespace

GroupSpec GroupSpec::parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        fail(errkind::parse_error, "spec needs '<family>:<fields>', got '" + text + "'");
    const std::string family_name = text.substr(0, colon);
    GroupSpec spec;
    if (family_name == "E")
        spec.family = Family::E;
    else if (family_name == "F")
        spec.family = Family::F;
    else if (family_name == "Aut")
        spec.family = Family::Full;
    else
        fail(errkind::parse_error, "unknown family '" + family_name + "'");

    std::vector<std::string> parts;
    std::string rest = text.substr(colon + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
        const auto comma = rest.find(',', pos);
        parts.push_back(rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                                    : comma - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (parts.empty()) fail(errkind::parse_error, "spec has no fields");
    spec.degree = parse_int_field(parts[0], "d");
    if (spec.family == Family::Full) {
        if (parts.size() != 1) fail(errkind::parse_error, "Aut spec takes only d");
    } else {
        if (parts.size() < 2) fail(errkind::parse_error, "spec needs m");
        spec.m = parse_int_field(parts[1], "m");
        if (parts.size() >= 3) spec.mp = parse_int_field(parts[2], "mp");
        if (parts.size() > 3) fail(errkind::parse_error, "too many spec fields");
    }
    spec.validate();
    return spec;
}

namespace {

/// Identity everywhere except for `perm` applied at the level-`level` vertex
/// indexed by `vertex` (the top tree's leaf labels).
TreeAutomorphism place_at_vertex(const TreeShape& shape, long long vertex, int level,
                                 const Permutation& perm) {
    std::vector<TreeAutomorphism> children(
        static_cast<std::size_t>(shape.degree),
        TreeAutomorphism::identity({shape.degree, shape.depth - 1}));
    if (level == 0) return TreeAutomorphism(perm, std::move(children));
    const auto branch = static_cast<std::size_t>(vertex % shape.degree);
    children[branch] = place_at_vertex({shape.degree, shape.depth - 1},
                                       vertex / shape.degree, level - 1, perm);
    return TreeAutomorphism(Permutation::identity(shape.degree), std::move(children));
}

/// The +1 constraint the tower imposes at the current depth (depth >= m).
int level_sign(const TreeAutomorphism& a, const GroupSpec& spec) {
    if (spec.family == GroupSpec::Family::F) return sign_f(a, spec.m, *spec.mp);
    if (spec.mp) return sign_e(a, spec.m, *spec.mp);
    return sign_at(a, spec.m);
}

/// Whether the level sign changes when the root permutation's parity flips.
/// sign_f and the hanging factor of sign_e never see the root; the truncated
/// factor contributes parity(root)^(d^(level-1)).
bool root_affects_level_sign(const GroupSpec& spec) {
    if (spec.family == GroupSpec::Family::F) return false;
    const int level = spec.mp ? *spec.mp : spec.m;
    return spec.degree % 2 == 1 || level == 1;
}

bool member_rec(const TreeAutomorphism& a, const GroupSpec& spec) {
    if (a.depth() < spec.m) return true;
    if (level_sign(a, spec) != 1) return false;
    for (const auto& c : a.children())
        if (!member_rec(c, spec)) return false;
    return true;
}

}  // namespace

bool is_member(const TreeAutomorphism& a, const GroupSpec& spec) {
    spec.validate();
    if (a.depth() > 0 && a.degree() != spec.degree)
        fail(errkind::shape_mismatch, "element degree does not match the spec");
    if (spec.family == GroupSpec::Family::Full) return true;
    return member_rec(a, spec);
}

Int group_order(const GroupSpec& spec, int depth) {
    spec.validate();
    if (depth < 0) fail(errkind::invalid_argument, "depth must be >= 0");
    // (d^depth - 1)/(d - 1) internal vertices; keep the exponent sane.
    Int vertices = 0;
    Int level = 1;
    for (int k = 0; k < depth; ++k) {
        vertices += level;
        level *= spec.degree;
        if (vertices > 1'000'000)
            fail(errkind::too_large, "order exponent exceeds the output budget");
    }
    Int order = int_pow(factorial(spec.degree), vertices.convert_to<unsigned long>());
    if (spec.family != GroupSpec::Family::Full && depth >= spec.m) {
        Int halvings = 0;
        Int block = 1;
        for (int k = 0; k <= depth - spec.m; ++k) {
            halvings += block;
            block *= spec.degree;
        }
        order /= int_pow(Int(2), halvings.convert_to<unsigned long>());
    }
    return order;
}

std::vector<TreeAutomorphism> enumerate_members(const GroupSpec& spec, int depth,
                                                long long limit) {
    spec.validate();
    const Int order = group_order(spec, depth);
    if (order > limit)
        fail(errkind::too_large,
             "group order " + order.str() + " exceeds the limit " + std::to_string(limit));

    const TreeShape shape{spec.degree, depth};
    if (spec.family == GroupSpec::Family::Full || depth < spec.m)
        return enumerate_all(shape, limit);

    const auto sub = enumerate_members(spec, depth - 1, limit);
    const auto roots = all_permutations(spec.degree);
    std::vector<TreeAutomorphism> out;
    out.reserve(static_cast<std::size_t>(order.convert_to<long long>()));
    std::vector<std::size_t> odometer(static_cast<std::size_t>(spec.degree), 0);
    while (true) {
        std::vector<TreeAutomorphism> children;
        children.reserve(odometer.size());
        for (std::size_t c = 0; c < odometer.size(); ++c) children.push_back(sub[odometer[c]]);
        for (const auto& root : roots) {
            TreeAutomorphism candidate(root, children);
            if (level_sign(candidate, spec) == 1) out.push_back(std::move(candidate));
        }
        std::size_t pos = 0;
        while (pos < odometer.size() && ++odometer[pos] == sub.size()) {
            odometer[pos] = 0;
            ++pos;
        }
        if (pos == odometer.size()) break;
    }
    return out;
}

TreeAutomorphism random_member(const GroupSpec& spec, int depth, Rng& rng) {
    spec.validate();
    const TreeShape shape{spec.degree, depth};
    if (spec.family == GroupSpec::Family::Full || depth < spec.m)
        return random_automorphism(shape, rng);

    constexpr int kMaxRejects = 1 << 20;
    if (root_affects_level_sign(spec)) {
        std::vector<TreeAutomorphism> children;
        children.reserve(static_cast<std::size_t>(spec.degree));
        for (int c = 0; c < spec.degree; ++c)
            children.push_back(random_member(spec, depth - 1, rng));
        for (int tries = 0; tries < kMaxRejects; ++tries) {
            TreeAutomorphism candidate(Permutation(rng.permutation_images(spec.degree)),
                                       children);
            if (level_sign(candidate, spec) == 1) return candidate;
        }
    } else {
        for (int tries = 0; tries < kMaxRejects; ++tries) {
            std::vector<TreeAutomorphism> children;
            children.reserve(static_cast<std::size_t>(spec.degree));
            for (int c = 0; c < spec.degree; ++c)
                children.push_back(random_member(spec, depth - 1, rng));
            TreeAutomorphism candidate(Permutation(rng.permutation_images(spec.degree)),
                                       std::move(children));
            if (level_sign(candidate, spec) == 1) return candidate;
        }
    }
    fail(errkind::invalid_argument, "rejection sampling failed to terminate");
}

TreeAutomorphism random_member(const GroupSpec& spec, int depth, std::uint64_t seed) {
    Rng rng(seed);
    return random_member(spec, depth, rng);
}

std::vector<long long> leaf_orbit(const GroupSpec& spec, int depth, long long leaf,
                                  long long budget) {
    spec.validate();
    const TreeShape shape{spec.degree, depth};
    const long long leaves = shape.leaf_count();
    if (leaf < 0 || leaf >= leaves)
        fail(errkind::out_of_range, "leaf index out of range: " + std::to_string(leaf));

    std::set<long long> orbit{leaf};
    if (group_order(spec, depth) <= budget) {
        for (const auto& g : enumerate_members(spec, depth, budget))
            orbit.insert(act_on_leaf(g, leaf));
        return {orbit.begin(), orbit.end()};
    }
    if (leaves > budget)
        fail(errkind::too_large, "orbit output would exceed the budget");
    if (spec.degree == 2)
        fail(errkind::too_large,
             "degree-2 orbits need full enumeration, which exceeds the budget");

    // Per-vertex even generators: 3-cycles (0 1 k) applied at one vertex.
    // Each one passes every sign test, so they are members of any spec, and
    // they act transitively on each branch set for degree >= 3.
    std::vector<TreeAutomorphism> gens;
    for (int level = 0; level < depth; ++level) {
        const long long vertices = checked_pow_ll(spec.degree, level);
        for (long long v = 0; v < vertices; ++v)
            for (int k = 2; k < spec.degree; ++k)
                gens.push_back(place_at_vertex(
                    shape, v, level, Permutation::from_cycle(spec.degree, {0, 1, k})));
    }
    std::vector<long long> frontier{leaf};
    while (!frontier.empty()) {
        std::vector<long long> next;
        for (long long x : frontier) {
            for (const auto& g : gens) {
                const long long y = act_on_leaf(g, x);
                if (orbit.insert(y).second) next.push_back(y);
            }
        }
        frontier = std::move(next);
    }
    return {orbit.begin(), orbit.end()};
}

}  // namespace arbor
