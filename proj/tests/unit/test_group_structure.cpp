#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>

#include "arbor/errors.hpp"
#include "arbor/group_structure.hpp"
#include "arbor/signs.hpp"

using namespace arbor;

namespace {

GroupTable s3_table() {
    return GroupTable::from_elements(all_permutations(3));
}

GroupTable klein_table() {
    return GroupTable::generated_by(
        {Permutation::from_cycle(4, {0, 1}), Permutation::from_cycle(4, {2, 3})}, 10);
}

TreeAutomorphism depth1(const Permutation& root) {
    return TreeAutomorphism(
        root, std::vector<TreeAutomorphism>(static_cast<std::size_t>(root.degree()),
                                            TreeAutomorphism::identity({root.degree(), 0})));
}

/// Bottom tuple ((c_0, ..., c_{k-1}); 1) as a depth-n automorphism.
TreeAutomorphism bottom_tuple(int degree, int depth, const std::vector<Permutation>& pieces) {
    std::vector<TreeAutomorphism> hanging;
    hanging.reserve(pieces.size());
    for (const auto& p : pieces) hanging.push_back(depth1(p));
    return join_at_level(TreeAutomorphism::identity({degree, depth - 1}), hanging);
}

}  // namespace

TEST_CASE("materialize") {
    CHECK(materialize(GroupSpec::parse("E:d=3,m=2"), 1, 100).size() == 6);
    CHECK(materialize(GroupSpec::parse("E:d=3,m=2"), 2, 1000).size() == 648);
    CHECK(materialize(GroupSpec::parse("Aut:d=2"), 2, 100).size() == 8);
    CHECK_THROWS_AS(materialize(GroupSpec::parse("E:d=3,m=2"), 2, 100), DomainError);
}

TEST_CASE("normal closure pins") {
    const auto s3 = s3_table();
    CHECK(normal_closure(s3, s3.identity()) == std::vector<int>{s3.identity()});
    const int rot = s3.index_of(Permutation::from_cycle(3, {0, 1, 2}));
    CHECK(normal_closure(s3, rot).size() == 3);

    // Any nontrivial bottom alternating tuple spans the whole order-27 layer.
    const auto table = materialize(GroupSpec::parse("E:d=3,m=2"), 2, 1000);
    const auto probe = bottom_tuple(
        3, 2,
        {Permutation::from_cycle(3, {0, 1, 2}), Permutation::identity(3), Permutation::identity(3)});
    const auto closure = normal_closure(table, table.index_of(leaf_permutation(probe)));
    CHECK(closure.size() == 27);
    // ... and it is exactly the alternating tuples.
    std::vector<Permutation> alternating;
    for (const auto& p : all_permutations(3))
        if (parity(p) == 1) alternating.push_back(p);
    std::set<int> expected;
    for (const auto& a : alternating)
        for (const auto& b : alternating)
            for (const auto& c : alternating)
                expected.insert(table.index_of(leaf_permutation(bottom_tuple(3, 2, {a, b, c}))));
    CHECK(std::vector<int>(expected.begin(), expected.end()) == closure);
}

TEST_CASE("minimal normal subgroups") {
    const auto s3 = s3_table();
    const auto mins = minimal_normal_subgroups(s3);
    REQUIRE(mins.size() == 1);
    CHECK(mins.front().size() == 3);

    const auto klein = klein_table();
    const auto kmins = minimal_normal_subgroups(klein);
    CHECK(kmins.size() == 3);
    for (const auto& m : kmins) CHECK(m.size() == 2);

    const auto table = materialize(GroupSpec::parse("E:d=3,m=2"), 2, 1000);
    const auto emins = minimal_normal_subgroups(table);
    REQUIRE(emins.size() == 1);
    CHECK(emins.front().size() == 27);
}

TEST_CASE("chief series") {
    const auto s3 = s3_table();
    const auto series = chief_series(s3);
    CHECK(series.orders == std::vector<long long>{1, 3, 6});
    CHECK(series.unique);
    CHECK(series.factor_hints == std::vector<std::string>{"C3", "C2"});

    const auto klein = chief_series(klein_table());
    CHECK_FALSE(klein.unique);
    CHECK(klein.orders == std::vector<long long>{1, 2, 4});
}

TEST_CASE("generating sets") {
    const auto s3 = s3_table();
    const auto pair = find_generating_set(s3, 2, 100, 41);
    REQUIRE(pair.has_value());
    CHECK(subgroup_closure(s3, *pair).size() == 6);
    CHECK_FALSE(find_generating_set(s3, 1, 100, 43).has_value());

    const auto klein = klein_table();
    CHECK(find_generating_set(klein, 2, 100, 47).has_value());
    CHECK_FALSE(find_generating_set(klein, 1, 100, 53).has_value());
}

TEST_CASE("abelian invariants") {
    CHECK(abelian_invariants(s3_table()) == std::vector<long long>{2});
    const auto a3 = GroupTable::generated_by({Permutation::from_cycle(3, {0, 1, 2})}, 10);
    CHECK(abelian_invariants(a3) == std::vector<long long>{3});
    CHECK(abelian_invariants(klein_table()) == std::vector<long long>{2, 2});
    const auto c6 = GroupTable::generated_by({Permutation::from_cycle(6, {0, 1, 2, 3, 4, 5})}, 10);
    CHECK(abelian_invariants(c6) == std::vector<long long>{6});
}

TEST_CASE("tuple normalization pins") {
    const auto norm = normalize_tuple({1, -1, -1});
    CHECK(norm.result == std::vector<int>{-1, -1, 1});
    std::vector<int> replay{1, -1, -1};
    for (const auto& move : norm.moves) replay = apply_move(replay, move);
    CHECK(replay == norm.result);

    CHECK(normalize_tuple({-1, -1, 1}).moves.empty());

    CHECK_THROWS_AS(normalize_tuple({-1, 1, 1}), DomainError);    // odd parity
    CHECK_THROWS_AS(normalize_tuple({1, 1, 1}), DomainError);     // all positive
    CHECK_THROWS_AS(normalize_tuple({1, -1, -1, 1}), DomainError);  // even length
}

TEST_CASE("tuple normalization terminates on every legal input") {
    for (int d : {3, 5, 7}) {
        std::vector<int> target(static_cast<std::size_t>(d), 1);
        target[0] = target[1] = -1;
        const long long cap = static_cast<long long>(d) * (1ll << d);
        for (long long mask = 1; mask < (1ll << d); ++mask) {
            std::vector<int> tuple(static_cast<std::size_t>(d), 1);
            int negatives = 0;
            for (int i = 0; i < d; ++i)
                if (mask & (1ll << i)) {
                    tuple[static_cast<std::size_t>(i)] = -1;
                    ++negatives;
                }
            if (negatives == 0 || negatives % 2 != 0) continue;
            const auto norm = normalize_tuple(tuple);
            REQUIRE(norm.result == target);
            REQUIRE(static_cast<long long>(norm.moves.size()) <= cap);
            std::vector<int> replay = tuple;
            for (const auto& move : norm.moves) replay = apply_move(replay, move);
            REQUIRE(replay == norm.result);
        }
    }
}

TEST_CASE("inverting conjugator") {
    const auto id = TreeAutomorphism::identity({3, 2});
    CHECK(compose(compose(inverting_conjugator(id), id), inverse(inverting_conjugator(id))) ==
          inverse(id));

    // The 3-cycle at one level is inverted by conjugation with (1 2).
    const auto rot = depth1(Permutation({1, 2, 0}));
    const auto tau = inverting_conjugator(rot);
    CHECK(tau.root() == Permutation({0, 2, 1}));
    CHECK(compose(compose(tau, rot), inverse(tau)) == inverse(rot));

    Rng rng(401);
    for (int t = 0; t < 100; ++t) {
        const auto a = random_automorphism({3, 3}, rng);
        const auto u = inverting_conjugator(a);
        REQUIRE(compose(compose(u, a), inverse(u)) == inverse(a));
    }
    for (int t = 0; t < 50; ++t) {
        const auto a = random_automorphism({2, 4}, rng);
        const auto u = inverting_conjugator(a);
        REQUIRE(compose(compose(u, a), inverse(u)) == inverse(a));
    }
}

TEST_CASE("commutator witness") {
    const auto spec = GroupSpec::parse("E:d=3,m=2");

    // Pure top rotation: the witness separates an orbit of bottom slots.
    const auto top_rot = TreeAutomorphism(
        Permutation({1, 2, 0}),
        std::vector<TreeAutomorphism>(3, TreeAutomorphism::identity({3, 1})));
    REQUIRE(is_member(top_rot, spec));
    const auto c1 = commutator_witness(top_rot, spec);
    CHECK(truncate(c1, 1).is_identity());
    CHECK(is_member(c1, spec));
    CHECK_FALSE(compose(compose(top_rot, c1), compose(inverse(top_rot), inverse(c1))).is_identity());

    // A bottom tuple inside the kernel of the level-1 restriction.
    const auto bottom = bottom_tuple(3, 2,
                                     {Permutation::from_cycle(3, {0, 1}),
                                      Permutation::from_cycle(3, {0, 1}), Permutation::identity(3)});
    REQUIRE(is_member(bottom, spec));
    REQUIRE(truncate(bottom, 1).is_identity());
    const auto c2 = commutator_witness(bottom, spec);
    CHECK(truncate(c2, 1).is_identity());
    CHECK(is_member(c2, spec));
    CHECK_FALSE(compose(compose(bottom, c2), compose(inverse(bottom), inverse(c2))).is_identity());

    Rng rng(409);
    for (int t = 0; t < 25; ++t) {
        auto s = random_member(spec, 2, rng);
        while (s.is_identity()) s = random_member(spec, 2, rng);
        const auto c = commutator_witness(s, spec);
        REQUIRE(truncate(c, 1).is_identity());
        REQUIRE(is_member(c, spec));
        REQUIRE_FALSE(compose(compose(s, c), compose(inverse(s), inverse(c))).is_identity());
    }
}

TEST_CASE("slotwise inversion by conjugation inside the tower group") {
    // For 100 random bottom tuples b in the 648-element group, some group
    // element conjugates b to the tuple with all but the first slot (or all
    // but the first two slots) inverted.
    const auto spec = GroupSpec::parse("E:d=3,m=2");
    const auto members = enumerate_members(spec, 2, 1000);
    Rng rng(419);
    const auto perms3 = all_permutations(3);
    int found_count = 0;
    for (int t = 0; t < 100; ++t) {
        std::vector<Permutation> pieces;
        do {
            pieces.clear();
            int product = 1;
            for (int i = 0; i < 3; ++i) {
                pieces.push_back(perms3[rng.below(6)]);
                product *= parity(pieces.back());
            }
            if (product == 1) break;
        } while (true);
        const auto b = bottom_tuple(3, 2, pieces);
        REQUIRE(is_member(b, spec));
        const auto target1 =
            bottom_tuple(3, 2, {pieces[0], inverse(pieces[1]), inverse(pieces[2])});
        const auto target2 = bottom_tuple(3, 2, {pieces[0], pieces[1], inverse(pieces[2])});
        bool found = false;
        for (const auto& g : members) {
            const auto conj = compose(compose(g, b), inverse(g));
            if (conj == target1 || conj == target2) {
                found = true;
                break;
            }
        }
        if (found) ++found_count;
    }
    CHECK(found_count == 100);
}

TEST_CASE("signed-leaf groups: the sibling-flip layer is the unique minimal normal subgroup") {
    // Model tuples-of-signs acted on by tree automorphisms as permutations of
    // signed leaves (point 2*leaf + bit). The generator flips the signs of
    // one sibling leaf pair; its conjugates flip every sibling pair.
    auto lift = [](const Permutation& p) {
        std::vector<int> images(static_cast<std::size_t>(2 * p.degree()));
        for (int i = 0; i < p.degree(); ++i)
            for (int b = 0; b < 2; ++b)
                images[static_cast<std::size_t>(2 * i + b)] = 2 * p(i) + b;
        return Permutation(std::move(images));
    };
    auto flip_at = [](int leaves, const std::vector<int>& at) {
        std::vector<int> images(static_cast<std::size_t>(2 * leaves));
        for (int i = 0; i < leaves; ++i)
            for (int b = 0; b < 2; ++b) images[static_cast<std::size_t>(2 * i + b)] = 2 * i + b;
        for (int i : at) std::swap(images[static_cast<std::size_t>(2 * i)],
                                   images[static_cast<std::size_t>(2 * i + 1)]);
        return Permutation(std::move(images));
    };

    SUBCASE("one level") {
        // signs C2^3 (even layer) against the full S3: isomorphic to S4.
        std::vector<Permutation> gens;
        for (const auto& p : all_permutations(3))
            gens.push_back(lift(p));
        gens.push_back(flip_at(3, {0, 1}));
        const auto h = GroupTable::generated_by(gens, 100);
        CHECK(h.size() == 24);
        const auto mins = minimal_normal_subgroups(h);
        REQUIRE(mins.size() == 1);
        const auto v = normal_closure(h, h.index_of(flip_at(3, {0, 1})));
        CHECK(v.size() == 4);  // even-weight sign vectors
        CHECK(mins.front() == v);
    }

    SUBCASE("two levels") {
        // Aut(T_2(3)) on 9 leaves: root S3 plus one branch S3 generate the
        // wreath product; the flip pairs leaf 0 with its sibling leaf 3.
        std::vector<Permutation> gens;
        for (const auto& root : {Permutation({1, 0, 2}), Permutation({1, 2, 0})}) {
            gens.push_back(lift(leaf_permutation(TreeAutomorphism(
                root, std::vector<TreeAutomorphism>(3, TreeAutomorphism::identity({3, 1}))))));
            gens.push_back(lift(leaf_permutation(TreeAutomorphism(
                Permutation::identity(3),
                {depth1(root), TreeAutomorphism::identity({3, 1}),
                 TreeAutomorphism::identity({3, 1})}))));
        }
        const Permutation flip = flip_at(9, {0, 3});
        gens.push_back(flip);
        const auto h = GroupTable::generated_by(gens, 200'000);
        CHECK(h.size() == 82944);  // 2^6 sign vectors x 1296 tree maps

        const int flip_idx = h.index_of(flip);
        const auto v = normal_closure(h, flip_idx);
        // Blockwise-even sign vectors over the sibling blocks {0,3,6},
        // {1,4,7}, {2,5,8}: strictly smaller than the full even layer.
        CHECK(v.size() == 64);
        for (int x : v) {
            const auto& p = h.element(x);
            std::array<int, 3> weight{0, 0, 0};
            for (int leaf = 0; leaf < 9; ++leaf) {
                CHECK(p(2 * leaf) / 2 == leaf);  // no leaf movement
                if (p(2 * leaf) % 2 == 1) ++weight[static_cast<std::size_t>(leaf % 3)];
            }
            for (int w : weight) CHECK(w % 2 == 0);
        }
        // Every nontrivial normal subgroup contains the flip layer.
        for (int rep : conjugacy_class_reps(h)) {
            if (rep == h.identity()) continue;
            REQUIRE(normal_closure_contains(h, rep, flip_idx));
        }
    }
}

TEST_CASE("two-element generation of the 648-element tower group") {
    const auto table = materialize(GroupSpec::parse("E:d=3,m=2"), 2, 1000);
    const auto pair = find_generating_set(table, 2, 1000, 0x51u);
    REQUIRE(pair.has_value());
    CHECK(subgroup_closure(table, *pair).size() == 648);
    CHECK_FALSE(find_generating_set(table, 1, 50, 0x52u).has_value());
}
