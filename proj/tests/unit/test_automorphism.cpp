#include <doctest.h>

#include <map>
#include <set>

#include "arbor/automorphism.hpp"
#include "arbor/errors.hpp"
#include "arbor/numeric.hpp"

using namespace arbor;

namespace {

TreeAutomorphism depth1(const Permutation& root) {
    return TreeAutomorphism(
        root, std::vector<TreeAutomorphism>(static_cast<std::size_t>(root.degree()),
                                            TreeAutomorphism::identity({root.degree(), 0})));
}

}  // namespace

TEST_CASE("composition laws") {
    Rng rng(101);
    const auto id = TreeAutomorphism::identity({3, 3});
    for (int t = 0; t < 100; ++t) {
        const auto x = random_automorphism({3, 3}, rng);
        CHECK(compose(x, id) == x);
        CHECK(compose(id, x) == x);
    }
    const auto swap = depth1(Permutation({1, 0}));
    CHECK(compose(swap, swap).is_identity());
}

TEST_CASE("compose agrees with the leaf-permutation oracle") {
    // Root 3-cycle against a lower twist; expanding both sides pins the
    // composition order (right operand acts first).
    const auto a = TreeAutomorphism(
        Permutation({1, 2, 0}),
        {TreeAutomorphism::identity({3, 1}), TreeAutomorphism::identity({3, 1}),
         TreeAutomorphism::identity({3, 1})});
    const auto b = TreeAutomorphism(
        Permutation::identity(3),
        {depth1(Permutation({1, 0, 2})), TreeAutomorphism::identity({3, 1}),
         TreeAutomorphism::identity({3, 1})});
    const auto c = compose(a, b);
    CHECK(leaf_permutation(c) == compose(leaf_permutation(a), leaf_permutation(b)));
    for (long long i = 0; i < 9; ++i)
        CHECK(act_on_leaf(c, i) == act_on_leaf(a, act_on_leaf(b, i)));
}

TEST_CASE("inverse") {
    CHECK(inverse(TreeAutomorphism::identity({3, 2})).is_identity());
    const auto swap = depth1(Permutation({1, 0}));
    CHECK(inverse(swap) == swap);
    Rng rng(103);
    for (int t = 0; t < 100; ++t) {
        const auto a = random_automorphism({3, 4}, rng);
        CHECK(compose(inverse(a), a).is_identity());
        CHECK(compose(a, inverse(a)).is_identity());
    }
}

TEST_CASE("act_on_leaf pins") {
    const auto id = TreeAutomorphism::identity({3, 2});
    for (long long i = 0; i < 9; ++i) CHECK(act_on_leaf(id, i) == i);

    CHECK(act_on_leaf(depth1(Permutation({1, 2, 0})), 0) == 1);

    // Root permutation moves the branch taken at the root, i.e. the least
    // significant digit: leaf 3x+0 goes to 3x+1 under a root (0 1).
    const auto a = TreeAutomorphism(
        Permutation({1, 0, 2}),
        std::vector<TreeAutomorphism>(3, TreeAutomorphism::identity({3, 1})));
    for (long long x = 0; x < 3; ++x) CHECK(act_on_leaf(a, 3 * x) == 3 * x + 1);
    CHECK_THROWS_AS(act_on_leaf(a, 9), DomainError);
}

TEST_CASE("leaf permutation is a homomorphism and injective") {
    Rng rng(107);
    for (int t = 0; t < 100; ++t) {
        const auto a = random_automorphism({3, 3}, rng);
        const auto b = random_automorphism({3, 3}, rng);
        CHECK(leaf_permutation(compose(a, b)) ==
              compose(leaf_permutation(a), leaf_permutation(b)));
    }
    // Root swap on T_2(2) exchanges the two mod-2 leaf blocks.
    const auto swap2 = TreeAutomorphism(
        Permutation({1, 0}),
        std::vector<TreeAutomorphism>(2, TreeAutomorphism::identity({2, 1})));
    CHECK(leaf_permutation(swap2).images() == std::vector<int>{1, 0, 3, 2});

    std::set<std::string> keys;
    for (const auto& a : enumerate_all({3, 2}, 2000)) keys.insert(leaf_permutation(a).key());
    CHECK(keys.size() == 1296);
}

TEST_CASE("from_leaf_permutation") {
    const TreeShape shape{2, 2};
    CHECK(from_leaf_permutation(Permutation::identity(4), shape).is_identity());

    // (0 1) mixes the mod-2 blocks {0,2} and {1,3}, so it respects no tree;
    // (0 2) swaps inside one block and lifts to a single lower swap.
    CHECK_THROWS_AS(from_leaf_permutation(Permutation({1, 0, 2, 3}), shape), DomainError);
    const auto lifted = from_leaf_permutation(Permutation({2, 1, 0, 3}), shape);
    CHECK(lifted.root().is_identity());
    CHECK(lifted.child(0).root() == Permutation({1, 0}));
    CHECK(lifted.child(1).is_identity());

    // The 4-cycle (0 1 2 3) permutes the blocks as sets and lifts.
    const auto cyc = from_leaf_permutation(Permutation({1, 2, 3, 0}), shape);
    CHECK(leaf_permutation(cyc) == Permutation({1, 2, 3, 0}));
    CHECK(cyc.root() == Permutation({1, 0}));

    Rng rng(109);
    for (int t = 0; t < 100; ++t) {
        const auto a = random_automorphism({3, 3}, rng);
        CHECK(from_leaf_permutation(leaf_permutation(a), {3, 3}) == a);
    }
    CHECK_THROWS_AS(from_leaf_permutation(Permutation::identity(5), shape), DomainError);
}

TEST_CASE("truncate") {
    Rng rng(113);
    for (int t = 0; t < 100; ++t) {
        const auto a = random_automorphism({3, 4}, rng);
        const auto b = random_automorphism({3, 4}, rng);
        CHECK(truncate(a, 0).depth() == 0);
        CHECK(truncate(a, 4) == a);
        CHECK(truncate(compose(a, b), 2) == compose(truncate(a, 2), truncate(b, 2)));
        CHECK(truncate(a, 1).root() == a.root());
    }
    CHECK_THROWS_AS(truncate(TreeAutomorphism::identity({3, 2}), 3), DomainError);
}

TEST_CASE("split and join at a level") {
    Rng rng(127);
    for (int t = 0; t < 100; ++t) {
        const auto a = random_automorphism({3, 4}, rng);
        for (int m = 0; m <= 4; ++m) {
            const auto parts = split_at_level(a, m);
            CHECK(parts.top == truncate(a, m));
            CHECK(static_cast<long long>(parts.hanging.size()) == checked_pow_ll(3, m));
            CHECK(join_at_level(parts.top, parts.hanging) == a);
        }
    }
    const auto a = random_automorphism({3, 3}, 1);
    const auto full = split_at_level(a, 3);
    for (const auto& h : full.hanging) CHECK(h.depth() == 0);
    const auto none = split_at_level(a, 0);
    CHECK(none.top.depth() == 0);
    CHECK(none.hanging.size() == 1);
    CHECK(none.hanging.front() == a);
}

TEST_CASE("random_automorphism distribution") {
    CHECK(random_automorphism({5, 0}, 42).is_identity());

    std::map<std::string, int> counts;
    Rng rng(131);
    for (int t = 0; t < 6000; ++t)
        ++counts[random_automorphism({3, 1}, rng).root().key()];
    CHECK(counts.size() == 6);
    for (const auto& [key, count] : counts) {
        CHECK(count > 880);
        CHECK(count < 1120);
    }

    std::map<std::string, int> counts2;
    Rng rng2(137);
    for (int t = 0; t < 8000; ++t)
        ++counts2[leaf_permutation(random_automorphism({2, 2}, rng2)).key()];
    CHECK(counts2.size() == 8);
    for (const auto& [key, count] : counts2) {
        CHECK(count > 880);
        CHECK(count < 1120);
    }
}

TEST_CASE("group orders by exhaustive enumeration") {
    CHECK(enumerate_all({2, 2}, 100).size() == 8);
    CHECK(enumerate_all({2, 3}, 1000).size() == 128);
    CHECK(enumerate_all({3, 1}, 100).size() == 6);
    CHECK(enumerate_all({3, 2}, 2000).size() == 1296);
    CHECK_THROWS_AS(enumerate_all({3, 3}, 1000), DomainError);
}

TEST_CASE("group axioms, exhaustively at (2,2)") {
    const auto all = enumerate_all({2, 2}, 100);
    for (const auto& a : all) {
        CHECK(compose(a, inverse(a)).is_identity());
        for (const auto& b : all)
            for (const auto& c : all)
                REQUIRE(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
}

TEST_CASE("group axioms, by sampling at (3,4)") {
    Rng rng(149);
    for (int t = 0; t < 200; ++t) {
        const auto a = random_automorphism({3, 4}, rng);
        const auto b = random_automorphism({3, 4}, rng);
        const auto c = random_automorphism({3, 4}, rng);
        REQUIRE(compose(compose(a, b), c) == compose(a, compose(b, c)));
        REQUIRE(compose(a, inverse(a)).is_identity());
    }
}

TEST_CASE("serialization round trip") {
    Rng rng(139);
    for (int t = 0; t < 50; ++t) {
        const auto a = random_automorphism({3, 3}, rng);
        CHECK(automorphism_from_json(to_json(a)) == a);
    }
    const std::string canonical =
        R"({"perm":[1,0],"children":[{"perm":[],"children":[]},{"perm":[],"children":[]}]})";
    CHECK(to_json(automorphism_from_json(canonical)) == canonical);
    CHECK_THROWS_AS(automorphism_from_json("{"), DomainError);
    CHECK_THROWS_AS(automorphism_from_json(R"({"perm":[0,1]})"), DomainError);
    CHECK_THROWS_AS(automorphism_from_json(R"({"perm":[0,0],"children":[{},{}]})"), DomainError);
}

TEST_CASE("shape mismatches error") {
    const auto a = random_automorphism({3, 2}, 5);
    const auto b = random_automorphism({2, 2}, 5);
    CHECK_THROWS_AS(compose(a, b), DomainError);
    const auto c = random_automorphism({3, 3}, 5);
    CHECK_THROWS_AS(compose(a, c), DomainError);
}
