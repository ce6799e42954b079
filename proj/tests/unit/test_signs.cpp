#include <doctest.h>

#include "arbor/errors.hpp"
#include "arbor/overgroups.hpp"
#include "arbor/signs.hpp"

using namespace arbor;

namespace {

TreeAutomorphism depth1(const Permutation& root) {
    return TreeAutomorphism(
        root, std::vector<TreeAutomorphism>(static_cast<std::size_t>(root.degree()),
                                            TreeAutomorphism::identity({root.degree(), 0})));
}

}  // namespace

TEST_CASE("sign pins") {
    CHECK(sign(TreeAutomorphism::identity({3, 2})) == 1);
    CHECK(sign(depth1(Permutation({1, 0, 2}))) == -1);

    // Even degree: a root swap above one level acts as two disjoint leaf
    // transpositions, so its sign is +1.
    const auto swap2 = TreeAutomorphism(
        Permutation({1, 0}),
        std::vector<TreeAutomorphism>(2, TreeAutomorphism::identity({2, 1})));
    CHECK(parity(leaf_permutation(swap2)) == 1);
    CHECK(sign(swap2) == 1);
}

TEST_CASE("sign equals permutation parity") {
    for (const auto& a : enumerate_all({3, 2}, 2000))
        REQUIRE(sign(a) == parity(leaf_permutation(a)));
    Rng rng(211);
    for (int t = 0; t < 1000; ++t) {
        const auto a = random_automorphism({3, 5}, rng);
        REQUIRE(sign(a) == parity(leaf_permutation(a)));
    }
    for (int t = 0; t < 1000; ++t) {
        const auto b = random_automorphism({2, 6}, rng);
        REQUIRE(sign(b) == parity(leaf_permutation(b)));
    }
}

TEST_CASE("sign_at pins") {
    Rng rng(223);
    for (int t = 0; t < 50; ++t) {
        const auto a = random_automorphism({3, 3}, rng);
        CHECK(sign_at(a, 0) == 1);
        CHECK(sign_at(a, 3) == sign(a));
    }
    // Truncation to level 1 sees only the root: odd children contributions
    // are discarded.
    const auto a = TreeAutomorphism(
        Permutation({1, 0, 2}),
        {depth1(Permutation({1, 0, 2})), TreeAutomorphism::identity({3, 1}),
         TreeAutomorphism::identity({3, 1})});
    CHECK(sign_at(a, 1) == -1);
    CHECK_THROWS_AS(sign_at(a, 3), DomainError);
}

TEST_CASE("sign_below pins") {
    const auto trivial = TreeAutomorphism::identity({3, 2});
    CHECK(sign_below(trivial, 1) == 1);
    CHECK(sign_below(trivial, 2) == 1);  // boundary: empty product over depth-0 parts

    const auto one_odd = TreeAutomorphism(
        Permutation::identity(3),
        {depth1(Permutation({1, 0, 2})), TreeAutomorphism::identity({3, 1}),
         TreeAutomorphism::identity({3, 1})});
    CHECK(sign_below(one_odd, 1) == -1);

    // Restatement of the one-pass rule: hanging signs times the truncated
    // sign's top contribution recovers the full sign.
    Rng rng(227);
    for (int t = 0; t < 500; ++t) {
        const auto a = random_automorphism({3, 3}, rng);
        CHECK(sign_below(a, 1) * sign_at(a, 1) == sign(a));  // d^(n-1) odd for d=3
    }
}

TEST_CASE("combined signs: identity element and parameter validation") {
    const auto id = TreeAutomorphism::identity({3, 4});
    CHECK(sign_e(id, 3, 1) == 1);
    CHECK(sign_f(id, 3, 1) == 1);
    CHECK_THROWS_AS(sign_e(id, 1, 1), DomainError);
    CHECK_THROWS_AS(sign_e(id, 5, 1), DomainError);
    CHECK_THROWS_AS(sign_f(id, 2, 0), DomainError);
}

TEST_CASE("combined signs satisfy the parity identities") {
    // Odd degree: sign_e is the truncated sign, sign_f the product form;
    // even degree swaps them; the product identity holds for both parities.
    for (int d : {2, 3}) {
        Rng rng(229 + static_cast<unsigned>(d));
        for (int t = 0; t < 1000; ++t) {
            const auto a = random_automorphism({d, 4}, rng);
            for (auto [m, mp] : {std::pair{2, 1}, {3, 1}, {3, 2}}) {
                const int se = sign_e(a, m, mp);
                const int sf = sign_f(a, m, mp);
                const int sm = sign_at(a, m);
                const int smp = sign_at(a, mp);
                REQUIRE(se * sf == smp);
                if (d % 2 == 1) {
                    REQUIRE(se == sm);
                    REQUIRE(sf == sm * smp);
                } else {
                    REQUIRE(se == sm * smp);
                    REQUIRE(sf == sm);
                }
            }
        }
    }
}

TEST_CASE("every sign map is a homomorphism") {
    for (int d : {2, 3}) {
        Rng rng(233 + static_cast<unsigned>(d));
        for (int t = 0; t < 2500; ++t) {
            const auto a = random_automorphism({d, 4}, rng);
            const auto b = random_automorphism({d, 4}, rng);
            const auto c = compose(a, b);
            REQUIRE(sign(c) == sign(a) * sign(b));
            REQUIRE(sign_at(c, 2) == sign_at(a, 2) * sign_at(b, 2));
            REQUIRE(sign_below(c, 2) == sign_below(a, 2) * sign_below(b, 2));
            REQUIRE(sign_e(c, 3, 2) == sign_e(a, 3, 2) * sign_e(b, 3, 2));
            REQUIRE(sign_f(c, 3, 2) == sign_f(a, 3, 2) * sign_f(b, 3, 2));
        }
    }
}
