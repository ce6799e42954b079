#include <doctest.h>

#include "arbor/errors.hpp"
#include "arbor/padic.hpp"
#include "arbor/rng.hpp"

using namespace arbor;

namespace {

const RationalPoly kCubic = RationalPoly::parse("1,0,-3,2");

}  // namespace

TEST_CASE("valuation") {
    CHECK(valuation(Rational(3), 3) == 1);
    CHECK(valuation(Rational(-2), 2) == 1);
    CHECK(valuation(Rational(12, 5), 2) == 2);
    CHECK(valuation(Rational(1, 2), 2) == -1);
    CHECK_FALSE(valuation(Rational(0), 5).has_value());
    CHECK_THROWS_AS(valuation(Rational(1), 6), DomainError);
}

TEST_CASE("newton polygon pins") {
    const auto segments = newton_polygon(kCubic - RationalPoly::constant(Rational(3)), 2);
    REQUIRE(segments.size() == 2);
    CHECK(segments[0] == PolygonSegment{Rational(-1, 2), 2});
    CHECK(segments[1] == PolygonSegment{Rational(1), 1});

    // Classical Eisenstein shape: one segment of slope -1/deg.
    CHECK(newton_polygon(RationalPoly::parse("-2,0,1"), 2) ==
          std::vector<PolygonSegment>{{Rational(-1, 2), 2}});

    // A monomial has a single finite point and hence no segments.
    CHECK(newton_polygon(RationalPoly::parse("0,0,0,0,1"), 5).empty());
    CHECK_THROWS_AS(newton_polygon(RationalPoly(), 2), DomainError);
    CHECK_THROWS_AS(newton_polygon(kCubic, 4), DomainError);
}

TEST_CASE("newton polygon shape properties") {
    Rng rng(521);
    for (long long p : {2ll, 3ll, 5ll}) {
        for (int t = 0; t < 334; ++t) {
            std::vector<Rational> coeffs;
            const int degree = 1 + static_cast<int>(rng.below(6));
            for (int i = 0; i <= degree; ++i)
                coeffs.emplace_back(static_cast<long long>(rng.below(200)) - 100);
            if (coeffs.front() == 0) coeffs.front() = 1;
            if (coeffs.back() == 0) coeffs.back() = 1;
            const RationalPoly g{coeffs};
            const auto segments = newton_polygon(g, p);
            long long total = 0;
            for (std::size_t i = 0; i < segments.size(); ++i) {
                total += segments[i].length;
                REQUIRE(segments[i].length > 0);
                if (i) REQUIRE(segments[i - 1].slope < segments[i].slope);
            }
            REQUIRE(total == g.degree());
        }
    }
}

TEST_CASE("eisenstein after shift") {
    CHECK(eisenstein_after_shift(kCubic - RationalPoly::constant(Rational(3)), 3, Rational(1)));
    CHECK(eisenstein_after_shift(RationalPoly::parse("-2,0,1"), 2, Rational(0)));
    CHECK_FALSE(eisenstein_after_shift(RationalPoly::parse("-1,0,1"), 2, Rational(0)));
    CHECK_THROWS_AS(eisenstein_after_shift(kCubic, 9, Rational(0)), DomainError);

    // The shifted cubic is exactly 2z^3 + 3z^2 - 3.
    const auto shifted = (kCubic - RationalPoly::constant(Rational(3))).shifted(Rational(1));
    CHECK(shifted == RationalPoly::parse("-3,0,3,2"));
}

TEST_CASE("eisenstein implies the one-segment polygon") {
    const std::vector<std::pair<RationalPoly, std::pair<long long, Rational>>> cases = {
        {kCubic - RationalPoly::constant(Rational(3)), {3, Rational(1)}},
        {RationalPoly::parse("-2,0,1"), {2, Rational(0)}},
        {iterate(kCubic, 2) - RationalPoly::constant(Rational(3)), {3, Rational(0)}},
    };
    for (const auto& [g, cert] : cases) {
        REQUIRE(eisenstein_after_shift(g, cert.first, cert.second));
        const auto segments = newton_polygon(g.shifted(cert.second), cert.first);
        REQUIRE(segments.size() == 1);
        CHECK(segments.front().slope == Rational(-1, g.degree()));
        CHECK(segments.front().length == g.degree());
    }
}

TEST_CASE("irreducibility certificates for the cubic family") {
    const auto first = irreducibility_certificate(kCubic, Rational(3), 1);
    REQUIRE(first.has_value());
    CHECK(first->prime == 3);
    CHECK(first->shift == 1);
    CHECK(first->level == 1);

    const auto second = irreducibility_certificate(kCubic, Rational(3), 2);
    REQUIRE(second.has_value());
    CHECK(second->prime == 3);

    const auto third = irreducibility_certificate(kCubic, Rational(3), 3);
    REQUIRE(third.has_value());
    CHECK(eisenstein_after_shift(iterate(kCubic, 3) - RationalPoly::constant(Rational(3)),
                                 third->prime, third->shift));

    // A base point failing the valuation condition: no certificate applies.
    CHECK_FALSE(irreducibility_certificate(kCubic, Rational(-1), 1).has_value());
}

TEST_CASE("base point condition") {
    const auto good = condition_check(Rational(3));
    CHECK(good.satisfied);
    CHECK(good.at_three == "v3(alpha)=1");
    CHECK(good.at_two == "v2(1-alpha)=1");

    CHECK_FALSE(condition_check(Rational(1, 2)).satisfied);
    CHECK_FALSE(condition_check(Rational(-1)).satisfied);
    CHECK_THROWS_AS(condition_check(Rational(0)), DomainError);
    CHECK_THROWS_AS(condition_check(Rational(1)), DomainError);
}

TEST_CASE("ramification slope at 2 for conditioned base points") {
    // v2(1 - alpha) = 1 forces a slope with denominator 2 at the bottom of
    // the polygon of f - alpha.
    for (long long alpha : {3ll, -5ll, 11ll}) {
        REQUIRE(valuation(Rational(1 - alpha), 2) == 1);
        const auto segments =
            newton_polygon(kCubic - RationalPoly::constant(Rational(alpha)), 2);
        bool has_half = false;
        for (const auto& s : segments)
            if (denominator(s.slope) == 2) has_half = true;
        CHECK(has_half);
    }
}
