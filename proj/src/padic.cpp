#include "arbor/padic.hpp"

#include <algorithm>

#include "arbor/errors.hpp"

namespace arbor {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

namespace {

void check_prime(long long p) {
    if (!is_prime(p)) fail(errkind::not_prime, std::to_string(p) + " is not prime");
}

long long int_valuation(Int n, long long p) {
    long long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

}  // namespace

std::optional<long long> valuation(const Rational& x, long long p) {
    check_prime(p);
    if (x == 0) return std::nullopt;
    return int_valuation(numerator(x) < 0 ? Int(-numerator(x)) : numerator(x), p) -
           int_valuation(denominator(x), p);
}

std::vector<PolygonSegment> newton_polygon(const RationalPoly& g, long long p) {
    check_prime(p);
    if (g.is_zero()) fail(errkind::invalid_argument, "newton polygon needs a nonzero polynomial");

    struct Point {
        long long x;
        long long y;
    };
    std::vector<Point> points;
    for (int i = 0; i <= g.degree(); ++i) {
        const auto v = valuation(g.coeff(i), p);
        if (v) points.push_back({i, *v});
    }
    // Lower convex hull, left to right.
    std::vector<Point> hull;
    for (const auto& pt : points) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // Drop b when it lies on or above segment a->pt.
            if ((b.y - a.y) * (pt.x - a.x) >= (pt.y - a.y) * (b.x - a.x))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    std::vector<PolygonSegment> segments;
    for (std::size_t i = 1; i < hull.size(); ++i) {
        segments.push_back({Rational(hull[i].y - hull[i - 1].y, hull[i].x - hull[i - 1].x),
                            hull[i].x - hull[i - 1].x});
    }
    return segments;
}

bool eisenstein_after_shift(const RationalPoly& g, long long p, const Rational& shift) {
    check_prime(p);
    if (g.degree() < 1) fail(errkind::invalid_argument, "needs degree >= 1");
    const auto coeffs = primitive_integer_coeffs(g.shifted(shift));
    const Int lead = coeffs.back();
    if (lead % p == 0) return false;
    for (std::size_t i = 0; i + 1 < coeffs.size(); ++i)
        if (coeffs[i] % p != 0) return false;
    return coeffs.front() % (Int(p) * p) != 0;
}

std::optional<EisensteinCertificate> irreducibility_certificate(const RationalPoly& f,
                                                                const Rational& alpha, int n,
                                                                int degree_budget) {
    if (n < 1) fail(errkind::invalid_argument, "certificate level must be >= 1");
    const RationalPoly g = iterate(f, n, degree_budget) - RationalPoly::constant(alpha);
    for (long long p : {3ll, 2ll}) {
        for (int s : {0, 1}) {
            if (eisenstein_after_shift(g, p, Rational(s)))
                return EisensteinCertificate{p, Rational(s), n};
        }
    }
    return std::nullopt;
}

ConditionWitness condition_check(const Rational& alpha) {
    if (alpha == 0 || alpha == 1)
        fail(errkind::invalid_argument, "the base point must avoid 0 and 1");
    ConditionWitness w;
    const Rational one_minus = Rational(1) - alpha;
    if (valuation(alpha, 3) == 1)
        w.at_three = "v3(alpha)=1";
    else if (valuation(one_minus, 3) == 1)
        w.at_three = "v3(1-alpha)=1";
    if (valuation(alpha, 2) == 1)
        w.at_two = "v2(alpha)=1";
    else if (valuation(one_minus, 2) == 1)
        w.at_two = "v2(1-alpha)=1";
    w.satisfied = !w.at_three.empty() && !w.at_two.empty();
    return w;
}

}  // namespace arbor
