#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arbor/polynomial.hpp"

namespace arbor {

bool is_prime(long long n);

/// p-adic valuation of a rational; nullopt encodes v_p(0) = +infinity.
std::optional<long long> valuation(const Rational& x, long long p);

struct PolygonSegment {
    Rational slope;
    long long length = 0;

    friend bool operator==(const PolygonSegment&, const PolygonSegment&) = default;
};

/// Lower convex hull of {(i, v_p(coeff_i))} over the finite points, as
/// strictly increasing slope/length pairs. A monomial has no segments.
std::vector<PolygonSegment> newton_polygon(const RationalPoly& g, long long p);

/// Whether g(z+s), cleared to a primitive integer polynomial, is Eisenstein
/// at p: p does not divide the lead, divides every other coefficient, and
/// p^2 does not divide the constant term.
bool eisenstein_after_shift(const RationalPoly& g, long long p, const Rational& shift);

struct EisensteinCertificate {
    long long prime = 0;
    Rational shift;
    int level = 0;  // the iterate n it certifies

    friend bool operator==(const EisensteinCertificate&, const EisensteinCertificate&) = default;
};

/// First (prime, shift) in the fixed order (3,0),(3,1),(2,0),(2,1) making
/// f^n - alpha Eisenstein after the shift; nullopt when none applies. No
/// factorization fallback.
std::optional<EisensteinCertificate> irreducibility_certificate(
    const RationalPoly& f, const Rational& alpha, int n,
    int degree_budget = kDefaultDegreeBudget);

struct ConditionWitness {
    bool satisfied = false;
    std::string at_three;  // which disjunct fired at 3, empty when none
    std::string at_two;    // which disjunct fired at 2, empty when none
};

/// The base-point condition over the rationals with the concrete primes 2
/// and 3: (v3(a)=1 or v3(1-a)=1) and (v2(a)=1 or v2(1-a)=1). Errors for
/// a in {0, 1}.
ConditionWitness condition_check(const Rational& alpha);

}  // namespace arbor
