#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arbor/overgroups.hpp"
#include "arbor/polynomial.hpp"

namespace arbor {

/// Roots of f' with multiplicity, sorted; exactly deg(f)-1 values.
/// Errors IrrationalCritical when f' has an irreducible factor of degree >= 2
/// over the rationals.
std::vector<Rational> critical_points(const RationalPoly& f);

/// Forward orbit of the critical multiset: iterates[k] = sorted multiset
/// f^k(C), k = 0..tail+period, with iterates[tail+period] == iterates[tail]
/// and both indices minimal.
struct CriticalOrbit {
    int degree = 2;
    std::vector<Rational> critical;
    int tail = 0;    // minimal k with f^k(C) periodic
    int period = 1;  // minimal p with f^(tail+p)(C) == f^tail(C)
    std::vector<std::vector<Rational>> iterates;
};

/// nullopt when no multiset recurs within max_steps (or values outgrow the
/// bit budget, which is the same "no repeat seen" answer; divergent orbits
/// double their bit length every step, so the default bound is generous).
std::optional<CriticalOrbit> detect_pcf(const RationalPoly& f, int max_steps,
                                        long orbit_bits = 4096);

/// +1 when d is even or d = 1 mod 4, else -1; equals the discriminant
/// recursion's sign (-1)^A(d,n) for every recursion level n >= 2 (at n = 1
/// it differs for d = 2 mod 4, where the base formula applies instead).
int kronecker_like(int d);

/// Parity of A(d,n) = d^n((d^n-1)/2 + (d^(n-1)-1)/2) computed directly.
int sign_exponent_parity(int d, int n);

struct DiscriminantReport {
    Rational value;
    Rational square_part;           // value == square_part^2 * potential_nonsquare
    Rational potential_nonsquare;   // product of the odd-exponent factors
    bool is_square = false;         // potential_nonsquare is a rational square
};

/// disc(f^n - alpha) by the level recursion
///   disc(f^n-a) = s(d) * a_f^(d^(2n-1)-1) * d^(d^n) * disc(f^(n-1)-a)^d * prod_c (f^n(c)-a)
/// with base s(d) * a_f^(d-1) * d^d * prod_c (f(c)-a); cross-checked against
/// discriminant_resultant in the tests.
DiscriminantReport discriminant(const RationalPoly& f, const Rational& alpha, int n,
                                int degree_budget = kDefaultDegreeBudget);

/// (iterate index, splitting-field level) at which disc(f^index - alpha)
/// becomes a square, per the parity/tail case split.
std::pair<int, int> square_discriminant_level(const CriticalOrbit& orbit);

struct Classification {
    GroupSpec spec;
    int tail = 0;
    int period = 1;
    std::vector<std::string> flags;  // statement-vs-proof discrepancy notes
};

/// The tower containing the level-n splitting groups of f^n - alpha:
///   odd d, tail <= 1  ->  E, m = 2*period (single-sign form)
///   odd d, tail >  1  ->  F, (m, m') = (tail+2*period-1, tail-1), flagged
///   even d, tail == 0 ->  E, (m, m') = (period+1, 1)
///   even d, tail >  1 ->  E, (m, m') = (tail+period, tail)
/// Even d with tail == 1 is covered by neither case and errors UncoveredCase.
Classification classify_overgroup(const CriticalOrbit& orbit);

}  // namespace arbor
