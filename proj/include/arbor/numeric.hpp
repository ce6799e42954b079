#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace arbor {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Int denominator(const Rational& x) { return boost::multiprecision::denominator(x); }

Int int_pow(const Int& base, unsigned long exp);
Rational rational_pow(const Rational& base, unsigned long exp);
Int factorial(int n);

/// d^n as a checked 64-bit value (leaf counts, enumeration bounds).
long long checked_pow_ll(int base, int exp);

Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& x);

bool is_perfect_square(const Int& n);

/// Exact square root of a nonnegative rational, or nullopt when it is not a
/// perfect square.
std::optional<Rational> exact_sqrt(const Rational& x);

/// Trial-division factorization. `complete` is false when a cofactor above
/// the bound squared survives; `cofactor` then holds the unfactored part.
struct Factorization {
    int sign = 1;                     // -1, 0, +1
    std::map<Int, long> exponents;    // prime -> exponent (cofactor excluded)
    Int cofactor = 1;                 // 1 when complete
    bool complete = true;
};

Factorization trial_factor(Int n, unsigned long bound = 1'000'000);

/// All positive divisors of |n| from a complete factorization; errors with
/// TooLarge when the divisor count or the factorization budget is exceeded.
std::vector<Int> positive_divisors(const Int& n, std::size_t limit = 100'000);

}  // namespace arbor
