#include "arbor/numeric.hpp"

#include <algorithm>
#include <cctype>

#include "arbor/errors.hpp"

namespace arbor {

Int int_pow(const Int& base, unsigned long exp) {
    return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

Rational rational_pow(const Rational& base, unsigned long exp) {
    return Rational(int_pow(numerator(base), exp), int_pow(denominator(base), exp));
}

Int factorial(int n) {
    Int r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

long long checked_pow_ll(int base, int exp) {
    long long r = 1;
    for (int k = 0; k < exp; ++k) {
        if (r > (std::numeric_limits<long long>::max() / base))
            fail(errkind::too_large, "power overflows 64 bits");
        r *= base;
    }
    return r;
}

namespace {

std::string strip(const std::string& s) {
    auto b = s.begin();
    auto e = s.end();
    while (b != e && std::isspace(static_cast<unsigned char>(*b))) ++b;
    while (e != b && std::isspace(static_cast<unsigned char>(*(e - 1)))) --e;
    return std::string(b, e);
}

Int parse_int(const std::string& text) {
    std::string t = strip(text);
    if (t.empty()) fail(errkind::parse_error, "empty integer");
    std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (start == t.size()) fail(errkind::parse_error, "sign without digits: " + text);
    for (std::size_t i = start; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i])))
            fail(errkind::parse_error, "bad integer: " + text);
    return Int(t);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text));
    const Int num = parse_int(text.substr(0, slash));
    const Int den = parse_int(text.substr(slash + 1));
    if (den == 0) fail(errkind::parse_error, "zero denominator: " + text);
    return Rational(num, den);
}

std::string format_rational(const Rational& x) {
    const Int den = denominator(x);
    if (den == 1) return numerator(x).str();
    return numerator(x).str() + "/" + den.str();
}

bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    const Int r = boost::multiprecision::sqrt(n);
    return r * r == n;
}

std::optional<Rational> exact_sqrt(const Rational& x) {
    if (x < 0) return std::nullopt;
    const Int num = numerator(x);
    const Int den = denominator(x);
    if (!is_perfect_square(num) || !is_perfect_square(den)) return std::nullopt;
    return Rational(boost::multiprecision::sqrt(num), boost::multiprecision::sqrt(den));
}

Factorization trial_factor(Int n, unsigned long bound) {
    Factorization f;
    if (n == 0) {
        f.sign = 0;
        return f;
    }
    if (n < 0) {
        f.sign = -1;
        n = -n;
    }
    for (Int p = 2; p <= bound && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            ++f.exponents[p];
            n /= p;
        }
    }
    if (n > 1) {
        // A cofactor below bound^2 with no divisor <= bound is prime.
        if (n <= Int(bound) * Int(bound)) {
            ++f.exponents[n];
        } else {
            f.cofactor = n;
            f.complete = false;
        }
    }
    return f;
}

std::vector<Int> positive_divisors(const Int& n, std::size_t limit) {
    if (n == 0) fail(errkind::invalid_argument, "divisors of zero");
    const Factorization f = trial_factor(n < 0 ? Int(-n) : n);
    if (!f.complete)
        fail(errkind::too_large, "factorization exceeds the trial-division budget");
    std::vector<Int> divs{1};
    for (const auto& [p, e] : f.exponents) {
        const std::size_t before = divs.size();
        Int pk = 1;
        for (long k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < before; ++i) {
                divs.push_back(divs[i] * pk);
                if (divs.size() > limit)
                    fail(errkind::too_large, "divisor count exceeds the budget");
            }
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace arbor
