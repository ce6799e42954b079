#include "arbor/dynamics.hpp"

#include <algorithm>

#include "arbor/errors.hpp"

namespace arbor {

namespace {

/// Divide out (z - root) assuming it divides exactly; callers test first.
RationalPoly deflate(const RationalPoly& p, const Rational& root) {
    std::vector<Rational> out(static_cast<std::size_t>(p.degree()), Rational(0));
    Rational carry = 0;
    for (int i = p.degree(); i >= 1; --i) {
        carry = p.coeff(i) + carry * root;
        out[static_cast<std::size_t>(i - 1)] = carry;
    }
    return RationalPoly(std::move(out));
}

}  // namespace

std::vector<Rational> critical_points(const RationalPoly& f) {
    if (f.degree() < 1) fail(errkind::invalid_argument, "needs degree >= 1");
    RationalPoly fp = f.derivative();
    std::vector<Rational> roots;

    // Roots at zero first.
    while (!fp.is_zero() && fp.coeff(0) == 0) {
        roots.emplace_back(0);
        fp = deflate(fp, Rational(0));
    }
    if (fp.degree() >= 1) {
        const auto ints = primitive_integer_coeffs(fp);
        const auto tail_divs = positive_divisors(ints.front());
        const auto lead_divs = positive_divisors(ints.back());
        std::vector<Rational> candidates;
        for (const auto& num : tail_divs) {
            for (const auto& den : lead_divs) {
                candidates.emplace_back(num, den);
                candidates.emplace_back(-num, den);
            }
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const auto& r : candidates) {
            while (fp.degree() >= 1 && fp(r) == 0) {
                roots.push_back(r);
                fp = deflate(fp, r);
            }
        }
    }
    if (fp.degree() >= 1)
        fail(errkind::irrational_critical,
             "the derivative has an irreducible factor of degree >= 2 over the rationals");
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::optional<CriticalOrbit> detect_pcf(const RationalPoly& f, int max_steps, long orbit_bits) {
    if (max_steps < 1) fail(errkind::invalid_argument, "max_steps must be >= 1");
    CriticalOrbit orbit;
    orbit.degree = f.degree();
    orbit.critical = critical_points(f);

    auto too_big = [&](const std::vector<Rational>& values) {
        for (const auto& v : values) {
            if (v == 0) continue;
            const auto nbits = boost::multiprecision::msb(
                boost::multiprecision::abs(numerator(v)));
            const auto dbits = boost::multiprecision::msb(denominator(v));
            if (static_cast<long>(nbits) > orbit_bits || static_cast<long>(dbits) > orbit_bits)
                return true;
        }
        return false;
    };

    std::vector<std::vector<Rational>> iterates{orbit.critical};
    for (int step = 1; step <= max_steps; ++step) {
        std::vector<Rational> next;
        next.reserve(iterates.back().size());
        for (const auto& v : iterates.back()) next.push_back(f(v));
        std::sort(next.begin(), next.end());
        if (too_big(next)) return std::nullopt;  // orbit growth past the budget: no repeat seen
        for (std::size_t k = 0; k < iterates.size(); ++k) {
            if (iterates[k] == next) {
                orbit.tail = static_cast<int>(k);
                orbit.period = static_cast<int>(iterates.size() - k);
                iterates.push_back(std::move(next));
                orbit.iterates = std::move(iterates);
                return orbit;
            }
        }
        iterates.push_back(std::move(next));
    }
    return std::nullopt;
}

int kronecker_like(int d) {
    if (d < 2) fail(errkind::invalid_argument, "degree must be >= 2");
    return (d % 2 == 0 || d % 4 == 1) ? 1 : -1;
}

int sign_exponent_parity(int d, int n) {
    // A(d,n) = d^n (d^n - 1)/2 + d^n (d^(n-1) - 1)/2, both terms integral.
    const Int dn = int_pow(Int(d), static_cast<unsigned long>(n));
    const Int dn1 = int_pow(Int(d), static_cast<unsigned long>(n - 1));
    const Int a = dn * (dn - 1) / 2 + dn * (dn1 - 1) / 2;
    return a % 2 == 0 ? 1 : -1;
}

DiscriminantReport discriminant(const RationalPoly& f, const Rational& alpha, int n,
                                int degree_budget) {
    if (n < 1) fail(errkind::invalid_argument, "discriminant level must be >= 1");
    const int d = f.degree();
    if (d < 2) fail(errkind::invalid_argument, "needs degree >= 2");
    if (checked_pow_ll(d, n) > degree_budget)
        fail(errkind::degree_overflow, "discriminant level exceeds the degree budget");

    const auto critical = critical_points(f);
    const Rational a_f = f.lead();
    const int unit = kronecker_like(d);

    // Orbit values f^k(c) for k = 1..n.
    std::vector<std::vector<Rational>> orbit_values;
    {
        std::vector<Rational> current = critical;
        for (int k = 1; k <= n; ++k) {
            for (auto& v : current) v = f(v);
            orbit_values.push_back(current);
        }
    }
    auto level_product = [&](int k) {
        Rational prod = 1;
        for (const auto& v : orbit_values[static_cast<std::size_t>(k - 1)]) prod *= (v - alpha);
        return prod;
    };

    Rational value = Rational(unit) *
                     rational_pow(a_f, static_cast<unsigned long>(d - 1)) *
                     int_pow(Int(d), static_cast<unsigned long>(d)) * level_product(1);
    for (int k = 2; k <= n; ++k) {
        const unsigned long af_exp =
            (int_pow(Int(d), static_cast<unsigned long>(2 * k - 1)) - 1)
                .convert_to<unsigned long>();
        const unsigned long d_exp =
            int_pow(Int(d), static_cast<unsigned long>(k)).convert_to<unsigned long>();
        Rational power = value;
        for (int e = 1; e < d; ++e) power *= value;
        value = Rational(unit) * rational_pow(a_f, af_exp) *
                int_pow(Int(d), d_exp) * power * level_product(k);
    }

    DiscriminantReport report;
    report.value = value;
    if (d % 2 == 1) {
        Rational pnf = 1;
        for (int k = 1; k <= n; ++k) pnf *= Rational(unit) * Rational(d) * level_product(k);
        report.potential_nonsquare = pnf;
    } else {
        report.potential_nonsquare = a_f * level_product(n);
    }
    if (value == 0) {
        report.square_part = 1;
        report.potential_nonsquare = 0;
        report.is_square = true;
        return report;
    }
    const auto root = exact_sqrt(value / report.potential_nonsquare);
    if (!root)
        fail(errkind::invalid_argument,
             "internal inconsistency: value over its potential non-square factor is not a square");
    report.square_part = *root;
    report.is_square = exact_sqrt(report.potential_nonsquare).has_value();
    return report;
}

std::pair<int, int> square_discriminant_level(const CriticalOrbit& orbit) {
    const int L = orbit.tail;
    const int O = orbit.period;
    if (orbit.degree % 2 == 1) {
        if (L <= 1) return {2 * O, 0};
        return {L + 2 * O - 1, L - 1};
    }
    if (L == 0) return {O + 1, 1};
    return {L + O, L};
}

Classification classify_overgroup(const CriticalOrbit& orbit) {
    const int d = orbit.degree;
    const int L = orbit.tail;
    const int O = orbit.period;
    Classification out;
    out.tail = L;
    out.period = O;
    if (d % 2 == 1) {
        if (L <= 1) {
            out.spec = GroupSpec{GroupSpec::Family::E, d, 2 * O, std::nullopt};
        } else {
            out.spec = GroupSpec{GroupSpec::Family::F, d, L + 2 * O - 1, L - 1};
            out.flags.push_back("statement_says_family_F_but_proof_argues_family_E");
            out.flags.push_back("statement_m=" + std::to_string(L + 2 * O - 1) +
                                "_but_proof_uses_m=" + std::to_string(L + 2 * O + 1));
        }
        return out;
    }
    if (L == 0) {
        out.spec = GroupSpec{GroupSpec::Family::E, d, O + 1, 1};
        return out;
    }
    if (L == 1)
        fail(errkind::uncovered_case,
             "even degree with tail length 1 is covered by neither classification case");
    out.spec = GroupSpec{GroupSpec::Family::E, d, L + O, L};
    return out;
}

}  // namespace arbor
