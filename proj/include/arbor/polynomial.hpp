#pragma once

#include <string>
#include <vector>

#include "arbor/numeric.hpp"

namespace arbor {

/// Dense exact polynomial over the rationals, coefficients constant-first.
class RationalPoly {
public:
    RationalPoly() = default;  // zero polynomial
    explicit RationalPoly(std::vector<Rational> coeffs);

    static RationalPoly constant(const Rational& c);
    static RationalPoly variable();  // z
    /// Comma-separated "num/den" coefficients, constant term first:
    /// "1, 0, -3, 2" is 2z^3 - 3z^2 + 1.
    static RationalPoly parse(const std::string& text);
    std::string str() const;

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(int i) const;  // 0 outside the stored range
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational lead() const;

    Rational operator()(const Rational& x) const;

    RationalPoly derivative() const;
    RationalPoly compose(const RationalPoly& inner) const;  // this(inner(z))
    RationalPoly shifted(const Rational& s) const;          // this(z + s)

    friend RationalPoly operator+(const RationalPoly&, const RationalPoly&);
    friend RationalPoly operator-(const RationalPoly&, const RationalPoly&);
    friend RationalPoly operator*(const RationalPoly&, const RationalPoly&);
    friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

private:
    std::vector<Rational> coeffs_;  // no trailing zeros
};

inline constexpr int kDefaultDegreeBudget = 243;  // 3^5
inline constexpr long kDefaultCoeffBits = 1 << 20;

/// n-fold composition f∘...∘f; iterate(f, 0) is z. Refuses growth past the
/// degree budget (DegreeOverflow) or the coefficient bit budget.
RationalPoly iterate(const RationalPoly& f, int n, int degree_budget = kDefaultDegreeBudget,
                     long coeff_bits = kDefaultCoeffBits);

/// Resultant with the convention Res(p, q) = lead(q)^deg(p) * prod p(y) over
/// the roots y of q, so Res(z-1, z-2) = 1 and Res(p, c) = c^deg(p).
Rational resultant(const RationalPoly& p, const RationalPoly& q);

/// Independent discriminant route:
/// disc(g) = (-1)^(D(D-1)/2) * Res(g, g') / lead(g).
Rational discriminant_resultant(const RationalPoly& g);

/// Coefficients after clearing denominators and dividing by the content;
/// the sign of the input is kept.
std::vector<Int> primitive_integer_coeffs(const RationalPoly& g);

}  // namespace arbor
