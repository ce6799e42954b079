#include "arbor/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "arbor/errors.hpp"

namespace arbor {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly({c}); }

RationalPoly RationalPoly::variable() { return RationalPoly({Rational(0), Rational(1)}); }

RationalPoly RationalPoly::parse(const std::string& text) {
    std::vector<Rational> coeffs;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) coeffs.push_back(parse_rational(token));
    if (coeffs.empty()) fail(errkind::parse_error, "polynomial needs coefficients");
    return RationalPoly(std::move(coeffs));
}

std::string RationalPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ",";
        out += format_rational(coeffs_[i]);
    }
    return out;
}

Rational RationalPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational RationalPoly::lead() const {
    if (is_zero()) fail(errkind::invalid_argument, "zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Rational RationalPoly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RationalPoly RationalPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out[i - 1] = coeffs_[i] * Rational(static_cast<long long>(i));
    return RationalPoly(std::move(out));
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return RationalPoly(std::move(out));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return RationalPoly(std::move(out));
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::compose(const RationalPoly& inner) const {
    RationalPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * inner + RationalPoly::constant(*it);
    return acc;
}

RationalPoly RationalPoly::shifted(const Rational& s) const {
    return compose(RationalPoly({s, Rational(1)}));
}

namespace {

long max_coeff_bits(const RationalPoly& p) {
    long bits = 0;
    for (const auto& c : p.coeffs()) {
        if (c == 0) continue;
        bits = std::max<long>(bits, static_cast<long>(boost::multiprecision::msb(
                                        boost::multiprecision::abs(numerator(c)))));
        bits = std::max<long>(bits, static_cast<long>(boost::multiprecision::msb(denominator(c))));
    }
    return bits;
}

}  // namespace

RationalPoly iterate(const RationalPoly& f, int n, int degree_budget, long coeff_bits) {
    if (n < 0) fail(errkind::invalid_argument, "iteration count must be >= 0");
    if (f.degree() < 1) fail(errkind::invalid_argument, "iteration needs degree >= 1");
    RationalPoly g = RationalPoly::variable();
    for (int k = 0; k < n; ++k) {
        const long long next_degree =
            static_cast<long long>(f.degree()) * std::max(g.degree(), 1);
        if (next_degree > degree_budget)
            fail(errkind::degree_overflow,
                 "iterate degree " + std::to_string(next_degree) + " exceeds the budget " +
                     std::to_string(degree_budget));
        g = f.compose(g);
        if (max_coeff_bits(g) > coeff_bits)
            fail(errkind::degree_overflow, "iterate coefficients exceed the bit budget");
    }
    return g;
}

Rational resultant(const RationalPoly& p, const RationalPoly& q) {
    if (p.is_zero() || q.is_zero())
        fail(errkind::invalid_argument, "resultant needs nonzero polynomials");
    const int dp = p.degree();
    const int dq = q.degree();
    const int n = dp + dq;
    if (n == 0) return Rational(1);

    // Sylvester matrix with the q-rows first, so that
    // Res(p, q) = lead(q)^deg(p) * prod over roots y of q of p(y).
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n),
                                         std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
    for (int r = 0; r < dp; ++r)
        for (int j = 0; j <= dq; ++j) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = q.coeff(dq - j);
    for (int r = 0; r < dq; ++r)
        for (int j = 0; j <= dp; ++j)
            m[static_cast<std::size_t>(dp + r)][static_cast<std::size_t>(r + j)] = p.coeff(dp - j);

    Rational det = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(col)]);
            det = -det;
        }
        const Rational& lead = m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        det *= lead;
        for (int r = col + 1; r < n; ++r) {
            const Rational factor = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / lead;
            if (factor == 0) continue;
            for (int c = col; c < n; ++c)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    factor * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
        }
    }
    return det;
}

Rational discriminant_resultant(const RationalPoly& g) {
    const int degree = g.degree();
    if (degree < 1) fail(errkind::invalid_argument, "discriminant needs degree >= 1");
    const Rational res = resultant(g, g.derivative());
    const int sign = (static_cast<long long>(degree) * (degree - 1) / 2) % 2 == 0 ? 1 : -1;
    return Rational(sign) * res / g.lead();
}

std::vector<Int> primitive_integer_coeffs(const RationalPoly& g) {
    if (g.is_zero()) return {};
    Int common_den = 1;
    for (const auto& c : g.coeffs())
        common_den = boost::multiprecision::lcm(common_den, denominator(c));
    std::vector<Int> out;
    out.reserve(g.coeffs().size());
    Int content = 0;
    for (const auto& c : g.coeffs()) {
        Int v = numerator(c) * (common_den / denominator(c));
        content = boost::multiprecision::gcd(content, v);
        out.push_back(std::move(v));
    }
    for (auto& v : out) v /= content;
    return out;
}

}  // namespace arbor
