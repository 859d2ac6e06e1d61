#pragma once

#include <string>
#include <utility>
#include <vector>

#include "xdl/rational.hpp"

namespace xdl {

/// Univariate polynomial over the rationals, coefficients in ascending degree
/// with a nonzero leading coefficient. The zero polynomial has no
/// coefficients. Annihilator outputs are always monic.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly({Rational(1)}); }
    /// z^n
    static Poly monomial(std::size_t n) {
        std::vector<Rational> c(n + 1);
        c[n] = 1;
        return Poly(std::move(c));
    }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; the zero polynomial has none (call only on nonzero).
    std::size_t degree() const { return coeffs_.size() - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading() const { return coeffs_.back(); }

    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    Poly monic() const {
        if (is_zero() || is_monic()) return *this;
        std::vector<Rational> c = coeffs_;
        const Rational lead = c.back();
        for (auto& x : c) x /= lead;
        return Poly(std::move(c));
    }

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

inline Poly operator+(const Poly& f, const Poly& g) {
    std::vector<Rational> c(std::max(f.coeffs().size(), g.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coeff(i) + g.coeff(i);
    return Poly(std::move(c));
}

inline Poly operator-(const Poly& f, const Poly& g) {
    std::vector<Rational> c(std::max(f.coeffs().size(), g.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coeff(i) - g.coeff(i);
    return Poly(std::move(c));
}

inline Poly operator*(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return Poly::zero();
    std::vector<Rational> c(f.coeffs().size() + g.coeffs().size() - 1);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        for (std::size_t j = 0; j < g.coeffs().size(); ++j)
            c[i + j] += f.coeffs()[i] * g.coeffs()[j];
    return Poly(std::move(c));
}

/// Exact division with remainder: f = q·g + r, deg r < deg g.
inline std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw std::invalid_argument("poly_divmod: division by the zero polynomial");
    if (f.is_zero() || f.degree() < g.degree()) return {Poly::zero(), f};
    std::vector<Rational> rem = f.coeffs();
    std::vector<Rational> quo(f.degree() - g.degree() + 1);
    const std::size_t dg = g.degree();
    for (std::size_t i = rem.size(); i-- > dg;) {
        if (rem[i] == 0) continue;
        const Rational factor = rem[i] / g.leading();
        quo[i - dg] = factor;
        for (std::size_t j = 0; j <= dg; ++j) rem[i - dg + j] -= factor * g.coeffs()[j];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

inline bool poly_divides(const Poly& g, const Poly& f) {
    if (g.is_zero()) return f.is_zero();
    return poly_divmod(f, g).second.is_zero();
}

/// Monic gcd by the Euclidean algorithm.
inline Poly poly_gcd(Poly f, Poly g) {
    if (f.is_zero() && g.is_zero())
        throw std::invalid_argument("poly_gcd: both arguments are zero");
    while (!g.is_zero()) {
        Poly r = poly_divmod(f, g).second;
        f = std::move(g);
        g = std::move(r);
    }
    return f.monic();
}

/// Monic lcm = f·g / gcd(f, g).
inline Poly poly_lcm(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("poly_lcm: zero argument");
    return poly_divmod(f * g, poly_gcd(f, g)).first.monic();
}

/// "z^4 - 2z^3 - 2z^2 + 2z + 1" style rendering, descending powers.
inline std::string poly_to_string(const Poly& p, const std::string& var = "z") {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        const Rational& c = p.coeffs()[i];
        if (c == 0) continue;
        const bool first = out.empty();
        const Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first)
            out += (c < 0 ? "-" : "");
        else
            out += (c < 0 ? " - " : " + ");
        if (abs_c != 1 || i == 0) out += rational_to_string(abs_c);
        if (i > 0) {
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace xdl
