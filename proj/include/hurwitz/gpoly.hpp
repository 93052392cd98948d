#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Univariate polynomial in the genus symbol g with rational coefficients.
///
/// coeffs()[k] is the coefficient of g^k. Trailing zeros are always trimmed,
/// so the zero polynomial has no coefficients and equality is structural.
class GPoly {
public:
    GPoly() = default;
    GPoly(Rational constant); // NOLINT(google-explicit-constructor)
    GPoly(long constant) : GPoly(Rational(constant)) {} // NOLINT(google-explicit-constructor)
    explicit GPoly(std::vector<Rational> coeffs);

    /// The polynomial g.
    static GPoly g();

    /// Parses the canonical rendering produced by str(), e.g. "3*g+15", "-g^2+1/2".
    static GPoly parse(std::string_view text);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// Coefficient of g^k (zero past the degree).
    Rational coeff(std::size_t k) const;
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    Rational eval(const Rational& g) const;

    GPoly operator-() const;
    GPoly& operator+=(const GPoly& o);
    GPoly& operator-=(const GPoly& o);
    GPoly& operator*=(const GPoly& o);
    GPoly& operator*=(const Rational& s);

    friend GPoly operator+(GPoly a, const GPoly& b) { return a += b; }
    friend GPoly operator-(GPoly a, const GPoly& b) { return a -= b; }
    friend GPoly operator*(GPoly a, const GPoly& b) { return a *= b; }
    friend GPoly operator*(const Rational& s, GPoly a) { return a *= s; }
    friend GPoly operator*(GPoly a, const Rational& s) { return a *= s; }

    friend bool operator==(const GPoly& a, const GPoly& b) = default;

    /// Descending powers without spaces: "3*g+15", "g^2-1", "-1/2*g", "0".
    std::string str() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const GPoly& p);

} // namespace hurwitz
