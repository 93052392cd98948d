#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hurwitz {

/// Exact rational number backed by GMP.
///
/// Values are always kept in lowest terms with a positive denominator, so
/// structural equality is numeric equality.
class Rational {
public:
    Rational() = default;
    Rational(long n); // NOLINT(google-explicit-constructor)
    Rational(long n, long d);
    explicit Rational(const mpz_class& n);
    Rational(const mpz_class& n, const mpz_class& d);

    /// Parses "p" or "p/q" (optional leading sign). Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    const mpz_class& numerator() const { return num_; }
    const mpz_class& denominator() const { return den_; }

    bool is_zero() const { return sgn(num_) == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return sgn(num_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "p" for integers, "p/q" otherwise.
    std::string str() const;

    /// Throws std::domain_error unless the value is an integer fitting in int64.
    std::int64_t to_int64() const;

private:
    void normalize();

    mpz_class num_{0};
    mpz_class den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace hurwitz
