#include "hurwitz/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace hurwitz {

Rational::Rational(long n) : num_(n), den_(1) {}

Rational::Rational(long n, long d) : num_(n), den_(d) { normalize(); }

Rational::Rational(const mpz_class& n) : num_(n), den_(1) {}

Rational::Rational(const mpz_class& n, const mpz_class& d) : num_(n), den_(d) { normalize(); }

void Rational::normalize() {
    if (sgn(den_) == 0)
        throw std::domain_error("Rational: zero denominator");
    if (sgn(den_) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

Rational Rational::parse(std::string_view text) {
    const auto bad = [&] {
        return std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
    };
    const auto slash = text.find('/');
    const auto num_text = std::string(text.substr(0, slash));
    const auto den_text = slash == std::string_view::npos ? std::string("1")
                                                          : std::string(text.substr(slash + 1));
    const auto valid = [](const std::string& s, bool allow_sign) {
        std::size_t pos = 0;
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+'))
            pos = 1;
        if (pos == s.size())
            return false;
        for (; pos < s.size(); ++pos)
            if (s[pos] < '0' || s[pos] > '9')
                return false;
        return true;
    };
    if (!valid(num_text, true) || !valid(den_text, false))
        throw bad();
    mpz_class n(num_text[0] == '+' ? num_text.substr(1) : num_text, 10);
    mpz_class d(den_text, 10);
    if (d == 0)
        throw bad();
    return Rational(n, d);
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw std::domain_error("Rational: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    if (is_integer())
        return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

std::int64_t Rational::to_int64() const {
    if (!is_integer() || !num_.fits_slong_p())
        throw std::domain_error("Rational: " + str() + " is not a machine integer");
    return num_.get_si();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace hurwitz
