#include "hurwitz/gpoly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace hurwitz {

GPoly::GPoly(Rational constant) {
    if (!constant.is_zero())
        coeffs_.push_back(std::move(constant));
}

GPoly::GPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

GPoly GPoly::g() { return GPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

void GPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Rational GPoly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational GPoly::eval(const Rational& g) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * g + *it;
    return acc;
}

GPoly GPoly::operator-() const {
    GPoly r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

GPoly& GPoly::operator+=(const GPoly& o) {
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

GPoly& GPoly::operator-=(const GPoly& o) { return *this += -o; }

GPoly& GPoly::operator*=(const GPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t a = 0; a < coeffs_.size(); ++a)
        for (std::size_t b = 0; b < o.coeffs_.size(); ++b)
            out[a + b] += coeffs_[a] * o.coeffs_[b];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

GPoly& GPoly::operator*=(const Rational& s) {
    for (auto& c : coeffs_)
        c *= s;
    trim();
    return *this;
}

std::string GPoly::str() const {
    if (is_zero())
        return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero())
            continue;
        const Rational mag = c.sign() < 0 ? -c : c;
        if (c.sign() < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        if (k == 0) {
            out += mag.str();
            continue;
        }
        if (mag != Rational(1))
            out += mag.str() + "*";
        out += "g";
        if (k > 1)
            out += "^" + std::to_string(k);
    }
    return out;
}

GPoly GPoly::parse(std::string_view text) {
    const auto bad = [&] {
        return std::invalid_argument("GPoly: cannot parse '" + std::string(text) + "'");
    };
    std::string s;
    std::copy_if(text.begin(), text.end(), std::back_inserter(s),
                 [](char ch) { return !std::isspace(static_cast<unsigned char>(ch)); });
    if (s.empty())
        throw bad();

    GPoly result;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t end = pos + 1;
        while (end < s.size() && s[end] != '+' && s[end] != '-')
            ++end;
        std::string term = s.substr(pos, end - pos);
        pos = end;

        Rational sign(1);
        if (term[0] == '+' || term[0] == '-') {
            if (term[0] == '-')
                sign = Rational(-1);
            term.erase(0, 1);
        }
        if (term.empty())
            throw bad();

        Rational coefficient(1);
        std::size_t power = 0;
        const auto gpos = term.find('g');
        if (gpos == std::string::npos) {
            coefficient = Rational::parse(term);
        } else {
            if (gpos > 0) {
                if (gpos < 2 || term[gpos - 1] != '*')
                    throw bad();
                coefficient = Rational::parse(term.substr(0, gpos - 1));
            }
            const std::string rest = term.substr(gpos + 1);
            if (rest.empty()) {
                power = 1;
            } else if (rest[0] == '^' && rest.size() > 1 &&
                       std::all_of(rest.begin() + 1, rest.end(),
                                   [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
                power = std::stoul(rest.substr(1));
            } else {
                throw bad();
            }
        }
        std::vector<Rational> mono(power + 1);
        mono[power] = sign * coefficient;
        result += GPoly(std::move(mono));
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const GPoly& p) { return os << p.str(); }

} // namespace hurwitz
