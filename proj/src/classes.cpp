#include "hurwitz/classes.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace hurwitz {

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
    kappa += o.kappa;
    zeta += o.zeta;
    delta += o.delta;
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) { return *this += -o; }

DivisorClass& DivisorClass::operator*=(const GPoly& s) {
    kappa *= s;
    zeta *= s;
    delta *= s;
    return *this;
}

DivisorClass DivisorClass::at_genus(const Rational& g) const {
    return {GPoly(kappa.eval(g)), GPoly(zeta.eval(g)), GPoly(delta.eval(g))};
}

std::string DivisorClass::str() const {
    std::string out;
    const auto term = [&](const GPoly& c, const char* name) {
        if (c.is_zero())
            return;
        std::string coeff = c.str();
        const bool monomial = c.coeffs().size() == 1 ||
                              (c.coeffs().size() > 1 &&
                               std::count_if(c.coeffs().begin(), c.coeffs().end(),
                                             [](const Rational& r) { return !r.is_zero(); }) == 1);
        if (!monomial)
            coeff = "(" + coeff + ")";
        if (coeff == "1")
            coeff.clear();
        else if (coeff == "-1")
            coeff = "-";
        else
            coeff += "*";
        if (!out.empty() && coeff.front() != '-')
            out += "+";
        out += coeff + name;
    };
    term(zeta, "zeta");
    term(kappa, "kappa");
    term(delta, "delta");
    return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const DivisorClass& c) { return os << c.str(); }

PDegree1& PDegree1::operator+=(const PDegree1& o) {
    c1E += o.c1E;
    sigma += o.sigma;
    return *this;
}

PDegree1& PDegree1::operator*=(const GPoly& s) {
    c1E *= s;
    sigma *= s;
    return *this;
}

CDegree1& CDegree1::operator+=(const CDegree1& o) {
    omega_pi += o.omega_pi;
    pull_sigma += o.pull_sigma;
    return *this;
}

CDegree1& CDegree1::operator*=(const GPoly& s) {
    omega_pi *= s;
    pull_sigma *= s;
    return *this;
}

Degree2 Degree2::pushed_c2_omega(const GPoly& coeff) {
    return {{}, {}, {}, GPoly(12) * coeff, -coeff};
}

Degree2& Degree2::operator+=(const Degree2& o) {
    s += o.s;
    m += o.m;
    g2 += o.g2;
    q += o.q;
    w += o.w;
    return *this;
}

Degree2& Degree2::operator-=(const Degree2& o) { return *this += -o; }

Degree2& Degree2::operator*=(const GPoly& k) {
    s *= k;
    m *= k;
    g2 *= k;
    q *= k;
    w *= k;
    return *this;
}

Degree2 prod1(const PDegree1& x, const PDegree1& y) {
    Degree2 r;
    r.s = x.c1E * y.c1E;
    r.m = x.c1E * y.sigma + x.sigma * y.c1E;
    r.g2 = x.sigma * y.sigma;
    return r;
}

TruncatedChern& TruncatedChern::operator+=(const TruncatedChern& o) {
    rank += o.rank;
    c1 += o.c1;
    ch2 += o.ch2;
    return *this;
}

TruncatedChern& TruncatedChern::operator-=(const TruncatedChern& o) { return *this += -o; }

TruncatedChern& TruncatedChern::operator*=(const GPoly& k) {
    rank *= k;
    c1 *= k;
    ch2 *= k;
    return *this;
}

TruncatedChern trunc_mul(const TruncatedChern& a, const TruncatedChern& b) {
    TruncatedChern r;
    r.rank = a.rank * b.rank;
    r.c1 = a.rank * b.c1 + b.rank * a.c1;
    r.ch2 = a.rank * b.ch2 + b.rank * a.ch2 + prod1(a.c1, b.c1);
    return r;
}

TruncatedChern trunc_dual(const TruncatedChern& a) { return {a.rank, -a.c1, a.ch2}; }

TruncatedChern line_character(const PDegree1& L) {
    return {GPoly(1), L, GPoly(Rational(1, 2)) * prod1(L, L)};
}

TruncatedChern trunc_twist(const TruncatedChern& a, const PDegree1& L) {
    return trunc_mul(a, line_character(L));
}

std::string to_string(EllCoeff v) { return v == EllCoeff::Paper ? "paper" : "derived"; }

std::string to_string(GlobalSign) { return "auto"; }

std::string to_string(RelationSource v) {
    return v == RelationSource::Printed ? "printed" : "rederived";
}

EllCoeff parse_ell_coeff(const std::string& s) {
    if (s == "paper")
        return EllCoeff::Paper;
    if (s == "derived")
        return EllCoeff::Derived;
    throw std::invalid_argument("unknown ell coefficient convention '" + s + "'");
}

RelationSource parse_relation_source(const std::string& s) {
    if (s == "printed")
        return RelationSource::Printed;
    if (s == "rederived")
        return RelationSource::Rederived;
    throw std::invalid_argument("unknown relation source '" + s + "'");
}

GPoly branch_degree(int d) { return GPoly(2) * GPoly::g() + GPoly(2L * d - 2); }

DivisorClass pair_on_P(const PDegree1& x, const PDegree1& y, int d) {
    const GPoly half_b = GPoly(Rational(1, 2)) * branch_degree(d);
    const GPoly zeta = x.c1E * y.c1E * half_b +
                       (x.c1E * y.sigma + x.sigma * y.c1E) * GPoly(Rational(1, 2));
    return {GPoly(), zeta, GPoly()};
}

DivisorClass pair_on_C(const CDegree1& x, const CDegree1& y) {
    return {x.omega_pi * y.omega_pi, x.omega_pi * y.pull_sigma + x.pull_sigma * y.omega_pi,
            GPoly()};
}

DivisorClass lambda_expand(const GPoly& coeff) {
    const GPoly k = coeff * Rational(1, 12);
    return {k, GPoly(), k};
}

namespace {

DivisorClass printed_push_ch2E() {
    return {GPoly(Rational(1, 12)), GPoly(Rational(1, 2)), GPoly(Rational(1, 12))};
}

DivisorClass push_without_q(const Degree2& c, int d) {
    DivisorClass r = c.s * pair_on_P(PDegree1::c1E_atom(), PDegree1::c1E_atom(), d);
    r += c.m * pair_on_P(PDegree1::c1E_atom(), PDegree1::sigma_atom(), d);
    r += c.g2 * pair_on_P(PDegree1::sigma_atom(), PDegree1::sigma_atom(), d);
    r += c.w * pair_on_C(CDegree1::omega_alpha(), CDegree1::omega_alpha());
    return r;
}

} // namespace

DivisorClass derive_push_ch2E(int d) {
    const TruncatedChern ch_E{GPoly(d - 1), PDegree1::c1E_atom(), Degree2::q_atom()};
    const TruncatedChern structure_sheaf = TruncatedChern::one() + trunc_dual(ch_E);
    // td(T_p) with c1(T_p) = 2 sigma.
    const TruncatedChern todd_p{GPoly(1), PDegree1::sigma_atom(),
                                GPoly(Rational(1, 3)) * Degree2::g2_atom()};
    const Degree2 integrand = trunc_mul(structure_sheaf, todd_p).ch2;
    if (integrand.q != GPoly(1))
        throw std::logic_error("derive_push_ch2E: unexpected ch2(E) multiplicity");
    Degree2 rest = integrand;
    rest.q = GPoly();
    return lambda_expand(GPoly(1)) - push_without_q(rest, d);
}

PushforwardTable PushforwardTable::make(int d, const ConventionLedger& ledger) {
    PushforwardTable t;
    t.d = d;
    // Printed relations: p_* c1(E)^2 = (b/2) zeta, p_* c1(E).sigma = zeta/2,
    // p_* sigma^2 = 0, pi_* c1(omega_alpha)^2 = kappa + 4 zeta.
    t.s = {GPoly(), GPoly(Rational(1, 2)) * branch_degree(d), GPoly()};
    t.m = {GPoly(), GPoly(Rational(1, 2)), GPoly()};
    t.g2 = {};
    t.w = {GPoly(1), GPoly(4), GPoly()};
    const DivisorClass printed = printed_push_ch2E();
    const DivisorClass derived = derive_push_ch2E(d);
    t.q_discrepancy = printed - derived;
    t.q = ledger.relation_source == RelationSource::Printed ? printed : derived;
    return t;
}

DivisorClass push_degree2(const Degree2& c, const PushforwardTable& t) {
    DivisorClass r = c.s * t.s;
    r += c.m * t.m;
    r += c.g2 * t.g2;
    r += c.q * t.q;
    r += c.w * t.w;
    return r;
}

DivisorClass push_degree2(const Degree2& c, int d, const ConventionLedger& ledger) {
    return push_degree2(c, PushforwardTable::make(d, ledger));
}

} // namespace hurwitz
