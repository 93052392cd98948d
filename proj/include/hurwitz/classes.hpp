#pragma once

// Degree <= 2 intersection calculus on the universal surfaces over a
// one-parameter base B:
//   C --alpha--> P, with pi: C -> B and p: P -> B a P^1-bundle.
// Classes on P and classes on C are kept in separate types. The only
// bridges are the pulled-back atom alpha^*sigma on C and the pushed-forward
// atom W = alpha_* c1(omega_alpha)^2 on P.

#include <iosfwd>
#include <string>

#include "hurwitz/gpoly.hpp"

namespace hurwitz {

/// Divisor class on the Hurwitz space in the basis (kappa, zeta, delta).
/// lambda is never stored; see lambda_expand().
struct DivisorClass {
    GPoly kappa;
    GPoly zeta;
    GPoly delta;

    static DivisorClass kappa_class() { return {GPoly(1), GPoly(), GPoly()}; }
    static DivisorClass zeta_class() { return {GPoly(), GPoly(1), GPoly()}; }
    static DivisorClass delta_class() { return {GPoly(), GPoly(), GPoly(1)}; }

    bool is_zero() const { return kappa.is_zero() && zeta.is_zero() && delta.is_zero(); }

    DivisorClass operator-() const { return {-kappa, -zeta, -delta}; }
    DivisorClass& operator+=(const DivisorClass& o);
    DivisorClass& operator-=(const DivisorClass& o);
    DivisorClass& operator*=(const GPoly& s);
    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(const GPoly& s, DivisorClass a) { return a *= s; }
    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

    /// Evaluates every coefficient at a concrete genus.
    DivisorClass at_genus(const Rational& g) const;

    /// e.g. "(-g+5)*zeta+8/3*kappa-4/3*delta"; zeta first, as in the main formula.
    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const DivisorClass& c);

/// Degree-1 class on P in the atoms c1(E) and sigma = -c1(omega_p)/2.
struct PDegree1 {
    GPoly c1E;
    GPoly sigma;

    static PDegree1 c1E_atom() { return {GPoly(1), GPoly()}; }
    static PDegree1 sigma_atom() { return {GPoly(), GPoly(1)}; }

    bool is_zero() const { return c1E.is_zero() && sigma.is_zero(); }
    PDegree1 operator-() const { return {-c1E, -sigma}; }
    PDegree1& operator+=(const PDegree1& o);
    PDegree1& operator*=(const GPoly& s);
    friend PDegree1 operator+(PDegree1 a, const PDegree1& b) { return a += b; }
    friend PDegree1 operator-(PDegree1 a, const PDegree1& b) { return a += -b; }
    friend PDegree1 operator*(const GPoly& s, PDegree1 a) { return a *= s; }
    friend bool operator==(const PDegree1&, const PDegree1&) = default;
};

/// Degree-1 class on C in the atoms c1(omega_pi) and alpha^*sigma.
struct CDegree1 {
    GPoly omega_pi;
    GPoly pull_sigma;

    static CDegree1 omega_pi_atom() { return {GPoly(1), GPoly()}; }
    static CDegree1 pull_sigma_atom() { return {GPoly(), GPoly(1)}; }
    /// c1(omega_alpha) = c1(omega_pi) + 2 alpha^*sigma.
    static CDegree1 omega_alpha() { return {GPoly(1), GPoly(2)}; }

    CDegree1 operator-() const { return {-omega_pi, -pull_sigma}; }
    CDegree1& operator+=(const CDegree1& o);
    CDegree1& operator*=(const GPoly& s);
    friend CDegree1 operator+(CDegree1 a, const CDegree1& b) { return a += b; }
    friend CDegree1 operator*(const GPoly& s, CDegree1 a) { return a *= s; }
    friend bool operator==(const CDegree1&, const CDegree1&) = default;
};

/// Degree-2 class on P in the atoms
///   s = c1(E)^2, m = c1(E).sigma, g2 = sigma^2, q = ch2(E), w = alpha_* c1(omega_alpha)^2.
/// alpha_* c2(Omega_{C/P}) has no atom of its own; it enters as 12q - w.
struct Degree2 {
    GPoly s;
    GPoly m;
    GPoly g2;
    GPoly q;
    GPoly w;

    static Degree2 s_atom() { return {GPoly(1), {}, {}, {}, {}}; }
    static Degree2 m_atom() { return {{}, GPoly(1), {}, {}, {}}; }
    static Degree2 g2_atom() { return {{}, {}, GPoly(1), {}, {}}; }
    static Degree2 q_atom() { return {{}, {}, {}, GPoly(1), {}}; }
    static Degree2 w_atom() { return {{}, {}, {}, {}, GPoly(1)}; }
    /// coeff * alpha_* c2(Omega_{C/P}), rewritten as coeff * (12 q - w).
    static Degree2 pushed_c2_omega(const GPoly& coeff);

    bool is_zero() const {
        return s.is_zero() && m.is_zero() && g2.is_zero() && q.is_zero() && w.is_zero();
    }
    Degree2 operator-() const { return {-s, -m, -g2, -q, -w}; }
    Degree2& operator+=(const Degree2& o);
    Degree2& operator-=(const Degree2& o);
    Degree2& operator*=(const GPoly& k);
    friend Degree2 operator+(Degree2 a, const Degree2& b) { return a += b; }
    friend Degree2 operator-(Degree2 a, const Degree2& b) { return a -= b; }
    friend Degree2 operator*(const GPoly& k, Degree2 a) { return a *= k; }
    friend bool operator==(const Degree2&, const Degree2&) = default;
};

/// Symmetric product of two degree-1 classes on P.
Degree2 prod1(const PDegree1& x, const PDegree1& y);

/// Chern character truncated after degree 2.
struct TruncatedChern {
    GPoly rank;
    PDegree1 c1;
    Degree2 ch2;

    static TruncatedChern one() { return {GPoly(1), {}, {}}; }

    TruncatedChern operator-() const { return {-rank, -c1, -ch2}; }
    TruncatedChern& operator+=(const TruncatedChern& o);
    TruncatedChern& operator-=(const TruncatedChern& o);
    TruncatedChern& operator*=(const GPoly& k);
    friend TruncatedChern operator+(TruncatedChern a, const TruncatedChern& b) { return a += b; }
    friend TruncatedChern operator-(TruncatedChern a, const TruncatedChern& b) { return a -= b; }
    friend TruncatedChern operator*(const GPoly& k, TruncatedChern a) { return a *= k; }
    friend bool operator==(const TruncatedChern&, const TruncatedChern&) = default;
};

TruncatedChern trunc_mul(const TruncatedChern& a, const TruncatedChern& b);
/// (rank, -c1, ch2).
TruncatedChern trunc_dual(const TruncatedChern& a);
/// Chern character of the line bundle with first Chern class L: (1, L, L^2/2).
TruncatedChern line_character(const PDegree1& L);
TruncatedChern trunc_twist(const TruncatedChern& a, const PDegree1& L);

enum class EllCoeff { Paper, Derived };
enum class GlobalSign { Auto };
enum class RelationSource { Printed, Rederived };

/// Choices for the places where the source formulas admit more than one reading.
struct ConventionLedger {
    EllCoeff ell_coeff = EllCoeff::Derived;
    GlobalSign global_sign = GlobalSign::Auto;
    RelationSource relation_source = RelationSource::Printed;

    friend bool operator==(const ConventionLedger&, const ConventionLedger&) = default;
};

std::string to_string(EllCoeff v);
std::string to_string(GlobalSign v);
std::string to_string(RelationSource v);
/// Throws std::invalid_argument on unknown names.
EllCoeff parse_ell_coeff(const std::string& s);
RelationSource parse_relation_source(const std::string& s);

/// b = 2g + 2d - 2, the degree of the branch divisor.
GPoly branch_degree(int d);

/// Intersection pairing on P pushed to B:
///   <c1E,c1E> = (b/2) zeta, <c1E,sigma> = zeta/2, <sigma,sigma> = 0.
DivisorClass pair_on_P(const PDegree1& x, const PDegree1& y, int d);

/// Intersection pairing on C pushed to B:
///   <omega_pi,omega_pi> = kappa, <omega_pi,alpha^*sigma> = zeta, <alpha^*sigma,alpha^*sigma> = 0.
DivisorClass pair_on_C(const CDegree1& x, const CDegree1& y);

/// lambda = (kappa + delta)/12, scaled by coeff.
DivisorClass lambda_expand(const GPoly& coeff);

/// Images in (kappa, zeta, delta) of the five degree-2 atoms under p_*.
struct PushforwardTable {
    int d = 0;
    DivisorClass s;
    DivisorClass m;
    DivisorClass g2;
    DivisorClass q;
    DivisorClass w;
    /// Printed value of p_* ch2(E) minus the independent derivation; zero when they agree.
    DivisorClass q_discrepancy;

    static PushforwardTable make(int d, const ConventionLedger& ledger);
};

/// p_* ch2(E) obtained independently: Riemann-Roch along p applied to
/// alpha_* O_C = O_P + E^dual, with c1 R pi_* O_C = lambda.
DivisorClass derive_push_ch2E(int d);

DivisorClass push_degree2(const Degree2& c, const PushforwardTable& table);
DivisorClass push_degree2(const Degree2& c, int d, const ConventionLedger& ledger);

} // namespace hurwitz
