#include "hurwitz/koszul.hpp"

#include <stdexcept>

#include "hurwitz/binomial.hpp"

namespace hurwitz {

void check_syzygy_range(int d, int i) {
    if (d < 4 || i < 1 || i > d - 3)
        throw std::invalid_argument("syzygy index out of range: need d >= 4 and 1 <= i <= d-3, got d=" +
                                    std::to_string(d) + ", i=" + std::to_string(i));
}

KoszulTermList koszul_terms(int d, int i, const ConventionLedger& ledger) {
    check_syzygy_range(d, i);
    KoszulTermList list{d, i, {}};
    for (int j = 0; j <= i + 1; ++j) {
        const int wedge = i + 1 - j;
        list.terms.push_back({j,
                              "wedge^" + std::to_string(wedge) + " E * alpha_* omega^" +
                                  std::to_string(j),
                              trunc_mul(ch_wedge_E(d, wedge), ch_pushforward_omega_power(d, j, ledger)),
                              (j % 2 == 1) ? 1 : -1});
    }
    list.terms.push_back({-1, "wedge^" + std::to_string(i) + " E", ch_wedge_E(d, i), -1});
    list.terms.push_back({-1, "wedge^" + std::to_string(i + 1) + " E * E^dual",
                          trunc_mul(ch_wedge_E(d, i + 1), trunc_dual(ch_E(d))), 1});
    return list;
}

SyzygyChern ch_N_euler(int d, int i, const ConventionLedger& ledger) {
    TruncatedChern sum;
    for (const auto& t : koszul_terms(d, i, ledger).terms)
        sum += GPoly(t.sign) * t.ch;
    if (!sum.rank.is_constant() || sum.rank.is_zero())
        throw std::logic_error("ch_N_euler: signed rank sum is zero or non-constant at d=" +
                               std::to_string(d) + ", i=" + std::to_string(i));
    const int sign = sum.rank.coeff(0).sign();
    return {GPoly(sign) * sum, sign};
}

Rational rank_N(int d, int i) {
    if (d < 3 || i < 1 || i > d - 2)
        throw std::invalid_argument("rank_N: need d >= 3 and 1 <= i <= d-2");
    // The product formula vanishes at i = d-2, where N is the determinant line bundle.
    if (i == d - 2)
        return Rational(1);
    return Rational(static_cast<long>(i) * (d - 2 - i), d - 1) * binomial(d, i + 1);
}

GPoly deg_N(int d, int i) {
    check_syzygy_range(d, i);
    return GPoly(Rational(d - 2 - i) * binomial(d - 2, i - 1)) *
           (GPoly::g() + GPoly(static_cast<long>(d) - 1));
}

TruncatedChern ch_N_closed(int d, int i) {
    check_syzygy_range(d, i);
    const Rational outer = binomial(d - 4, i - 1);
    TruncatedChern r;
    r.rank = GPoly(rank_N(d, i));
    r.c1 = GPoly(Rational(d - 2 - i) * binomial(d - 2, i - 1)) * PDegree1::c1E_atom();
    r.ch2 = GPoly(outer * Rational(d)) * Degree2::q_atom() +
            GPoly(outer * Rational(static_cast<long>(d - 4) * i + 2, 2L * (d - i - 1))) *
                Degree2::s_atom() -
            GPoly(outer) * Degree2::w_atom();
    return r;
}

bool ChernDiff::confined_to_w() const {
    return rank.is_zero() && c1.is_zero() && ch2.s.is_zero() && ch2.m.is_zero() &&
           ch2.g2.is_zero() && ch2.q.is_zero() && !ch2.w.is_zero();
}

ChernDiff compare_chern(const TruncatedChern& a, const TruncatedChern& b) {
    const TruncatedChern diff = a - b;
    return {diff.rank, diff.c1, diff.ch2};
}

} // namespace hurwitz
