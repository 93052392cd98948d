#include "hurwitz/bundles.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <string>

#include "hurwitz/binomial.hpp"

namespace hurwitz {

TruncatedChern ch_E(int d) {
    if (d < 3)
        throw std::invalid_argument("ch_E: degree must be at least 3, got " + std::to_string(d));
    return {GPoly(d - 1), PDegree1::c1E_atom(), Degree2::q_atom()};
}

TruncatedChern ch_wedge_E(int d, int l) {
    if (d < 3)
        throw std::invalid_argument("ch_wedge_E: degree must be at least 3");
    if (l < 0 || l > d - 1)
        throw std::invalid_argument("ch_wedge_E: exterior power " + std::to_string(l) +
                                    " outside [0, " + std::to_string(d - 1) + "]");
    const GPoly a = GPoly(binomial(d - 2, l - 1));
    const GPoly half_b = GPoly(binomial(d - 3, l - 2) * Rational(1, 2));
    TruncatedChern r;
    r.rank = GPoly(binomial(d - 1, l));
    r.c1 = a * PDegree1::c1E_atom();
    r.ch2 = a * Degree2::q_atom() + half_b * (Degree2::s_atom() - GPoly(2) * Degree2::q_atom());
    return r;
}

RelativeClass relative_mul(const RelativeClass& a, const RelativeClass& b) {
    return {a.unit * b.unit, a.unit * b.k + a.k * b.unit,
            a.unit * b.k2 + a.k2 * b.unit + a.k * b.k, a.unit * b.c2 + a.c2 * b.unit};
}

RelativeClass relative_exp_K(long l) {
    return {Rational(1), Rational(l), Rational(l * l, 2), Rational(0)};
}

RelativeClass relative_todd() {
    return {Rational(1), Rational(-1, 2), Rational(1, 12), Rational(1, 12)};
}

TruncatedChern alpha_push(const RelativeClass& c, int d) {
    TruncatedChern r;
    r.rank = GPoly(c.unit * Rational(d));
    r.c1 = GPoly(c.k * Rational(2)) * PDegree1::c1E_atom();
    r.ch2 = GPoly(c.k2) * Degree2::w_atom() + Degree2::pushed_c2_omega(GPoly(c.c2));
    return r;
}

Rational omega_power_w_coeff(long l, EllCoeff variant) {
    return variant == EllCoeff::Paper ? Rational(l * l + l, 2) : Rational(l * l - l, 2);
}

TruncatedChern ch_pushforward_omega_power(int d, long l, const ConventionLedger& ledger) {
    if (d < 3)
        throw std::invalid_argument("ch_pushforward_omega_power: degree must be at least 3");
    if (l < 0)
        throw std::invalid_argument("ch_pushforward_omega_power: negative power");
    if (ledger.ell_coeff == EllCoeff::Derived)
        return alpha_push(relative_mul(relative_exp_K(l), relative_todd()), d);
    TruncatedChern r = ch_E(d);
    r.rank = GPoly(d);
    r.c1 = GPoly(2 * l - 1) * PDegree1::c1E_atom();
    r.ch2 += GPoly(omega_power_w_coeff(l, EllCoeff::Paper)) * Degree2::w_atom();
    return r;
}

bool WedgeOracleReport::all_match() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const WedgeOracleEntry& e) { return e.mismatched == 0; });
}

namespace {

// Both atoms and coefficients are plain numbers here, so c1E and ch2
// collapse to scalars once the root power sums are fixed.
Rational evaluate(const PDegree1& x, const Rational& c1E) {
    if (!x.c1E.is_constant() || !x.sigma.is_zero())
        throw std::logic_error("wedge_oracle: unexpected symbolic degree-1 class");
    return x.c1E.coeff(0) * c1E;
}

Rational evaluate(const Degree2& x, const Rational& s, const Rational& q) {
    if (!x.s.is_constant() || !x.q.is_constant() || !x.m.is_zero() || !x.g2.is_zero() ||
        !x.w.is_zero())
        throw std::logic_error("wedge_oracle: unexpected symbolic degree-2 class");
    return x.s.coeff(0) * s + x.q.coeff(0) * q;
}

Rational draw_root(std::mt19937_64& rng) {
    const long num = static_cast<long>(rng() % 41) - 20;
    const long den = static_cast<long>(rng() % 9) + 1;
    return Rational(num, den);
}

} // namespace

WedgeOracleReport wedge_oracle(const WedgeOracleConfig& config) {
    if (config.rank < 3 || config.rank > 16)
        throw std::invalid_argument("wedge_oracle: rank must lie in [3, 16]");
    if (config.trials < 1)
        throw std::invalid_argument("wedge_oracle: trials must be positive");

    const int r = config.rank;
    WedgeOracleReport report;
    report.config = config;
    for (int l = 0; l <= r; ++l)
        report.entries.push_back({l, 0, 0});

    std::mt19937_64 rng(config.seed);
    const unsigned subsets = 1U << r;
    for (int trial = 0; trial < config.trials; ++trial) {
        std::vector<Rational> roots;
        for (int k = 0; k < r; ++k)
            roots.push_back(draw_root(rng));

        // Enumerate every subset once, bucketed by size.
        std::vector<Rational> c1_sum(r + 1), ch2_sum(r + 1);
        std::vector<long> count(r + 1, 0);
        for (unsigned mask = 0; mask < subsets; ++mask) {
            Rational x;
            for (int k = 0; k < r; ++k)
                if (mask & (1U << k))
                    x += roots[k];
            const int size = std::popcount(mask);
            c1_sum[size] += x;
            ch2_sum[size] += x * x * Rational(1, 2);
            ++count[size];
        }

        Rational p1, p2;
        for (const auto& t : roots) {
            p1 += t;
            p2 += t * t;
        }
        const Rational c1E = p1;
        const Rational q = p2 * Rational(1, 2);
        const Rational s = p1 * p1;

        for (int l = 0; l <= r; ++l) {
            const TruncatedChern closed = ch_wedge_E(r + 1, l);
            const bool ok = closed.rank == GPoly(Rational(count[l])) &&
                            evaluate(closed.c1, c1E) == c1_sum[l] &&
                            evaluate(closed.ch2, s, q) == ch2_sum[l];
            auto& e = report.entries[static_cast<std::size_t>(l)];
            ++(ok ? e.matched : e.mismatched);
        }
    }
    return report;
}

StructureCheck structure_sequence_check(int d, const ConventionLedger& ledger) {
    StructureCheck c;
    c.d = d;
    c.variant = ledger.ell_coeff;
    const TruncatedChern e = ch_E(d);
    c.l0_defect = ch_pushforward_omega_power(d, 0, ledger) - (TruncatedChern::one() + trunc_dual(e));
    c.l1_defect = ch_pushforward_omega_power(d, 1, ledger) - (TruncatedChern::one() + e);
    return c;
}

} // namespace hurwitz
