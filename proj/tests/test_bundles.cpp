#include <gtest/gtest.h>

#include "hurwitz/binomial.hpp"
#include "hurwitz/bundles.hpp"

using namespace hurwitz;

namespace {

const PDegree1 c1E = PDegree1::c1E_atom();
const Degree2 s = Degree2::s_atom();
const Degree2 q = Degree2::q_atom();
const Degree2 w = Degree2::w_atom();

ConventionLedger ledger_of(EllCoeff e) {
    ConventionLedger l;
    l.ell_coeff = e;
    return l;
}

} // namespace

TEST(ChE, Values) {
    EXPECT_EQ(ch_E(4), (TruncatedChern{GPoly(3), c1E, q}));
    EXPECT_EQ(ch_E(3), (TruncatedChern{GPoly(2), c1E, q}));
    EXPECT_THROW(ch_E(2), std::invalid_argument);
}

TEST(ChWedgeE, KnownValues) {
    EXPECT_EQ(ch_wedge_E(4, 2), (TruncatedChern{GPoly(3), GPoly(2) * c1E, q + GPoly(Rational(1, 2)) * s}));
    for (int d = 3; d <= 9; ++d) {
        EXPECT_EQ(ch_wedge_E(d, 0), TruncatedChern::one());
        EXPECT_EQ(ch_wedge_E(d, 1), ch_E(d));
    }
    EXPECT_THROW(ch_wedge_E(5, 5), std::invalid_argument);
    EXPECT_THROW(ch_wedge_E(5, -1), std::invalid_argument);
}

TEST(ChWedgeE, TopPowerIsDeterminant) {
    // ch(det E) = exp(c1E) = (1, c1E, s/2)
    for (int d = 3; d <= 12; ++d)
        EXPECT_EQ(ch_wedge_E(d, d - 1), (TruncatedChern{GPoly(1), c1E, GPoly(Rational(1, 2)) * s}));
}

TEST(ChWedgeE, SerreDualityRank) {
    for (int d = 3; d <= 12; ++d)
        for (int l = 0; l <= d - 1; ++l)
            EXPECT_EQ(ch_wedge_E(d, l).rank, ch_wedge_E(d, d - 1 - l).rank);
}

TEST(ChWedgeE, ProductWithDualAtDegreeFour) {
    // Hand expansion (3, 2c1E, q + s/2)(3, -c1E, q).
    const TruncatedChern v = trunc_mul(ch_wedge_E(4, 2), trunc_dual(ch_E(4)));
    EXPECT_EQ(v, (TruncatedChern{GPoly(9), GPoly(3) * c1E, GPoly(6) * q - GPoly(Rational(1, 2)) * s}));
}

TEST(WedgeOracle, ThreeRootsByHand) {
    // roots 1, 2, 3: wedge^2 has roots 3, 4, 5.
    const TruncatedChern v = ch_wedge_E(4, 2);
    const Rational c1 = v.c1.c1E.eval(Rational(0)) * Rational(6);
    EXPECT_EQ(c1, Rational(12));
    // ch2 = sum of squares / 2 = (9 + 16 + 25) / 2 with q = 7, s = 36.
    const Rational ch2 = v.ch2.q.coeff(0) * Rational(7) + v.ch2.s.coeff(0) * Rational(36);
    EXPECT_EQ(ch2, Rational(25));
}

TEST(WedgeOracle, AllRanksMatch) {
    for (int r = 3; r <= 12; ++r) {
        const WedgeOracleReport rep = wedge_oracle({r, 30, 42});
        ASSERT_EQ(rep.entries.size(), static_cast<std::size_t>(r + 1));
        EXPECT_TRUE(rep.all_match()) << "rank " << r;
        for (const auto& e : rep.entries)
            EXPECT_EQ(e.matched, 30);
    }
}

TEST(WedgeOracle, SeedDeterminism) {
    EXPECT_EQ(wedge_oracle({6, 10, 1}).entries, wedge_oracle({6, 10, 1}).entries);
}

TEST(WedgeOracle, RejectsBadConfig) {
    EXPECT_THROW(wedge_oracle({2, 5, 1}), std::invalid_argument);
    EXPECT_THROW(wedge_oracle({17, 5, 1}), std::invalid_argument);
    EXPECT_THROW(wedge_oracle({5, 0, 1}), std::invalid_argument);
}

TEST(RelativeRing, ToddAndExponential) {
    EXPECT_EQ(relative_todd(), (RelativeClass{Rational(1), Rational(-1, 2), Rational(1, 12), Rational(1, 12)}));
    EXPECT_EQ(relative_exp_K(3), (RelativeClass{Rational(1), Rational(3), Rational(9, 2), Rational(0)}));
    EXPECT_EQ(relative_mul(relative_exp_K(2), relative_exp_K(-2)), (RelativeClass{Rational(1), {}, {}, {}}));
}

TEST(OmegaPower, DerivedValues) {
    const ConventionLedger derived = ledger_of(EllCoeff::Derived);
    for (int d = 3; d <= 8; ++d) {
        const GPoly dd(d);
        EXPECT_EQ(ch_pushforward_omega_power(d, 0, derived), (TruncatedChern{dd, -c1E, q}));
        EXPECT_EQ(ch_pushforward_omega_power(d, 1, derived), (TruncatedChern{dd, c1E, q}));
        EXPECT_EQ(ch_pushforward_omega_power(d, 2, derived), (TruncatedChern{dd, GPoly(3) * c1E, q + w}));
    }
}

TEST(OmegaPower, VariantsDifferOnlyInW) {
    for (long l = 0; l <= 8; ++l) {
        const TruncatedChern a = ch_pushforward_omega_power(6, l, ledger_of(EllCoeff::Derived));
        const TruncatedChern b = ch_pushforward_omega_power(6, l, ledger_of(EllCoeff::Paper));
        EXPECT_EQ(b - a, (TruncatedChern{GPoly(), PDegree1{}, GPoly(l) * w}));
        EXPECT_EQ(omega_power_w_coeff(l, EllCoeff::Paper) - omega_power_w_coeff(l, EllCoeff::Derived), Rational(l));
    }
}

TEST(StructureSequence, DerivedPassesBoth) {
    for (int d = 4; d <= 14; ++d) {
        const StructureCheck c = structure_sequence_check(d, ledger_of(EllCoeff::Derived));
        EXPECT_TRUE(c.l0_pass());
        EXPECT_TRUE(c.l1_pass());
    }
}

TEST(StructureSequence, PrintedCoefficientFailsAtOneByW) {
    const StructureCheck c = structure_sequence_check(5, ledger_of(EllCoeff::Paper));
    EXPECT_TRUE(c.l0_pass());
    EXPECT_FALSE(c.l1_pass());
    EXPECT_EQ(c.l1_defect, (TruncatedChern{GPoly(), PDegree1{}, w}));
}
