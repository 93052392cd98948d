#include <gtest/gtest.h>

#include "hurwitz/classes.hpp"
#include "random_classes.hpp"

using namespace hurwitz;
using hurwitz::testing::random_chern;
using hurwitz::testing::random_degree2;
using hurwitz::testing::random_pdegree1;

namespace {

const DivisorClass K = DivisorClass::kappa_class();
const DivisorClass Z = DivisorClass::zeta_class();
const DivisorClass D = DivisorClass::delta_class();
const GPoly g = GPoly::g();

GPoly poly(long c0, long c1 = 0) { return GPoly(c0) + GPoly(c1) * g; }

} // namespace

TEST(DivisorClass, RendersZetaFirst) {
    const DivisorClass c = (GPoly(5) - g) * Z + GPoly(Rational(8, 3)) * K - GPoly(Rational(4, 3)) * D;
    EXPECT_EQ(c.str(), "(-g+5)*zeta+8/3*kappa-4/3*delta");
    EXPECT_EQ(DivisorClass{}.str(), "0");
    EXPECT_EQ(c.at_genus(Rational(3)), GPoly(2) * Z + GPoly(Rational(8, 3)) * K - GPoly(Rational(4, 3)) * D);
}

TEST(PairOnP, KnownValues) {
    const PDegree1 c1E = PDegree1::c1E_atom(), sigma = PDegree1::sigma_atom();
    for (int d = 3; d <= 9; ++d) {
        EXPECT_EQ(pair_on_P(c1E, c1E, d), poly(d - 1, 1) * Z);
        EXPECT_EQ(pair_on_P(sigma, sigma, d), DivisorClass{});
        EXPECT_EQ(pair_on_P(c1E, sigma, d), GPoly(Rational(1, 2)) * Z);
    }
}

TEST(PairOnC, KnownValues) {
    const CDegree1 w = CDegree1::omega_pi_atom(), s = CDegree1::pull_sigma_atom();
    EXPECT_EQ(pair_on_C(w, w), K);
    EXPECT_EQ(pair_on_C(s, s), DivisorClass{});
    EXPECT_EQ(pair_on_C(CDegree1::omega_alpha(), CDegree1::omega_alpha()), K + GPoly(4) * Z);
}

TEST(Pairings, BilinearAndSymmetric) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        const PDegree1 x = random_pdegree1(rng), y = random_pdegree1(rng), z = random_pdegree1(rng);
        const GPoly k = hurwitz::testing::small_gpoly(rng);
        EXPECT_EQ(pair_on_P(x, y, 7), pair_on_P(y, x, 7));
        EXPECT_EQ(pair_on_P(k * x + z, y, 7), k * pair_on_P(x, y, 7) + pair_on_P(z, y, 7));
        const CDegree1 a{x.c1E, x.sigma}, b{y.c1E, y.sigma};
        EXPECT_EQ(pair_on_C(a, b), pair_on_C(b, a));
    }
}

TEST(PushDegree2, PrintedTable) {
    const ConventionLedger ledger;
    for (int d = 3; d <= 10; ++d) {
        const GPoly b = branch_degree(d);
        EXPECT_EQ(b, poly(2 * d - 2, 2));
        EXPECT_EQ(push_degree2(Degree2::q_atom(), d, ledger),
                  GPoly(Rational(1, 12)) * K + GPoly(Rational(1, 2)) * Z + GPoly(Rational(1, 12)) * D);
        EXPECT_EQ(push_degree2(Degree2::g2_atom(), d, ledger), DivisorClass{});
        EXPECT_EQ(push_degree2(Degree2::s_atom() - b * Degree2::m_atom(), d, ledger), DivisorClass{});
        EXPECT_EQ(push_degree2(Degree2::w_atom(), d, ledger), K + GPoly(4) * Z);
    }
}

TEST(PushDegree2, AgreesWithPairingOnProducts) {
    std::mt19937_64 rng(5);
    const ConventionLedger ledger;
    for (int t = 0; t < 50; ++t) {
        const PDegree1 x = random_pdegree1(rng), y = random_pdegree1(rng);
        const int d = 3 + static_cast<int>(rng() % 10);
        EXPECT_EQ(push_degree2(prod1(x, y), d, ledger), pair_on_P(x, y, d));
    }
}

TEST(PushDegree2, RederivedSourceGivesSameQ) {
    ConventionLedger rederived;
    rederived.relation_source = RelationSource::Rederived;
    for (int d = 3; d <= 12; ++d) {
        const PushforwardTable printed = PushforwardTable::make(d, ConventionLedger{});
        const PushforwardTable alt = PushforwardTable::make(d, rederived);
        EXPECT_EQ(printed.q, alt.q);
        EXPECT_TRUE(printed.q_discrepancy.is_zero());
        EXPECT_EQ(derive_push_ch2E(d), printed.q);
    }
}

TEST(LambdaExpand, Values) {
    EXPECT_EQ(lambda_expand(GPoly(12)), K + D);
    EXPECT_EQ(lambda_expand(GPoly(0)), DivisorClass{});
    EXPECT_EQ(lambda_expand(GPoly(24)), GPoly(2) * K + GPoly(2) * D);
}

TEST(TruncMul, KnownValues) {
    std::mt19937_64 rng(9);
    const TruncatedChern a = random_chern(rng);
    EXPECT_EQ(trunc_mul(a, TruncatedChern::one()), a);
    const TruncatedChern L{GPoly(1), PDegree1::c1E_atom(), Degree2{}};
    EXPECT_EQ(trunc_mul(L, L), (TruncatedChern{GPoly(1), GPoly(2) * PDegree1::c1E_atom(), Degree2::s_atom()}));
}

TEST(TruncMul, CommutativeAssociativeDistributive) {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 50; ++t) {
        const TruncatedChern a = random_chern(rng), b = random_chern(rng), c = random_chern(rng);
        EXPECT_EQ(trunc_mul(a, b), trunc_mul(b, a));
        EXPECT_EQ(trunc_mul(trunc_mul(a, b), c), trunc_mul(a, trunc_mul(b, c)));
        EXPECT_EQ(trunc_mul(a, b + c), trunc_mul(a, b) + trunc_mul(a, c));
    }
}

TEST(TruncDual, InvolutionAndMultiplicative) {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 50; ++t) {
        const TruncatedChern a = random_chern(rng), b = random_chern(rng);
        EXPECT_EQ(trunc_dual(trunc_dual(a)), a);
        EXPECT_EQ(trunc_dual(trunc_mul(a, b)), trunc_mul(trunc_dual(a), trunc_dual(b)));
    }
    const TruncatedChern e{GPoly(3), PDegree1::c1E_atom(), Degree2::q_atom()};
    EXPECT_EQ(trunc_dual(e), (TruncatedChern{GPoly(3), -PDegree1::c1E_atom(), Degree2::q_atom()}));
}

TEST(TruncTwist, ExponentialLaws) {
    EXPECT_EQ(trunc_twist(TruncatedChern::one(), PDegree1::c1E_atom()),
              (TruncatedChern{GPoly(1), PDegree1::c1E_atom(), GPoly(Rational(1, 2)) * Degree2::s_atom()}));
    std::mt19937_64 rng(19);
    for (int t = 0; t < 50; ++t) {
        const TruncatedChern a = random_chern(rng);
        const PDegree1 L = random_pdegree1(rng), M = random_pdegree1(rng);
        EXPECT_EQ(trunc_twist(a, PDegree1{}), a);
        EXPECT_EQ(trunc_twist(a, L).rank, a.rank);
        EXPECT_EQ(trunc_twist(trunc_twist(a, L), M), trunc_twist(a, L + M));
        EXPECT_EQ(trunc_twist(trunc_twist(a, L), -L), a);
    }
}

TEST(Ledger, NamesRoundTrip) {
    for (EllCoeff e : {EllCoeff::Paper, EllCoeff::Derived})
        EXPECT_EQ(parse_ell_coeff(to_string(e)), e);
    for (RelationSource r : {RelationSource::Printed, RelationSource::Rederived})
        EXPECT_EQ(parse_relation_source(to_string(r)), r);
    EXPECT_EQ(to_string(GlobalSign::Auto), "auto");
    EXPECT_THROW(parse_ell_coeff("both"), std::invalid_argument);
    EXPECT_THROW(parse_relation_source(""), std::invalid_argument);
}

TEST(Degree2, ArithmeticIsComponentwise) {
    std::mt19937_64 rng(23);
    const Degree2 a = random_degree2(rng), b = random_degree2(rng);
    const Degree2 c = a + b;
    EXPECT_EQ(c.w, a.w + b.w);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(Degree2::pushed_c2_omega(GPoly(2)), GPoly(24) * Degree2::q_atom() - GPoly(2) * Degree2::w_atom());
}
