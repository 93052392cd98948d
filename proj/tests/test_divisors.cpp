#include <gtest/gtest.h>

#include "hurwitz/divisors.hpp"
#include "random_classes.hpp"

using namespace hurwitz;

namespace {

const DivisorClass K = DivisorClass::kappa_class();
const DivisorClass Z = DivisorClass::zeta_class();
const DivisorClass D = DivisorClass::delta_class();
const GPoly g = GPoly::g();

GPoly r(long p, long q = 1) { return GPoly(Rational(p, q)); }

} // namespace

TEST(Bogomolov, TrivialBundleVanishes) {
    for (long rank = 1; rank <= 5; ++rank)
        EXPECT_TRUE(bogomolov_class({GPoly(rank), {}, {}}, 6, ConventionLedger{}).is_zero());
}

TEST(Bogomolov, RejectsBadRank) {
    EXPECT_THROW(bogomolov_class({GPoly(0), {}, {}}, 6, ConventionLedger{}), std::invalid_argument);
    EXPECT_THROW(bogomolov_class({GPoly(-2), {}, {}}, 6, ConventionLedger{}), std::invalid_argument);
    EXPECT_THROW(bogomolov_class({g, {}, {}}, 6, ConventionLedger{}), std::invalid_argument);
}

TEST(Bogomolov, CalibrationAtDegreeFour) {
    const DivisorClass expected = (GPoly(5) - g) * Z + r(8, 3) * K - r(4, 3) * D;
    EXPECT_EQ(bogomolov_class(ch_N_euler(4, 1, ConventionLedger{}).ch, 4, ConventionLedger{}), expected);
    EXPECT_EQ(mu_class_printed(4, 1), expected);
}

TEST(Bogomolov, FrozenPrototypeValues) {
    const ConventionLedger l;
    EXPECT_EQ(mu_class(6, 1, l).bogomolov, GPoly(18) * Z + GPoly(9) * K - GPoly(9) * D);
    EXPECT_EQ(mu_class(7, 2, l).bogomolov, (GPoly(15) * g + GPoly(195)) * Z + r(175, 2) * K - r(245, 2) * D);
    EXPECT_EQ(mu_class(9, 5, l).bogomolov, (GPoly(175) * g + GPoly(875)) * Z + r(525, 2) * K - r(1575, 2) * D);

    ConventionLedger paper;
    paper.ell_coeff = EllCoeff::Paper;
    EXPECT_EQ(mu_class(4, 1, paper).bogomolov, (-g - GPoly(11)) * Z - r(4, 3) * K - r(4, 3) * D);
}

TEST(Bogomolov, TwistInvariance) {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 100; ++t) {
        const TruncatedChern v = hurwitz::testing::random_chern(rng);
        const PDegree1 L = hurwitz::testing::random_pdegree1(rng);
        const int d = 4 + static_cast<int>(rng() % 11);
        EXPECT_EQ(bogomolov_class(trunc_twist(v, L), d, ConventionLedger{}), bogomolov_class(v, d, ConventionLedger{}));
    }
}

TEST(ACoeff, Values) {
    EXPECT_EQ(A_coeff(4, 1), Rational(1, 12));
    EXPECT_EQ(A_coeff(6, 2), Rational(8, 9));
    EXPECT_EQ(A_coeff(6, 1), Rational(1, 4));
    EXPECT_EQ(A_coeff(6, 3), Rational(1, 4));
    EXPECT_THROW(A_coeff(6, 4), std::invalid_argument);
    EXPECT_THROW(A_coeff(3, 1), std::invalid_argument);
}

TEST(ACoeff, SymmetricAndPositive) {
    for (int d = 4; d <= 20; ++d)
        for (int i = 1; i <= d - 3; ++i) {
            EXPECT_EQ(A_coeff(d, i), A_coeff(d, d - 2 - i));
            EXPECT_GT(A_coeff(d, i), Rational(0));
        }
}

TEST(MuClassPrinted, Values) {
    EXPECT_EQ(mu_class_printed(6, 1), GPoly(18) * Z + GPoly(9) * K - GPoly(9) * D);
    EXPECT_EQ(mu_class_printed(6, 1), mu_class_printed(6, 3));
}

TEST(MuClass, MainTheoremOnSweep) {
    for (int d = 4; d <= 14; ++d)
        for (int i = 1; i <= d - 3; ++i) {
            const MuClassResult m = mu_class(d, i, ConventionLedger{});
            EXPECT_TRUE(m.diff.is_zero()) << d << "," << i << ": " << m.diff;
            EXPECT_EQ(m.bogomolov, mu_class(d, d - 2 - i, ConventionLedger{}).bogomolov);
        }
}

TEST(MuClass, RederivedRelationSourceAgrees) {
    ConventionLedger l;
    l.relation_source = RelationSource::Rederived;
    for (int d = 4; d <= 9; ++d)
        for (int i = 1; i <= d - 3; ++i)
            EXPECT_TRUE(mu_class(d, i, l).diff.is_zero());
}

TEST(MuClass, PrintedCoefficientBreaksSymmetry) {
    ConventionLedger l;
    l.ell_coeff = EllCoeff::Paper;
    EXPECT_FALSE(mu_class(5, 1, l).diff.is_zero());
    EXPECT_NE(mu_class(5, 1, l).bogomolov, mu_class(5, 2, l).bogomolov);
}

TEST(RelationsAudit, Statuses) {
    const RelationsAudit a = relations_audit(6, ConventionLedger{});
    ASSERT_EQ(a.records.size(), 8u);
    const std::vector<RelationStatus> want{
        RelationStatus::RecordedOnly, RelationStatus::DerivedMatch, RelationStatus::DerivedMatch,
        RelationStatus::DerivedMatch, RelationStatus::RecordedOnly, RelationStatus::RecordedOnly,
        RelationStatus::DerivedMismatch, RelationStatus::RecordedOnly};
    for (std::size_t k = 0; k < 8; ++k) {
        EXPECT_EQ(a.records[k].id, "R" + std::to_string(k + 1));
        EXPECT_EQ(a.records[k].status, want[k]) << a.records[k].id;
    }
    EXPECT_TRUE(a.t_plus_d.matches);
    EXPECT_EQ(a.t_plus_d.derived, -K + (branch_degree(6) - GPoly(4)) * Z);
}

TEST(RelationsAudit, R7DefectIsDeltaOnly) {
    for (int d = 4; d <= 14; ++d) {
        const RelationRecord r7 = relations_audit(d, ConventionLedger{}).records[6];
        ASSERT_EQ(r7.comparisons.size(), 2u);
        EXPECT_EQ(r7.comparisons[0].diff, r(-d, 3) * D);
        // The rank-consistent reading disagrees in every coefficient.
        const DivisorClass& alt = r7.comparisons[1].diff;
        EXPECT_FALSE(alt.kappa.is_zero());
        EXPECT_FALSE(alt.zeta.is_zero());
        EXPECT_FALSE(alt.delta.is_zero());
    }
}

TEST(RelationsAudit, Deterministic) {
    EXPECT_EQ(relations_audit(9, ConventionLedger{}), relations_audit(9, ConventionLedger{}));
    EXPECT_THROW(relations_audit(2, ConventionLedger{}), std::invalid_argument);
}

TEST(RelationStatus, NamesRoundTrip) {
    for (auto st : {RelationStatus::DerivedMatch, RelationStatus::DerivedMismatch, RelationStatus::RecordedOnly})
        EXPECT_EQ(parse_relation_status(to_string(st)), st);
    EXPECT_THROW(parse_relation_status("match"), std::invalid_argument);
}

TEST(BinomialIdentities, Examples) {
    EXPECT_EQ(identity_lhs(1, 5, 3), Rational(4));
    EXPECT_EQ(identity_rhs(1, 5, 3), Rational(4));
    EXPECT_EQ(identity_lhs(1, 0, 2), Rational(1));
    EXPECT_EQ(identity_rhs(1, 0, 2), Rational(1));
    for (long a = 0; a <= 6; ++a) {
        EXPECT_EQ(identity_lhs(1, a, 0), Rational(1));
        EXPECT_EQ(identity_lhs(2, a, 0), Rational(0));
        EXPECT_EQ(identity_lhs(3, a, 0), Rational(0));
        EXPECT_EQ(identity_rhs(2, a, 0), Rational(0));
        EXPECT_EQ(identity_rhs(3, a, 0), Rational(0));
    }
    EXPECT_THROW(identity_lhs(4, 1, 1), std::invalid_argument);
}

TEST(BinomialIdentities, FullRangeHasNoMismatch) {
    const IdentityReport rep = binomial_identity_check(40);
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.cases_checked, 3 * 41 * 42 / 2);
    EXPECT_THROW(binomial_identity_check(0), std::invalid_argument);
}

TEST(InterpretationSearch, Candidates) {
    const auto results = interpretation_search(default_interpretation_candidates(5));
    ASSERT_EQ(results.size(), 12u);
    EXPECT_EQ(results[0].name, "pi_*(rho.omega_pi)");
    EXPECT_EQ(results[0].value, K + GPoly(2) * Z);
    EXPECT_EQ(results[0].total, GPoly(3) * K + GPoly(10) * Z);
    EXPECT_FALSE(results[0].matches);
    for (const auto& x : results)
        EXPECT_EQ(x.matches, x.value == GPoly(-2) * Z) << x.name;
    EXPECT_TRUE(interpretation_search({}).empty());
}
