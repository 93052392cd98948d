#pragma once

#include <string>
#include <vector>

#include "hurwitz/koszul.hpp"

namespace hurwitz {

/// p_* of c1(v)^2 - 2 rank(v) ch2(v).
/// Throws std::invalid_argument unless the rank is a positive constant.
DivisorClass bogomolov_class(const TruncatedChern& v, const PushforwardTable& table);
DivisorClass bogomolov_class(const TruncatedChern& v, int d, const ConventionLedger& ledger);

/// A_i = C(d-4,i-1)^2 (d-2)(d-3) / (6(i+1)(d-i-1)).
Rational A_coeff(int d, int i);

/// A_i (6(gd-6g+d+6) zeta - d(d-12) kappa - d^2 delta).
DivisorClass mu_class_printed(int d, int i);

struct MuClassResult {
    int d = 0;
    int i = 0;
    DivisorClass bogomolov;
    DivisorClass printed_target;
    Rational a_coeff;
    DivisorClass diff; ///< bogomolov - printed_target
    int global_sign = 1;
};

MuClassResult mu_class(int d, int i, const ConventionLedger& ledger);

enum class RelationStatus { DerivedMatch, DerivedMismatch, RecordedOnly };
std::string to_string(RelationStatus s);
RelationStatus parse_relation_status(const std::string& s);

/// One independent evaluation of a relation's left side.
struct RelationComparison {
    std::string reading;
    DivisorClass derived;
    DivisorClass diff; ///< derived - printed

    friend bool operator==(const RelationComparison&, const RelationComparison&) = default;
};

struct RelationRecord {
    std::string id; ///< "R1" .. "R8"
    std::string lhs;
    DivisorClass printed;
    RelationStatus status = RelationStatus::RecordedOnly;
    std::vector<RelationComparison> comparisons;
    std::string notes;

    friend bool operator==(const RelationRecord&, const RelationRecord&) = default;
};

struct SumCheck {
    std::string description;
    DivisorClass printed;
    DivisorClass derived;
    bool matches = false;

    friend bool operator==(const SumCheck&, const SumCheck&) = default;
};

struct RelationsAudit {
    int d = 0;
    std::vector<RelationRecord> records; ///< R1..R8 in order
    SumCheck t_plus_d;                   ///< (beta^2 - 2 rho^2)/2 against T + D

    friend bool operator==(const RelationsAudit&, const RelationsAudit&) = default;
};

/// Audits the eight tautological relations at a fixed degree d.
RelationsAudit relations_audit(int d, const ConventionLedger& ledger);

struct IdentityMismatch {
    int identity = 0; ///< 1, 2 or 3
    long a = 0;
    long p = 0;
    Rational lhs;
    Rational rhs;

    friend bool operator==(const IdentityMismatch&, const IdentityMismatch&) = default;
};

struct IdentityReport {
    long a_max = 0;
    long cases_checked = 0;
    std::vector<IdentityMismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

/// Left side of identity k at (a, p), by literal summation over l = 0..p:
///   sum (-1)^l C(a, p-l) f_k(l), f_1 = 1, f_2 = l, f_3 = l(l-1).
Rational identity_lhs(int identity, long a, long p);
/// C(a-1,p), -C(a-2,p-1), 2 C(a-3,p-2).
Rational identity_rhs(int identity, long a, long p);

/// Compares both sides for all 0 <= p <= a <= a_max. Throws for a_max < 1.
IdentityReport binomial_identity_check(long a_max);

struct InterpretationCandidate {
    std::string name;
    DivisorClass value;
};

struct InterpretationResult {
    std::string name;
    DivisorClass value;
    DivisorClass total; ///< 2 pi_* rho^2 + value
    bool matches = false;

    friend bool operator==(const InterpretationResult&, const InterpretationResult&) = default;
};

/// Fixed list: pushforwards of products of rho, omega_pi, alpha^*sigma, alpha^*omega_p
/// on C and of beta, sigma, omega_p on P.
std::vector<InterpretationCandidate> default_interpretation_candidates(int d);

/// For each candidate X, compares 2 pi_* rho^2 + X with the printed T + delta.
std::vector<InterpretationResult>
interpretation_search(const std::vector<InterpretationCandidate>& candidates);

} // namespace hurwitz
