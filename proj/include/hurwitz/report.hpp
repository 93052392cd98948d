#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/divisors.hpp"

namespace hurwitz {

inline constexpr const char* kToolVersion = "0.3.0";

struct VerifyConfig {
    int d_min = 4;
    int d_max = 14;
    std::uint64_t seed = 42;
    ConventionLedger ledger;
    int oracle_rank_min = 3;
    int oracle_rank_max = 12;
    int oracle_trials = 30;
    long identities_max = 40;

    friend bool operator==(const VerifyConfig&, const VerifyConfig&) = default;
};

/// Throws std::invalid_argument unless 4 <= d_min <= d_max <= 20 and the
/// oracle/identity parameters are in range.
void validate(const VerifyConfig& config);

enum class OutputFormat { Json, Csv, Latex, Text };
std::string to_string(OutputFormat f);
OutputFormat parse_output_format(const std::string& s);

/// Everything a config file or the command line may set.
struct RunSettings {
    VerifyConfig verify;
    OutputFormat format = OutputFormat::Text;
};

/// Flat "key = value" lines; '#' starts a comment. Throws std::invalid_argument
/// on malformed lines or duplicate keys.
std::map<std::string, std::string> parse_config_text(std::string_view text);

/// Applies recognised keys (d_min, d_max, seed, ledger, relation_source,
/// oracle_rank_min, oracle_rank_max, oracle_trials, identities_max, format).
/// Throws std::invalid_argument on unknown keys or bad values.
void apply_config(const std::map<std::string, std::string>& entries, RunSettings& settings);

struct CaseSummary {
    int d = 0;
    int i = 0;
    Rational rank;
    Rational rank_formula;
    GPoly degree;         ///< (g+d-1) times the c1E coefficient of the Euler sum
    GPoly degree_formula; ///< deg_N
    int global_sign = 1;
    TruncatedChern euler_minus_closed;
    /// Part of the Bogomolov class attributable to the w coefficient defect.
    DivisorClass w_defect_contribution;
    DivisorClass bogomolov;
    DivisorClass printed_target;
    Rational a_coeff;
    DivisorClass diff;
    bool symmetric = false; ///< bogomolov equals that of (d, d-2-i)
    bool expected = false;

    friend bool operator==(const CaseSummary&, const CaseSummary&) = default;
};

struct StructureSummary {
    int d = 0;
    EllCoeff variant = EllCoeff::Derived;
    TruncatedChern l0_defect;
    TruncatedChern l1_defect;
    bool expected = false;

    friend bool operator==(const StructureSummary&, const StructureSummary&) = default;
};

struct OracleSummary {
    int rank = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<WedgeOracleEntry> entries;
    bool expected = false;

    friend bool operator==(const OracleSummary&, const OracleSummary&) = default;
};

struct IdentitySummary {
    long a_max = 0;
    long cases_checked = 0;
    std::vector<IdentityMismatch> mismatches;
    bool expected = false;

    friend bool operator==(const IdentitySummary&, const IdentitySummary&) = default;
};

struct AuditSummary {
    RelationsAudit audit;
    bool expected = false;

    friend bool operator==(const AuditSummary&, const AuditSummary&) = default;
};

enum class Overall { AllExpected, UnexpectedDeviation };
std::string to_string(Overall o);

struct VerificationReport {
    std::string tool_version = kToolVersion;
    VerifyConfig config;
    std::vector<CaseSummary> per_case; ///< sorted by (d, i)
    std::vector<AuditSummary> relation_audits;
    IdentitySummary identity;
    std::vector<OracleSummary> oracle;
    std::vector<StructureSummary> structure_checks;
    std::vector<InterpretationResult> interpretation;
    Overall overall = Overall::AllExpected;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Per-case summary; exposed for the CLI and tests.
CaseSummary summarize_case(int d, int i, const ConventionLedger& ledger);
/// Expected outcome of the relations audit: R2, R3, R4 and T + D match, R7 is
/// flagged with a defect only in delta under the printed reading.
bool audit_as_expected(const RelationsAudit& audit);
bool structure_as_expected(const StructureCheck& check);

/// Runs every check. Throws std::invalid_argument on an invalid config;
/// deviations are reported through `overall`, never thrown.
VerificationReport run_verify(const VerifyConfig& config);

/// An empty report with the given config (no cases, no checks).
VerificationReport empty_report(const VerifyConfig& config);

std::string emit(const VerificationReport& report, OutputFormat format);
/// Inverse of emit(report, Json). Throws std::invalid_argument on bad input.
VerificationReport parse_report_json(std::string_view text);

std::string emit_audit(const std::vector<RelationsAudit>& audits, OutputFormat format);

/// LaTeX rendering of a divisor class in the shape A (a zeta + b kappa + c delta).
std::string latex_mu(const Rational& a, const DivisorClass& cls);

} // namespace hurwitz
