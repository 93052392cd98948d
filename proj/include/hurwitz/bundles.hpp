#pragma once

#include <cstdint>
#include <vector>

#include "hurwitz/classes.hpp"

namespace hurwitz {

/// ch(E) = (d-1, c1E, q) for the Tschirnhausen bundle of a degree-d cover.
/// Throws std::invalid_argument for d < 3.
TruncatedChern ch_E(int d);

/// ch of the l-th exterior power of E (rank d-1):
///   rank C(d-1,l), c1 C(d-2,l-1) c1E, ch2 C(d-2,l-1) q + C(d-3,l-2) (s - 2q)/2.
/// Throws std::invalid_argument unless 0 <= l <= d-1.
TruncatedChern ch_wedge_E(int d, int l);

/// Degree <= 2 class on C built from K = c1(omega_alpha) and c2 = c2(Omega_{C/P}):
/// unit + k*K + k2*K^2 + c2*c2.
struct RelativeClass {
    Rational unit;
    Rational k;
    Rational k2;
    Rational c2;

    friend bool operator==(const RelativeClass&, const RelativeClass&) = default;
};

RelativeClass relative_mul(const RelativeClass& a, const RelativeClass& b);
/// ch(omega_alpha^l) = exp(l K), truncated.
RelativeClass relative_exp_K(long l);
/// td of the relative tangent sheaf: 1 - K/2 + (K^2 + c2)/12.
RelativeClass relative_todd();

/// alpha_* into P: 1 -> d, K -> 2 c1E (branch divisor), K^2 -> w, c2 -> 12q - w.
TruncatedChern alpha_push(const RelativeClass& c, int d);

/// Coefficient of w in ch2(alpha_* omega_alpha^l): (l^2-l)/2 under Derived, (l^2+l)/2 under Paper.
Rational omega_power_w_coeff(long l, EllCoeff variant);

/// ch(alpha_* omega_alpha^l) = (d, (2l-1) c1E, q + c(l) w).
///
/// Under EllCoeff::Derived this is computed by expanding Riemann-Roch along
/// alpha; under EllCoeff::Paper the closed form with c(l) = (l^2+l)/2 is used.
TruncatedChern ch_pushforward_omega_power(int d, long l, const ConventionLedger& ledger);

struct WedgeOracleConfig {
    int rank = 3;
    int trials = 30;
    std::uint64_t seed = 42;
};

struct WedgeOracleEntry {
    int l = 0;
    int matched = 0;
    int mismatched = 0;

    friend bool operator==(const WedgeOracleEntry&, const WedgeOracleEntry&) = default;
};

struct WedgeOracleReport {
    WedgeOracleConfig config;
    std::vector<WedgeOracleEntry> entries; ///< one per l = 0..rank
    bool all_match() const;
};

/// Splitting-principle check of ch_wedge_E: random rational Chern roots,
/// explicit subset enumeration, comparison against the closed forms.
/// Throws std::invalid_argument unless 3 <= rank <= 16 and trials >= 1.
WedgeOracleReport wedge_oracle(const WedgeOracleConfig& config);

struct StructureCheck {
    int d = 0;
    EllCoeff variant = EllCoeff::Derived;
    /// ch(alpha_* O) - (1 + ch(E^dual)) and ch(alpha_* omega) - (1 + ch(E)).
    TruncatedChern l0_defect;
    TruncatedChern l1_defect;

    bool l0_pass() const { return l0_defect == TruncatedChern{}; }
    bool l1_pass() const { return l1_defect == TruncatedChern{}; }
};

/// Checks the structure sheaf sequence and its dual against ch_pushforward_omega_power.
StructureCheck structure_sequence_check(int d, const ConventionLedger& ledger);

} // namespace hurwitz
