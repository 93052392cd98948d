#pragma once

#include <string>
#include <vector>

#include "hurwitz/bundles.hpp"

namespace hurwitz {

/// One signed summand of the Euler characteristic of the Koszul complex K_{i+1}.
struct KoszulTerm {
    /// Column j (counted from the right, starting at 0), or -1 for a correction term.
    int position = 0;
    std::string label;
    TruncatedChern ch; ///< unsigned Chern character of the summand
    int sign = 1;

    friend bool operator==(const KoszulTerm&, const KoszulTerm&) = default;
};

struct KoszulTermList {
    int d = 0;
    int i = 0;
    std::vector<KoszulTerm> terms;
};

/// Terms (-1)^(j-1) ch(wedge^(i+1-j) E) ch(alpha_* omega^j) for j = 0..i+1,
/// then the corrections -ch(wedge^i E) and +ch(wedge^(i+1) E) ch(E^dual).
/// Throws std::invalid_argument unless d >= 4 and 1 <= i <= d-3.
KoszulTermList koszul_terms(int d, int i, const ConventionLedger& ledger);

struct SyzygyChern {
    TruncatedChern ch;
    /// +1 or -1, whichever makes the rank positive.
    int global_sign = 1;
};

/// ch(N_i) as the signed Euler sum of koszul_terms, normalized to positive rank.
/// Throws std::logic_error if the signed rank sum vanishes.
SyzygyChern ch_N_euler(int d, int i, const ConventionLedger& ledger);

/// Closed form for ch(N_i):
///   rank i(d-2-i)/(d-1) C(d,i+1), c1 (d-2-i) C(d-2,i-1) c1E,
///   ch2 C(d-4,i-1) (d q + ((d-4)i+2)/(2(d-i-1)) s - w).
TruncatedChern ch_N_closed(int d, int i);

/// Rank of N_i, valid for d >= 3 and 1 <= i <= d-2; N_{d-2} is a line bundle.
Rational rank_N(int d, int i);

/// deg N_i = (d-2-i)(g+d-1) C(d-2,i-1), valid for d >= 4 and 1 <= i <= d-3.
GPoly deg_N(int d, int i);

/// Componentwise exact difference a - b.
struct ChernDiff {
    GPoly rank;
    PDegree1 c1;
    Degree2 ch2;

    bool empty() const { return rank.is_zero() && c1.is_zero() && ch2.is_zero(); }
    /// Nonzero only in the w atom of ch2.
    bool confined_to_w() const;
};

ChernDiff compare_chern(const TruncatedChern& a, const TruncatedChern& b);

/// Throws std::invalid_argument unless d >= 4 and 1 <= i <= d-3.
void check_syzygy_range(int d, int i);

} // namespace hurwitz
