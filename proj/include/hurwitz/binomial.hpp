#pragma once

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Generalized binomial coefficient n(n-1)...(n-k+1)/k!.
///
/// Defined for every integer n (negative allowed) and is zero for k < 0.
/// For 0 <= k <= n it is the ordinary binomial coefficient.
Rational binomial(long n, long k);

} // namespace hurwitz
