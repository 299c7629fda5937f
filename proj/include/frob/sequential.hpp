#pragma once

// Floor-function reformulation of the descent algorithm.
//
//   f(alpha, R)   = floor(alpha/R - 1/floor(R/alpha))   in {-1, 0}
//   H(R, [b1,b2]) = prod_{i<floor(R/b2)} f(b1, R - i*b2) * f(b2, R)
//                   * (floor((R mod b2)/b1)*b1 - (R mod b2))
//   H(R, [a1..an]) = prod_{j=2}^{n-1} H(R, [a1..aj]) * f(an, R)
//                   * prod_{i=1}^{floor(R/an)} H(R - i*an, [a1..a(n-1)])
//   N(x)          = 1 if x == 0 else 0
//   delta_i       = 1 iff H(i, basis) != 0, i.e. i is NOT representable
//   g             = sum_{i=1}^{U} i * delta_i * prod_{j>i} N(delta_j)
//
// H vanishes exactly when R is representable; only that zero-ness is
// relied on. Every evaluation is exact (integers and rationals, no floats).

#include <optional>
#include <vector>

#include "frob/core.hpp"
#include "frob/detail/scan.hpp"
#include "frob/exact.hpp"
#include "frob/solver.hpp"

namespace frob {

/// 0 iff alpha divides R and R >= alpha, else -1. For R < alpha the inner
/// floor(R/alpha) is zero and the value is defined as -1.
int f_indicator(integer alpha, integer R);

int n_indicator(const Rational& x);
inline int n_indicator(int x) { return x == 0 ? 1 : 0; }

/// Full exact product for two generators (b1 < b2, R >= 1).
Rational h_two(integer R, integer b1, integer b2);

/// Full exact product over a basis. The magnitude of a nonzero value grows
/// quickly with R and n; intended for small arguments and diagnostics.
Rational h_general(integer R, const Basis& basis);

/// Zero test of h_general that stops at the first zero factor.
bool h_general_is_zero(integer R, const Basis& basis);

/// 1 iff i is not representable; 1 <= i <= U.
int delta(integer i, const Basis& basis);

struct SequentialTrace {
    integer upper = 0;
    std::vector<int> deltas;                      // deltas[i - 1] for i = 1..U
    std::optional<std::vector<Rational>> h_values; // h_values[i - 1] = H(i, basis)
    integer result = 0;
};

/// Evaluates every delta_i and the full weighted sum. With `with_h_values`
/// also stores the exact H products (small bases only).
SequentialTrace sequential_trace(const Basis& basis, bool with_h_values = false,
                                 ScanMode mode = ScanMode::serial);

/// The same sum evaluated from i = U downward; once a factor N(delta_j) is
/// zero every remaining term vanishes and evaluation stops.
FrobeniusResult frobenius_sequential(const Basis& basis, ScanMode mode = ScanMode::serial);

} // namespace frob
