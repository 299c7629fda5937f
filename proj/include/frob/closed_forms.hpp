#pragma once

#include "frob/core.hpp"

namespace frob {

/// g(a1, a2) = a1*a2 - a1 - a2 for coprime a1, a2; -1 if either is 1.
integer frobenius_two(integer a1, integer a2);

/// g(a, a+d, ..., a+k*d) = a*floor((a-2)/k) + d*(a-1). Requires a >= 2,
/// d >= 1, k >= 1 and gcd(a, d) = 1.
integer frobenius_arithmetic(integer a, integer d, integer k);

/// F_1 = F_2 = 1. Throws errc::overflow past F_92.
integer fibonacci(integer n);

/// How r is computed in the Fibonacci-triple formula. `corrected` uses
/// r = floor((F_i - 1) / F_k); `literal` uses floor((F_i - 1) / F_i), which
/// is always 0 and only exists to show the discrepancy.
enum class FibonacciR { corrected, literal };

/// Index range in which the triple formula has been checked against the sieve.
inline constexpr integer fibonacci_triple_max_i = 14;
inline constexpr integer fibonacci_triple_max_k = 20;

/// g(F_i, F_{i+2}, F_{i+k}) for 3 <= i <= 14, 3 <= k <= 20 with gcd 1.
/// Inputs outside that envelope throw invalid_input.
integer frobenius_fibonacci_triple(integer i, integer k, FibonacciR r_mode = FibonacciR::corrected);

} // namespace frob
