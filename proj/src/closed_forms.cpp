#include "frob/closed_forms.hpp"

#include <numeric>

namespace frob {

integer frobenius_two(integer a1, integer a2) {
    if (a1 < 1 || a2 < 1)
        throw error(errc::invalid_element, "generators must be positive");
    if (std::gcd(a1, a2) != 1)
        throw error(errc::non_coprime,
                    "non-coprime pair: gcd = " + std::to_string(std::gcd(a1, a2)) + ", expected 1");
    if (a1 == 1 || a2 == 1)
        return -1;
    return checked_sub(checked_mul(a1, a2), checked_add(a1, a2));
}

integer frobenius_arithmetic(integer a, integer d, integer k) {
    if (a < 2 || d < 1 || k < 1)
        throw error(errc::invalid_input, "arithmetic progression needs a >= 2, d >= 1, k >= 1");
    if (std::gcd(a, d) != 1)
        throw error(errc::non_coprime, "gcd(a, d) = " + std::to_string(std::gcd(a, d)) + ", expected 1");
    return checked_add(checked_mul(a, (a - 2) / k), checked_mul(d, a - 1));
}

integer fibonacci(integer n) {
    if (n < 1)
        throw error(errc::invalid_input, "Fibonacci index must be >= 1");
    integer prev = 0, cur = 1;
    for (integer i = 1; i < n; ++i) {
        const integer next = checked_add(prev, cur);
        prev = cur;
        cur = next;
    }
    return cur;
}

integer frobenius_fibonacci_triple(integer i, integer k, FibonacciR r_mode) {
    if (i < 3 || k < 3 || i > fibonacci_triple_max_i || k > fibonacci_triple_max_k)
        throw error(errc::invalid_input, "Fibonacci triple (i=" + std::to_string(i) + ", k=" + std::to_string(k) +
                                             ") outside 3 <= i <= 14, 3 <= k <= 20");
    const integer fi = fibonacci(i);
    const integer fi2 = fibonacci(i + 2);
    const integer fik = fibonacci(i + k);
    if (std::gcd(std::gcd(fi, fi2), fik) != 1)
        throw error(errc::invalid_input, "gcd(F_i, F_{i+2}, F_{i+k}) != 1");

    const integer fk = fibonacci(k);
    const integer fk2 = fibonacci(k - 2);
    const integer r = (fi - 1) / (r_mode == FibonacciR::corrected ? fk : fi);

    const bool first_branch = r == 0 || checked_mul(fk2, fi) < checked_mul(fi - r * fk, fi2);
    if (first_branch)
        return checked_sub(checked_mul(fi - 1, fi2), checked_mul(fi, checked_add(checked_mul(r, fk2), 1)));
    const integer lead = r_mode == FibonacciR::corrected ? checked_sub(checked_mul(r, fk), 1) : checked_mul(r, fk - 1);
    return checked_sub(checked_mul(lead, fi2),
                       checked_mul(fi, checked_add(checked_mul(r - 1, fk2), 1)));
}

} // namespace frob
