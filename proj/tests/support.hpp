#pragma once

// Test-only reference routines. None of these call into the library's
// algorithms; they enumerate coefficient vectors directly.

#include <algorithm>
#include <numeric>
#include <random>
#include <span>
#include <vector>

#include "frob/core.hpp"

namespace frob::testing {

/// Exhaustive search over coefficient vectors: is a = sum(l_i * g_i), l_i >= 0?
inline bool enumerate_representable(integer a, std::span<const integer> gens) {
    if (a == 0)
        return true;
    if (gens.empty())
        return false;
    const integer g = gens.back();
    for (integer l = 0; l * g <= a; ++l)
        if (enumerate_representable(a - l * g, gens.first(gens.size() - 1)))
            return true;
    return false;
}

/// Largest non-representable integer by enumeration, checking every a up
/// to the two-generator bound (gens sorted ascending, gcd 1, no 1).
inline integer enumerate_frobenius(std::span<const integer> gens) {
    const integer upper = gens[0] * gens[1] - gens[0] - gens[1];
    for (integer a = upper; a >= 1; --a)
        if (!enumerate_representable(a, gens))
            return a;
    return -1;
}

/// Random coprime bases: arity in [2, max_arity], distinct elements in
/// [2, max_element], sorted ascending.
inline std::vector<std::vector<integer>> random_coprime_bases(std::size_t count, integer max_element,
                                                             std::size_t max_arity, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> arity_dist(2, max_arity);
    std::uniform_int_distribution<integer> elem_dist(2, max_element);
    std::vector<std::vector<integer>> out;
    while (out.size() < count) {
        const std::size_t n = arity_dist(rng);
        std::vector<integer> b;
        while (b.size() < n) {
            const integer v = elem_dist(rng);
            if (std::find(b.begin(), b.end(), v) == b.end())
                b.push_back(v);
        }
        integer g = 0;
        for (integer v : b)
            g = std::gcd(g, v);
        if (g != 1)
            continue;
        std::sort(b.begin(), b.end());
        out.push_back(std::move(b));
    }
    return out;
}

} // namespace frob::testing
