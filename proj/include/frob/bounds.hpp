#pragma once

// Classical upper bounds on the Frobenius number (generators ascending) and
// the prefix chain g(a1,a2) >= g(a1,a2,a3) >= ... >= g(a1..an).

#include <optional>
#include <string>
#include <vector>

#include "frob/core.hpp"
#include "frob/exact.hpp"

namespace frob {

/// 2*a_{n-1}*floor(a_n/n) - a_n
integer bound_erdos_graham(const Basis& basis);

/// 2*a_n*floor(a_1/n) - a_1. Vacuous when floor(a_1/n) == 0.
integer bound_selmer(const Basis& basis);

/// (a_2 - 1)(a_n - 2)/2 - 1, exact. Vacuous for n == 2.
Rational bound_vitek(const Basis& basis);

inline constexpr int beck_scale_digits = 6;

/// Upper rational approximation of (sqrt(a1*a2*a3*(a1+a2+a3)) - a1 - a2 - a3)/2
/// with absolute error below 10^-6: the square root is rounded up to a
/// multiple of 10^-6. Throws errc::arity for n < 3.
Rational bound_beck(const Basis& basis);

/// g of each prefix (a1..ak), k = 2..n, from the sieve; nullopt where the
/// prefix gcd exceeds 1.
std::vector<std::optional<integer>> chain_bounds(const Basis& basis);

struct BoundEntry {
    std::string name;
    Rational value;
    bool vacuous = false;
};

struct BoundReport {
    integer erdos_graham = 0;
    integer selmer = 0;
    bool selmer_vacuous = false;
    Rational vitek;
    bool vitek_vacuous = false;
    std::optional<Rational> beck; // absent for n < 3
    std::vector<std::optional<integer>> chain;
    std::string tightest; // name of the smallest non-vacuous bound

    std::vector<BoundEntry> entries() const;
};

BoundReport bound_report(const Basis& basis);

} // namespace frob
