#pragma once

// Dynamic-programming sieve marking every representable integer in [0, limit].
// This is the ground truth the other algorithms are checked against.

#include <cstdint>
#include <vector>

#include "frob/core.hpp"

namespace frob {

inline constexpr integer default_sieve_cap = 1'000'000'000;

class RepresentabilityTable {
public:
    explicit RepresentabilityTable(integer limit) : limit_(limit), words_(static_cast<std::size_t>(limit) / 64 + 1, 0) {}

    integer limit() const noexcept { return limit_; }

    bool representable(integer a) const noexcept {
        const auto i = static_cast<std::size_t>(a);
        return (words_[i / 64] >> (i % 64)) & 1U;
    }
    bool operator[](integer a) const noexcept { return representable(a); }

    void mark(integer a) noexcept {
        const auto i = static_cast<std::size_t>(a);
        words_[i / 64] |= std::uint64_t{1} << (i % 64);
    }

private:
    integer limit_;
    std::vector<std::uint64_t> words_;
};

/// bits[a] = OR over generators g <= a of bits[a - g], bits[0] = true.
/// Throws errc::resource when limit exceeds `cap`.
RepresentabilityTable sieve(const Basis& basis, integer limit, integer cap = default_sieve_cap);

/// Largest unrepresentable integer, read off a sieve over [0, U]. Rejects bases containing 1.
integer frobenius_oracle(const Basis& basis, integer cap = default_sieve_cap);

/// All unrepresentable a in [1, U], ascending.
std::vector<integer> gaps(const Basis& basis, integer cap = default_sieve_cap);

} // namespace frob
