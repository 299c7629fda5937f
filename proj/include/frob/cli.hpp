#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "frob/core.hpp"

namespace frob::cli {

// Exit status contract.
inline constexpr int exit_ok = 0;
inline constexpr int exit_input_error = 1;
inline constexpr int exit_disagreement = 2;

/// Integers separated by whitespace or commas; '#' starts a comment that
/// runs to end of line. Throws errc::invalid_input on malformed tokens.
std::vector<integer> parse_integer_list(std::string_view text);

/// 64-bit LCG, modulus 2^64 (Knuth's MMIX constants).
using Lcg64 = std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL, 1442695040888963407ULL, 0ULL>;

/// Random coprime bases for `verify`: arity uniform in [2, max_arity],
/// elements uniform in [2, max_element] without replacement, whole basis
/// redrawn until gcd = 1. A draw in [0, range) is (next() >> 32) % range.
std::vector<std::vector<integer>> random_bases(std::size_t count, integer max_element, integer max_arity,
                                               std::uint64_t seed);

/// Runs one command line (args excludes the program name). Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace frob::cli
