#pragma once

// Descent-style representability test: strip the largest generator, try
// every multiple of it, recurse on the remaining prefix; two generators
// form the base case.

#include <optional>
#include <span>

#include "frob/core.hpp"

namespace frob {

/// True iff a = k*b1 + m*b2 for some k, m >= 0. Order of b1, b2 is irrelevant.
bool has_rep(integer a, integer b1, integer b2);
inline bool has_rep_two(integer a, integer b1, integer b2) { return has_rep(a, b1, b2); }

/// Membership of `a` in the semigroup generated by `basis`. a = 0 is always
/// representable; negative a throws invalid_input.
bool has_rep(integer a, const Basis& basis);

/// Same test over an arbitrary ascending list of positive generators (need
/// not be coprime). Used for prefixes of a basis.
bool has_rep(integer a, std::span<const integer> generators);

/// A coefficient vector proving representability, or nullopt when `a` is
/// not representable. Any valid witness may be returned.
std::optional<RepresentationWitness> find_witness(integer a, const Basis& basis);

} // namespace frob
