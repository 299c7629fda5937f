#pragma once

// Basis type, error model and checked integer helpers shared by every module.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace frob {

using integer = std::int64_t;

enum class errc {
    invalid_input,
    invalid_element,
    non_coprime,
    arity,
    resource,
    overflow,
    degenerate_basis,
};

std::string_view to_string(errc code) noexcept;

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

// Checked arithmetic; every overflow throws errc::overflow.
integer checked_add(integer a, integer b);
integer checked_sub(integer a, integer b);
integer checked_mul(integer a, integer b);

integer gcd_all(std::span<const integer> values);

/// A validated generator set: strictly increasing, every element >= 1,
/// at least two elements, gcd 1. Only `normalize_basis` constructs one.
class Basis {
public:
    std::span<const integer> elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    integer operator[](std::size_t i) const noexcept { return elements_[i]; }
    integer smallest() const noexcept { return elements_.front(); }
    integer largest() const noexcept { return elements_.back(); }
    bool contains_one() const noexcept { return elements_.front() == 1; }

    /// U = a1*a2 - a1 - a2 from the two smallest generators.
    integer upper_bound() const;

    friend bool operator==(const Basis&, const Basis&) = default;

private:
    explicit Basis(std::vector<integer> elements) : elements_(std::move(elements)) {}
    friend Basis normalize_basis(std::span<const integer> raw);

    std::vector<integer> elements_;
};

/// Sorts, deduplicates and validates. Throws invalid_element, non_coprime
/// or arity depending on which invariant fails.
Basis normalize_basis(std::span<const integer> raw);

inline Basis normalize_basis(std::initializer_list<integer> raw) {
    return normalize_basis(std::span<const integer>(raw.begin(), raw.size()));
}

struct RepresentationWitness {
    integer target = 0;
    std::vector<integer> coefficients; // aligned with Basis::elements()

    /// True when every coefficient is nonnegative and sum(c_i * a_i) == target.
    bool check(std::span<const integer> generators) const;
};

std::string join(std::span<const integer> values, std::string_view sep = ",");

} // namespace frob
