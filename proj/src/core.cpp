#include "frob/core.hpp"

#include <algorithm>
#include <numeric>

namespace frob {

std::string_view to_string(errc code) noexcept {
    switch (code) {
    case errc::invalid_input: return "invalid-input";
    case errc::invalid_element: return "invalid-element";
    case errc::non_coprime: return "non-coprime";
    case errc::arity: return "arity";
    case errc::resource: return "resource";
    case errc::overflow: return "overflow";
    case errc::degenerate_basis: return "degenerate-basis";
    }
    return "unknown";
}

integer checked_add(integer a, integer b) {
    integer r;
    if (__builtin_add_overflow(a, b, &r))
        throw error(errc::overflow, "integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
    return r;
}

integer checked_sub(integer a, integer b) {
    integer r;
    if (__builtin_sub_overflow(a, b, &r))
        throw error(errc::overflow, "integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
    return r;
}

integer checked_mul(integer a, integer b) {
    integer r;
    if (__builtin_mul_overflow(a, b, &r))
        throw error(errc::overflow, "integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
    return r;
}

integer gcd_all(std::span<const integer> values) {
    if (values.empty())
        throw error(errc::invalid_input, "gcd of an empty list");
    integer g = 0;
    for (integer v : values) {
        if (v < 1)
            throw error(errc::invalid_input, "gcd input " + std::to_string(v) + " is not positive");
        g = std::gcd(g, v);
    }
    return g;
}

integer Basis::upper_bound() const {
    const integer a1 = elements_[0];
    const integer a2 = elements_[1];
    return checked_sub(checked_mul(a1, a2), checked_add(a1, a2));
}

Basis normalize_basis(std::span<const integer> raw) {
    if (raw.empty())
        throw error(errc::arity, "empty basis");
    for (integer v : raw)
        if (v <= 0)
            throw error(errc::invalid_element, "element " + std::to_string(v) + " is not positive");

    std::vector<integer> elems(raw.begin(), raw.end());
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());

    if (elems.size() < 2)
        throw error(errc::arity, "basis needs at least 2 distinct elements, got " + std::to_string(elems.size()));
    const integer g = gcd_all(elems);
    if (g != 1)
        throw error(errc::non_coprime, "non-coprime basis: gcd = " + std::to_string(g) + ", expected 1");
    return Basis(std::move(elems));
}

bool RepresentationWitness::check(std::span<const integer> generators) const {
    if (coefficients.size() != generators.size())
        return false;
    integer sum = 0;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (coefficients[i] < 0)
            return false;
        sum = checked_add(sum, checked_mul(coefficients[i], generators[i]));
    }
    return sum == target;
}

std::string join(std::span<const integer> values, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

} // namespace frob
