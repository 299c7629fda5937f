#include "frob/oracle.hpp"

namespace frob {
namespace {

void reject_unit(const Basis& basis) {
    if (basis.contains_one())
        throw error(errc::invalid_input, "basis contains 1; every positive integer is representable");
}

} // namespace

RepresentabilityTable sieve(const Basis& basis, integer limit, integer cap) {
    if (limit < 0)
        throw error(errc::invalid_input, "sieve limit " + std::to_string(limit) + " is negative");
    if (limit > cap)
        throw error(errc::resource,
                    "sieve limit " + std::to_string(limit) + " exceeds cap " + std::to_string(cap));

    RepresentabilityTable table(limit);
    table.mark(0);
    const auto gens = basis.elements();
    for (integer a = 1; a <= limit; ++a) {
        for (integer g : gens) {
            if (g > a)
                break;
            if (table.representable(a - g)) {
                table.mark(a);
                break;
            }
        }
    }
    return table;
}

integer frobenius_oracle(const Basis& basis, integer cap) {
    reject_unit(basis);
    const integer upper = basis.upper_bound();
    const auto table = sieve(basis, upper, cap);
    for (integer a = upper; a > basis.smallest(); --a)
        if (!table[a])
            return a;
    return basis.smallest() - 1;
}

std::vector<integer> gaps(const Basis& basis, integer cap) {
    reject_unit(basis);
    const integer upper = basis.upper_bound();
    const auto table = sieve(basis, upper, cap);
    std::vector<integer> out;
    for (integer a = 1; a <= upper; ++a)
        if (!table[a])
            out.push_back(a);
    return out;
}

} // namespace frob
