#include "frob/bounds.hpp"

#include <exception>

#include "frob/oracle.hpp"

namespace frob {

integer bound_erdos_graham(const Basis& basis) {
    const auto n = static_cast<integer>(basis.size());
    const integer an = basis.largest();
    const integer an1 = basis[basis.size() - 2];
    return checked_sub(checked_mul(checked_mul(2, an1), an / n), an);
}

integer bound_selmer(const Basis& basis) {
    const auto n = static_cast<integer>(basis.size());
    const integer a1 = basis.smallest();
    return checked_sub(checked_mul(checked_mul(2, basis.largest()), a1 / n), a1);
}

Rational bound_vitek(const Basis& basis) {
    const BigInt a2 = basis[1];
    const BigInt an = basis.largest();
    return Rational((a2 - 1) * (an - 2), 2) - 1;
}

Rational bound_beck(const Basis& basis) {
    if (basis.size() < 3)
        throw error(errc::arity, "Beck bound needs at least 3 generators");
    const BigInt a1 = basis[0], a2 = basis[1], a3 = basis[2];
    const BigInt radicand = a1 * a2 * a3 * (a1 + a2 + a3);

    BigInt scale = 1;
    for (int i = 0; i < beck_scale_digits; ++i)
        scale *= 10;
    const BigInt scaled = radicand * scale * scale;
    BigInt root = boost::multiprecision::sqrt(scaled);
    if (root * root < scaled)
        ++root; // ceil(sqrt(radicand) * scale)
    return (Rational(root, scale) - Rational(a1 + a2 + a3)) / 2;
}

std::vector<std::optional<integer>> chain_bounds(const Basis& basis) {
    const auto gens = basis.elements();
    std::vector<std::optional<integer>> chain(gens.size() - 1);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 2; k <= gens.size(); ++k) {
        try {
            if (gcd_all(gens.first(k)) != 1)
                continue;
            const Basis prefix = normalize_basis(gens.first(k));
            chain[k - 2] = prefix.contains_one() ? -1 : frobenius_oracle(prefix);
        } catch (...) {
#pragma omp critical(frob_chain_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return chain;
}

std::vector<BoundEntry> BoundReport::entries() const {
    std::vector<BoundEntry> out;
    out.push_back({"erdos-graham", Rational(erdos_graham), false});
    out.push_back({"selmer", Rational(selmer), selmer_vacuous});
    out.push_back({"vitek", vitek, vitek_vacuous});
    if (beck)
        out.push_back({"beck", *beck, false});
    return out;
}

BoundReport bound_report(const Basis& basis) {
    BoundReport r;
    const auto n = static_cast<integer>(basis.size());
    r.erdos_graham = bound_erdos_graham(basis);
    r.selmer = bound_selmer(basis);
    r.selmer_vacuous = basis.smallest() / n == 0;
    r.vitek = bound_vitek(basis);
    r.vitek_vacuous = n < 3;
    if (n >= 3)
        r.beck = bound_beck(basis);
    r.chain = chain_bounds(basis);

    const BoundEntry* best = nullptr;
    const auto all = r.entries();
    for (const auto& e : all)
        if (!e.vacuous && (!best || e.value < best->value))
            best = &e;
    r.tightest = best ? best->name : "";
    return r;
}

} // namespace frob
