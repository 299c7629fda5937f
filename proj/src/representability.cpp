#include "frob/representability.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "frob/detail/pair_memo.hpp"

namespace frob {
namespace {

// Finds m in [0, min(a/b2, b1-1)] with b1 | (a - m*b2). The residue of
// a - m*b2 mod b1 is periodic in m with period dividing b1.
std::optional<integer> two_generator_split(integer a, integer b1, integer b2) {
    if (a == 0)
        return 0;
    integer product;
    if (!__builtin_mul_overflow(b1, b2, &product) && std::gcd(b1, b2) == 1 && a == product - b1 - b2)
        return std::nullopt;
    const integer last = std::min(a / b2, b1 - 1);
    for (integer m = 0; m <= last; ++m)
        if ((a - m * b2) % b1 == 0)
            return m;
    return std::nullopt;
}

class Search {
public:
    Search(std::span<const integer> gens, integer target, std::vector<integer>* coeffs)
        : gens_(gens), coeffs_(coeffs),
          memo_(gens.size() > 2 ? detail::PairMemo(target, gens.size() - 2) : detail::PairMemo(0, 0)) {}

    // Is `a` representable by gens_[0 .. k)?
    bool run(integer a, std::size_t k) {
        if (k == 2) {
            const integer b1 = gens_[0], b2 = gens_[1];
            const auto m = two_generator_split(a, b1, b2);
            if (!m)
                return false;
            if (coeffs_) {
                (*coeffs_)[1] += *m;
                (*coeffs_)[0] += (a - *m * b2) / b1;
            }
            return true;
        }
        if (memo_.contains(a, k - 3))
            return false;

        const integer last = gens_[k - 1];
        if (a % last == 0) {
            if (coeffs_)
                (*coeffs_)[k - 1] += a / last;
            return true;
        }
        if (run(a, k - 1))
            return true;
        integer multiple = 0;
        for (integer rest = a; rest >= last;) {
            rest -= last;
            ++multiple;
            if (run(rest, k - 1)) {
                if (coeffs_)
                    (*coeffs_)[k - 1] += multiple;
                return true;
            }
        }
        memo_.insert(a, k - 3);
        return false;
    }

private:
    std::span<const integer> gens_;
    std::vector<integer>* coeffs_;
    detail::PairMemo memo_; // known failures per prefix length
};

void require_nonnegative(integer a) {
    if (a < 0)
        throw error(errc::invalid_input, "target " + std::to_string(a) + " is negative");
}

} // namespace

bool has_rep(integer a, integer b1, integer b2) {
    require_nonnegative(a);
    if (b1 < 1 || b2 < 1)
        throw error(errc::invalid_input, "generators must be positive");
    if (b1 > b2)
        std::swap(b1, b2);
    return two_generator_split(a, b1, b2).has_value();
}

bool has_rep(integer a, std::span<const integer> generators) {
    require_nonnegative(a);
    if (generators.empty())
        return a == 0;
    if (generators.size() == 1)
        return a % generators[0] == 0;
    Search search(generators, a, nullptr);
    return search.run(a, generators.size());
}

bool has_rep(integer a, const Basis& basis) { return has_rep(a, basis.elements()); }

std::optional<RepresentationWitness> find_witness(integer a, const Basis& basis) {
    require_nonnegative(a);
    RepresentationWitness w{a, std::vector<integer>(basis.size(), 0)};
    Search search(basis.elements(), a, &w.coefficients);
    if (!search.run(a, basis.size()))
        return std::nullopt;
    return w;
}

} // namespace frob
