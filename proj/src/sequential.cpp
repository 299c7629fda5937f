#include "frob/sequential.hpp"

#include <exception>
#include <map>
#include <utility>

#include "frob/detail/pair_memo.hpp"

namespace frob {
namespace {

integer floor_div(integer num, integer den) {
    integer q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0)))
        --q;
    return q;
}

void require_two_generators(integer R, integer b1, integer b2) {
    if (R < 1)
        throw error(errc::invalid_input, "H requires R >= 1, got " + std::to_string(R));
    if (b1 < 1 || b1 >= b2)
        throw error(errc::invalid_input, "H requires 1 <= b1 < b2");
}

// Residue factor floor((R mod b2)/b1)*b1 - (R mod b2): zero iff b1 divides R mod b2.
integer residue_factor(integer R, integer b1, integer b2) {
    const integer rem = R - (R / b2) * b2;
    return (rem / b1) * b1 - rem;
}

bool h_two_zero(integer R, integer b1, integer b2) {
    const integer q = R / b2;
    for (integer i = 0; i < q; ++i)
        if (f_indicator(b1, R - i * b2) == 0)
            return true;
    return f_indicator(b2, R) == 0 || residue_factor(R, b1, b2) == 0;
}

// H over gens[0 .. k), k >= 2. H(0, .) is a zero factor (empty sum).
class HEvaluator {
public:
    HEvaluator(std::span<const integer> gens, integer max_value)
        : gens_(gens), nonzero_(max_value, gens.size() > 2 ? gens.size() - 2 : 0) {}

    BigInt value(integer x, std::size_t k) {
        if (x == 0)
            return 0;
        if (k == 2)
            return static_cast<BigInt>(h_two(x, gens_[0], gens_[1]));
        const auto key = std::pair{x, k};
        if (auto it = values_.find(key); it != values_.end())
            return it->second;

        const integer last = gens_[k - 1];
        BigInt prod = 1;
        for (std::size_t j = 2; j < k; ++j)
            prod *= value(x, j);
        prod *= f_indicator(last, x);
        for (integer i = 1; i <= x / last; ++i)
            prod *= value(x - i * last, k - 1);
        values_.emplace(key, prod);
        return prod;
    }

    bool is_zero(integer x, std::size_t k) {
        if (x == 0)
            return true;
        if (k == 2)
            return h_two_zero(x, gens_[0], gens_[1]);
        if (nonzero_.contains(x, k - 3))
            return false;

        const integer last = gens_[k - 1];
        if (f_indicator(last, x) == 0)
            return true;
        for (std::size_t j = k - 1; j >= 2; --j)
            if (is_zero(x, j))
                return true;
        for (integer i = 1; i <= x / last; ++i)
            if (is_zero(x - i * last, k - 1))
                return true;
        nonzero_.insert(x, k - 3);
        return false;
    }

private:
    std::span<const integer> gens_;
    std::map<std::pair<integer, std::size_t>, BigInt> values_;
    detail::PairMemo nonzero_;
};

void require_positive_target(integer R) {
    if (R < 1)
        throw error(errc::invalid_input, "H requires R >= 1, got " + std::to_string(R));
}

void reject_unit(const Basis& basis) {
    if (basis.contains_one())
        throw error(errc::invalid_input, "basis contains 1; there are no gaps");
}

} // namespace

int f_indicator(integer alpha, integer R) {
    if (R < 1)
        throw error(errc::invalid_input, "f requires R >= 1, got " + std::to_string(R));
    if (alpha < 1)
        throw error(errc::invalid_input, "f requires alpha >= 1, got " + std::to_string(alpha));
    if (R < alpha)
        return -1;
    // alpha/R - 1/q = (alpha*q - R) / (R*q), q = floor(R/alpha) >= 1
    const integer q = R / alpha;
    return static_cast<int>(floor_div(checked_sub(checked_mul(alpha, q), R), checked_mul(R, q)));
}

int n_indicator(const Rational& x) { return x == 0 ? 1 : 0; }

Rational h_two(integer R, integer b1, integer b2) {
    require_two_generators(R, b1, b2);
    const integer q = R / b2;
    integer prod = 1;
    for (integer i = 0; i < q; ++i)
        prod *= f_indicator(b1, R - i * b2);
    prod *= f_indicator(b2, R);
    prod *= residue_factor(R, b1, b2);
    return Rational(prod);
}

Rational h_general(integer R, const Basis& basis) {
    require_positive_target(R);
    HEvaluator eval(basis.elements(), R);
    return Rational(eval.value(R, basis.size()));
}

bool h_general_is_zero(integer R, const Basis& basis) {
    require_positive_target(R);
    HEvaluator eval(basis.elements(), R);
    return eval.is_zero(R, basis.size());
}

int delta(integer i, const Basis& basis) {
    const integer upper = basis.upper_bound();
    if (i < 1 || i > upper)
        throw error(errc::invalid_input,
                    "delta index " + std::to_string(i) + " outside [1, " + std::to_string(upper) + "]");
    // N(H(i)) is 1 for representable i; delta marks the complement.
    const int representable = h_general_is_zero(i, basis) ? 1 : 0;
    return 1 - representable;
}

SequentialTrace sequential_trace(const Basis& basis, bool with_h_values, ScanMode mode) {
    reject_unit(basis);
    SequentialTrace trace;
    trace.upper = basis.upper_bound();
    trace.deltas.assign(static_cast<std::size_t>(trace.upper), 0);

    if (mode == ScanMode::parallel) {
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16)
        for (integer i = 1; i <= trace.upper; ++i) {
            try {
                trace.deltas[static_cast<std::size_t>(i - 1)] = delta(i, basis);
            } catch (...) {
#pragma omp critical(frob_trace_failure)
                if (!failure)
                    failure = std::current_exception();
            }
        }
        if (failure)
            std::rethrow_exception(failure);
    } else {
        for (integer i = 1; i <= trace.upper; ++i)
            trace.deltas[static_cast<std::size_t>(i - 1)] = delta(i, basis);
    }

    if (with_h_values) {
        std::vector<Rational> h;
        h.reserve(trace.deltas.size());
        for (integer i = 1; i <= trace.upper; ++i)
            h.push_back(h_general(i, basis));
        trace.h_values = std::move(h);
    }

    integer sum = 0;
    int guard = 1; // prod_{j > i} N(delta_j)
    for (integer i = trace.upper; i >= 1; --i) {
        const int d = trace.deltas[static_cast<std::size_t>(i - 1)];
        sum = checked_add(sum, i * d * guard);
        guard *= n_indicator(d);
    }
    if (sum == 0)
        throw error(errc::degenerate_basis, "no delta_i is 1 in [1, U]");
    trace.result = sum;
    return trace;
}

FrobeniusResult frobenius_sequential(const Basis& basis, ScanMode mode) {
    reject_unit(basis);
    FrobeniusResult out;
    out.algorithm = Algorithm::sequential;
    out.upper_bound_used = basis.upper_bound();

    if (mode == ScanMode::parallel) {
        const auto scan = detail::scan_down(out.upper_bound_used, 1, mode,
                                            [&](integer i) { return delta(i, basis) == 1; });
        if (scan.found < 1)
            throw error(errc::degenerate_basis, "no delta_i is 1 in [1, U]");
        out.value = scan.found;
        out.candidates_scanned = scan.evaluated;
        return out;
    }

    integer sum = 0;
    int guard = 1;
    for (integer i = out.upper_bound_used; i >= 1 && guard != 0; --i) {
        const int d = delta(i, basis);
        ++out.candidates_scanned;
        sum = checked_add(sum, i * d * guard);
        guard *= n_indicator(d);
    }
    if (guard != 0)
        throw error(errc::degenerate_basis, "no delta_i is 1 in [1, U]");
    out.value = sum;
    return out;
}

} // namespace frob
