#include "frob/solver.hpp"

#include "frob/closed_forms.hpp"
#include "frob/oracle.hpp"
#include "frob/representability.hpp"
#include "frob/sequential.hpp"

namespace frob {

std::string_view to_string(Algorithm a) noexcept {
    switch (a) {
    case Algorithm::paper_descent: return "paper-descent";
    case Algorithm::oracle: return "oracle";
    case Algorithm::sequential: return "sequential";
    case Algorithm::closed_form: return "closed-form";
    }
    return "unknown";
}

FrobeniusResult frobenius_paper(const Basis& basis, ScanMode mode) {
    if (basis.contains_one())
        throw error(errc::invalid_input, "basis contains 1; use the dispatcher");

    FrobeniusResult out;
    out.algorithm = Algorithm::paper_descent;
    out.upper_bound_used = basis.upper_bound();

    const auto scan = detail::scan_down(out.upper_bound_used, basis.smallest() + 1, mode,
                                        [&](integer a) { return !has_rep(a, basis); });
    out.candidates_scanned = scan.evaluated;
    out.value = scan.found < basis.smallest() + 1 ? basis.smallest() - 1 : scan.found;
    return out;
}

FrobeniusResult frobenius(const Basis& basis, Method method, ScanMode mode) {
    if (basis.contains_one())
        return {-1, basis.upper_bound(), 0, Algorithm::closed_form};
    if (basis.size() == 2) {
        const integer g = frobenius_two(basis[0], basis[1]);
        return {g, g, 0, Algorithm::closed_form};
    }
    switch (method) {
    case Method::paper: return frobenius_paper(basis, mode);
    case Method::sequential: return frobenius_sequential(basis, mode);
    case Method::oracle: {
        const integer upper = basis.upper_bound();
        return {frobenius_oracle(basis), upper, upper + 1, Algorithm::oracle};
    }
    }
    throw error(errc::invalid_input, "unknown method");
}

} // namespace frob
