#pragma once

#include <string_view>

#include "frob/core.hpp"
#include "frob/detail/scan.hpp"

namespace frob {

enum class Algorithm { paper_descent, oracle, sequential, closed_form };

std::string_view to_string(Algorithm a) noexcept;

struct FrobeniusResult {
    integer value = 0;            // >= -1; -1 iff the basis contains 1
    integer upper_bound_used = 0; // a1*a2 - a1 - a2
    integer candidates_scanned = 0;
    Algorithm algorithm = Algorithm::paper_descent;
};

/// Descent from U = a1*a2 - a1 - a2: test a = U, U-1, ..., a1+1 with
/// has_rep and return the first unrepresentable one. When every candidate
/// in that range is representable the answer is a1 - 1, since 1..a1-1 are
/// never representable. Each candidate is tested independently.
FrobeniusResult frobenius_paper(const Basis& basis, ScanMode mode = ScanMode::serial);

enum class Method { paper, oracle, sequential };

/// Dispatcher: 1 in basis gives -1, two generators use the closed form,
/// anything else runs the selected method.
FrobeniusResult frobenius(const Basis& basis, Method method = Method::paper, ScanMode mode = ScanMode::serial);

} // namespace frob
