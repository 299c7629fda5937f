#pragma once

#include <vector>

#include "frob/core.hpp"

namespace frob {

struct Table1Row {
    std::vector<integer> generators;
    integer printed; // published Frobenius number
};

/// The seven published reference instances, in published order.
const std::vector<Table1Row>& table1_rows();

} // namespace frob
