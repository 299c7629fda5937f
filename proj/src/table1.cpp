#include "frob/table1.hpp"

namespace frob {

const std::vector<Table1Row>& table1_rows() {
    static const std::vector<Table1Row> rows = {
        {{7, 11, 13}, 30},
        {{53, 71, 91}, 899},
        {{322, 654, 765}, 27971},
        {{123, 1234, 12345}, 71459},
        {{151, 157, 251, 711}, 3019},
        {{151, 157, 251, 711, 912}, 3019},
        {{101, 109, 113, 119, 121, 131, 139, 149, 151, 161, 163, 167, 169, 187, 191, 214, 219,
          238, 276, 324, 345, 346, 349, 387, 421, 427, 444, 453, 463, 525, 530, 555, 579, 580,
          625, 711, 719, 737, 752, 787, 814, 834, 856, 878, 899, 915, 937, 978, 989},
         426},
    };
    return rows;
}

} // namespace frob
