// Generated by tools/gen_field_tables.py. Do not edit.

#include "field_tables.hpp"

namespace cyclocode::detail {

const std::vector<BaseFieldEntry>& base_field_table() {
    static const std::vector<BaseFieldEntry> table = {
        {2, 2, 1, {}},
        {3, 3, 1, {}},
        {4, 2, 2, {1, 1, 1}},
        {5, 5, 1, {}},
        {7, 7, 1, {}},
        {8, 2, 3, {1, 1, 0, 1}},
        {9, 3, 2, {2, 1, 1}},
        {11, 11, 1, {}},
        {13, 13, 1, {}},
        {16, 2, 4, {1, 1, 0, 0, 1}},
        {25, 5, 2, {2, 1, 1}},
        {27, 3, 3, {1, 2, 0, 1}},
    };
    return table;
}

const std::vector<ExtensionEntry>& extension_table() {
    static const std::vector<ExtensionEntry> table = {
        {2, 2, {1, 1, 1}},
        {2, 3, {1, 1, 0, 1}},
        {2, 4, {1, 1, 0, 0, 1}},
        {2, 5, {1, 0, 1, 0, 0, 1}},
        {2, 6, {1, 1, 0, 0, 0, 0, 1}},
        {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
        {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {2, 9, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
        {2, 10, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
        {2, 11, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 12, {1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1}},
        {2, 13, {1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 14, {1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 15, {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 16, {1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 17, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 18, {1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 19, {1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 20, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 21, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 22, {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 23, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 24, {1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 25, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 26, {1, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 27, {1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 28, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 29, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 30, {1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 31, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 32, {1, 1, 1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {3, 2, {2, 1, 1}},
        {3, 3, {1, 2, 0, 1}},
        {3, 4, {2, 1, 0, 0, 1}},
        {3, 5, {1, 2, 0, 0, 0, 1}},
        {3, 6, {2, 1, 0, 0, 0, 0, 1}},
        {3, 7, {1, 2, 1, 0, 0, 0, 0, 1}},
        {3, 8, {2, 0, 0, 1, 0, 0, 0, 0, 1}},
        {3, 9, {1, 0, 1, 2, 0, 0, 0, 0, 0, 1}},
        {3, 10, {2, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
        {3, 11, {1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {3, 12, {2, 2, 2, 1, 2, 0, 0, 0, 0, 0, 0, 0, 1}},
        {3, 13, {1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {3, 14, {2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {3, 15, {1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {3, 16, {2, 2, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {3, 17, {1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {3, 18, {2, 2, 2, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {3, 19, {1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {3, 20, {2, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {4, 2, {2, 1, 1}},
        {4, 3, {2, 1, 1, 1}},
        {4, 4, {3, 2, 1, 0, 1}},
        {4, 5, {2, 1, 0, 0, 0, 1}},
        {4, 6, {2, 1, 1, 0, 0, 0, 1}},
        {4, 7, {3, 2, 1, 0, 0, 0, 0, 1}},
        {4, 8, {2, 1, 0, 1, 0, 0, 0, 0, 1}},
        {4, 9, {2, 1, 1, 0, 0, 0, 0, 0, 0, 1}},
        {4, 10, {3, 0, 2, 1, 0, 0, 0, 0, 0, 0, 1}},
        {4, 11, {2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {4, 12, {2, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1}},
        {4, 13, {3, 2, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {4, 14, {3, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {4, 15, {3, 1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {4, 16, {2, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {5, 2, {2, 1, 1}},
        {5, 3, {2, 3, 0, 1}},
        {5, 4, {2, 2, 1, 0, 1}},
        {5, 5, {2, 4, 0, 0, 0, 1}},
        {5, 6, {2, 1, 0, 0, 0, 0, 1}},
        {5, 7, {2, 3, 0, 0, 0, 0, 0, 1}},
        {5, 8, {3, 2, 1, 0, 0, 0, 0, 0, 1}},
        {5, 9, {3, 2, 1, 0, 0, 0, 0, 0, 0, 1}},
        {5, 10, {3, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1}},
        {5, 11, {2, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {5, 12, {3, 2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {5, 13, {2, 3, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {7, 2, {3, 1, 1}},
        {7, 3, {2, 3, 0, 1}},
        {7, 4, {5, 3, 1, 0, 1}},
        {7, 5, {4, 1, 0, 0, 0, 1}},
        {7, 6, {5, 1, 3, 0, 0, 0, 1}},
        {7, 7, {2, 6, 0, 0, 0, 0, 0, 1}},
        {7, 8, {3, 1, 0, 0, 0, 0, 0, 0, 1}},
        {7, 9, {2, 1, 1, 0, 0, 0, 0, 0, 0, 1}},
        {7, 10, {5, 1, 5, 0, 0, 0, 0, 0, 0, 0, 1}},
        {7, 11, {4, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {8, 2, {3, 1, 1}},
        {8, 3, {2, 1, 0, 1}},
        {8, 4, {3, 1, 0, 0, 1}},
        {8, 5, {3, 1, 1, 0, 0, 1}},
        {8, 6, {2, 1, 0, 0, 0, 0, 1}},
        {8, 7, {3, 2, 1, 0, 0, 0, 0, 1}},
        {8, 8, {3, 2, 0, 1, 0, 0, 0, 0, 1}},
        {8, 9, {3, 1, 0, 0, 0, 0, 0, 0, 0, 1}},
        {8, 10, {7, 3, 1, 0, 0, 0, 0, 0, 0, 0, 1}},
        {9, 2, {4, 1, 1}},
        {9, 3, {3, 1, 0, 1}},
        {9, 4, {3, 1, 0, 0, 1}},
        {9, 5, {4, 0, 1, 0, 0, 1}},
        {9, 6, {6, 3, 1, 0, 0, 0, 1}},
        {9, 7, {3, 1, 0, 0, 0, 0, 0, 1}},
        {9, 8, {4, 1, 1, 0, 0, 0, 0, 0, 1}},
        {9, 9, {4, 2, 1, 0, 0, 0, 0, 0, 0, 1}},
        {9, 10, {4, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {11, 2, {7, 1, 1}},
        {11, 3, {4, 1, 0, 1}},
        {11, 4, {2, 1, 0, 0, 1}},
        {11, 5, {4, 1, 1, 0, 0, 1}},
        {11, 6, {8, 2, 1, 0, 0, 0, 1}},
        {11, 7, {4, 1, 0, 0, 0, 0, 0, 1}},
        {11, 8, {6, 2, 1, 0, 0, 0, 0, 0, 1}},
        {11, 9, {9, 2, 0, 0, 0, 0, 0, 0, 0, 1}},
        {13, 2, {2, 1, 1}},
        {13, 3, {6, 1, 0, 1}},
        {13, 4, {2, 1, 1, 0, 1}},
        {13, 5, {2, 4, 0, 0, 0, 1}},
        {13, 6, {2, 2, 1, 0, 0, 0, 1}},
        {13, 7, {2, 3, 0, 0, 0, 0, 0, 1}},
        {13, 8, {6, 1, 4, 0, 0, 0, 0, 0, 1}},
        {16, 2, {9, 1, 1}},
        {16, 3, {9, 1, 0, 1}},
        {16, 4, {4, 2, 1, 0, 1}},
        {16, 5, {4, 2, 0, 0, 0, 1}},
        {16, 6, {13, 2, 1, 0, 0, 0, 1}},
        {16, 7, {2, 2, 0, 0, 0, 0, 0, 1}},
        {16, 8, {2, 1, 0, 1, 0, 0, 0, 0, 1}},
        {25, 2, {5, 1, 1}},
        {25, 3, {10, 1, 0, 1}},
        {25, 4, {5, 1, 0, 0, 1}},
        {25, 5, {5, 1, 0, 0, 0, 1}},
        {25, 6, {10, 1, 0, 0, 0, 0, 1}},
        {27, 2, {10, 1, 1}},
        {27, 3, {9, 2, 0, 1}},
        {27, 4, {10, 1, 0, 0, 1}},
        {27, 5, {6, 1, 0, 0, 0, 1}},
        {27, 6, {3, 1, 0, 0, 0, 0, 1}},
    };
    return table;
}

}  // namespace cyclocode::detail
