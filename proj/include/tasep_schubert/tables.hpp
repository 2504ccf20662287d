#pragma once

#include <string>
#include <vector>

namespace ts {

struct RenderedTable {
    std::string text;
    bool matches = true;  // every computed entry agrees with the printed one
    int rows = 0;
};

// fig2, table1, table2, table3: recomputed from the recursion and set against the printed entries.
RenderedTable render_table(const std::string& name);
std::vector<std::string> table_names();

}  // namespace ts
