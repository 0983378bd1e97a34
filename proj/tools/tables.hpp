#pragma once

#include <string>
#include <vector>

namespace qmagic::cli {

struct Grid {
  int rows = 181;
  int cols = 361;
};

Grid parse_grid(const std::string& text);

const std::vector<std::string>& table_ids();
// CSV text; throws unknown_name for an unsupported id.
std::string make_table(const std::string& id, const Grid& grid, double tol);

}  // namespace qmagic::cli
