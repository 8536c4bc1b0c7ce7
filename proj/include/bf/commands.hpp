#pragma once

#include <string>

#include <json.hpp>

namespace bf {

using json = nlohmann::json;

// Each command returns the full report envelope. Paths are resolved against the working directory.

struct HomologyArgs {
  std::string group;
  std::string coeff = "z";
  int deg = 0;
  int depth = -1;  // deg + 1
  std::string w1;
  std::string strategy = "auto";
};

struct FiltrationArgs {
  std::string xi;
  std::string d3_image;  // file or "zero"; empty means use the registry (or nothing)
  std::string registry;
  bool assume_d3_30_zero = false;
};

struct ObstructArgs {
  std::string xi, y, filling, registry, stage;
};

json cmd_homology(const HomologyArgs& a);
json cmd_e2(const std::string& xi);
json cmd_d2(const std::string& xi, int row, const std::string& line = "q1");
json cmd_filtration(const FiltrationArgs& a);
json cmd_obstruct(const ObstructArgs& a);

// 1 parse error, 3 staged precondition, 2 anything else
int exit_code(const std::exception& e);

}  // namespace bf
