#pragma once

#include <string>
#include <vector>

#include "cn/map_io.hpp"

namespace cn::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(CN_FIXTURE_DIR) + "/" + name;
}

inline PLMultimap fixture(const std::string& name) { return load_map(fixture_path(name)); }

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"fork.json",     "two_loops.json",
                                              "usc_not_lsc.json", "union123.json",
                                              "identity.json", "half_turn.json"};
  return names;
}

}  // namespace cn::testing
