#pragma once

#include <string>
#include <vector>

#include "strathom/knot_codec.hpp"

namespace strathom {

struct table_entry {
  std::string name;
  knot_diagram diagram;
};

// file format: one knot per line, "name: pd-code"; an empty pd-code is the
// 0-crossing unknot; '#' starts a comment
std::vector<table_entry> load_table(const std::string& path);

// STRATHOM_TABLE env var wins, then the build-time default
std::string default_table_path();

}  // namespace strathom
