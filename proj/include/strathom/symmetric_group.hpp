#pragma once

#include <string>
#include <vector>

namespace strathom {

// Precomputed multiplication structure of S_n, n in [1,5].
// Elements are indices into perms (lexicographic order); compose(a,b)
// applies b first, then a.
struct sym_group {
  int n = 1;
  std::vector<std::vector<int>> perms;
  std::vector<std::vector<int>> mult;
  std::vector<int> inverse;
  std::vector<int> class_of;            // conjugacy class index per element
  std::vector<std::string> class_names; // partition strings, e.g. "2+2+1"
  int identity = 0;

  int order() const { return static_cast<int>(perms.size()); }
  static const sym_group& get(int n);
};

std::string cycle_type_name(const std::vector<int>& perm);

}  // namespace strathom
