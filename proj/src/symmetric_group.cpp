#include "strathom/symmetric_group.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace strathom {

std::string cycle_type_name(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  std::vector<int> lengths;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  std::ostringstream out;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (i) out << "+";
    out << lengths[i];
  }
  return out.str();
}

namespace {

sym_group build(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("sym_group: n must be in [1,5]");
  sym_group g;
  g.n = n;
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  do {
    g.perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<int>, int> index;
  for (int i = 0; i < g.order(); ++i) index[g.perms[i]] = i;
  g.identity = 0;  // lexicographically first permutation is the identity

  g.mult.assign(g.order(), std::vector<int>(g.order(), 0));
  g.inverse.assign(g.order(), 0);
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) {
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = g.perms[a][g.perms[b][i]];
      g.mult[a][b] = index[c];
    }
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[g.perms[a][i]] = i;
    g.inverse[a] = index[inv];
  }

  std::map<std::string, int> class_index;
  g.class_of.assign(g.order(), 0);
  for (int a = 0; a < g.order(); ++a) {
    std::string name = cycle_type_name(g.perms[a]);
    auto it = class_index.find(name);
    if (it == class_index.end()) {
      it = class_index.emplace(name, static_cast<int>(g.class_names.size())).first;
      g.class_names.push_back(name);
    }
    g.class_of[a] = it->second;
  }
  return g;
}

}  // namespace

const sym_group& sym_group::get(int n) {
  static const sym_group groups[5] = {build(1), build(2), build(3), build(4),
                                      build(5)};
  if (n < 1 || n > 5) throw std::invalid_argument("sym_group: n must be in [1,5]");
  return groups[n - 1];
}

}  // namespace strathom
