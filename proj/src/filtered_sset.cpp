#include "strathom/filtered_sset.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace strathom {

namespace {

std::string tuple_str(const std::vector<int>& t) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out << ",";
    out << t[i];
  }
  out << ")";
  return out.str();
}

std::vector<int> face_of(const std::vector<int>& t, std::size_t omit) {
  std::vector<int> f;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i != omit) f.push_back(t[i]);
  }
  return f;
}

chain_simplex chain_face(const chain_simplex& c, std::size_t omit) {
  chain_simplex f;
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    if (i != omit) f.vertices.push_back(c.vertices[i]);
  }
  return f;
}

}  // namespace

std::optional<fviolation> validate_filtered(const filtered_sset& k) {
  std::set<std::vector<int>> tuples;
  std::map<int, std::string> vertex_label;
  for (const fsimplex& s : k.simplices) {
    if (s.vertices.empty())
      return fviolation{"empty-simplex", ""};
    if (s.vertices.size() != s.chain.vertices.size())
      return fviolation{"chain-length", tuple_str(s.vertices)};
    if (!tuples.insert(s.vertices).second)
      return fviolation{"duplicate-simplex", tuple_str(s.vertices)};
    std::set<int> distinct(s.vertices.begin(), s.vertices.end());
    if (distinct.size() != s.vertices.size())
      return fviolation{"repeated-vertex", tuple_str(s.vertices)};
    if (!is_weakly_increasing(k.base, s.chain))
      return fviolation{"chain-not-increasing", tuple_str(s.vertices)};
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
      auto it = vertex_label.find(s.vertices[i]);
      if (it == vertex_label.end()) {
        vertex_label[s.vertices[i]] = s.chain.vertices[i];
      } else if (it->second != s.chain.vertices[i]) {
        return fviolation{"vertex-label-conflict",
                          "vertex " + std::to_string(s.vertices[i])};
      }
    }
  }
  // face closure: every codim-1 face tuple must be present
  for (const fsimplex& s : k.simplices) {
    if (s.dim() == 0) continue;
    for (std::size_t omit = 0; omit < s.vertices.size(); ++omit) {
      if (!tuples.count(face_of(s.vertices, omit)))
        return fviolation{"dangling-face", tuple_str(face_of(s.vertices, omit))};
    }
  }
  return std::nullopt;
}

std::string stratum_of(const fsimplex& s) { return s.chain.vertices.back(); }

poset strata_poset(const filtered_sset& k) {
  // union-find over simplex indices, joining same-stratum face incidences
  int n = static_cast<int>(k.simplices.size());
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[k.simplices[i].vertices] = i;
  for (int i = 0; i < n; ++i) {
    const fsimplex& s = k.simplices[i];
    if (s.dim() == 0) continue;
    for (std::size_t omit = 0; omit < s.vertices.size(); ++omit) {
      auto it = index.find(face_of(s.vertices, omit));
      if (it == index.end()) continue;
      if (stratum_of(k.simplices[it->second]) == stratum_of(s)) unite(i, it->second);
    }
  }

  // component labels, deterministic by scan order over simplices sorted
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return k.simplices[a].vertices < k.simplices[b].vertices;
  });
  std::map<int, std::string> comp_label;  // root -> label
  std::map<std::string, int> stratum_count;
  for (int i : order) {
    int r = find(i);
    if (comp_label.count(r)) continue;
    std::string st = stratum_of(k.simplices[i]);
    // first component keeps the plain stratum label, later ones get ".k"
    int c = stratum_count[st]++;
    comp_label[r] = st + (c ? "." + std::to_string(c) : "");
  }

  std::vector<std::string> elements;
  for (const auto& kv : comp_label) elements.push_back(kv.second);
  std::sort(elements.begin(), elements.end());

  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < n; ++i) {
    const fsimplex& s = k.simplices[i];
    if (s.dim() == 0) continue;
    for (std::size_t omit = 0; omit < s.vertices.size(); ++omit) {
      auto it = index.find(face_of(s.vertices, omit));
      if (it == index.end()) continue;
      const std::string& a = comp_label[find(it->second)];
      const std::string& b = comp_label[find(i)];
      if (a != b) pairs.push_back({a, b});
    }
  }
  return make_poset(elements, pairs);
}

namespace {

// all monotone surjections [m] -> [j] as index sequences
void surjections(int m, int j, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
  int pos = static_cast<int>(cur.size());
  if (pos == m + 1) {
    if (cur.back() == j) out.push_back(cur);
    return;
  }
  int prev = pos == 0 ? 0 : cur.back();
  for (int next = prev; next <= std::min(prev + 1, j); ++next) {
    if (pos == 0 && next != 0) continue;
    cur.push_back(next);
    // prune: must still be able to reach j
    if (j - next <= m - pos) surjections(m, j, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> presheaf_value(const filtered_sset& k,
                                             const chain_simplex& c) {
  int m = c.dim();
  std::vector<std::vector<int>> out;
  if (m < 0) return out;
  for (const fsimplex& s : k.simplices) {
    int j = s.dim();
    if (j > m) continue;
    std::vector<std::vector<int>> etas;
    std::vector<int> cur;
    surjections(m, j, cur, etas);
    for (const auto& eta : etas) {
      bool match = true;
      for (int i = 0; i <= m && match; ++i) {
        if (s.chain.vertices[eta[i]] != c.vertices[i]) match = false;
      }
      if (!match) continue;
      std::vector<int> desc(m + 1);
      for (int i = 0; i <= m; ++i) desc[i] = s.vertices[eta[i]];
      out.push_back(desc);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

filtered_map induced_map(const filtered_sset& dom, const std::map<int, int>& vm) {
  filtered_map f;
  f.vertex_map = vm;
  for (const fsimplex& s : dom.simplices) {
    std::vector<int> img;
    for (int v : s.vertices) {
      auto it = vm.find(v);
      if (it == vm.end())
        throw std::invalid_argument("induced_map: vertex without image");
      img.push_back(it->second);
    }
    f.simplex_map.push_back(img);
  }
  return f;
}

namespace {

// collapse consecutive repeats; returns false if a repeat is non-consecutive
bool collapse(const std::vector<int>& t, std::vector<int>& out) {
  out.clear();
  for (int v : t) {
    if (out.empty() || out.back() != v) out.push_back(v);
  }
  std::set<int> distinct(out.begin(), out.end());
  return distinct.size() == out.size();
}

}  // namespace

std::optional<fviolation> check_filtered_map(const filtered_sset& dom,
                                             const filtered_sset& cod,
                                             const filtered_map& f) {
  if (f.simplex_map.size() != dom.simplices.size())
    return fviolation{"simplex-map-size", ""};
  std::set<std::vector<int>> cod_tuples;
  std::map<int, std::string> cod_label;
  for (const fsimplex& s : cod.simplices) {
    cod_tuples.insert(s.vertices);
    for (std::size_t i = 0; i < s.vertices.size(); ++i)
      cod_label[s.vertices[i]] = s.chain.vertices[i];
  }
  for (std::size_t si = 0; si < dom.simplices.size(); ++si) {
    const fsimplex& s = dom.simplices[si];
    const std::vector<int>& img = f.simplex_map[si];
    if (img.size() != s.vertices.size())
      return fviolation{"image-arity", tuple_str(s.vertices)};
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
      auto it = f.vertex_map.find(s.vertices[i]);
      if (it == f.vertex_map.end())
        return fviolation{"vertex-unmapped", std::to_string(s.vertices[i])};
      if (it->second != img[i])
        return fviolation{"simplex-map-mismatch", tuple_str(s.vertices)};
    }
    std::vector<int> nd;
    if (!collapse(img, nd))
      return fviolation{"non-monotone-collapse", tuple_str(img)};
    if (!cod_tuples.count(nd))
      return fviolation{"image-not-a-simplex", tuple_str(nd)};
    // strictly over N(P): image structure chain equals source chain
    for (std::size_t i = 0; i < img.size(); ++i) {
      if (cod_label[img[i]] != s.chain.vertices[i])
        return fviolation{"structure-chain-differs", tuple_str(s.vertices)};
    }
  }
  return std::nullopt;
}

filtered_map compose_maps(const filtered_sset& a, const filtered_sset& b,
                          const filtered_sset& c, const filtered_map& g,
                          const filtered_map& f) {
  (void)b;
  (void)c;
  filtered_map h;
  for (const auto& kv : f.vertex_map) {
    auto it = g.vertex_map.find(kv.second);
    if (it == g.vertex_map.end())
      throw std::invalid_argument("compose_maps: image vertex unmapped");
    h.vertex_map[kv.first] = it->second;
  }
  return induced_map(a, h.vertex_map);
}

filtered_sset nerve_complex(const poset& p) {
  filtered_sset k;
  k.base = p;
  std::vector<std::string> sorted = p.elements;
  std::sort(sorted.begin(), sorted.end());
  std::map<std::string, int> vid;
  for (std::size_t i = 0; i < sorted.size(); ++i) vid[sorted[i]] = static_cast<int>(i);
  for (const chain_simplex& c : enumerate_reduced(p)) {
    fsimplex s;
    s.chain = c;
    for (const auto& label : c.vertices) s.vertices.push_back(vid[label]);
    k.simplices.push_back(s);
  }
  return k;
}

std::optional<fviolation> check_pointing(const poset& p, const filtered_sset& target,
                                         const pointing& pt) {
  // sub must be face-closed strict chains of p
  std::set<chain_simplex> subset(pt.sub.begin(), pt.sub.end());
  for (const chain_simplex& c : pt.sub) {
    if (!is_reduced(p, c)) return fviolation{"sub-not-reduced", ""};
    if (c.dim() >= 1) {
      for (std::size_t omit = 0; omit < c.vertices.size(); ++omit) {
        if (!subset.count(chain_face(c, omit)))
          return fviolation{"sub-not-face-closed", ""};
      }
    }
  }
  // realize sub as a filtered complex with nerve vertex ids, then check
  filtered_sset v;
  v.base = p;
  std::vector<std::string> sorted = p.elements;
  std::sort(sorted.begin(), sorted.end());
  std::map<std::string, int> vid;
  for (std::size_t i = 0; i < sorted.size(); ++i) vid[sorted[i]] = static_cast<int>(i);
  std::vector<chain_simplex> chains = pt.sub;
  std::sort(chains.begin(), chains.end());
  for (const chain_simplex& c : chains) {
    fsimplex s;
    s.chain = c;
    for (const auto& label : c.vertices) s.vertices.push_back(vid[label]);
    v.simplices.push_back(s);
  }
  return check_filtered_map(v, target, pt.attach);
}

filtered_sset knot_model_circle() {
  poset p = make_poset({"0", "1"}, {{"0", "1"}});
  filtered_sset k;
  k.base = p;
  auto add = [&](std::vector<int> verts, std::vector<std::string> labels) {
    fsimplex s;
    s.vertices = std::move(verts);
    s.chain.vertices = std::move(labels);
    k.simplices.push_back(s);
  };
  add({0}, {"0"});
  add({1}, {"1"});
  add({2}, {"1"});
  add({0, 1}, {"0", "1"});
  add({0, 2}, {"0", "1"});
  add({1, 2}, {"1", "1"});
  return k;
}

pointing knot_model_pointing() {
  pointing pt;
  pt.sub.push_back(chain_simplex{{"0"}});
  pt.sub.push_back(chain_simplex{{"1"}});
  pt.sub.push_back(chain_simplex{{"0", "1"}});
  // nerve vertex ids: "0" -> 0, "1" -> 1; attach into knot_model_circle
  filtered_sset v;
  v.base = make_poset({"0", "1"}, {{"0", "1"}});
  std::map<int, int> vm;
  vm[0] = 0;  // nerve vertex "0" -> model vertex 0
  vm[1] = 1;  // nerve vertex "1" -> model vertex 1
  std::vector<chain_simplex> chains = pt.sub;
  std::sort(chains.begin(), chains.end());
  for (const chain_simplex& c : chains) {
    fsimplex s;
    s.chain = c;
    for (const auto& label : c.vertices) s.vertices.push_back(label == "0" ? 0 : 1);
    v.simplices.push_back(s);
  }
  pt.attach = induced_map(v, vm);
  return pt;
}

filtered_sset parse_filtered(const std::string& text, const poset& base) {
  filtered_sset k;
  k.base = base;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    int dim;
    if (!(ls >> dim)) continue;
    if (dim < 0) throw std::invalid_argument("filtered: negative dimension");
    fsimplex s;
    for (int i = 0; i <= dim; ++i) {
      int v;
      if (!(ls >> v)) throw std::invalid_argument("filtered: missing vertex id");
      s.vertices.push_back(v);
    }
    std::string colon;
    if (!(ls >> colon) || colon != ":")
      throw std::invalid_argument("filtered: expected ':'");
    for (int i = 0; i <= dim; ++i) {
      std::string label;
      if (!(ls >> label)) throw std::invalid_argument("filtered: missing label");
      s.chain.vertices.push_back(label);
    }
    std::string extra;
    if (ls >> extra) throw std::invalid_argument("filtered: trailing tokens");
    k.simplices.push_back(s);
  }
  return k;
}

std::string filtered_to_string(const filtered_sset& k) {
  std::ostringstream out;
  for (const fsimplex& s : k.simplices) {
    out << s.dim();
    for (int v : s.vertices) out << " " << v;
    out << " :";
    for (const auto& label : s.chain.vertices) out << " " << label;
    out << "\n";
  }
  return out.str();
}

}  // namespace strathom
