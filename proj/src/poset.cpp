#include "strathom/poset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace strathom {

bool poset::has(const std::string& a) const {
  return std::find(elements.begin(), elements.end(), a) != elements.end();
}

bool poset::le(const std::string& a, const std::string& b) const {
  return leq.count({a, b}) > 0;
}

poset make_poset(const std::vector<std::string>& elements,
                 const std::vector<std::pair<std::string, std::string>>& pairs) {
  poset p;
  p.elements = elements;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (elements[i] == elements[j])
        throw std::invalid_argument("poset: duplicate label '" + elements[i] + "'");
    }
  }
  for (const auto& e : elements) p.leq.insert({e, e});
  for (const auto& pr : pairs) {
    if (!p.has(pr.first) || !p.has(pr.second))
      throw std::invalid_argument("poset: unknown label in relation");
    p.leq.insert(pr);
  }
  // transitive closure by iteration; n is tiny
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::pair<std::string, std::string>> add;
    for (const auto& ab : p.leq) {
      for (const auto& cd : p.leq) {
        if (ab.second == cd.first && !p.le(ab.first, cd.second))
          add.push_back({ab.first, cd.second});
      }
    }
    for (const auto& pr : add) {
      p.leq.insert(pr);
      changed = true;
    }
  }
  return p;
}

std::optional<violation> validate_poset(const poset& p) {
  for (std::size_t i = 0; i < p.elements.size(); ++i) {
    for (std::size_t j = i + 1; j < p.elements.size(); ++j) {
      if (p.elements[i] == p.elements[j])
        return violation{"duplicate-label", p.elements[i], p.elements[j]};
    }
  }
  for (const auto& pr : p.leq) {
    if (!p.has(pr.first)) return violation{"unknown-label", pr.first, ""};
    if (!p.has(pr.second)) return violation{"unknown-label", pr.second, ""};
  }
  for (const auto& e : p.elements) {
    if (!p.le(e, e)) return violation{"reflexivity", e, e};
  }
  for (const auto& pr : p.leq) {
    if (pr.first != pr.second && p.le(pr.second, pr.first))
      return violation{"antisymmetry", pr.first, pr.second};
  }
  for (const auto& ab : p.leq) {
    for (const auto& cd : p.leq) {
      if (ab.second == cd.first && !p.le(ab.first, cd.second))
        return violation{"transitivity", ab.first, cd.second};
    }
  }
  return std::nullopt;
}

bool is_weakly_increasing(const poset& p, const chain_simplex& c) {
  for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i) {
    if (!p.le(c.vertices[i], c.vertices[i + 1])) return false;
  }
  for (const auto& v : c.vertices) {
    if (!p.has(v)) return false;
  }
  return !c.vertices.empty();
}

bool is_reduced(const poset& p, const chain_simplex& c) {
  if (!is_weakly_increasing(p, c)) return false;
  for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i) {
    if (c.vertices[i] == c.vertices[i + 1]) return false;
  }
  return true;
}

std::vector<chain_simplex> nerve_simplices(const poset& p, int n) {
  if (n < 0) throw std::invalid_argument("nerve_simplices: negative dimension");
  std::vector<chain_simplex> out;
  chain_simplex cur;
  // depth-first extension keeps output sorted when elements are sorted
  std::vector<std::string> sorted = p.elements;
  std::sort(sorted.begin(), sorted.end());
  auto rec = [&](auto&& self) -> void {
    if (cur.dim() == n) {
      out.push_back(cur);
      return;
    }
    for (const auto& e : sorted) {
      if (cur.vertices.empty() || p.le(cur.vertices.back(), e)) {
        cur.vertices.push_back(e);
        self(self);
        cur.vertices.pop_back();
      }
    }
  };
  rec(rec);
  return out;
}

std::vector<chain_simplex> enumerate_reduced(const poset& p) {
  std::vector<chain_simplex> out;
  chain_simplex cur;
  std::vector<std::string> sorted = p.elements;
  std::sort(sorted.begin(), sorted.end());
  auto rec = [&](auto&& self) -> void {
    if (!cur.vertices.empty()) out.push_back(cur);
    for (const auto& e : sorted) {
      if (cur.vertices.empty() ||
          (p.le(cur.vertices.back(), e) && cur.vertices.back() != e)) {
        cur.vertices.push_back(e);
        self(self);
        cur.vertices.pop_back();
      }
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> chain_morphisms(const chain_simplex& src,
                                              const chain_simplex& dst) {
  // all monotone index maps with dst[f[i]] = src[i]
  int n = src.dim(), m = dst.dim();
  std::vector<std::vector<int>> out;
  if (n < 0 || m < 0) return out;
  std::vector<int> f(n + 1, 0);
  auto rec = [&](auto&& self, int i, int lo) -> void {
    if (i > n) {
      out.push_back(f);
      return;
    }
    for (int j = lo; j <= m; ++j) {
      if (dst.vertices[j] == src.vertices[i]) {
        f[i] = j;
        self(self, i + 1, j);
      }
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<int> compose_morphisms(const std::vector<int>& g,
                                   const std::vector<int>& f) {
  std::vector<int> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] < 0 || f[i] >= static_cast<int>(g.size()))
      throw std::out_of_range("compose_morphisms: index out of range");
    out[i] = g[f[i]];
  }
  return out;
}

poset parse_poset(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> pairs;
  bool have_elements = false;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "elements:") {
      if (have_elements)
        throw std::invalid_argument("poset: duplicate elements line");
      std::string e;
      while (ls >> e) elements.push_back(e);
      have_elements = true;
    } else {
      std::string lt, b;
      if (!(ls >> lt >> b) || lt != "<")
        throw std::invalid_argument("poset: expected 'a < b' line");
      std::string extra;
      if (ls >> extra) throw std::invalid_argument("poset: trailing tokens");
      pairs.push_back({tok, b});
    }
  }
  if (!have_elements) throw std::invalid_argument("poset: missing elements line");
  return make_poset(elements, pairs);
}

std::string poset_to_string(const poset& p) {
  std::ostringstream out;
  out << "elements:";
  for (const auto& e : p.elements) out << " " << e;
  out << "\n";
  for (const auto& pr : p.leq) {
    if (pr.first != pr.second) out << pr.first << " < " << pr.second << "\n";
  }
  return out.str();
}

}  // namespace strathom
