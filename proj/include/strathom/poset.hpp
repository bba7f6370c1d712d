#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace strathom {

// Finite poset over opaque string labels. leq holds the full relation
// (reflexive pairs included) after construction.
struct poset {
  std::vector<std::string> elements;
  std::set<std::pair<std::string, std::string>> leq;

  bool has(const std::string& a) const;
  bool le(const std::string& a, const std::string& b) const;
};

// chain of poset labels, weakly increasing; dimension = size - 1
struct chain_simplex {
  std::vector<std::string> vertices;

  int dim() const { return static_cast<int>(vertices.size()) - 1; }
  bool operator==(const chain_simplex& o) const { return vertices == o.vertices; }
  bool operator<(const chain_simplex& o) const { return vertices < o.vertices; }
};

struct violation {
  std::string rule;  // "reflexivity" | "antisymmetry" | "transitivity" | ...
  std::string a, b;
};

// builds the poset from elements and covering pairs; reflexive and
// transitive closure computed here. Throws on duplicate labels or unknown
// labels in pairs.
poset make_poset(const std::vector<std::string>& elements,
                 const std::vector<std::pair<std::string, std::string>>& pairs);

// checks the axioms on an arbitrary relation (no closure assumed)
std::optional<violation> validate_poset(const poset& p);

bool is_weakly_increasing(const poset& p, const chain_simplex& c);
bool is_reduced(const poset& p, const chain_simplex& c);

// all weakly increasing (n+1)-tuples
std::vector<chain_simplex> nerve_simplices(const poset& p, int n);

// all strictly increasing chains of length >= 1: the objects of R(P)
std::vector<chain_simplex> enumerate_reduced(const poset& p);

// monotone maps f: [n] -> [m] with dst o f = src, as vertex-index sequences
std::vector<std::vector<int>> chain_morphisms(const chain_simplex& src,
                                              const chain_simplex& dst);

// composition of vertex-index maps: (g o f)[i] = g[f[i]]
std::vector<int> compose_morphisms(const std::vector<int>& g,
                                   const std::vector<int>& f);

// text format: "elements: a b c" then one "a < b" line per covering pair
poset parse_poset(const std::string& text);
std::string poset_to_string(const poset& p);

}  // namespace strathom
