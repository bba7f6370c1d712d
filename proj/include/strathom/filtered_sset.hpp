#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strathom/poset.hpp"

namespace strathom {

// Nondegenerate simplex given by its ordered vertex-id tuple plus the chain
// the structure map assigns to it. Vertex labels must agree across simplices;
// faces are the one-vertex-omitted subsequences and must be present.
struct fsimplex {
  std::vector<int> vertices;
  chain_simplex chain;

  int dim() const { return static_cast<int>(vertices.size()) - 1; }
};

struct filtered_sset {
  poset base;
  std::vector<fsimplex> simplices;
};

struct fviolation {
  std::string rule;
  std::string detail;
};

std::optional<fviolation> validate_filtered(const filtered_sset& k);

// stratum of a simplex: last (maximal) entry of its chain
std::string stratum_of(const fsimplex& s);

// strata poset: elements are connected components of the stratum preimages,
// ordered by face incidence witnesses, transitively closed. Component labels
// are the stratum label, suffixed ".k" when a stratum splits.
poset strata_poset(const filtered_sset& k);

// All simplex descriptions (degenerate ones included) whose structure chain
// equals c: each description is the vertex tuple with repetitions obtained
// from a simplex and a monotone surjection. Sorted lexicographically.
std::vector<std::vector<int>> presheaf_value(const filtered_sset& k,
                                             const chain_simplex& c);

struct filtered_map {
  std::map<int, int> vertex_map;
  // image vertex tuple (possibly with repeats) per domain simplex, aligned
  // with dom.simplices
  std::vector<std::vector<int>> simplex_map;
};

// fills simplex_map from vertex images
filtered_map induced_map(const filtered_sset& dom, const std::map<int, int>& vm);

std::optional<fviolation> check_filtered_map(const filtered_sset& dom,
                                             const filtered_sset& cod,
                                             const filtered_map& f);

// compose g after f (both must check against the given complexes)
filtered_map compose_maps(const filtered_sset& a, const filtered_sset& b,
                          const filtered_sset& c, const filtered_map& g,
                          const filtered_map& f);

// the nerve N(P) as a filtered complex: vertex i = i-th element of p
// (sorted), simplices = strictly increasing chains, structure chain = labels
filtered_sset nerve_complex(const poset& p);

// pointing: a face-closed subcomplex of N(P) plus attach data into a target
struct pointing {
  std::vector<chain_simplex> sub;
  filtered_map attach;
};

std::optional<fviolation> check_pointing(const poset& p, const filtered_sset& target,
                                         const pointing& pt);

// the circle model of a knot: one vertex over "0", two over "1", three edges
filtered_sset knot_model_circle();
// its canonical pointing on the nerve edge (0,1)
pointing knot_model_pointing();

// text format: one simplex per line, "dim vertex-ids : chain-labels"
filtered_sset parse_filtered(const std::string& text, const poset& base);
std::string filtered_to_string(const filtered_sset& k);

}  // namespace strathom
