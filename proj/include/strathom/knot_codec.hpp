#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace strathom {

// One crossing, slots listed counterclockwise starting from the incoming
// under-strand arc: a = under-in, c = under-out, b/d = the over strand.
struct crossing {
  int a = 0, b = 0, c = 0, d = 0;
  bool operator==(const crossing& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
};

// Arc ids run 1..2n along the oriented knot; arc k's successor is k%2n+1.
// The 0-crossing unknot is the empty crossing list with arc_count 1.
struct knot_diagram {
  std::vector<crossing> crossings;
  int arc_count = 1;

  int n() const { return static_cast<int>(crossings.size()); }
  bool is_unknot() const { return crossings.empty(); }
  bool operator==(const knot_diagram& o) const {
    return crossings == o.crossings && arc_count == o.arc_count;
  }
};

// throws invalid_argument unless every arc occurs exactly twice, under
// strands run a -> succ(a), and the arc cycle is a single loop
void validate(const knot_diagram& d);

// +1 iff the over strand crosses left to right as seen walking a -> c,
// equivalently iff b == succ(d) (over runs d -> b).
int crossing_sign(const knot_diagram& d, int i);
int over_in_arc(const knot_diagram& d, int i);
int over_out_arc(const knot_diagram& d, int i);

int writhe(const knot_diagram& d);

// grammar: whitespace-separated X(a,b,c,d); empty input is the unknot
knot_diagram parse_pd(const std::string& text);
std::string pd_to_string(const knot_diagram& d);

struct gauss_token {
  bool over = false;
  int crossing = 0;  // 1-based label in the code
  int sign = 0;
};
using gauss_code = std::vector<gauss_token>;

// tokens like O1- U2- O3- ...; empty input is the unknot
gauss_code parse_gauss(const std::string& text);
std::string gauss_to_string(const gauss_code& g);
knot_diagram gauss_to_pd(const gauss_code& g);
gauss_code pd_to_gauss(const knot_diagram& d);

// Dowker-Thistlethwaite: even entries, one per odd position; a negative
// entry marks the even passage as the over one. Empty input is the unknot.
std::vector<int> parse_dt(const std::string& text);
std::string dt_to_string(const std::vector<int>& code);
// realization: searches crossing signs (first pinned +) for a sphere
// embedding; deterministic first hit wins, mirror choice is inherent
knot_diagram dt_to_pd(const std::vector<int>& code);
std::vector<int> pd_to_dt(const knot_diagram& d);

// directed arc side; forward = along the knot orientation
struct dart {
  int arc = 0;
  bool forward = true;
  bool operator==(const dart& o) const {
    return arc == o.arc && forward == o.forward;
  }
};

// faces of the sphere embedding via left-hand rotation tracing; each of the
// 4n darts lies on exactly one face
std::vector<std::vector<dart>> faces(const knot_diagram& d);
// Euler check: face count == n + 2
bool is_planar(const knot_diagram& d);
// no face visits a crossing twice; 4-regular plane graphs are bridgeless, so
// a repeated corner is exactly a nugatory crossing
bool is_reduced(const knot_diagram& d);

// arc labels rotated to the lexicographically least sorted crossing list;
// crossings sorted. Stable identity for diagram comparison.
knot_diagram canonical_form(const knot_diagram& d);
bool same_diagram(const knot_diagram& a, const knot_diagram& b);

knot_diagram mirror(const knot_diagram& d);
knot_diagram connected_sum(const knot_diagram& a, const knot_diagram& b);

// traversal model: token t ends arc t+1; moves and codecs are built on it
struct passage {
  int crossing = 0;
  bool over = false;
};
struct diagram_model {
  std::vector<passage> seq;
  std::vector<int> sign;  // per crossing
};
diagram_model to_model(const knot_diagram& d);
knot_diagram from_model(const diagram_model& m);

}  // namespace strathom
