#pragma once

#include <vector>

#include "strathom/knot_codec.hpp"
#include "strathom/presentation.hpp"
#include "strathom/snf.hpp"
#include "strathom/word.hpp"

namespace strathom {

// Wirtinger presentation on strand generators. A strand is a maximal run of
// arcs not interrupted by an under-passage, so there is one generator per
// over-strand and one conjugation relator per crossing. Relators are kept in
// raw length-4 form; tidy() reduces them when needed.
struct wirtinger_presentation {
  group_presentation pres;
  std::vector<int> strand_of_arc;  // 1-based arc id -> 0-based strand id
  int strands = 1;
};

struct peripheral_system {
  wirtinger_presentation wp;
  word meridian;   // single letter, the strand of the base arc
  word longitude;  // 0-framed longitude, freely reduced, base at base_arc
  int base_arc = 1;
};

// the two-leg diagram out of Z + Z = pi1 of the boundary torus: one leg onto
// the stratum circle (kills the meridian), one into the complement group
struct spi1_diagram {
  peripheral_system leg_to_complement;
  int_matrix leg_to_stratum;  // fixed basis (meridian, longitude): [[0, 1]]
};

wirtinger_presentation wirtinger(const knot_diagram& d);

word longitude(const knot_diagram& d, int base_arc = 1);

peripheral_system make_peripheral(const knot_diagram& d, int base_arc = 1);

spi1_diagram stratified_pi1(const knot_diagram& d);

}  // namespace strathom
