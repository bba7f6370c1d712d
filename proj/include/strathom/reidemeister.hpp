#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "strathom/knot_codec.hpp"

namespace strathom {

enum class rmove { r1_add, r1_remove, r2_add, r2_remove, r3 };

std::string rmove_name(rmove m);

// One applicable move. Fields used per kind:
//   r1_add:    arc_a (curl inserted mid-arc), curl_sign, over_first
//   r1_remove: cross_a
//   r2_add:    arc_a pushed over arc_b across a shared face
//   r2_remove: cross_a, cross_b
//   r3:        cross_a, cross_b, cross_c (triangle face corners)
struct reid_move {
  rmove kind = rmove::r1_add;
  int arc_a = 0, arc_b = 0;
  int cross_a = 0, cross_b = 0, cross_c = 0;
  int curl_sign = -1;
  bool over_first = true;
};

// applies the move; throws std::invalid_argument on an inapplicable site.
// Output arcs are renumbered canonically.
knot_diagram reidemeister(const knot_diagram& d, const reid_move& m);

// all applicable sites of one kind, deterministic order
std::vector<reid_move> enumerate_moves(const knot_diagram& d, rmove kind);

// k seeded random applicable moves; identical seed gives identical sequence.
// Crossing growth is steered down once the diagram passes grow_cap.
knot_diagram fuzz_moves(const knot_diagram& d, int k, std::uint64_t seed,
                        std::vector<reid_move>* applied = nullptr,
                        int grow_cap = 14);

}  // namespace strathom
