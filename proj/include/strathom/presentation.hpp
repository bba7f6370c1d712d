#pragma once

#include <string>
#include <vector>

#include "strathom/snf.hpp"
#include "strathom/word.hpp"

namespace strathom {

struct group_presentation {
  int gens = 0;
  std::vector<word> relators;
};

// Validates letter ranges and returns the presentation with relators freely
// and cyclically reduced, empty relators dropped.
group_presentation tidy(const group_presentation& p);

// Canonical representative of a relator up to cyclic rotation and inversion:
// lexicographic minimum over all rotations of the word and its inverse.
word cyclic_canonical(const word& w);
bool cyclically_equal(const word& a, const word& b);

struct tietze_result {
  group_presentation pres;
  // image of each original generator as a word in the simplified generators
  std::vector<word> images;
};

// Deterministic generator elimination: repeatedly pick the shortest relator
// in which some generator occurs exactly once (ties: earlier relator, then
// lower generator index), solve for that generator and substitute. Relators
// are deduplicated up to rotation and inversion throughout, and emitted in
// canonical cyclic form sorted by length then lexicographically.
tietze_result tietze_simplify(const group_presentation& p);

// exponent matrix: rows = generators, columns = relators
int_matrix relator_matrix(const group_presentation& p);

// (rank, torsion) of the abelianized group via Smith normal form.
abelian_group abelianization(const group_presentation& p);

// Coordinates of a word's class in the abelianization, in the smith basis:
// torsion coordinates reduced mod d_i, free coordinates exact.
std::vector<std::int64_t> h1_class(const group_presentation& p, const word& w);

std::string presentation_to_string(const group_presentation& p);
group_presentation parse_presentation(const std::string& text);

}  // namespace strathom
