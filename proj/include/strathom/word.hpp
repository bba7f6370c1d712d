#pragma once

#include <string>
#include <vector>

namespace strathom {

// A word in a free group. Letters are nonzero ints: +(g+1) is generator g,
// -(g+1) its inverse (g is a 0-based generator index).
using word = std::vector<int>;

inline int letter_gen(int letter) { return (letter > 0 ? letter : -letter) - 1; }
inline int letter_exp(int letter) { return letter > 0 ? 1 : -1; }
inline int make_letter(int gen, int exp) { return exp > 0 ? gen + 1 : -(gen + 1); }

word free_reduce(const word& w);
word invert(const word& w);
word concat(const word& a, const word& b);
// conjugate: g w g^-1
word conjugate(const word& g, const word& w);
// cyclic reduction of an already freely reduced word
word cyclic_reduce(const word& w);
bool is_reduced(const word& w);

// exponent sum per generator, size = gens
std::vector<int> exponent_sums(const word& w, int gens);
int total_exponent(const word& w);

// substitute images[g] for generator g, then freely reduce
word substitute(const word& w, const std::vector<word>& images);

// "x1 -x3 x2" <-> word; generator g prints as x{g+1}
std::string word_to_string(const word& w);
word parse_word(const std::string& text, int gens);

}  // namespace strathom
