#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "strathom/word.hpp"

using namespace strathom;

namespace {

word random_word(std::mt19937_64& rng, int gens, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(0, gens - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  word w(len(rng));
  for (auto& l : w) l = make_letter(gen(rng), sign(rng) ? 1 : -1);
  return w;
}

}  // namespace

TEST_CASE("letter encoding") {
  CHECK(make_letter(0, 1) == 1);
  CHECK(make_letter(0, -1) == -1);
  CHECK(make_letter(2, 1) == 3);
  CHECK(letter_gen(3) == 2);
  CHECK(letter_gen(-3) == 2);
  CHECK(letter_exp(3) == 1);
  CHECK(letter_exp(-3) == -1);
}

TEST_CASE("free reduction") {
  CHECK(free_reduce({1, -1}) == word{});
  CHECK(free_reduce({1, 2, -2, -1}) == word{});
  CHECK(free_reduce({1, 2, -2, 3}) == word{1, 3});
  CHECK(free_reduce({1, -2, 2, -1, 1}) == word{1});
  CHECK(free_reduce({}) == word{});
  // reduction cascades through newly adjacent inverse pairs
  CHECK(free_reduce({1, 2, 3, -3, -2, -1, 1}) == word{1});
}

TEST_CASE("invert and concat") {
  word w = {1, -2, 3};
  CHECK(invert(w) == word{-3, 2, -1});
  CHECK(free_reduce(concat(w, invert(w))) == word{});
  CHECK(concat({1, 2}, {3}) == word{1, 2, 3});
  CHECK(invert(word{}) == word{});
}

TEST_CASE("conjugation") {
  CHECK(conjugate({1}, {2}) == word{1, 2, -1});
  // conjugating by the word itself reduces to the word
  CHECK(conjugate({2}, {2, 2}) == word{2, 2});
  CHECK(conjugate(word{}, {1}) == word{1});
}

TEST_CASE("cyclic reduction") {
  CHECK(cyclic_reduce({1, 2, -1}) == word{2});
  // cyclic cancellation cascades: x1 x2^-1 x3 x2 x1^-1 -> x2^-1 x3 x2 -> x3
  CHECK(cyclic_reduce({1, -2, 3, 2, -1}) == word{3});
  CHECK(cyclic_reduce({1, 2}) == word{1, 2});
  CHECK(cyclic_reduce({}) == word{});
}

TEST_CASE("reduction predicates and idempotence") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 300; ++it) {
    word w = random_word(rng, 4, 12);
    word r = free_reduce(w);
    CHECK(is_reduced(r));
    CHECK(free_reduce(r) == r);
    word c = cyclic_reduce(r);
    CHECK(cyclic_reduce(c) == c);
    // cancellation removes opposite exponents, so the sums are unchanged
    CHECK(exponent_sums(w, 4) == exponent_sums(r, 4));
    CHECK(exponent_sums(w, 4) == exponent_sums(c, 4));
  }
  CHECK_FALSE(is_reduced({1, -1}));
  CHECK(is_reduced({1, 1}));
}

TEST_CASE("exponent sums") {
  word w = {1, 1, -2, 3, -1};
  CHECK(exponent_sums(w, 3) == std::vector<int>{1, -1, 1});
  CHECK(total_exponent(w) == 1);
  CHECK(total_exponent(word{}) == 0);
  CHECK(exponent_sums({}, 2) == std::vector<int>{0, 0});
}

TEST_CASE("substitution is a homomorphism") {
  std::vector<word> images = {{2, 1}, {-3}};
  word u = {1, -2};
  word v = {2, 2};
  word lhs = substitute(concat(u, v), images);
  word rhs = free_reduce(concat(substitute(u, images), substitute(v, images)));
  CHECK(lhs == rhs);
  CHECK(substitute({1}, images) == word{2, 1});
  CHECK(substitute({-1}, images) == word{-1, -2});
  CHECK(substitute({1, -1}, images) == word{});
}

TEST_CASE("word printing and parsing") {
  word w = {1, -3, 2};
  CHECK(word_to_string(w) == "x1 -x3 x2");
  CHECK(parse_word("x1 -x3 x2", 3) == w);
  CHECK(word_to_string(word{}) == "1");
  CHECK(parse_word("1", 3) == word{});
  CHECK(parse_word("", 3) == word{});
  CHECK(parse_word("  x2   x2 ", 2) == word{2, 2});
  CHECK_THROWS_AS(parse_word("x4", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("y1", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("x", 2), std::invalid_argument);
  std::mt19937_64 rng(9);
  for (int it = 0; it < 100; ++it) {
    word r = random_word(rng, 5, 10);
    CHECK(parse_word(word_to_string(r), 5) == r);
  }
}
