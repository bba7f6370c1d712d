#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "strathom/alexander.hpp"
#include "strathom/hom_search.hpp"
#include "strathom/knot_codec.hpp"
#include "strathom/knot_group.hpp"
#include "strathom/presentation.hpp"
#include "strathom/symmetric_group.hpp"
#include "strathom/word.hpp"

using namespace strathom;

namespace {

const char* trefoil_pd = "X(4,2,5,1) X(6,4,1,3) X(2,6,3,5)";
const char* figure8_pd = "X(4,2,5,1) X(6,3,7,4) X(8,6,1,5) X(2,7,3,8)";

word random_word(std::mt19937_64& rng, int gens, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(0, gens - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  word w(len(rng));
  for (auto& l : w) l = make_letter(gen(rng), sign(rng) ? 1 : -1);
  return w;
}

// count homs p -> S_n by assigning every generator image independently
std::int64_t brute_hom_count(const group_presentation& p, int n) {
  const sym_group& s = sym_group::get(n);
  std::vector<int> img(p.gens, 0);
  std::int64_t count = 0;
  auto eval = [&](const word& w) {
    int e = s.identity;
    for (int letter : w) {
      int g = img[letter_gen(letter)];
      if (letter < 0) g = s.inverse[g];
      e = s.mult[e][g];
    }
    return e;
  };
  auto rec = [&](auto&& self, int i) -> void {
    if (i == p.gens) {
      for (const word& r : p.relators)
        if (eval(r) != s.identity) return;
      ++count;
      return;
    }
    for (int e = 0; e < s.order(); ++e) {
      img[i] = e;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace

TEST_CASE("symmetric group tables") {
  CHECK(sym_group::get(1).order() == 1);
  CHECK(sym_group::get(2).order() == 2);
  CHECK(sym_group::get(3).order() == 6);
  CHECK(sym_group::get(4).order() == 24);
  CHECK(sym_group::get(5).order() == 120);

  const sym_group& s3 = sym_group::get(3);
  CHECK(s3.perms[s3.identity] == std::vector<int>{0, 1, 2});
  for (int a = 0; a < s3.order(); ++a) {
    CHECK(s3.mult[a][s3.inverse[a]] == s3.identity);
    CHECK(s3.mult[s3.inverse[a]][a] == s3.identity);
    CHECK(s3.mult[a][s3.identity] == a);
  }
  // associativity spot check
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      for (int c = 0; c < 6; ++c)
        CHECK(s3.mult[s3.mult[a][b]][c] == s3.mult[a][s3.mult[b][c]]);

  CHECK(cycle_type_name({0, 1, 2}) == "1+1+1");
  CHECK(cycle_type_name({1, 0, 2}) == "2+1");
  CHECK(cycle_type_name({1, 2, 0}) == "3");
  // class names are the partition strings
  CHECK(s3.class_names[s3.class_of[s3.identity]] == "1+1+1");
}

TEST_CASE("fox derivative product rule") {
  std::mt19937_64 rng(13);
  std::vector<int> phi = {1, 1, 1};
  for (int it = 0; it < 150; ++it) {
    word u = random_word(rng, 3, 6);
    word v = random_word(rng, 3, 6);
    word uv = concat(u, v);
    for (int g = 0; g < 3; ++g) {
      laurent lhs = fox_derivative(uv, g, phi);
      laurent rhs = fox_derivative(u, g, phi) +
                    abelian_image(u, phi) * fox_derivative(v, g, phi);
      CHECK(lhs == rhs);
    }
  }
  // base cases: d/dx(x) = 1, d/dx(x^-1) = -x^-1
  CHECK(fox_derivative({1}, 0, phi) == laurent::constant(1));
  CHECK(fox_derivative({-1}, 0, phi) == laurent::monomial(-1, -1));
  CHECK(fox_derivative({2}, 0, phi).is_zero());
  CHECK(fox_derivative({}, 0, phi).is_zero());
}

TEST_CASE("abelian image") {
  std::vector<int> phi = {1, 2};
  CHECK(abelian_image({1, 2}, phi) == laurent::monomial(1, 3));
  CHECK(abelian_image({1, -2}, phi) == laurent::monomial(1, -1));
  CHECK(abelian_image({}, phi) == laurent::constant(1));
}

TEST_CASE("h1 exponents") {
  knot_diagram d = parse_pd(trefoil_pd);
  peripheral_system ps = make_peripheral(d);
  group_presentation tp = tidy(ps.wp.pres);
  CHECK(h1_exponents(tp, ps.meridian) == std::vector<int>{1, 1, 1});

  // Z x Z abelianization is rejected
  group_presentation free2;
  free2.gens = 2;
  CHECK_THROWS_AS(h1_exponents(free2, {1}), std::domain_error);

  // meridian must generate: x1^2 in Z does not
  group_presentation z;
  z.gens = 1;
  CHECK_THROWS_AS(h1_exponents(z, {1, 1}), std::domain_error);
}

TEST_CASE("alexander fast path equals gcd path") {
  struct fixture {
    const char* pd;
    std::vector<std::int64_t> coeffs;
  };
  const fixture cases[] = {
      {"", {1}},
      {trefoil_pd, {1, -1, 1}},
      {figure8_pd, {1, -3, 1}},
      {"X(6,2,7,1) X(8,4,9,3) X(10,6,1,5) X(2,8,3,7) X(4,10,5,9)", {1, -1, 1, -1, 1}},
      {"X(4,2,5,1) X(8,4,9,3) X(10,6,1,5) X(2,8,3,7) X(6,10,7,9)", {2, -3, 2}},
  };
  for (const fixture& f : cases) {
    peripheral_system ps = make_peripheral(parse_pd(f.pd));
    group_presentation tp = tidy(ps.wp.pres);
    laurent fast = alexander_polynomial(tp, ps.meridian);
    laurent slow = alexander_polynomial_gcd(tp, ps.meridian);
    CHECK(fast == slow);
    CHECK(fast.lo == 0);
    CHECK(fast.coeffs == f.coeffs);
  }
}

TEST_CASE("hom counts match the brute force oracle") {
  struct fixture {
    const char* pd;
    std::int64_t s3_count;
  };
  const fixture cases[] = {
      {"", 6},
      {trefoil_pd, 12},
      {figure8_pd, 6},
  };
  for (const fixture& f : cases) {
    peripheral_system ps = make_peripheral(parse_pd(f.pd));
    group_presentation tp = tidy(ps.wp.pres);
    finite_quotient_signature sig =
        hom_search_serial(tp, 3, ps.meridian, ps.longitude);
    CHECK(sig.target == "S3");
    CHECK(sig.hom_count == f.s3_count);
    CHECK(sig.hom_count == brute_hom_count(tp, 3));
    CHECK(sig.peripheral_commute);
    std::int64_t total = 0;
    for (const auto& kv : sig.peripheral) total += kv.second;
    CHECK(total == sig.hom_count);
  }
}

TEST_CASE("every presentation maps once into S1") {
  peripheral_system ps = make_peripheral(parse_pd(trefoil_pd));
  group_presentation tp = tidy(ps.wp.pres);
  finite_quotient_signature sig = hom_search_serial(tp, 1, ps.meridian, ps.longitude);
  CHECK(sig.hom_count == 1);
  CHECK(sig.target == "S1");
}

TEST_CASE("parallel search equals serial search") {
  for (const char* pd : {trefoil_pd, figure8_pd}) {
    peripheral_system ps = make_peripheral(parse_pd(pd));
    group_presentation tp = tidy(ps.wp.pres);
    for (int n = 1; n <= 4; ++n) {
      finite_quotient_signature a = hom_search(tp, n, ps.meridian, ps.longitude);
      finite_quotient_signature b =
          hom_search_serial(tp, n, ps.meridian, ps.longitude);
      CHECK(a == b);
    }
  }
}

TEST_CASE("hom counts survive tietze simplification") {
  peripheral_system ps = make_peripheral(parse_pd(trefoil_pd));
  group_presentation tp = tidy(ps.wp.pres);
  tietze_result tz = tietze_simplify(tp);
  word mer = substitute(ps.meridian, tz.images);
  word lon = substitute(ps.longitude, tz.images);
  for (int n = 1; n <= 4; ++n) {
    finite_quotient_signature before = hom_search_serial(tp, n, ps.meridian, ps.longitude);
    finite_quotient_signature after = hom_search_serial(tz.pres, n, mer, lon);
    CHECK(before.hom_count == after.hom_count);
    CHECK(before.peripheral == after.peripheral);
  }
}

TEST_CASE("hom search validates its range") {
  group_presentation p;
  p.gens = 1;
  CHECK_THROWS_AS(hom_search_serial(p, 0, {1}, {}), std::invalid_argument);
  CHECK_THROWS_AS(hom_search_serial(p, 6, {1}, {}), std::invalid_argument);
}
