#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "strathom/laurent.hpp"

using namespace strathom;

namespace {

laurent random_laurent(std::mt19937_64& rng, bool allow_zero = false) {
  std::uniform_int_distribution<int> len(allow_zero ? 0 : 1, 5);
  std::uniform_int_distribution<int> coef(-6, 6);
  std::uniform_int_distribution<int> shift(-4, 4);
  laurent p;
  int n = len(rng);
  p.coeffs.assign(n, 0);
  for (auto& c : p.coeffs) c = coef(rng);
  p.lo = shift(rng);
  p.trim();
  return p;
}

}  // namespace

TEST_CASE("construction and trim invariant") {
  CHECK(laurent::zero().is_zero());
  CHECK(laurent::constant(0).is_zero());
  laurent p = laurent::monomial(3, -2);
  CHECK(p.lo == -2);
  CHECK(p.coeffs == std::vector<std::int64_t>{3});
  CHECK(p.degree() == -2);

  laurent q;
  q.coeffs = {0, 0, 1, 2, 0};
  q.lo = -1;
  q.trim();
  CHECK(q.lo == 1);
  CHECK(q.coeffs == std::vector<std::int64_t>{1, 2});

  q.coeffs = {0, 0};
  q.trim();
  CHECK(q.is_zero());
  CHECK(q.lo == 0);
}

TEST_CASE("coeff lookup") {
  laurent p = parse_laurent("t^2 - t + 1");
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == -1);
  CHECK(p.coeff(2) == 1);
  CHECK(p.coeff(3) == 0);
  CHECK(p.coeff(-1) == 0);
}

TEST_CASE("ring identities on random inputs") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    laurent a = random_laurent(rng, true);
    laurent b = random_laurent(rng, true);
    laurent c = random_laurent(rng, true);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == laurent::zero());
    CHECK(a + laurent::zero() == a);
    CHECK(a * laurent::constant(1) == a);
  }
}

TEST_CASE("exact division inverts multiplication") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 300; ++it) {
    laurent a = random_laurent(rng);
    laurent b = random_laurent(rng);
    if (b.is_zero()) continue;
    laurent q;
    REQUIRE(try_exact_div(a * b, b, q));
    CHECK(q == a);
  }
}

TEST_CASE("division by a unit with negative exponents") {
  // exponent shifts are units: true Laurent degree must not matter
  laurent a = parse_laurent("-t^-1 + 2*t^-2");
  laurent q;
  REQUIRE(try_exact_div(a, laurent::constant(1), q));
  CHECK(q == a);
  REQUIRE(try_exact_div(a, laurent::monomial(1, -3), q));
  CHECK(q == parse_laurent("-t^2 + 2*t"));
  CHECK(exact_div(a, a) == laurent::constant(1));
}

TEST_CASE("inexact division is rejected") {
  laurent q;
  CHECK_FALSE(try_exact_div(parse_laurent("t^2 + 1"), parse_laurent("t + 1"), q));
  CHECK_FALSE(try_exact_div(parse_laurent("t"), parse_laurent("2*t"), q));
  CHECK_FALSE(try_exact_div(laurent::constant(1), laurent::zero(), q));
  CHECK(try_exact_div(laurent::zero(), parse_laurent("t + 1"), q));
  CHECK(q.is_zero());
  CHECK_THROWS_AS(exact_div(parse_laurent("t^2 + 1"), parse_laurent("t + 1")),
                  std::domain_error);
}

TEST_CASE("integer evaluation") {
  laurent tre = parse_laurent("t^2 - t + 1");
  CHECK(eval_int(tre, 1) == 1);
  CHECK(eval_int(tre, -1) == 3);
  CHECK(eval_int(tre, 3) == 7);
  CHECK(eval_int(laurent::zero(), 5) == 0);
  CHECK_THROWS_AS(eval_int(laurent::monomial(1, -1), 2), std::domain_error);
}

TEST_CASE("content and normalization") {
  CHECK(content(parse_laurent("6*t^2 - 9*t")) == 3);
  CHECK(content(laurent::zero()) == 0);
  laurent p = laurent::monomial(-2, 5) + laurent::monomial(-4, 7);
  laurent n = normalize_alexander(p);
  CHECK(n.lo == 0);
  CHECK(n.coeffs == std::vector<std::int64_t>{2, 0, 4});
  CHECK(normalize_alexander(laurent::zero()).is_zero());
}

TEST_CASE("reverse is the t -> 1/t substitution") {
  laurent p = parse_laurent("2*t^3 - t + 4");
  laurent r = reverse(p);
  CHECK(r.coeff(-3) == 2);
  CHECK(r.coeff(-1) == -1);
  CHECK(r.coeff(0) == 4);
  CHECK(reverse(r) == p);
  // palindromic polynomials are fixed up to normalization
  laurent tre = parse_laurent("t^2 - t + 1");
  CHECK(normalize_alexander(reverse(tre)) == tre);
}

TEST_CASE("polynomial gcd") {
  laurent g = poly_gcd(parse_laurent("t^2 - 1"), parse_laurent("t^2 + 2*t + 1"));
  CHECK(g == parse_laurent("t + 1"));
  CHECK(poly_gcd(parse_laurent("t + 1"), parse_laurent("t + 2")) ==
        laurent::constant(1));
  CHECK(poly_gcd(parse_laurent("2*t + 2"), parse_laurent("4*t + 4")) ==
        parse_laurent("2*t + 2"));
  CHECK(poly_gcd(laurent::zero(), parse_laurent("-t^2 + t")) ==
        parse_laurent("t - 1"));
  // unit factors (signs, powers of t) are quotiented away
  laurent a = parse_laurent("t^2 - t + 1") * laurent::monomial(-1, -3);
  laurent b = parse_laurent("t^2 - t + 1") * parse_laurent("t + 1");
  CHECK(poly_gcd(a, b) == parse_laurent("t^2 - t + 1"));
}

TEST_CASE("gcd divides both arguments on random inputs") {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int it = 0; it < 120; ++it) {
    laurent a = random_laurent(rng);
    laurent b = random_laurent(rng);
    laurent c = random_laurent(rng);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    laurent g = poly_gcd(a * c, b * c);
    laurent q;
    REQUIRE(try_exact_div(a * c, g, q));
    REQUIRE(try_exact_div(b * c, g, q));
    // the common factor c survives into the gcd
    REQUIRE(try_exact_div(g, normalize_alexander(c), q));
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("printing") {
  CHECK(to_string(laurent::zero()) == "0");
  CHECK(to_string(parse_laurent("t^2 - t + 1")) == "t^2 - t + 1");
  CHECK(to_string(laurent::monomial(2, -2) + laurent::monomial(-1, -1)) ==
        "-t^-1 + 2*t^-2");
  CHECK(to_string(laurent::constant(-7)) == "-7");
  CHECK(to_string(laurent::monomial(1, 1)) == "t");
}

TEST_CASE("parse round trip on random values") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 200; ++it) {
    laurent p = random_laurent(rng, true);
    CHECK(parse_laurent(to_string(p)) == p);
  }
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse_laurent("t^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_laurent("3 +"), std::invalid_argument);
  CHECK_THROWS_AS(parse_laurent("x + 1"), std::invalid_argument);
}

TEST_CASE("coefficient overflow is detected") {
  laurent big = laurent::constant((std::int64_t{1} << 62));
  CHECK_THROWS_AS(big * laurent::constant(4), std::overflow_error);
  CHECK_THROWS_AS(big + big, std::overflow_error);
}
