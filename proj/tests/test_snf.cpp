#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <random>

#include "strathom/snf.hpp"

using namespace strathom;

namespace {

bool is_diagonal(const int_matrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      if (i != j && m[i][j] != 0) return false;
  return true;
}

void check_smith(const int_matrix& a) {
  smith_form s = smith_normal_form(a);
  REQUIRE(s.u.size() == a.size());
  REQUIRE(s.v.size() == a[0].size());
  CHECK(mat_mul(mat_mul(s.u, a), s.v) == s.d);
  CHECK(is_diagonal(s.d));
  std::int64_t du = mat_det(s.u);
  std::int64_t dv = mat_det(s.v);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
  for (std::size_t i = 0; i < s.diagonal.size(); ++i) {
    CHECK(s.diagonal[i] >= 0);
    CHECK(s.d[i][i] == s.diagonal[i]);
    if (i + 1 < s.diagonal.size() && s.diagonal[i] != 0)
      CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
    if (s.diagonal[i] == 0 && i + 1 < s.diagonal.size())
      CHECK(s.diagonal[i + 1] == 0);
  }
  int nonzero = 0;
  for (std::int64_t d : s.diagonal)
    if (d != 0) ++nonzero;
  CHECK(s.rank == nonzero);
}

}  // namespace

TEST_CASE("matrix helpers") {
  int_matrix id = identity_matrix(3);
  int_matrix a = {{1, 2, 0}, {0, 1, 3}, {4, 0, 1}};
  CHECK(mat_mul(id, a) == a);
  CHECK(mat_mul(a, id) == a);
  CHECK(mat_det(id) == 1);
  CHECK(mat_det(a) == 25);
  CHECK(mat_det({{2, 0}, {0, 3}}) == 6);
  CHECK(mat_det({{0, 1}, {1, 0}}) == -1);
}

TEST_CASE("smith form of fixed examples") {
  smith_form s = smith_normal_form({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
  CHECK(s.diagonal == std::vector<std::int64_t>{2, 2, 156});
  check_smith({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});

  s = smith_normal_form({{1, 0}, {0, 0}});
  CHECK(s.diagonal == std::vector<std::int64_t>{1, 0});
  CHECK(s.rank == 1);

  // wide and tall shapes
  check_smith({{6, 10, 15}});
  check_smith({{6}, {10}, {15}});
  s = smith_normal_form({{6}, {10}, {15}});
  CHECK(s.diagonal == std::vector<std::int64_t>{1});
}

TEST_CASE("smith form on random matrices") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_int_distribution<std::int64_t> entry(-9, 9);
  for (int it = 0; it < 400; ++it) {
    int_matrix a(dim(rng), std::vector<std::int64_t>(dim(rng)));
    for (auto& row : a)
      for (auto& x : row) x = entry(rng);
    check_smith(a);
  }
}

TEST_CASE("cokernel reads off abelian invariants") {
  // <x | x^3> = Z/3
  abelian_group g = cokernel({{3}});
  CHECK(g.free_rank == 0);
  CHECK(g.torsion == std::vector<std::int64_t>{3});

  // Z^2 with no relations
  g = cokernel({{0, 0}, {0, 0}});
  CHECK(g.free_rank == 2);
  CHECK(g.torsion.empty());

  // Z/2 + Z/6 + Z
  g = cokernel({{2, 0, 0}, {0, 6, 0}, {0, 0, 0}});
  CHECK(g.free_rank == 1);
  CHECK(g.torsion == std::vector<std::int64_t>{2, 6});

  // unit diagonal entries are dropped from the torsion list
  g = cokernel({{1, 0}, {0, 4}});
  CHECK(g.free_rank == 0);
  CHECK(g.torsion == std::vector<std::int64_t>{4});
}
