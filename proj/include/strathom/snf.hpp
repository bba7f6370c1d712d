#pragma once

#include <cstdint>
#include <vector>

namespace strathom {

using int_matrix = std::vector<std::vector<std::int64_t>>;

int_matrix identity_matrix(int n);
int_matrix mat_mul(const int_matrix& a, const int_matrix& b);
std::int64_t mat_det(int_matrix a);

// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ... | dk,
// all diagonal entries >= 0.
struct smith_form {
  int_matrix d;
  int_matrix u;
  int_matrix v;
  int rank = 0;
  // diagonal entries d1..dk (k = min(rows, cols)), including zeros.
  std::vector<std::int64_t> diagonal;
};

smith_form smith_normal_form(const int_matrix& a);

// Cokernel of the column span: free rank plus torsion terms (entries > 1).
struct abelian_group {
  int free_rank = 0;
  std::vector<std::int64_t> torsion;
};

// Cokernel Z^rows / col-span(A), from the smith form of A.
abelian_group cokernel(const int_matrix& a);

}  // namespace strathom
