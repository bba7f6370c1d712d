#include "strathom/snf.hpp"

#include <cassert>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace strathom {

int_matrix identity_matrix(int n) {
  int_matrix m(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

int_matrix mat_mul(const int_matrix& a, const int_matrix& b) {
  int n = static_cast<int>(a.size());
  int k = n ? static_cast<int>(a[0].size()) : 0;
  int m = b.empty() ? 0 : static_cast<int>(b[0].size());
  assert(k == static_cast<int>(b.size()));
  int_matrix r(n, std::vector<std::int64_t>(m, 0));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (int j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

std::int64_t mat_det(int_matrix a) {
  // Fraction-free Bareiss; exact over Z.
  int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  std::int64_t prev = 1;
  std::int64_t sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

namespace {

struct snf_state {
  int_matrix a, u, v;
  int rows, cols;

  void row_swap(int i, int j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  }
  void col_swap(int i, int j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
  }
  // row i -= q * row j
  void row_sub(int i, int j, std::int64_t q) {
    for (int c = 0; c < cols; ++c) a[i][c] -= q * a[j][c];
    for (int c = 0; c < rows; ++c) u[i][c] -= q * u[j][c];
  }
  // col i -= q * col j
  void col_sub(int i, int j, std::int64_t q) {
    for (int r = 0; r < rows; ++r) a[r][i] -= q * a[r][j];
    for (int r = 0; r < cols; ++r) v[r][i] -= q * v[r][j];
  }
  void row_negate(int i) {
    for (int c = 0; c < cols; ++c) a[i][c] = -a[i][c];
    for (int c = 0; c < rows; ++c) u[i][c] = -u[i][c];
  }
};

}  // namespace

smith_form smith_normal_form(const int_matrix& input) {
  snf_state s;
  s.a = input;
  s.rows = static_cast<int>(input.size());
  s.cols = s.rows ? static_cast<int>(input[0].size()) : 0;
  for (const auto& row : input) {
    if (static_cast<int>(row.size()) != s.cols)
      throw std::invalid_argument("smith_normal_form: ragged matrix");
  }
  s.u = identity_matrix(s.rows);
  s.v = identity_matrix(s.cols);

  int k = 0;
  int limit = std::min(s.rows, s.cols);
  while (k < limit) {
    // smallest nonzero entry in the trailing block becomes the pivot
    int pi = -1, pj = -1;
    std::int64_t best = 0;
    for (int i = k; i < s.rows; ++i)
      for (int j = k; j < s.cols; ++j) {
        std::int64_t v = s.a[i][j] < 0 ? -s.a[i][j] : s.a[i][j];
        if (v != 0 && (pi < 0 || v < best)) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    if (pi != k) s.row_swap(k, pi);
    if (pj != k) s.col_swap(k, pj);
    if (s.a[k][k] < 0) s.row_negate(k);

    bool dirty = false;
    for (int i = k + 1; i < s.rows; ++i) {
      if (s.a[i][k] == 0) continue;
      std::int64_t q = s.a[i][k] / s.a[k][k];
      s.row_sub(i, k, q);
      if (s.a[i][k] != 0) dirty = true;
    }
    for (int j = k + 1; j < s.cols; ++j) {
      if (s.a[k][j] == 0) continue;
      std::int64_t q = s.a[k][j] / s.a[k][k];
      s.col_sub(j, k, q);
      if (s.a[k][j] != 0) dirty = true;
    }
    if (dirty) continue;  // remainders left; pick a smaller pivot next pass

    // divisibility: pivot must divide the whole trailing block
    bool fixed = false;
    for (int i = k + 1; i < s.rows && !fixed; ++i)
      for (int j = k + 1; j < s.cols && !fixed; ++j) {
        if (s.a[i][j] % s.a[k][k] != 0) {
          s.row_sub(k, i, -1);  // fold row i into the pivot row
          fixed = true;
        }
      }
    if (fixed) continue;
    ++k;
  }

  smith_form out;
  out.d = s.a;
  out.u = s.u;
  out.v = s.v;
  out.rank = k;
  out.diagonal.assign(limit, 0);
  for (int i = 0; i < limit; ++i) out.diagonal[i] = s.a[i][i];
  return out;
}

abelian_group cokernel(const int_matrix& a) {
  abelian_group g;
  int rows = static_cast<int>(a.size());
  if (rows == 0) return g;
  smith_form s = smith_normal_form(a);
  g.free_rank = rows - s.rank;
  for (std::int64_t d : s.diagonal) {
    if (d > 1) g.torsion.push_back(d);
  }
  return g;
}

}  // namespace strathom
