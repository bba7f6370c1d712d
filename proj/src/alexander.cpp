#include "strathom/alexander.hpp"

#include <algorithm>
#include <stdexcept>

namespace strathom {

laurent abelian_image(const word& w, const std::vector<int>& phi) {
  int exp = 0;
  for (int letter : w) exp += letter_exp(letter) * phi[letter_gen(letter)];
  return laurent::monomial(1, exp);
}

laurent fox_derivative(const word& w, int gen, const std::vector<int>& phi) {
  laurent acc = laurent::zero();
  int prefix_exp = 0;
  for (int letter : w) {
    int g = letter_gen(letter);
    int e = letter_exp(letter);
    if (g == gen) {
      // d(x) = 1, d(x^-1) = -x^-1, both multiplied by ab(prefix)
      if (e > 0) {
        acc = acc + laurent::monomial(1, prefix_exp);
      } else {
        acc = acc + laurent::monomial(-1, prefix_exp - phi[g]);
      }
    }
    prefix_exp += e * phi[g];
  }
  return acc;
}

std::vector<int> h1_exponents(const group_presentation& p, const word& meridian) {
  abelian_group ab = abelianization(p);
  if (ab.free_rank != 1 || !ab.torsion.empty())
    throw std::domain_error("alexander: abelianization is not Z");
  smith_form s = smith_normal_form(relator_matrix(p));
  // y = U x; the unique free coordinate is index rank in the smith basis.
  // Generator i's H1 image is row `rank` of U at column i.
  int free_row = s.rank;
  std::vector<int> phi(p.gens, 0);
  for (int i = 0; i < p.gens; ++i)
    phi[i] = static_cast<int>(s.u[free_row][i]);
  int m_exp = 0;
  for (int letter : meridian) m_exp += letter_exp(letter) * phi[letter_gen(letter)];
  if (m_exp == -1) {
    for (int& e : phi) e = -e;
    m_exp = 1;
  }
  if (m_exp != 1)
    throw std::domain_error("alexander: meridian does not generate H1");
  return phi;
}

std::vector<std::vector<laurent>> alexander_matrix(const group_presentation& p,
                                                   const std::vector<int>& phi) {
  std::vector<std::vector<laurent>> m;
  for (const word& r : p.relators) {
    std::vector<laurent> row;
    row.reserve(p.gens);
    for (int g = 0; g < p.gens; ++g) row.push_back(fox_derivative(r, g, phi));
    m.push_back(std::move(row));
  }
  return m;
}

laurent laurent_det(std::vector<std::vector<laurent>> m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return laurent::constant(1);
  // fraction-free Bareiss over Z[t, t^-1]
  laurent prev = laurent::constant(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      int p = -1;
      for (int i = k + 1; i < n; ++i) {
        if (!m[i][k].is_zero()) {
          p = i;
          break;
        }
      }
      if (p < 0) return laurent::zero();
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = laurent::zero();
    }
    prev = m[k][k];
  }
  laurent det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

namespace {

group_presentation prepared(const group_presentation& input) {
  group_presentation p = tidy(input);
  if (p.gens == 0) throw std::domain_error("alexander: no generators");
  return p;
}

std::vector<std::vector<laurent>> minor_rows(const group_presentation& p,
                                             const std::vector<int>& phi) {
  // rows of the Alexander matrix with one redundant relator dropped when the
  // matrix is square; deficiency-1 shape has nothing to drop
  std::vector<std::vector<laurent>> m = alexander_matrix(p, phi);
  int rows = static_cast<int>(m.size());
  if (rows == p.gens) {
    m.erase(m.begin());
  } else if (rows != p.gens - 1) {
    throw std::domain_error("alexander: presentation is not deficiency-1");
  }
  return m;
}

}  // namespace

laurent alexander_polynomial(const group_presentation& input, const word& meridian) {
  group_presentation p = prepared(input);
  std::vector<int> phi = h1_exponents(p, meridian);
  std::vector<std::vector<laurent>> m = minor_rows(p, phi);
  // drop the first column
  std::vector<std::vector<laurent>> minor;
  for (auto& row : m) {
    minor.emplace_back(row.begin() + 1, row.end());
  }
  return normalize_alexander(laurent_det(std::move(minor)));
}

laurent alexander_polynomial_gcd(const group_presentation& input,
                                 const word& meridian) {
  group_presentation p = prepared(input);
  std::vector<int> phi = h1_exponents(p, meridian);
  std::vector<std::vector<laurent>> m = alexander_matrix(p, phi);
  int rows = static_cast<int>(m.size());
  int size = p.gens - 1;
  if (rows < size) throw std::domain_error("alexander: too few relators");

  // all row subsets of size (g-1) crossed with all column drops
  std::vector<int> row_sel(size);
  for (int i = 0; i < size; ++i) row_sel[i] = i;
  laurent g = laurent::zero();
  for (;;) {
    for (int drop_col = 0; drop_col < p.gens; ++drop_col) {
      std::vector<std::vector<laurent>> minor;
      minor.reserve(size);
      for (int i : row_sel) {
        std::vector<laurent> row;
        row.reserve(size);
        for (int j = 0; j < p.gens; ++j) {
          if (j != drop_col) row.push_back(m[i][j]);
        }
        minor.push_back(std::move(row));
      }
      g = poly_gcd(g, laurent_det(std::move(minor)));
    }
    // next combination
    int i = size - 1;
    while (i >= 0 && row_sel[i] == rows - size + i) --i;
    if (i < 0) break;
    row_sel[i] += 1;
    for (int j = i + 1; j < size; ++j) row_sel[j] = row_sel[j - 1] + 1;
  }
  return normalize_alexander(g);
}

}  // namespace strathom
