#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace strathom {

// Laurent polynomial in one variable t with int64 coefficients.
// Invariant: coeffs is empty (zero polynomial) or has nonzero first and
// last entries; coeffs[i] is the coefficient of t^(lo + i).
struct laurent {
  std::vector<std::int64_t> coeffs;
  int lo = 0;

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return lo + static_cast<int>(coeffs.size()) - 1; }
  std::int64_t coeff(int exp) const;
  void trim();

  static laurent zero() { return {}; }
  static laurent constant(std::int64_t c);
  static laurent monomial(std::int64_t c, int exp);
};

bool operator==(const laurent& a, const laurent& b);
laurent operator+(const laurent& a, const laurent& b);
laurent operator-(const laurent& a, const laurent& b);
laurent operator-(const laurent& a);
laurent operator*(const laurent& a, const laurent& b);

// Exact division; aborts if b does not divide a over Z[t, t^-1].
laurent exact_div(const laurent& a, const laurent& b);
bool try_exact_div(const laurent& a, const laurent& b, laurent& out);

std::int64_t eval_int(const laurent& a, std::int64_t t);

// gcd of integer contents, always >= 0.
std::int64_t content(const laurent& a);

// Alexander-style normalization: shift so the lowest exponent is 0 and
// negate if the leading coefficient is negative.
laurent normalize_alexander(const laurent& a);

// mirror image: t -> t^-1.
laurent reverse(const laurent& a);

// gcd in Z[t] up to units, returned in normalized form.
laurent poly_gcd(laurent a, laurent b);

std::string to_string(const laurent& a);
laurent parse_laurent(const std::string& text);

}  // namespace strathom
