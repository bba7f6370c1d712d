#include "strathom/laurent.hpp"

#include <cassert>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace strathom {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("laurent coefficient overflow (mul)");
  }
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("laurent coefficient overflow (add)");
  }
  return r;
}

}  // namespace

void laurent::trim() {
  std::size_t lead = 0;
  while (lead < coeffs.size() && coeffs[lead] == 0) ++lead;
  if (lead == coeffs.size()) {
    coeffs.clear();
    lo = 0;
    return;
  }
  std::size_t tail = coeffs.size();
  while (tail > lead && coeffs[tail - 1] == 0) --tail;
  coeffs = std::vector<std::int64_t>(coeffs.begin() + lead, coeffs.begin() + tail);
  lo += static_cast<int>(lead);
}

std::int64_t laurent::coeff(int exp) const {
  int idx = exp - lo;
  if (idx < 0 || idx >= static_cast<int>(coeffs.size())) return 0;
  return coeffs[idx];
}

laurent laurent::constant(std::int64_t c) { return monomial(c, 0); }

laurent laurent::monomial(std::int64_t c, int exp) {
  laurent p;
  if (c != 0) {
    p.coeffs = {c};
    p.lo = exp;
  }
  return p;
}

bool operator==(const laurent& a, const laurent& b) {
  return a.coeffs == b.coeffs && (a.is_zero() || a.lo == b.lo);
}

laurent operator+(const laurent& a, const laurent& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int lo = std::min(a.lo, b.lo);
  int hi = std::max(a.degree(), b.degree());
  laurent r;
  r.lo = lo;
  r.coeffs.assign(hi - lo + 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    r.coeffs[a.lo - lo + i] = a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i)
    r.coeffs[b.lo - lo + i] = checked_add(r.coeffs[b.lo - lo + i], b.coeffs[i]);
  r.trim();
  return r;
}

laurent operator-(const laurent& a) {
  laurent r = a;
  for (auto& c : r.coeffs) c = -c;
  return r;
}

laurent operator-(const laurent& a, const laurent& b) { return a + (-b); }

laurent operator*(const laurent& a, const laurent& b) {
  if (a.is_zero() || b.is_zero()) return laurent::zero();
  laurent r;
  r.lo = a.lo + b.lo;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      r.coeffs[i + j] =
          checked_add(r.coeffs[i + j], checked_mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  r.trim();
  return r;
}

bool try_exact_div(const laurent& a, const laurent& b, laurent& out) {
  if (b.is_zero()) return false;
  if (a.is_zero()) {
    out = laurent::zero();
    return true;
  }
  // Long division on coefficient arrays; exponent shifts are units, so only
  // the array lengths matter, never the true Laurent degrees.
  std::vector<std::int64_t> rem = a.coeffs;
  const std::int64_t b_lead = b.coeffs.back();
  std::vector<std::int64_t> q;
  int steps = static_cast<int>(a.coeffs.size()) - static_cast<int>(b.coeffs.size());
  if (steps < 0) return false;
  q.assign(steps + 1, 0);
  for (int k = steps; k >= 0; --k) {
    std::int64_t lead = rem[k + b.coeffs.size() - 1];
    if (lead % b_lead != 0) return false;
    std::int64_t f = lead / b_lead;
    q[k] = f;
    if (f != 0) {
      for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
        rem[k + j] -= checked_mul(f, b.coeffs[j]);
      }
    }
  }
  for (std::int64_t c : rem) {
    if (c != 0) return false;
  }
  out.coeffs = std::move(q);
  out.lo = a.lo - b.lo;
  out.trim();
  return true;
}

laurent exact_div(const laurent& a, const laurent& b) {
  laurent out;
  if (!try_exact_div(a, b, out)) {
    throw std::domain_error("exact_div: not divisible");
  }
  return out;
}

std::int64_t eval_int(const laurent& a, std::int64_t t) {
  // Only meaningful when lo >= 0 or t is a unit; callers normalize first.
  std::int64_t acc = 0;
  for (std::size_t i = a.coeffs.size(); i-- > 0;) {
    acc = checked_add(checked_mul(acc, t), a.coeffs[i]);
  }
  for (int k = 0; k < a.lo; ++k) acc = checked_mul(acc, t);
  if (a.lo < 0) throw std::domain_error("eval_int: negative exponent");
  return acc;
}

std::int64_t content(const laurent& a) {
  std::int64_t g = 0;
  for (std::int64_t c : a.coeffs) g = std::gcd(g, c < 0 ? -c : c);
  return g;
}

laurent normalize_alexander(const laurent& a) {
  laurent r = a;
  if (r.is_zero()) return r;
  r.lo = 0;
  if (r.coeffs.back() < 0) {
    for (auto& c : r.coeffs) c = -c;
  }
  return r;
}

laurent reverse(const laurent& a) {
  laurent r;
  r.coeffs.assign(a.coeffs.rbegin(), a.coeffs.rend());
  r.lo = -a.degree();
  if (a.is_zero()) r.lo = 0;
  return r;
}

laurent poly_gcd(laurent a, laurent b) {
  // Primitive PRS over Z[t]; units (t^k, sign) are quotiented away first.
  a = normalize_alexander(a);
  b = normalize_alexander(b);
  std::int64_t ca = content(a), cb = content(b);
  std::int64_t cg = std::gcd(ca, cb);
  auto primitive = [](laurent p) {
    std::int64_t c = content(p);
    if (c > 1) {
      for (auto& x : p.coeffs) x /= c;
    }
    return p;
  };
  if (a.is_zero()) return normalize_alexander(b);
  if (b.is_zero()) return normalize_alexander(a);
  a = primitive(a);
  b = primitive(b);
  while (!b.is_zero()) {
    // pseudo-remainder: lead(b)^k * a mod b
    laurent r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
      std::int64_t lb = b.coeffs.back();
      std::int64_t lr = r.coeffs.back();
      std::int64_t g = std::gcd(lb < 0 ? -lb : lb, lr < 0 ? -lr : lr);
      std::int64_t scale = lb / g;
      if (scale != 1 && scale != -1) {
        laurent s = laurent::constant(scale);
        r = r * s;
        lr = r.coeffs.back();
      }
      laurent m = laurent::monomial(r.coeffs.back() / b.coeffs.back(),
                                    r.degree() - b.degree());
      r = r - m * b;
      r = primitive(r);
      r = normalize_alexander(r);
    }
    a = b;
    b = r;
  }
  a = primitive(a);
  laurent g = a * laurent::constant(cg);
  return normalize_alexander(g);
}

std::string to_string(const laurent& a) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = a.coeffs.size(); i-- > 0;) {
    std::int64_t c = a.coeffs[i];
    if (c == 0) continue;
    int exp = a.lo + static_cast<int>(i);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::int64_t ac = c < 0 ? -c : c;
    if (ac != 1 || exp == 0) out << ac;
    if (exp != 0) {
      if (ac != 1) out << "*";
      out << "t";
      if (exp != 1) out << "^" << exp;
    }
  }
  return out.str();
}

laurent parse_laurent(const std::string& text) {
  // Accepts the to_string format plus liberal whitespace.
  laurent acc = laurent::zero();
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i < text.size() && text.compare(i, 1, "0") == 0 && i + 1 == text.size())
    return acc;
  int sign = 1;
  bool expect_term = true;
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    if (!expect_term) {
      if (text[i] == '+') {
        sign = 1;
      } else if (text[i] == '-') {
        sign = -1;
      } else {
        throw std::invalid_argument("parse_laurent: expected + or -");
      }
      ++i;
      expect_term = true;
      continue;
    }
    if (text[i] == '-') {
      sign = -sign;
      ++i;
      skip_ws();
    } else if (text[i] == '+') {
      ++i;
      skip_ws();
    }
    std::int64_t coef = 1;
    bool saw_num = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coef = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        coef = coef * 10 + (text[i] - '0');
        ++i;
      }
      saw_num = true;
    }
    skip_ws();
    if (i < text.size() && text[i] == '*') {
      ++i;
      skip_ws();
    }
    int exp = 0;
    if (i < text.size() && text[i] == 't') {
      ++i;
      exp = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        int esign = 1;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
          if (text[i] == '-') esign = -1;
          ++i;
        }
        int e = 0;
        bool got = false;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          e = e * 10 + (text[i] - '0');
          ++i;
          got = true;
        }
        if (!got) throw std::invalid_argument("parse_laurent: bad exponent");
        exp = esign * e;
      }
    } else if (!saw_num) {
      throw std::invalid_argument("parse_laurent: expected term");
    }
    acc = acc + laurent::monomial(sign * coef, exp);
    sign = 1;
    expect_term = false;
  }
  if (expect_term) throw std::invalid_argument("parse_laurent: dangling sign");
  return acc;
}

}  // namespace strathom
