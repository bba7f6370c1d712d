#include "strathom/word.hpp"

#include <sstream>
#include <stdexcept>

namespace strathom {

word free_reduce(const word& w) {
  word out;
  out.reserve(w.size());
  for (int letter : w) {
    if (letter == 0) throw std::invalid_argument("free_reduce: zero letter");
    if (!out.empty() && out.back() == -letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

word invert(const word& w) {
  word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

word concat(const word& a, const word& b) {
  word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

word conjugate(const word& g, const word& w) {
  return concat(concat(g, w), invert(g));
}

word cyclic_reduce(const word& w) {
  word out = free_reduce(w);
  while (out.size() >= 2 && out.front() == -out.back()) {
    out.erase(out.begin());
    out.pop_back();
  }
  return out;
}

bool is_reduced(const word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == -w[i + 1]) return false;
  }
  return true;
}

std::vector<int> exponent_sums(const word& w, int gens) {
  std::vector<int> sums(gens, 0);
  for (int letter : w) {
    int g = letter_gen(letter);
    if (g >= gens) throw std::out_of_range("exponent_sums: letter out of range");
    sums[g] += letter_exp(letter);
  }
  return sums;
}

int total_exponent(const word& w) {
  int t = 0;
  for (int letter : w) t += letter_exp(letter);
  return t;
}

word substitute(const word& w, const std::vector<word>& images) {
  word out;
  for (int letter : w) {
    int g = letter_gen(letter);
    if (g >= static_cast<int>(images.size()))
      throw std::out_of_range("substitute: letter out of range");
    const word& img = images[g];
    if (letter > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      word inv = invert(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_reduce(out);
}

std::string word_to_string(const word& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (int letter : w) {
    if (!first) out << " ";
    first = false;
    if (letter < 0) out << "-";
    out << "x" << (letter_gen(letter) + 1);
  }
  return out.str();
}

word parse_word(const std::string& text, int gens) {
  word out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;  // identity token
    int exp = 1;
    std::size_t p = 0;
    if (tok[p] == '-') {
      exp = -1;
      ++p;
    }
    if (p >= tok.size() || tok[p] != 'x')
      throw std::invalid_argument("parse_word: expected x<k>, got '" + tok + "'");
    ++p;
    if (p >= tok.size()) throw std::invalid_argument("parse_word: missing index");
    int idx = 0;
    for (; p < tok.size(); ++p) {
      if (!std::isdigit(static_cast<unsigned char>(tok[p])))
        throw std::invalid_argument("parse_word: bad index in '" + tok + "'");
      idx = idx * 10 + (tok[p] - '0');
    }
    if (idx < 1 || idx > gens)
      throw std::invalid_argument("parse_word: generator index out of range");
    out.push_back(make_letter(idx - 1, exp));
  }
  return out;
}

}  // namespace strathom
