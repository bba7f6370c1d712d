#include "strathom/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace strathom {

namespace {

void check_letters(const group_presentation& p) {
  for (const word& r : p.relators) {
    for (int letter : r) {
      if (letter == 0 || letter_gen(letter) >= p.gens)
        throw std::invalid_argument("presentation: letter out of range");
    }
  }
  if (p.gens < 0) throw std::invalid_argument("presentation: negative gens");
}

}  // namespace

group_presentation tidy(const group_presentation& p) {
  check_letters(p);
  group_presentation out;
  out.gens = p.gens;
  for (const word& r : p.relators) {
    word w = cyclic_reduce(r);
    if (!w.empty()) out.relators.push_back(w);
  }
  return out;
}

word cyclic_canonical(const word& w) {
  word r = cyclic_reduce(w);
  if (r.empty()) return r;
  word best = r;
  for (const word& base : {r, invert(r)}) {
    for (std::size_t i = 0; i < base.size(); ++i) {
      word rot(base.begin() + i, base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + i);
      if (rot < best) best = rot;
    }
  }
  return best;
}

bool cyclically_equal(const word& a, const word& b) {
  return cyclic_canonical(a) == cyclic_canonical(b);
}

namespace {

// replace generator e by word w (in the same indexing), then drop index e
word eliminate_in(const word& r, int e, const word& w) {
  word out;
  for (int letter : r) {
    int g = letter_gen(letter);
    if (g == e) {
      if (letter > 0) {
        out.insert(out.end(), w.begin(), w.end());
      } else {
        word inv = invert(w);
        out.insert(out.end(), inv.begin(), inv.end());
      }
    } else {
      out.push_back(letter);
    }
  }
  for (int& letter : out) {
    int g = letter_gen(letter);
    if (g > e) letter = make_letter(g - 1, letter_exp(letter));
  }
  return free_reduce(out);
}

void dedup_relators(std::vector<word>& relators) {
  std::set<word> seen;
  std::vector<word> kept;
  for (const word& r : relators) {
    word key = cyclic_canonical(r);
    if (key.empty()) continue;
    if (seen.insert(key).second) kept.push_back(key);
  }
  relators = std::move(kept);
}

}  // namespace

tietze_result tietze_simplify(const group_presentation& input) {
  tietze_result res;
  group_presentation p = tidy(input);
  res.images.resize(input.gens);
  for (int g = 0; g < input.gens; ++g) res.images[g] = {make_letter(g, 1)};

  for (;;) {
    dedup_relators(p.relators);
    std::vector<std::size_t> order(p.relators.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return p.relators[a].size() < p.relators[b].size();
    });

    int pick_gen = -1;
    std::size_t pick_rel = 0, pick_pos = 0;
    for (std::size_t oi = 0; oi < order.size() && pick_gen < 0; ++oi) {
      const word& r = p.relators[order[oi]];
      std::map<int, int> count;
      for (int letter : r) count[letter_gen(letter)] += 1;
      for (std::size_t pos = 0; pos < r.size(); ++pos) {
        int g = letter_gen(r[pos]);
        if (count[g] != 1) continue;
        if (pick_gen < 0 || g < pick_gen) {
          pick_gen = g;
          pick_rel = order[oi];
          pick_pos = pos;
        }
      }
    }
    if (pick_gen < 0) break;

    const word r = p.relators[pick_rel];
    // r = u * e^eps * v  =>  e^eps = u^-1 v^-1
    word u(r.begin(), r.begin() + pick_pos);
    word v(r.begin() + pick_pos + 1, r.end());
    int eps = letter_exp(r[pick_pos]);
    // repl is in the pre-elimination indexing and never mentions pick_gen;
    // eliminate_in reindexes everything past the dropped generator.
    word repl = concat(invert(u), invert(v));
    if (eps < 0) repl = invert(repl);

    std::vector<word> next;
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      if (i == pick_rel) continue;
      word w = eliminate_in(p.relators[i], pick_gen, repl);
      w = cyclic_reduce(w);
      if (!w.empty()) next.push_back(w);
    }
    p.relators = std::move(next);
    p.gens -= 1;
    for (word& img : res.images) {
      img = eliminate_in(img, pick_gen, repl);
    }
  }

  dedup_relators(p.relators);
  std::stable_sort(p.relators.begin(), p.relators.end(),
                   [](const word& a, const word& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return a < b;
                   });
  res.pres = std::move(p);
  return res;
}

int_matrix relator_matrix(const group_presentation& p) {
  check_letters(p);
  int_matrix m(p.gens, std::vector<std::int64_t>(p.relators.size(), 0));
  for (std::size_t j = 0; j < p.relators.size(); ++j) {
    for (int letter : p.relators[j]) {
      m[letter_gen(letter)][j] += letter_exp(letter);
    }
  }
  return m;
}

abelian_group abelianization(const group_presentation& p) {
  if (p.gens == 0) return {};
  return cokernel(relator_matrix(p));
}

std::vector<std::int64_t> h1_class(const group_presentation& p, const word& w) {
  smith_form s = smith_normal_form(relator_matrix(p));
  std::vector<int> x = exponent_sums(w, p.gens);
  std::vector<std::int64_t> y(p.gens, 0);
  for (int i = 0; i < p.gens; ++i) {
    for (int j = 0; j < p.gens; ++j) y[i] += s.u[i][j] * x[j];
  }
  for (int i = 0; i < p.gens; ++i) {
    if (i < static_cast<int>(s.diagonal.size()) && s.diagonal[i] != 0) {
      std::int64_t d = s.diagonal[i];
      y[i] = ((y[i] % d) + d) % d;
    }
  }
  return y;
}

std::string presentation_to_string(const group_presentation& p) {
  std::ostringstream out;
  out << "gens: " << p.gens << "\n";
  for (const word& r : p.relators) {
    out << "rel: " << word_to_string(r) << "\n";
  }
  return out.str();
}

group_presentation parse_presentation(const std::string& text) {
  group_presentation p;
  std::istringstream in(text);
  std::string line;
  bool have_gens = false;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "gens:") {
      if (have_gens) throw std::invalid_argument("presentation: duplicate gens line");
      if (!(ls >> p.gens) || p.gens < 0)
        throw std::invalid_argument("presentation: bad gens count");
      have_gens = true;
    } else if (head == "rel:") {
      if (!have_gens)
        throw std::invalid_argument("presentation: rel before gens");
      std::string rest;
      std::getline(ls, rest);
      p.relators.push_back(parse_word(rest, p.gens));
    } else {
      throw std::invalid_argument("presentation: unknown line '" + head + "'");
    }
  }
  if (!have_gens) throw std::invalid_argument("presentation: missing gens line");
  return p;
}

}  // namespace strathom
