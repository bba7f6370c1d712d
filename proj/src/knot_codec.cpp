#include "strathom/knot_codec.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace strathom {

namespace {

int succ(int arc, int arc_count) { return arc % arc_count + 1; }

}  // namespace

void validate(const knot_diagram& d) {
  if (d.is_unknot()) {
    if (d.arc_count != 1)
      throw std::invalid_argument("diagram: unknot must have arc_count 1");
    return;
  }
  int n = d.n();
  if (d.arc_count != 2 * n)
    throw std::invalid_argument("diagram: arc_count must be 2n");
  std::vector<int> uses(2 * n + 1, 0);
  for (const crossing& x : d.crossings) {
    for (int arc : {x.a, x.b, x.c, x.d}) {
      if (arc < 1 || arc > 2 * n)
        throw std::invalid_argument("diagram: arc id out of range");
      uses[arc] += 1;
    }
  }
  for (int arc = 1; arc <= 2 * n; ++arc) {
    if (uses[arc] != 2)
      throw std::invalid_argument("diagram: arc " + std::to_string(arc) +
                                  " appears " + std::to_string(uses[arc]) +
                                  " times, expected 2");
  }
  // role balance: each arc is incoming exactly once and outgoing exactly once
  std::vector<int> in_count(2 * n + 1, 0), out_count(2 * n + 1, 0);
  for (int i = 0; i < n; ++i) {
    const crossing& x = d.crossings[i];
    if (x.c != succ(x.a, 2 * n))
      throw std::invalid_argument("diagram: under strand must run a -> succ(a)");
    in_count[x.a] += 1;
    out_count[x.c] += 1;
    in_count[over_in_arc(d, i)] += 1;
    out_count[over_out_arc(d, i)] += 1;
  }
  for (int arc = 1; arc <= 2 * n; ++arc) {
    if (in_count[arc] != 1 || out_count[arc] != 1)
      throw std::invalid_argument("diagram: arc cycle disconnected at arc " +
                                  std::to_string(arc));
  }
}

int crossing_sign(const knot_diagram& d, int i) {
  const crossing& x = d.crossings.at(i);
  int m = d.arc_count;
  bool d_to_b = x.b == succ(x.d, m);
  bool b_to_d = x.d == succ(x.b, m);
  if (d_to_b && b_to_d) {
    // 1-crossing curl: the over strand enters on the slot that is not a
    return x.d != x.a ? +1 : -1;
  }
  if (d_to_b) return +1;
  if (b_to_d) return -1;
  throw std::invalid_argument("diagram: over strand not consecutive at crossing " +
                              std::to_string(i));
}

int over_in_arc(const knot_diagram& d, int i) {
  return crossing_sign(d, i) > 0 ? d.crossings[i].d : d.crossings[i].b;
}

int over_out_arc(const knot_diagram& d, int i) {
  return crossing_sign(d, i) > 0 ? d.crossings[i].b : d.crossings[i].d;
}

int writhe(const knot_diagram& d) {
  int w = 0;
  for (int i = 0; i < d.n(); ++i) w += crossing_sign(d, i);
  return w;
}

knot_diagram parse_pd(const std::string& text) {
  knot_diagram d;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto expect = [&](char c) {
    if (i >= text.size() || text[i] != c)
      throw std::invalid_argument(std::string("pd: expected '") + c + "'");
    ++i;
  };
  auto number = [&]() {
    skip_ws();
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("pd: expected arc id");
    int v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      ++i;
    }
    return v;
  };
  for (;;) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != 'X')
      throw std::invalid_argument("pd: expected X(a,b,c,d) token");
    ++i;
    skip_ws();
    expect('(');
    crossing x;
    x.a = number();
    skip_ws();
    expect(',');
    x.b = number();
    skip_ws();
    expect(',');
    x.c = number();
    skip_ws();
    expect(',');
    x.d = number();
    skip_ws();
    expect(')');
    d.crossings.push_back(x);
  }
  d.arc_count = d.is_unknot() ? 1 : 2 * d.n();
  validate(d);
  return d;
}

std::string pd_to_string(const knot_diagram& d) {
  std::ostringstream out;
  for (int i = 0; i < d.n(); ++i) {
    const crossing& x = d.crossings[i];
    if (i) out << " ";
    out << "X(" << x.a << "," << x.b << "," << x.c << "," << x.d << ")";
  }
  return out.str();
}

diagram_model to_model(const knot_diagram& d) {
  validate(d);
  diagram_model m;
  if (d.is_unknot()) return m;
  int n = d.n();
  m.seq.assign(2 * n, passage{});
  m.sign.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    m.sign[i] = crossing_sign(d, i);
    // token index = incoming arc - 1
    m.seq[d.crossings[i].a - 1] = passage{i, false};
    m.seq[over_in_arc(d, i) - 1] = passage{i, true};
  }
  return m;
}

knot_diagram from_model(const diagram_model& m) {
  knot_diagram d;
  if (m.seq.empty()) return d;
  int total = static_cast<int>(m.seq.size());
  if (total % 2 != 0) throw std::invalid_argument("model: odd token count");
  int n = total / 2;
  if (static_cast<int>(m.sign.size()) != n)
    throw std::invalid_argument("model: sign count mismatch");
  // locate the two passages of each crossing
  std::vector<int> under_pos(n, -1), over_pos(n, -1);
  for (int t = 0; t < total; ++t) {
    const passage& p = m.seq[t];
    if (p.crossing < 0 || p.crossing >= n)
      throw std::invalid_argument("model: crossing id out of range");
    int& slot = p.over ? over_pos[p.crossing] : under_pos[p.crossing];
    if (slot >= 0) throw std::invalid_argument("model: duplicate passage");
    slot = t;
  }
  d.crossings.assign(n, crossing{});
  d.arc_count = total;
  for (int i = 0; i < n; ++i) {
    if (under_pos[i] < 0 || over_pos[i] < 0)
      throw std::invalid_argument("model: crossing missing a passage");
    int u = under_pos[i], o = over_pos[i];
    crossing& x = d.crossings[i];
    x.a = u + 1;
    x.c = succ(u + 1, total);
    int oin = o + 1, oout = succ(o + 1, total);
    if (m.sign[i] > 0) {
      x.d = oin;
      x.b = oout;
    } else {
      x.b = oin;
      x.d = oout;
    }
  }
  validate(d);
  return d;
}

gauss_code parse_gauss(const std::string& text) {
  gauss_code g;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    gauss_token t;
    if (tok.size() < 3)
      throw std::invalid_argument("gauss: token too short '" + tok + "'");
    if (tok[0] == 'O' || tok[0] == 'o') {
      t.over = true;
    } else if (tok[0] == 'U' || tok[0] == 'u') {
      t.over = false;
    } else {
      throw std::invalid_argument("gauss: expected O or U in '" + tok + "'");
    }
    char sgn = tok.back();
    if (sgn == '+') {
      t.sign = 1;
    } else if (sgn == '-') {
      t.sign = -1;
    } else {
      throw std::invalid_argument("gauss: expected trailing sign in '" + tok + "'");
    }
    int id = 0;
    for (std::size_t i = 1; i + 1 < tok.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(tok[i])))
        throw std::invalid_argument("gauss: bad crossing id in '" + tok + "'");
      id = id * 10 + (tok[i] - '0');
    }
    if (id < 1) throw std::invalid_argument("gauss: crossing id must be positive");
    t.crossing = id;
    g.push_back(t);
  }
  return g;
}

std::string gauss_to_string(const gauss_code& g) {
  std::ostringstream out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) out << " ";
    out << (g[i].over ? "O" : "U") << g[i].crossing
        << (g[i].sign > 0 ? "+" : "-");
  }
  return out.str();
}

knot_diagram gauss_to_pd(const gauss_code& g) {
  if (g.empty()) return knot_diagram{};
  diagram_model m;
  std::map<int, int> id_map;
  std::map<int, int> seen_sign;
  std::map<int, std::pair<int, int>> roles;  // id -> (over count, under count)
  for (const gauss_token& t : g) {
    if (!id_map.count(t.crossing)) {
      int next = static_cast<int>(id_map.size());
      id_map[t.crossing] = next;
      m.sign.push_back(t.sign);
      seen_sign[t.crossing] = t.sign;
    } else if (seen_sign[t.crossing] != t.sign) {
      throw std::invalid_argument("gauss: inconsistent signs at crossing " +
                                  std::to_string(t.crossing));
    }
    auto& rc = roles[t.crossing];
    (t.over ? rc.first : rc.second) += 1;
    m.seq.push_back(passage{id_map[t.crossing], t.over});
  }
  for (const auto& kv : roles) {
    if (kv.second.first != 1 || kv.second.second != 1)
      throw std::invalid_argument("gauss: crossing " + std::to_string(kv.first) +
                                  " must appear once over and once under");
  }
  return from_model(m);
}

gauss_code pd_to_gauss(const knot_diagram& d) {
  diagram_model m = to_model(d);
  gauss_code g;
  std::map<int, int> relabel;  // crossing -> 1-based order of first appearance
  for (const passage& p : m.seq) {
    if (!relabel.count(p.crossing))
      relabel[p.crossing] = static_cast<int>(relabel.size()) + 1;
    gauss_token t;
    t.over = p.over;
    t.crossing = relabel[p.crossing];
    t.sign = m.sign[p.crossing];
    g.push_back(t);
  }
  return g;
}

std::vector<int> parse_dt(const std::string& text) {
  std::vector<int> code;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("trailing");
      code.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("dt: bad entry '" + tok + "'");
    }
  }
  for (int v : code) {
    if (v == 0 || v % 2 != 0)
      throw std::invalid_argument("dt: entries must be nonzero even integers");
  }
  return code;
}

std::string dt_to_string(const std::vector<int>& code) {
  std::ostringstream out;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (i) out << " ";
    out << code[i];
  }
  return out.str();
}

knot_diagram dt_to_pd(const std::vector<int>& code) {
  int n = static_cast<int>(code.size());
  if (n == 0) return knot_diagram{};
  if (n > 16)
    throw std::invalid_argument("dt: realization supported up to 16 crossings");
  // positions 1..2n; pair odd position 2i+1 with |code[i]|
  std::vector<int> partner(2 * n + 1, 0);
  std::vector<bool> over_at(2 * n + 1, false);
  std::vector<bool> taken(2 * n + 1, false);
  for (int i = 0; i < n; ++i) {
    int even = std::abs(code[i]);
    if (even > 2 * n || even % 2 != 0 || taken[even])
      throw std::invalid_argument("dt: even entries must be a permutation of 2..2n");
    taken[even] = true;
    int odd = 2 * i + 1;
    partner[odd] = even;
    partner[even] = odd;
    // negative entry: the even passage is the over one
    over_at[even] = code[i] < 0;
    over_at[odd] = code[i] > 0;
  }
  diagram_model m;
  m.seq.assign(2 * n, passage{});
  for (int pos = 1; pos <= 2 * n; ++pos) {
    int odd = pos % 2 == 1 ? pos : partner[pos];  // odd position selects id
    m.seq[pos - 1] = passage{(odd - 1) / 2, over_at[pos]};
  }
  m.sign.assign(n, 1);
  // search sign assignments; crossing 0 pinned to + (mirror freedom)
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    for (int i = 1; i < n; ++i) m.sign[i] = (mask >> (i - 1)) & 1 ? -1 : 1;
    knot_diagram d = from_model(m);
    if (is_planar(d)) return d;
  }
  throw std::invalid_argument("dt: code is not realizable as a planar diagram");
}

std::vector<int> pd_to_dt(const knot_diagram& d) {
  diagram_model m = to_model(d);
  int n = d.n();
  std::vector<int> first_pos(n, 0), second_pos(n, 0);
  for (int t = 0; t < 2 * n; ++t) {
    int c = m.seq[t].crossing;
    (first_pos[c] ? second_pos[c] : first_pos[c]) = t + 1;
  }
  std::vector<int> code(n, 0);
  for (int c = 0; c < n; ++c) {
    int odd = first_pos[c] % 2 ? first_pos[c] : second_pos[c];
    int even = first_pos[c] % 2 ? second_pos[c] : first_pos[c];
    if (odd % 2 != 1 || even % 2 != 0)
      throw std::invalid_argument("dt: crossing passages share parity");
    bool even_over = m.seq[even - 1].over;
    code[(odd - 1) / 2] = even_over ? -even : even;
  }
  return code;
}

namespace {

struct end_ref {
  int crossing = -1;
  int slot = -1;  // 0=a 1=b 2=c 3=d
  bool operator==(const end_ref& o) const {
    return crossing == o.crossing && slot == o.slot;
  }
};

struct embedding {
  std::vector<end_ref> in_end, out_end;  // indexed by arc
};

embedding arc_ends(const knot_diagram& d) {
  embedding e;
  e.in_end.assign(d.arc_count + 1, end_ref{});
  e.out_end.assign(d.arc_count + 1, end_ref{});
  for (int i = 0; i < d.n(); ++i) {
    const crossing& x = d.crossings[i];
    int s = crossing_sign(d, i);
    e.in_end[x.a] = end_ref{i, 0};
    e.out_end[x.c] = end_ref{i, 2};
    if (s > 0) {
      e.in_end[x.d] = end_ref{i, 3};
      e.out_end[x.b] = end_ref{i, 1};
    } else {
      e.in_end[x.b] = end_ref{i, 1};
      e.out_end[x.d] = end_ref{i, 3};
    }
  }
  return e;
}

int arc_at_slot(const crossing& x, int slot) {
  switch (slot) {
    case 0: return x.a;
    case 1: return x.b;
    case 2: return x.c;
    default: return x.d;
  }
}

}  // namespace

std::vector<std::vector<dart>> faces(const knot_diagram& d) {
  validate(d);
  std::vector<std::vector<dart>> out;
  if (d.is_unknot()) {
    out.push_back({dart{1, true}});
    out.push_back({dart{1, false}});
    return out;
  }
  embedding e = arc_ends(d);
  std::set<std::pair<int, bool>> visited;
  for (int arc = 1; arc <= d.arc_count; ++arc) {
    for (bool fwd : {true, false}) {
      if (visited.count({arc, fwd})) continue;
      std::vector<dart> face;
      dart cur{arc, fwd};
      while (!visited.count({cur.arc, cur.forward})) {
        visited.insert({cur.arc, cur.forward});
        face.push_back(cur);
        end_ref arrive = cur.forward ? e.in_end[cur.arc] : e.out_end[cur.arc];
        int next_slot = (arrive.slot + 3) & 3;
        end_ref next_ref{arrive.crossing, next_slot};
        int next_arc = arc_at_slot(d.crossings[arrive.crossing], next_slot);
        // leaving along the next arc: forward if this is its out end
        bool fwd2 = e.out_end[next_arc] == next_ref;
        cur = dart{next_arc, fwd2};
      }
      out.push_back(face);
    }
  }
  return out;
}

bool is_planar(const knot_diagram& d) {
  if (d.is_unknot()) return true;
  return static_cast<int>(faces(d).size()) == d.n() + 2;
}

bool is_reduced(const knot_diagram& d) {
  if (d.is_unknot()) return true;
  embedding e = arc_ends(d);
  for (const auto& f : faces(d)) {
    std::vector<int> corners;
    corners.reserve(f.size());
    for (const dart& dt : f) {
      end_ref arrive = dt.forward ? e.in_end[dt.arc] : e.out_end[dt.arc];
      corners.push_back(arrive.crossing);
    }
    std::sort(corners.begin(), corners.end());
    if (std::adjacent_find(corners.begin(), corners.end()) != corners.end())
      return false;
  }
  return true;
}

knot_diagram canonical_form(const knot_diagram& d) {
  validate(d);
  if (d.is_unknot()) return d;
  int total = d.arc_count;
  std::vector<crossing> best;
  for (int r = 0; r < total; ++r) {
    auto rot = [&](int arc) { return (arc - 1 + r) % total + 1; };
    std::vector<crossing> cand;
    for (const crossing& x : d.crossings) {
      cand.push_back(crossing{rot(x.a), rot(x.b), rot(x.c), rot(x.d)});
    }
    std::sort(cand.begin(), cand.end(), [](const crossing& p, const crossing& q) {
      return std::tie(p.a, p.b, p.c, p.d) < std::tie(q.a, q.b, q.c, q.d);
    });
    if (best.empty()) {
      best = cand;
      continue;
    }
    auto less = [](const std::vector<crossing>& p, const std::vector<crossing>& q) {
      for (std::size_t i = 0; i < p.size(); ++i) {
        auto tp = std::tie(p[i].a, p[i].b, p[i].c, p[i].d);
        auto tq = std::tie(q[i].a, q[i].b, q[i].c, q[i].d);
        if (tp != tq) return tp < tq;
      }
      return false;
    };
    if (less(cand, best)) best = cand;
  }
  knot_diagram out;
  out.crossings = best;
  out.arc_count = total;
  return out;
}

bool same_diagram(const knot_diagram& a, const knot_diagram& b) {
  return canonical_form(a) == canonical_form(b);
}

knot_diagram mirror(const knot_diagram& d) {
  if (d.is_unknot()) return d;
  diagram_model m = to_model(d);
  for (passage& p : m.seq) p.over = !p.over;
  for (int& s : m.sign) s = -s;
  return from_model(m);
}

knot_diagram connected_sum(const knot_diagram& a, const knot_diagram& b) {
  if (a.is_unknot()) return b;
  if (b.is_unknot()) return a;
  diagram_model ma = to_model(a);
  diagram_model mb = to_model(b);
  int shift = static_cast<int>(ma.sign.size());
  for (const passage& p : mb.seq)
    ma.seq.push_back(passage{p.crossing + shift, p.over});
  ma.sign.insert(ma.sign.end(), mb.sign.begin(), mb.sign.end());
  return from_model(ma);
}

}  // namespace strathom
