#include "strathom/reidemeister.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace strathom {

std::string rmove_name(rmove m) {
  switch (m) {
    case rmove::r1_add: return "R1+";
    case rmove::r1_remove: return "R1-";
    case rmove::r2_add: return "R2+";
    case rmove::r2_remove: return "R2-";
    case rmove::r3: return "R3";
  }
  return "?";
}

namespace {

[[noreturn]] void inapplicable(const std::string& why) {
  throw std::invalid_argument("reidemeister: inapplicable site: " + why);
}

int mod(int a, int m) { return ((a % m) + m) % m; }

// compact crossing ids after removing tokens
knot_diagram rebuild(diagram_model m, const std::set<int>& removed_tokens,
                     const std::set<int>& removed_crossings) {
  diagram_model out;
  std::vector<int> remap(m.sign.size(), -1);
  int next = 0;
  for (int c = 0; c < static_cast<int>(m.sign.size()); ++c) {
    if (!removed_crossings.count(c)) remap[c] = next++;
  }
  for (int t = 0; t < static_cast<int>(m.seq.size()); ++t) {
    if (removed_tokens.count(t)) continue;
    out.seq.push_back(passage{remap[m.seq[t].crossing], m.seq[t].over});
  }
  for (int c = 0; c < static_cast<int>(m.sign.size()); ++c) {
    if (remap[c] >= 0) out.sign.push_back(m.sign[c]);
  }
  return canonical_form(from_model(out));
}

struct found_pair {
  int first = -1, second = -1;  // token positions
  bool ok = false;
};

found_pair token_positions(const diagram_model& m, int crossing) {
  found_pair fp;
  for (int t = 0; t < static_cast<int>(m.seq.size()); ++t) {
    if (m.seq[t].crossing != crossing) continue;
    if (fp.first < 0) {
      fp.first = t;
    } else {
      fp.second = t;
      fp.ok = true;
    }
  }
  return fp;
}

bool cyclically_adjacent(int a, int b, int total) {
  return mod(a + 1, total) == b || mod(b + 1, total) == a;
}

knot_diagram apply_r1_add(const knot_diagram& d, const reid_move& mv) {
  if (mv.curl_sign != 1 && mv.curl_sign != -1) inapplicable("curl sign");
  if (mv.arc_a < 1 || mv.arc_a > d.arc_count) inapplicable("no such arc");
  diagram_model m = to_model(d);
  int cid = static_cast<int>(m.sign.size());
  passage over{cid, true}, under{cid, false};
  std::vector<passage> ins =
      mv.over_first ? std::vector<passage>{over, under}
                    : std::vector<passage>{under, over};
  m.seq.insert(m.seq.begin() + (mv.arc_a - 1), ins.begin(), ins.end());
  m.sign.push_back(mv.curl_sign);
  return canonical_form(from_model(m));
}

knot_diagram apply_r1_remove(const knot_diagram& d, const reid_move& mv) {
  diagram_model m = to_model(d);
  if (mv.cross_a < 0 || mv.cross_a >= d.n()) inapplicable("no such crossing");
  found_pair fp = token_positions(m, mv.cross_a);
  int total = static_cast<int>(m.seq.size());
  if (!fp.ok || !cyclically_adjacent(fp.first, fp.second, total))
    inapplicable("crossing is not a curl");
  return rebuild(m, {fp.first, fp.second}, {mv.cross_a});
}

knot_diagram apply_r2_remove(const knot_diagram& d, const reid_move& mv) {
  diagram_model m = to_model(d);
  int total = static_cast<int>(m.seq.size());
  if (mv.cross_a == mv.cross_b) inapplicable("need two distinct crossings");
  for (int c : {mv.cross_a, mv.cross_b}) {
    if (c < 0 || c >= d.n()) inapplicable("no such crossing");
  }
  int over_a = -1, under_a = -1, over_b = -1, under_b = -1;
  for (int t = 0; t < total; ++t) {
    const passage& p = m.seq[t];
    if (p.crossing == mv.cross_a) (p.over ? over_a : under_a) = t;
    if (p.crossing == mv.cross_b) (p.over ? over_b : under_b) = t;
  }
  if (!cyclically_adjacent(over_a, over_b, total) ||
      !cyclically_adjacent(under_a, under_b, total))
    inapplicable("crossings do not bound a poke bigon");
  if (m.sign[mv.cross_a] == m.sign[mv.cross_b])
    inapplicable("equal signs");
  return rebuild(m, {over_a, over_b, under_a, under_b},
                 {mv.cross_a, mv.cross_b});
}

// first face (in faces() order) containing darts of both arcs, with the
// specific darts picked by position
struct poke_site {
  dart u, v;
  bool ok = false;
};

poke_site find_poke(const knot_diagram& d, int arc_a, int arc_b) {
  poke_site site;
  for (const auto& face : faces(d)) {
    int ia = -1, ib = -1;
    for (int i = 0; i < static_cast<int>(face.size()); ++i) {
      if (face[i].arc == arc_a && ia < 0) ia = i;
      if (face[i].arc == arc_b && ib < 0) ib = i;
    }
    if (ia >= 0 && ib >= 0) {
      site.u = face[ia];
      site.v = face[ib];
      site.ok = true;
      return site;
    }
  }
  return site;
}

knot_diagram apply_r2_add(const knot_diagram& d, const reid_move& mv) {
  if (d.is_unknot()) inapplicable("R2+ needs the two arcs to differ");
  if (mv.arc_a == mv.arc_b) inapplicable("R2+ needs two distinct arcs");
  for (int arc : {mv.arc_a, mv.arc_b}) {
    if (arc < 1 || arc > d.arc_count) inapplicable("no such arc");
  }
  poke_site site = find_poke(d, mv.arc_a, mv.arc_b);
  if (!site.ok) inapplicable("arcs do not cobound a face");
  bool oa = site.u.forward, ob = site.v.forward;
  diagram_model m = to_model(d);
  int x = static_cast<int>(m.sign.size());
  int y = x + 1;
  int sign_x = (oa == ob) ? 1 : -1;
  m.sign.push_back(sign_x);
  m.sign.push_back(-sign_x);
  // tokens inserted in the true direction of each arc
  std::vector<passage> ins_a = oa ? std::vector<passage>{{x, true}, {y, true}}
                                  : std::vector<passage>{{y, true}, {x, true}};
  std::vector<passage> ins_b = ob ? std::vector<passage>{{y, false}, {x, false}}
                                  : std::vector<passage>{{x, false}, {y, false}};
  int pa = mv.arc_a - 1, pb = mv.arc_b - 1;
  if (pa > pb) {
    m.seq.insert(m.seq.begin() + pa, ins_a.begin(), ins_a.end());
    m.seq.insert(m.seq.begin() + pb, ins_b.begin(), ins_b.end());
  } else {
    m.seq.insert(m.seq.begin() + pb, ins_b.begin(), ins_b.end());
    m.seq.insert(m.seq.begin() + pa, ins_a.begin(), ins_a.end());
  }
  return canonical_form(from_model(m));
}

struct triangle {
  int corners[3];     // crossing ids
  int side_arcs[3];   // arcs of the three darts
  bool ok = false;
};

// the (2,1,0) over-pattern: one side over at both end tokens, one under at
// both, the third mixed
bool r3_pattern(const diagram_model& m, const triangle& tri) {
  int total = static_cast<int>(m.seq.size());
  bool has_hi = false, has_lo = false;
  for (int s = 0; s < 3; ++s) {
    int arc = tri.side_arcs[s];
    const passage& p1 = m.seq[mod(arc - 2, total)];
    const passage& p2 = m.seq[arc - 1];
    if (p1.over && p2.over) has_hi = true;
    if (!p1.over && !p2.over) has_lo = true;
  }
  return has_hi && has_lo;
}

std::vector<triangle> triangle_faces(const knot_diagram& d) {
  std::vector<triangle> out;
  diagram_model m = to_model(d);
  for (const auto& face : faces(d)) {
    if (face.size() != 3) continue;
    triangle tri;
    std::set<int> arcs, crossings;
    for (int i = 0; i < 3; ++i) {
      tri.side_arcs[i] = face[i].arc;
      arcs.insert(face[i].arc);
      // corner at the arrival of dart i: its end token's crossing
      int token = face[i].forward ? face[i].arc - 1
                                  : mod(face[i].arc - 2, 2 * d.n());
      tri.corners[i] = m.seq[token].crossing;
      crossings.insert(tri.corners[i]);
    }
    if (arcs.size() != 3 || crossings.size() != 3) continue;
    if (!r3_pattern(m, tri)) continue;
    tri.ok = true;
    out.push_back(tri);
  }
  return out;
}

knot_diagram apply_r3(const knot_diagram& d, const reid_move& mv) {
  std::set<int> want{mv.cross_a, mv.cross_b, mv.cross_c};
  if (want.size() != 3) inapplicable("R3 needs three distinct crossings");
  for (const triangle& tri : triangle_faces(d)) {
    std::set<int> have{tri.corners[0], tri.corners[1], tri.corners[2]};
    if (have != want) continue;
    diagram_model m = to_model(d);
    int total = static_cast<int>(m.seq.size());
    for (int s = 0; s < 3; ++s) {
      int arc = tri.side_arcs[s];
      std::swap(m.seq[mod(arc - 2, total)], m.seq[arc - 1]);
    }
    return canonical_form(from_model(m));
  }
  inapplicable("no R3 triangle on those crossings");
}

}  // namespace

knot_diagram reidemeister(const knot_diagram& d, const reid_move& mv) {
  switch (mv.kind) {
    case rmove::r1_add: return apply_r1_add(d, mv);
    case rmove::r1_remove: return apply_r1_remove(d, mv);
    case rmove::r2_add: return apply_r2_add(d, mv);
    case rmove::r2_remove: return apply_r2_remove(d, mv);
    case rmove::r3: return apply_r3(d, mv);
  }
  inapplicable("unknown move");
}

std::vector<reid_move> enumerate_moves(const knot_diagram& d, rmove kind) {
  std::vector<reid_move> out;
  switch (kind) {
    case rmove::r1_add: {
      for (int arc = 1; arc <= d.arc_count; ++arc) {
        for (bool over_first : {true, false}) {
          for (int s : {1, -1}) {
            reid_move mv;
            mv.kind = kind;
            mv.arc_a = arc;
            mv.over_first = over_first;
            mv.curl_sign = s;
            out.push_back(mv);
          }
        }
      }
      break;
    }
    case rmove::r1_remove: {
      if (d.is_unknot()) break;
      diagram_model m = to_model(d);
      int total = static_cast<int>(m.seq.size());
      for (int c = 0; c < d.n(); ++c) {
        found_pair fp = token_positions(m, c);
        if (fp.ok && cyclically_adjacent(fp.first, fp.second, total)) {
          reid_move mv;
          mv.kind = kind;
          mv.cross_a = c;
          out.push_back(mv);
        }
      }
      break;
    }
    case rmove::r2_add: {
      if (d.is_unknot()) break;
      std::set<std::pair<int, int>> seen;
      for (const auto& face : faces(d)) {
        for (std::size_t i = 0; i < face.size(); ++i) {
          for (std::size_t j = 0; j < face.size(); ++j) {
            if (i == j || face[i].arc == face[j].arc) continue;
            if (!seen.insert({face[i].arc, face[j].arc}).second) continue;
            reid_move mv;
            mv.kind = kind;
            mv.arc_a = face[i].arc;
            mv.arc_b = face[j].arc;
            out.push_back(mv);
          }
        }
      }
      break;
    }
    case rmove::r2_remove: {
      if (d.n() < 2) break;
      diagram_model m = to_model(d);
      int total = static_cast<int>(m.seq.size());
      for (int a = 0; a < d.n(); ++a) {
        for (int b = a + 1; b < d.n(); ++b) {
          if (m.sign[a] == m.sign[b]) continue;
          int over_a = -1, under_a = -1, over_b = -1, under_b = -1;
          for (int t = 0; t < total; ++t) {
            const passage& p = m.seq[t];
            if (p.crossing == a) (p.over ? over_a : under_a) = t;
            if (p.crossing == b) (p.over ? over_b : under_b) = t;
          }
          if (cyclically_adjacent(over_a, over_b, total) &&
              cyclically_adjacent(under_a, under_b, total)) {
            reid_move mv;
            mv.kind = kind;
            mv.cross_a = a;
            mv.cross_b = b;
            out.push_back(mv);
          }
        }
      }
      break;
    }
    case rmove::r3: {
      std::set<std::vector<int>> seen;
      for (const triangle& tri : triangle_faces(d)) {
        std::vector<int> key{tri.corners[0], tri.corners[1], tri.corners[2]};
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) continue;
        reid_move mv;
        mv.kind = kind;
        mv.cross_a = key[0];
        mv.cross_b = key[1];
        mv.cross_c = key[2];
        out.push_back(mv);
      }
      break;
    }
  }
  return out;
}

knot_diagram fuzz_moves(const knot_diagram& d, int k, std::uint64_t seed,
                        std::vector<reid_move>* applied, int grow_cap) {
  std::mt19937_64 rng(seed);
  knot_diagram cur = canonical_form(d);
  const rmove kinds[] = {rmove::r1_add, rmove::r1_remove, rmove::r2_add,
                         rmove::r2_remove, rmove::r3};
  for (int step = 0; step < k; ++step) {
    std::vector<std::vector<reid_move>> pools;
    bool shrink_only = cur.n() >= grow_cap;
    for (rmove kind : kinds) {
      if (shrink_only &&
          (kind == rmove::r1_add || kind == rmove::r2_add))
        continue;
      std::vector<reid_move> moves = enumerate_moves(cur, kind);
      if (!moves.empty()) pools.push_back(std::move(moves));
    }
    if (pools.empty()) {
      // nothing shrinkable and growth capped: fall back to growth
      for (rmove kind : {rmove::r1_add, rmove::r2_add}) {
        std::vector<reid_move> moves = enumerate_moves(cur, kind);
        if (!moves.empty()) pools.push_back(std::move(moves));
      }
    }
    const auto& pool = pools[rng() % pools.size()];
    const reid_move& mv = pool[rng() % pool.size()];
    cur = reidemeister(cur, mv);
    if (applied) applied->push_back(mv);
  }
  return cur;
}

}  // namespace strathom
