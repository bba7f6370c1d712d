#include "strathom/hom_search.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace strathom {

bool operator==(const finite_quotient_signature& a,
                const finite_quotient_signature& b) {
  return a.target == b.target && a.hom_count == b.hom_count &&
         a.peripheral == b.peripheral &&
         a.peripheral_commute == b.peripheral_commute;
}

namespace {

struct search_plan {
  const sym_group* g = nullptr;
  int gens = 0;
  std::vector<int> assign_order;        // generator assigned at each depth
  std::vector<int> depth_of_gen;        // inverse of assign_order
  std::vector<word> relators;           // letters rewritten to depth indices
  std::vector<std::vector<int>> ready;  // relators checkable after depth k
  word meridian, longitude;             // letters rewritten to depth indices
};

word rewrite_to_depth(const word& w, const std::vector<int>& depth_of_gen) {
  word out;
  out.reserve(w.size());
  for (int letter : w) {
    out.push_back(make_letter(depth_of_gen[letter_gen(letter)], letter_exp(letter)));
  }
  return out;
}

search_plan make_plan(const group_presentation& input, int n,
                      const word& meridian, const word& longitude) {
  search_plan plan;
  plan.g = &sym_group::get(n);
  group_presentation p = tidy(input);
  plan.gens = p.gens;

  std::vector<std::size_t> rel_order(p.relators.size());
  for (std::size_t i = 0; i < rel_order.size(); ++i) rel_order[i] = i;
  std::stable_sort(rel_order.begin(), rel_order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return p.relators[a].size() < p.relators[b].size();
                   });

  plan.depth_of_gen.assign(p.gens, -1);
  for (std::size_t oi : rel_order) {
    for (int letter : p.relators[oi]) {
      int g = letter_gen(letter);
      if (plan.depth_of_gen[g] < 0) {
        plan.depth_of_gen[g] = static_cast<int>(plan.assign_order.size());
        plan.assign_order.push_back(g);
      }
    }
  }
  for (int g = 0; g < p.gens; ++g) {
    if (plan.depth_of_gen[g] < 0) {
      plan.depth_of_gen[g] = static_cast<int>(plan.assign_order.size());
      plan.assign_order.push_back(g);
    }
  }

  plan.ready.assign(p.gens + 1, {});
  for (std::size_t oi : rel_order) {
    const word& r = p.relators[oi];
    int last = 0;
    for (int letter : r) last = std::max(last, plan.depth_of_gen[letter_gen(letter)] + 1);
    word rewritten = rewrite_to_depth(r, plan.depth_of_gen);
    plan.relators.push_back(rewritten);
    plan.ready[last].push_back(static_cast<int>(plan.relators.size()) - 1);
  }
  for (int letter : meridian) {
    if (letter_gen(letter) >= p.gens)
      throw std::invalid_argument("hom_search: meridian letter out of range");
  }
  for (int letter : longitude) {
    if (letter_gen(letter) >= p.gens)
      throw std::invalid_argument("hom_search: longitude letter out of range");
  }
  plan.meridian = rewrite_to_depth(meridian, plan.depth_of_gen);
  plan.longitude = rewrite_to_depth(longitude, plan.depth_of_gen);
  return plan;
}

int eval_word(const word& w, const std::vector<int>& image, const sym_group& g) {
  int acc = g.identity;
  for (int letter : w) {
    int x = image[letter_gen(letter)];
    if (letter < 0) x = g.inverse[x];
    acc = g.mult[acc][x];
  }
  return acc;
}

struct tally {
  std::int64_t count = 0;
  std::map<std::pair<int, int>, std::int64_t> pairs;  // class-index keyed
  bool commute = true;

  void merge(const tally& o) {
    count += o.count;
    for (const auto& kv : o.pairs) pairs[kv.first] += kv.second;
    commute = commute && o.commute;
  }
};

void dfs(const search_plan& plan, std::vector<int>& image, int depth, tally& out) {
  const sym_group& g = *plan.g;
  if (depth == plan.gens) {
    out.count += 1;
    int m = eval_word(plan.meridian, image, g);
    int l = eval_word(plan.longitude, image, g);
    out.pairs[{g.class_of[m], g.class_of[l]}] += 1;
    if (g.mult[m][l] != g.mult[l][m]) out.commute = false;
    return;
  }
  for (int x = 0; x < g.order(); ++x) {
    image[depth] = x;
    bool ok = true;
    for (int ri : plan.ready[depth + 1]) {
      if (eval_word(plan.relators[ri], image, g) != g.identity) {
        ok = false;
        break;
      }
    }
    if (ok) dfs(plan, image, depth + 1, out);
  }
}

finite_quotient_signature finish(const search_plan& plan, const tally& t, int n) {
  finite_quotient_signature sig;
  sig.target = "S" + std::to_string(n);
  sig.hom_count = t.count;
  sig.peripheral_commute = t.commute;
  for (const auto& kv : t.pairs) {
    sig.peripheral[{plan.g->class_names[kv.first.first],
                    plan.g->class_names[kv.first.second]}] = kv.second;
  }
  return sig;
}

}  // namespace

finite_quotient_signature hom_search_serial(const group_presentation& p, int n,
                                            const word& meridian,
                                            const word& longitude) {
  search_plan plan = make_plan(p, n, meridian, longitude);
  tally t;
  std::vector<int> image(plan.gens, 0);
  dfs(plan, image, 0, t);
  return finish(plan, t, n);
}

finite_quotient_signature hom_search(const group_presentation& p, int n,
                                     const word& meridian,
                                     const word& longitude) {
  search_plan plan = make_plan(p, n, meridian, longitude);
  if (plan.gens == 0) {
    tally t;
    std::vector<int> image;
    dfs(plan, image, 0, t);
    return finish(plan, t, n);
  }
  const sym_group& g = *plan.g;
  std::vector<tally> parts(g.order());
#pragma omp parallel for schedule(dynamic)
  for (int x = 0; x < g.order(); ++x) {
    std::vector<int> image(plan.gens, 0);
    image[0] = x;
    bool ok = true;
    for (int ri : plan.ready[1]) {
      if (eval_word(plan.relators[ri], image, g) != g.identity) {
        ok = false;
        break;
      }
    }
    if (ok) dfs(plan, image, 1, parts[x]);
  }
  tally total;
  for (const tally& t : parts) total.merge(t);
  return finish(plan, total, n);
}

}  // namespace strathom
