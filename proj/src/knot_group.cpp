#include "strathom/knot_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace strathom {

namespace {

// strand ids in order of the under-passages along the knot: run j starts
// right after the j-th under token
std::vector<int> strand_map(const knot_diagram& d, const diagram_model& m) {
  int total = static_cast<int>(m.seq.size());
  std::vector<int> strand(d.arc_count + 1, -1);
  if (d.is_unknot()) {
    strand[1] = 0;
    return strand;
  }
  std::vector<int> unders;
  for (int t = 0; t < total; ++t) {
    if (!m.seq[t].over) unders.push_back(t);
  }
  int n = static_cast<int>(unders.size());
  for (int j = 0; j < n; ++j) {
    int t = unders[j];
    int stop = unders[(j + 1) % n];
    // a strand always covers at least one arc; with a single under-passage
    // the run wraps the whole circle, so stop == t must give total steps
    int steps = ((stop - t - 1) % total + total) % total + 1;
    for (int s = 0; s < steps; ++s) {
      int arc = (t + 1 + s) % total + 1;
      strand[arc] = j;
    }
  }
  return strand;
}

}  // namespace

wirtinger_presentation wirtinger(const knot_diagram& d) {
  validate(d);
  wirtinger_presentation wp;
  diagram_model m = to_model(d);
  wp.strand_of_arc = strand_map(d, m);
  wp.strands = d.is_unknot() ? 1 : d.n();
  wp.pres.gens = wp.strands;
  for (int i = 0; i < d.n(); ++i) {
    const crossing& c = d.crossings[i];
    int eps = crossing_sign(d, i);
    int u = wp.strand_of_arc[c.a];
    int v = wp.strand_of_arc[c.c];
    int o = wp.strand_of_arc[over_in_arc(d, i)];
    wp.pres.relators.push_back({make_letter(v, -1), make_letter(o, eps),
                                make_letter(u, 1), make_letter(o, -eps)});
  }
  return wp;
}

word longitude(const knot_diagram& d, int base_arc) {
  validate(d);
  if (base_arc < 1 || base_arc > d.arc_count)
    throw std::invalid_argument("longitude: no such arc");
  if (d.is_unknot()) return {};
  diagram_model m = to_model(d);
  std::vector<int> strand = strand_map(d, m);
  int total = static_cast<int>(m.seq.size());
  word out;
  for (int k = 0; k < total; ++k) {
    int t = (base_arc - 1 + k) % total;
    if (m.seq[t].over) continue;
    int c = m.seq[t].crossing;
    out.push_back(make_letter(strand[over_in_arc(d, c)], m.sign[c]));
  }
  // loops compose like functions: a passage met later in the walk acts last,
  // so the product is read against walk order
  std::reverse(out.begin(), out.end());
  int w = writhe(d);
  int mu = strand[base_arc];
  for (int i = 0; i < std::abs(w); ++i) {
    out.push_back(make_letter(mu, w > 0 ? -1 : 1));
  }
  return free_reduce(out);
}

peripheral_system make_peripheral(const knot_diagram& d, int base_arc) {
  peripheral_system ps;
  ps.wp = wirtinger(d);
  if (base_arc < 1 || base_arc > d.arc_count)
    throw std::invalid_argument("peripheral: no such arc");
  ps.base_arc = base_arc;
  ps.meridian = {make_letter(ps.wp.strand_of_arc[base_arc], 1)};
  ps.longitude = longitude(d, base_arc);
  return ps;
}

spi1_diagram stratified_pi1(const knot_diagram& d) {
  spi1_diagram sd;
  sd.leg_to_complement = make_peripheral(d, 1);
  sd.leg_to_stratum = {{0, 1}};
  return sd;
}

}  // namespace strathom
