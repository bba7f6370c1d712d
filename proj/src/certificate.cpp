#include "strathom/certificate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace strathom {

namespace {

// positions that are free coordinates of the cokernel in SNF coordinates
std::vector<int> free_positions(const smith_form& s, int gens) {
  std::vector<int> out;
  for (int i = 0; i < gens; ++i) {
    if (i >= static_cast<int>(s.diagonal.size()) || s.diagonal[i] == 0)
      out.push_back(i);
  }
  return out;
}

}  // namespace

knot_certificate certificate(const knot_diagram& d, int depth) {
  if (depth < 1 || depth > 5)
    throw std::invalid_argument("certificate: depth must be in [1,5]");
  knot_certificate cert;
  cert.depth = depth;

  peripheral_system ps = make_peripheral(d, 1);
  group_presentation pres = tidy(ps.wp.pres);
  cert.ab = abelianization(pres);

  smith_form s = smith_normal_form(relator_matrix(pres));
  std::vector<int> frees = free_positions(s, pres.gens);
  std::vector<std::int64_t> ym = h1_class(pres, ps.meridian);
  std::vector<std::int64_t> yl = h1_class(pres, ps.longitude);
  bool meridian_ok = cert.ab.free_rank == 1 && cert.ab.torsion.empty() &&
                     frees.size() == 1;
  for (int i = 0; meridian_ok && i < pres.gens; ++i) {
    if (i == frees[0]) {
      if (std::abs(ym[i]) != 1) meridian_ok = false;
    } else if (ym[i] != 0) {
      meridian_ok = false;
    }
  }
  cert.meridian_generates = meridian_ok;
  cert.longitude_null =
      std::all_of(yl.begin(), yl.end(), [](std::int64_t v) { return v == 0; });

  cert.alexander = alexander_polynomial(pres, ps.meridian);

  if (depth >= 3) {
    tietze_result tz = tietze_simplify(pres);
    word m = substitute(ps.meridian, tz.images);
    word l = substitute(ps.longitude, tz.images);
    for (int n = 3; n <= depth; ++n) {
      cert.quotients.push_back(hom_search(tz.pres, n, m, l));
    }
  }
  return cert;
}

std::string certificate_json(const knot_certificate& c) {
  nlohmann::json j;
  j["abelianization"] = {{"rank", c.ab.free_rank}, {"torsion", c.ab.torsion}};
  j["alexander"] = c.alexander.coeffs;
  j["depth"] = c.depth;
  j["peripheral"] = {{"longitude_null", c.longitude_null},
                     {"meridian_generates", c.meridian_generates}};
  nlohmann::json qs = nlohmann::json::array();
  for (const finite_quotient_signature& q : c.quotients) {
    nlohmann::json sig;
    for (const auto& [key, count] : q.peripheral) {
      sig[key.first + "|" + key.second] = count;
    }
    qs.push_back({{"commute", q.peripheral_commute},
                  {"count", q.hom_count},
                  {"signature", sig},
                  {"target", q.target}});
  }
  j["quotients"] = qs;
  return j.dump();
}

comparison_verdict compare(const knot_certificate& a, const knot_certificate& b) {
  comparison_verdict v;
  if (a.alexander.lo != b.alexander.lo ||
      a.alexander.coeffs != b.alexander.coeffs) {
    v.distinct = true;
    v.witness = "alexander";
    return v;
  }
  int common = std::min(a.depth, b.depth);
  for (int n = 3; n <= common; ++n) {
    const finite_quotient_signature& qa = a.quotients[n - 3];
    const finite_quotient_signature& qb = b.quotients[n - 3];
    if (qa.hom_count != qb.hom_count) {
      v.distinct = true;
      v.witness = "quotient_count:" + qa.target;
      return v;
    }
  }
  for (int n = 3; n <= common; ++n) {
    const finite_quotient_signature& qa = a.quotients[n - 3];
    const finite_quotient_signature& qb = b.quotients[n - 3];
    // cycle types are closed under inversion, so the longitude-inversion
    // symmetry is already folded into the class names
    if (qa.peripheral != qb.peripheral) {
      v.distinct = true;
      v.witness = "peripheral_signature:" + qa.target;
      return v;
    }
  }
  v.levels.push_back("alexander");
  for (int n = 3; n <= common; ++n) {
    v.levels.push_back("S" + std::to_string(n));
  }
  return v;
}

std::string verdict_to_string(const comparison_verdict& v) {
  std::ostringstream out;
  if (v.distinct) {
    out << "Distinct(" << v.witness << ")";
  } else {
    out << "Indistinguishable(";
    for (std::size_t i = 0; i < v.levels.size(); ++i) {
      if (i) out << ",";
      out << v.levels[i];
    }
    out << ")";
  }
  return out.str();
}

}  // namespace strathom
