#pragma once

#include <string>
#include <vector>

#include "strathom/alexander.hpp"
#include "strathom/hom_search.hpp"
#include "strathom/knot_group.hpp"
#include "strathom/laurent.hpp"
#include "strathom/snf.hpp"

namespace strathom {

struct knot_certificate {
  abelian_group ab;
  bool meridian_generates = false;  // meridian class generates H1
  bool longitude_null = false;      // longitude class is 0 in H1
  laurent alexander;
  std::vector<finite_quotient_signature> quotients;  // S3 .. S_depth
  int depth = 5;
};

// full pipeline: Wirtinger -> homology checks -> Alexander (one-minor path)
// -> Tietze-simplified hom search into S3..S_depth with mapped peripherals.
// depth in [1,5]; depth < 3 means no finite quotients are searched.
knot_certificate certificate(const knot_diagram& d, int depth = 5);

// canonical JSON: sorted object keys, polynomial as coefficient array from
// exponent 0 upward; bit-exact across runs
std::string certificate_json(const knot_certificate& c);

struct comparison_verdict {
  bool distinct = false;
  std::string witness;              // set when distinct: first differing field
  std::vector<std::string> levels;  // set when indistinguishable: levels tested
};

// fixed comparison order: alexander, then quotient counts per target, then
// peripheral signatures per target. Distinct is sound for knot inequivalence;
// Indistinguishable proves nothing. Peripheral signatures are compared up to
// longitude inversion, which is the identity on cycle-type classes.
comparison_verdict compare(const knot_certificate& a, const knot_certificate& b);

std::string verdict_to_string(const comparison_verdict& v);

}  // namespace strathom
