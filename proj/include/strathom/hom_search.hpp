#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "strathom/presentation.hpp"
#include "strathom/symmetric_group.hpp"
#include "strathom/word.hpp"

namespace strathom {

struct finite_quotient_signature {
  std::string target;  // "S3".."S5"
  std::int64_t hom_count = 0;
  // multiset of (class(rho(meridian)), class(rho(longitude))) pairs,
  // keyed by class names, value = multiplicity
  std::map<std::pair<std::string, std::string>, std::int64_t> peripheral;
  // every found hom satisfies [rho(m), rho(l)] = 1
  bool peripheral_commute = true;
};

bool operator==(const finite_quotient_signature& a,
                const finite_quotient_signature& b);

// Exhaustive backtracking over generator images in S_n. Generators are
// assigned in order of first appearance in shortest relators; a relator is
// checked as soon as its support is fully assigned.
finite_quotient_signature hom_search_serial(const group_presentation& p, int n,
                                            const word& meridian,
                                            const word& longitude);

// Same search, root branches (images of the first generator) evaluated in
// parallel. Results are aggregated order-independently and match
// hom_search_serial exactly.
finite_quotient_signature hom_search(const group_presentation& p, int n,
                                     const word& meridian,
                                     const word& longitude);

}  // namespace strathom
