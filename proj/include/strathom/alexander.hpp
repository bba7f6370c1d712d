#pragma once

#include <vector>

#include "strathom/laurent.hpp"
#include "strathom/presentation.hpp"
#include "strathom/word.hpp"

namespace strathom {

// Fox derivative of w with respect to generator g, evaluated under the
// abelianization generator i -> t^phi[i]:  d(uv) = du + ab(u)*dv.
laurent fox_derivative(const word& w, int gen, const std::vector<int>& phi);

// image of w under generator i -> t^phi[i]
laurent abelian_image(const word& w, const std::vector<int>& phi);

// exponents phi with generator i -> t^phi[i] induced by H1 = Z, normalized
// so the meridian maps to t^1. Throws if abelianization is not Z or the
// meridian is not a generator of it.
std::vector<int> h1_exponents(const group_presentation& p, const word& meridian);

// relators x generators matrix of evaluated Fox derivatives
std::vector<std::vector<laurent>> alexander_matrix(const group_presentation& p,
                                                   const std::vector<int>& phi);

laurent laurent_det(std::vector<std::vector<laurent>> m);

// Fast path: single (g-1)x(g-1) minor (drop first redundant relator row if
// square, drop first column), normalized.
laurent alexander_polynomial(const group_presentation& p, const word& meridian);

// Cross-check path: gcd over all (g-1)x(g-1) minors, normalized.
laurent alexander_polynomial_gcd(const group_presentation& p, const word& meridian);

}  // namespace strathom
