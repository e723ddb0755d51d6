#ifndef OPDL_GROEBNER_HPP
#define OPDL_GROEBNER_HPP

#include <vector>

#include "opdl/poly.hpp"

namespace opdl {

/// Normal form of p against the given divisors (multivariate division).
/// No term of the result is divisible by any divisor's leading monomial,
/// and p minus the result lies in the ideal generated by the divisors.
Poly reduce(const Poly& p, const std::vector<Poly>& basis);

/// Reduced Groebner basis under deglex: Buchberger with the normal pair
/// strategy (smallest lcm first) and the coprime-leading-monomial
/// criterion, followed by minimalization and auto-reduction. Output is
/// monic and sorted by leading monomial ascending, hence unique.
std::vector<Poly> groebner(const std::vector<Poly>& gens);

bool in_ideal(const Poly& p, const std::vector<Poly>& gb);

/// true iff every generator vanishes at the point
bool zero_set_membership(const std::vector<Poly>& basis, const std::vector<Rational>& point);

}  // namespace opdl

#endif
