#ifndef OPDL_LINALG_HPP
#define OPDL_LINALG_HPP

#include <vector>

#include "opdl/poly_matrix.hpp"

namespace opdl {

/// Exact rank over the rationals by Gaussian elimination, pivoting on the
/// simplest entry (smallest combined numerator/denominator bit length).
std::size_t rational_rank(RationalMatrix m);

/// true iff v lies in the row space of a
bool row_space_contains(const RationalMatrix& a, const std::vector<Rational>& v);

bool row_spaces_equal(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace opdl

#endif
