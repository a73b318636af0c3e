#pragma once

#include "logres/derive.hpp"

namespace logres {

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, unsigned e);

// All minimal vectors c (indexed by j = 0..a-1, level weight a-j) with
// sum (a-j)*c_j >= s; minimal means decrementing any positive entry breaks
// the inequality.  support restricts the enumeration to the given levels.
std::vector<std::vector<unsigned>> minimal_weight_vectors(
    unsigned a, unsigned s, const std::vector<unsigned>& support);

// Sum over minimal weight vectors of the products of derivative levels:
// the degree-s piece of the weighted Rees construction on the derivative
// tower of i at order a.  Raises FactorialBlowup past the generator bound.
Ideal graded_piece(const Ideal& i, unsigned a, unsigned s);

// graded_piece followed by restriction to pivot = 0, with the restriction
// pushed through the products (the levels are restricted first, which cuts
// the expansion to the surviving levels only).
Ideal graded_piece_restricted(const Ideal& i, unsigned a, unsigned s,
                              long pivot_idx);

// graded_piece at s = a!.  Raises FactorialBlowup when a exceeds the literal
// bound.
Ideal coefficient_ideal(const Ideal& i, unsigned a);
Ideal coefficient_ideal_restricted(const Ideal& i, unsigned a, long pivot_idx);

// Ideal with a positive rational weight; the associated exponent assigns a
// generator valuation divided by the weight.
struct WeightedFamily {
  std::vector<std::pair<Ideal, Rat>> entries;
};

// Closure of the family under (J, w) -> (D^{<=1} J, w - 1) while w - 1 > 0,
// with duplicate and unit-entry pruning.  Zero entries are dropped.
WeightedFamily family_saturate(const WeightedFamily& f);

}  // namespace logres
