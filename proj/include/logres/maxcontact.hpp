#pragma once

#include "logres/coeff.hpp"

namespace logres {

// Derivative ideal one step below the order: its order-one elements are the
// maximal contact candidates.  Raises InfiniteOrder when a is not the finite
// log order of i.
Ideal mc_ideal(const Ideal& i, unsigned a);

struct MaxContact {
  long pivot_idx = -1;
  std::string pivot;
  ChartSub sub;        // automorphism after which the contact is the pivot
  bool approximate = false;  // tail truncated under the approx-jet policy
};

// Picks an order-one candidate from the pool by the configured preference
// (lexicographically last linear variable, then lowest index; reversed under
// the reverse_tiebreak switch).  Returns the pool index, or -1 when no
// candidate has order one.
long choose_contact(const std::vector<Poly>& pool);

// Normalizes g (order one at the origin) to a pure coordinate by an exact
// linear change followed by triangular substitutions.  When the tail stalls
// on a unit factor g = x * unit, the pivot coordinate is returned; the stalk
// ideal is unchanged.  Raises JetTruncationNeeded past the jet bound unless
// the approx-jet policy is on, NoMaxContact when g fails the order
// precondition.
MaxContact normalize_contact(const Poly& g);

// choose + normalize on the order-one generators of mc_ideal(i, a).
MaxContact find_max_contact(const Ideal& i, unsigned a);

}  // namespace logres
