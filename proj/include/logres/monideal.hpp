#pragma once

#include <vector>

#include "logres/cone.hpp"

namespace logres {

// Monomial ideal of a toric monoid: finitely many generators, membership by
// monoid divisibility.  Generators are kept inclusion-minimal.
struct MonIdeal {
  Cone ambient;
  std::vector<LatticePoint> gens;
};

// Validates membership of the generators in the monoid and minimalizes.
MonIdeal make_mon_ideal(Cone ambient, std::vector<LatticePoint> gens);

bool mon_ideal_member(const LatticePoint& v, const MonIdeal& q);

// Largest t >= 0 with v - t*e in the monoid.  Requires v in the monoid and a
// pointed cone (so the exponent is finite for nonzero e).
long mon_ideal_saturate_exponent(const LatticePoint& v, const LatticePoint& e,
                                 const Cone& c);

MonIdeal mon_ideal_dilate(const MonIdeal& q, const Int& k);

bool mon_ideal_equal(const MonIdeal& a, const MonIdeal& b);

}  // namespace logres
