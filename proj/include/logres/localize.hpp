#pragma once

#include <optional>

#include "logres/poly.hpp"

namespace logres {

// Result of recentering a chart at a rational point.  Ordinary variables are
// translated; named monomials with nonzero value become translated units (new
// ordinary variables); the lattice is replaced by the quotient modulo the
// support face, presented on a complementary basis.
struct Localization {
  ChartPtr source;
  ChartPtr target;
  RatPoint point;

  // var name -> value subtracted (ordinary translations, nonzero only)
  std::vector<std::pair<std::string, Rat>> ordinary_shift;
  // Basis split of the source lattice: head = support face lattice.
  BasisSplit split;
  // New ordinary variables for the head basis vectors, with their values.
  std::vector<std::pair<std::string, Rat>> unit_vars;

  Poly transport(const Poly& p) const;
  Ideal transport(const Ideal& i) const;
};

// Raises InconsistentPoint when the values violate the lattice relations,
// when a zero-valued monomial lies on the support face, or when the nonzero
// values do not determine the face character.
Localization localize_at(const ChartPtr& chart, const RatPoint& p);

// Exact value of p at the point (zero off the support face).
Rat eval_at(const Poly& p, const RatPoint& pt);

// The substitution record sending every monomial to zero: on polynomials this
// is Poly::kill_monomials.  Provided as an explicit operation for symmetry;
// idempotent by construction.
Poly stratum_restrict(const Poly& p);
Ideal stratum_restrict(const Ideal& i);

}  // namespace logres
