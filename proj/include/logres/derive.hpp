#pragma once

#include <optional>

#include "logres/poly.hpp"

namespace logres {

// A basis logarithmic derivation: an ordinary partial derivative or the
// lattice coordinate functional scaling each monomial term by its coordinate.
struct Deriv {
  bool lattice = false;
  long idx = 0;
};

Poly log_derive(const Poly& f, const Deriv& d);

// Ideal generated by all derivatives of the generators of total derivation
// order at most n (order zero included).
Ideal derivative_ideal(const Ideal& i, unsigned n);

// Levels D^{<=0}, ..., D^{<=n}, computed incrementally.
std::vector<Ideal> derivative_tower(const Ideal& i, unsigned n);

struct MonSat {
  bool unit = false;
  std::optional<MonIdeal> ideal;
};

// Monomial saturation, computed termwise: the monomial ideal generated by the
// monoid parts of all terms of all generators; the unit ideal as soon as a
// term has zero monoid part.  Raises ZeroIdeal on the zero ideal.
MonSat monomial_saturation(const Ideal& i);

struct Ord {
  bool inf = false;
  long v = 0;
  bool infinite() const { return inf; }
  static Ord infinity() { return {true, 0}; }
  static Ord of(long x) { return {false, x}; }
};
bool operator==(const Ord& a, const Ord& b);
bool operator<(const Ord& a, const Ord& b);

// Order at the origin of the restriction to the closed log stratum (all
// monomials sent to zero); infinite when the restriction vanishes.  Raises
// ZeroIdeal on the zero ideal.
Ord log_order(const Ideal& i);

}  // namespace logres
