#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "logres/cone.hpp"
#include "logres/monideal.hpp"

namespace logres {

// Finite cyclic symmetry of a chart: a primitive character with the given
// order, acting diagonally on ordinary variables and by a lattice character
// on monomials.
struct GroupAction {
  long order = 1;
  std::map<std::string, long> ordinary_weights;  // weight modulo order
  std::vector<long> lattice_weights;             // one per lattice coordinate
};

// Affine logarithmic chart: a polynomial ring on the ordinary variables
// tensored with the monoid algebra of (cone intersect lattice), plus the data
// of named monomials, recorded exceptional divisors and group actions.
struct LogChart {
  std::vector<std::string> ordinary;
  Cone monoid;                                     // pointed
  std::map<std::string, LatticePoint> monomial_names;
  std::vector<LatticePoint> exceptional;           // members of the monoid
  std::vector<GroupAction> actions;

  long nvars() const { return static_cast<long>(ordinary.size()); }
  long rank() const { return monoid.rank; }
  long var_index(const std::string& name) const;
  bool has_name(const std::string& name) const;
};

using ChartPtr = std::shared_ptr<const LogChart>;

// Validates and freezes a chart: unique names across ordinary variables and
// monomials, named points and exceptional points inside the monoid, pointed
// cone, action weight vectors of the right length.
ChartPtr make_chart(LogChart c);

// True when the monoid is free with every basis vector named: the chart ring
// is then an honest polynomial ring.
bool chart_free(const LogChart& c);

// For a free chart, the monomial name of each standard basis vector.
std::vector<std::string> free_basis_names(const LogChart& c);

struct RatPoint {
  std::map<std::string, Rat> ordinary_values;
  std::map<std::string, Rat> monomial_values;
  bool is_origin() const;
  std::string str() const;
};

enum class Tri { False, True, Unknown };

// Isomorphism of charts: a bijection of ordinary variables together with a
// lattice isomorphism of the monoid spans matching cones, exceptional sets
// and action characters.  Falls back to bounded exhaustive search; Unknown
// when the search space exceeds the bound.
Tri chart_isomorphic(const LogChart& a, const LogChart& b);

}  // namespace logres
