#pragma once

#include "logres/invariant.hpp"

namespace logres {

// One affine chart of the stack-theoretic weighted toroidal blowup of a
// reduced center.  Parameter charts are indexed by the center parameters,
// monomial charts by the generators of the monomial part.
struct BlowupChart {
  enum class Kind { Param, Mon };
  Kind kind = Kind::Param;
  long index = 0;            // parameter index or monomial-generator index
  ChartPtr chart;            // absent on torsion charts
  LatticePoint u_point;      // lattice point of the new exceptional monomial
  std::map<std::string, Poly> substitution;  // source coordinate -> image
  IMat lattice_map;          // source lattice -> target lattice
  GroupAction action;        // the fresh cyclic action of this chart
  bool torsion = false;      // monomial chart with torsion quotient
  std::string note;
};

// Charts in deterministic order: parameter charts by parameter index, then
// monomial charts by generator order.  The center parameters must be
// coordinates on the source chart (c.chart).  Torsion monomial charts are
// returned as opaque records.  Raises EquivariantUnsupported when an existing
// action does not transport.
std::vector<BlowupChart> blowup_charts(const ReducedCenter& c);

struct TransformResult {
  Ideal total;
  long ell = 0;  // exceptional multiplicity removed by the weak transform
  Ideal weak;
  std::optional<Ideal> proper;
};

// Pullback of the ideal to the chart, the exceptional exponent, the weak
// transform, and the proper transform when computable (principal ideals by
// content division, free charts by saturation).  Raises TorsionMonoid on a
// torsion chart.
TransformResult transform(const Ideal& i, const BlowupChart& bc);

// True when the total transform is divisible by u^ell in every chart of the
// blowup of c.  The ideal must live on c.chart.
bool admissible(const ReducedCenter& c, long ell, const Ideal& i);

// Exceptional order of the monomial x^alpha * chi^m under the blowup of c:
// sum alpha_i * n_i plus the monomial-part order of m.  newton_member tests
// that order against ell.
Int center_exceptional_order(const ReducedCenter& c,
                             const std::vector<long>& alpha,
                             const LatticePoint& m);
bool newton_member(const std::vector<long>& alpha, const LatticePoint& m,
                   const ReducedCenter& c, const Int& ell);

// Checks that the k-th root center produces the same chart rings with action
// orders multiplied by k and the exceptional data scaled consistently.
bool root_rescale_check(const ReducedCenter& c, long k);

}  // namespace logres
