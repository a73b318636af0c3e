#pragma once

namespace logres {

// Engine-wide resource bounds and policy switches.  All defaults are chosen
// for desk-scale inputs; every bound is adjustable at runtime.
struct Limits {
  // hilbert_basis: the enumeration box is factor * max|generator coordinate|
  // per coordinate, measured in the coordinates of the span of the cone.  The
  // factor is raised to the cone dimension when the dimension exceeds it,
  // since irreducible elements are only guaranteed to lie inside the
  // dimension-scaled zonotope box.
  long hilbert_box_factor = 3;
  // Upper bound on the number of box points hilbert_basis may enumerate.
  long hilbert_enum_max = 4000000;

  // graded_piece: bound on the number of product generators expanded.
  long graded_generator_bound = 1000000;
  // coefficient_ideal refuses orders above this bound.
  unsigned literal_coeff_bound = 6;

  long gb_max_basis = 10000;
  long gb_max_degree = 64;

  // Maximal-contact normalization: the triangular cleanup loop gives up when
  // the tail order exceeds jet_factor * max generator degree * order.
  long jet_factor = 2;
  // When set, a truncated cleanup is accepted and flagged instead of raising.
  bool approx_jet = false;

  // Reverses the maximal-contact candidate preference (used by independence
  // tests).
  bool reverse_tiebreak = false;

  // Cross-check the presentation engine against the literal one when the
  // orders involved keep the literal expansion feasible.
  bool cross_check = true;

  int valuation_samples = 200;
  long valuation_weight_max = 8;
  unsigned long long seed = 20260814ULL;

  int max_steps = 32;
  int max_blowups_per_step = 64;

  // Axis sweep for extra candidate points: coefficient magnitude cap for the
  // rational-root search, and a cap on reported points per chart.
  long sweep_coeff_limit = 1000000;
  int sweep_point_cap = 16;
};

Limits& limits();

// RAII helper for tests that need to tweak a bound locally.
class LimitsGuard {
 public:
  LimitsGuard();
  ~LimitsGuard();
  LimitsGuard(const LimitsGuard&) = delete;
  LimitsGuard& operator=(const LimitsGuard&) = delete;

 private:
  Limits saved_;
};

}  // namespace logres
