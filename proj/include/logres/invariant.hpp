#pragma once

#include <optional>

#include "logres/maxcontact.hpp"

namespace logres {

// Resolution invariant: a finite sequence of positive rationals, optionally
// terminated by an infinity marker.  The empty sequence without the marker is
// the invariant of the zero stalk; (0) is the invariant of the unit stalk.
struct InvariantSeq {
  std::vector<Rat> entries;
  bool inf = false;

  static InvariantSeq unit_stalk();  // (0)
  static InvariantSeq zero_stalk();  // ()
  bool is_unit_stalk() const;
  bool is_zero_stalk() const;
  size_t length() const { return entries.size() + (inf ? 1 : 0); }
  std::string str() const;
};

// Entrywise order with infinity largest; on exhaustion the shorter sequence
// is the larger one, so the empty sequence is the maximum.
int inv_compare(const InvariantSeq& a, const InvariantSeq& b);
bool inv_less(const InvariantSeq& a, const InvariantSeq& b);
bool inv_equal(const InvariantSeq& a, const InvariantSeq& b);

// Center attached to the invariant: parameters (coordinates of the normalized
// chart) with positive rational exponents, and an optional monomial part
// (Q, d) standing for the d-th root of the monomial ideal Q.
struct ToroidalCenter {
  ChartPtr chart;          // normalized chart the parameters live on
  ChartSub normalization;  // substitution from the input chart
  std::vector<std::pair<std::string, Rat>> params;  // (variable, exponent)
  std::optional<std::pair<MonIdeal, Int>> mon;
  std::string str() const;
};

// Reduced form: parameters carry positive integer weights n_i with gcd one,
// the monomial part a pair (Q, D); the associated exponent of a valuation is
// min over parameters of value/n_i and value(Q)/D.
struct ReducedCenter {
  ChartPtr chart;
  ChartSub normalization;
  std::vector<std::pair<std::string, Int>> params;
  std::optional<std::pair<MonIdeal, Int>> mon;
  // Scale relating the center to its reduced form: the blowup of the reduced
  // center tests divisibility at exponent ell = a_1 * n_1.
  Int ell = 1;
  std::string str() const;
};

ReducedCenter reduce_center(const ToroidalCenter& c);

struct InvResult {
  InvariantSeq inv;
  ToroidalCenter center;
};

enum class EngineMode { Literal, Presentation, Both };

// Invariant and center at the origin of a localized chart, by direct
// expansion of the coefficient-ideal recursion.  Raises FactorialBlowup when
// the expansion exceeds the configured bounds.
InvResult invariant_literal(const Ideal& i);

// Same contract through the weighted-family presentation loop; cross-checks
// against the literal engine when feasible and raises EngineDisagreement on
// any mismatch.
InvResult invariant_presentation(const Ideal& i);

InvResult invariant_at_origin(const Ideal& i, EngineMode mode);

}  // namespace logres
