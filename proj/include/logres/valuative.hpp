#pragma once

#include "logres/coeff.hpp"
#include "logres/invariant.hpp"

namespace logres {

// Monomial valuation: nonnegative rational weights on ordinary variables and
// a linear functional on the lattice, nonnegative on the monoid.
struct MonVal {
  std::map<std::string, Rat> weights;
  std::vector<Rat> functional;
};

struct Val {
  bool inf = false;
  Rat v;
  static Val infinite() { return {true, Rat(0)}; }
  static Val of(const Rat& x) { return {false, x}; }
};
bool operator==(const Val& a, const Val& b);
bool operator<(const Val& a, const Val& b);

Val eval_poly(const MonVal& nu, const Poly& p);  // min over terms; inf on 0

// Min over generators; raises ZeroIdeal on the zero ideal.
Val eval_ideal(const MonVal& nu, const Ideal& i);

// Min over entries of value/weight.
Val eval_family(const MonVal& nu, const WeightedFamily& f);

// Min over parameters of value/n_i together with value(Q)/D.
Val eval_center(const MonVal& nu, const ReducedCenter& c);

// Deterministic sample of valuations on the chart: integer weights up to the
// configured cap, functionals assembled from facet normals and rejection
// sampling, seeded.
std::vector<MonVal> sample_valuations(const LogChart& chart, int count,
                                      unsigned long long seed);

// Necessary admissibility condition: ell * center exponent <= ideal value on
// every sample.
bool admissible_sample(const ReducedCenter& c, const Rat& ell, const Ideal& i,
                       const std::vector<MonVal>& samples);

bool centers_equal_as_exponents(const ReducedCenter& a, const ReducedCenter& b,
                                const std::vector<MonVal>& samples);

}  // namespace logres
