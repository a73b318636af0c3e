// Copyright (c) 2026 the logres authors.
// SPDX-License-Identifier: MIT

#include "logres/valuative.hpp"

#include <random>
#include <utility>
#include <vector>

#include "logres/config.hpp"

namespace logres {

namespace {

Val val_min(const Val& a, const Val& b) { return b < a ? b : a; }

// Smallest functional value over the generators of a monomial ideal.
Val mon_ideal_value(const MonVal& nu, const MonIdeal& q) {
  Val best = Val::infinite();
  for (const auto& g : q.gens) best = val_min(best, Val::of(lp_dot_rat(nu.functional, g)));
  return best;
}

}  // namespace

bool operator==(const Val& a, const Val& b) {
  if (a.inf || b.inf) return a.inf == b.inf;
  return a.v == b.v;
}

bool operator<(const Val& a, const Val& b) {
  if (a.inf) return false;
  if (b.inf) return true;
  return a.v < b.v;
}

Val eval_poly(const MonVal& nu, const Poly& p) {
  if (p.is_zero()) return Val::infinite();
  const ChartPtr& c = p.chart();
  if (static_cast<long>(nu.functional.size()) != c->rank())
    throw DimensionMismatch("valuation functional has rank " +
                            std::to_string(nu.functional.size()) +
                            " on a chart of rank " + std::to_string(c->rank()));
  bool first = true;
  Rat best(0);
  for (const auto& [key, coef] : p.terms()) {
    Rat v(0);
    for (long j = 0; j < c->nvars(); ++j) {
      if (key.ord[static_cast<size_t>(j)] == 0) continue;
      auto it = nu.weights.find(c->ordinary[static_cast<size_t>(j)]);
      if (it != nu.weights.end())
        v += Rat(key.ord[static_cast<size_t>(j)]) * it->second;
    }
    v += lp_dot_rat(nu.functional, key.lat);
    if (first || v < best) {
      best = v;
      first = false;
    }
  }
  return Val::of(best);
}

Val eval_ideal(const MonVal& nu, const Ideal& i) {
  if (i.is_zero()) throw ZeroIdeal("valuation of the zero ideal");
  Val best = Val::infinite();
  for (const auto& g : i.gens) best = val_min(best, eval_poly(nu, g));
  return best;
}

Val eval_family(const MonVal& nu, const WeightedFamily& f) {
  Val best = Val::infinite();
  for (const auto& [ideal, w] : f.entries) {
    Val v = eval_ideal(nu, ideal);
    if (!v.inf) v.v /= w;
    best = val_min(best, v);
  }
  return best;
}

Val eval_center(const MonVal& nu, const ReducedCenter& c) {
  ChartSub back = c.normalization.inverse();
  Val best = Val::infinite();
  for (const auto& [name, n] : c.params) {
    Val v = eval_poly(nu, back.apply(Poly::var(c.chart, name)));
    if (!v.inf) v.v /= Rat(n);
    best = val_min(best, v);
  }
  if (c.mon) {
    Val v = mon_ideal_value(nu, c.mon->first);
    if (!v.inf) v.v /= Rat(c.mon->second);
    best = val_min(best, v);
  }
  return best;
}

std::vector<MonVal> sample_valuations(const LogChart& chart, int count,
                                      unsigned long long seed) {
  std::mt19937_64 rng(seed);
  const unsigned long long cap =
      static_cast<unsigned long long>(limits().valuation_weight_max) + 1;

  // Facet normals lifted from span coordinates back to the ambient lattice;
  // their nonnegative combinations are exactly the functionals we sample.
  std::vector<LatticePoint> lifted;
  if (chart.rank() > 0 && !chart.monoid.gens.empty()) {
    const ConeDual& d = cone_dual(chart.monoid);
    for (const auto& n : d.normals) {
      LatticePoint l(static_cast<size_t>(chart.rank()), Int(0));
      for (size_t k = 0; k < n.size(); ++k)
        for (size_t cc = 0; cc < l.size(); ++cc)
          l[cc] += n[k] * d.span_inv[k][cc];
      lifted.push_back(std::move(l));
    }
  }

  std::vector<MonVal> out;
  long rejects = 0;
  while (static_cast<int>(out.size()) < count) {
    MonVal nu;
    bool zero = true;
    for (const auto& name : chart.ordinary) {
      Rat w(static_cast<long>(rng() % cap));
      if (!(w == 0)) zero = false;
      nu.weights[name] = w;
    }
    nu.functional.assign(static_cast<size_t>(chart.rank()), Rat(0));
    for (const auto& l : lifted) {
      long cj = static_cast<long>(rng() % cap);
      if (cj == 0) continue;
      for (size_t cc = 0; cc < l.size(); ++cc)
        nu.functional[cc] += Rat(cj) * Rat(l[cc]);
    }
    for (const auto& f : nu.functional)
      if (!(f == 0)) zero = false;
    if (zero && rejects < 1024) {
      ++rejects;
      continue;
    }
    out.push_back(std::move(nu));
  }
  return out;
}

bool admissible_sample(const ReducedCenter& c, const Rat& ell, const Ideal& i,
                       const std::vector<MonVal>& samples) {
  for (const auto& nu : samples) {
    Val cv = eval_center(nu, c);
    if (cv.inf) continue;
    Val iv = eval_ideal(nu, i);
    if (iv.inf) continue;
    if (iv.v < ell * cv.v) return false;
  }
  return true;
}

bool centers_equal_as_exponents(const ReducedCenter& a, const ReducedCenter& b,
                                const std::vector<MonVal>& samples) {
  if (a.ell != b.ell) return false;
  for (const auto& nu : samples)
    if (!(eval_center(nu, a) == eval_center(nu, b))) return false;
  return true;
}

}  // namespace logres
