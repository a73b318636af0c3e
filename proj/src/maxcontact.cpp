// Copyright (c) 2026 the logres authors.
// SPDX-License-Identifier: MIT

#include "logres/maxcontact.hpp"

#include <string>

#include "logres/config.hpp"
#include "logres/derive.hpp"

namespace logres {

namespace {

// Ordinary variables carrying a pure linear term (degree one, trivial monoid
// part) of p, in chart order.
std::vector<long> linear_vars(const Poly& p) {
  std::vector<long> out;
  const ChartPtr& c = p.chart();
  for (long j = 0; j < c->nvars(); ++j) {
    TermKey k;
    k.ord.assign(static_cast<size_t>(c->nvars()), 0);
    k.ord[static_cast<size_t>(j)] = 1;
    k.lat.assign(static_cast<size_t>(c->rank()), Int(0));
    auto it = p.terms().find(k);
    if (it != p.terms().end() && !it->second.is_zero()) out.push_back(j);
  }
  return out;
}

// Preferred pivot among the linear variables: lexicographically last name,
// or first under the reversed tiebreak.
long preferred_pivot(const Poly& p) {
  std::vector<long> vars = linear_vars(p);
  if (vars.empty()) return -1;
  const ChartPtr& c = p.chart();
  long best = vars[0];
  for (long j : vars) {
    bool wins = limits().reverse_tiebreak
                    ? c->ordinary[static_cast<size_t>(j)] <
                          c->ordinary[static_cast<size_t>(best)]
                    : c->ordinary[static_cast<size_t>(j)] >
                          c->ordinary[static_cast<size_t>(best)];
    if (wins) best = j;
  }
  return best;
}

bool has_order_one(const Poly& p) {
  Poly q = p.kill_monomials();
  return !q.is_zero() && q.order_ordinary() == 1;
}

Rat linear_coeff(const Poly& p, long var_idx) {
  TermKey k;
  k.ord.assign(static_cast<size_t>(p.chart()->nvars()), 0);
  k.ord[static_cast<size_t>(var_idx)] = 1;
  k.lat.assign(static_cast<size_t>(p.chart()->rank()), Int(0));
  auto it = p.terms().find(k);
  return it == p.terms().end() ? Rat(0) : it->second;
}

}  // namespace

Ideal mc_ideal(const Ideal& i, unsigned a) {
  if (a == 0) throw InfiniteOrder("maximal contact requires positive order");
  Ord o = log_order(i);
  if (o.inf || o.v != static_cast<long>(a))
    throw InfiniteOrder("log order " + (o.inf ? std::string("inf")
                                              : std::to_string(o.v)) +
                        " does not match the requested order " +
                        std::to_string(a));
  return derivative_ideal(i, a - 1);
}

long choose_contact(const std::vector<Poly>& pool) {
  long best = -1;
  long best_var = -1;
  for (size_t idx = 0; idx < pool.size(); ++idx) {
    const Poly& p = pool[idx];
    if (!has_order_one(p)) continue;
    long v = preferred_pivot(p);
    if (v < 0) continue;
    if (best < 0) {
      best = static_cast<long>(idx);
      best_var = v;
      continue;
    }
    const ChartPtr& c = p.chart();
    const std::string& cand = c->ordinary[static_cast<size_t>(v)];
    const std::string& held = c->ordinary[static_cast<size_t>(best_var)];
    bool wins = limits().reverse_tiebreak ? cand < held : cand > held;
    if (wins) {
      best = static_cast<long>(idx);
      best_var = v;
    }
  }
  return best;
}

MaxContact normalize_contact(const Poly& g) {
  if (!has_order_one(g))
    throw NoMaxContact("contact candidate does not have order one");
  long pidx = preferred_pivot(g);
  if (pidx < 0)
    throw NoMaxContact("contact candidate has no pure linear term");
  const ChartPtr& c = g.chart();

  MaxContact mc;
  mc.pivot_idx = pidx;
  mc.pivot = c->ordinary[static_cast<size_t>(pidx)];

  // Triangular cleanup x := x - tail/a.  Each round strictly raises the tail
  // order of exact inputs; the jet bound cuts off formal-only contacts.
  const long bound = limits().jet_factor * g.degree();
  Poly cur = g;
  for (long round = 0;; ++round) {
    Poly tail = cur.set_var_zero(pidx);
    if (tail.is_zero()) break;
    long d = tail.order_ordinary();
    // The working degree is budgeted as well: substitution multiplies it, so
    // a tail that keeps refilling at low order would otherwise grind through
    // rounds on ever denser polynomials before the order test could fire.
    if (d > bound || cur.degree() > bound || round > bound + 1) {
      if (limits().approx_jet) {
        mc.approximate = true;
        break;
      }
      throw JetTruncationNeeded("cleanup tail order " + std::to_string(d) +
                                " at degree " + std::to_string(cur.degree()) +
                                " exceeds the jet bound " +
                                std::to_string(bound));
    }
    Rat a = linear_coeff(cur, pidx);
    if (a.is_zero())
      throw NoMaxContact("pivot linear term vanished during cleanup");
    SubStep step;
    step.var_idx = pidx;
    step.value = Poly::var(c, mc.pivot) - tail.scale(Rat(1) / a);
    cur = cur.substitute(pidx, step.value);
    mc.sub.steps.push_back(std::move(step));
  }
  return mc;
}

MaxContact find_max_contact(const Ideal& i, unsigned a) {
  Ideal m = mc_ideal(i, a);
  long idx = choose_contact(m.gens);
  if (idx < 0)
    throw NoMaxContact("derivative pool has no order-one candidate");
  return normalize_contact(m.gens[static_cast<size_t>(idx)]);
}

}  // namespace logres
