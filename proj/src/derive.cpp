#include "logres/derive.hpp"

#include <algorithm>
#include <set>

namespace logres {

Poly log_derive(const Poly& f, const Deriv& d) {
  if (!f.chart()) throw DimensionMismatch("deriving a chartless polynomial");
  const LogChart& chart = *f.chart();
  Poly r(f.chart());
  if (d.lattice) {
    if (d.idx < 0 || d.idx >= chart.rank()) {
      throw DimensionMismatch("lattice derivation index out of range");
    }
    for (const auto& [k, c] : f.terms()) {
      r.add_term(k, c * Rat(k.lat[d.idx]));
    }
  } else {
    if (d.idx < 0 || d.idx >= chart.nvars()) {
      throw DimensionMismatch("derivation index out of range");
    }
    for (const auto& [k, c] : f.terms()) {
      if (k.ord[d.idx] == 0) continue;
      TermKey nk = k;
      nk.ord[d.idx] -= 1;
      r.add_term(nk, c * Rat(k.ord[d.idx]));
    }
  }
  return r;
}

namespace {

std::vector<Deriv> all_derivs(const LogChart& chart) {
  std::vector<Deriv> out;
  for (long i = 0; i < chart.nvars(); ++i) out.push_back({false, i});
  for (long j = 0; j < chart.rank(); ++j) out.push_back({true, j});
  return out;
}

}  // namespace

std::vector<Ideal> derivative_tower(const Ideal& i, unsigned n) {
  if (!i.chart) throw DimensionMismatch("ideal without a chart");
  std::vector<Deriv> ds = all_derivs(*i.chart);
  std::vector<Ideal> tower{Ideal::make(i.chart, i.gens)};
  std::set<std::string> seen;
  for (const auto& g : tower[0].gens) seen.insert(g.monic().str());
  std::vector<Poly> frontier = tower[0].gens;
  for (unsigned level = 1; level <= n; ++level) {
    std::vector<Poly> next;
    for (const auto& g : frontier) {
      for (const auto& d : ds) {
        Poly dg = log_derive(g, d);
        if (dg.is_zero()) continue;
        if (!seen.insert(dg.monic().str()).second) continue;
        next.push_back(dg);
      }
    }
    std::vector<Poly> gens = tower.back().gens;
    gens.insert(gens.end(), next.begin(), next.end());
    tower.push_back(Ideal::make(i.chart, std::move(gens)));
    frontier = std::move(next);
  }
  return tower;
}

Ideal derivative_ideal(const Ideal& i, unsigned n) {
  return derivative_tower(i, n).back();
}

MonSat monomial_saturation(const Ideal& i) {
  if (i.is_zero()) throw ZeroIdeal("monomial saturation of the zero ideal");
  std::vector<LatticePoint> gens;
  for (const auto& g : i.gens) {
    for (const auto& [k, c] : g.terms()) {
      if (lp_is_zero(k.lat)) return {true, std::nullopt};
      gens.push_back(k.lat);
    }
  }
  return {false, make_mon_ideal(i.chart->monoid, std::move(gens))};
}

bool operator==(const Ord& a, const Ord& b) {
  if (a.inf || b.inf) return a.inf == b.inf;
  return a.v == b.v;
}

bool operator<(const Ord& a, const Ord& b) {
  if (a.inf) return false;
  if (b.inf) return true;
  return a.v < b.v;
}

Ord log_order(const Ideal& i) {
  if (i.is_zero()) throw ZeroIdeal("order of the zero ideal");
  Ord best = Ord::infinity();
  for (const auto& g : i.gens) {
    Poly cut = g.kill_monomials();
    if (cut.is_zero()) continue;
    Ord o = Ord::of(cut.order_ordinary());
    if (o < best) best = o;
  }
  return best;
}

}  // namespace logres
