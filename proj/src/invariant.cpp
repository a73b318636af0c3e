// Copyright (c) 2026 the logres authors.
// SPDX-License-Identifier: MIT

#include "logres/invariant.hpp"

#include <algorithm>
#include <sstream>

#include "logres/config.hpp"

namespace logres {

namespace {

// Divides the monomial pair (Q, d) by the gcd of d and the generator
// contents; the quotient generators stay in the monoid because the monoid is
// the full lattice slice of the cone.
std::pair<MonIdeal, Int> canonicalize_mon(const MonIdeal& q, const Int& d) {
  Int g = d;
  for (const auto& m : q.gens) g = igcd(g, lp_content(m));
  if (g <= 1) return {q, d};
  std::vector<LatticePoint> gens;
  gens.reserve(q.gens.size());
  for (const auto& m : q.gens) {
    LatticePoint v = m;
    for (auto& c : v) c /= g;
    gens.push_back(std::move(v));
  }
  return {make_mon_ideal(q.ambient, std::move(gens)), Int(d / g)};
}

// Reinterprets a substitution recorded on a chart with fewer ordinary
// variables on the full chart, matching variables by name.
ChartSub lift_sub(const ChartSub& sub, const ChartPtr& small,
                  const ChartPtr& big) {
  ChartSub out;
  for (const auto& step : sub.steps) {
    SubStep lifted;
    lifted.var_idx =
        big->var_index(small->ordinary[static_cast<size_t>(step.var_idx)]);
    lifted.value = embed_poly(step.value, big);
    out.steps.push_back(std::move(lifted));
  }
  return out;
}

// Integer weights n_i = ell / a_i with gcd one; ell is the common value
// a_i * n_i.
struct ReducedScale {
  Int ell;
  std::vector<Int> n;
};

ReducedScale reduce_exponents(const std::vector<Rat>& a) {
  Int num_lcm = 1;
  Int den_gcd = 0;
  for (const auto& e : a) {
    if (e <= 0) throw EngineDisagreement("center exponent is not positive");
    num_lcm = ilcm(num_lcm, rnum(e));
    den_gcd = igcd(den_gcd, rden(e));
  }
  Rat ell = Rat(num_lcm) / Rat(den_gcd);
  ReducedScale rs;
  rs.n.reserve(a.size());
  Int g = 0;
  for (const auto& e : a) {
    Rat ni = ell / e;
    if (!is_integer(ni))
      throw EngineDisagreement("center exponents have no common period");
    rs.n.push_back(rnum(ni));
    g = igcd(g, rnum(ni));
  }
  if (g > 1)
    for (auto& ni : rs.n) ni /= g;
  Rat ell_eff = a[0] * Rat(rs.n[0]);
  if (!is_integer(ell_eff))
    throw EngineDisagreement("reduced center scale is not integral");
  rs.ell = rnum(ell_eff);
  return rs;
}

// Zero, unit-stalk and monomial-saturation guards shared by both engines.
std::optional<InvResult> guard_cases(const Ideal& i) {
  if (i.is_zero()) throw ZeroIdeal("invariant of the zero ideal");
  if (i.stalk_unit_at_origin()) {
    InvResult r;
    r.inv = InvariantSeq::unit_stalk();
    r.center.chart = i.chart;
    return r;
  }
  MonSat ms = monomial_saturation(i);
  if (!ms.unit) {
    InvResult r;
    r.inv.inf = true;
    r.center.chart = i.chart;
    r.center.mon = canonicalize_mon(*ms.ideal, Int(1));
    return r;
  }
  return std::nullopt;
}

InvResult presentation_run(const Ideal& i) {
  if (auto g = guard_cases(i)) return *g;

  const ChartPtr& root = i.chart;
  Ord b1 = log_order(i);
  std::vector<Rat> entries = {Rat(b1.v)};
  std::vector<std::string> pivots;
  std::vector<std::pair<ChartPtr, ChartSub>> level_subs;
  std::optional<std::pair<MonIdeal, Int>> reduced_mon;
  Int reduced_den = 1;
  bool inf = false;

  ChartPtr cur = root;
  WeightedFamily family;
  family.entries.push_back({i, Rat(b1.v)});

  for (;;) {
    family = family_saturate(family);

    std::vector<Poly> pool;
    for (const auto& [ideal, weight] : family.entries) {
      if (weight < 1) continue;
      for (const auto& g : ideal.gens) pool.push_back(g);
    }
    long pick = choose_contact(pool);
    if (pick < 0)
      throw NoMaxContact("weighted family has no order-one contact element");
    MaxContact mc = normalize_contact(pool[static_cast<size_t>(pick)]);
    level_subs.emplace_back(cur, mc.sub);
    if (!mc.sub.empty())
      for (auto& [ideal, weight] : family.entries) ideal = mc.sub.apply(ideal);
    pivots.push_back(mc.pivot);

    ChartPtr target;
    WeightedFamily next;
    for (const auto& [ideal, weight] : family.entries) {
      Ideal r = restrict_hypersurface(ideal, mc.pivot);
      if (!target)
        target = r.chart;
      else
        r = embed_ideal(r, target);
      if (!r.is_zero()) next.entries.push_back({std::move(r), weight});
    }
    cur = target;
    family = std::move(next);
    if (family.entries.empty()) break;

    bool all_infinite = true;
    std::optional<Rat> omega;
    for (const auto& [ideal, weight] : family.entries) {
      Ord o = log_order(ideal);
      if (o.inf) continue;
      all_infinite = false;
      Rat ratio = Rat(o.v) / weight;
      if (!omega || ratio < *omega) omega = ratio;
    }

    if (all_infinite) {
      Int dp = 1;
      for (const auto& [ideal, weight] : family.entries)
        dp = ilcm(dp, rnum(weight));
      std::vector<LatticePoint> qgens;
      for (const auto& [ideal, weight] : family.entries) {
        MonSat ms = monomial_saturation(ideal);
        Int scale = dp * rden(weight) / rnum(weight);
        for (const auto& m : ms.ideal->gens)
          qgens.push_back(lp_scale(scale, m));
      }
      reduced_mon = {make_mon_ideal(cur->monoid, std::move(qgens)), dp};
      reduced_den = dp;
      inf = true;
      break;
    }

    if (*omega < 1)
      throw EngineDisagreement(
          "family order fell below its weight during the presentation loop");
    entries.push_back(entries.back() * *omega);
    for (auto& [ideal, weight] : family.entries) weight *= *omega;
  }

  InvResult res;
  res.inv.entries = entries;
  res.inv.inf = inf;
  res.center.chart = root;
  for (size_t k = 0; k < pivots.size(); ++k)
    res.center.params.emplace_back(pivots[k], entries[k]);
  for (const auto& [chart, sub] : level_subs)
    res.center.normalization =
        res.center.normalization.then(lift_sub(sub, chart, root));
  if (reduced_mon) {
    // Scale change from the reduced presentation denominator to the
    // invariant scale ell_eff.
    ReducedScale rs = reduce_exponents(entries);
    Rat ratio = Rat(rs.ell) / Rat(reduced_den);
    MonIdeal q = mon_ideal_dilate(reduced_mon->first, rnum(ratio));
    res.center.mon = canonicalize_mon(q, rden(ratio));
  }
  return res;
}

}  // namespace

InvariantSeq InvariantSeq::unit_stalk() {
  InvariantSeq s;
  s.entries.push_back(Rat(0));
  return s;
}

InvariantSeq InvariantSeq::zero_stalk() { return InvariantSeq{}; }

bool InvariantSeq::is_unit_stalk() const {
  return !inf && entries.size() == 1 && entries[0].is_zero();
}

bool InvariantSeq::is_zero_stalk() const { return !inf && entries.empty(); }

std::string InvariantSeq::str() const {
  std::string out = "(";
  for (size_t k = 0; k < entries.size(); ++k) {
    if (k) out += ", ";
    out += rat_str(entries[k]);
  }
  if (inf) {
    if (!entries.empty()) out += ", ";
    out += "inf";
  }
  return out + ")";
}

namespace {

// Positional item of an invariant sequence: a finite entry, the infinity
// marker, or exhaustion.  Exhaustion compares above everything, infinity
// above every finite entry.
enum class ItemKind { Finite, Infinite, End };

ItemKind item_kind(const InvariantSeq& s, size_t k) {
  if (k < s.entries.size()) return ItemKind::Finite;
  if (k == s.entries.size() && s.inf) return ItemKind::Infinite;
  return ItemKind::End;
}

}  // namespace

int inv_compare(const InvariantSeq& a, const InvariantSeq& b) {
  for (size_t k = 0;; ++k) {
    ItemKind ka = item_kind(a, k);
    ItemKind kb = item_kind(b, k);
    if (ka != kb) return ka < kb ? -1 : 1;
    if (ka == ItemKind::End) return 0;
    if (ka == ItemKind::Finite && a.entries[k] != b.entries[k])
      return a.entries[k] < b.entries[k] ? -1 : 1;
  }
}

bool inv_less(const InvariantSeq& a, const InvariantSeq& b) {
  return inv_compare(a, b) < 0;
}

bool inv_equal(const InvariantSeq& a, const InvariantSeq& b) {
  return inv_compare(a, b) == 0;
}

namespace {

std::string mon_str(const std::pair<MonIdeal, Int>& mon) {
  std::string out = "(";
  for (size_t k = 0; k < mon.first.gens.size(); ++k) {
    if (k) out += ", ";
    out += lp_str(mon.first.gens[k]);
  }
  out += ")^(1/" + mon.second.str() + ")";
  return out;
}

}  // namespace

std::string ToroidalCenter::str() const {
  std::string out = "(";
  for (size_t k = 0; k < params.size(); ++k) {
    if (k) out += ", ";
    out += params[k].first + "^" + rat_str(params[k].second);
  }
  if (mon) {
    if (!params.empty()) out += ", ";
    out += mon_str(*mon);
  }
  return out + ")";
}

std::string ReducedCenter::str() const {
  std::string out = "(";
  for (size_t k = 0; k < params.size(); ++k) {
    if (k) out += ", ";
    out += params[k].first + "^" + params[k].second.str();
  }
  if (mon) {
    if (!params.empty()) out += ", ";
    out += mon_str(*mon);
  }
  return out + ")@" + ell.str();
}

ReducedCenter reduce_center(const ToroidalCenter& c) {
  ReducedCenter rc;
  rc.chart = c.chart;
  rc.normalization = c.normalization;
  if (c.params.empty()) {
    rc.ell = 1;
    if (c.mon) rc.mon = canonicalize_mon(c.mon->first, c.mon->second);
    return rc;
  }
  std::vector<Rat> exps;
  exps.reserve(c.params.size());
  for (const auto& [name, e] : c.params) exps.push_back(e);
  ReducedScale rs = reduce_exponents(exps);
  rc.ell = rs.ell;
  for (size_t k = 0; k < c.params.size(); ++k)
    rc.params.emplace_back(c.params[k].first, rs.n[k]);
  if (c.mon) rc.mon = canonicalize_mon(c.mon->first, c.mon->second * rs.ell);
  return rc;
}

InvResult invariant_literal(const Ideal& i) {
  if (auto g = guard_cases(i)) return *g;

  Ord o = log_order(i);
  unsigned b = static_cast<unsigned>(o.v);
  MaxContact mc = find_max_contact(i, b);
  Ideal moved = mc.sub.apply(i);
  Ideal coeff = coefficient_ideal_restricted(moved, b, mc.pivot_idx);

  InvResult res;
  res.center.chart = i.chart;
  res.center.normalization = mc.sub;
  res.inv.entries.push_back(Rat(b));
  res.center.params.emplace_back(mc.pivot, Rat(b));
  if (coeff.is_zero()) return res;

  InvResult sub = invariant_literal(coeff);
  Int f = ifactorial(b - 1);
  for (const auto& e : sub.inv.entries) res.inv.entries.push_back(e / Rat(f));
  res.inv.inf = sub.inv.inf;
  for (const auto& [name, e] : sub.center.params)
    res.center.params.emplace_back(name, e / Rat(f));
  if (sub.center.mon)
    res.center.mon =
        canonicalize_mon(sub.center.mon->first, sub.center.mon->second * f);
  res.center.normalization =
      mc.sub.then(lift_sub(sub.center.normalization, coeff.chart, i.chart));
  return res;
}

InvResult invariant_presentation(const Ideal& i) {
  InvResult res = presentation_run(i);
  if (limits().cross_check) {
    LimitsGuard guard;
    limits().cross_check = false;
    limits().graded_generator_bound =
        std::min(limits().graded_generator_bound, 20000L);
    try {
      InvResult lit = invariant_literal(i);
      if (!inv_equal(lit.inv, res.inv))
        throw EngineDisagreement("direct expansion computed " +
                                 lit.inv.str() +
                                 " but the presentation loop computed " +
                                 res.inv.str());
    } catch (const FactorialBlowup&) {
      // Too large for the direct expansion; the check is skipped.
    } catch (const ResourceBound&) {
    } catch (const JetTruncationNeeded&) {
    }
  }
  return res;
}

InvResult invariant_at_origin(const Ideal& i, EngineMode mode) {
  switch (mode) {
    case EngineMode::Literal:
      return invariant_literal(i);
    case EngineMode::Presentation:
      return invariant_presentation(i);
    case EngineMode::Both: {
      InvResult lit = invariant_literal(i);
      InvResult pre = invariant_presentation(i);
      if (!inv_equal(lit.inv, pre.inv))
        throw EngineDisagreement("direct expansion computed " +
                                 lit.inv.str() +
                                 " but the presentation loop computed " +
                                 pre.inv.str());
      return pre;
    }
  }
  throw EngineDisagreement("unhandled engine mode");
}

}  // namespace logres
