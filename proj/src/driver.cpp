// Copyright (c) 2026 the logres authors.
// SPDX-License-Identifier: MIT

#include "logres/driver.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "logres/config.hpp"
#include "logres/json_io.hpp"

namespace logres {

namespace {

// ---------------------------------------------------------------------------
// Sweeps: rational zeros of the generators restricted to coordinate axes and
// to named extremal monomial rays.

// Nonzero rational roots, by the divisor test on the integer-cleared lowest
// and leading coefficients.  Coefficients past the configured size bound are
// not factored; such restrictions contribute no candidates.
std::vector<Rat> rational_roots(std::map<long, Rat> coeffs) {
  for (auto it = coeffs.begin(); it != coeffs.end();)
    it = (it->second == 0) ? coeffs.erase(it) : std::next(it);
  if (coeffs.size() < 2) return {};  // c * t^k has no nonzero root
  Int den(1);
  for (const auto& [e, c] : coeffs) den = ilcm(den, rden(c));
  const auto cleared = [&](const Rat& c) { return Int(rnum(c) * (den / rden(c))); };
  Int a0 = cleared(coeffs.begin()->second);
  Int ad = cleared(coeffs.rbegin()->second);
  const Int cap(limits().sweep_coeff_limit);
  if (iabs(a0) > cap || iabs(ad) > cap) return {};
  const auto divisors = [](Int n) {
    n = iabs(n);
    std::vector<Int> out;
    for (Int d = 1; d * d <= n; ++d)
      if (n % d == 0) {
        out.push_back(d);
        if (d * d != n) out.push_back(n / d);
      }
    return out;
  };
  std::set<Rat> roots;
  for (const Int& p : divisors(a0))
    for (const Int& q : divisors(ad))
      for (int sign : {1, -1}) {
        Rat cand = Rat(p * sign) / Rat(q);
        Rat val(0);
        for (const auto& [e, c] : coeffs) val += c * rat_pow(cand, e);
        if (val == 0) roots.insert(cand);
      }
  return {roots.begin(), roots.end()};
}

// Restriction of g to the axis of the ordinary variable var: terms with no
// monomial part and no other ordinary variable.
std::map<long, Rat> axis_restriction(const Poly& g, size_t var) {
  std::map<long, Rat> out;
  for (const auto& [key, coef] : g.terms()) {
    if (!lp_is_zero(key.lat)) continue;
    bool pure = true;
    for (size_t j = 0; j < key.ord.size(); ++j)
      if (j != var && key.ord[j] != 0) {
        pure = false;
        break;
      }
    if (!pure) continue;
    out[key.ord[var]] += coef;
  }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

// v as a nonnegative integer multiple of the primitive ray r, if it is one.
std::optional<long> ray_multiple(const LatticePoint& v, const LatticePoint& r) {
  if (lp_is_zero(v)) return 0;
  size_t pivot = r.size();
  for (size_t k = 0; k < r.size(); ++k)
    if (r[k] != 0) {
      pivot = k;
      break;
    }
  if (pivot == r.size()) return std::nullopt;
  if (v[pivot] % r[pivot] != 0) return std::nullopt;
  Int m = v[pivot] / r[pivot];
  if (m < 0) return std::nullopt;
  if (lp_cmp(v, lp_scale(m, r)) != 0) return std::nullopt;
  return to_long(m);
}

// Restriction of g to the torus direction of the ray r: constant terms in the
// ordinary variables whose monomial part is a multiple of r.
std::map<long, Rat> ray_restriction(const Poly& g, const LatticePoint& r) {
  std::map<long, Rat> out;
  for (const auto& [key, coef] : g.terms()) {
    bool constant = true;
    for (long e : key.ord)
      if (e != 0) {
        constant = false;
        break;
      }
    if (!constant) continue;
    if (auto m = ray_multiple(key.lat, r)) out[*m] += coef;
  }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

// Common nonzero rational roots of a family of restrictions: roots of the
// first nonzero member filtered through the rest.  Identically vanishing
// restrictions are neutral; an all-zero family yields nothing (the whole axis
// meets the vanishing locus and the origin already represents it).
template <class RestrictFn>
std::vector<Rat> common_roots(const Ideal& i, RestrictFn&& restrict_fn) {
  std::vector<std::map<long, Rat>> rs;
  for (const auto& g : i.gens) {
    auto r = restrict_fn(g);
    if (!r.empty()) rs.push_back(std::move(r));
  }
  if (rs.empty()) return {};
  std::vector<Rat> out;
  for (const Rat& rho : rational_roots(rs.front())) {
    bool ok = true;
    for (size_t k = 1; k < rs.size() && ok; ++k) {
      Rat val(0);
      for (const auto& [e, c] : rs[k]) val += c * rat_pow(rho, e);
      ok = (val == 0);
    }
    if (ok) out.push_back(rho);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Focus bookkeeping.

bool focus_done(const InvariantSeq& inv, const EngineConfig& cfg) {
  if (inv.is_unit_stalk() || inv.is_zero_stalk()) return true;
  if (cfg.proper && !inv.inf && !inv.entries.empty()) {
    // A proper transform of multiplicity one stays of multiplicity one; the
    // point is a resolved point of the strict preimage.
    bool all_one = true;
    for (const auto& e : inv.entries) all_one = all_one && e == 1;
    if (all_one) return true;
  }
  return false;
}

Rat point_value(const std::map<std::string, Rat>& values,
                const std::string& name) {
  auto it = values.find(name);
  return it == values.end() ? Rat(0) : it->second;
}

std::optional<Rat> rat_root(const Rat& v, long n) {
  auto p = iroot_exact(rnum(v), static_cast<unsigned>(n));
  auto q = iroot_exact(rden(v), static_cast<unsigned>(n));
  if (!p || !q) return std::nullopt;
  return Rat(*p) / Rat(*q);
}

// Value of the character chi^v at the point q, expressed through the named
// monomials of the chart.  Fails when v is not an integer combination of the
// named points or when the combination needs a negative power of a vanished
// monomial.
std::optional<Rat> eval_lattice(const LogChart& chart, const RatPoint& q,
                                const LatticePoint& v) {
  if (lp_is_zero(v)) return Rat(1);
  std::vector<LatticePoint> pts;
  std::vector<Rat> vals;
  for (const auto& [name, pt] : chart.monomial_names) {
    bool known = false;
    for (const auto& other : pts)
      if (lp_cmp(other, pt) == 0) {
        known = true;
        break;
      }
    if (known) continue;
    pts.push_back(pt);
    vals.push_back(point_value(q.monomial_values, name));
  }
  auto expr = express_in_lattice(pts, v);
  if (!expr) return std::nullopt;
  Rat out(1);
  for (size_t k = 0; k < pts.size(); ++k) {
    const Int& e = (*expr)[k];
    if (e == 0) continue;
    if (vals[k] == 0) {
      if (e < 0) return std::nullopt;
      return Rat(0);
    }
    out *= rat_pow(vals[k], to_long(e));
  }
  return out;
}

// Image of a focus point under the parameter chart bc of the reduced center:
// the pivot value must admit an exact rational n-th root (the exceptional
// coordinate), the other parameters rescale, and monomial names evaluate
// through the source lattice.  Points over the center (pivot value zero) are
// rediscovered by the sweep of the child and are skipped here.
std::optional<RatPoint> transport_point(const ReducedCenter& rc,
                                        const BlowupChart& bc,
                                        const RatPoint& q) {
  const ChartPtr& src = rc.chart;
  const auto& [pname, ni] = rc.params[static_cast<size_t>(bc.index)];
  Rat v = point_value(q.ordinary_values, pname);
  if (v == 0) return std::nullopt;
  auto u = rat_root(v, to_long(ni));
  if (!u) return std::nullopt;
  RatPoint out;
  for (const auto& name : src->ordinary) {
    if (name == pname) continue;
    Rat val = point_value(q.ordinary_values, name);
    for (const auto& [par, nr] : rc.params)
      if (par == name) {
        val /= rat_pow(*u, to_long(nr));
        break;
      }
    out.ordinary_values[name] = val;
  }
  const size_t s = static_cast<size_t>(src->rank());
  for (const auto& [name, pt] : bc.chart->monomial_names) {
    LatticePoint head(pt.begin(), pt.begin() + static_cast<long>(s));
    auto hv = eval_lattice(*src, q, head);
    if (!hv) return std::nullopt;
    Rat val = *hv;
    if (pt[s] != 0) val *= rat_pow(*u, to_long(pt[s]));
    out.monomial_values[name] = val;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Blowing up one node.

void blow_node(ChartTree& tree, long nid, const EngineConfig& cfg,
               const InvariantSeq& bound, bool capped, StepLog& log) {
  InvResult r = invariant_at_origin(tree.nodes[nid].ideal, cfg.engine);
  ReducedCenter rc = reduce_center(r.center);
  const long ell = to_long(rc.ell);
  if (!admissible(rc, ell, tree.nodes[nid].ideal))
    throw EngineDisagreement("center " + rc.str() +
                             " fails its own admissibility certificate");
  if (admissible(rc, ell + 1, tree.nodes[nid].ideal))
    throw IrrationalMaxLocus("center " + rc.str() +
                             " stays admissible beyond its scale " +
                             std::to_string(ell));
  Ideal normalized = rc.normalization.apply(tree.nodes[nid].ideal);
  std::vector<BlowupChart> charts = blowup_charts(rc);

  // Open non-origin foci of the node move along into the parameter charts.
  std::vector<RatPoint> carried;
  for (const auto& f : tree.nodes[nid].focus)
    if (!f.done && !f.point.is_origin()) carried.push_back(f.point);
  std::vector<bool> carried_hit(carried.size(), false);

  std::vector<ChartNode> children;
  for (const auto& bc : charts) {
    ChartNode cn;
    cn.parent = nid;
    cn.edge_kind = bc.kind == BlowupChart::Kind::Param
                       ? "param:" + rc.params[static_cast<size_t>(bc.index)].first
                       : "mon:" + std::to_string(bc.index);
    if (bc.torsion) {
      cn.torsion_leaf = true;
      cn.note = bc.note;
      children.push_back(std::move(cn));
      continue;
    }
    TransformResult tr = transform(normalized, bc);
    cn.chart = bc.chart;
    cn.ideal = cfg.proper && tr.proper ? *tr.proper : tr.weak;
    cn.edge_ell = tr.ell;

    std::set<std::string> seen;
    auto add_focus = [&](const RatPoint& q, bool over_center) {
      if (!seen.insert(q.str()).second) return;
      FocusPoint f;
      f.point = q;
      f.over_center = over_center;
      try {
        f.inv = invariant_at_point(cn.ideal, q, cfg.engine).inv;
      } catch (const JetTruncationNeeded& e) {
        // No exact polynomial normalization at this point within the jet
        // budget: leave the candidate out and say so on the node.
        if (!cn.note.empty()) cn.note += "; ";
        cn.note += "skipped focus " + q.str() + ": " + e.what();
        return;
      } catch (const EquivariantUnsupported& e) {
        // Localizing at a non-fixed point of an acted chart is not supported.
        if (!cn.note.empty()) cn.note += "; ";
        cn.note += "skipped focus " + q.str() + ": " + e.what();
        return;
      }
      f.done = focus_done(f.inv, cfg);
      if (over_center && !capped && !inv_less(f.inv, bound))
        throw InvariantDidNotDrop("invariant " + f.inv.str() + " over center " +
                                  rc.str() + " does not drop below " +
                                  bound.str());
      cn.focus.push_back(std::move(f));
    };

    add_focus(RatPoint{}, true);
    for (const auto& q : sweep_points(cn.ideal)) add_focus(q, false);
    if (bc.kind == BlowupChart::Kind::Param)
      for (size_t k = 0; k < carried.size(); ++k)
        if (auto tq = transport_point(rc, bc, carried[k])) {
          carried_hit[k] = true;
          add_focus(*tq, false);
        }
    children.push_back(std::move(cn));
  }

  tree.nodes[nid].blown = true;
  tree.nodes[nid].center_desc = rc.str();
  for (auto& f : tree.nodes[nid].focus) f.done = true;
  for (size_t k = 0; k < carried.size(); ++k)
    if (!carried_hit[k]) {
      std::string& note = tree.nodes[nid].note;
      if (!note.empty()) note += "; ";
      note += "focus " + carried[k].str() + " has no rational chart preimage";
    }
  for (auto& cn : children) {
    cn.id = static_cast<long>(tree.nodes.size());
    tree.nodes.push_back(std::move(cn));
  }
  log.blown_nodes.push_back(nid);
  log.centers.push_back(rc.str());
  log.ells.push_back(ell);
}

}  // namespace

InvResult invariant_at_point(const Ideal& i, const RatPoint& p,
                             EngineMode mode) {
  if (p.is_origin()) return invariant_at_origin(i, mode);
  Localization loc = localize_at(i.chart, p);
  return invariant_at_origin(loc.transport(i), mode);
}

std::vector<RatPoint> sweep_points(const Ideal& i) {
  std::vector<RatPoint> out;
  if (i.is_zero()) return out;
  const ChartPtr& c = i.chart;
  const auto zero_point = [&]() {
    RatPoint p;
    for (const auto& name : c->ordinary) p.ordinary_values[name] = 0;
    for (const auto& [name, pt] : c->monomial_names) p.monomial_values[name] = 0;
    return p;
  };
  std::set<std::string> seen;
  const auto push = [&](RatPoint p) {
    if (out.size() >= static_cast<size_t>(limits().sweep_point_cap)) return;
    if (seen.insert(p.str()).second) out.push_back(std::move(p));
  };

  for (size_t j = 0; j < c->ordinary.size(); ++j)
    for (const Rat& rho :
         common_roots(i, [&](const Poly& g) { return axis_restriction(g, j); })) {
      RatPoint p = zero_point();
      p.ordinary_values[c->ordinary[j]] = rho;
      push(std::move(p));
    }

  for (const auto& ray : c->monoid.gens) {
    // Only rays carrying a named monomial give coordinates to sweep.
    std::vector<std::pair<std::string, long>> aliases;
    for (const auto& [name, pt] : c->monomial_names)
      if (auto m = ray_multiple(pt, ray); m && *m >= 1)
        aliases.emplace_back(name, *m);
    if (aliases.empty()) continue;
    for (const Rat& rho :
         common_roots(i, [&](const Poly& g) { return ray_restriction(g, ray); })) {
      RatPoint p = zero_point();
      for (const auto& [name, m] : aliases)
        p.monomial_values[name] = rat_pow(rho, m);
      push(std::move(p));
    }
  }
  return out;
}

Input parse_input(const std::string& json_text) {
  Json j = Json::parse(json_text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw ParseError("input is not valid JSON");
  Input in;
  try {
    if (!j.contains("chart")) throw ParseError("input needs a \"chart\"");
    in.chart = chart_from_json(j.at("chart"));
    if (!j.contains("ideal")) throw ParseError("input needs an \"ideal\"");
    std::vector<Poly> gens;
    for (const auto& g : j.at("ideal")) {
      if (!g.is_string())
        throw ParseError("ideal generators must be strings");
      gens.push_back(parse_poly(in.chart, g.get<std::string>()));
    }
    in.ideal = Ideal::make(in.chart, std::move(gens));
    if (j.contains("points"))
      for (const auto& p : j.at("points"))
        in.points.push_back(ratpoint_from_json(p, *in.chart));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("input document: ") + e.what());
  }
  if (in.points.empty()) in.points.emplace_back();
  return in;
}

ChartTree make_tree(const Input& input, const EngineConfig& cfg) {
  if (!input.chart) throw ParseError("input without a chart");
  ChartTree tree;
  ChartNode root;
  root.id = 0;
  root.chart = input.chart;
  root.ideal = input.ideal;
  std::vector<RatPoint> pts;
  pts.emplace_back();
  pts.insert(pts.end(), input.points.begin(), input.points.end());
  bool have_origin = false;
  std::set<std::string> seen;
  for (const auto& p : pts) {
    if (p.is_origin()) {
      if (have_origin) continue;
      have_origin = true;
    } else if (!seen.insert(p.str()).second) {
      continue;
    }
    FocusPoint f;
    f.point = p;
    f.inv = invariant_at_point(input.ideal, p, cfg.engine).inv;
    f.done = focus_done(f.inv, cfg);
    root.focus.push_back(std::move(f));
  }
  tree.nodes.push_back(std::move(root));
  tree.complete = true;
  for (const auto& f : tree.nodes[0].focus)
    if (!f.done) tree.complete = false;
  return tree;
}

bool resolve_step(ChartTree& tree, const EngineConfig& cfg) {
  struct Ref {
    size_t node = 0;
    size_t focus = 0;
  };
  std::vector<Ref> frontier;
  for (size_t n = 0; n < tree.nodes.size(); ++n)
    for (size_t f = 0; f < tree.nodes[n].focus.size(); ++f)
      if (!tree.nodes[n].focus[f].done) frontier.push_back({n, f});
  if (frontier.empty()) {
    tree.complete = true;
    return false;
  }
  InvariantSeq best = tree.nodes[frontier[0].node].focus[frontier[0].focus].inv;
  for (const auto& ref : frontier) {
    const InvariantSeq& v = tree.nodes[ref.node].focus[ref.focus].inv;
    if (inv_less(best, v)) best = v;
  }
  std::vector<Ref> targets;
  for (const auto& ref : frontier)
    if (inv_equal(tree.nodes[ref.node].focus[ref.focus].inv, best))
      targets.push_back(ref);
  // Localize away-from-origin points before blowing origins: blowing a node
  // retires all of its marked points, so the origin-first order would push a
  // maximal point into the next chart instead of treating it this round.
  std::stable_partition(targets.begin(), targets.end(), [&](const Ref& ref) {
    return !tree.nodes[ref.node].focus[ref.focus].point.is_origin();
  });
  const bool capped =
      static_cast<long>(targets.size()) > limits().max_blowups_per_step;
  if (capped) targets.resize(static_cast<size_t>(limits().max_blowups_per_step));

  StepLog log;
  log.index = static_cast<int>(tree.steps.size());
  log.maxinv_before = best;

  for (const auto& ref : targets) {
    // An earlier blowup of this round may have retired the focus already.
    if (tree.nodes[ref.node].focus[ref.focus].done) continue;
    if (tree.nodes[ref.node].focus[ref.focus].point.is_origin()) {
      blow_node(tree, static_cast<long>(ref.node), cfg, best, capped, log);
      continue;
    }
    // Move the point to the origin of its own chart, then blow up there.
    RatPoint p = tree.nodes[ref.node].focus[ref.focus].point;
    Localization loc = localize_at(tree.nodes[ref.node].chart, p);
    ChartNode ln;
    ln.parent = static_cast<long>(ref.node);
    ln.edge_kind = "localize";
    ln.chart = loc.target;
    ln.ideal = loc.transport(tree.nodes[ref.node].ideal);
    FocusPoint fo;
    fo.inv = tree.nodes[ref.node].focus[ref.focus].inv;
    ln.focus.push_back(std::move(fo));
    const long lid = static_cast<long>(tree.nodes.size());
    ln.id = lid;
    tree.nodes.push_back(std::move(ln));
    tree.nodes[ref.node].focus[ref.focus].done = true;
    blow_node(tree, lid, cfg, best, capped, log);
  }

  InvariantSeq after = InvariantSeq::unit_stalk();
  bool any = false;
  for (const auto& n : tree.nodes)
    for (const auto& f : n.focus)
      if (!f.done) {
        if (!any || inv_less(after, f.inv)) after = f.inv;
        any = true;
      }
  log.maxinv_after = after;
  tree.steps.push_back(std::move(log));
  if (!any) tree.complete = true;
  return true;
}

ChartTree resolve(const Input& input, const EngineConfig& cfg) {
  ChartTree tree = make_tree(input, cfg);
  while (!tree.complete) {
    if (static_cast<long>(tree.steps.size()) >= limits().max_steps)
      throw MaxStepsExceeded("no resolution after " +
                             std::to_string(tree.steps.size()) + " rounds");
    resolve_step(tree, cfg);
  }
  return tree;
}

}  // namespace logres
