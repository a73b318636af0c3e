// Copyright (c) 2026 the logres authors.
// SPDX-License-Identifier: MIT

#include "logres/blowup.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "logres/groebner.hpp"

namespace logres {

namespace {

long mod_norm(long w, long n) { return ((w % n) + n) % n; }

long int_mod(const Int& v, long n) {
  Int m = v % n;
  if (m < 0) m += n;
  return to_long(m);
}

// Embeds the source lattice into the blowup lattice (fresh coordinate last).
LatticePoint iota(const LatticePoint& v) {
  LatticePoint out = v;
  out.push_back(Int(0));
  return out;
}

LatticePoint unit_last(long size) {
  LatticePoint e(static_cast<size_t>(size), Int(0));
  e.back() = Int(1);
  return e;
}

long weight_of(const GroupAction& a, const std::string& name) {
  auto it = a.ordinary_weights.find(name);
  return it == a.ordinary_weights.end() ? 0 : it->second;
}

// Smallest nonnegative t with a*t = w (mod n); the orders involved are small
// cyclic-group orders, so a direct scan is exact and cheap.
std::optional<long> solve_congruence(long a, long w, long n) {
  a = mod_norm(a, n);
  w = mod_norm(w, n);
  for (long t = 0; t < n; ++t)
    if (mod_norm(a * t - w, n) == 0) return t;
  return std::nullopt;
}

// Center data shared by every chart of one blowup.
struct CenterData {
  ChartPtr src;
  long s = 0;                   // source lattice rank
  std::vector<long> param_idx;  // ordinary index per center parameter
  std::vector<Int> n;           // parameter weights
  std::vector<LatticePoint> qgens;
  Int d = 1;  // root order of the monomial part
  std::vector<LatticePoint> cone_gens;  // blowup cone generators in Z^{s+1}
  LatticePoint e_u;

  // Index into param_idx when var j is a center parameter.
  std::optional<size_t> param_of(long j) const {
    for (size_t r = 0; r < param_idx.size(); ++r)
      if (param_idx[r] == j) return r;
    return std::nullopt;
  }
};

CenterData center_data(const ReducedCenter& c) {
  CenterData cd;
  cd.src = c.chart;
  if (!cd.src) throw DimensionMismatch("center carries no chart");
  cd.s = cd.src->rank();
  cd.e_u = unit_last(cd.s + 1);
  for (const auto& [name, w] : c.params) {
    long idx = cd.src->var_index(name);
    if (idx < 0)
      throw DimensionMismatch("center parameter " + name +
                              " is not a coordinate of its chart");
    if (w <= 0)
      throw DimensionMismatch("center parameter " + name +
                              " has a nonpositive weight");
    cd.param_idx.push_back(idx);
    cd.n.push_back(w);
  }
  if (c.mon) {
    cd.qgens = c.mon->first.gens;
    cd.d = c.mon->second;
    if (cd.d <= 0)
      throw DimensionMismatch("monomial part has a nonpositive root order");
  }
  for (const auto& g : cd.src->monoid.gens) cd.cone_gens.push_back(iota(g));
  cd.cone_gens.push_back(cd.e_u);
  for (const auto& q : cd.qgens)
    cd.cone_gens.push_back(lp_sub(iota(q), lp_scale(cd.d, cd.e_u)));
  return cd;
}

// Fresh exceptional name u<k>; k starts one past the recorded exceptional
// count and skips anything already named on the chart.
std::string fresh_u_name(const std::set<std::string>& taken, long start,
                         long* used_k) {
  long k = start;
  while (taken.count("u" + std::to_string(k))) ++k;
  *used_k = k;
  return "u" + std::to_string(k);
}

// Names every unnamed Hilbert-basis element of the monoid so that extremal
// rays can be addressed by later localizations and sweeps.
void assign_ray_names(LogChart& raw, std::set<std::string>& taken, long k) {
  std::vector<LatticePoint> hb = hilbert_basis(raw.monoid);
  long j = 1;
  for (const auto& h : hb) {
    bool named = false;
    for (const auto& [name, pt] : raw.monomial_names)
      if (lp_cmp(pt, h) == 0) {
        named = true;
        break;
      }
    if (named) continue;
    std::string cand = "m" + std::to_string(k) + "_" + std::to_string(j);
    ++j;
    while (taken.count(cand)) {
      cand = "m" + std::to_string(k) + "_" + std::to_string(j);
      ++j;
    }
    raw.monomial_names[cand] = h;
    taken.insert(cand);
  }
}

BlowupChart build_param_chart(const CenterData& cd, size_t pi) {
  const ChartPtr& src = cd.src;
  const long pidx = cd.param_idx[pi];
  const std::string pname = src->ordinary[static_cast<size_t>(pidx)];
  const Int& ni = cd.n[pi];
  const long order = to_long(ni);

  LogChart raw;
  for (long j = 0; j < src->nvars(); ++j)
    if (j != pidx) raw.ordinary.push_back(src->ordinary[static_cast<size_t>(j)]);
  raw.monoid = make_cone(cd.s + 1, cd.cone_gens);
  for (const auto& [name, pt] : src->monomial_names)
    raw.monomial_names[name] = iota(pt);
  raw.monomial_names[pname] = lp_scale(ni, cd.e_u);

  std::set<std::string> taken(raw.ordinary.begin(), raw.ordinary.end());
  for (const auto& [name, pt] : raw.monomial_names) taken.insert(name);
  long k = 0;
  std::string uname =
      fresh_u_name(taken, static_cast<long>(src->exceptional.size()) + 1, &k);
  raw.monomial_names[uname] = cd.e_u;
  taken.insert(uname);
  assign_ray_names(raw, taken, k);

  for (const auto& e : src->exceptional) raw.exceptional.push_back(iota(e));
  raw.exceptional.push_back(cd.e_u);

  GroupAction fresh;
  fresh.order = order;
  for (size_t r = 0; r < cd.param_idx.size(); ++r) {
    if (r == pi) continue;
    const std::string& nm =
        src->ordinary[static_cast<size_t>(cd.param_idx[r])];
    fresh.ordinary_weights[nm] = int_mod(cd.n[r], order);
  }
  fresh.lattice_weights.assign(static_cast<size_t>(cd.s + 1), 0);
  fresh.lattice_weights.back() = mod_norm(-1, order);

  for (const auto& old : src->actions) {
    const long n = old.order;
    auto t = solve_congruence(int_mod(ni, n), weight_of(old, pname), n);
    if (!t)
      throw EquivariantUnsupported("the order-" + std::to_string(n) +
                                   " action does not extend to the " + pname +
                                   " chart");
    GroupAction na;
    na.order = n;
    for (long j = 0; j < src->nvars(); ++j) {
      if (j == pidx) continue;
      const std::string& nm = src->ordinary[static_cast<size_t>(j)];
      long w = weight_of(old, nm);
      if (auto r = cd.param_of(j))
        w = mod_norm(w - int_mod(cd.n[*r] * Int(*t), n), n);
      else
        w = mod_norm(w, n);
      na.ordinary_weights[nm] = w;
    }
    na.lattice_weights = old.lattice_weights;
    na.lattice_weights.push_back(*t);
    for (auto& lw : na.lattice_weights) lw = mod_norm(lw, n);
    raw.actions.push_back(std::move(na));
  }
  if (fresh.order > 1) raw.actions.push_back(fresh);

  BlowupChart bc;
  bc.kind = BlowupChart::Kind::Param;
  bc.index = static_cast<long>(pi);
  bc.u_point = cd.e_u;
  bc.action = fresh;
  bc.lattice_map.assign(static_cast<size_t>(cd.s + 1),
                        std::vector<Int>(static_cast<size_t>(cd.s), Int(0)));
  for (long r = 0; r < cd.s; ++r)
    bc.lattice_map[static_cast<size_t>(r)][static_cast<size_t>(r)] = Int(1);
  bc.chart = make_chart(std::move(raw));

  for (long j = 0; j < src->nvars(); ++j) {
    const std::string& nm = src->ordinary[static_cast<size_t>(j)];
    if (j == pidx) {
      bc.substitution[nm] = Poly::monomial(bc.chart, lp_scale(ni, cd.e_u));
    } else if (auto r = cd.param_of(j)) {
      bc.substitution[nm] =
          Poly::monomial(bc.chart, lp_scale(cd.n[*r], cd.e_u)) *
          Poly::var(bc.chart, nm);
    } else {
      bc.substitution[nm] = Poly::var(bc.chart, nm);
    }
  }
  for (const auto& [name, pt] : src->monomial_names)
    bc.substitution[name] = Poly::monomial(bc.chart, iota(pt));
  return bc;
}

BlowupChart build_mon_chart(const CenterData& cd, size_t qi) {
  const ChartPtr& src = cd.src;
  const LatticePoint& q = cd.qgens[qi];
  LatticePoint v_rel = lp_sub(iota(q), lp_scale(cd.d, cd.e_u));
  const Int content = lp_content(v_rel);

  BlowupChart bc;
  bc.kind = BlowupChart::Kind::Mon;
  bc.index = static_cast<long>(qi);
  if (content > 1) {
    bc.torsion = true;
    bc.u_point = v_rel;
    bc.note = "torsion quotient of order " + content.str();
    bc.action.order = to_long(cd.d);
    return bc;
  }

  auto split = split_basis({v_rel}, cd.s + 1);
  if (!split)
    throw DimensionMismatch("degenerate relation direction in a monomial chart");
  auto pi_of = [&](const LatticePoint& v) {
    LatticePoint out(static_cast<size_t>(cd.s), Int(0));
    for (long r = 0; r < cd.s; ++r) {
      Int acc(0);
      for (long col = 0; col <= cd.s; ++col)
        acc += split->inv[static_cast<size_t>(r + 1)][static_cast<size_t>(col)] *
               v[static_cast<size_t>(col)];
      out[static_cast<size_t>(r)] = acc;
    }
    return out;
  };

  LogChart raw;
  raw.ordinary = src->ordinary;
  std::vector<LatticePoint> pgens;
  for (const auto& g : cd.cone_gens) pgens.push_back(pi_of(g));
  raw.monoid = make_cone(cd.s, std::move(pgens));
  for (const auto& [name, pt] : src->monomial_names)
    raw.monomial_names[name] = pi_of(iota(pt));

  std::set<std::string> taken(raw.ordinary.begin(), raw.ordinary.end());
  for (const auto& [name, pt] : raw.monomial_names) taken.insert(name);
  long k = 0;
  std::string uname =
      fresh_u_name(taken, static_cast<long>(src->exceptional.size()) + 1, &k);
  raw.monomial_names[uname] = pi_of(cd.e_u);
  taken.insert(uname);
  assign_ray_names(raw, taken, k);

  for (const auto& e : src->exceptional) raw.exceptional.push_back(pi_of(iota(e)));
  raw.exceptional.push_back(pi_of(cd.e_u));

  const long order = to_long(cd.d);
  GroupAction fresh;
  fresh.order = order;
  for (size_t r = 0; r < cd.param_idx.size(); ++r) {
    const std::string& nm =
        src->ordinary[static_cast<size_t>(cd.param_idx[r])];
    fresh.ordinary_weights[nm] = int_mod(cd.n[r], order);
  }
  fresh.lattice_weights.reserve(static_cast<size_t>(cd.s));
  for (long r = 0; r < cd.s; ++r)
    fresh.lattice_weights.push_back(int_mod(
        -split->rows[static_cast<size_t>(r + 1)][static_cast<size_t>(cd.s)],
        order));

  for (const auto& old : src->actions) {
    const long n = old.order;
    Int lam(0);
    for (long col = 0; col < cd.s; ++col)
      lam += Int(old.lattice_weights[static_cast<size_t>(col)]) *
             q[static_cast<size_t>(col)];
    auto t = solve_congruence(int_mod(cd.d, n), int_mod(lam, n), n);
    if (!t)
      throw EquivariantUnsupported(
          "the order-" + std::to_string(n) +
          " action does not extend to monomial chart " + std::to_string(qi));
    GroupAction na;
    na.order = n;
    for (long j = 0; j < src->nvars(); ++j) {
      const std::string& nm = src->ordinary[static_cast<size_t>(j)];
      long w = weight_of(old, nm);
      if (auto r = cd.param_of(j))
        w = mod_norm(w - int_mod(cd.n[*r] * Int(*t), n), n);
      else
        w = mod_norm(w, n);
      na.ordinary_weights[nm] = w;
    }
    for (long r = 0; r < cd.s; ++r) {
      Int acc(0);
      for (long col = 0; col < cd.s; ++col)
        acc += Int(old.lattice_weights[static_cast<size_t>(col)]) *
               split->rows[static_cast<size_t>(r + 1)][static_cast<size_t>(col)];
      acc += Int(*t) *
             split->rows[static_cast<size_t>(r + 1)][static_cast<size_t>(cd.s)];
      na.lattice_weights.push_back(int_mod(acc, n));
    }
    raw.actions.push_back(std::move(na));
  }
  if (fresh.order > 1) raw.actions.push_back(fresh);

  bc.u_point = pi_of(cd.e_u);
  bc.action = fresh;
  bc.lattice_map.assign(static_cast<size_t>(cd.s),
                        std::vector<Int>(static_cast<size_t>(cd.s), Int(0)));
  for (long r = 0; r < cd.s; ++r)
    for (long col = 0; col < cd.s; ++col)
      bc.lattice_map[static_cast<size_t>(r)][static_cast<size_t>(col)] =
          split->inv[static_cast<size_t>(r + 1)][static_cast<size_t>(col)];
  bc.chart = make_chart(std::move(raw));

  for (long j = 0; j < src->nvars(); ++j) {
    const std::string& nm = src->ordinary[static_cast<size_t>(j)];
    if (auto r = cd.param_of(j)) {
      bc.substitution[nm] =
          Poly::monomial(bc.chart, lp_scale(cd.n[*r], bc.u_point)) *
          Poly::var(bc.chart, nm);
    } else {
      bc.substitution[nm] = Poly::var(bc.chart, nm);
    }
  }
  for (const auto& [name, pt] : src->monomial_names)
    bc.substitution[name] = Poly::monomial(bc.chart, pi_of(iota(pt)));
  return bc;
}

// Divisibility of the transform by u^ell on a torsion chart, checked on the
// saturated quotient lattice.  The cover substitution sends distinct source
// terms to distinct monomials, so the termwise test is exact.
bool torsion_divisible(const CenterData& cd, const LatticePoint& v_rel,
                       long ell, const Ideal& j) {
  auto split = split_basis({lp_primitive(v_rel)}, cd.s + 1);
  if (!split)
    throw DimensionMismatch("degenerate relation direction in a torsion chart");
  auto pi_of = [&](const LatticePoint& v) {
    LatticePoint out(static_cast<size_t>(cd.s), Int(0));
    for (long r = 0; r < cd.s; ++r) {
      Int acc(0);
      for (long col = 0; col <= cd.s; ++col)
        acc += split->inv[static_cast<size_t>(r + 1)][static_cast<size_t>(col)] *
               v[static_cast<size_t>(col)];
      out[static_cast<size_t>(r)] = acc;
    }
    return out;
  };
  std::vector<LatticePoint> pgens;
  for (const auto& g : cd.cone_gens) pgens.push_back(pi_of(g));
  Cone quotient = make_cone(cd.s, std::move(pgens));

  for (const auto& g : j.gens) {
    for (const auto& [key, coef] : g.terms()) {
      Int shift(-ell);
      for (size_t r = 0; r < cd.param_idx.size(); ++r)
        shift += Int(key.ord[static_cast<size_t>(cd.param_idx[r])]) * cd.n[r];
      LatticePoint img =
          lp_add(iota(key.lat), lp_scale(shift, cd.e_u));
      if (!cone_member(pi_of(img), quotient)) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<BlowupChart> blowup_charts(const ReducedCenter& c) {
  CenterData cd = center_data(c);
  std::vector<BlowupChart> out;
  for (size_t pi = 0; pi < cd.param_idx.size(); ++pi)
    out.push_back(build_param_chart(cd, pi));
  for (size_t qi = 0; qi < cd.qgens.size(); ++qi)
    out.push_back(build_mon_chart(cd, qi));
  return out;
}

TransformResult transform(const Ideal& i, const BlowupChart& bc) {
  if (bc.torsion || !bc.chart)
    throw TorsionMonoid(bc.note.empty() ? "monomial chart with torsion" : bc.note);
  const ChartPtr& src = i.chart;
  const ChartPtr& dst = bc.chart;

  TransformResult out;
  std::vector<Poly> total_gens;
  for (const auto& g : i.gens) {
    Poly image = Poly::zero(dst);
    for (const auto& [key, coef] : g.terms()) {
      Poly t = Poly::monomial(dst, imat_apply(bc.lattice_map, key.lat), coef);
      for (long j = 0; j < src->nvars(); ++j) {
        long e = key.ord[static_cast<size_t>(j)];
        if (e == 0) continue;
        t = t * bc.substitution.at(src->ordinary[static_cast<size_t>(j)])
                    .pow(static_cast<unsigned long>(e));
      }
      image = image + t;
    }
    total_gens.push_back(std::move(image));
  }
  out.total = Ideal::make(dst, std::move(total_gens));

  bool first = true;
  long ell = 0;
  for (const auto& g : out.total.gens) {
    long ge = -1;
    for (const auto& [key, coef] : g.terms()) {
      long te = mon_ideal_saturate_exponent(key.lat, bc.u_point, dst->monoid);
      if (ge < 0 || te < ge) ge = te;
    }
    if (first || ge < ell) {
      ell = ge;
      first = false;
    }
  }
  out.ell = first ? 0 : ell;

  std::vector<Poly> weak_gens;
  for (const auto& g : out.total.gens)
    weak_gens.push_back(g.divide_monomial(bc.u_point, out.ell));
  out.weak = Ideal::make(dst, std::move(weak_gens));

  if (out.weak.gens.size() <= 1) {
    out.proper = out.weak;
  } else if (chart_free(*dst)) {
    for (const auto& [name, pt] : dst->monomial_names) {
      if (lp_cmp(pt, bc.u_point) == 0) {
        out.proper = saturate_by_var(out.weak, name);
        break;
      }
    }
  }
  return out;
}

bool admissible(const ReducedCenter& c, long ell, const Ideal& i) {
  Ideal j = c.normalization.apply(i);
  CenterData cd = center_data(c);
  for (size_t pi = 0; pi < cd.param_idx.size(); ++pi) {
    BlowupChart bc = build_param_chart(cd, pi);
    if (transform(j, bc).ell < ell) return false;
  }
  for (size_t qi = 0; qi < cd.qgens.size(); ++qi) {
    LatticePoint v_rel =
        lp_sub(iota(cd.qgens[qi]), lp_scale(cd.d, cd.e_u));
    if (lp_content(v_rel) > 1) {
      if (!torsion_divisible(cd, v_rel, ell, j)) return false;
    } else {
      BlowupChart bc = build_mon_chart(cd, qi);
      if (transform(j, bc).ell < ell) return false;
    }
  }
  return true;
}

Int center_exceptional_order(const ReducedCenter& c,
                             const std::vector<long>& alpha,
                             const LatticePoint& m) {
  if (alpha.size() != c.params.size())
    throw DimensionMismatch("one exponent per center parameter is required");
  CenterData cd = center_data(c);
  if (static_cast<long>(m.size()) != cd.s)
    throw DimensionMismatch("monomial point has the wrong rank");
  Int total(0);
  for (size_t r = 0; r < alpha.size(); ++r) {
    if (alpha[r] < 0) throw DimensionMismatch("negative exponent");
    total += Int(alpha[r]) * cd.n[r];
  }
  Cone bcone = make_cone(cd.s + 1, cd.cone_gens);
  total += Int(mon_ideal_saturate_exponent(iota(m), cd.e_u, bcone));
  return total;
}

bool newton_member(const std::vector<long>& alpha, const LatticePoint& m,
                   const ReducedCenter& c, const Int& ell) {
  return center_exceptional_order(c, alpha, m) >= ell;
}

bool root_rescale_check(const ReducedCenter& c, long k) {
  if (k <= 0) return false;
  ReducedCenter ck = c;
  for (auto& [name, n] : ck.params) n *= k;
  if (ck.mon) ck.mon->second *= k;
  ck.ell *= k;

  auto base = blowup_charts(c);
  auto root = blowup_charts(ck);
  if (base.size() != root.size()) return false;
  const long s = c.chart->rank();
  for (size_t idx = 0; idx < base.size(); ++idx) {
    const BlowupChart& x = base[idx];
    const BlowupChart& y = root[idx];
    if (x.kind != y.kind || x.index != y.index) return false;
    if (y.action.order != k * x.action.order) return false;
    if (x.kind == BlowupChart::Kind::Param) {
      if (!x.chart || !y.chart) return false;
      if (x.chart->ordinary != y.chart->ordinary) return false;
      // The root chart's cone is the base cone stretched by k along the
      // exceptional coordinate (the exceptional ray itself is unchanged).
      std::vector<LatticePoint> mapped;
      for (LatticePoint g : x.chart->monoid.gens) {
        g[static_cast<size_t>(s)] *= k;
        mapped.push_back(std::move(g));
      }
      mapped.push_back(unit_last(s + 1));
      if (!cone_equal(y.chart->monoid, make_cone(s + 1, std::move(mapped))))
        return false;
    } else {
      if (x.torsion != y.torsion) return false;
      if (!x.torsion && (!x.chart || !y.chart)) return false;
    }
  }
  return true;
}

}  // namespace logres
