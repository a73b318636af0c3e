#include "logres/localize.hpp"

#include <algorithm>
#include <set>

namespace logres {

namespace {

struct NamedValue {
  std::string name;
  LatticePoint point;
  Rat value;
};

// Named monomials with nonzero value at the point, in name order.
std::vector<NamedValue> nonzero_named(const LogChart& chart, const RatPoint& p) {
  for (const auto& [name, v] : p.monomial_values) {
    if (chart.monomial_names.count(name) == 0) {
      throw DimensionMismatch("point value for unknown monomial: " + name);
    }
  }
  for (const auto& [name, v] : p.ordinary_values) {
    if (chart.var_index(name) < 0) {
      throw DimensionMismatch("point value for unknown variable: " + name);
    }
  }
  std::vector<NamedValue> out;
  for (const auto& [name, pt] : chart.monomial_names) {
    auto it = p.monomial_values.find(name);
    if (it != p.monomial_values.end() && it->second != 0) {
      out.push_back({name, pt, it->second});
    }
  }
  return out;
}

Rat value_of_combination(const std::vector<NamedValue>& named,
                         const std::vector<Int>& coeffs) {
  Rat v = 1;
  for (std::size_t i = 0; i < named.size(); ++i) {
    if (coeffs[i] == 0) continue;
    v *= rat_pow(named[i].value, to_long(coeffs[i]));
  }
  return v;
}

}  // namespace

Rat eval_at(const Poly& p, const RatPoint& pt) {
  if (!p.chart()) throw DimensionMismatch("evaluating a chartless polynomial");
  const LogChart& chart = *p.chart();
  std::vector<NamedValue> named = nonzero_named(chart, pt);
  std::vector<LatticePoint> npts;
  for (const auto& nv : named) npts.push_back(nv.point);
  std::vector<size_t> ns = face_normal_set(chart.monoid, npts);

  Rat total = 0;
  for (const auto& [k, c] : p.terms()) {
    Rat term = c;
    bool zero = false;
    for (std::size_t i = 0; i < k.ord.size(); ++i) {
      if (k.ord[i] == 0) continue;
      auto it = pt.ordinary_values.find(chart.ordinary[i]);
      Rat v = it == pt.ordinary_values.end() ? Rat(0) : it->second;
      if (v == 0) {
        zero = true;
        break;
      }
      term *= rat_pow(v, k.ord[i]);
    }
    if (zero) continue;
    if (!lp_is_zero(k.lat)) {
      if (!on_face(chart.monoid, ns, k.lat)) continue;
      std::optional<std::vector<Int>> coeffs = express_in_lattice(npts, k.lat);
      if (!coeffs) {
        throw InconsistentPoint("monomial value not determined by the point");
      }
      term *= value_of_combination(named, *coeffs);
    }
    total += term;
  }
  return total;
}

Localization localize_at(const ChartPtr& chart, const RatPoint& p) {
  if (!chart) throw DimensionMismatch("localizing without a chart");
  const LogChart& src = *chart;
  std::vector<NamedValue> named = nonzero_named(src, p);
  std::vector<LatticePoint> npts;
  for (const auto& nv : named) npts.push_back(nv.point);
  std::vector<size_t> ns = face_normal_set(src.monoid, npts);

  // A zero-valued monomial on the support face would have to be a unit.
  for (const auto& [name, pt] : src.monomial_names) {
    auto it = p.monomial_values.find(name);
    Rat v = it == p.monomial_values.end() ? Rat(0) : it->second;
    if (v == 0 && on_face(src.monoid, ns, pt)) {
      throw InconsistentPoint("zero value for a unit monomial: " + name);
    }
  }

  // Multiplicative relations among the valued monomials must hold.
  {
    IMat cols;
    if (!npts.empty()) {
      cols.assign(npts[0].size(), LatticePoint(npts.size(), 0));
      for (std::size_t i = 0; i < npts.size(); ++i) {
        for (std::size_t j = 0; j < npts[i].size(); ++j) cols[j][i] = npts[i][j];
      }
    }
    for (const auto& rel :
         integer_kernel(cols, static_cast<long>(npts.size()))) {
      if (value_of_combination(named, rel) != 1) {
        throw InconsistentPoint("values violate a monomial relation");
      }
    }
  }

  // The support face: values must determine the character of its full lattice.
  std::vector<LatticePoint> fgens = face_gens(src.monoid, ns);
  Cone face = make_cone(src.rank(), fgens);
  for (const auto& h : hilbert_basis(face)) {
    if (!express_in_lattice(npts, h)) {
      throw InconsistentPoint("values do not determine the face character");
    }
  }
  std::vector<LatticePoint> head = lattice_saturation(fgens, src.rank());
  std::optional<BasisSplit> split = split_basis(head, src.rank());
  if (!split) {
    throw InconsistentPoint("support face lattice is not saturated");
  }
  const long f = split->f;
  const long rank2 = src.rank() - f;

  Localization loc;
  loc.source = chart;
  loc.point = p;
  loc.split = *split;
  for (const auto& [name, v] : p.ordinary_values) {
    if (v != 0) loc.ordinary_shift.emplace_back(name, v);
  }

  // Fresh unit variables for the face basis rows.
  std::set<std::string> taken;
  for (const auto& v : src.ordinary) taken.insert(v);
  for (const auto& [name, pt] : src.monomial_names) taken.insert(name);
  long counter = 1;
  for (long j = 0; j < f; ++j) {
    std::string name;
    do {
      name = "t" + std::to_string(counter++);
    } while (taken.count(name));
    taken.insert(name);
    std::optional<std::vector<Int>> coeffs =
        express_in_lattice(npts, split->rows[j]);
    if (!coeffs) {
      throw InconsistentPoint("values do not determine the face character");
    }
    loc.unit_vars.emplace_back(name, value_of_combination(named, *coeffs));
  }

  auto project = [&](const LatticePoint& v) {
    std::vector<Int> coords = loc.split.coords(v);
    return LatticePoint(coords.begin() + f, coords.end());
  };

  LogChart dst;
  dst.ordinary = src.ordinary;
  for (const auto& [name, v] : loc.unit_vars) dst.ordinary.push_back(name);
  std::vector<LatticePoint> qgens;
  for (const auto& g : src.monoid.gens) {
    LatticePoint q = project(g);
    if (!lp_is_zero(q)) qgens.push_back(q);
  }
  dst.monoid = make_cone(rank2, qgens);
  for (const auto& [name, pt] : src.monomial_names) {
    LatticePoint q = project(pt);
    if (!lp_is_zero(q)) dst.monomial_names[name] = q;
  }
  for (const auto& e : src.exceptional) {
    LatticePoint q = project(e);
    if (!lp_is_zero(q)) dst.exceptional.push_back(q);
  }
  for (const auto& act : src.actions) {
    for (const auto& [name, v] : loc.ordinary_shift) {
      auto it = act.ordinary_weights.find(name);
      if (it != act.ordinary_weights.end() && it->second % act.order != 0) {
        throw EquivariantUnsupported("translation breaks the group action on " +
                                     name);
      }
    }
    auto char_on = [&](const LatticePoint& v) {
      Int t = 0;
      for (std::size_t j = 0; j < v.size(); ++j) {
        t += Int(act.lattice_weights[j]) * v[j];
      }
      return t;
    };
    for (long j = 0; j < f; ++j) {
      if (char_on(loc.split.rows[j]) % act.order != 0) {
        throw EquivariantUnsupported("unit translation breaks the group action");
      }
    }
    GroupAction na;
    na.order = act.order;
    na.ordinary_weights = act.ordinary_weights;
    for (const auto& [name, v] : loc.unit_vars) na.ordinary_weights[name] = 0;
    for (long k = 0; k < rank2; ++k) {
      Int w = char_on(loc.split.rows[f + k]) % act.order;
      if (w < 0) w += act.order;
      na.lattice_weights.push_back(to_long(w));
    }
    dst.actions.push_back(std::move(na));
  }
  loc.target = make_chart(std::move(dst));
  return loc;
}

Poly Localization::transport(const Poly& p) const {
  if (p.chart() != source) {
    throw DimensionMismatch("transporting from the wrong chart");
  }
  const long f = split.f;

  // Clear negative unit exponents for the whole polynomial at once; this
  // multiplies by a unit monomial, which is harmless for ideal data.
  std::vector<Int> mins(static_cast<std::size_t>(f), 0);
  std::vector<std::vector<Int>> coord_cache;
  for (const auto& [k, c] : p.terms()) {
    std::vector<Int> coords = split.coords(k.lat);
    for (long j = 0; j < f; ++j) mins[j] = std::min(mins[j], coords[j]);
    coord_cache.push_back(std::move(coords));
  }

  std::map<std::string, Rat> shift;
  for (const auto& [name, v] : ordinary_shift) shift[name] = v;
  std::vector<Poly> ord_factor;
  for (const auto& name : source->ordinary) {
    Poly base = Poly::var(target, name);
    auto it = shift.find(name);
    if (it != shift.end()) {
      base = base + Poly::constant(target, it->second);
    }
    ord_factor.push_back(base);
  }
  std::vector<Poly> unit_factor;
  for (const auto& [name, v] : unit_vars) {
    unit_factor.push_back(Poly::var(target, name) + Poly::constant(target, v));
  }

  Poly r(target);
  std::size_t ti = 0;
  for (const auto& [k, c] : p.terms()) {
    const std::vector<Int>& coords = coord_cache[ti++];
    LatticePoint tail(coords.begin() + f, coords.end());
    Poly contrib = Poly::monomial(target, tail, c);
    for (std::size_t i = 0; i < k.ord.size(); ++i) {
      if (k.ord[i] > 0) {
        contrib = contrib * ord_factor[i].pow(static_cast<unsigned long>(k.ord[i]));
      }
    }
    for (long j = 0; j < f; ++j) {
      Int e = coords[j] - mins[j];
      if (e > 0) {
        contrib = contrib *
                  unit_factor[j].pow(static_cast<unsigned long>(to_long(e)));
      }
    }
    r = r + contrib;
  }
  return r;
}

Ideal Localization::transport(const Ideal& i) const {
  std::vector<Poly> gens;
  for (const auto& g : i.gens) gens.push_back(transport(g));
  return Ideal::make(target, std::move(gens));
}

Poly stratum_restrict(const Poly& p) { return p.kill_monomials(); }

Ideal stratum_restrict(const Ideal& i) {
  std::vector<Poly> gens;
  for (const auto& g : i.gens) gens.push_back(g.kill_monomials());
  return Ideal::make(i.chart, std::move(gens));
}

}  // namespace logres
