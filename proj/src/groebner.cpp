// Copyright (c) 2026 the logres authors.
// SPDX-License-Identifier: MIT

#include "logres/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "logres/config.hpp"

namespace logres {

namespace {

using Expo = std::vector<long>;

long expo_deg(const Expo& e) {
  long d = 0;
  for (long x : e) d += x;
  return d;
}

// Monomial order on exponent vectors: graded reverse lexicographic, with an
// optional leading elimination tag variable at index 0.
struct MOrder {
  bool tag = false;

  // a < b
  bool less(const Expo& a, const Expo& b) const {
    std::size_t begin = 0;
    if (tag) {
      if (a[0] != b[0]) return a[0] < b[0];
      begin = 1;
    }
    long da = 0, db = 0;
    for (std::size_t i = begin; i < a.size(); ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da < db;
    for (std::size_t i = a.size(); i-- > begin;) {
      if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
  }
};

struct DescCmp {
  const MOrder* ord;
  bool operator()(const Expo& a, const Expo& b) const { return ord->less(b, a); }
};

using EPoly = std::map<Expo, Rat, DescCmp>;

EPoly epoly(const MOrder& ord) { return EPoly(DescCmp{&ord}); }

void eadd(EPoly& f, const Expo& e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = f.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) f.erase(it);
  }
}

// f -= c * x^shift * g
void esub_mul(EPoly& f, const Rat& c, const Expo& shift, const EPoly& g) {
  for (const auto& [e, v] : g) {
    Expo ne(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) ne[i] = e[i] + shift[i];
    eadd(f, ne, -(c * v));
  }
}

bool divides(const Expo& a, const Expo& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

// Full normal form of f modulo the basis.
EPoly ereduce(const MOrder& ord, EPoly f, const std::vector<EPoly>& basis) {
  EPoly rem = epoly(ord);
  while (!f.empty()) {
    const Expo& lead = f.begin()->first;
    const Rat lc = f.begin()->second;
    bool hit = false;
    for (const auto& b : basis) {
      if (b.empty()) continue;
      const Expo& bl = b.begin()->first;
      if (!divides(bl, lead)) continue;
      Expo shift(lead.size());
      for (std::size_t i = 0; i < lead.size(); ++i) shift[i] = lead[i] - bl[i];
      esub_mul(f, lc / b.begin()->second, shift, b);
      hit = true;
      break;
    }
    if (!hit) {
      rem.emplace(lead, lc);
      f.erase(f.begin());
    }
  }
  return rem;
}

void check_degree(const EPoly& f) {
  if (f.empty()) return;
  if (expo_deg(f.begin()->first) > limits().gb_max_degree) {
    throw ResourceBound("groebner degree bound exceeded");
  }
}

std::vector<EPoly> buchberger(const MOrder& ord, std::vector<EPoly> basis) {
  basis.erase(std::remove_if(basis.begin(), basis.end(),
                             [](const EPoly& f) { return f.empty(); }),
              basis.end());
  for (auto& f : basis) check_degree(f);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);
  }
  for (std::size_t q = 0; q < pairs.size(); ++q) {
    auto [i, j] = pairs[q];
    const Expo& li = basis[i].begin()->first;
    const Expo& lj = basis[j].begin()->first;
    Expo lcm(li.size());
    bool coprime = true;
    for (std::size_t t = 0; t < li.size(); ++t) {
      lcm[t] = std::max(li[t], lj[t]);
      if (li[t] > 0 && lj[t] > 0) coprime = false;
    }
    if (coprime) continue;
    EPoly s = epoly(ord);
    {
      Expo si(li.size()), sj(lj.size());
      for (std::size_t t = 0; t < li.size(); ++t) {
        si[t] = lcm[t] - li[t];
        sj[t] = lcm[t] - lj[t];
      }
      esub_mul(s, Rat(-1) / basis[i].begin()->second, si, basis[i]);
      esub_mul(s, Rat(1) / basis[j].begin()->second, sj, basis[j]);
    }
    EPoly r = ereduce(ord, std::move(s), basis);
    if (r.empty()) continue;
    check_degree(r);
    basis.push_back(std::move(r));
    std::size_t k = basis.size() - 1;
    if (static_cast<long>(basis.size()) > limits().gb_max_basis) {
      throw ResourceBound("groebner basis bound exceeded");
    }
    for (std::size_t t = 0; t < k; ++t) pairs.emplace_back(t, k);
  }

  // Minimalize: drop elements whose lead is divisible by another lead.
  std::vector<EPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < basis.size() && !drop; ++j) {
      if (i == j) continue;
      const Expo& li = basis[i].begin()->first;
      const Expo& lj = basis[j].begin()->first;
      if (divides(lj, li) && (li != lj || j < i)) drop = true;
    }
    if (!drop) minimal.push_back(basis[i]);
  }
  // Tail-reduce and normalize.
  std::vector<EPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<EPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    EPoly r = ereduce(ord, minimal[i], others);
    if (r.empty()) continue;
    Rat lc = r.begin()->second;
    for (auto& [e, c] : r) c /= lc;
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const EPoly& a, const EPoly& b) {
    return ord.less(b.begin()->first, a.begin()->first);
  });
  return reduced;
}

// Translation between chart polynomials and exponent vectors on a free chart.
struct FreeVars {
  ChartPtr chart;
  std::vector<LatticePoint> hb;      // monoid basis, ambient coordinates
  IMat hb_inv;                       // span coords -> basis exponents
  long dim = 0;
  bool tag = false;

  std::size_t width() const {
    return (tag ? 1 : 0) + chart->ordinary.size() + static_cast<std::size_t>(dim);
  }

  Expo key_to_expo(const TermKey& k) const {
    Expo e(width(), 0);
    std::size_t off = tag ? 1 : 0;
    for (std::size_t i = 0; i < k.ord.size(); ++i) e[off + i] = k.ord[i];
    if (dim > 0) {
      std::optional<LatticePoint> sc = cone_span_coords(chart->monoid, k.lat);
      if (!sc) throw DimensionMismatch("term outside the monoid span");
      LatticePoint be = imat_apply(hb_inv, *sc);
      for (long j = 0; j < dim; ++j) {
        if (be[j] < 0) throw DimensionMismatch("term outside the free monoid");
        e[off + k.ord.size() + j] = to_long(be[j]);
      }
    }
    return e;
  }

  Poly expo_to_poly(const Expo& e, const Rat& c) const {
    std::size_t off = tag ? 1 : 0;
    std::vector<long> ord(chart->ordinary.size());
    for (std::size_t i = 0; i < ord.size(); ++i) ord[i] = e[off + i];
    LatticePoint lat(chart->rank(), 0);
    for (long j = 0; j < dim; ++j) {
      lat = lp_add(lat, lp_scale(Int(e[off + ord.size() + j]), hb[j]));
    }
    return Poly::term(chart, std::move(ord), std::move(lat), c);
  }

  EPoly to_epoly(const MOrder& ord, const Poly& p) const {
    EPoly f = epoly(ord);
    for (const auto& [k, c] : p.terms()) eadd(f, key_to_expo(k), c);
    return f;
  }

  Poly to_poly(const EPoly& f) const {
    Poly p(chart);
    for (const auto& [e, c] : f) p = p + expo_to_poly(e, c);
    return p;
  }
};

FreeVars free_vars(const ChartPtr& chart, bool tag) {
  if (!chart) throw DimensionMismatch("ideal without a chart");
  if (!chart_free(*chart)) {
    throw NotFreeChart("groebner engine needs a free chart");
  }
  FreeVars fv;
  fv.chart = chart;
  fv.tag = tag;
  fv.hb = hilbert_basis(chart->monoid);
  fv.dim = static_cast<long>(fv.hb.size());
  if (fv.dim > 0) {
    IMat span(fv.hb.size());
    for (std::size_t i = 0; i < fv.hb.size(); ++i) {
      span[i] = *cone_span_coords(chart->monoid, fv.hb[i]);
    }
    // Exponents of m over the basis: solve against the basis rows.
    std::optional<IMat> inv = imat_inverse_unimodular(imat_transpose(span));
    if (!inv) throw NotFreeChart("monoid basis is not unimodular");
    fv.hb_inv = *inv;
  }
  return fv;
}

}  // namespace

GB gb(const Ideal& i) {
  FreeVars fv = free_vars(i.chart, false);
  MOrder ord;
  std::vector<EPoly> in;
  for (const auto& g : i.gens) in.push_back(fv.to_epoly(ord, g));
  std::vector<EPoly> out = buchberger(ord, std::move(in));
  GB g;
  g.chart = i.chart;
  for (const auto& f : out) g.basis.push_back(fv.to_poly(f));
  return g;
}

bool gb_member(const Poly& f, const GB& g) {
  if (f.is_zero()) return true;
  if (f.chart() != g.chart) {
    throw DimensionMismatch("membership across different charts");
  }
  FreeVars fv = free_vars(g.chart, false);
  MOrder ord;
  std::vector<EPoly> basis;
  for (const auto& b : g.basis) basis.push_back(fv.to_epoly(ord, b));
  EPoly r = ereduce(ord, fv.to_epoly(ord, f), basis);
  return r.empty();
}

bool member(const Poly& f, const Ideal& i) { return gb_member(f, gb(i)); }

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (a.chart != b.chart) {
    throw DimensionMismatch("comparing ideals on different charts");
  }
  GB ga = gb(a), gbb = gb(b);
  if (ga.basis.size() != gbb.basis.size()) return false;
  for (std::size_t i = 0; i < ga.basis.size(); ++i) {
    if (!(ga.basis[i].terms() == gbb.basis[i].terms())) return false;
  }
  return true;
}

bool is_unit_ideal(const Ideal& i) {
  GB g = gb(i);
  return g.basis.size() == 1 && g.basis[0].degree() == 0 &&
         g.basis[0].constant_term() != 0;
}

Ideal saturate_by_var(const Ideal& i, const std::string& var) {
  FreeVars fv = free_vars(i.chart, true);
  MOrder ord;
  ord.tag = true;

  // Position of var in the combined exponent layout.
  Expo vexp(fv.width(), 0);
  long vidx = i.chart->var_index(var);
  if (vidx >= 0) {
    vexp[1 + vidx] = 1;
  } else {
    auto it = i.chart->monomial_names.find(var);
    if (it == i.chart->monomial_names.end()) {
      throw DimensionMismatch("no such name: " + var);
    }
    long pos = -1;
    for (long j = 0; j < fv.dim; ++j) {
      if (lp_cmp(fv.hb[j], it->second) == 0) {
        pos = j;
        break;
      }
    }
    if (pos < 0) {
      throw DimensionMismatch("saturation name is not a basis monomial: " + var);
    }
    vexp[1 + static_cast<long>(i.chart->ordinary.size()) + pos] = 1;
  }

  std::vector<EPoly> in;
  for (const auto& g : i.gens) in.push_back(fv.to_epoly(ord, g));
  // Tag relation y * v = 1 makes v invertible; eliminating y intersects back.
  EPoly rel = epoly(ord);
  Expo yv = vexp;
  yv[0] = 1;
  eadd(rel, yv, Rat(1));
  eadd(rel, Expo(fv.width(), 0), Rat(-1));
  in.push_back(std::move(rel));

  std::vector<EPoly> out = buchberger(ord, std::move(in));
  std::vector<Poly> gens;
  for (const auto& f : out) {
    if (f.empty() || f.begin()->first[0] != 0) continue;
    gens.push_back(fv.to_poly(f));
  }
  return Ideal::make(i.chart, std::move(gens));
}

}  // namespace logres
