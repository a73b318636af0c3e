// Copyright (c) 2026 the logres authors.
// SPDX-License-Identifier: MIT

#include "logres/chart.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

#include "logres/config.hpp"

namespace logres {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char ch : s) {
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  }
  return true;
}

long norm_weight(long w, long order) {
  long r = w % order;
  return r < 0 ? r + order : r;
}

std::vector<LatticePoint> sorted_set(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end(),
            [](const LatticePoint& x, const LatticePoint& y) {
              return lp_cmp(x, y) < 0;
            });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

using RMat = std::vector<std::vector<Rat>>;

std::optional<RMat> rmat_inverse(const RMat& m) {
  const std::size_t s = m.size();
  RMat w(s, std::vector<Rat>(2 * s, Rat(0)));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) w[i][j] = m[i][j];
    w[i][s + i] = Rat(1);
  }
  for (std::size_t c = 0; c < s; ++c) {
    std::size_t piv = s;
    for (std::size_t r = c; r < s; ++r) {
      if (w[r][c] != 0) {
        piv = r;
        break;
      }
    }
    if (piv == s) return std::nullopt;
    std::swap(w[piv], w[c]);
    Rat d = w[c][c];
    for (std::size_t j = 0; j < 2 * s; ++j) w[c][j] /= d;
    for (std::size_t r = 0; r < s; ++r) {
      if (r == c || w[r][c] == 0) continue;
      Rat q = w[r][c];
      for (std::size_t j = 0; j < 2 * s; ++j) w[r][j] -= q * w[c][j];
    }
  }
  RMat inv(s, std::vector<Rat>(s));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) inv[i][j] = w[i][s + j];
  }
  return inv;
}

}  // namespace

long LogChart::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < ordinary.size(); ++i) {
    if (ordinary[i] == name) return static_cast<long>(i);
  }
  return -1;
}

bool LogChart::has_name(const std::string& name) const {
  return var_index(name) >= 0 || monomial_names.count(name) > 0;
}

ChartPtr make_chart(LogChart c) {
  c.monoid = make_cone(c.monoid.rank, c.monoid.gens);
  if (!cone_is_pointed(c.monoid)) {
    throw NotPointed("chart monoid is not pointed");
  }
  std::set<std::string> names;
  for (const auto& v : c.ordinary) {
    if (!valid_name(v)) throw DimensionMismatch("invalid variable name: " + v);
    if (!names.insert(v).second) {
      throw DimensionMismatch("duplicate name: " + v);
    }
  }
  for (const auto& [name, pt] : c.monomial_names) {
    if (!valid_name(name)) throw DimensionMismatch("invalid monomial name: " + name);
    if (!names.insert(name).second) {
      throw DimensionMismatch("duplicate name: " + name);
    }
    if (static_cast<long>(pt.size()) != c.rank()) {
      throw DimensionMismatch("named point size does not match rank");
    }
    if (lp_is_zero(pt)) {
      throw DimensionMismatch("named point must be nonzero: " + name);
    }
    if (!cone_member(pt, c.monoid)) {
      throw DimensionMismatch("named point outside the monoid: " + name);
    }
  }
  for (const auto& e : c.exceptional) {
    if (lp_is_zero(e) || !cone_member(e, c.monoid)) {
      throw DimensionMismatch("exceptional point outside the monoid");
    }
  }
  c.exceptional = sorted_set(std::move(c.exceptional));
  for (auto& act : c.actions) {
    if (act.order < 1) throw DimensionMismatch("action order must be positive");
    if (static_cast<long>(act.lattice_weights.size()) != c.rank()) {
      throw DimensionMismatch("action lattice weights size mismatch");
    }
    for (auto& [name, w] : act.ordinary_weights) {
      if (c.var_index(name) < 0) {
        throw DimensionMismatch("action weight on unknown variable: " + name);
      }
      w = norm_weight(w, act.order);
    }
    for (auto& w : act.lattice_weights) w = norm_weight(w, act.order);
  }
  return std::make_shared<const LogChart>(std::move(c));
}

bool chart_free(const LogChart& c) {
  const ConeDual& d = cone_dual(c.monoid);
  if (d.dim == 0) return true;
  std::vector<LatticePoint> hb = hilbert_basis(c.monoid);
  if (static_cast<long>(hb.size()) != d.dim) return false;
  IMat span(hb.size());
  for (std::size_t i = 0; i < hb.size(); ++i) {
    std::optional<LatticePoint> sc = cone_span_coords(c.monoid, hb[i]);
    if (!sc) return false;
    span[i] = *sc;
  }
  if (!imat_inverse_unimodular(span)) return false;
  for (const auto& h : hb) {
    bool named = false;
    for (const auto& [name, pt] : c.monomial_names) {
      if (lp_cmp(pt, h) == 0) {
        named = true;
        break;
      }
    }
    if (!named) return false;
  }
  return true;
}

std::vector<std::string> free_basis_names(const LogChart& c) {
  if (!chart_free(c)) throw NotFreeChart("chart monoid is not free");
  std::vector<std::string> out;
  for (long k = 0; k < c.rank(); ++k) {
    LatticePoint e(static_cast<size_t>(c.rank()), Int(0));
    e[static_cast<size_t>(k)] = 1;
    for (const auto& [name, pt] : c.monomial_names) {
      if (lp_cmp(pt, e) == 0) {
        out.push_back(name);
        break;
      }
    }
  }
  return out;
}

bool RatPoint::is_origin() const {
  for (const auto& [name, v] : ordinary_values) {
    if (v != 0) return false;
  }
  for (const auto& [name, v] : monomial_values) {
    if (v != 0) return false;
  }
  return true;
}

std::string RatPoint::str() const {
  std::ostringstream out;
  out << "(";
  bool first = true;
  for (const auto& [name, v] : ordinary_values) {
    if (v == 0) continue;
    if (!first) out << ",";
    out << name << "=" << rat_str(v);
    first = false;
  }
  for (const auto& [name, v] : monomial_values) {
    if (v == 0) continue;
    if (!first) out << ",";
    out << name << "=" << rat_str(v);
    first = false;
  }
  out << ")";
  return out.str();
}

Tri chart_isomorphic(const LogChart& a, const LogChart& b) {
  if (a.ordinary.size() != b.ordinary.size()) return Tri::False;
  const ConeDual& da = cone_dual(a.monoid);
  const ConeDual& db = cone_dual(b.monoid);
  if (da.dim != db.dim) return Tri::False;

  std::vector<long> orders_a, orders_b;
  for (const auto& act : a.actions) orders_a.push_back(act.order);
  for (const auto& act : b.actions) orders_b.push_back(act.order);
  std::sort(orders_a.begin(), orders_a.end());
  std::sort(orders_b.begin(), orders_b.end());
  if (orders_a != orders_b) return Tri::False;

  auto named_set = [](const LogChart& c) {
    std::vector<LatticePoint> pts;
    for (const auto& [name, pt] : c.monomial_names) pts.push_back(pt);
    return sorted_set(std::move(pts));
  };
  std::vector<LatticePoint> named_a = named_set(a), named_b = named_set(b);
  std::vector<LatticePoint> exc_a = sorted_set(a.exceptional);
  std::vector<LatticePoint> exc_b = sorted_set(b.exceptional);
  if (named_a.size() != named_b.size()) return Tri::False;
  if (exc_a.size() != exc_b.size()) return Tri::False;

  const long dim = da.dim;
  if (dim == 0) return Tri::True;

  std::vector<LatticePoint> ha = hilbert_basis(a.monoid);
  std::vector<LatticePoint> hb = hilbert_basis(b.monoid);
  if (ha.size() != hb.size()) return Tri::False;
  if (ha.size() > 10) return Tri::Unknown;

  auto to_span = [](const ConeDual& d, const std::vector<LatticePoint>& pts) {
    std::vector<LatticePoint> out;
    for (const auto& p : pts) out.push_back(imat_apply(d.span_inv, p));
    return out;
  };
  std::vector<LatticePoint> ha_s = to_span(da, ha), hb_s = to_span(db, hb);
  std::vector<LatticePoint> na_s = sorted_set(to_span(da, named_a));
  std::vector<LatticePoint> nb_s = sorted_set(to_span(db, named_b));
  std::vector<LatticePoint> ea_s = sorted_set(to_span(da, exc_a));
  std::vector<LatticePoint> eb_s = sorted_set(to_span(db, exc_b));

  // Pick a rational basis of the a-side span from its Hilbert basis.
  std::vector<std::size_t> base;
  {
    IMat acc;
    for (std::size_t i = 0; i < ha_s.size() && static_cast<long>(base.size()) < dim; ++i) {
      acc.push_back(ha_s[i]);
      if (rank_rational(acc) == static_cast<long>(acc.size())) {
        base.push_back(i);
      } else {
        acc.pop_back();
      }
    }
    if (static_cast<long>(base.size()) != dim) return Tri::Unknown;
  }

  // Candidate map M sends the chosen basis onto a tuple of b-side Hilbert
  // elements; accept when M is unimodular and matches all recorded sets.
  RMat acols(dim, std::vector<Rat>(dim));
  for (long j = 0; j < dim; ++j) {
    for (long i = 0; i < dim; ++i) acols[i][j] = Rat(ha_s[base[j]][i]);
  }
  std::optional<RMat> ainv = rmat_inverse(acols);
  if (!ainv) return Tri::Unknown;

  auto lattice_char_span = [](const LogChart& c, const ConeDual& d,
                              const GroupAction& act) {
    // Character on span coordinates: value on each span basis vector.
    LatticePoint lc;
    for (const auto& bvec : d.span_basis) {
      Int t = 0;
      for (std::size_t j = 0; j < bvec.size(); ++j) {
        t += Int(act.lattice_weights[j]) * bvec[j];
      }
      (void)c;
      lc.push_back(t);
    }
    return lc;
  };

  std::vector<std::size_t> pick(dim);
  std::vector<bool> used(hb_s.size(), false);
  long tried = 0;
  const long kTryBound = 200000;
  bool exhausted = false;

  std::function<Tri(long)> search = [&](long depth) -> Tri {
    if (++tried > kTryBound) {
      exhausted = true;
      return Tri::False;
    }
    if (depth == dim) {
      RMat m(dim, std::vector<Rat>(dim, Rat(0)));
      for (long i = 0; i < dim; ++i) {
        for (long j = 0; j < dim; ++j) {
          for (long t = 0; t < dim; ++t) {
            m[i][j] += Rat(hb_s[pick[t]][i]) * (*ainv)[t][j];
          }
        }
      }
      IMat mi(dim, LatticePoint(dim));
      for (long i = 0; i < dim; ++i) {
        for (long j = 0; j < dim; ++j) {
          if (!is_integer(m[i][j])) return Tri::False;
          mi[i][j] = rnum(m[i][j]);
        }
      }
      if (!imat_inverse_unimodular(mi)) return Tri::False;
      auto image_set = [&](const std::vector<LatticePoint>& pts) {
        std::vector<LatticePoint> out;
        for (const auto& p : pts) out.push_back(imat_apply(mi, p));
        return sorted_set(std::move(out));
      };
      if (image_set(ha_s) != sorted_set(hb_s)) return Tri::False;
      if (image_set(na_s) != nb_s) return Tri::False;
      if (image_set(ea_s) != eb_s) return Tri::False;
      // Action characters: transported multiset comparison.
      std::multiset<std::string> ca, cb;
      for (const auto& act : a.actions) {
        LatticePoint lc = lattice_char_span(a, da, act);
        // Transport along M: the character on the image span basis.
        std::vector<Rat> row(dim, Rat(0));
        std::optional<RMat> minv_r = rmat_inverse(m);
        if (!minv_r) return Tri::False;
        LatticePoint tc(dim, 0);
        for (long j = 0; j < dim; ++j) {
          Rat t = 0;
          for (long i = 0; i < dim; ++i) t += Rat(lc[i]) * (*minv_r)[i][j];
          if (!is_integer(t)) return Tri::False;
          tc[j] = rnum(t);
        }
        std::ostringstream key;
        key << act.order << ":";
        for (long j = 0; j < dim; ++j) {
          Int r = tc[j] % act.order;
          if (r < 0) r += act.order;
          key << r << ",";
        }
        ca.insert(key.str());
      }
      for (const auto& act : b.actions) {
        LatticePoint lc = lattice_char_span(b, db, act);
        std::ostringstream key;
        key << act.order << ":";
        for (long j = 0; j < dim; ++j) {
          Int r = lc[j] % act.order;
          if (r < 0) r += act.order;
          key << r << ",";
        }
        cb.insert(key.str());
      }
      if (ca != cb) return Tri::False;
      return Tri::True;
    }
    for (std::size_t j = 0; j < hb_s.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      pick[depth] = j;
      Tri r = search(depth + 1);
      used[j] = false;
      if (r == Tri::True) return r;
      if (exhausted) return Tri::False;
    }
    return Tri::False;
  };

  Tri r = search(0);
  if (r == Tri::True) return Tri::True;
  if (exhausted) return Tri::Unknown;
  return Tri::False;
}

}  // namespace logres
