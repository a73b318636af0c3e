#include "logres/cone.hpp"

#include <algorithm>
#include <map>

#include "logres/config.hpp"

namespace logres {

namespace {

ConeDual compute_dual(long rank, const std::vector<LatticePoint>& gens) {
  ConeDual d;
  d.span_basis = lattice_saturation(gens, rank);
  d.dim = static_cast<long>(d.span_basis.size());
  if (d.dim > 0) {
    std::optional<BasisSplit> split = split_basis(d.span_basis, rank);
    if (!split) throw DimensionMismatch("span basis is not saturated");
    d.span_inv.assign(split->inv.begin(), split->inv.begin() + d.dim);
  }
  for (const auto& g : gens) d.gens_span.push_back(imat_apply(d.span_inv, g));

  if (d.dim == 0) {
    d.pointed = true;
    return d;
  }

  // Candidate facet normals come from kernels of (dim-1)-subsets of the
  // generators; a candidate is kept when one orientation is nonnegative on
  // every generator.  Facet normals generate the dual cone, so the collected
  // set has full rank exactly when the cone is pointed.
  const long k = d.dim - 1;
  const long n = static_cast<long>(d.gens_span.size());
  std::vector<long> idx(static_cast<std::size_t>(k));
  std::map<LatticePoint, bool> seen;
  auto consider = [&](const IMat& subset) {
    std::vector<LatticePoint> ker = integer_kernel(subset, d.dim);
    if (ker.size() != 1) return;
    LatticePoint nm = lp_primitive(ker[0]);
    bool pos = true, neg = true;
    for (const auto& g : d.gens_span) {
      Int t = lp_dot(nm, g);
      if (t < 0) pos = false;
      if (t > 0) neg = false;
    }
    if (!pos && !neg) return;
    if (!pos) nm = lp_neg(nm);
    if (seen.emplace(nm, true).second) d.normals.push_back(nm);
  };
  if (k == 0) {
    consider(IMat{});
  } else if (n >= k) {
    for (long i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      IMat subset;
      for (long i = 0; i < k; ++i) subset.push_back(d.gens_span[idx[i]]);
      consider(subset);
      long p = k - 1;
      while (p >= 0 && idx[p] == n - k + p) --p;
      if (p < 0) break;
      ++idx[p];
      for (long q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
    }
  }
  std::sort(d.normals.begin(), d.normals.end(),
            [](const LatticePoint& a, const LatticePoint& b) {
              return lp_cmp(a, b) < 0;
            });
  IMat nm(d.normals.begin(), d.normals.end());
  d.pointed = rank_rational(nm) == d.dim;
  d.height.assign(static_cast<std::size_t>(d.dim), 0);
  for (const auto& f : d.normals) d.height = lp_add(d.height, f);
  return d;
}

}  // namespace

Cone make_cone(long rank, std::vector<LatticePoint> gens) {
  if (rank < 0) throw DimensionMismatch("negative rank");
  Cone c;
  c.rank = rank;
  for (auto& g : gens) {
    if (static_cast<long>(g.size()) != rank) {
      throw DimensionMismatch("generator size does not match rank");
    }
    if (lp_is_zero(g)) continue;
    c.gens.push_back(lp_primitive(g));
  }
  std::sort(c.gens.begin(), c.gens.end(),
            [](const LatticePoint& a, const LatticePoint& b) {
              return lp_cmp(a, b) < 0;
            });
  c.gens.erase(std::unique(c.gens.begin(), c.gens.end()), c.gens.end());
  c.dual = std::make_shared<const ConeDual>(compute_dual(c.rank, c.gens));
  return c;
}

const ConeDual& cone_dual(const Cone& c) {
  if (!c.dual) {
    const_cast<Cone&>(c).dual =
        std::make_shared<const ConeDual>(compute_dual(c.rank, c.gens));
  }
  return *c.dual;
}

std::optional<LatticePoint> cone_span_coords(const Cone& c,
                                             const LatticePoint& v) {
  if (static_cast<long>(v.size()) != c.rank) {
    throw DimensionMismatch("vector size does not match rank");
  }
  const ConeDual& d = cone_dual(c);
  LatticePoint coords = imat_apply(d.span_inv, v);
  // Reconstruct to reject vectors outside the span.
  LatticePoint back(static_cast<std::size_t>(c.rank), 0);
  for (long j = 0; j < d.dim; ++j) {
    back = lp_add(back, lp_scale(coords[j], d.span_basis[j]));
  }
  if (lp_cmp(back, v) != 0) return std::nullopt;
  return coords;
}

bool cone_member(const LatticePoint& v, const Cone& c) {
  std::optional<LatticePoint> coords = cone_span_coords(c, v);
  if (!coords) return false;
  const ConeDual& d = cone_dual(c);
  for (const auto& nm : d.normals) {
    if (lp_dot(nm, *coords) < 0) return false;
  }
  return true;
}

bool cone_is_pointed(const Cone& c) { return cone_dual(c).pointed; }

std::vector<LatticePoint> hilbert_basis(const Cone& c) {
  const ConeDual& d = cone_dual(c);
  if (!d.pointed) throw NotPointed("hilbert basis of a non-pointed cone");
  if (d.dim == 0) return {};

  Int bound = 1;
  for (const auto& g : d.gens_span) {
    for (const Int& x : g) bound = std::max(bound, iabs(x));
  }
  Int factor = std::max<Int>(limits().hilbert_box_factor, d.dim);
  Int radius = factor * bound;
  Int count = 1;
  for (long j = 0; j < d.dim; ++j) count *= 2 * radius + 1;
  if (count > limits().hilbert_enum_max) {
    throw HilbertBoundExceeded("hilbert enumeration box has " + count.str() +
                               " points");
  }

  long rad = to_long(radius);
  std::vector<LatticePoint> members;
  LatticePoint v(static_cast<std::size_t>(d.dim), 0);
  auto in_cone_span = [&](const LatticePoint& w) {
    for (const auto& nm : d.normals) {
      if (lp_dot(nm, w) < 0) return false;
    }
    return true;
  };
  for (long j = 0; j < d.dim; ++j) v[j] = -rad;
  for (;;) {
    if (!lp_is_zero(v) && in_cone_span(v)) members.push_back(v);
    long j = 0;
    while (j < d.dim && v[j] == rad) {
      v[j] = -rad;
      ++j;
    }
    if (j == d.dim) break;
    v[j] += 1;
  }

  // Ascending-height sieve: an element is irreducible when no lower
  // irreducible divides it inside the cone.
  std::sort(members.begin(), members.end(),
            [&](const LatticePoint& a, const LatticePoint& b) {
              Int ha = lp_dot(d.height, a), hb = lp_dot(d.height, b);
              if (ha != hb) return ha < hb;
              return lp_cmp(a, b) < 0;
            });
  std::vector<LatticePoint> irred;
  for (const auto& m : members) {
    bool reducible = false;
    for (const auto& a : irred) {
      if (lp_dot(d.height, a) >= lp_dot(d.height, m)) break;
      if (in_cone_span(lp_sub(m, a))) {
        reducible = true;
        break;
      }
    }
    if (!reducible) irred.push_back(m);
  }

  std::vector<LatticePoint> out;
  for (const auto& m : irred) {
    LatticePoint amb(static_cast<std::size_t>(c.rank), 0);
    for (long j = 0; j < d.dim; ++j) {
      amb = lp_add(amb, lp_scale(m[j], d.span_basis[j]));
    }
    out.push_back(std::move(amb));
  }
  std::sort(out.begin(), out.end(),
            [](const LatticePoint& a, const LatticePoint& b) {
              return lp_cmp(a, b) < 0;
            });
  return out;
}

bool cone_equal(const Cone& a, const Cone& b) {
  if (a.rank != b.rank) return false;
  for (const auto& g : a.gens) {
    if (!cone_member(g, b)) return false;
  }
  for (const auto& g : b.gens) {
    if (!cone_member(g, a)) return false;
  }
  return true;
}

std::vector<size_t> face_normal_set(const Cone& c,
                                    const std::vector<LatticePoint>& pts) {
  const ConeDual& d = cone_dual(c);
  std::vector<LatticePoint> coords;
  for (const auto& p : pts) {
    std::optional<LatticePoint> sc = cone_span_coords(c, p);
    if (!sc) throw DimensionMismatch("face point outside the cone span");
    coords.push_back(*sc);
  }
  std::vector<size_t> out;
  for (size_t i = 0; i < d.normals.size(); ++i) {
    bool vanishes = true;
    for (const auto& sc : coords) {
      if (lp_dot(d.normals[i], sc) != 0) {
        vanishes = false;
        break;
      }
    }
    if (vanishes) out.push_back(i);
  }
  return out;
}

bool on_face(const Cone& c, const std::vector<size_t>& normal_set,
             const LatticePoint& v) {
  std::optional<LatticePoint> sc = cone_span_coords(c, v);
  if (!sc) return false;
  const ConeDual& d = cone_dual(c);
  for (const auto& nm : d.normals) {
    if (lp_dot(nm, *sc) < 0) return false;
  }
  for (size_t i : normal_set) {
    if (lp_dot(d.normals[i], *sc) != 0) return false;
  }
  return true;
}

std::vector<LatticePoint> face_gens(const Cone& c,
                                    const std::vector<size_t>& normal_set) {
  std::vector<LatticePoint> out;
  for (const auto& g : c.gens) {
    if (on_face(c, normal_set, g)) out.push_back(g);
  }
  return out;
}

}  // namespace logres
