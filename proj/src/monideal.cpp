#include "logres/monideal.hpp"

#include <algorithm>

namespace logres {

MonIdeal make_mon_ideal(Cone ambient, std::vector<LatticePoint> gens) {
  for (const auto& g : gens) {
    if (!cone_member(g, ambient)) {
      throw DimensionMismatch("monomial ideal generator outside the monoid");
    }
  }
  std::sort(gens.begin(), gens.end(),
            [](const LatticePoint& a, const LatticePoint& b) {
              return lp_cmp(a, b) < 0;
            });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // Drop generators divisible by another one in the monoid.
  std::vector<LatticePoint> minimal;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j) continue;
      if (lp_cmp(gens[i], gens[j]) == 0) continue;
      if (cone_member(lp_sub(gens[i], gens[j]), ambient)) {
        // Mutual divisibility would drop both; keep the smaller index then.
        if (cone_member(lp_sub(gens[j], gens[i]), ambient) && j > i) continue;
        redundant = true;
      }
    }
    if (!redundant) minimal.push_back(gens[i]);
  }
  MonIdeal q;
  q.ambient = std::move(ambient);
  q.gens = std::move(minimal);
  return q;
}

bool mon_ideal_member(const LatticePoint& v, const MonIdeal& q) {
  for (const auto& g : q.gens) {
    if (cone_member(lp_sub(v, g), q.ambient)) return true;
  }
  return false;
}

long mon_ideal_saturate_exponent(const LatticePoint& v, const LatticePoint& e,
                                 const Cone& c) {
  if (!cone_member(v, c)) {
    throw DimensionMismatch("saturation exponent of a point outside the monoid");
  }
  if (lp_is_zero(e)) throw DimensionMismatch("saturation by the zero direction");
  if (!cone_is_pointed(c)) throw NotPointed("saturation in a non-pointed cone");
  if (cone_member(lp_neg(e), c)) {
    throw DimensionMismatch("saturation direction is invertible on the cone");
  }
  long t = 0;
  LatticePoint w = lp_sub(v, e);
  while (cone_member(w, c)) {
    ++t;
    w = lp_sub(w, e);
  }
  return t;
}

MonIdeal mon_ideal_dilate(const MonIdeal& q, const Int& k) {
  if (k <= 0) throw DimensionMismatch("dilation by a nonpositive factor");
  std::vector<LatticePoint> gens;
  for (const auto& g : q.gens) gens.push_back(lp_scale(k, g));
  return make_mon_ideal(q.ambient, std::move(gens));
}

bool mon_ideal_equal(const MonIdeal& a, const MonIdeal& b) {
  if (!cone_equal(a.ambient, b.ambient)) return false;
  for (const auto& g : a.gens) {
    if (!mon_ideal_member(g, b)) return false;
  }
  for (const auto& g : b.gens) {
    if (!mon_ideal_member(g, a)) return false;
  }
  return true;
}

}  // namespace logres
