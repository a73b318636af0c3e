// Copyright (c) 2026 the logres authors.
// SPDX-License-Identifier: MIT

#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

#include "logres/groebner.hpp"

namespace logres::oracles {

namespace {

// Exact phase-1 simplex.  Minimizes the sum of artificial variables for
// A*lambda + artificials = b, lambda >= 0; feasibility holds iff the optimum
// is zero.  Bland's rule over all columns guarantees termination.
class Phase1 {
public:
  Phase1(const std::vector<LatticePoint>& gens, const LatticePoint& v) {
    m_ = v.size();
    n_ = gens.size();
    tab_.assign(m_, std::vector<Rat>(n_ + m_ + 1, Rat(0)));
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      Rat bi(v[i]);
      bool neg = v[i] < 0;
      for (std::size_t j = 0; j < n_; ++j) {
        Rat aij(gens[j][i]);
        tab_[i][j] = neg ? -aij : aij;
      }
      tab_[i][n_ + i] = Rat(1);
      tab_[i][n_ + m_] = neg ? -bi : bi;
      basis_[i] = n_ + i;
    }
  }

  bool feasible() {
    std::vector<Rat> cost(n_ + m_ + 1, Rat(0));
    // Reduced costs for the all-artificial basis.
    for (std::size_t j = 0; j < n_ + m_; ++j) {
      Rat s(0);
      for (std::size_t i = 0; i < m_; ++i) s += tab_[i][j];
      cost[j] = (j < n_ ? Rat(0) : Rat(1)) - s;
    }
    while (true) {
      std::size_t enter = n_ + m_;
      for (std::size_t j = 0; j < n_ + m_; ++j) {
        if (cost[j] < 0) { enter = j; break; }
      }
      if (enter == n_ + m_) break;
      std::size_t leave = m_;
      Rat best(0);
      for (std::size_t i = 0; i < m_; ++i) {
        if (tab_[i][enter] > 0) {
          Rat ratio = tab_[i][n_ + m_] / tab_[i][enter];
          if (leave == m_ || ratio < best ||
              (ratio == best && basis_[i] < basis_[leave])) {
            best = ratio;
            leave = i;
          }
        }
      }
      if (leave == m_) throw std::logic_error("phase-1 unbounded");
      pivot(leave, enter, cost);
    }
    Rat obj(0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] >= n_) obj += tab_[i][n_ + m_];
    }
    return obj == 0;
  }

private:
  void pivot(std::size_t r, std::size_t c, std::vector<Rat>& cost) {
    Rat piv = tab_[r][c];
    for (auto& x : tab_[r]) x /= piv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || tab_[i][c] == 0) continue;
      Rat f = tab_[i][c];
      for (std::size_t j = 0; j <= n_ + m_; ++j) tab_[i][j] -= f * tab_[r][j];
    }
    if (cost[c] != 0) {
      Rat f = cost[c];
      for (std::size_t j = 0; j <= n_ + m_; ++j) cost[j] -= f * tab_[r][j];
    }
    basis_[r] = c;
  }

  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::vector<std::vector<Rat>> tab_;
  std::vector<std::size_t> basis_;
};

}  // namespace

bool lp_cone_member(const LatticePoint& v,
                    const std::vector<LatticePoint>& gens) {
  bool zero = true;
  for (const auto& x : v) {
    if (x != 0) { zero = false; break; }
  }
  if (zero) return true;
  if (gens.empty()) return false;
  for (const auto& g : gens) {
    if (g.size() != v.size()) throw std::logic_error("oracle dimension");
  }
  Phase1 lp(gens, v);
  return lp.feasible();
}

std::vector<LatticePoint> box_hilbert_basis(
    long rank, const std::vector<LatticePoint>& gens) {
  std::vector<LatticePoint> pool;
  if (gens.empty() || rank == 0) return pool;
  Int maxc(0);
  for (const auto& g : gens)
    for (const auto& x : g) maxc = std::max(maxc, iabs(x));
  if (maxc == 0) return pool;
  Int bound = Int(gens.size()) * maxc;
  std::vector<Int> lo(rank), hi(rank);
  for (long j = 0; j < rank; ++j) {
    bool has_neg = false;
    bool has_pos = false;
    for (const auto& g : gens) {
      if (g[j] < 0) has_neg = true;
      if (g[j] > 0) has_pos = true;
    }
    lo[j] = has_neg ? -bound : Int(0);
    hi[j] = has_pos ? bound : Int(0);
  }
  LatticePoint v(rank, Int(0));
  std::vector<LatticePoint> box;
  // Depth-first sweep over the box.
  std::vector<long> idx;
  for (long j = 0; j < rank; ++j) v[j] = lo[j];
  while (true) {
    bool zero = true;
    for (const auto& x : v) {
      if (x != 0) { zero = false; break; }
    }
    if (!zero && lp_cone_member(v, gens)) box.push_back(v);
    long j = rank - 1;
    while (j >= 0 && v[j] == hi[j]) {
      v[j] = lo[j];
      --j;
    }
    if (j < 0) break;
    v[j] += 1;
  }
  std::vector<LatticePoint> irr;
  for (const auto& p : box) {
    bool reducible = false;
    for (const auto& q : box) {
      if (q == p) continue;
      LatticePoint r(rank);
      bool rz = true;
      for (long j = 0; j < rank; ++j) {
        r[j] = p[j] - q[j];
        if (r[j] != 0) rz = false;
      }
      if (rz) continue;
      if (lp_cone_member(r, gens)) { reducible = true; break; }
    }
    if (!reducible) irr.push_back(p);
  }
  std::sort(irr.begin(), irr.end());
  return irr;
}

Ideal derivative_saturation_oracle(const Ideal& i) {
  Ideal cur = i;
  for (int step = 0; step < 200; ++step) {
    Ideal next = derivative_ideal(cur, 1);
    if (ideal_equal(next, cur)) return cur;
    cur = next;
  }
  throw std::logic_error("derivative saturation did not stabilize");
}

bool same_point_set(std::vector<LatticePoint> a, std::vector<LatticePoint> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace logres::oracles
