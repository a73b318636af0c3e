#include "logres/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace logres {

namespace {

void require_same_size(const LatticePoint& a, const LatticePoint& b) {
  if (a.size() != b.size()) throw DimensionMismatch("lattice point size mismatch");
}

IMat imat_identity(long s) {
  IMat m(static_cast<std::size_t>(s), LatticePoint(static_cast<std::size_t>(s), 0));
  for (long i = 0; i < s; ++i) m[i][i] = 1;
  return m;
}

// Reduces the first `head_cols` columns of m to row echelon form by unimodular
// row operations.  Returns the list of pivot columns in row order.
std::vector<long> row_echelon(IMat& m, long head_cols) {
  std::vector<long> pivots;
  std::size_t r0 = 0;
  for (long c = 0; c < head_cols && r0 < m.size(); ++c) {
    for (;;) {
      std::size_t best = m.size();
      int nonzero = 0;
      for (std::size_t r = r0; r < m.size(); ++r) {
        if (m[r][c] == 0) continue;
        ++nonzero;
        if (best == m.size() || iabs(m[r][c]) < iabs(m[best][c])) best = r;
      }
      if (nonzero == 0) break;
      if (nonzero == 1) {
        std::swap(m[best], m[r0]);
        pivots.push_back(c);
        ++r0;
        break;
      }
      for (std::size_t r = r0; r < m.size(); ++r) {
        if (r == best || m[r][c] == 0) continue;
        Int q = m[r][c] / m[best][c];
        if (q != 0) {
          for (std::size_t j = 0; j < m[r].size(); ++j) m[r][j] -= q * m[best][j];
        }
      }
    }
  }
  return pivots;
}

}  // namespace

LatticePoint lp_add(const LatticePoint& a, const LatticePoint& b) {
  require_same_size(a, b);
  LatticePoint r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

LatticePoint lp_sub(const LatticePoint& a, const LatticePoint& b) {
  require_same_size(a, b);
  LatticePoint r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

LatticePoint lp_neg(const LatticePoint& a) {
  LatticePoint r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

LatticePoint lp_scale(const Int& k, const LatticePoint& a) {
  LatticePoint r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

bool lp_is_zero(const LatticePoint& a) {
  for (const Int& x : a) {
    if (x != 0) return false;
  }
  return true;
}

Int lp_dot(const LatticePoint& a, const LatticePoint& b) {
  require_same_size(a, b);
  Int r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

Rat lp_dot_rat(const std::vector<Rat>& f, const LatticePoint& a) {
  if (f.size() != a.size()) throw DimensionMismatch("functional size mismatch");
  Rat r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += f[i] * Rat(a[i]);
  return r;
}

Int lp_content(const LatticePoint& a) {
  Int g = 0;
  for (const Int& x : a) g = igcd(g, x);
  return g;
}

LatticePoint lp_primitive(const LatticePoint& a) {
  Int g = lp_content(a);
  if (g <= 1) return a;
  LatticePoint r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
  return r;
}

std::string lp_str(const LatticePoint& a) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out << ",";
    out << a[i];
  }
  out << ")";
  return out.str();
}

int lp_cmp(const LatticePoint& a, const LatticePoint& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

IMat imat_transpose(const IMat& a) {
  if (a.empty()) return {};
  IMat r(a[0].size(), LatticePoint(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
  }
  return r;
}

LatticePoint imat_apply(const IMat& a, const LatticePoint& v) {
  LatticePoint r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = lp_dot(a[i], v);
  return r;
}

std::vector<LatticePoint> integer_kernel(const IMat& a, long ncols) {
  const long m = static_cast<long>(a.size());
  // Rows of [A^T | I]; after echelonizing the A^T block, rows with zero head
  // carry a saturated kernel basis in the identity block.
  IMat work(static_cast<std::size_t>(ncols),
            LatticePoint(static_cast<std::size_t>(m + ncols), 0));
  for (long i = 0; i < ncols; ++i) {
    for (long r = 0; r < m; ++r) {
      if (static_cast<long>(a[r].size()) != ncols) {
        throw DimensionMismatch("matrix row size mismatch");
      }
      work[i][r] = a[r][i];
    }
    work[i][m + i] = 1;
  }
  std::vector<long> pivots = row_echelon(work, m);
  std::vector<LatticePoint> kernel;
  for (std::size_t r = pivots.size(); r < work.size(); ++r) {
    LatticePoint v(work[r].begin() + m, work[r].end());
    kernel.push_back(std::move(v));
  }
  return kernel;
}

std::vector<LatticePoint> lattice_saturation(const std::vector<LatticePoint>& v,
                                             long s) {
  IMat a;
  for (const auto& row : v) {
    if (static_cast<long>(row.size()) != s) {
      throw DimensionMismatch("lattice point size mismatch");
    }
    a.push_back(row);
  }
  std::vector<LatticePoint> k = integer_kernel(a, s);
  IMat km(k.begin(), k.end());
  return integer_kernel(km, s);
}

std::optional<std::vector<Int>> express_in_lattice(
    const std::vector<LatticePoint>& gens, const LatticePoint& target) {
  const long s = static_cast<long>(target.size());
  const long k = static_cast<long>(gens.size());
  IMat work(static_cast<std::size_t>(k),
            LatticePoint(static_cast<std::size_t>(s + k), 0));
  for (long i = 0; i < k; ++i) {
    if (static_cast<long>(gens[i].size()) != s) {
      throw DimensionMismatch("lattice point size mismatch");
    }
    for (long j = 0; j < s; ++j) work[i][j] = gens[i][j];
    work[i][s + i] = 1;
  }
  std::vector<long> pivots = row_echelon(work, s);
  LatticePoint t = target;
  std::vector<Int> x(static_cast<std::size_t>(k), 0);
  std::size_t r = 0;
  for (long c = 0; c < s; ++c) {
    if (r < pivots.size() && pivots[r] == c) {
      const Int& p = work[r][c];
      if (t[c] % p != 0) return std::nullopt;
      Int q = t[c] / p;
      if (q != 0) {
        for (long j = c; j < s; ++j) t[j] -= q * work[r][j];
        for (long j = 0; j < k; ++j) x[j] += q * work[r][s + j];
      }
      ++r;
    } else if (t[c] != 0) {
      return std::nullopt;
    }
  }
  return x;
}

long rank_rational(const IMat& a) {
  std::vector<std::vector<Rat>> m;
  for (const auto& row : a) {
    std::vector<Rat> r(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) r[j] = Rat(row[j]);
    m.push_back(std::move(r));
  }
  long rank = 0;
  std::size_t ncols = m.empty() ? 0 : m[0].size();
  std::size_t r0 = 0;
  for (std::size_t c = 0; c < ncols && r0 < m.size(); ++c) {
    std::size_t piv = m.size();
    for (std::size_t r = r0; r < m.size(); ++r) {
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    }
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r0]);
    for (std::size_t r = r0 + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      Rat q = m[r][c] / m[r0][c];
      for (std::size_t j = c; j < ncols; ++j) m[r][j] -= q * m[r0][j];
    }
    ++r0;
    ++rank;
  }
  return rank;
}

std::optional<std::vector<Rat>> solve_rational(const IMat& a,
                                               const std::vector<Rat>& b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw DimensionMismatch("rhs size mismatch");
  const std::size_t n = m == 0 ? 0 : a[0].size();
  std::vector<std::vector<Rat>> w(m, std::vector<Rat>(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].size() != n) throw DimensionMismatch("matrix row size mismatch");
    for (std::size_t j = 0; j < n; ++j) w[i][j] = Rat(a[i][j]);
    w[i][n] = b[i];
  }
  std::vector<long> pivot_col;
  std::size_t r0 = 0;
  for (std::size_t c = 0; c < n && r0 < m; ++c) {
    std::size_t piv = m;
    for (std::size_t r = r0; r < m; ++r) {
      if (w[r][c] != 0) {
        piv = r;
        break;
      }
    }
    if (piv == m) continue;
    std::swap(w[piv], w[r0]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == r0 || w[r][c] == 0) continue;
      Rat q = w[r][c] / w[r0][c];
      for (std::size_t j = c; j <= n; ++j) w[r][j] -= q * w[r0][j];
    }
    pivot_col.push_back(static_cast<long>(c));
    ++r0;
  }
  for (std::size_t r = r0; r < m; ++r) {
    if (w[r][n] != 0) return std::nullopt;
  }
  std::vector<Rat> x(n, Rat(0));
  for (std::size_t r = 0; r < pivot_col.size(); ++r) {
    long c = pivot_col[r];
    x[c] = w[r][n] / w[r][c];
  }
  return x;
}

std::optional<IMat> imat_inverse_unimodular(const IMat& b) {
  const std::size_t s = b.size();
  std::vector<std::vector<Rat>> w(s, std::vector<Rat>(2 * s, Rat(0)));
  for (std::size_t i = 0; i < s; ++i) {
    if (b[i].size() != s) throw DimensionMismatch("matrix not square");
    for (std::size_t j = 0; j < s; ++j) w[i][j] = Rat(b[i][j]);
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
  IMat inv(s, LatticePoint(s));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      const Rat& e = w[i][s + j];
      if (!is_integer(e)) return std::nullopt;
      inv[i][j] = rnum(e);
    }
  }
  return inv;
}

std::vector<Int> BasisSplit::coords(const LatticePoint& v) const {
  return imat_apply(inv, v);
}

std::optional<BasisSplit> split_basis(const std::vector<LatticePoint>& head,
                                      long s) {
  const long f = static_cast<long>(head.size());
  if (f > s) return std::nullopt;
  for (const auto& h : head) {
    if (static_cast<long>(h.size()) != s) {
      throw DimensionMismatch("lattice point size mismatch");
    }
  }
  // Column reduction A V = [B | 0] with V unimodular; the head lattice is
  // saturated exactly when |det B| = 1.
  IMat a(head.begin(), head.end());
  IMat v = imat_identity(s);
  auto col_sub = [&](long dst, long src, const Int& q) {
    for (long r = 0; r < f; ++r) a[r][dst] -= q * a[r][src];
    for (long r = 0; r < s; ++r) v[r][dst] -= q * v[r][src];
  };
  auto col_swap = [&](long c1, long c2) {
    if (c1 == c2) return;
    for (long r = 0; r < f; ++r) std::swap(a[r][c1], a[r][c2]);
    for (long r = 0; r < s; ++r) std::swap(v[r][c1], v[r][c2]);
  };
  auto col_neg = [&](long c) {
    for (long r = 0; r < f; ++r) a[r][c] = -a[r][c];
    for (long r = 0; r < s; ++r) v[r][c] = -v[r][c];
  };
  for (long r = 0; r < f; ++r) {
    for (;;) {
      long best = -1;
      int nonzero = 0;
      for (long c = r; c < s; ++c) {
        if (a[r][c] == 0) continue;
        ++nonzero;
        if (best < 0 || iabs(a[r][c]) < iabs(a[r][best])) best = c;
      }
      if (nonzero == 0) return std::nullopt;  // dependent head
      if (nonzero == 1) {
        col_swap(best, r);
        if (a[r][r] < 0) col_neg(r);
        break;
      }
      for (long c = r; c < s; ++c) {
        if (c == best || a[r][c] == 0) continue;
        Int q = a[r][c] / a[r][best];
        if (q != 0) col_sub(c, best, q);
      }
    }
    if (a[r][r] != 1) return std::nullopt;  // head not saturated
  }
  std::optional<IMat> vinv = imat_inverse_unimodular(v);
  if (!vinv) return std::nullopt;
  BasisSplit out;
  out.f = f;
  out.rows.assign(head.begin(), head.end());
  for (long r = f; r < s; ++r) out.rows.push_back((*vinv)[r]);
  std::optional<IMat> inv = imat_inverse_unimodular(imat_transpose(out.rows));
  if (!inv) return std::nullopt;
  out.inv = *inv;
  return out;
}

}  // namespace logres
