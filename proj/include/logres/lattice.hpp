#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logres/rat.hpp"

namespace logres {

using LatticePoint = std::vector<Int>;
using IMat = std::vector<std::vector<Int>>;  // row-major

LatticePoint lp_add(const LatticePoint& a, const LatticePoint& b);
LatticePoint lp_sub(const LatticePoint& a, const LatticePoint& b);
LatticePoint lp_neg(const LatticePoint& a);
LatticePoint lp_scale(const Int& k, const LatticePoint& a);
bool lp_is_zero(const LatticePoint& a);
Int lp_dot(const LatticePoint& a, const LatticePoint& b);
Rat lp_dot_rat(const std::vector<Rat>& f, const LatticePoint& a);
// gcd of the coordinates; 0 for the zero vector.
Int lp_content(const LatticePoint& a);
LatticePoint lp_primitive(const LatticePoint& a);
std::string lp_str(const LatticePoint& a);
int lp_cmp(const LatticePoint& a, const LatticePoint& b);

IMat imat_transpose(const IMat& a);
LatticePoint imat_apply(const IMat& a, const LatticePoint& v);

// Basis of {x in Z^n : A x = 0}; the result generates a saturated sublattice.
std::vector<LatticePoint> integer_kernel(const IMat& a, long ncols);

// Basis of the saturation (Q-span of the input) intersected with Z^s.
std::vector<LatticePoint> lattice_saturation(const std::vector<LatticePoint>& v,
                                             long s);

// Integer coefficients x with sum x_i gens_i = target, if any.
std::optional<std::vector<Int>> express_in_lattice(
    const std::vector<LatticePoint>& gens, const LatticePoint& target);

long rank_rational(const IMat& a);

// Solves A x = b over the rationals (least structure: any one solution).
std::optional<std::vector<Rat>> solve_rational(const IMat& a,
                                               const std::vector<Rat>& b);

// Inverse of a unimodular integer matrix; nullopt when |det| != 1.
std::optional<IMat> imat_inverse_unimodular(const IMat& b);

// Splits Z^s as <head rows> + <tail rows> where head is a saturated basis of
// its span and tail completes it to a basis of Z^s.  coords(v) returns the
// coefficient vector of v in the row basis.
struct BasisSplit {
  IMat rows;  // s x s, unimodular; first f rows = head
  IMat inv;   // inverse of rows^T: coords(v) = inv * v
  long f = 0;
  std::vector<Int> coords(const LatticePoint& v) const;
};

// head must be a saturated independent family.
std::optional<BasisSplit> split_basis(const std::vector<LatticePoint>& head,
                                      long s);

}  // namespace logres
