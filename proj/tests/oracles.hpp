// Copyright (c) 2026 the logres authors.
// SPDX-License-Identifier: MIT

#pragma once

#include "logres/derive.hpp"

namespace logres::oracles {

// Feasibility of { lambda >= 0 : sum lambda_i gens_i = v }, decided by an
// exact phase-1 simplex with Bland's rule.  Shares no code with the cone
// module's facet-normal membership test.
bool lp_cone_member(const LatticePoint& v,
                    const std::vector<LatticePoint>& gens);

// Minimal generating set of cone(gens) intersect the lattice, by direct box
// enumeration in ambient coordinates with the LP membership oracle and a
// pairwise reducibility sieve.  Box radius: (#gens) * max |coordinate|, which
// contains every irreducible element (each lies in a Caratheodory
// parallelepiped of the generators).
std::vector<LatticePoint> box_hilbert_basis(long rank,
                                            const std::vector<LatticePoint>& gens);

// Stabilized derivative ideal D^{<=n}(i) for n large; equals the monomial
// saturation as an ideal.  Free charts only (stabilization detected with the
// groebner module).
Ideal derivative_saturation_oracle(const Ideal& i);

// Set comparison up to order.
bool same_point_set(std::vector<LatticePoint> a, std::vector<LatticePoint> b);

}  // namespace logres::oracles
