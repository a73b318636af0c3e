// Copyright (c) 2026 the logres authors.
// SPDX-License-Identifier: MIT

#pragma once

#include "logres/poly.hpp"

namespace logres {

// Exact Groebner engine over the rationals for free charts (polynomial rings
// in the ordinary variables and the named basis monomials), graded reverse
// lexicographic order on the combined variable list.

struct GB {
  ChartPtr chart;
  std::vector<Poly> basis;  // reduced, monic, deterministic order
};

// Raises NotFreeChart on a non-free chart, ResourceBound past the configured
// basis/degree bounds.
GB gb(const Ideal& i);

bool gb_member(const Poly& f, const GB& g);
bool member(const Poly& f, const Ideal& i);
bool ideal_equal(const Ideal& a, const Ideal& b);
bool is_unit_ideal(const Ideal& i);

// (i : v^infinity) for an ordinary variable or named basis monomial v,
// via tag-variable elimination.
Ideal saturate_by_var(const Ideal& i, const std::string& var);

}  // namespace logres
