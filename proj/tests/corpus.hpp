#pragma once

#include <string>
#include <vector>

#include "logres/invariant.hpp"

namespace logres::testing {

struct CorpusItem {
  ChartPtr chart;
  Ideal ideal;
  std::string label;
};

// Shared chart builders.
ChartPtr chart_xyz();             // three ordinary variables, trivial monoid
ChartPtr chart_xy_u();            // two ordinary variables, free rank-1 monoid (u)
ChartPtr chart_xy_uw();           // two ordinary variables, free rank-2 monoid (u, w)
ChartPtr chart_x_uw();            // one ordinary variable, free rank-2 monoid (u, w)

// Deterministic corpus of ideals on which both invariant engines are cheap:
// at most three ordinary and two monomial variables, and the unnormalized
// log order stays <= 3 at every level of the recursion.  At least `want`
// items; every item has a nonzero, non-unit stalk at the origin.
const std::vector<CorpusItem>& corpus(std::size_t want = 100);

}  // namespace logres::testing
