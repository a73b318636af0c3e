// Copyright (c) 2026 the logres authors.
// SPDX-License-Identifier: MIT

#include <doctest.h>

#include "corpus.hpp"
#include "logres/groebner.hpp"
#include "logres/config.hpp"

using namespace logres;
using logres::testing::chart_xy_u;
using logres::testing::chart_xyz;

namespace {

Ideal ideal_of(const ChartPtr& c, std::initializer_list<const char*> texts) {
  std::vector<Poly> gens;
  for (const char* t : texts) gens.push_back(parse_poly(c, t));
  return Ideal::make(c, std::move(gens));
}

}  // namespace

TEST_SUITE("groebner") {

TEST_CASE("reduced bases") {
  ChartPtr c = chart_xyz();
  GB g = gb(ideal_of(c, {"x", "y"}));
  CHECK(g.basis.size() == 2);

  // S-polynomial of (x^2 - y, x*y) reduces to y^2.
  GB h = gb(ideal_of(c, {"x^2 - y", "x*y"}));
  CHECK(gb_member(parse_poly(c, "y^2"), h));
  CHECK(!gb_member(parse_poly(c, "y"), h));

  // Determinism: two runs produce identical bases.
  GB h2 = gb(ideal_of(c, {"x^2 - y", "x*y"}));
  REQUIRE(h.basis.size() == h2.basis.size());
  for (size_t i = 0; i < h.basis.size(); ++i)
    CHECK(poly_str(h.basis[i]) == poly_str(h2.basis[i]));
}

TEST_CASE("membership") {
  ChartPtr c = chart_xyz();
  Ideal i = ideal_of(c, {"x^2", "y"});
  CHECK(member(parse_poly(c, "x^2 + y"), i));
  CHECK(member(parse_poly(c, "x^3*y + x^2"), i));
  CHECK(!member(parse_poly(c, "x"), i));
  CHECK(!member(parse_poly(c, "z"), i));

  // Monomial variables participate as honest polynomial variables.
  ChartPtr d = chart_xy_u();
  Ideal j = ideal_of(d, {"x^2 - u", "x*u"});
  CHECK(member(parse_poly(d, "u^2"), j));
  CHECK(member(parse_poly(d, "x^3"), j));
  CHECK(!member(parse_poly(d, "u"), j));
}

TEST_CASE("ideal equality and units") {
  ChartPtr c = chart_xyz();
  CHECK(ideal_equal(ideal_of(c, {"x"}), ideal_of(c, {"x", "x^2"})));
  CHECK(!ideal_equal(ideal_of(c, {"x"}), ideal_of(c, {"x^2"})));
  CHECK(is_unit_ideal(ideal_of(c, {"1 + x", "x"})));
  CHECK(is_unit_ideal(ideal_of(c, {"2"})));
  CHECK(!is_unit_ideal(ideal_of(c, {"x", "y", "z"})));
}

TEST_CASE("saturation by a variable") {
  ChartPtr d = chart_xy_u();
  CHECK(ideal_equal(saturate_by_var(ideal_of(d, {"u*x"}), "u"),
                    ideal_of(d, {"x"})));
  CHECK(ideal_equal(saturate_by_var(ideal_of(d, {"u^2*x", "u*y"}), "u"),
                    ideal_of(d, {"x", "y"})));
  Ideal untouched = ideal_of(d, {"x + y"});
  CHECK(ideal_equal(saturate_by_var(untouched, "u"), untouched));
  // Saturation is idempotent.
  Ideal s = saturate_by_var(ideal_of(d, {"u^2*(x^2 + u)"}), "u");
  CHECK(ideal_equal(saturate_by_var(s, "u"), s));
  CHECK(ideal_equal(s, ideal_of(d, {"x^2 + u"})));
  // Ordinary variables saturate, too.
  CHECK(ideal_equal(saturate_by_var(ideal_of(d, {"x^2*y"}), "x"),
                    ideal_of(d, {"y"})));
}

TEST_CASE("non-free charts are rejected") {
  LogChart c;
  c.ordinary = {"x"};
  LatticePoint a{Int(2), Int(-1)};
  LatticePoint b{Int(0), Int(1)};
  c.monoid = make_cone(2, {a, b});
  c.monomial_names["u"] = a;
  c.monomial_names["w"] = b;
  ChartPtr cp = make_chart(c);
  Ideal i = Ideal::make(cp, {Poly::var(cp, "x")});
  CHECK_THROWS_AS(gb(i), NotFreeChart);
}

TEST_CASE("resource bounds") {
  ChartPtr c = chart_xyz();
  LimitsGuard guard;
  limits().gb_max_basis = 1;
  CHECK_THROWS_AS(gb(ideal_of(c, {"x^2 - y", "x*y"})), ResourceBound);
}

}  // TEST_SUITE
