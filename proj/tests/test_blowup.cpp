// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "logres/blowup.hpp"
#include "logres/groebner.hpp"
#include "logres/invariant.hpp"

using namespace logres;
using logres::testing::chart_xy_u;
using logres::testing::chart_xyz;

namespace {

LatticePoint lp(std::initializer_list<long> v) {
  LatticePoint p;
  for (long x : v) p.emplace_back(x);
  return p;
}

ReducedCenter center_of(const Ideal& i) {
  return reduce_center(invariant_presentation(i).center);
}

bool same_terms(const Poly& a, const Poly& b) { return a.terms() == b.terms(); }

std::set<std::string> point_set(const std::vector<LatticePoint>& pts) {
  std::set<std::string> s;
  for (const auto& p : pts) s.insert(lp_str(p));
  return s;
}

}  // namespace

TEST_SUITE("blowup") {

TEST_CASE("weighted chart of a smooth-weight center") {
  ChartPtr c = chart_xyz();
  Ideal i = Ideal::make(c, {parse_poly(c, "x^2*y*z + y^4*z")});
  ReducedCenter rc = center_of(i);
  REQUIRE(rc.params.size() == 3);
  CHECK(rc.ell == 4);

  auto charts = blowup_charts(rc);
  REQUIRE(charts.size() == 3);
  for (const auto& bc : charts) {
    CHECK(bc.kind == BlowupChart::Kind::Param);
    CHECK(!bc.torsion);
    REQUIRE(bc.chart);
  }

  // Pivot order follows the center: z, y, x.
  const BlowupChart& zc = charts[0];
  CHECK(zc.chart->ordinary == std::vector<std::string>{"x", "y"});
  CHECK(zc.chart->rank() == 1);
  CHECK(zc.chart->monomial_names.at("z") == lp({1}));
  CHECK(zc.chart->monomial_names.at("u1") == lp({1}));
  CHECK(zc.chart->exceptional == std::vector<LatticePoint>{lp({1})});
  CHECK(zc.chart->actions.empty());
  CHECK(zc.u_point == lp({1}));
  CHECK(same_terms(zc.substitution.at("z"), Poly::monomial(zc.chart, lp({1}))));
  CHECK(same_terms(zc.substitution.at("y"),
                   Poly::monomial(zc.chart, lp({1})) * Poly::var(zc.chart, "y")));

  TransformResult tz = transform(i, zc);
  CHECK(tz.ell == 4);
  REQUIRE(tz.weak.gens.size() == 1);
  CHECK(same_terms(tz.weak.gens[0], parse_poly(zc.chart, "x^2*y + u1*y^4")));
  REQUIRE(tz.proper.has_value());
  CHECK(same_terms(tz.proper->gens[0], tz.weak.gens[0]));

  TransformResult ty = transform(i, charts[1]);
  CHECK(ty.ell == 4);
  CHECK(same_terms(ty.weak.gens[0],
                   parse_poly(charts[1].chart, "x^2*z + u1*z")));

  TransformResult tx = transform(i, charts[2]);
  CHECK(tx.ell == 4);
  CHECK(same_terms(tx.weak.gens[0],
                   parse_poly(charts[2].chart, "y*z + u1*y^4*z")));

  CHECK(admissible(rc, 4, i));
  CHECK(!admissible(rc, 5, i));
  CHECK(root_rescale_check(rc, 2));
}

TEST_CASE("second blowup introduces a second exceptional name") {
  ChartPtr c = chart_xyz();
  Ideal i = Ideal::make(c, {parse_poly(c, "x^2*y*z + y^4*z")});
  auto charts1 = blowup_charts(center_of(i));
  Ideal i1 = transform(i, charts1[0]).weak;

  ReducedCenter rc = center_of(i1);
  CHECK(rc.ell == 3);
  REQUIRE(rc.params.size() == 2);
  CHECK(rc.params[0].first == "y");
  CHECK(rc.params[1].first == "x");

  auto charts2 = blowup_charts(rc);
  REQUIRE(charts2.size() == 2);
  const BlowupChart& yc = charts2[0];
  CHECK(yc.chart->ordinary == std::vector<std::string>{"x"});
  CHECK(yc.chart->rank() == 2);
  CHECK(yc.chart->monomial_names.at("z") == lp({1, 0}));
  CHECK(yc.chart->monomial_names.at("u1") == lp({1, 0}));
  CHECK(yc.chart->monomial_names.at("y") == lp({0, 1}));
  CHECK(yc.chart->monomial_names.at("u2") == lp({0, 1}));
  CHECK(point_set(yc.chart->exceptional) ==
        std::set<std::string>{lp_str(lp({1, 0})), lp_str(lp({0, 1}))});

  TransformResult ty = transform(i1, yc);
  CHECK(ty.ell == 3);
  CHECK(same_terms(ty.weak.gens[0], parse_poly(yc.chart, "x^2 + u1*u2")));

  TransformResult tx = transform(i1, charts2[1]);
  CHECK(tx.ell == 3);
  CHECK(same_terms(tx.weak.gens[0],
                   parse_poly(charts2[1].chart, "y + u1*u2*y^4")));

  CHECK(admissible(rc, 3, i1));
  CHECK(!admissible(rc, 4, i1));
}

TEST_CASE("mixed center blowup with a fractional monomial part") {
  // Arrive at x^2 + u1*u2 on the chart produced by two prior blowups.
  ChartPtr c = chart_xyz();
  Ideal i = Ideal::make(c, {parse_poly(c, "x^2*y*z + y^4*z")});
  auto charts1 = blowup_charts(center_of(i));
  Ideal i1 = transform(i, charts1[0]).weak;
  auto charts2 = blowup_charts(center_of(i1));
  Ideal i2 = transform(i1, charts2[0]).weak;

  InvResult r = invariant_presentation(i2);
  CHECK(r.inv.inf);
  REQUIRE(r.inv.entries.size() == 1);
  CHECK(r.inv.entries[0] == 2);
  ReducedCenter rc = reduce_center(r.center);
  CHECK(rc.ell == 2);
  REQUIRE(rc.params.size() == 1);
  CHECK(rc.params[0] == std::pair<std::string, Int>{"x", Int(1)});
  REQUIRE(rc.mon.has_value());
  CHECK(rc.mon->second == 2);
  CHECK(rc.mon->first.gens == std::vector<LatticePoint>{lp({1, 1})});

  auto charts3 = blowup_charts(rc);
  REQUIRE(charts3.size() == 2);

  const BlowupChart& pc = charts3[0];
  CHECK(pc.kind == BlowupChart::Kind::Param);
  CHECK(pc.chart->ordinary.empty());
  CHECK(pc.chart->rank() == 3);
  Cone expect = make_cone(
      3, {lp({1, 0, 0}), lp({0, 1, 0}), lp({0, 0, 1}), lp({1, 1, -2})});
  CHECK(cone_equal(pc.chart->monoid, expect));
  auto hb = hilbert_basis(pc.chart->monoid);
  CHECK(point_set(hb) == point_set(expect.gens));
  CHECK(pc.chart->monomial_names.at("z") == lp({1, 0, 0}));
  CHECK(pc.chart->monomial_names.at("y") == lp({0, 1, 0}));
  CHECK(pc.chart->monomial_names.at("x") == lp({0, 0, 1}));
  CHECK(pc.chart->monomial_names.at("u3") == lp({0, 0, 1}));
  CHECK(pc.chart->actions.empty());

  TransformResult tp = transform(i2, pc);
  CHECK(tp.ell == 2);
  REQUIRE(tp.weak.gens.size() == 1);
  Poly expected = Poly::constant(pc.chart, 1) +
                  Poly::monomial(pc.chart, lp({1, 1, -2}));
  CHECK(same_terms(tp.weak.gens[0], expected));
  CHECK(tp.weak.stalk_unit_at_origin());

  const BlowupChart& mc = charts3[1];
  CHECK(mc.kind == BlowupChart::Kind::Mon);
  CHECK(!mc.torsion);
  REQUIRE(mc.chart);
  CHECK(mc.chart->ordinary == std::vector<std::string>{"x"});
  CHECK(mc.chart->rank() == 2);
  CHECK(cone_is_pointed(mc.chart->monoid));
  REQUIRE(mc.chart->actions.size() == 1);
  CHECK(mc.chart->actions[0].order == 2);
  CHECK(mc.chart->actions[0].ordinary_weights.at("x") == 1);
  CHECK(mc.chart->actions[0].lattice_weights.size() == 2);

  TransformResult tm = transform(i2, mc);
  CHECK(tm.ell == 2);
  Poly square = Poly::var(mc.chart, "x") * Poly::var(mc.chart, "x") +
                Poly::constant(mc.chart, 1);
  CHECK(same_terms(tm.weak.gens[0], square));
  CHECK(tm.weak.stalk_unit_at_origin());

  CHECK(admissible(rc, 2, i2));
  CHECK(!admissible(rc, 3, i2));
  CHECK(root_rescale_check(rc, 2));
  CHECK(root_rescale_check(rc, 3));
}

TEST_CASE("exceptional orders of a reduced center") {
  ChartPtr c = chart_xyz();
  ReducedCenter rc = center_of(Ideal::make(c, {parse_poly(c, "x^2 + y^3")}));
  CHECK(rc.ell == 6);
  REQUIRE(rc.params.size() == 2);
  CHECK(rc.params[0].second == 3);
  CHECK(rc.params[1].second == 2);

  LatticePoint none;
  CHECK(center_exceptional_order(rc, {1, 2}, none) == 7);
  CHECK(center_exceptional_order(rc, {0, 2}, none) == 4);
  CHECK(newton_member({1, 2}, none, rc, Int(6)));
  CHECK(!newton_member({0, 2}, none, rc, Int(6)));
  CHECK(newton_member({0, 3}, none, rc, Int(6)));

  // Mixed center: u-order contributes through the blowup cone.
  ChartPtr d = chart_xy_u();
  Ideal i = Ideal::make(d, {parse_poly(d, "x^2 + u")});
  ReducedCenter rm = center_of(i);
  CHECK(rm.ell == 2);
  CHECK(center_exceptional_order(rm, {2}, LatticePoint{Int(0)}) == 2);
  CHECK(center_exceptional_order(rm, {0}, LatticePoint{Int(1)}) == 2);
  CHECK(newton_member({0}, LatticePoint{Int(1)}, rm, Int(2)));
  CHECK(!newton_member({1}, LatticePoint{Int(0)}, rm, Int(2)));
}

TEST_CASE("torsion quotient is reported, not silently approximated") {
  LogChart raw;
  raw.ordinary = {"x"};
  raw.monoid = make_cone(1, {lp({1})});
  raw.monomial_names["u"] = lp({1});
  raw.exceptional = {lp({1})};
  ChartPtr c = make_chart(raw);

  ReducedCenter rc;
  rc.chart = c;
  rc.params = {{"x", Int(1)}};
  rc.mon = std::make_pair(make_mon_ideal(c->monoid, {lp({2})}), Int(2));
  rc.ell = 2;

  auto charts = blowup_charts(rc);
  REQUIRE(charts.size() == 2);
  CHECK(!charts[0].torsion);
  CHECK(charts[1].kind == BlowupChart::Kind::Mon);
  CHECK(charts[1].torsion);
  CHECK(charts[1].chart == nullptr);
  CHECK(!charts[1].note.empty());

  Ideal i = Ideal::make(c, {parse_poly(c, "x^2 + u^2")});
  CHECK_THROWS_AS(transform(i, charts[1]), TorsionMonoid);

  TransformResult tp = transform(i, charts[0]);
  CHECK(tp.ell == 2);
  CHECK(tp.weak.stalk_unit_at_origin());

  // Admissibility still accounts for the torsion chart exactly.
  CHECK(admissible(rc, 2, i));
  CHECK(!admissible(rc, 3, i));
  CHECK(root_rescale_check(rc, 2));
}

TEST_CASE("pure monomial center has only monomial charts") {
  ChartPtr d = chart_xy_u();
  Ideal i = Ideal::make(d, {parse_poly(d, "u")});
  ReducedCenter rc = center_of(i);
  CHECK(rc.params.empty());
  CHECK(rc.ell == 1);
  REQUIRE(rc.mon.has_value());
  CHECK(rc.mon->second == 1);

  auto charts = blowup_charts(rc);
  REQUIRE(charts.size() == 1);
  CHECK(charts[0].kind == BlowupChart::Kind::Mon);
  CHECK(!charts[0].torsion);
  TransformResult t = transform(i, charts[0]);
  CHECK(t.ell == 1);
  CHECK(t.weak.stalk_unit_at_origin());
  CHECK(admissible(rc, 1, i));
  CHECK(!admissible(rc, 2, i));
}

TEST_CASE("fresh exceptional names avoid collisions") {
  LogChart raw;
  raw.ordinary = {"x", "u1"};
  raw.monoid = make_cone(0, {});
  ChartPtr c = make_chart(raw);
  ReducedCenter rc;
  rc.chart = c;
  rc.params = {{"x", Int(1)}};
  rc.ell = 1;
  auto charts = blowup_charts(rc);
  REQUIRE(charts.size() == 1);
  CHECK(charts[0].chart->ordinary == std::vector<std::string>{"u1"});
  CHECK(charts[0].chart->has_name("u2"));
  CHECK(charts[0].chart->monomial_names.at("u2") == lp({1}));
  CHECK(charts[0].chart->monomial_names.at("x") == lp({1}));
}

TEST_CASE("group actions transport or fail loudly") {
  LogChart raw;
  raw.ordinary = {"x", "y"};
  raw.monoid = make_cone(0, {});
  GroupAction act;
  act.order = 2;
  act.ordinary_weights = {{"x", 0}, {"y", 1}};
  raw.actions = {act};
  ChartPtr c = make_chart(raw);

  ReducedCenter ok;
  ok.chart = c;
  ok.params = {{"x", Int(2)}, {"y", Int(1)}};
  ok.ell = 2;
  auto charts = blowup_charts(ok);
  REQUIRE(charts.size() == 2);
  // Pivot x has weight 0: solvable; fresh micro-root action joins the old one.
  REQUIRE(charts[0].chart->actions.size() == 2);

  ReducedCenter bad;
  bad.chart = c;
  bad.params = {{"y", Int(2)}, {"x", Int(1)}};
  bad.ell = 2;
  CHECK_THROWS_AS(blowup_charts(bad), EquivariantUnsupported);
}

TEST_CASE("non-free charts omit the saturated transform") {
  // The root of (u*w) forces the ray (1,1,-2) into the x-chart cone, which
  // then has four extremal rays in rank three: not simplicial, so not free.
  ChartPtr d = logres::testing::chart_xy_uw();
  Ideal i = Ideal::make(d, {parse_poly(d, "x^2"), parse_poly(d, "u*w")});
  ReducedCenter rc = center_of(i);
  CHECK(rc.ell == 2);
  auto charts = blowup_charts(rc);
  REQUIRE(!charts.empty());
  TransformResult t = transform(i, charts[0]);
  CHECK(t.ell == 2);
  CHECK(t.weak.gens.size() == 2);
  CHECK(!chart_free(*charts[0].chart));
  CHECK(!t.proper.has_value());
}

TEST_CASE("centers from the corpus are admissible at their own scale") {
  const auto& items = logres::testing::corpus();
  int checked = 0;
  for (size_t k = 0; k < items.size() && checked < 12; ++k) {
    const auto& item = items[k];
    InvResult r = invariant_presentation(item.ideal);
    if (r.inv.is_unit_stalk() || r.inv.is_zero_stalk()) continue;
    ReducedCenter rc = reduce_center(r.center);
    CAPTURE(item.label);
    CHECK(admissible(rc, to_long(rc.ell), item.ideal));
    CHECK(!admissible(rc, to_long(rc.ell) + 1, item.ideal));
    ++checked;
  }
  CHECK(checked >= 8);
}

}  // TEST_SUITE
