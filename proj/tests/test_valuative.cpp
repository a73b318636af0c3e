#include <doctest.h>

#include "corpus.hpp"
#include "logres/invariant.hpp"
#include "logres/valuative.hpp"
#include "logres/config.hpp"

using namespace logres;
using logres::testing::chart_xy_u;
using logres::testing::chart_xyz;

namespace {

MonVal weights_of(std::map<std::string, Rat> w, std::vector<Rat> f = {}) {
  MonVal nu;
  nu.weights = std::move(w);
  nu.functional = std::move(f);
  return nu;
}

ReducedCenter center_of(const Ideal& i) {
  return reduce_center(invariant_presentation(i).center);
}

}  // namespace

TEST_SUITE("valuative") {

TEST_CASE("value ordering") {
  CHECK(Val::of(2) < Val::infinite());
  CHECK(!(Val::infinite() < Val::infinite()));
  CHECK(Val::infinite() == Val::infinite());
  CHECK(Val::of(Rat(1, 2)) < Val::of(1));
  CHECK(Val::of(3) == Val::of(3));
}

TEST_CASE("values of polynomials and ideals") {
  ChartPtr c = chart_xy_u();
  MonVal nu = weights_of({{"x", 1}, {"y", 2}}, {Rat(3)});

  CHECK(eval_poly(nu, parse_poly(c, "x^2 + u*y")) == Val::of(2));
  CHECK(eval_poly(nu, parse_poly(c, "u")) == Val::of(3));
  CHECK(eval_poly(nu, parse_poly(c, "5")) == Val::of(0));
  CHECK(eval_poly(nu, Poly::zero(c)) == Val::infinite());

  Ideal i = Ideal::make(c, {parse_poly(c, "x^2"), parse_poly(c, "u*y")});
  CHECK(eval_ideal(nu, i) == Val::of(2));
  CHECK_THROWS_AS(eval_ideal(nu, Ideal::make(c, {})), ZeroIdeal);
}

TEST_CASE("values of weighted families") {
  ChartPtr c = chart_xyz();
  MonVal ones = weights_of({{"x", 1}, {"y", 1}, {"z", 1}});
  WeightedFamily f;
  f.entries.push_back({Ideal::make(c, {parse_poly(c, "x^2")}), Rat(1)});
  f.entries.push_back({Ideal::make(c, {parse_poly(c, "y")}), Rat(2)});
  CHECK(eval_family(ones, f) == Val::of(Rat(1, 2)));
}

TEST_CASE("values of reduced centers") {
  ChartPtr c = chart_xyz();
  ReducedCenter cusp = center_of(Ideal::make(c, {parse_poly(c, "x^2 + y^3")}));
  MonVal ones = weights_of({{"x", 1}, {"y", 1}, {"z", 1}});
  MonVal adapted = weights_of({{"x", 3}, {"y", 2}, {"z", 1}});
  CHECK(eval_center(ones, cusp) == Val::of(Rat(1, 3)));
  CHECK(eval_center(adapted, cusp) == Val::of(1));

  ChartPtr d = chart_xy_u();
  ReducedCenter mixed = center_of(Ideal::make(d, {parse_poly(d, "x^2 + u")}));
  MonVal nu = weights_of({{"x", 1}, {"y", 1}}, {Rat(1)});
  CHECK(eval_center(nu, mixed) == Val::of(Rat(1, 2)));
}

TEST_CASE("sampling is deterministic and monoid-compatible") {
  LogChart raw;
  raw.ordinary = {"x"};
  raw.monoid = make_cone(3, {LatticePoint{Int(1), Int(0), Int(0)},
                             LatticePoint{Int(0), Int(1), Int(0)},
                             LatticePoint{Int(0), Int(0), Int(1)},
                             LatticePoint{Int(1), Int(1), Int(-2)}});
  raw.monomial_names["a"] = LatticePoint{Int(1), Int(0), Int(0)};
  ChartPtr c = make_chart(raw);

  auto s1 = sample_valuations(*c, 64, 99);
  auto s2 = sample_valuations(*c, 64, 99);
  REQUIRE(s1.size() == 64);
  REQUIRE(s2.size() == 64);
  for (size_t k = 0; k < s1.size(); ++k) {
    CHECK(s1[k].weights == s2[k].weights);
    CHECK(s1[k].functional == s2[k].functional);
    REQUIRE(s1[k].functional.size() == 3);
    for (const auto& g : c->monoid.gens) {
      Rat v = lp_dot_rat(s1[k].functional, g);
      CHECK(v >= 0);
    }
    for (const auto& [name, w] : s1[k].weights) {
      CHECK(w >= 0);
      CHECK(w <= limits().valuation_weight_max);
    }
  }
}

TEST_CASE("sampled admissibility bounds") {
  ChartPtr c = chart_xyz();
  Ideal i = Ideal::make(c, {parse_poly(c, "x^2 + y^3")});
  ReducedCenter rc = center_of(i);
  auto samples = sample_valuations(*c, 128, limits().seed);
  CHECK(admissible_sample(rc, Rat(6), i, samples));

  std::vector<MonVal> hand = {weights_of({{"x", 1}, {"y", 1}, {"z", 1}})};
  CHECK(!admissible_sample(rc, Rat(7), i, hand));
}

TEST_CASE("center equality is valuative, not syntactic") {
  ChartPtr c = chart_xyz();
  Ideal cusp = Ideal::make(c, {parse_poly(c, "x^2 + y^3")});
  Ideal node = Ideal::make(c, {parse_poly(c, "x^2 + y^2")});
  ReducedCenter a = center_of(cusp);
  ReducedCenter b = center_of(node);
  auto samples = sample_valuations(*c, 100, limits().seed);
  CHECK(centers_equal_as_exponents(a, a, samples));
  CHECK(centers_equal_as_exponents(b, b, samples));
  CHECK(!centers_equal_as_exponents(a, b, samples));
}

}  // TEST_SUITE
