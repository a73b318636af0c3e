// Copyright (c) 2026 the logres authors.
// SPDX-License-Identifier: MIT

#include <doctest.h>

#include <random>

#include "logres/config.hpp"
#include "logres/monideal.hpp"
#include "oracles.hpp"

using namespace logres;

namespace {

LatticePoint lp(std::initializer_list<long> xs) {
  LatticePoint v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}

Cone quadrant2() { return make_cone(2, {lp({1, 0}), lp({0, 1})}); }

// The monoid of the third blowup chart on the worked example: N^4 presented
// on rank 3 by the relation e2 + e3 = e4 + 2 e1.
Cone relation_cone() {
  return make_cone(3, {lp({1, 0, 0}), lp({0, 1, 0}), lp({0, 0, 1}),
                       lp({1, 1, -2})});
}

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rat("3/4") == Rat(3, 4));
  CHECK(parse_rat("-2") == Rat(-2));
  CHECK(parse_rat(" 10/4 ") == Rat(5, 2));
  CHECK(rat_str(Rat(5, 2)) == "5/2");
  CHECK(rat_str(Rat(-7)) == "-7");
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rat("x"), ParseError);
  CHECK_THROWS_AS(parse_rat(""), ParseError);
}

TEST_CASE("integer helpers") {
  CHECK(ifactorial(0) == 1);
  CHECK(ifactorial(3) == 6);
  CHECK(ifactorial(5) == 120);
  CHECK(rat_pow(Rat(2, 3), -2) == Rat(9, 4));
  CHECK(rat_pow(Rat(5), 0) == Rat(1));
  CHECK(iroot_exact(Int(8), 3) == Int(2));
  CHECK(iroot_exact(Int(16), 4) == Int(2));
  CHECK(iroot_exact(Int(1), 7) == Int(1));
  CHECK(iroot_exact(Int(0), 2) == Int(0));
  CHECK(!iroot_exact(Int(2), 2).has_value());
  CHECK(!iroot_exact(Int(9), 3).has_value());
  CHECK(igcd(Int(12), Int(18)) == 6);
  CHECK(ilcm(Int(4), Int(6)) == 12);
}

TEST_CASE("lattice points") {
  CHECK(lp_content(lp({4, -6})) == 2);
  CHECK(lp_content(lp({0, 0})) == 0);
  CHECK(lp_primitive(lp({4, -6})) == lp({2, -3}));
  CHECK(lp_dot(lp({1, 2}), lp({3, -1})) == 1);
  CHECK(lp_is_zero(lp({0, 0})));
  CHECK(!lp_is_zero(lp({0, 1})));
}

TEST_CASE("integer kernel is saturated") {
  IMat a = {lp({2, 1, 1})};
  auto k = integer_kernel(a, 3);
  REQUIRE(k.size() == 2);
  for (const auto& v : k) CHECK(lp_dot(a[0], v) == 0);
  // (-1,1,1) solves 2x+y+z=0 and must be an integer combination of the basis.
  auto c = express_in_lattice(k, lp({-1, 1, 1}));
  CHECK(c.has_value());
}

TEST_CASE("lattice saturation") {
  auto s = lattice_saturation({lp({2, 0})}, 2);
  REQUIRE(s.size() == 1);
  CHECK(lp_content(s[0]) == 1);
  CHECK(s[0][1] == 0);
  CHECK(express_in_lattice(s, lp({1, 0})).has_value());
  CHECK(!express_in_lattice(s, lp({0, 1})).has_value());

  auto t = lattice_saturation({lp({2, 4}), lp({1, 2})}, 2);
  REQUIRE(t.size() == 1);
  CHECK((t[0] == lp({1, 2}) || t[0] == lp({-1, -2})));
}

TEST_CASE("express_in_lattice") {
  std::vector<LatticePoint> gens = {lp({2, 0}), lp({3, 0})};
  auto c = express_in_lattice(gens, lp({1, 0}));
  REQUIRE(c.has_value());
  CHECK((*c)[0] * 2 + (*c)[1] * 3 == 1);
  CHECK(!express_in_lattice(gens, lp({0, 1})).has_value());
}

TEST_CASE("split_basis completes a saturated head") {
  auto split = split_basis({lp({1, 1, -2})}, 3);
  REQUIRE(split.has_value());
  CHECK(split->f == 1);
  auto c = split->coords(lp({1, 1, -2}));
  CHECK(c == std::vector<Int>{Int(1), Int(0), Int(0)});
  // Round trip through the row basis.
  LatticePoint v = lp({4, -1, 3});
  auto cv = split->coords(v);
  LatticePoint back(3, Int(0));
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) back[j] += cv[i] * split->rows[i][j];
  CHECK(back == v);
  // Non-saturated heads are rejected.
  CHECK(!split_basis({lp({2, 0, 0})}, 3).has_value());
}

TEST_CASE("cone construction and membership") {
  Cone q = quadrant2();
  CHECK(cone_member(lp({0, 0}), q));
  CHECK(cone_member(lp({3, 5}), q));
  CHECK(!cone_member(lp({-1, 0}), q));
  CHECK(cone_is_pointed(q));

  Cone r = relation_cone();
  CHECK(cone_is_pointed(r));
  CHECK(cone_member(lp({2, 2, -4}), r));
  CHECK(cone_member(lp({1, 1, -2}), r));
  CHECK(cone_member(lp({1, 1, -1}), r));
  CHECK(!cone_member(lp({1, 0, -1}), r));
  CHECK(!cone_member(lp({0, 0, -1}), r));

  Cone line = make_cone(2, {lp({1, 0}), lp({-1, 0})});
  CHECK(!cone_is_pointed(line));
  CHECK_THROWS_AS(hilbert_basis(line), NotPointed);

  CHECK_THROWS_AS(make_cone(2, {lp({1, 0, 0})}), DimensionMismatch);
}

TEST_CASE("cone membership matches the LP oracle on random queries") {
  std::mt19937_64 rng(limits().seed);
  auto rnd = [&](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
  };
  int checked = 0;
  while (checked < 1000) {
    long rank = rnd(2, 3);
    long ngens = rnd(2, 4);
    std::vector<LatticePoint> gens;
    for (long g = 0; g < ngens; ++g) {
      LatticePoint v(rank, Int(0));
      for (long j = 0; j < rank; ++j) v[j] = rnd(-4, 4);
      gens.push_back(v);
    }
    Cone c;
    try {
      c = make_cone(rank, gens);
    } catch (const LogresError&) {
      continue;
    }
    for (int t = 0; t < 10; ++t) {
      LatticePoint v(rank, Int(0));
      for (long j = 0; j < rank; ++j) v[j] = rnd(-8, 8);
      CHECK(cone_member(v, c) == oracles::lp_cone_member(v, c.gens));
      ++checked;
    }
  }
}

TEST_CASE("hilbert basis on frozen cones") {
  auto h1 = hilbert_basis(quadrant2());
  CHECK(oracles::same_point_set(h1, {lp({1, 0}), lp({0, 1})}));

  auto h2 = hilbert_basis(make_cone(2, {lp({1, 0}), lp({1, 2})}));
  CHECK(oracles::same_point_set(h2, {lp({1, 0}), lp({1, 1}), lp({1, 2})}));

  auto h3 = hilbert_basis(relation_cone());
  CHECK(oracles::same_point_set(
      h3, {lp({1, 0, 0}), lp({0, 1, 0}), lp({0, 0, 1}), lp({1, 1, -2})}));

  auto h4 = hilbert_basis(make_cone(2, {lp({2, -1}), lp({0, 1})}));
  CHECK(oracles::same_point_set(h4, {lp({0, 1}), lp({1, 0}), lp({2, -1})}));
}

TEST_CASE("hilbert basis agrees with the box oracle on random cones") {
  std::mt19937_64 rng(limits().seed + 1);
  auto rnd = [&](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
  };
  int done = 0;
  while (done < 12) {
    long rank = rnd(2, 3);
    long ngens = rnd(2, 4);
    std::vector<LatticePoint> gens;
    for (long g = 0; g < ngens; ++g) {
      LatticePoint v(rank, Int(0));
      for (long j = 0; j < rank; ++j) v[j] = rnd(-4, 4);
      gens.push_back(v);
    }
    Cone c;
    try {
      c = make_cone(rank, gens);
    } catch (const LogresError&) {
      continue;
    }
    if (!cone_is_pointed(c)) continue;
    auto fast = hilbert_basis(c);
    auto slow = oracles::box_hilbert_basis(rank, c.gens);
    CHECK(oracles::same_point_set(fast, slow));
    ++done;
  }
}

TEST_CASE("hilbert bound is enforced") {
  LimitsGuard guard;
  limits().hilbert_enum_max = 10;
  CHECK_THROWS_AS(hilbert_basis(relation_cone()), HilbertBoundExceeded);
}

TEST_CASE("faces") {
  Cone r = relation_cone();
  auto ns = face_normal_set(r, {lp({1, 1, -2})});
  CHECK(!ns.empty());
  CHECK(on_face(r, ns, lp({2, 2, -4})));
  CHECK(!on_face(r, ns, lp({1, 0, 0})));
  auto fg = face_gens(r, ns);
  CHECK(oracles::same_point_set(fg, {lp({1, 1, -2})}));

  // The minimal face containing an interior point is the whole cone.
  auto all = face_normal_set(quadrant2(), {lp({1, 1})});
  CHECK(all.empty());
}

TEST_CASE("monomial ideals") {
  Cone q = quadrant2();
  MonIdeal m = make_mon_ideal(q, {lp({2, 0}), lp({0, 2})});
  CHECK(mon_ideal_member(lp({2, 0}), m));
  CHECK(mon_ideal_member(lp({3, 1}), m));
  CHECK(!mon_ideal_member(lp({1, 1}), m));

  // Minimalization drops divisible generators.
  MonIdeal m2 = make_mon_ideal(q, {lp({1, 0}), lp({2, 0}), lp({1, 1})});
  CHECK(m2.gens.size() == 1);
  CHECK(m2.gens[0] == lp({1, 0}));

  MonIdeal m3 = make_mon_ideal(q, {lp({2, 0}), lp({0, 2})});
  CHECK(mon_ideal_equal(m, m3));
  MonIdeal m4 = make_mon_ideal(q, {lp({1, 0})});
  CHECK(!mon_ideal_equal(m, m4));

  MonIdeal d = mon_ideal_dilate(m4, Int(3));
  CHECK(d.gens[0] == lp({3, 0}));
}

TEST_CASE("monomial saturation exponent") {
  Cone r = relation_cone();
  // v = e2 + e3, e = e4: v - 2 e4 = (1,1,-2) stays, v - 3 e4 leaves.
  CHECK(mon_ideal_saturate_exponent(lp({1, 1, 0}), lp({0, 0, 1}), r) == 2);
  CHECK(mon_ideal_saturate_exponent(lp({0, 0, 3}), lp({0, 0, 1}), r) == 3);
  CHECK(mon_ideal_saturate_exponent(lp({1, 0, 0}), lp({0, 0, 1}), r) == 0);

  Cone q = quadrant2();
  CHECK(mon_ideal_saturate_exponent(lp({5, 2}), lp({1, 1}), q) == 2);
}

TEST_CASE("saturation exponent is superadditive") {
  Cone r = relation_cone();
  std::mt19937_64 rng(limits().seed + 2);
  auto rnd = [&](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
  };
  LatticePoint e = lp({0, 0, 1});
  int done = 0;
  while (done < 50) {
    LatticePoint a(3, Int(0)), b(3, Int(0));
    for (long j = 0; j < 3; ++j) {
      a[j] = rnd(0, 4);
      b[j] = rnd(0, 4);
    }
    if (!cone_member(a, r) || !cone_member(b, r)) continue;
    long sa = mon_ideal_saturate_exponent(a, e, r);
    long sb = mon_ideal_saturate_exponent(b, e, r);
    long sab = mon_ideal_saturate_exponent(lp_add(a, b), e, r);
    CHECK(sab >= sa + sb);
    ++done;
  }
}

}  // TEST_SUITE
