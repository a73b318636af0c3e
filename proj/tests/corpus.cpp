#include "corpus.hpp"

#include <random>

#include "logres/config.hpp"
#include "logres/derive.hpp"

namespace logres::testing {

namespace {

ChartPtr make_free(std::vector<std::string> ordinary,
                   std::vector<std::string> mono) {
  LogChart c;
  c.ordinary = std::move(ordinary);
  long rank = static_cast<long>(mono.size());
  std::vector<LatticePoint> gens;
  for (long j = 0; j < rank; ++j) {
    LatticePoint e(rank, Int(0));
    e[j] = 1;
    gens.push_back(e);
    c.monomial_names[mono[j]] = e;
  }
  c.monoid = make_cone(rank, gens);
  return make_chart(c);
}

// An item is admitted when the literal engine completes with the coefficient
// ideal level capped at order three, i.e. the raw log order stays <= 3 at
// every recursion level, and the stalk is neither zero nor a unit.
bool admit(const Ideal& ideal) {
  if (ideal.is_zero()) return false;
  if (ideal.stalk_unit_at_origin()) return false;
  try {
    LimitsGuard guard;
    limits().literal_coeff_bound = 3;
    limits().cross_check = false;
    (void)invariant_literal(ideal);
  } catch (const LogresError&) {
    return false;
  }
  return true;
}

void add(std::vector<CorpusItem>& out, const ChartPtr& chart,
         const std::string& text, const std::string& label) {
  Ideal ideal = Ideal::make(chart, {parse_poly(chart, text)});
  if (admit(ideal)) out.push_back({chart, ideal, label});
}

void add2(std::vector<CorpusItem>& out, const ChartPtr& chart,
          const std::string& f, const std::string& g,
          const std::string& label) {
  Ideal ideal =
      Ideal::make(chart, {parse_poly(chart, f), parse_poly(chart, g)});
  if (admit(ideal)) out.push_back({chart, ideal, label});
}

std::vector<CorpusItem> build(std::size_t want) {
  std::vector<CorpusItem> out;
  ChartPtr xyz = chart_xyz();
  ChartPtr xyu = chart_xy_u();
  ChartPtr xyuw = chart_xy_uw();
  ChartPtr xuw = chart_x_uw();

  // Crafted families: plane curve germs, monomial-weighted germs, products,
  // and ideals with several generators.
  add(out, xyz, "x", "smooth");
  add(out, xyz, "x^2 + y^2", "node");
  add(out, xyz, "x^2 + y^3", "cusp");
  add(out, xyz, "x^2 + y^2 + z^2", "cone point");
  add(out, xyz, "x^2 + y^2*z", "whitney");
  add(out, xyz, "x^2 + y*z", "quadric");
  add(out, xyz, "x^3 + y^3 + z^3", "fermat");
  add(out, xyz, "x^2*y", "double line");
  add(out, xyz, "x*y", "axes");
  add(out, xyz, "x*y*z", "triple axes");
  add(out, xyz, "x^2 + x*y + y^2", "binary quadric");
  add(out, xyz, "x^3 + x*y^2", "trident");
  add(out, xyz, "x^2 - y^2 + z^3", "saddle");
  add(out, xyz, "x^3 + y^2*z", "cayley");
  add2(out, xyz, "x^2", "y^2", "two doubled lines");
  add2(out, xyz, "x*y", "z^2", "pair");
  add2(out, xyz, "x + y^2", "y^3", "mixed");
  add(out, xyu, "x^2 + u", "order two with monomial");
  add(out, xyu, "x^2 + y^2 + u", "node with monomial");
  add(out, xyu, "x^2 + u*y", "monomial coefficient");
  add(out, xyu, "x^2 + u^2", "double monomial");
  add(out, xyu, "x*y + u", "axes with monomial");
  add(out, xyu, "x^2 + u*y^2", "weighted");
  add(out, xyu, "x^3 + u*x + u*y", "perturbed");
  add(out, xyu, "u*x", "monomial times smooth");
  add(out, xyu, "u*(x^2 + y^3)", "monomial times cusp");
  add(out, xyu, "x^2*y + u*y", "shared factor");
  add2(out, xyu, "x^2 + u", "y^2", "split pair");
  add(out, xyuw, "x^2 + u*w", "two monomials");
  add(out, xyuw, "x^2 + u + w", "monomial sum");
  add(out, xyuw, "x^2 + u*y + w", "mixed monomials");
  add(out, xyuw, "x*y + u*w", "quadric monomials");
  add(out, xyuw, "u*x + w*y", "bilinear");
  add(out, xyuw, "x^2 + u^2*w", "deep monomial");
  add(out, xuw, "x^2 + u*w", "curve on surface chart");
  add(out, xuw, "x^2 + u", "parabola on surface chart");
  add(out, xuw, "x^3 + u*w^2", "deeper");
  add(out, xuw, "x^2 + u^2*w^2", "square monomial");
  add2(out, xuw, "x^2 + u", "x*w", "pair on surface chart");

  // Seeded random ideals over the same charts.
  std::mt19937_64 rng(limits().seed);
  std::vector<ChartPtr> charts = {xyz, xyu, xyuw, xuw};
  auto rnd = [&](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
  };
  int attempts = 0;
  while (out.size() < want + 20 && attempts < 4000) {
    ++attempts;
    const ChartPtr& chart = charts[static_cast<std::size_t>(rnd(0, 3))];
    long nvars = chart->nvars();
    long rank = chart->rank();
    long nterms = rnd(2, 3);
    Poly p = Poly::zero(chart);
    for (long t = 0; t < nterms; ++t) {
      std::vector<long> ord(nvars, 0);
      long total = 0;
      for (long j = 0; j < nvars; ++j) {
        ord[j] = rnd(0, 2);
        total += ord[j];
      }
      if (total > 4) continue;
      LatticePoint m(rank, Int(0));
      for (long j = 0; j < rank; ++j) m[j] = rnd(0, 2);
      long coeff = rnd(1, 3) * (rnd(0, 1) ? 1 : -1);
      p = p + Poly::term(chart, ord, m, Rat(coeff));
    }
    if (p.is_zero()) continue;
    Ideal ideal = Ideal::make(chart, {p});
    if (!admit(ideal)) continue;
    out.push_back({chart, ideal, "random " + std::to_string(attempts)});
  }
  return out;
}

}  // namespace

ChartPtr chart_xyz() {
  static ChartPtr c = make_free({"x", "y", "z"}, {});
  return c;
}

ChartPtr chart_xy_u() {
  static ChartPtr c = make_free({"x", "y"}, {"u"});
  return c;
}

ChartPtr chart_xy_uw() {
  static ChartPtr c = make_free({"x", "y"}, {"u", "w"});
  return c;
}

ChartPtr chart_x_uw() {
  static ChartPtr c = make_free({"x"}, {"u", "w"});
  return c;
}

const std::vector<CorpusItem>& corpus(std::size_t want) {
  static std::vector<CorpusItem> items = build(want);
  return items;
}

}  // namespace logres::testing
