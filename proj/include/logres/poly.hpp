#pragma once

#include <map>
#include <string>
#include <vector>

#include "logres/chart.hpp"

namespace logres {

// Term exponent data: ordinary exponents plus a monoid element.
struct TermKey {
  std::vector<long> ord;
  LatticePoint lat;
};
bool operator<(const TermKey& a, const TermKey& b);
bool operator==(const TermKey& a, const TermKey& b);

// Element of the chart ring with exact rational coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(ChartPtr chart) : chart_(std::move(chart)) {}

  static Poly zero(ChartPtr chart);
  static Poly constant(ChartPtr chart, const Rat& c);
  static Poly var(ChartPtr chart, const std::string& name);
  static Poly monomial(ChartPtr chart, const LatticePoint& m,
                       const Rat& c = Rat(1));
  static Poly term(ChartPtr chart, std::vector<long> ord, LatticePoint lat,
                   const Rat& c);

  const ChartPtr& chart() const { return chart_; }
  const std::map<TermKey, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat constant_term() const;
  long degree() const;           // max total ordinary degree
  long order_ordinary() const;   // min total ordinary degree; -1 for zero

  void add_term(const TermKey& k, const Rat& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scale(const Rat& c) const;
  Poly pow(unsigned long e) const;

  // Substitutes value for the ordinary variable at var_idx.
  Poly substitute(long var_idx, const Poly& value) const;
  Poly set_var_zero(long var_idx) const;
  // Drops every term with a nonzero monoid part.
  Poly kill_monomials() const;
  // Divides every term's monoid part by t*e; requires divisibility.
  Poly divide_monomial(const LatticePoint& e, long t) const;

  // Leading normalization for dedup: divides by the coefficient of the
  // smallest term key.
  Poly monic() const;

  std::string str() const;

 private:
  ChartPtr chart_;
  std::map<TermKey, Rat> terms_;
};

// Finitely generated ideal presented on a chart.  Generators are nonzero and
// deduplicated up to scalar.
struct Ideal {
  ChartPtr chart;
  std::vector<Poly> gens;

  static Ideal make(ChartPtr chart, std::vector<Poly> gens);
  bool is_zero() const { return gens.empty(); }
  // The stalk at the origin is the unit ideal iff some generator has a
  // nonzero constant term.
  bool stalk_unit_at_origin() const;
  std::string str() const;
};

// Text grammar: rational coefficients, + - * ^, parentheses; names resolve to
// ordinary variables or named monomials.  Raises ParseError.
Poly parse_poly(const ChartPtr& chart, const std::string& text);

// Round-trippable printer used by parse_poly tests and serialization.
std::string poly_str(const Poly& p);

// In-place coordinate changes x := value (value must not be constant in a way
// that loses the variable; each step is an automorphism of the chart ring).
struct SubStep {
  long var_idx = -1;
  Poly value;
};

struct ChartSub {
  std::vector<SubStep> steps;
  bool empty() const { return steps.empty(); }
  Poly apply(const Poly& p) const;
  Ideal apply(const Ideal& i) const;
  // Inverse automorphism; each step must be of the form
  // x := a*x + (terms free of x).
  ChartSub inverse() const;
  ChartSub then(const ChartSub& next) const;
};

// Reinterprets a polynomial from a subchart (fewer ordinary variables, same
// monoid) on a larger chart, matching variables and names by name.
Poly embed_poly(const Poly& p, const ChartPtr& big);
Ideal embed_ideal(const Ideal& i, const ChartPtr& big);

// Chart with one ordinary variable removed.
ChartPtr chart_without_var(const ChartPtr& chart, const std::string& name);

// Sets var := 0 and moves the ideal to the chart without var; the log
// structure pulls back unchanged.
Ideal restrict_hypersurface(const Ideal& i, const std::string& var);

}  // namespace logres
