// Copyright (c) 2026 the logres authors.
// SPDX-License-Identifier: MIT

#include "logres/poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace logres {

bool operator<(const TermKey& a, const TermKey& b) {
  if (a.ord != b.ord) return a.ord < b.ord;
  return lp_cmp(a.lat, b.lat) < 0;
}

bool operator==(const TermKey& a, const TermKey& b) {
  return a.ord == b.ord && lp_cmp(a.lat, b.lat) == 0;
}

namespace {

long ord_total(const std::vector<long>& ord) {
  long t = 0;
  for (long e : ord) t += e;
  return t;
}

void require_chart(const ChartPtr& c) {
  if (!c) throw DimensionMismatch("polynomial without a chart");
}

}  // namespace

Poly Poly::zero(ChartPtr chart) {
  require_chart(chart);
  return Poly(std::move(chart));
}

Poly Poly::constant(ChartPtr chart, const Rat& c) {
  require_chart(chart);
  Poly p(chart);
  if (c != 0) {
    TermKey k{std::vector<long>(chart->ordinary.size(), 0),
              LatticePoint(chart->rank(), 0)};
    p.terms_[k] = c;
  }
  return p;
}

Poly Poly::var(ChartPtr chart, const std::string& name) {
  require_chart(chart);
  long idx = chart->var_index(name);
  if (idx >= 0) {
    TermKey k{std::vector<long>(chart->ordinary.size(), 0),
              LatticePoint(chart->rank(), 0)};
    k.ord[idx] = 1;
    Poly p(chart);
    p.terms_[k] = 1;
    return p;
  }
  auto it = chart->monomial_names.find(name);
  if (it == chart->monomial_names.end()) {
    throw ParseError("unknown name: " + name);
  }
  return monomial(chart, it->second);
}

Poly Poly::monomial(ChartPtr chart, const LatticePoint& m, const Rat& c) {
  require_chart(chart);
  if (static_cast<long>(m.size()) != chart->rank()) {
    throw DimensionMismatch("monomial size does not match chart rank");
  }
  if (!cone_member(m, chart->monoid)) {
    throw DimensionMismatch("monomial outside the chart monoid");
  }
  Poly p(chart);
  if (c != 0) {
    TermKey k{std::vector<long>(chart->ordinary.size(), 0), m};
    p.terms_[k] = c;
  }
  return p;
}

Poly Poly::term(ChartPtr chart, std::vector<long> ord, LatticePoint lat,
                const Rat& c) {
  require_chart(chart);
  if (static_cast<long>(ord.size()) != chart->nvars() ||
      static_cast<long>(lat.size()) != chart->rank()) {
    throw DimensionMismatch("term exponents do not match the chart");
  }
  for (long e : ord) {
    if (e < 0) throw DimensionMismatch("negative ordinary exponent");
  }
  if (!cone_member(lat, chart->monoid)) {
    throw DimensionMismatch("term monomial outside the chart monoid");
  }
  Poly p(chart);
  if (c != 0) p.terms_[TermKey{std::move(ord), std::move(lat)}] = c;
  return p;
}

Rat Poly::constant_term() const {
  if (!chart_) return Rat(0);
  TermKey k{std::vector<long>(chart_->ordinary.size(), 0),
            LatticePoint(chart_->rank(), 0)};
  auto it = terms_.find(k);
  return it == terms_.end() ? Rat(0) : it->second;
}

long Poly::degree() const {
  long d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, ord_total(k.ord));
  return d;
}

long Poly::order_ordinary() const {
  long d = -1;
  for (const auto& [k, c] : terms_) {
    long t = ord_total(k.ord);
    if (d < 0 || t < d) d = t;
  }
  return d;
}

void Poly::add_term(const TermKey& k, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  if (chart_ != o.chart_) throw DimensionMismatch("chart mismatch in +");
  Poly r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  if (chart_ != o.chart_) throw DimensionMismatch("chart mismatch in -");
  Poly r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
  return r;
}

Poly Poly::operator-() const {
  Poly r(chart_);
  for (const auto& [k, c] : terms_) r.terms_[k] = -c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (chart_ != o.chart_) throw DimensionMismatch("chart mismatch in *");
  Poly r(chart_);
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      TermKey k;
      k.ord.resize(ka.ord.size());
      for (std::size_t i = 0; i < ka.ord.size(); ++i) {
        k.ord[i] = ka.ord[i] + kb.ord[i];
      }
      k.lat = lp_add(ka.lat, kb.lat);
      r.add_term(k, ca * cb);
    }
  }
  return r;
}

Poly Poly::scale(const Rat& c) const {
  Poly r(chart_);
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
  return r;
}

Poly Poly::pow(unsigned long e) const {
  require_chart(chart_);
  Poly r = Poly::constant(chart_, Rat(1));
  Poly b = *this;
  while (e > 0) {
    if (e & 1UL) r = r * b;
    if (e >>= 1UL) b = b * b;
  }
  return r;
}

Poly Poly::substitute(long var_idx, const Poly& value) const {
  require_chart(chart_);
  if (value.chart_ != chart_) {
    throw DimensionMismatch("substitution value lives on another chart");
  }
  if (var_idx < 0 || var_idx >= chart_->nvars()) {
    throw DimensionMismatch("substitution index out of range");
  }
  // Cache powers of the value; exponents stay small.
  std::vector<Poly> powers{Poly::constant(chart_, Rat(1))};
  Poly r(chart_);
  for (const auto& [k, c] : terms_) {
    long e = k.ord[var_idx];
    while (static_cast<long>(powers.size()) <= e) {
      powers.push_back(powers.back() * value);
    }
    TermKey rest = k;
    rest.ord[var_idx] = 0;
    Poly base(chart_);
    base.terms_[rest] = c;
    Poly contrib = base * powers[static_cast<std::size_t>(e)];
    for (const auto& [kk, cc] : contrib.terms_) r.add_term(kk, cc);
  }
  return r;
}

Poly Poly::set_var_zero(long var_idx) const {
  require_chart(chart_);
  Poly r(chart_);
  for (const auto& [k, c] : terms_) {
    if (k.ord[var_idx] == 0) r.terms_[k] = c;
  }
  return r;
}

Poly Poly::kill_monomials() const {
  Poly r(chart_);
  for (const auto& [k, c] : terms_) {
    if (lp_is_zero(k.lat)) r.terms_[k] = c;
  }
  return r;
}

Poly Poly::divide_monomial(const LatticePoint& e, long t) const {
  require_chart(chart_);
  Poly r(chart_);
  LatticePoint shift = lp_scale(Int(t), e);
  for (const auto& [k, c] : terms_) {
    TermKey nk = k;
    nk.lat = lp_sub(k.lat, shift);
    if (!cone_member(nk.lat, chart_->monoid)) {
      throw DimensionMismatch("monomial division leaves the monoid");
    }
    r.terms_[nk] = c;
  }
  return r;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  return scale(Rat(1) / terms_.begin()->second);
}

namespace {

// Greedy decomposition of a monoid element over the named points, preferring
// name-sorted order; memoized per chart call site.
bool decompose_named(const LogChart& chart, const LatticePoint& m,
                     std::map<std::string, long>& out) {
  if (lp_is_zero(m)) return true;
  for (const auto& [name, pt] : chart.monomial_names) {
    LatticePoint rest = lp_sub(m, pt);
    if (!cone_member(rest, chart.monoid)) continue;
    std::map<std::string, long> sub;
    if (decompose_named(chart, rest, sub)) {
      ++sub[name];
      out = std::move(sub);
      return true;
    }
  }
  return false;
}

void print_factor(std::ostringstream& os, bool& any, const std::string& name,
                  long e) {
  if (e == 0) return;
  if (any) os << "*";
  os << name;
  if (e != 1) os << "^" << e;
  any = true;
}

}  // namespace

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rat coeff = c;
    if (first) {
      if (coeff < 0) {
        os << "-";
        coeff = -coeff;
      }
    } else {
      os << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) coeff = -coeff;
    }
    std::ostringstream body;
    bool any = false;
    for (std::size_t i = 0; i < k.ord.size(); ++i) {
      print_factor(body, any, chart_->ordinary[i], k.ord[i]);
    }
    if (!lp_is_zero(k.lat)) {
      std::map<std::string, long> named;
      if (decompose_named(*chart_, k.lat, named)) {
        for (const auto& [name, e] : named) print_factor(body, any, name, e);
      } else {
        if (any) body << "*";
        body << "@" << lp_str(k.lat);
        any = true;
      }
    }
    if (!any) {
      os << rat_str(coeff);
    } else {
      if (coeff != 1) os << rat_str(coeff) << "*";
      os << body.str();
    }
    first = false;
  }
  return os.str();
}

std::string poly_str(const Poly& p) { return p.str(); }

Ideal Ideal::make(ChartPtr chart, std::vector<Poly> gens) {
  require_chart(chart);
  Ideal i;
  i.chart = chart;
  std::vector<std::string> seen;
  for (auto& g : gens) {
    if (g.chart() != chart) {
      throw DimensionMismatch("generator lives on another chart");
    }
    if (g.is_zero()) continue;
    std::string key = g.monic().str();
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    i.gens.push_back(std::move(g));
  }
  return i;
}

bool Ideal::stalk_unit_at_origin() const {
  for (const auto& g : gens) {
    if (g.constant_term() != 0) return true;
  }
  return false;
}

std::string Ideal::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) os << ", ";
    os << gens[i].str();
  }
  os << ")";
  return os.str();
}

namespace {

struct Token {
  enum Kind { Name, Number, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Token next() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
    if (pos_ >= s_.size()) return {Token::End, ""};
    char ch = s_[pos_];
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t b = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      return {Token::Name, s_.substr(b, pos_ - b)};
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t b = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      }
      // Contiguous p/q is a single rational literal.
      if (pos_ < s_.size() && s_[pos_] == '/' && pos_ + 1 < s_.size() &&
          std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          ++pos_;
        }
      }
      return {Token::Number, s_.substr(b, pos_ - b)};
    }
    ++pos_;
    switch (ch) {
      case '+':
        return {Token::Plus, "+"};
      case '-':
        return {Token::Minus, "-"};
      case '*':
        return {Token::Star, "*"};
      case '^':
        return {Token::Caret, "^"};
      case '(':
        return {Token::LParen, "("};
      case ')':
        return {Token::RParen, ")"};
      default:
        throw ParseError(std::string("unexpected character '") + ch + "'");
    }
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  Parser(const ChartPtr& chart, const std::string& text)
      : chart_(chart), lex_(text) {
    advance();
  }

  Poly parse() {
    Poly p = sum();
    if (tok_.kind != Token::End) throw ParseError("trailing input: " + tok_.text);
    return p;
  }

 private:
  void advance() { tok_ = lex_.next(); }

  Poly sum() {
    bool neg = false;
    if (tok_.kind == Token::Plus) {
      advance();
    } else if (tok_.kind == Token::Minus) {
      neg = true;
      advance();
    }
    Poly p = product();
    if (neg) p = -p;
    while (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
      bool minus = tok_.kind == Token::Minus;
      advance();
      Poly q = product();
      p = minus ? p - q : p + q;
    }
    return p;
  }

  Poly product() {
    Poly p = power();
    while (tok_.kind == Token::Star) {
      advance();
      p = p * power();
    }
    return p;
  }

  Poly power() {
    Poly p = atom();
    if (tok_.kind == Token::Caret) {
      advance();
      if (tok_.kind != Token::Number || tok_.text.find('/') != std::string::npos) {
        throw ParseError("exponent must be a nonnegative integer");
      }
      unsigned long e = 0;
      for (char ch : tok_.text) {
        e = e * 10 + static_cast<unsigned long>(ch - '0');
        if (e > 1000000UL) throw ParseError("exponent too large");
      }
      advance();
      p = p.pow(e);
    }
    return p;
  }

  Poly atom() {
    if (tok_.kind == Token::Number) {
      Rat c = parse_rat(tok_.text);
      advance();
      return Poly::constant(chart_, c);
    }
    if (tok_.kind == Token::Name) {
      std::string name = tok_.text;
      if (!chart_->has_name(name)) throw ParseError("unknown name: " + name);
      advance();
      return Poly::var(chart_, name);
    }
    if (tok_.kind == Token::LParen) {
      advance();
      Poly p = sum();
      if (tok_.kind != Token::RParen) throw ParseError("expected ')'");
      advance();
      return p;
    }
    if (tok_.kind == Token::Minus) {
      advance();
      return -atom();
    }
    throw ParseError("unexpected token: " + tok_.text);
  }

  ChartPtr chart_;
  Lexer lex_;
  Token tok_;
};

}  // namespace

Poly parse_poly(const ChartPtr& chart, const std::string& text) {
  require_chart(chart);
  return Parser(chart, text).parse();
}

Poly ChartSub::apply(const Poly& p) const {
  Poly r = p;
  for (const auto& s : steps) r = r.substitute(s.var_idx, s.value);
  return r;
}

Ideal ChartSub::apply(const Ideal& i) const {
  std::vector<Poly> gens;
  for (const auto& g : i.gens) gens.push_back(apply(g));
  return Ideal::make(i.chart, std::move(gens));
}

ChartSub ChartSub::inverse() const {
  ChartSub inv;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    const SubStep& s = *it;
    // Split value = a*x + rest with rest free of x and a a nonzero scalar.
    Rat a = 0;
    Poly rest(s.value.chart());
    for (const auto& [k, c] : s.value.terms()) {
      if (k.ord[s.var_idx] == 0) {
        rest.add_term(k, c);
        continue;
      }
      if (k.ord[s.var_idx] != 1 || ord_total(k.ord) != 1 || !lp_is_zero(k.lat)) {
        throw DimensionMismatch("substitution step is not affine in its variable");
      }
      a = c;
    }
    if (a == 0) {
      throw DimensionMismatch("substitution step loses its variable");
    }
    Poly x(s.value.chart());
    TermKey k{std::vector<long>(s.value.chart()->ordinary.size(), 0),
              LatticePoint(s.value.chart()->rank(), 0)};
    k.ord[s.var_idx] = 1;
    x.add_term(k, Rat(1) / a);
    SubStep istep;
    istep.var_idx = s.var_idx;
    istep.value = x - rest.scale(Rat(1) / a);
    inv.steps.push_back(std::move(istep));
  }
  return inv;
}

ChartSub ChartSub::then(const ChartSub& next) const {
  ChartSub r = *this;
  r.steps.insert(r.steps.end(), next.steps.begin(), next.steps.end());
  return r;
}

Poly embed_poly(const Poly& p, const ChartPtr& big) {
  require_chart(big);
  if (!p.chart()) throw DimensionMismatch("embedding a chartless polynomial");
  const LogChart& small = *p.chart();
  if (small.rank() != big->rank()) {
    throw DimensionMismatch("embedding across different lattices");
  }
  std::vector<long> where(small.ordinary.size());
  for (std::size_t i = 0; i < small.ordinary.size(); ++i) {
    long idx = big->var_index(small.ordinary[i]);
    if (idx < 0) {
      throw DimensionMismatch("missing variable on the target chart: " +
                              small.ordinary[i]);
    }
    where[i] = idx;
  }
  Poly r(big);
  for (const auto& [k, c] : p.terms()) {
    TermKey nk{std::vector<long>(big->ordinary.size(), 0), k.lat};
    for (std::size_t i = 0; i < k.ord.size(); ++i) {
      nk.ord[where[i]] += k.ord[i];
    }
    r.add_term(nk, c);
  }
  return r;
}

Ideal embed_ideal(const Ideal& i, const ChartPtr& big) {
  std::vector<Poly> gens;
  for (const auto& g : i.gens) gens.push_back(embed_poly(g, big));
  return Ideal::make(big, std::move(gens));
}

ChartPtr chart_without_var(const ChartPtr& chart, const std::string& name) {
  require_chart(chart);
  if (chart->var_index(name) < 0) {
    throw DimensionMismatch("no such ordinary variable: " + name);
  }
  LogChart c = *chart;
  c.ordinary.erase(std::find(c.ordinary.begin(), c.ordinary.end(), name));
  for (auto& act : c.actions) act.ordinary_weights.erase(name);
  return make_chart(std::move(c));
}

Ideal restrict_hypersurface(const Ideal& i, const std::string& var) {
  require_chart(i.chart);
  long idx = i.chart->var_index(var);
  if (idx < 0) throw DimensionMismatch("no such ordinary variable: " + var);
  ChartPtr target = chart_without_var(i.chart, var);
  std::vector<Poly> gens;
  for (const auto& g : i.gens) {
    Poly cut = g.set_var_zero(idx);
    Poly moved(target);
    for (const auto& [k, c] : cut.terms()) {
      TermKey nk;
      nk.lat = k.lat;
      nk.ord.reserve(k.ord.size() - 1);
      for (std::size_t j = 0; j < k.ord.size(); ++j) {
        if (static_cast<long>(j) != idx) nk.ord.push_back(k.ord[j]);
      }
      moved.add_term(nk, c);
    }
    gens.push_back(std::move(moved));
  }
  return Ideal::make(target, std::move(gens));
}

}  // namespace logres
