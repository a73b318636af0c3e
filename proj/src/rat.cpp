// Copyright (c) 2026 the logres authors.
// SPDX-License-Identifier: MIT

#include "logres/rat.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace logres {

Int ifactorial(unsigned n) {
  Int r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

long to_long(const Int& v) {
  if (v > std::numeric_limits<long>::max() || v < std::numeric_limits<long>::min()) {
    throw ResourceBound("integer exceeds machine word range");
  }
  return static_cast<long>(v);
}

Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0) {
    if (e < 0) throw ResourceBound("zero raised to a negative power");
    return Rat(0);
  }
  Rat b = e < 0 ? Rat(1) / base : base;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1
                          : static_cast<unsigned long>(e);
  Rat r = 1;
  while (k > 0) {
    if (k & 1UL) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

std::optional<Int> iroot_exact(const Int& v, unsigned n) {
  if (n == 0) throw ResourceBound("zeroth root");
  if (n == 1) return v;
  if (v == 0) return Int(0);
  if (v < 0) {
    if (n % 2 == 0) return std::nullopt;
    auto r = iroot_exact(Int(-v), n);
    if (!r) return std::nullopt;
    return Int(-*r);
  }
  // Binary search on r with r^n == v.
  Int lo = 1, hi = 1;
  while (boost::multiprecision::pow(hi, n) < v) hi <<= 1;
  while (lo < hi) {
    Int mid = (lo + hi) / 2;
    if (boost::multiprecision::pow(mid, n) < v) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (boost::multiprecision::pow(lo, n) == v) return lo;
  return std::nullopt;
}

Rat parse_rat(const std::string& text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string s = text.substr(b, e - b);
  if (s.empty()) throw ParseError("empty rational literal");
  std::size_t slash = s.find('/');
  auto check_int = [](const std::string& part) {
    if (part.empty()) return false;
    std::size_t i = part[0] == '-' ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    }
    return true;
  };
  try {
    if (slash == std::string::npos) {
      if (!check_int(s)) throw ParseError("bad rational literal: " + s);
      return Rat(Int(s));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!check_int(num) || !check_int(den) || den[0] == '-') {
      throw ParseError("bad rational literal: " + s);
    }
    Int d(den);
    if (d == 0) throw ParseError("zero denominator: " + s);
    return Rat(Int(num), d);
  } catch (const LogresError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("bad rational literal: " + s);
  }
}

std::string rat_str(const Rat& q) {
  std::ostringstream out;
  out << rnum(q);
  if (!is_integer(q)) out << "/" << rden(q);
  return out.str();
}

}  // namespace logres
