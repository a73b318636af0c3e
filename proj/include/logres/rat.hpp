// Copyright (c) 2026 the logres authors.
// SPDX-License-Identifier: MIT

#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>

#include "logres/errors.hpp"

namespace logres {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int rnum(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rden(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return rden(q) == 1; }

inline Int igcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}
inline Int ilcm(const Int& a, const Int& b) {
  return boost::multiprecision::lcm(a, b);
}

inline Int iabs(const Int& a) { return a < 0 ? Int(-a) : a; }

Int ifactorial(unsigned n);

// Checked narrowing; the engine only ever needs small integer exponents.
long to_long(const Int& v);

Rat rat_pow(const Rat& base, long e);

// Exact integer n-th root; nullopt when v is not a perfect n-th power.
std::optional<Int> iroot_exact(const Int& v, unsigned n);

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
Rat parse_rat(const std::string& text);

std::string rat_str(const Rat& q);

}  // namespace logres
