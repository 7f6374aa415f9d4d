#pragma once

#include <gmpxx.h>

#include <string>

namespace polydyn {

using Int = mpz_class;
using Rat = mpq_class;

// v_p(n) for n != 0.
long valuation(const Int& n, const Int& p);
// v_p on nonzero rationals.
long valuation(const Rat& x, const Int& p);

Int pow_int(const Int& base, unsigned long e);
Rat pow_rat(const Rat& base, unsigned long e);

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

// Total order usable as std::map comparator.
struct RatLess {
  bool operator()(const Rat& a, const Rat& b) const { return cmp(a, b) < 0; }
};
struct IntLess {
  bool operator()(const Int& a, const Int& b) const { return cmp(a, b) < 0; }
};

// Canonical "p/q" (or "p" when the denominator is 1).
std::string rat_string(const Rat& x);

// value^{1/m} rendered with sig_digits significant decimal digits.
// value must be positive; exactness comes from integer m-th roots on a
// scaled numerator, so no floating point is involved.
std::string root_decimal(const Rat& value, unsigned long m, int sig_digits = 15);

}  // namespace polydyn
