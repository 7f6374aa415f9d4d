#include "polydyn/rational.hpp"

#include <stdexcept>

#include "polydyn/errors.hpp"

namespace polydyn {

long valuation(const Int& n, const Int& p) {
  if (n == 0) throw InternalError("valuation of zero");
  Int reduced;
  return static_cast<long>(
      mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long valuation(const Rat& x, const Int& p) {
  if (x == 0) throw InternalError("valuation of zero");
  long v = 0;
  if (x.get_num() != 0) v += valuation(Int(x.get_num()), p);
  v -= valuation(Int(x.get_den()), p);
  return v;
}

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat pow_rat(const Rat& base, unsigned long e) {
  Rat r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
  return r;  // base is canonical, so num^e / den^e already is
}

std::string rat_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

// Round a digit string to sig significant digits; may lengthen by one on a
// 999... carry. Returns the rounded digits and the carry-driven shift of the
// decimal point.
std::pair<std::string, int> round_digits(const std::string& digits, int sig) {
  if (static_cast<int>(digits.size()) <= sig) {
    std::string d = digits;
    d.append(sig - d.size(), '0');
    return {d, 0};
  }
  std::string head = digits.substr(0, sig);
  if (digits[sig] < '5') return {head, 0};
  for (int i = sig - 1; i >= 0; --i) {
    if (head[i] != '9') {
      ++head[i];
      return {head, 0};
    }
    head[i] = '0';
  }
  head.insert(head.begin(), '1');
  head.pop_back();
  return {head, 1};
}

}  // namespace

std::string root_decimal(const Rat& value, unsigned long m, int sig_digits) {
  if (value <= 0) throw InternalError("root_decimal needs a positive value");
  if (m == 0) throw InternalError("root_decimal needs m >= 1");
  const Int num = value.get_num(), den = value.get_den();
  for (int guard = sig_digits + 10;; guard *= 2) {
    Int scaled = num;
    Int tenpow = pow_int(10, static_cast<unsigned long>(guard) * m);
    scaled *= tenpow;
    scaled /= den;
    Int root;
    mpz_root(root.get_mpz_t(), scaled.get_mpz_t(), m);
    std::string digits = root.get_str();
    // root ~ value^(1/m) * 10^guard with at most a couple of trailing digits
    // of error; insist on real headroom before trusting the prefix.
    if (static_cast<int>(digits.size()) < sig_digits + 4) {
      if (guard > (1 << 20)) throw InternalError("root_decimal failed to converge");
      continue;
    }
    auto [rounded, shift] = round_digits(digits, sig_digits);
    long point = static_cast<long>(digits.size()) - guard + shift;
    if (point >= 1 && point <= sig_digits) {
      std::string out = rounded.substr(0, point);
      std::string frac = rounded.substr(point);
      if (!frac.empty()) out += "." + frac;
      return out;
    }
    // Out of plain-decimal range; scientific keeps every digit honest.
    std::string out = rounded.substr(0, 1);
    if (sig_digits > 1) out += "." + rounded.substr(1);
    out += "e" + std::to_string(point - 1);
    return out;
  }
}

}  // namespace polydyn
