#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "polydyn/errors.hpp"
#include "polydyn/rational.hpp"

namespace polydyn {

inline constexpr unsigned long kDefaultDegreeGuard = 1ul << 20;

// Dense univariate polynomial, constant term first, no trailing zeros.
// T is an exact commutative ring: Int, Rat, or Poly<Rat> (bivariate).
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(int c) : c_{T(c)} { trim(); }
  explicit Poly(T c) : c_{std::move(c)} { trim(); }
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly x() { return Poly(std::vector<T>{T(0), T(1)}); }
  static Poly from_coeffs(std::initializer_list<T> list) {
    return Poly(std::vector<T>(list));
  }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& lc() const {
    if (c_.empty()) throw InternalError("leading coefficient of zero polynomial");
    return c_.back();
  }
  T constant_term() const { return coeff(0); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(r));
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const T& s) const {
    if (s == T(0)) return Poly();
    Poly r = *this;
    for (auto& c : r.c_) c = c * s;
    r.trim();
    return r;
  }

  T eval(const T& v) const {
    T acc = T(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
    return acc;
  }

  Poly shifted_coeff(std::size_t i, const T& delta) const {
    Poly r = *this;
    if (r.c_.size() <= i) r.c_.resize(i + 1, T(0));
    r.c_[i] += delta;
    r.trim();
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;
// Polynomials in a main variable whose coefficients live in Q[t].
using Bivar = Poly<RatPoly>;

template <class T>
Poly<T> derivative(const Poly<T>& p) {
  if (p.degree() < 1) return Poly<T>();
  std::vector<T> r(static_cast<std::size_t>(p.degree()), T(0));
  for (int i = 1; i <= p.degree(); ++i) r[i - 1] = p.coeff(i) * T(i);
  return Poly<T>(std::move(r));
}

template <class T>
Poly<T> compose(const Poly<T>& outer, const Poly<T>& inner) {
  Poly<T> acc;
  for (std::size_t i = outer.coeffs().size(); i-- > 0;)
    acc = acc * inner + Poly<T>(outer.coeff(i));
  return acc;
}

// dth power for small exponents.
template <class T>
Poly<T> pow_poly(const Poly<T>& p, unsigned long e) {
  Poly<T> acc(1), base = p;
  while (e) {
    if (e & 1) acc *= base;
    base = (e >>= 1) ? base * base : base;
  }
  return acc;
}

inline void check_degree_guard(int d, unsigned long n, unsigned long guard) {
  if (d <= 1 || n == 0) return;
  Int total;
  mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(d), n);
  if (cmp(total, Int(guard)) > 0)
    throw DegreeGuardExceeded("iterate degree " + std::to_string(d) + "^" +
                              std::to_string(n) + " exceeds guard " +
                              std::to_string(guard));
}

// phi composed with itself n times; iterate(phi, 0) = x.
template <class T>
Poly<T> iterate(const Poly<T>& phi, unsigned long n,
                unsigned long guard = kDefaultDegreeGuard) {
  check_degree_guard(phi.degree(), n, guard);
  Poly<T> acc = Poly<T>::x();
  for (unsigned long i = 0; i < n; ++i) acc = compose(phi, acc);
  return acc;
}

// --- Rational-coefficient helpers (poly.cpp) ---

struct RatDivMod {
  RatPoly quot, rem;
};
RatDivMod divmod(const RatPoly& a, const RatPoly& b);
RatPoly exact_div(const RatPoly& a, const RatPoly& b);
// Monic gcd.
RatPoly poly_gcd(RatPoly a, RatPoly b);

struct ClearedPoly {
  IntPoly poly;  // primitive up to the original scale
  Int den;       // input = poly / den
};
ClearedPoly clear_denominators(const RatPoly& f);
RatPoly to_rational(const IntPoly& f);
// Requires every coefficient to be an integer.
IntPoly to_integer(const RatPoly& f);

Int content(const IntPoly& f);
// content * sign(lc) stripped; zero stays zero.
IntPoly primitive_part(const IntPoly& f);
IntPoly int_poly_gcd(IntPoly a, IntPoly b);  // primitive, positive lc

// Product of the distinct irreducible factors over Q, as a primitive integer
// polynomial with positive leading coefficient.
IntPoly squarefree_part(const IntPoly& f);

// Rational roots with multiplicity, ascending. Factors the outer coefficients,
// so FactorizationIncomplete can propagate on adversarial inputs.
std::vector<std::pair<Rat, unsigned>> rational_roots_with_multiplicity(
    const RatPoly& f);

// "x^3 + 3/2*x" style rendering, highest power first.
std::string poly_string(const RatPoly& f, const std::string& var = "x");
std::string poly_string(const IntPoly& f, const std::string& var = "x");
// "c0,c1,..." constant first.
std::string coeff_list_string(const RatPoly& f);

// --- Bivariate helpers ---

// Evaluate the Q[t] coefficients at t = tau.
RatPoly eval_t(const Bivar& f, const Rat& tau);
// Embed a polynomial in the main variable (coefficients become constants).
Bivar lift_main(const RatPoly& f);
int max_coeff_degree(const Bivar& f);
// Phi_n(x,t) = phi^n(x) - t.
Bivar phi_tower(const RatPoly& phi, unsigned long n,
                unsigned long guard = kDefaultDegreeGuard);

template <class T>
std::ostream& operator<<(std::ostream& os, const Poly<T>& p) {
  os << "[";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) os << ", ";
    os << p.coeffs()[i];
  }
  return os << "]";
}

}  // namespace polydyn
