#include "polydyn/poly.hpp"

#include <algorithm>
#include <set>

#include "polydyn/intfactor.hpp"

namespace polydyn {

RatDivMod divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw InternalError("polynomial division by zero");
  std::vector<Rat> r(a.coeffs());
  const int db = b.degree();
  const Rat inv_lc = 1 / b.lc();
  std::vector<Rat> q;
  if (a.degree() >= db) q.assign(a.degree() - db + 1, Rat(0));
  for (int i = a.degree(); i >= db; --i) {
    Rat c = r[i] * inv_lc;
    if (c == 0) continue;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= c * b.coeff(j);
  }
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly exact_div(const RatPoly& a, const RatPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalError("exact_div has a remainder");
  return q;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).rem;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(1 / a.lc());
}

ClearedPoly clear_denominators(const RatPoly& f) {
  Int den = 1;
  for (const auto& c : f.coeffs()) den = lcm(den, Int(c.get_den()));
  std::vector<Int> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs())
    out.emplace_back(Int(c.get_num()) * (den / c.get_den()));
  return {IntPoly(std::move(out)), den};
}

RatPoly to_rational(const IntPoly& f) {
  std::vector<Rat> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.emplace_back(c);
  return RatPoly(std::move(out));
}

IntPoly to_integer(const RatPoly& f) {
  std::vector<Int> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    if (!is_integer(c)) throw InternalError("to_integer on non-integral poly");
    out.emplace_back(c.get_num());
  }
  return IntPoly(std::move(out));
}

Int content(const IntPoly& f) {
  Int g = 0;
  for (const auto& c : f.coeffs()) g = gcd(g, c);
  return g;
}

IntPoly primitive_part(const IntPoly& f) {
  if (f.is_zero()) return f;
  Int g = content(f);
  if (sgn(f.lc()) < 0) g = -g;
  std::vector<Int> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.emplace_back(c / g);
  return IntPoly(std::move(out));
}

IntPoly int_poly_gcd(IntPoly a, IntPoly b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  Int cont = gcd(content(a), content(b));
  RatPoly g = poly_gcd(to_rational(a), to_rational(b));
  return primitive_part(clear_denominators(g).poly).scaled(cont);
}

IntPoly squarefree_part(const IntPoly& f) {
  if (f.is_zero()) throw InternalError("squarefree_part(0)");
  if (f.degree() == 0) return IntPoly(1);
  RatPoly g = to_rational(primitive_part(f));
  RatPoly d = poly_gcd(g, derivative(g));
  RatPoly sf = exact_div(g, d);
  return primitive_part(clear_denominators(sf).poly);
}

std::vector<std::pair<Rat, unsigned>> rational_roots_with_multiplicity(
    const RatPoly& f) {
  std::vector<std::pair<Rat, unsigned>> out;
  if (f.is_zero() || f.degree() == 0) return out;
  RatPoly g = f;
  // Strip x factors first so the constant term is nonzero.
  unsigned at_zero = 0;
  while (g.constant_term() == 0 && g.degree() > 0) {
    g = exact_div(g, RatPoly::x());
    ++at_zero;
  }
  if (at_zero) out.emplace_back(Rat(0), at_zero);
  if (g.degree() > 0) {
    IntPoly h = primitive_part(clear_denominators(g).poly);
    std::set<Rat, RatLess> candidates;
    for (const Int& num : divisors(h.constant_term()))
      for (const Int& den : divisors(h.lc())) {
        candidates.insert(Rat(num) / Rat(den));
        candidates.insert(Rat(-num) / Rat(den));
      }
    for (const Rat& r : candidates) {
      if (g.eval(r) != 0) continue;
      RatPoly lin = RatPoly::from_coeffs({-r, Rat(1)});
      unsigned m = 0;
      while (true) {
        auto [q, rem] = divmod(g, lin);
        if (!rem.is_zero()) break;
        g = q;
        ++m;
      }
      out.emplace_back(r, m);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return cmp(a.first, b.first) < 0; });
  return out;
}

namespace {

std::string term_string(const Rat& c, int k, const std::string& var,
                        bool leading) {
  Rat a = abs(c);
  std::string body;
  if (k == 0) {
    body = rat_string(a);
  } else {
    std::string xpart = k == 1 ? var : var + "^" + std::to_string(k);
    body = (a == 1) ? xpart : rat_string(a) + "*" + xpart;
  }
  if (leading) return (sgn(c) < 0 ? "-" : "") + body;
  return (sgn(c) < 0 ? " - " : " + ") + body;
}

}  // namespace

std::string poly_string(const RatPoly& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int k = f.degree(); k >= 0; --k) {
    const Rat c = f.coeff(static_cast<std::size_t>(k));
    if (c == 0) continue;
    out += term_string(c, k, var, out.empty());
  }
  return out;
}

std::string poly_string(const IntPoly& f, const std::string& var) {
  return poly_string(to_rational(f), var);
}

std::string coeff_list_string(const RatPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) out += ",";
    out += rat_string(f.coeffs()[i]);
  }
  return out;
}

RatPoly eval_t(const Bivar& f, const Rat& tau) {
  std::vector<Rat> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(c.eval(tau));
  return RatPoly(std::move(out));
}

Bivar lift_main(const RatPoly& f) {
  std::vector<RatPoly> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.emplace_back(c);
  return Bivar(std::move(out));
}

int max_coeff_degree(const Bivar& f) {
  int m = -1;
  for (const auto& c : f.coeffs()) m = std::max(m, c.degree());
  return m;
}

Bivar phi_tower(const RatPoly& phi, unsigned long n, unsigned long guard) {
  Bivar f = lift_main(iterate(phi, n, guard));
  // subtract t from the constant coefficient
  return f.shifted_coeff(0, RatPoly::from_coeffs({Rat(0), Rat(-1)}));
}

}  // namespace polydyn
