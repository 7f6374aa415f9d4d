#include "polydyn/resultant.hpp"

#include <algorithm>

#include "polydyn/modular.hpp"

namespace polydyn {

namespace {

// ceil(log2 ||f||_2) + 1
unsigned long norm_bits(const IntPoly& f) {
  Int s = 0;
  for (const auto& c : f.coeffs()) s += c * c;
  if (s == 0) return 1;
  return mpz_sizeinbase(s.get_mpz_t(), 2) / 2 + 2;
}

}  // namespace

Int resultant(const IntPoly& P, const IntPoly& Q) {
  if (P.is_zero() && Q.is_zero())
    throw BothZero("resultant of two zero polynomials");
  if (P.is_zero() || Q.is_zero()) return 0;
  const unsigned long dp = static_cast<unsigned long>(P.degree());
  const unsigned long dq = static_cast<unsigned long>(Q.degree());
  if (dp == 0 && dq == 0) return 1;
  if (dp == 0) return pow_int(P.lc(), dq);
  if (dq == 0) return pow_int(Q.lc(), dp);

  // Hadamard: |Res| <= ||P||^dq * ||Q||^dp
  const unsigned long bound_bits = dq * norm_bits(P) + dp * norm_bits(Q) + 2;
  Int modulus = 1, x = 0;
  const Int lead = P.lc() * Q.lc();
  std::size_t idx = 0;
  while (mpz_sizeinbase(modulus.get_mpz_t(), 2) <= bound_bits) {
    const std::uint64_t p = modp::crt_prime(idx++);
    if (mpz_divisible_ui_p(lead.get_mpz_t(), p)) continue;  // degree drop
    const std::uint64_t r =
        modp::resultant(modp::reduce_poly_mod(P, p), modp::reduce_poly_mod(Q, p), p);
    // incremental CRT: adjust x modulo the new prime
    const std::uint64_t xm = modp::reduce_int(x, p);
    const std::uint64_t mm = modp::reduce_int(modulus, p);
    const std::uint64_t delta =
        modp::mulmod((r + p - xm) % p, modp::invmod(mm, p), p);
    x += modulus * Int(static_cast<unsigned long>(delta));
    modulus *= Int(static_cast<unsigned long>(p));
  }
  if (x * 2 > modulus) x -= modulus;
  return x;
}

Rat resultant(const RatPoly& P, const RatPoly& Q) {
  if (P.is_zero() && Q.is_zero())
    throw BothZero("resultant of two zero polynomials");
  if (P.is_zero() || Q.is_zero()) return Rat(0);
  auto [Pi, dp] = clear_denominators(P);
  auto [Qi, dq] = clear_denominators(Q);
  Rat r(resultant(Pi, Qi));
  r /= Rat(pow_int(dp, static_cast<unsigned long>(Q.degree())));
  r /= Rat(pow_int(dq, static_cast<unsigned long>(P.degree())));
  return r;
}

Rat discriminant(const RatPoly& P) {
  const int m = P.degree();
  if (m < 1) throw ConstantInput("discriminant needs degree >= 1");
  Rat r = resultant(P, derivative(P));
  r /= P.lc();
  const unsigned long mm = static_cast<unsigned long>(m);
  if (((mm * (mm - 1)) / 2) & 1) r = -r;
  return r;
}

Int discriminant(const IntPoly& P) {
  Rat d = discriminant(to_rational(P));
  if (!is_integer(d)) throw InternalError("integer discriminant not integral");
  return Int(d.get_num());
}

namespace {

// Newton interpolation through (nodes[i], values[i]), exact over Q.
RatPoly newton_interpolate(const std::vector<Rat>& nodes,
                           const std::vector<Rat>& values) {
  const std::size_t n = nodes.size();
  std::vector<Rat> dd = values;  // divided differences, built in place
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
  RatPoly acc;
  for (std::size_t i = n; i-- > 0;) {
    acc = acc * RatPoly::from_coeffs({-nodes[i], Rat(1)});
    acc += RatPoly(dd[i]);
  }
  return acc;
}

// Integer evaluation nodes 0, 1, -1, 2, -2, ...
Rat eval_node(std::size_t i) {
  if (i == 0) return Rat(0);
  const std::size_t k = (i + 1) / 2;
  return (i & 1) ? Rat(static_cast<unsigned long>(k))
                 : -Rat(static_cast<unsigned long>(k));
}

}  // namespace

RatPoly resultant_bivar(const Bivar& P, const Bivar& Q,
                        std::optional<int> degree_bound) {
  if (P.is_zero() && Q.is_zero())
    throw BothZero("resultant of two zero polynomials");
  if (P.is_zero() || Q.is_zero()) return RatPoly();
  const int dp = P.degree(), dq = Q.degree();
  if (dp == 0 && dq == 0) return RatPoly(1);
  if (dp == 0) return pow_poly(P.coeff(0), static_cast<unsigned long>(dq));
  if (dq == 0) return pow_poly(Q.coeff(0), static_cast<unsigned long>(dp));

  const int tbound =
      degree_bound.value_or(dq * std::max(max_coeff_degree(P), 0) +
                            dp * std::max(max_coeff_degree(Q), 0));
  const std::size_t needed = static_cast<std::size_t>(tbound) + 1;
  std::vector<Rat> nodes, values;
  nodes.reserve(needed + 1);
  values.reserve(needed + 1);
  std::size_t i = 0;
  while (nodes.size() < needed + 1) {  // one extra consistency node
    const Rat tau = eval_node(i++);
    if (P.lc().eval(tau) == 0 || Q.lc().eval(tau) == 0) continue;
    nodes.push_back(tau);
    values.push_back(resultant(eval_t(P, tau), eval_t(Q, tau)));
  }
  const Rat check_node = nodes.back(), check_value = values.back();
  nodes.pop_back();
  values.pop_back();
  RatPoly result = newton_interpolate(nodes, values);
  if (result.eval(check_node) != check_value)
    throw InternalError("bivariate resultant interpolation inconsistent");
  return result;
}

RatPoly discriminant_bivar(const Bivar& P, std::optional<int> degree_bound) {
  const int m = P.degree();
  if (m < 1) throw ConstantInput("discriminant needs degree >= 1");
  std::optional<int> res_bound;
  if (degree_bound) res_bound = *degree_bound + P.lc().degree();
  RatPoly r = resultant_bivar(P, derivative(P), res_bound);
  RatPoly out = exact_div(r, P.lc());
  const unsigned long mm = static_cast<unsigned long>(m);
  if (((mm * (mm - 1)) / 2) & 1) out = -out;
  return out;
}

SimonCheck simon_identity_check(const Bivar& P, const RatPoly& A,
                                const RatPoly& B) {
  const Rat unit = resultant(A, B);
  if (unit != 1 && unit != -1)
    throw ResultantNotUnit("Res(A, B) = " + rat_string(unit));
  const int m = P.degree();
  if (m < 1) throw ConstantInput("substitution needs x-degree >= 1");
  const int deg_r = std::max(A.degree(), B.degree());
  if (deg_r < 1) throw ConstantInput("substitution needs y-degree >= 1");

  // Q(y) = (-1)^m sum_i P_i(t) (-B)^i A^(m-i), coefficients in Q[t]
  Bivar Q;
  const RatPoly negB = -B;
  for (int i = 0; i <= m; ++i) {
    const RatPoly& pi = P.coeff(static_cast<std::size_t>(i));
    if (pi.is_zero()) continue;
    RatPoly ypart = pow_poly(negB, static_cast<unsigned long>(i)) *
                    pow_poly(A, static_cast<unsigned long>(m - i));
    Q += lift_main(ypart).scaled(pi);
  }
  if (m & 1) Q = -Q;
  if (Q.degree() < 1)
    throw ConstantInput("substituted polynomial is constant in y");

  // R(y) = A(y) x + B(y) as a polynomial in y over Q[x]
  std::vector<RatPoly> rc(static_cast<std::size_t>(deg_r) + 1);
  for (int j = 0; j <= deg_r; ++j)
    rc[static_cast<std::size_t>(j)] = RatPoly::from_coeffs(
        {B.coeff(static_cast<std::size_t>(j)), A.coeff(static_cast<std::size_t>(j))});
  const RatPoly W = discriminant_bivar(Bivar(std::move(rc)));  // in Q[x]

  SimonCheck out;
  out.deg_y_R = deg_r;
  out.lhs = discriminant_bivar(Q);

  const unsigned long mu = static_cast<unsigned long>(m);
  const unsigned long nu = static_cast<unsigned long>(deg_r);
  const RatPoly pm(P.lc());
  RatPoly rhs = pow_poly(discriminant_bivar(P), nu);
  if (W.is_zero()) {
    out.rhs = RatPoly();
    out.equal = out.lhs.is_zero();
    return out;
  }
  rhs = rhs * resultant_bivar(P, lift_main(W));
  const unsigned long deg_w = static_cast<unsigned long>(W.degree());

  if (A.degree() == 0) {
    // deg W <= deg B - 1, so every exponent below is nonnegative
    rhs = rhs * pow_poly(pm, 2 * nu - 2 - deg_w);
    rhs = rhs.scaled(pow_rat(B.lc(), mu * nu * (mu - 1)));
    out.rhs = rhs;
    out.equal = (out.lhs == out.rhs);
    return out;
  }

  // General A: fold the block leading coefficients through lc_y(Q) and
  // Res_y(Q, A) instead; the lc(P) power can go negative, so compare after
  // an exact division.
  const unsigned long deg_a = static_cast<unsigned long>(A.degree());
  rhs = rhs * pow_poly(Q.lc(), (mu - 1) * (nu - deg_a));
  rhs = rhs * pow_poly(resultant_bivar(Q, lift_main(A)), mu - 1);
  const long eps = 3 * static_cast<long>(nu) - static_cast<long>(mu * nu) - 2 -
                   static_cast<long>(deg_w);
  if (eps >= 0) {
    out.rhs = rhs * pow_poly(pm, static_cast<unsigned long>(eps));
    out.equal = (out.lhs == out.rhs);
    return out;
  }
  const RatPoly denom = pow_poly(pm, static_cast<unsigned long>(-eps));
  const auto [quot, rem] = divmod(rhs, denom);
  if (rem.is_zero()) {
    out.rhs = quot;
    out.equal = (out.lhs == out.rhs);
  } else {
    out.rhs = rhs;
    out.equal = false;
  }
  return out;
}

}  // namespace polydyn
