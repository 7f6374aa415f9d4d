#include "polydyn/dynamics.hpp"

#include <algorithm>
#include <complex>
#include <map>

#include "polydyn/intfactor.hpp"
#include "polydyn/resultant.hpp"

namespace polydyn {

CriticalData critical_data(const RatPoly& phi) {
  const RatPoly dphi = derivative(phi);
  if (dphi.is_zero()) throw ZeroDerivative("phi is constant");
  const int d = phi.degree();
  CriticalData out;
  if (d >= 2) {
    auto roots = rational_roots_with_multiplicity(dphi);
    unsigned total = 0;
    for (const auto& [r, m] : roots) total += m;
    if (total != static_cast<unsigned>(d - 1))
      throw NonRationalCritical(
          "phi' has irrational roots (found multiplicity " +
          std::to_string(total) + " of " + std::to_string(d - 1) + ")");
    for (const auto& [r, m] : roots)
      out.critical.push_back({r, m, phi.eval(r)});
  }
  std::map<Rat, unsigned, RatLess> branch;
  for (const auto& c : out.critical) branch[c.value] += c.multiplicity;
  for (const auto& [beta, m] : branch) out.branch.push_back({beta, m});
  return out;
}

BranchData rational_branch_data(const RatPoly& phi) {
  const int d = phi.degree();
  if (d < 1) throw ZeroDerivative("phi is constant");
  // D_1(t) = A prod (beta - t)^{M_beta}; its rational roots are the rational
  // branch points with the right multiplicities.
  Bivar phi1 = phi_tower(phi, 1);
  RatPoly d1 = discriminant_bivar(phi1, d - 1);
  BranchData out;
  if (d1.is_zero()) throw InternalError("disc of phi(x) - t vanished");
  auto roots = rational_roots_with_multiplicity(d1);
  unsigned total = 0;
  for (const auto& [beta, m] : roots) {
    out.branch.push_back({beta, m});
    total += m;
  }
  out.complete = (total == static_cast<unsigned>(d - 1)) &&
                 (d1.degree() == static_cast<int>(d - 1));
  return out;
}

namespace {

struct EscapeBounds {
  // archimedean thresholds
  Rat general;          // |x| >= general forces |phi(x)| >= |x| + 1
  bool monic_integer;   // integer orbits of monic integer maps
  Rat monic_bound;      // 1 + sum |a_j|
  // ultrametric data per prime: escape once v_p(x) <= threshold
  std::vector<std::pair<Int, long>> valuation_thresholds;
};

// Largest integer v with m * v < delta, m >= 1.
long strict_floor(long delta, int m) {
  Int q;
  Int num(delta - 1), den(m);
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q.get_si();
}

EscapeBounds make_bounds(const RatPoly& phi, const Rat& x0) {
  EscapeBounds out;
  const int d = phi.degree();
  Rat abs_sum(0);
  for (int j = 0; j < d; ++j) abs_sum += abs(phi.coeff(j));
  out.general = (Rat(2) + abs_sum) / abs(phi.lc());
  if (out.general < 1) out.general = 1;
  out.monic_integer = phi.lc() == 1;
  for (const auto& c : phi.coeffs())
    if (!is_integer(c)) out.monic_integer = false;
  out.monic_bound = Rat(1) + abs_sum;

  // Denominators can only ever involve primes from the coefficients or from
  // x0 itself, so this list is exhaustive for negative valuations.
  std::vector<Int> primes = prime_support(Int(x0.get_den()));
  for (const auto& c : phi.coeffs()) {
    if (c == 0) continue;
    for (auto& p : prime_support(Int(c.get_den()))) primes.push_back(p);
  }
  std::sort(primes.begin(), primes.end(), IntLess{});
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  out.valuation_thresholds.reserve(primes.size());
  for (const auto& p : primes) {
    const long vd = valuation(Rat(phi.lc()), p);
    // v(phi(x)) = v(a_d) + d v(x) < v(x) once the top term dominates every
    // lower one and decreases; both conditions are strict inequalities in v.
    long threshold = strict_floor(-vd, d - 1);
    for (int j = 0; j < d; ++j) {
      const Rat& aj = phi.coeff(j);
      if (aj == 0) continue;
      threshold = std::min(threshold, strict_floor(valuation(aj, p) - vd, d - j));
    }
    out.valuation_thresholds.emplace_back(p, threshold);
  }
  return out;
}

std::optional<Escape> escape_check(const RatPoly& phi, const EscapeBounds& B,
                                   const Rat& x, unsigned long step) {
  const Rat ax = abs(x);
  if (B.monic_integer && is_integer(x)) {
    if (ax > B.monic_bound)
      return Escape{Escape::Kind::Archimedean, step, x, Int(0),
                    "integer orbit left [-B, B], B = " + rat_string(B.monic_bound)};
  }
  if (ax >= B.general)
    return Escape{Escape::Kind::Archimedean, step, x, Int(0),
                  "|x| >= " + rat_string(B.general) +
                      " forces |phi(x)| >= |x| + 1"};
  if (x != 0) {
    for (const auto& [p, threshold] : B.valuation_thresholds) {
      const Int den(x.get_den());
      if (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t()) == 0) continue;
      const long v = valuation(x, p);
      if (v <= threshold)
        return Escape{Escape::Kind::NegativeValuation, step, x, p,
                      "v_" + p.get_str() + " = " + std::to_string(v) +
                          " only decreases from here"};
    }
  }
  return std::nullopt;
}

}  // namespace

std::variant<OrbitShape, Escape> orbit_shape(const RatPoly& phi, const Rat& x0,
                                             const OrbitLimits& limits) {
  if (phi.degree() < 2)
    throw Undecidable("orbit certificates need deg phi >= 2");
  const EscapeBounds B = make_bounds(phi, x0);
  std::map<Rat, unsigned long, RatLess> seen;
  std::vector<Rat> orbit;
  Rat x = x0;
  for (unsigned long i = 0; i <= limits.max_steps; ++i) {
    auto it = seen.find(x);
    if (it != seen.end()) {
      OrbitShape s;
      s.preperiod = it->second;
      s.period = i - it->second;
      s.tail.assign(orbit.begin(), orbit.begin() + static_cast<long>(s.preperiod));
      s.cycle.assign(orbit.begin() + static_cast<long>(s.preperiod), orbit.end());
      return s;
    }
    if (auto esc = escape_check(phi, B, x, i)) return *esc;
    const std::size_t bits =
        mpz_sizeinbase(x.get_num().get_mpz_t(), 2) +
        mpz_sizeinbase(x.get_den().get_mpz_t(), 2);
    if (bits > limits.max_bits)
      throw Undecidable("orbit value exceeded " +
                        std::to_string(limits.max_bits) + " bits at step " +
                        std::to_string(i));
    seen.emplace(x, i);
    orbit.push_back(x);
    x = phi.eval(x);
  }
  throw Undecidable("no repeat or escape certificate within " +
                    std::to_string(limits.max_steps) + " steps");
}

namespace {

std::string float_heuristic_note(const RatPoly& phi) {
  using C = std::complex<double>;
  const int d = phi.degree();
  std::vector<C> dc;
  const RatPoly dphi = derivative(phi);
  for (const auto& c : dphi.coeffs()) dc.push_back(C(c.get_d(), 0.0));
  auto eval_c = [](const std::vector<C>& f, C z) {
    C acc(0, 0);
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * z + f[i];
    return acc;
  };
  // Durand-Kerner on phi'
  const int m = static_cast<int>(dc.size()) - 1;
  if (m < 1) return "no critical points";
  for (auto& c : dc) c /= dc.back();
  std::vector<C> roots(static_cast<std::size_t>(m));
  C seed(0.4, 0.9);
  C acc(1, 0);
  for (int i = 0; i < m; ++i) {
    acc *= seed;
    roots[static_cast<std::size_t>(i)] = acc;
  }
  for (int it = 0; it < 200; ++it) {
    for (int i = 0; i < m; ++i) {
      C num = eval_c(dc, roots[static_cast<std::size_t>(i)]);
      C den(1, 0);
      for (int j = 0; j < m; ++j)
        if (j != i)
          den *= roots[static_cast<std::size_t>(i)] -
                 roots[static_cast<std::size_t>(j)];
      roots[static_cast<std::size_t>(i)] -= num / den;
    }
  }
  std::vector<C> pc;
  for (const auto& c : phi.coeffs()) pc.push_back(C(c.get_d(), 0.0));
  double R = 2.0;
  for (int j = 0; j < d; ++j) R += std::abs(pc[static_cast<std::size_t>(j)].real());
  bool all_bounded = true;
  for (const auto& r0 : roots) {
    C z = r0;
    for (int it = 0; it < 1000 && all_bounded; ++it) {
      z = eval_c(pc, z);
      if (std::abs(z) > R * 10) {
        all_bounded = false;
      }
    }
    if (!all_bounded) break;
  }
  return all_bounded
             ? "float heuristic: critical orbits stayed bounded for 1000 steps"
             : "float heuristic: a critical orbit escapes";
}

std::vector<Rat> forward_closure(const RatPoly& phi,
                                 const std::vector<Rat>& starts,
                                 const OrbitLimits& limits) {
  std::vector<Rat> out;
  std::map<Rat, bool, RatLess> seen;
  for (const auto& s : starts) {
    Rat x = s;
    for (unsigned long i = 0; i <= limits.max_steps; ++i) {
      if (seen.count(x)) break;
      seen.emplace(x, true);
      out.push_back(x);
      x = phi.eval(x);
    }
  }
  std::sort(out.begin(), out.end(), RatLess{});
  return out;
}

}  // namespace

PcfVerdict is_pcf(const RatPoly& phi, const PcfOptions& opts) {
  if (phi.degree() < 2)
    throw Error("post-critical finiteness needs deg phi >= 2");
  PcfVerdict v;

  std::vector<Rat> starts;
  std::vector<Rat> branch_values;
  bool have_starts = false;
  try {
    CriticalData cd = critical_data(phi);
    for (const auto& c : cd.critical) starts.push_back(c.r);
    for (const auto& b : cd.branch) branch_values.push_back(b.beta);
    have_starts = true;
  } catch (const NonRationalCritical&) {
    BranchData bd = rational_branch_data(phi);
    if (bd.complete) {
      for (const auto& b : bd.branch) {
        starts.push_back(b.beta);
        branch_values.push_back(b.beta);
      }
      have_starts = true;
      v.from_branch_points = true;
    } else {
      CfsrReport cfsr = cfsr_verify(phi);
      if (cfsr.identity_holds) {
        // phi(x) - x = x phi'(x)/d makes every critical point fixed, so the
        // post-critical set equals the (possibly irrational) branch locus.
        v.kind = PcfKind::Pcf;
        v.structural_certificate = true;
        return v;
      }
      v.kind = PcfKind::Unknown;
      v.reason = "critical points are irrational and no structural certificate applies";
      if (opts.float_heuristic) v.reason += "; " + float_heuristic_note(phi);
      return v;
    }
  }

  if (!have_starts) throw InternalError("pcf routing fell through");
  for (const auto& s : starts) {
    std::variant<OrbitShape, Escape> r;
    try {
      r = orbit_shape(phi, s, opts.orbit);
    } catch (const Undecidable& e) {
      v.kind = PcfKind::Unknown;
      v.reason = std::string("orbit of ") + rat_string(s) + " undecided: " + e.what();
      if (opts.float_heuristic) v.reason += "; " + float_heuristic_note(phi);
      return v;
    }
    if (std::holds_alternative<Escape>(r)) {
      v.kind = PcfKind::NotPcf;
      v.witness = std::get<Escape>(r);
      v.witness_start = s;
      return v;
    }
    v.orbits.push_back({s, std::get<OrbitShape>(r)});
  }
  v.kind = PcfKind::Pcf;
  v.post_critical_set = forward_closure(phi, branch_values, opts.orbit);
  return v;
}

Rat quad_normal_form(const Rat& a, const Rat& b, const Rat& c) {
  if (a == 0) throw NotQuadratic("leading coefficient is zero");
  const Rat r = b * b / 4 - b / 2 - a * c;
  // replay the conjugation: x/a straightens the lead, then a shift kills the
  // linear term
  const RatPoly psi = RatPoly::from_coeffs({c, b, a});
  const RatPoly step1 =
      compose(psi, RatPoly::from_coeffs({Rat(0), 1 / a})).scaled(a);
  const Rat delta = -b / 2;
  const RatPoly step2 =
      compose(step1, RatPoly::from_coeffs({delta, Rat(1)})) - RatPoly(delta);
  if (step2 != RatPoly::from_coeffs({-r, Rat(0), Rat(1)}))
    throw InternalError("quadratic normal form conjugation failed");
  return r;
}

std::vector<Rat> g_sequence(const Rat& r, unsigned long count) {
  std::vector<Rat> g{Rat(0)};
  g.reserve(count + 1);
  for (unsigned long i = 0; i < count; ++i) g.push_back(r * g.back() * g.back() - 1);
  return g;
}

RatPoly cfsr_normalized(unsigned d) {
  if (d < 2) throw ConstantInput("normalized family needs d >= 2");
  std::vector<Rat> c(d + 1, Rat(0));
  c[1] = Rat(static_cast<unsigned long>(d)) / Rat(static_cast<unsigned long>(d - 1));
  c[d] = 1;
  return RatPoly(std::move(c));
}

CfsrReport cfsr_verify(const RatPoly& phi) {
  const int d = phi.degree();
  if (d < 2) throw ConstantInput("verification needs deg phi >= 2");
  CfsrReport out;
  const RatPoly lhs = (phi - RatPoly::x()).scaled(Rat(d));
  const RatPoly rhs = RatPoly::x() * derivative(phi);
  out.identity_holds = (lhs == rhs);
  try {
    CriticalData cd = critical_data(phi);
    out.critical_checked = true;
    out.critical_simple_fixed = true;
    for (const auto& c : cd.critical)
      if (c.multiplicity != 1 || c.value != c.r) out.critical_simple_fixed = false;
  } catch (const NonRationalCritical&) {
    out.critical_checked = false;
  }
  return out;
}

RatPoly chebyshev(unsigned d) {
  if (d < 1) throw ConstantInput("normalized Chebyshev needs d >= 1");
  RatPoly prev = RatPoly(2), cur = RatPoly::x();
  for (unsigned i = 1; i < d; ++i) {
    RatPoly next = RatPoly::x() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace polydyn
