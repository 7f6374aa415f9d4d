#include "polydyn/discrim.hpp"

#include <algorithm>

#include "polydyn/intfactor.hpp"
#include "polydyn/resultant.hpp"

namespace polydyn {

namespace {

// A = (-1)^{d(d-1)/2} d^d a_d^{d-1}
Rat lead_unit(const RatPoly& phi) {
  const unsigned long d = static_cast<unsigned long>(phi.degree());
  Rat A = pow_rat(phi.lc(), d - 1) * Rat(pow_int(Int(d), d));
  if (((d * (d - 1)) / 2) & 1) A = -A;
  return A;
}

unsigned long small_pow(unsigned long base, unsigned long e,
                        unsigned long guard) {
  unsigned long acc = 1;
  for (unsigned long i = 0; i < e; ++i) {
    if (acc > guard / base)
      throw DegreeGuardExceeded("tower degree exceeds guard");
    acc *= base;
  }
  return acc;
}

Rat pow_rat_int(const Rat& base, const Int& e) {
  if (base == 1 || e == 0) return Rat(1);
  if (!e.fits_ulong_p())
    throw DegreeGuardExceeded("leading-coefficient exponent exceeds range");
  return pow_rat(base, e.get_ui());
}

// a_d^{(m-1)(dm+1)} at the step from level j-1 (degree m) to level j; zero
// for monic phi and for d = 1.
Int lc_step_exponent(unsigned long m, unsigned long d) {
  return Int(m - 1) * (Int(d) * m + 1);
}

// Level factors prod_r Phi_j(r, t)^{m_r} for j = 2..n, plus the base
// discriminant, sharing code between the symbolic and specialized towers.
struct LevelFactors {
  // factor as (value - t)^{mult} when the critical points are rational
  struct Linear {
    Rat value;
    unsigned mult;
  };
  std::vector<std::vector<Linear>> linear;  // per level 2..n
  std::vector<RatPoly> aggregated;          // per level 2..n, irrational case
  bool rational = true;
};

LevelFactors level_factors(const RatPoly& phi, unsigned n,
                           unsigned long guard) {
  LevelFactors out;
  const int d = phi.degree();
  try {
    CriticalData cd = critical_data(phi);
    std::vector<std::pair<Rat, unsigned>> vals;
    for (const auto& c : cd.critical) vals.emplace_back(c.value, c.multiplicity);
    for (unsigned j = 2; j <= n; ++j) {
      std::vector<LevelFactors::Linear> level;
      for (auto& [v, m] : vals) {
        v = phi.eval(v);  // now phi^j(r)
        level.push_back({v, m});
      }
      out.linear.push_back(std::move(level));
    }
  } catch (const NonRationalCritical&) {
    out.rational = false;
    const RatPoly dphi = derivative(phi);
    if (dphi.degree() < 1) {
      out.aggregated.assign(n >= 2 ? n - 1 : 0, RatPoly(1));
      return out;
    }
    const Bivar dphi_l = lift_main(dphi);
    const Rat lc = dphi.lc();
    RatPoly rho = divmod(RatPoly::x(), dphi).rem;  // x mod phi'
    rho = divmod(compose(phi, rho), dphi).rem;     // phi^1 mod phi'
    for (unsigned j = 2; j <= n; ++j) {
      check_degree_guard(d, j, guard);
      rho = divmod(compose(phi, rho), dphi).rem;
      // F_j(t) = Res_x(phi', Phi_j) / lc(phi')^{d^j}
      //        = Res_x(phi', rho_j - t) / lc(phi')^{deg_x(rho_j - t)}
      Bivar rj = lift_main(rho).shifted_coeff(
          0, RatPoly::from_coeffs({Rat(0), Rat(-1)}));
      RatPoly res = resultant_bivar(dphi_l, rj);
      const unsigned long dr = static_cast<unsigned long>(
          std::max(rj.degree(), 0));
      out.aggregated.push_back(res.scaled(1 / pow_rat(lc, dr)));
    }
  }
  return out;
}

}  // namespace

DiscPoly disc_tower_recursive(const RatPoly& phi, unsigned n,
                              unsigned long guard) {
  const int d = phi.degree();
  if (d < 1) throw ConstantInput("tower needs deg phi >= 1");
  if (n < 1) throw Error("tower level must be >= 1");
  check_degree_guard(d, n, guard);
  const unsigned long du = static_cast<unsigned long>(d);

  DiscPoly out;
  out.level = n;
  out.route = DiscRoute::Recursive;
  out.A = lead_unit(phi);
  out.lc = phi.lc();
  RatPoly D = discriminant_bivar(phi_tower(phi, 1), d - 1);
  const unsigned long top_pow = small_pow(du, n - 1, guard);
  out.a_exponent = (n - 1) * top_pow;
  out.trace.push_back({1, D, top_pow});

  LevelFactors F = level_factors(phi, n, guard);
  for (unsigned j = 2; j <= n; ++j) {
    RatPoly level_product(1);
    const std::size_t idx = j - 2;
    if (F.rational) {
      for (const auto& lin : F.linear[idx]) {
        RatPoly base = RatPoly::from_coeffs({lin.value, Rat(-1)});
        level_product *= pow_poly(base, lin.mult);
        out.trace.push_back({j, base, lin.mult * small_pow(du, n - j, guard)});
      }
    } else {
      level_product = F.aggregated[idx];
      out.trace.push_back({j, level_product, small_pow(du, n - j, guard)});
    }
    const unsigned long m = small_pow(du, j - 1, guard);
    const Int lc_step = lc_step_exponent(m, du);
    out.lc_exponent += lc_step * small_pow(du, n - j, guard);
    D = pow_poly(D, du).scaled(pow_rat(out.A, m) *
                               pow_rat_int(out.lc, lc_step)) *
        level_product;
  }
  if (D.is_zero()) throw InternalError("tower discriminant vanished");
  out.value = std::move(D);
  return out;
}

DiscPoly disc_tower_direct(const RatPoly& phi, unsigned n,
                           unsigned long guard) {
  const int d = phi.degree();
  if (d < 1) throw ConstantInput("tower needs deg phi >= 1");
  if (n < 1) throw Error("tower level must be >= 1");
  const unsigned long dn = small_pow(static_cast<unsigned long>(d), n, guard);
  DiscPoly out;
  out.level = n;
  out.route = DiscRoute::Direct;
  out.A = lead_unit(phi);
  out.lc = phi.lc();
  out.value = discriminant_bivar(phi_tower(phi, n, guard),
                                 static_cast<int>(dn) - 1);
  if (out.value.is_zero()) throw InternalError("tower discriminant vanished");
  return out;
}

Rat disc_at(const RatPoly& phi, unsigned n, const Rat& t0,
            unsigned long guard) {
  const int d = phi.degree();
  if (d < 1) throw ConstantInput("tower needs deg phi >= 1");
  if (n < 1) throw Error("tower level must be >= 1");
  check_degree_guard(d, n, guard);
  const unsigned long du = static_cast<unsigned long>(d);
  const Rat A = lead_unit(phi);

  Rat D = discriminant(phi.shifted_coeff(0, -t0));
  LevelFactors F = level_factors(phi, n, guard);
  const Rat lc = phi.lc();
  for (unsigned j = 2; j <= n; ++j) {
    Rat level_product(1);
    const std::size_t idx = j - 2;
    if (F.rational) {
      for (const auto& lin : F.linear[idx])
        level_product *= pow_rat(lin.value - t0, lin.mult);
    } else {
      level_product = F.aggregated[idx].eval(t0);
    }
    const unsigned long m = small_pow(du, j - 1, guard);
    D = pow_rat(A, m) * pow_rat_int(lc, lc_step_exponent(m, du)) *
        pow_rat(D, du) * level_product;
  }
  return D;
}

RamifiedSet ramified_set(const RatPoly& phi, const Rat& t0,
                         const RamifiedOptions& opts) {
  PcfVerdict v = is_pcf(phi, opts.pcf);
  if (v.kind == PcfKind::NotPcf)
    throw NotPcf("phi is not post-critically finite");
  if (v.kind == PcfKind::Unknown)
    throw NotPcf("post-critical finiteness undecided: " + v.reason);
  if (v.structural_certificate && v.post_critical_set.empty())
    throw Undecidable("post-critical set is not rational");

  std::vector<Rat> points = v.post_critical_set;
  if (opts.include_critical_points) {
    CriticalData cd = critical_data(phi);  // NonRationalCritical propagates
    for (const auto& c : cd.critical) points.push_back(c.r);
    std::sort(points.begin(), points.end(), RatLess{});
    points.erase(std::unique(points.begin(), points.end()), points.end());
  }
  for (const auto& nu : points)
    if (nu == t0) throw PostCriticalT0("t0 lies in the post-critical set");

  RamifiedSet out;
  out.post_critical_set = points;
  std::vector<Int> primes = prime_support(Int(phi.degree()));
  for (auto& p : prime_support(phi.lc())) primes.push_back(p);
  for (const auto& nu : points)
    for (auto& p : prime_support(Rat(t0 - nu))) primes.push_back(p);
  std::sort(primes.begin(), primes.end(), IntLess{});
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  out.primes = std::move(primes);
  return out;
}

bool good_reduction(const RatPoly& phi, const Int& p) {
  if (phi.is_zero()) return false;
  for (const auto& c : phi.coeffs()) {
    if (c == 0) continue;
    if (valuation(c, p) < 0) return false;
  }
  return valuation(phi.lc(), p) == 0;
}

WildReport wild_report(const RatPoly& phi, const Int& p, const Rat& t0,
                       unsigned n) {
  if (!is_prime(p)) throw NotPrime(p.get_str() + " is not prime");
  const int d = phi.degree();
  if (d < 2)
    throw HypothesisFailed("deg phi >= 2", "degree is " + std::to_string(d));
  if (!mpz_divisible_p(Int(d).get_mpz_t(), p.get_mpz_t()))
    throw HypothesisFailed("p divides d",
                           p.get_str() + " does not divide " + std::to_string(d));
  if (!good_reduction(phi, p))
    throw HypothesisFailed("good reduction at p",
                           "phi has bad reduction at " + p.get_str());
  PcfVerdict v = is_pcf(phi);
  if (v.kind != PcfKind::Pcf)
    throw HypothesisFailed("phi post-critically finite",
                           v.kind == PcfKind::Unknown
                               ? "undecided: " + v.reason
                               : "phi is not post-critically finite");
  if (!is_integer(t0))
    throw HypothesisFailed("t0 integral", rat_string(t0) + " is not an integer");

  WildReport out;
  out.p = p;
  out.t0 = t0;
  out.n = n;
  out.d = static_cast<unsigned>(d);
  out.disc = disc_at(phi, n, t0);
  if (out.disc == 0)
    throw ZeroDiscriminant("disc Phi_n(x, t0) = 0 at level " + std::to_string(n));
  out.v_disc = valuation(out.disc, p);
  out.bound = Int(n) * pow_int(Int(d), n);
  out.satisfied = Int(out.v_disc) >= out.bound;
  const RatPoly dphi = derivative(phi);
  long vmin = 0;
  bool first = true;
  for (const auto& c : dphi.coeffs()) {
    if (c == 0) continue;
    const long vc = valuation(c, p);
    vmin = first ? vc : std::min(vmin, vc);
    first = false;
  }
  out.ord_p_phi_prime = vmin;
  return out;
}

std::vector<RootDiscRow> root_disc_sequence(const RatPoly& phi, const Rat& t0,
                                            unsigned n_max) {
  std::vector<RootDiscRow> out;
  if (phi.degree() < 1) throw ConstantInput("tower needs deg phi >= 1");
  const unsigned long d = static_cast<unsigned long>(phi.degree());
  unsigned long dn = 1;
  for (unsigned n = 1; n <= n_max; ++n) {
    dn *= d;
    Rat disc = disc_at(phi, n, t0);
    if (disc == 0)
      throw ZeroDiscriminant("disc Phi_n(x, t0) = 0 at level " +
                             std::to_string(n));
    out.push_back({n, disc, root_decimal(abs(disc), dn)});
  }
  return out;
}

std::optional<EisensteinCert> eisenstein_check(const RatPoly& phi,
                                               const Rat& t0, unsigned n,
                                               unsigned shift_range) {
  if (!is_integer(t0))
    throw HypothesisFailed("t0 integral", rat_string(t0) + " is not an integer");
  if (phi.degree() < 1) throw ConstantInput("tower needs deg phi >= 1");
  const RatPoly f = iterate(phi, n).shifted_coeff(0, -t0);
  const IntPoly fi = primitive_part(clear_denominators(f).poly);
  const int m = fi.degree();
  if (m < 1) throw ConstantInput("Phi_n(x, t0) is constant");

  // shifts 0, 1, -1, ..., shift_range, -shift_range
  std::vector<Int> shifts{Int(0)};
  for (unsigned s = 1; s <= shift_range; ++s) {
    shifts.emplace_back(s);
    shifts.push_back(-Int(s));
  }
  struct Candidate {
    IntPoly g;
    Int shift;
    std::vector<Int> primes;  // of gcd of the non-leading coefficients
  };
  std::vector<Candidate> cands;
  std::vector<Int> all_primes;
  for (const auto& s : shifts) {
    IntPoly g = compose(fi, IntPoly::from_coeffs({s, Int(1)}));
    Int G = 0;
    for (int i = 0; i < m; ++i) G = gcd(G, g.coeff(static_cast<std::size_t>(i)));
    if (G == 0 || G == 1) continue;
    Candidate c{std::move(g), s, {}};
    try {
      c.primes = prime_support(G);
    } catch (const FactorizationIncomplete&) {
      continue;  // cannot enumerate candidates from this shift
    }
    for (const auto& p : c.primes) all_primes.push_back(p);
    cands.push_back(std::move(c));
  }
  std::sort(all_primes.begin(), all_primes.end(), IntLess{});
  all_primes.erase(std::unique(all_primes.begin(), all_primes.end()),
                   all_primes.end());
  // smallest prime first, then earliest shift
  for (const auto& p : all_primes) {
    for (const auto& c : cands) {
      if (std::find(c.primes.begin(), c.primes.end(), p) == c.primes.end())
        continue;
      if (mpz_divisible_p(c.g.lc().get_mpz_t(), p.get_mpz_t())) continue;
      const Int c0 = c.g.constant_term();
      if (c0 == 0) continue;  // p^2 divides 0
      if (valuation(c0, p) != 1) continue;
      return EisensteinCert{p, c.shift};
    }
  }
  return std::nullopt;
}

MonogenicCert monogenic_x2m2(const Int& t0, unsigned n) {
  if (n < 1) throw Error("tower level must be >= 1");
  check_degree_guard(2, n, kDefaultDegreeGuard);
  MonogenicCert out;
  out.t0 = t0;
  out.n = n;
  const unsigned long r4 = mpz_fdiv_ui(t0.get_mpz_t(), 4);
  out.t0_mod4_ok = (r4 == 0 || r4 == 1);
  if (!out.t0_mod4_ok)
    throw HypothesisFailed("t0 = 0 or 1 mod 4",
                           "t0 = " + std::to_string(r4) + " mod 4");
  out.plus2_squarefree = is_squarefree(t0 + 2);
  if (!out.plus2_squarefree)
    throw HypothesisFailed("t0 + 2 squarefree",
                           Int(t0 + 2).get_str() + " has a square factor");
  out.minus2_squarefree = is_squarefree(t0 - 2);
  if (!out.minus2_squarefree)
    throw HypothesisFailed("t0 - 2 squarefree",
                           Int(t0 - 2).get_str() + " has a square factor");
  Int D = 4 * (t0 + 2);
  for (unsigned j = 1; j < n; ++j)
    D = pow_int(Int(4), 1ul << j) * D * D * (2 - t0);
  out.disc = D;
  return out;
}

TameReport tame_conditions(const RatPoly& phi, const Rat& t0, unsigned n_max,
                           unsigned shift_range) {
  TameReport out;
  RamifiedSet S = ramified_set(phi, t0);
  out.ramified_primes = S.primes;
  for (unsigned n = 1; n <= n_max; ++n)
    out.levels.push_back({n, eisenstein_check(phi, t0, n, shift_range)});
  out.tame_evidence = true;
  for (const auto& p : prime_support(Int(phi.degree()))) {
    TamePrimeRow row;
    row.p = p;
    row.good_reduction = good_reduction(phi, p);
    row.wild_forced = row.good_reduction;  // pcf already established above
    for (unsigned n = 1; n <= n_max; ++n) {
      const Rat disc = disc_at(phi, n, t0);
      if (disc == 0)
        throw ZeroDiscriminant("disc Phi_n(x, t0) = 0 at level " +
                               std::to_string(n));
      row.v_disc.push_back(valuation(disc, p));
    }
    for (long v : row.v_disc)
      if (v != 0) out.tame_evidence = false;
    out.wild_primes.push_back(std::move(row));
  }
  return out;
}

}  // namespace polydyn
