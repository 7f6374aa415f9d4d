#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polydyn/dynamics.hpp"
#include "polydyn/poly.hpp"

namespace polydyn {

// D_n(t) = disc_x Phi_n(x,t), Phi_n = phi^n(x) - t. With m = d^n the level
// step is
//   D_{n+1} = A^{d^n} a_d^{(m-1)(dm+1)} D_n^d prod_r Phi_{n+1}(r, t)^{m_r},
//   A = (-1)^{d(d-1)/2} d^d a_d^{d-1};
// the a_d factor is invisible for monic phi but not optional: dropping it
// breaks recursive/direct agreement whenever a_d != 1. The trace records the
// factored form A^a_exponent a_d^lc_exponent prod base^exponent so ramified
// primes can be read off without refactoring D_n.
struct DiscFactor {
  unsigned level = 0;     // which iterate contributed the factor
  RatPoly base;           // (phi^level(r) - t) or the aggregated level product
  unsigned long exponent = 1;
};

enum class DiscRoute { Recursive, Direct };

struct DiscPoly {
  RatPoly value;  // D_n(t)
  unsigned level = 1;
  DiscRoute route = DiscRoute::Recursive;
  Rat A;
  Rat lc;                         // a_d, the base of lc_exponent
  unsigned long a_exponent = 0;   // exponent of A in the trace form
  Int lc_exponent = 0;            // exponent of a_d in the trace form
  std::vector<DiscFactor> trace;  // empty for the direct route
};

DiscPoly disc_tower_recursive(const RatPoly& phi, unsigned n,
                              unsigned long guard = kDefaultDegreeGuard);
// Independent route: build Phi_n and take one big discriminant.
DiscPoly disc_tower_direct(const RatPoly& phi, unsigned n,
                           unsigned long guard = kDefaultDegreeGuard);

// disc_x(phi^n(x) - t0); may legitimately be zero when t0 is a branch value
// of the nth iterate.
Rat disc_at(const RatPoly& phi, unsigned n, const Rat& t0,
            unsigned long guard = kDefaultDegreeGuard);

// Finite set S of rational primes that can ramify anywhere in the tower over
// t0: divisors of d, of a_d (numerator or denominator), and of any
// numerator/denominator of t0 - nu for nu in the post-critical set. The real
// place always belongs to S.
struct RamifiedSet {
  std::vector<Int> primes;  // ascending
  bool includes_real_place = true;
  std::vector<Rat> post_critical_set;
};

struct RamifiedOptions {
  bool include_critical_points = false;  // enlarge with the critical points
  PcfOptions pcf;
};

// Requires a post-critically finite phi with rational post-critical data and
// t0 outside it; throws NotPcf / PostCriticalT0 / Undecidable accordingly.
RamifiedSet ramified_set(const RatPoly& phi, const Rat& t0,
                         const RamifiedOptions& opts = {});

// All coefficient valuations >= 0 and v_p(lc) = 0.
bool good_reduction(const RatPoly& phi, const Int& p);

// Wild ramification floor at p | d: v_p(disc Phi_n(x, t0)) >= n d^n under
// good reduction, post-critical finiteness, and integral t0.
struct WildReport {
  Int p;
  Rat t0;
  unsigned n = 1;
  unsigned d = 2;
  Rat disc;
  long v_disc = 0;
  Int bound;          // n d^n
  bool satisfied = false;
  long ord_p_phi_prime = 0;  // min coefficient valuation of phi'
};
WildReport wild_report(const RatPoly& phi, const Int& p, const Rat& t0,
                       unsigned n);

// rd_n = |disc Phi_n(x,t0)|^(1/d^n) to 15 significant digits.
struct RootDiscRow {
  unsigned n = 1;
  Rat disc;
  std::string root_disc;
};
std::vector<RootDiscRow> root_disc_sequence(const RatPoly& phi, const Rat& t0,
                                            unsigned n_max);

// Eisenstein certificate for Phi_n(x, t0) after a shift x -> x + s; shifts
// are searched in the order 0, 1, -1, 2, -2, ..., and for each prime
// candidate the smallest prime wins before the shift order does.
struct EisensteinCert {
  Int p;
  Int shift;
};
std::optional<EisensteinCert> eisenstein_check(const RatPoly& phi,
                                               const Rat& t0, unsigned n,
                                               unsigned shift_range = 3);

// phi = x^2 - 2, t0 = 0 or 1 mod 4 with t0 +/- 2 squarefree: D_n via
// D_1 = 4(t0 + 2), D_{j+1} = 4^{2^j} D_j^2 (2 - t0).
struct MonogenicCert {
  Int t0;
  unsigned n = 1;
  Int disc;  // D_n
  bool t0_mod4_ok = false;
  bool plus2_squarefree = false;
  bool minus2_squarefree = false;
};
MonogenicCert monogenic_x2m2(const Int& t0, unsigned n);

// Everything the tame/wild bookkeeping needs in one sweep: S, Eisenstein
// certificates per level, and v_p(disc) for the wild primes p | d. Good
// reduction at p | d forces wild ramification for post-critically finite
// maps, so tame_possible goes false there.
struct TamePrimeRow {
  Int p;
  bool good_reduction = false;
  bool wild_forced = false;
  std::vector<long> v_disc;  // levels 1..n_max
};
struct TameLevelRow {
  unsigned n = 1;
  std::optional<EisensteinCert> eisenstein;
};
struct TameReport {
  std::vector<Int> ramified_primes;
  std::vector<TameLevelRow> levels;
  std::vector<TamePrimeRow> wild_primes;
  bool tame_evidence = false;  // all wild-prime valuations vanish
};
TameReport tame_conditions(const RatPoly& phi, const Rat& t0, unsigned n_max,
                           unsigned shift_range = 3);

}  // namespace polydyn
