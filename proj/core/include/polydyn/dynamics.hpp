#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "polydyn/poly.hpp"

namespace polydyn {

// phi'(x) = d * a_d * prod (x - r)^{m_r}; branch points are beta = phi(r)
// with M_beta the sum of m_r over critical points above beta.
struct CriticalPoint {
  Rat r;
  unsigned multiplicity = 1;  // m_r, so sum m_r = d - 1
  Rat value;                  // phi(r)
};
struct BranchPoint {
  Rat beta;
  unsigned multiplicity = 1;  // M_beta
};
struct CriticalData {
  std::vector<CriticalPoint> critical;  // ascending by r
  std::vector<BranchPoint> branch;      // ascending by beta
};

// Requires every critical point rational; throws NonRationalCritical
// otherwise and ZeroDerivative for constant phi.
CriticalData critical_data(const RatPoly& phi);

// Branch points recovered as the rational roots of disc_x(phi(x) - t) in t,
// which works even when the critical points themselves are irrational.
// complete means the root multiplicities account for all of deg - 1.
struct BranchData {
  std::vector<BranchPoint> branch;
  bool complete = false;
};
BranchData rational_branch_data(const RatPoly& phi);

struct OrbitShape {
  unsigned long preperiod = 0;  // tail length before the cycle
  unsigned long period = 1;
  std::vector<Rat> tail;
  std::vector<Rat> cycle;
};

struct Escape {
  enum class Kind { Archimedean, NegativeValuation } kind;
  unsigned long step = 0;  // orbit index at which the certificate fired
  Rat value;               // the orbit value witnessing escape
  Int prime;               // meaningful for NegativeValuation
  std::string detail;
};

struct OrbitLimits {
  unsigned long max_steps = 10'000;
  unsigned long max_bits = 1u << 16;  // numerator+denominator size guard
};

// Walks the forward orbit of x0 with exact arithmetic until it revisits a
// value (shape), proves divergence (escape), or exhausts the limits
// (Undecidable). Escape certificates:
//   - integer orbits of monic integer maps that leave [-B, B],
//     B = 1 + sum |a_j|, grow strictly thereafter;
//   - general maps: |x| >= max(1, (2 + sum_{j<d} |a_j|) / |a_d|) forces
//     |phi(x)| >= |x| + 1;
//   - v_p(x) negative enough that v_p(a_d x^d) < v_p(a_j x^j) for all j < d
//     and v_p(phi(x)) < v_p(x): valuations then decrease forever. Only primes
//     in the denominators of x0 and the coefficients can ever go negative.
std::variant<OrbitShape, Escape> orbit_shape(const RatPoly& phi, const Rat& x0,
                                             const OrbitLimits& limits = {});

enum class PcfKind { Pcf, NotPcf, Unknown };

struct CriticalOrbit {
  Rat start;  // critical or branch point
  OrbitShape shape;
};

struct PcfVerdict {
  PcfKind kind = PcfKind::Unknown;
  // Forward orbit closure of the branch points; empty when only a structural
  // certificate is available.
  std::vector<Rat> post_critical_set;
  std::vector<CriticalOrbit> orbits;
  bool from_branch_points = false;   // orbits started at branch points
  bool structural_certificate = false;  // via the fixed-critical identity
  std::optional<Escape> witness;     // for NotPcf
  std::optional<Rat> witness_start;
  std::string reason;                // for Unknown
};

struct PcfOptions {
  OrbitLimits orbit;
  // Adds a floating-point orbit scan to the Unknown reason; never upgrades
  // the verdict.
  bool float_heuristic = false;
};

PcfVerdict is_pcf(const RatPoly& phi, const PcfOptions& opts = {});

// a x^2 + b x + c is conjugate over Q to x^2 - r via x -> x/a then a shift;
// r = b^2/4 - b/2 - a c. The conjugation is replayed internally and the
// result asserted. Throws NotQuadratic when a = 0.
Rat quad_normal_form(const Rat& a, const Rat& b, const Rat& c);

// g_0 = 0, g_{n+1} = r g_n^2 - 1; r g_n is the nth iterate of x^2 - r at 0.
std::vector<Rat> g_sequence(const Rat& r, unsigned long count);

// x^d + (d/(d-1)) x, d >= 2: every critical point is simple and fixed.
RatPoly cfsr_normalized(unsigned d);

struct CfsrReport {
  bool identity_holds = false;        // d (phi - x) == x phi'
  bool critical_simple_fixed = false;
  bool critical_checked = false;      // false when criticals are irrational
};
CfsrReport cfsr_verify(const RatPoly& phi);

// Normalized Chebyshev: C_1 = x, C_2 = x^2 - 2, C_{d+1} = x C_d - C_{d-1};
// satisfies C_d(z + 1/z) = z^d + 1/z^d.
RatPoly chebyshev(unsigned d);

}  // namespace polydyn
