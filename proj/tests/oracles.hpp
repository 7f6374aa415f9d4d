#pragma once

// Reference implementations the tests compare against. Deliberately naive and
// structurally unrelated to the library code: the resultant goes through the
// Sylvester determinant over Q, root counting walks every residue.

#include <cstdint>
#include <utility>
#include <vector>

#include <polydyn/poly.hpp>

namespace oracles {

using polydyn::Rat;
using polydyn::RatPoly;

// det of the Sylvester matrix by rational Gaussian elimination.
inline Rat sylvester_resultant(const RatPoly& P, const RatPoly& Q) {
  const int m = P.degree(), n = Q.degree();
  if (m < 0 || n < 0) return Rat(0);
  const int N = m + n;
  if (N == 0) return Rat(1);
  std::vector<std::vector<Rat>> M(static_cast<std::size_t>(N),
                                  std::vector<Rat>(static_cast<std::size_t>(N), Rat(0)));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j)
      M[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] =
          P.coeff(static_cast<std::size_t>(m - j));
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j)
      M[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + j)] =
          Q.coeff(static_cast<std::size_t>(n - j));
  Rat det(1);
  for (int col = 0; col < N; ++col) {
    int piv = -1;
    for (int r = col; r < N; ++r)
      if (M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      std::swap(M[static_cast<std::size_t>(piv)], M[static_cast<std::size_t>(col)]);
      det = -det;
    }
    auto& pivot_row = M[static_cast<std::size_t>(col)];
    det *= pivot_row[static_cast<std::size_t>(col)];
    const Rat inv = 1 / pivot_row[static_cast<std::size_t>(col)];
    for (int r = col + 1; r < N; ++r) {
      auto& row = M[static_cast<std::size_t>(r)];
      if (row[static_cast<std::size_t>(col)] == 0) continue;
      const Rat f = row[static_cast<std::size_t>(col)] * inv;
      for (int j = col; j < N; ++j)
        row[static_cast<std::size_t>(j)] -= f * pivot_row[static_cast<std::size_t>(j)];
    }
  }
  return det;
}

inline Rat sylvester_discriminant(const RatPoly& P) {
  const int m = P.degree();
  Rat r = sylvester_resultant(P, polydyn::derivative(P)) / P.lc();
  if (((static_cast<long>(m) * (m - 1)) / 2) % 2 != 0) r = -r;
  return r;
}

// Root counting over F_p by evaluating at every residue; multiplicities via
// synthetic division. Coefficients constant-first, p below 2^31 so products
// fit in 64 bits.
struct RootTally {
  unsigned long with_multiplicity = 0;
  unsigned long distinct = 0;
};

inline std::uint64_t eval_mod(const std::vector<std::uint64_t>& f,
                              std::uint64_t x, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
  return acc;
}

inline RootTally brute_roots(std::vector<std::uint64_t> f, std::uint64_t p) {
  RootTally out;
  while (!f.empty() && f.back() == 0) f.pop_back();
  if (f.size() <= 1) return out;
  for (std::uint64_t a = 0; a < p; ++a) {
    if (eval_mod(f, a, p) != 0) continue;
    ++out.distinct;
    std::vector<std::uint64_t> g = f;
    while (g.size() > 1 && eval_mod(g, a, p) == 0) {
      // divide by (x - a): Horner quotient
      std::vector<std::uint64_t> q(g.size() - 1, 0);
      std::uint64_t carry = 0;
      for (std::size_t i = g.size(); i-- > 1;) {
        carry = (carry * a + g[i]) % p;
        q[i - 1] = carry;
      }
      g = std::move(q);
      ++out.with_multiplicity;
    }
  }
  return out;
}

// F_{p^2} arithmetic on digit pairs, modulus y^2 + c1 y + c0 supplied by the
// caller. Multiplication reduces y^2 by hand.
struct QuadElem {
  std::uint64_t a0 = 0, a1 = 0;
};

inline QuadElem quad_mul(const QuadElem& x, const QuadElem& y, std::uint64_t c0,
                         std::uint64_t c1, std::uint64_t p) {
  const std::uint64_t t0 = (x.a0 * y.a0) % p;
  const std::uint64_t t1 = (x.a0 * y.a1 + x.a1 * y.a0) % p;
  const std::uint64_t t2 = (x.a1 * y.a1) % p;
  // y^2 = -c1 y - c0
  QuadElem r;
  r.a0 = (t0 + t2 * ((p - c0) % p)) % p;
  r.a1 = (t1 + t2 * ((p - c1) % p)) % p;
  return r;
}

}  // namespace oracles
