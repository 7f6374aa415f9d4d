#include "polydyn/intfactor.hpp"

#include <algorithm>

namespace polydyn {

namespace {

const unsigned long kMrBases[] = {2,  3,  5,  7,  11, 13,
                                  17, 19, 23, 29, 31, 37};

bool mr_witness(const Int& n, unsigned long a, const Int& d, unsigned long s) {
  Int ar = a;
  if (ar >= n) ar %= n;
  if (ar == 0) return false;
  Int x;
  mpz_powm(x.get_mpz_t(), ar.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return false;
  for (unsigned long i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;
}

Int rho_brent(const Int& n, unsigned long& budget) {
  // n odd composite, not a perfect power.
  for (unsigned long c = 1;; ++c) {
    Int y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        unsigned long lim = std::min<unsigned long>(128, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = (q * abs(x - y)) % n;
        }
        g = gcd(q, n);
        k += lim;
        if (lim >= budget)
          throw FactorizationIncomplete("rho budget exhausted on " +
                                        n.get_str());
        budget -= lim;
      }
      r *= 2;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        g = gcd(Int(abs(x - ys)), n);
        if (budget-- == 0)
          throw FactorizationIncomplete("rho backtrack budget exhausted on " +
                                        n.get_str());
      }
    }
    if (g != n) return g;
  }
}

void factor_into(Int n, std::map<Int, unsigned, IntLess>& out,
                 unsigned long& budget) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    // Find the smallest exponent with an exact root.
    for (unsigned long e = 2; e <= mpz_sizeinbase(n.get_mpz_t(), 2); ++e) {
      Int root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) {
        std::map<Int, unsigned, IntLess> sub;
        factor_into(root, sub, budget);
        for (auto& [p, m] : sub) out[p] += m * static_cast<unsigned>(e);
        return;
      }
    }
  }
  Int g = rho_brent(n, budget);
  factor_into(g, out, budget);
  factor_into(n / g, out, budget);
}

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (unsigned long b : kMrBases) {
    if (n == b) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return false;
  }
  Int d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  for (unsigned long b : kMrBases)
    if (mr_witness(n, b, d, s)) return false;
  return true;
}

std::map<Int, unsigned, IntLess> factorize(const Int& n,
                                           const FactorLimits& limits) {
  if (n == 0) throw InternalError("factorize(0)");
  std::map<Int, unsigned, IntLess> out;
  Int m = abs(n);
  if (m == 1) return out;
  for (unsigned long p = 2; p <= limits.trial_bound && m > 1;
       p += (p == 2 ? 1 : 2)) {
    if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) continue;
    unsigned e = 0;
    do {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    } while (mpz_divisible_ui_p(m.get_mpz_t(), p));
    out[Int(p)] = e;
    // Cut the scan once p^2 passes the cofactor.
    if (m > 1 && Int(p) * p > m) break;
  }
  if (m > 1) {
    if (Int(limits.trial_bound) * limits.trial_bound >= m) {
      ++out[m];  // cofactor below the trial square is prime
    } else {
      unsigned long budget = limits.rho_iterations;
      factor_into(m, out, budget);
    }
  }
  return out;
}

bool is_squarefree(const Int& n, const FactorLimits& limits) {
  if (n == 0) return false;
  if (mpz_perfect_square_p(Int(abs(n)).get_mpz_t()) && abs(n) != 1) return false;
  for (auto& [p, e] : factorize(n, limits))
    if (e > 1) return false;
  return true;
}

std::vector<Int> prime_support(const Int& n, const FactorLimits& limits) {
  std::vector<Int> out;
  for (auto& [p, e] : factorize(n, limits)) out.push_back(p);
  return out;
}

std::vector<Int> prime_support(const Rat& x, const FactorLimits& limits) {
  if (x == 0) throw InternalError("prime_support(0)");
  std::vector<Int> out = prime_support(Int(x.get_num()), limits);
  for (auto& p : prime_support(Int(x.get_den()), limits)) out.push_back(p);
  std::sort(out.begin(), out.end(), IntLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Int> divisors(const Int& n, std::size_t max_count,
                          const FactorLimits& limits) {
  std::vector<Int> out{1};
  for (auto& [p, e] : factorize(n, limits)) {
    std::size_t base = out.size();
    if (base * (e + 1) > max_count)
      throw SizeGuardExceeded("divisor count of " + n.get_str() +
                              " exceeds guard");
    Int pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end(), IntLess{});
  return out;
}

}  // namespace polydyn
