#pragma once

#include <map>
#include <vector>

#include "polydyn/errors.hpp"
#include "polydyn/rational.hpp"

namespace polydyn {

// Deterministic Miller-Rabin over the fixed base set {2,...,37}; proven
// correct below 3.3e24 and used as-is above that range.
bool is_prime(const Int& n);

struct FactorLimits {
  // Total rho iterations across retries before giving up.
  unsigned long rho_iterations = 10'000'000;
  unsigned long trial_bound = 1'000'000;
};

// Prime factorization of |n|, n nonzero. Throws FactorizationIncomplete when
// the rho budget runs out on a stubborn cofactor.
std::map<Int, unsigned, IntLess> factorize(const Int& n,
                                           const FactorLimits& limits = {});

bool is_squarefree(const Int& n, const FactorLimits& limits = {});

// Sorted distinct primes of |n| (n nonzero); of numerator and denominator for
// the rational overload.
std::vector<Int> prime_support(const Int& n, const FactorLimits& limits = {});
std::vector<Int> prime_support(const Rat& x, const FactorLimits& limits = {});

// All positive divisors, ascending. Guards against combinatorial blowup.
std::vector<Int> divisors(const Int& n, std::size_t max_count = 1u << 20,
                          const FactorLimits& limits = {});

}  // namespace polydyn
