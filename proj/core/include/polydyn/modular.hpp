#pragma once

#include <cstdint>
#include <vector>

#include "polydyn/poly.hpp"

namespace polydyn::modp {

// Word-sized prime arithmetic; moduli must stay below 2^62 so products fit
// in __int128.
inline constexpr std::uint64_t kWordPrimeLimit = 1ull << 62;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, const Int& e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);
std::uint64_t reduce_int(const Int& v, std::uint64_t p);
std::uint64_t reduce_rat(const Rat& v, std::uint64_t p);  // denominator must be a unit

// Dense polynomial over F_p, constant first, trimmed, coefficients < p.
using FpPoly = std::vector<std::uint64_t>;

int degree(const FpPoly& f);
void trim(FpPoly& f);
FpPoly reduce_poly_mod(const IntPoly& f, std::uint64_t p);
FpPoly add(const FpPoly& a, const FpPoly& b, std::uint64_t p);
FpPoly sub(const FpPoly& a, const FpPoly& b, std::uint64_t p);
FpPoly mul(const FpPoly& a, const FpPoly& b, std::uint64_t p);
FpPoly rem(FpPoly a, const FpPoly& b, std::uint64_t p);
struct FpDivMod {
  FpPoly quot, rem;
};
FpDivMod divmod(FpPoly a, const FpPoly& b, std::uint64_t p);
FpPoly monic(FpPoly f, std::uint64_t p);
FpPoly gcd(FpPoly a, FpPoly b, std::uint64_t p);
FpPoly compose(const FpPoly& outer, const FpPoly& inner, std::uint64_t p);
FpPoly powmod_poly(FpPoly base, const Int& e, const FpPoly& mod, std::uint64_t p);
std::uint64_t eval(const FpPoly& f, std::uint64_t x, std::uint64_t p);

// Sign-tracked Euclidean remainder sequence.
std::uint64_t resultant(FpPoly a, FpPoly b, std::uint64_t p);

// Monic irreducibility over F_p (degree >= 1).
bool is_irreducible(const FpPoly& f, std::uint64_t p);

// Fixed pool of word primes just under 2^62 for CRT reconstruction; the pool
// grows on demand but index i always names the same prime.
std::uint64_t crt_prime(std::size_t i);

}  // namespace polydyn::modp
