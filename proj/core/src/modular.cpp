#include "polydyn/modular.hpp"

#include <mutex>

#include "polydyn/errors.hpp"
#include "polydyn/intfactor.hpp"

namespace polydyn::modp {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) acc = mulmod(acc, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return acc;
}

std::uint64_t powmod(std::uint64_t a, const Int& e, std::uint64_t p) {
  if (e < 0) throw InternalError("powmod with negative exponent");
  std::uint64_t acc = 1 % p;
  a %= p;
  for (std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2), i = bits; i-- > 0;) {
    acc = mulmod(acc, acc, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = mulmod(acc, a, p);
  }
  return e == 0 ? 1 % p : acc;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw InternalError("inverse of zero mod " + std::to_string(p));
  // extended Euclid on signed words; p < 2^62 keeps everything in range
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt; nt = tmp;
    tmp = r - q * nr;
    r = nr; nr = tmp;
  }
  if (r != 1) throw InternalError("inverse does not exist mod " + std::to_string(p));
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_int(const Int& v, std::uint64_t p) {
  Int r = v % Int(p);
  if (r < 0) r += p;
  return r.get_ui();
}

std::uint64_t reduce_rat(const Rat& v, std::uint64_t p) {
  std::uint64_t den = reduce_int(Int(v.get_den()), p);
  if (den == 0)
    throw BadReduction("denominator divisible by " + std::to_string(p));
  return mulmod(reduce_int(Int(v.get_num()), p), invmod(den, p), p);
}

int degree(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

void trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly reduce_poly_mod(const IntPoly& f, std::uint64_t p) {
  FpPoly out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(reduce_int(c, p));
  trim(out);
  return out;
}

FpPoly add(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  trim(r);
  return r;
}

FpPoly sub(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  trim(r);
  return r;
}

FpPoly mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % p;
  }
  trim(r);
  return r;
}

FpPoly rem(FpPoly a, const FpPoly& b, std::uint64_t p) {
  if (b.empty()) throw InternalError("FpPoly remainder by zero");
  const int db = degree(b);
  const std::uint64_t inv_lc = invmod(b.back(), p);
  while (degree(a) >= db) {
    const int da = degree(a);
    const std::uint64_t c = mulmod(a.back(), inv_lc, p);
    for (int j = 0; j <= db; ++j)
      a[da - db + j] = (a[da - db + j] + p - mulmod(c, b[j], p)) % p;
    trim(a);
  }
  return a;
}

FpDivMod divmod(FpPoly a, const FpPoly& b, std::uint64_t p) {
  if (b.empty()) throw InternalError("FpPoly division by zero");
  const int db = degree(b);
  const std::uint64_t inv_lc = invmod(b.back(), p);
  FpPoly q;
  if (degree(a) >= db) q.assign(static_cast<std::size_t>(degree(a) - db) + 1, 0);
  while (degree(a) >= db) {
    const int da = degree(a);
    const std::uint64_t c = mulmod(a.back(), inv_lc, p);
    q[da - db] = c;
    for (int j = 0; j <= db; ++j)
      a[da - db + j] = (a[da - db + j] + p - mulmod(c, b[j], p)) % p;
    trim(a);
  }
  trim(q);
  return {std::move(q), std::move(a)};
}

FpPoly monic(FpPoly f, std::uint64_t p) {
  if (f.empty()) return f;
  const std::uint64_t inv = invmod(f.back(), p);
  for (auto& c : f) c = mulmod(c, inv, p);
  return f;
}

FpPoly gcd(FpPoly a, FpPoly b, std::uint64_t p) {
  while (!b.empty()) {
    FpPoly r = rem(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a), p);
}

FpPoly compose(const FpPoly& outer, const FpPoly& inner, std::uint64_t p) {
  FpPoly acc;
  for (std::size_t i = outer.size(); i-- > 0;) {
    acc = mul(acc, inner, p);
    if (outer[i]) {
      if (acc.empty()) acc.push_back(outer[i]);
      else acc[0] = (acc[0] + outer[i]) % p;
    }
    trim(acc);
  }
  return acc;
}

FpPoly powmod_poly(FpPoly base, const Int& e, const FpPoly& mod,
                   std::uint64_t p) {
  FpPoly acc{1 % p};
  trim(acc);
  base = rem(std::move(base), mod, p);
  for (std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2), i = bits; i-- > 0;) {
    acc = rem(mul(acc, acc, p), mod, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = rem(mul(acc, base, p), mod, p);
  }
  return e == 0 ? FpPoly{1 % p} : acc;
}

std::uint64_t eval(const FpPoly& f, std::uint64_t x, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = (mulmod(acc, x, p) + f[i]) % p;
  return acc;
}

std::uint64_t resultant(FpPoly a, FpPoly b, std::uint64_t p) {
  if (a.empty() || b.empty()) return 0;
  std::uint64_t res = 1 % p;
  bool negate = false;
  while (true) {
    if (degree(b) == 0) {
      res = mulmod(res, powmod(b[0], static_cast<std::uint64_t>(degree(a)), p), p);
      break;
    }
    if (degree(a) < degree(b)) {
      if ((static_cast<std::uint64_t>(degree(a)) *
           static_cast<std::uint64_t>(degree(b))) & 1)
        negate = !negate;
      std::swap(a, b);
    }
    FpPoly r = rem(a, b, p);
    if (r.empty()) return 0;
    // Res(a,b) = lc(b)^(deg a - deg r) * (-1)^(deg a * deg b) * Res(b, r)
    res = mulmod(res,
                 powmod(b.back(),
                        static_cast<std::uint64_t>(degree(a) - degree(r)), p),
                 p);
    if ((static_cast<std::uint64_t>(degree(a)) *
         static_cast<std::uint64_t>(degree(b))) & 1)
      negate = !negate;
    a = std::move(b);
    b = std::move(r);
  }
  if (negate) res = (p - res) % p;
  return res;
}

bool is_irreducible(const FpPoly& f, std::uint64_t p) {
  const int k = degree(f);
  if (k < 1) return false;
  if (k == 1) return true;
  FpPoly m = monic(f, p);
  // x^(p^j) mod m by j successive p-th powers
  auto frob_power = [&](unsigned j) {
    FpPoly h{0, 1};
    trim(h);
    for (unsigned i = 0; i < j; ++i)
      h = powmod_poly(std::move(h), Int(static_cast<unsigned long>(p)), m, p);
    return h;
  };
  FpPoly xq = frob_power(static_cast<unsigned>(k));
  FpPoly x{0, 1};
  if (!sub(xq, x, p).empty()) return false;
  for (auto& [ell, e] : factorize(Int(k))) {
    unsigned j = static_cast<unsigned>(k) / static_cast<unsigned>(ell.get_ui());
    FpPoly diff = sub(frob_power(j), x, p);
    FpPoly g = gcd(m, diff, p);
    if (degree(g) != 0) return false;
  }
  return true;
}

std::uint64_t crt_prime(std::size_t i) {
  static std::vector<std::uint64_t> pool;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (pool.empty()) pool.reserve(64);
  while (pool.size() <= i) {
    std::uint64_t candidate =
        pool.empty() ? (kWordPrimeLimit - 1) : pool.back() - 2;
    while (!is_prime(Int(candidate))) candidate -= 2;
    pool.push_back(candidate);
  }
  return pool[i];
}

}  // namespace polydyn::modp
