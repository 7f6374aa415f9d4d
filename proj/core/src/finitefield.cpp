#include "polydyn/finitefield.hpp"

#include <algorithm>

#include "polydyn/intfactor.hpp"

namespace polydyn {

namespace {

constexpr unsigned long kModulusScanGuard = 10'000'000;

// Multiply two coefficient slots (k words each) and reduce by the field
// modulus; scratch must hold 2k-1 words.
void elem_mul_into(const FieldCtx& F, const std::uint64_t* a,
                   const std::uint64_t* b, std::uint64_t* out,
                   std::vector<std::uint64_t>& scratch) {
  const unsigned k = F.k;
  const std::uint64_t p = F.pu;
  scratch.assign(2 * k - 1, 0);
  for (unsigned i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < k; ++j)
      scratch[i + j] =
          (scratch[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % p;
  }
  // modulus is monic of degree k
  for (unsigned i = 2 * k - 1; i-- > k;) {
    const std::uint64_t c = scratch[i];
    if (c == 0) continue;
    scratch[i] = 0;
    for (unsigned j = 0; j < k; ++j)
      scratch[i - k + j] =
          (scratch[i - k + j] + p - modp::mulmod(c, F.modulus[j], p)) % p;
  }
  for (unsigned j = 0; j < k; ++j) out[j] = scratch[j];
}

bool slot_zero(const std::uint64_t* a, unsigned k) {
  for (unsigned i = 0; i < k; ++i)
    if (a[i]) return false;
  return true;
}

}  // namespace

FieldPtr make_field(const Int& p, unsigned k) {
  if (!is_prime(p)) throw NotPrime(p.get_str() + " is not prime");
  if (k < 1) throw SizeGuardExceeded("extension degree must be >= 1");
  if (mpz_sizeinbase(p.get_mpz_t(), 2) > 61)
    throw SizeGuardExceeded("characteristic too large for word arithmetic");
  auto F = std::make_shared<FieldCtx>();
  F->p = p;
  F->k = k;
  F->pu = p.get_ui();
  F->q = pow_int(p, k);
  F->q_fits = mpz_sizeinbase(F->q.get_mpz_t(), 2) <= 61;
  F->qu = F->q_fits ? F->q.get_ui() : 0;
  if (k == 1) {
    F->modulus = {0, 1};
    return F;
  }
  // lexicographically smallest (c_{k-1}, ..., c_0) = numeric order of the
  // coefficient value sum c_i p^i
  for (unsigned long v = 0;; ++v) {
    if (v >= kModulusScanGuard)
      throw InternalError("no irreducible modulus found in scan range");
    modp::FpPoly cand(k + 1, 0);
    cand[k] = 1;
    unsigned long rest = v;
    for (unsigned i = 0; i < k && rest; ++i) {
      cand[i] = rest % F->pu;
      rest /= F->pu;
    }
    if (rest) throw InternalError("modulus scan overflow");
    if (modp::is_irreducible(cand, F->pu)) {
      F->modulus = std::move(cand);
      return F;
    }
  }
}

FFElem ff_zero(const FieldCtx& F) { return FFElem{std::vector<std::uint64_t>(F.k, 0)}; }

FFElem ff_from_residue(const FieldCtx& F, const Int& r) {
  FFElem e = ff_zero(F);
  e.a[0] = modp::reduce_int(r, F.pu);
  return e;
}

FFElem ff_from_index(const FieldCtx& F, std::uint64_t index) {
  FFElem e = ff_zero(F);
  for (unsigned i = 0; i < F.k; ++i) {
    e.a[i] = index % F.pu;
    index /= F.pu;
  }
  if (index) throw InternalError("element index out of range");
  return e;
}

std::uint64_t ff_index(const FieldCtx& F, const FFElem& a) {
  std::uint64_t idx = 0;
  for (unsigned i = F.k; i-- > 0;) idx = idx * F.pu + a.a[i];
  return idx;
}

std::string ff_name(const FieldCtx& F, const FFElem& a) {
  std::string out;
  for (unsigned i = F.k; i-- > 0;) {
    out += std::to_string(a.a[i]);
    if (i) out += ",";
  }
  return out;
}

bool ff_equal(const FFElem& a, const FFElem& b) { return a.a == b.a; }

FFElem ff_add(const FieldCtx& F, const FFElem& a, const FFElem& b) {
  FFElem r = a;
  for (unsigned i = 0; i < F.k; ++i) r.a[i] = (r.a[i] + b.a[i]) % F.pu;
  return r;
}

FFElem ff_sub(const FieldCtx& F, const FFElem& a, const FFElem& b) {
  FFElem r = a;
  for (unsigned i = 0; i < F.k; ++i) r.a[i] = (r.a[i] + F.pu - b.a[i]) % F.pu;
  return r;
}

FFElem ff_mul(const FieldCtx& F, const FFElem& a, const FFElem& b) {
  FFElem r = ff_zero(F);
  std::vector<std::uint64_t> scratch;
  elem_mul_into(F, a.a.data(), b.a.data(), r.a.data(), scratch);
  return r;
}

FFElem ff_inv(const FieldCtx& F, const FFElem& a) {
  modp::FpPoly r0 = F.modulus, r1 = a.a;
  modp::trim(r1);
  if (r1.empty()) throw InternalError("inverse of zero field element");
  modp::FpPoly t0, t1{1};
  while (!r1.empty()) {
    auto [q, r] = modp::divmod(std::move(r0), r1, F.pu);
    r0 = std::move(r1);
    r1 = std::move(r);
    modp::FpPoly tn = modp::sub(t0, modp::mul(q, t1, F.pu), F.pu);
    t0 = std::move(t1);
    t1 = std::move(tn);
  }
  if (modp::degree(r0) != 0) throw InternalError("field inverse gcd not constant");
  const std::uint64_t scale = modp::invmod(r0[0], F.pu);
  FFElem out = ff_zero(F);
  for (std::size_t i = 0; i < t0.size(); ++i)
    out.a[i] = modp::mulmod(t0[i], scale, F.pu);
  return out;
}

FFElem ff_pow(const FieldCtx& F, FFElem a, const Int& e) {
  if (e < 0) return ff_pow(F, ff_inv(F, a), Int(-e));
  FFElem acc = ff_from_residue(F, 1);
  for (std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2), i = bits; i-- > 0;) {
    acc = ff_mul(F, acc, acc);
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = ff_mul(F, acc, a);
  }
  return e == 0 ? ff_from_residue(F, 1) : acc;
}

FFElem ff_frobenius(const FieldCtx& F, const FFElem& a) {
  return ff_pow(F, a, F.p);
}

unsigned element_degree(const FieldCtx& F, const FFElem& a) {
  FFElem b = ff_frobenius(F, a);
  unsigned j = 1;
  while (!ff_equal(b, a)) {
    b = ff_frobenius(F, b);
    ++j;
    if (j > F.k) throw InternalError("Frobenius orbit exceeded field degree");
  }
  if (F.k % j != 0) throw InternalError("element degree does not divide k");
  return j;
}

PrimePoly reduce_poly(const RatPoly& f, const Int& p) {
  if (mpz_sizeinbase(p.get_mpz_t(), 2) > 61)
    throw SizeGuardExceeded("characteristic too large for word arithmetic");
  if (p < 2) throw NotPrime(p.get_str() + " is not prime");
  PrimePoly out;
  out.p = p.get_ui();
  out.c.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.c.push_back(modp::reduce_rat(c, out.p));
  modp::trim(out.c);
  return out;
}

FFPoly ffp_zero(FieldPtr F) { return FFPoly{std::move(F), {}}; }

FFPoly ffp_x(FieldPtr F) {
  FFPoly f{std::move(F), {}};
  f.w.assign(2 * f.F->k, 0);
  f.w[f.F->k] = 1;
  return f;
}

namespace {

void ffp_trim(FFPoly& f) {
  const unsigned k = f.F->k;
  while (!f.w.empty() && slot_zero(f.w.data() + f.w.size() - k, k))
    f.w.resize(f.w.size() - k);
}

}  // namespace

FFPoly ffp_from_coeffs(FieldPtr F, const std::vector<FFElem>& coeffs) {
  FFPoly f{std::move(F), {}};
  f.w.reserve(coeffs.size() * f.F->k);
  for (const auto& c : coeffs) f.w.insert(f.w.end(), c.a.begin(), c.a.end());
  ffp_trim(f);
  return f;
}

FFPoly ffp_from_prime(FieldPtr F, const PrimePoly& g) {
  if (F->pu != g.p) throw InternalError("characteristic mismatch");
  FFPoly f{std::move(F), {}};
  const unsigned k = f.F->k;
  f.w.assign(g.c.size() * k, 0);
  for (std::size_t i = 0; i < g.c.size(); ++i) f.w[i * k] = g.c[i];
  ffp_trim(f);
  return f;
}

int ffp_degree(const FFPoly& f) {
  return static_cast<int>(f.coeff_count()) - 1;
}

FFElem ffp_coeff(const FFPoly& f, std::size_t i) {
  const unsigned k = f.F->k;
  FFElem e{std::vector<std::uint64_t>(k, 0)};
  if (i < f.coeff_count())
    std::copy_n(f.w.begin() + static_cast<long>(i * k), k, e.a.begin());
  return e;
}

FFPoly ffp_add(const FFPoly& a, const FFPoly& b) {
  const std::uint64_t p = a.F->pu;
  FFPoly r = a;
  if (r.w.size() < b.w.size()) r.w.resize(b.w.size(), 0);
  for (std::size_t i = 0; i < b.w.size(); ++i) r.w[i] = (r.w[i] + b.w[i]) % p;
  ffp_trim(r);
  return r;
}

FFPoly ffp_sub(const FFPoly& a, const FFPoly& b) {
  const std::uint64_t p = a.F->pu;
  FFPoly r = a;
  if (r.w.size() < b.w.size()) r.w.resize(b.w.size(), 0);
  for (std::size_t i = 0; i < b.w.size(); ++i) r.w[i] = (r.w[i] + p - b.w[i]) % p;
  ffp_trim(r);
  return r;
}

FFPoly ffp_mul(const FFPoly& a, const FFPoly& b) {
  const unsigned k = a.F->k;
  if (a.w.empty() || b.w.empty()) return ffp_zero(a.F);
  const std::size_t na = a.coeff_count(), nb = b.coeff_count();
  FFPoly r{a.F, std::vector<std::uint64_t>((na + nb - 1) * k, 0)};
  std::vector<std::uint64_t> scratch, prod(k);
  const std::uint64_t p = a.F->pu;
  for (std::size_t i = 0; i < na; ++i) {
    if (slot_zero(a.w.data() + i * k, k)) continue;
    for (std::size_t j = 0; j < nb; ++j) {
      if (slot_zero(b.w.data() + j * k, k)) continue;
      elem_mul_into(*a.F, a.w.data() + i * k, b.w.data() + j * k, prod.data(),
                    scratch);
      std::uint64_t* slot = r.w.data() + (i + j) * k;
      for (unsigned t = 0; t < k; ++t) slot[t] = (slot[t] + prod[t]) % p;
    }
  }
  ffp_trim(r);
  return r;
}

FFPoly ffp_monic(FFPoly f) {
  if (f.w.empty()) return f;
  const unsigned k = f.F->k;
  FFElem lead = ffp_coeff(f, f.coeff_count() - 1);
  if (k == 1 ? lead.a[0] == 1 : false) return f;
  FFElem inv = ff_inv(*f.F, lead);
  std::vector<std::uint64_t> scratch, prod(k);
  for (std::size_t i = 0; i < f.coeff_count(); ++i) {
    elem_mul_into(*f.F, f.w.data() + i * k, inv.a.data(), prod.data(), scratch);
    std::copy_n(prod.data(), k, f.w.data() + i * k);
  }
  return f;
}

FFPoly ffp_rem(FFPoly a, const FFPoly& b) {
  if (b.w.empty()) throw InternalError("FFPoly remainder by zero");
  const unsigned k = a.F->k;
  const std::uint64_t p = a.F->pu;
  const int db = ffp_degree(b);
  const FFElem inv_lc = ff_inv(*b.F, ffp_coeff(b, static_cast<std::size_t>(db)));
  std::vector<std::uint64_t> scratch, c(k), prod(k);
  while (ffp_degree(a) >= db) {
    const int da = ffp_degree(a);
    elem_mul_into(*a.F, a.w.data() + static_cast<std::size_t>(da) * k,
                  inv_lc.a.data(), c.data(), scratch);
    for (int j = 0; j <= db; ++j) {
      elem_mul_into(*a.F, c.data(), b.w.data() + static_cast<std::size_t>(j) * k,
                    prod.data(), scratch);
      std::uint64_t* slot = a.w.data() + static_cast<std::size_t>(da - db + j) * k;
      for (unsigned t = 0; t < k; ++t) slot[t] = (slot[t] + p - prod[t]) % p;
    }
    ffp_trim(a);
  }
  return a;
}

FFPoly ffp_quot(const FFPoly& a, const FFPoly& b) {
  if (b.w.empty()) throw InternalError("FFPoly division by zero");
  const unsigned k = a.F->k;
  const int db = ffp_degree(b);
  FFPoly r = a;
  if (ffp_degree(r) < db) return ffp_zero(a.F);
  FFPoly q{a.F, std::vector<std::uint64_t>(
                    static_cast<std::size_t>(ffp_degree(r) - db + 1) * k, 0)};
  const FFElem inv_lc = ff_inv(*b.F, ffp_coeff(b, static_cast<std::size_t>(db)));
  std::vector<std::uint64_t> scratch, c(k), prod(k);
  const std::uint64_t p = a.F->pu;
  while (ffp_degree(r) >= db) {
    const int da = ffp_degree(r);
    elem_mul_into(*a.F, r.w.data() + static_cast<std::size_t>(da) * k,
                  inv_lc.a.data(), c.data(), scratch);
    std::copy_n(c.data(), k, q.w.data() + static_cast<std::size_t>(da - db) * k);
    for (int j = 0; j <= db; ++j) {
      elem_mul_into(*a.F, c.data(), b.w.data() + static_cast<std::size_t>(j) * k,
                    prod.data(), scratch);
      std::uint64_t* slot = r.w.data() + static_cast<std::size_t>(da - db + j) * k;
      for (unsigned t = 0; t < k; ++t) slot[t] = (slot[t] + p - prod[t]) % p;
    }
    ffp_trim(r);
  }
  ffp_trim(q);
  return q;
}

FFPoly ffp_gcd(FFPoly a, FFPoly b) {
  while (!b.w.empty()) {
    FFPoly r = ffp_rem(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return ffp_monic(std::move(a));
}

FFPoly ffp_derivative(const FFPoly& f) {
  if (ffp_degree(f) < 1) return ffp_zero(f.F);
  const unsigned k = f.F->k;
  const std::uint64_t p = f.F->pu;
  FFPoly r{f.F, std::vector<std::uint64_t>((f.coeff_count() - 1) * k, 0)};
  for (std::size_t i = 1; i < f.coeff_count(); ++i) {
    const std::uint64_t scale = static_cast<std::uint64_t>(i % p);
    for (unsigned t = 0; t < k; ++t)
      r.w[(i - 1) * k + t] = modp::mulmod(f.w[i * k + t], scale, p);
  }
  ffp_trim(r);
  return r;
}

FFPoly ffp_powmod(FFPoly base, const Int& e, const FFPoly& mod) {
  if (e < 0) throw InternalError("ffp_powmod with negative exponent");
  FFPoly acc = ffp_from_prime(base.F, PrimePoly{base.F->pu, {1}});
  base = ffp_rem(std::move(base), mod);
  for (std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2), i = bits; i-- > 0;) {
    acc = ffp_rem(ffp_mul(acc, acc), mod);
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = ffp_rem(ffp_mul(acc, base), mod);
  }
  if (e == 0) return ffp_from_prime(base.F, PrimePoly{base.F->pu, {1}});
  return acc;
}

FFElem ffp_eval(const FFPoly& f, const FFElem& x) {
  FFElem acc = ff_zero(*f.F);
  for (std::size_t i = f.coeff_count(); i-- > 0;)
    acc = ff_add(*f.F, ff_mul(*f.F, acc, x), ffp_coeff(f, i));
  return acc;
}

namespace {

// p-th root coefficientwise: a^(p^(k-1)) inverts Frobenius on F_{p^k}.
FFPoly pth_root(const FFPoly& f) {
  const FieldCtx& F = *f.F;
  const std::uint64_t p = F.pu;
  const std::size_t n = f.coeff_count();
  std::vector<FFElem> out;
  const Int inv_frob_exp = pow_int(F.p, F.k - 1);
  for (std::size_t i = 0; i < n; i += p) {
    FFElem c = ffp_coeff(f, i);
    out.push_back(ff_pow(F, c, inv_frob_exp));
  }
  // any coefficient off the p-grid means f was not a p-th power
  for (std::size_t i = 0; i < n; ++i)
    if (i % p != 0 && !slot_zero(f.w.data() + i * F.k, F.k))
      throw InternalError("pth_root of a non-p-th-power");
  return ffp_from_coeffs(f.F, out);
}

void sqf_decompose(const FFPoly& f,
                   std::vector<std::pair<FFPoly, unsigned long>>& out,
                   unsigned long mult) {
  if (ffp_degree(f) < 1) return;
  const FFPoly fp = ffp_derivative(f);
  if (fp.w.empty()) {
    sqf_decompose(pth_root(f), out, mult * f.F->pu);
    return;
  }
  FFPoly c = ffp_gcd(f, fp);
  FFPoly w = ffp_quot(f, c);
  unsigned long i = 1;
  while (ffp_degree(w) > 0) {
    FFPoly y = ffp_gcd(w, c);
    FFPoly z = ffp_quot(w, y);
    if (ffp_degree(z) > 0) out.emplace_back(std::move(z), mult * i);
    c = ffp_quot(c, y);
    w = std::move(y);
    ++i;
  }
  if (ffp_degree(c) > 0) sqf_decompose(pth_root(c), out, mult * f.F->pu);
}

void ddf_squarefree(FFPoly g, unsigned long mult, DegreeCensus& census) {
  const Int& q = g.F->q;
  FFPoly h = ffp_rem(ffp_x(g.F), g);
  unsigned long m = 0;
  while (ffp_degree(g) >= 2 * static_cast<int>(m + 1)) {
    ++m;
    h = ffp_powmod(std::move(h), q, g);
    const FFPoly diff = ffp_sub(h, ffp_rem(ffp_x(g.F), g));
    FFPoly d = ffp_gcd(g, diff);
    if (ffp_degree(d) > 0) {
      const unsigned long found = static_cast<unsigned long>(ffp_degree(d)) / m;
      census.entries[m] += mult * found;
      census.distinct[m] += found;
      g = ffp_quot(g, d);
      h = ffp_rem(std::move(h), g);
    }
  }
  if (ffp_degree(g) > 0) {
    census.entries[static_cast<unsigned long>(ffp_degree(g))] += mult;
    census.distinct[static_cast<unsigned long>(ffp_degree(g))] += 1;
  }
}

}  // namespace

DegreeCensus ddf_census(const FFPoly& f) {
  if (f.w.empty()) throw Error("degree census of the zero polynomial");
  DegreeCensus census;
  if (ffp_degree(f) == 0) return census;
  std::vector<std::pair<FFPoly, unsigned long>> pieces;
  sqf_decompose(ffp_monic(f), pieces, 1);
  for (auto& [g, mult] : pieces) ddf_squarefree(std::move(g), mult, census);
  return census;
}

LinearCount count_linear_factors(const FFPoly& f) {
  if (f.w.empty()) throw Error("linear factor count of the zero polynomial");
  LinearCount out;
  if (ffp_degree(f) == 0) return out;
  const FieldCtx& F = *f.F;
  FFPoly g = ffp_monic(f);
  FFPoly linear_product;  // gcd(f, x^q - x)
  const bool fold = F.q_fits && F.qu <= (1u << 20) &&
                    F.qu <= static_cast<std::uint64_t>(ffp_degree(g));
  if (fold) {
    // fold exponents through x^q = x: i >= 1 lands on 1 + (i-1) mod (q-1)
    const std::uint64_t q = F.qu;
    const unsigned k = F.k;
    FFPoly folded{f.F, std::vector<std::uint64_t>(q * k, 0)};
    const std::uint64_t p = F.pu;
    for (std::size_t i = 0; i < g.coeff_count(); ++i) {
      const std::size_t target = i == 0 ? 0 : 1 + (i - 1) % (q - 1);
      for (unsigned t = 0; t < k; ++t)
        folded.w[target * k + t] = (folded.w[target * k + t] + g.w[i * k + t]) % p;
    }
    ffp_trim(folded);
    // x^q - x itself
    FFPoly xqx{f.F, std::vector<std::uint64_t>((q + 1) * k, 0)};
    xqx.w[q * k] = 1;
    xqx.w[k] = p - 1;
    linear_product = ffp_gcd(std::move(xqx), std::move(folded));
  } else {
    FFPoly xq = ffp_powmod(ffp_x(f.F), F.q, g);
    linear_product = ffp_gcd(g, ffp_sub(xq, ffp_rem(ffp_x(f.F), g)));
  }
  out.distinct = static_cast<unsigned long>(
      std::max(0, ffp_degree(linear_product)));
  FFPoly d = linear_product, rest = std::move(g);
  while (ffp_degree(d) > 0) {
    out.with_multiplicity += static_cast<unsigned long>(ffp_degree(d));
    rest = ffp_quot(rest, d);
    d = ffp_gcd(rest, d);
  }
  return out;
}

}  // namespace polydyn
