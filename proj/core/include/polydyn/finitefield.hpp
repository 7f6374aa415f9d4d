#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "polydyn/modular.hpp"
#include "polydyn/poly.hpp"

namespace polydyn {

// F_{p^k} = F_p[y]/(m(y)) with the lexicographically smallest monic
// irreducible modulus: candidates of degree k are ordered by the coefficient
// tuple (c_{k-1}, ..., c_1, c_0) and the first irreducible wins. For k = 1
// the modulus is y and elements are natural residues.
struct FieldCtx {
  Int p;
  unsigned k = 1;
  Int q;             // p^k
  std::uint64_t pu;  // p as a word
  bool q_fits;       // q < 2^62, required for element enumeration
  std::uint64_t qu;  // valid when q_fits
  modp::FpPoly modulus;  // monic degree k
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

// Throws NotPrime for composite p. p must fit in a word; k >= 1.
FieldPtr make_field(const Int& p, unsigned k);

// Element is the digit vector (a_0, ..., a_{k-1}) of a_0 + a_1 y + ..., and
// its index is sum a_i p^i. For k = 1 an element is its own residue.
struct FFElem {
  std::vector<std::uint64_t> a;
};

FFElem ff_zero(const FieldCtx& F);
FFElem ff_from_residue(const FieldCtx& F, const Int& r);
FFElem ff_from_index(const FieldCtx& F, std::uint64_t index);
std::uint64_t ff_index(const FieldCtx& F, const FFElem& a);
std::string ff_name(const FieldCtx& F, const FFElem& a);  // "c_{k-1},...,c_0"
bool ff_equal(const FFElem& a, const FFElem& b);

FFElem ff_add(const FieldCtx& F, const FFElem& a, const FFElem& b);
FFElem ff_sub(const FieldCtx& F, const FFElem& a, const FFElem& b);
FFElem ff_mul(const FieldCtx& F, const FFElem& a, const FFElem& b);
FFElem ff_inv(const FieldCtx& F, const FFElem& a);
FFElem ff_pow(const FieldCtx& F, FFElem a, const Int& e);
FFElem ff_frobenius(const FieldCtx& F, const FFElem& a);

// Degree of a over F_p: the least j >= 1 with a^(p^j) = a. Divides k.
unsigned element_degree(const FieldCtx& F, const FFElem& a);

// Polynomial over F_p, obtained from rational coefficients; denominators
// divisible by p throw BadReduction. Degree can drop.
struct PrimePoly {
  std::uint64_t p = 0;
  modp::FpPoly c;
};
PrimePoly reduce_poly(const RatPoly& f, const Int& p);

// Dense polynomial over F_{p^k}: flat digit layout, coefficient i occupying
// words [i*k, (i+1)*k). Trimmed like Poly.
struct FFPoly {
  FieldPtr F;
  std::vector<std::uint64_t> w;
  std::size_t coeff_count() const { return F->k ? w.size() / F->k : 0; }
};

FFPoly ffp_zero(FieldPtr F);
FFPoly ffp_x(FieldPtr F);
FFPoly ffp_from_coeffs(FieldPtr F, const std::vector<FFElem>& coeffs);
FFPoly ffp_from_prime(FieldPtr F, const PrimePoly& f);
int ffp_degree(const FFPoly& f);
FFElem ffp_coeff(const FFPoly& f, std::size_t i);
FFPoly ffp_add(const FFPoly& a, const FFPoly& b);
FFPoly ffp_sub(const FFPoly& a, const FFPoly& b);
FFPoly ffp_mul(const FFPoly& a, const FFPoly& b);
FFPoly ffp_monic(FFPoly f);
FFPoly ffp_rem(FFPoly a, const FFPoly& b);
FFPoly ffp_quot(const FFPoly& a, const FFPoly& b);
FFPoly ffp_gcd(FFPoly a, FFPoly b);
FFPoly ffp_derivative(const FFPoly& f);
FFPoly ffp_powmod(FFPoly base, const Int& e, const FFPoly& mod);
FFElem ffp_eval(const FFPoly& f, const FFElem& x);

// Distinct-degree census of f over F_{p^k}: squarefree decomposition first
// (p-th roots via the inverse Frobenius on coefficients), then standard
// distinct-degree splitting of each squarefree piece.
struct DegreeCensus {
  // factor degree -> number of irreducible factors, counted with multiplicity
  std::map<unsigned long, unsigned long> entries;
  // same, each distinct irreducible counted once
  std::map<unsigned long, unsigned long> distinct;
  bool squarefree() const { return entries == distinct; }
};
DegreeCensus ddf_census(const FFPoly& f);

// Linear factors only; skips the full splitting so it stays cheap when
// deg f >> q. Totals are (with multiplicity, distinct).
struct LinearCount {
  unsigned long with_multiplicity = 0;
  unsigned long distinct = 0;
};
LinearCount count_linear_factors(const FFPoly& f);

}  // namespace polydyn
