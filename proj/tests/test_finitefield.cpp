#include <doctest.h>

#include <random>
#include <vector>

#include <polydyn/finitefield.hpp>
#include <polydyn/modular.hpp>
#include <polydyn/parse.hpp>
#include <polydyn/resultant.hpp>

#include "oracles.hpp"

using namespace polydyn;

namespace {

modp::FpPoly random_fp(std::mt19937& rng, std::uint64_t p, int max_deg) {
  std::uniform_int_distribution<int> degd(1, max_deg);
  std::uniform_int_distribution<std::uint64_t> cd(0, p - 1);
  modp::FpPoly f(static_cast<std::size_t>(degd(rng)) + 1);
  for (auto& c : f) c = cd(rng);
  while (f.back() == 0) f.back() = cd(rng);
  return f;
}

}  // namespace

TEST_SUITE("finitefield") {

TEST_CASE("word arithmetic mod p") {
  for (std::uint64_t a = 1; a < 13; ++a)
    CHECK(modp::mulmod(a, modp::invmod(a, 13), 13) == 1);
  CHECK(modp::powmod(2, 12, 13) == 1);
  CHECK(modp::powmod(2, Int(12), 13) == 1);
  CHECK(modp::reduce_int(Int(-1), 13) == 12);
  CHECK(modp::reduce_rat(Rat(1, 2), 7) == 4);
  CHECK_THROWS_AS(modp::reduce_rat(Rat(1, 7), 7), BadReduction);
}

TEST_CASE("prime-field polynomials divide and reduce correctly") {
  std::mt19937 rng(17u);
  const std::uint64_t p = 13;
  for (int i = 0; i < 25; ++i) {
    auto a = random_fp(rng, p, 6), b = random_fp(rng, p, 3);
    auto [q, r] = modp::divmod(a, b, p);
    auto back = modp::add(modp::mul(q, b, p), r, p);
    CHECK(back == a);
    CHECK(modp::degree(r) < modp::degree(b));
    CHECK(modp::rem(modp::mul(a, b, p), b, p).empty());
  }
  CHECK(modp::is_irreducible({1, 0, 1}, 3));       // x^2 + 1 over F_3
  CHECK_FALSE(modp::is_irreducible({1, 0, 1}, 5)); // 2^2 = -1 mod 5
  CHECK(modp::is_irreducible({1, 1, 0, 0, 1}, 2));
}

TEST_CASE("modular resultant matches the rational one") {
  std::mt19937 rng(29u);
  std::uniform_int_distribution<int> cd(-9, 9);
  for (int i = 0; i < 20; ++i) {
    std::vector<Rat> ac(5), bc(4);
    for (auto& c : ac) c = Rat(cd(rng));
    for (auto& c : bc) c = Rat(cd(rng));
    RatPoly A(ac), B(bc);
    if (A.degree() < 1 || B.degree() < 1) continue;
    const Rat r = resultant(A, B);
    // compare mod 101 when the degree pattern survives reduction
    auto Ap = reduce_poly(A, Int(101)), Bp = reduce_poly(B, Int(101));
    if (modp::degree(Ap.c) != A.degree() || modp::degree(Bp.c) != B.degree())
      continue;
    CHECK(modp::resultant(Ap.c, Bp.c, 101) == modp::reduce_rat(r, 101));
  }
}

TEST_CASE("field construction picks the smallest modulus") {
  auto F13 = make_field(Int(13), 1);
  CHECK(F13->q == 13);
  CHECK(F13->modulus == modp::FpPoly{0, 1});
  auto F9 = make_field(Int(3), 2);
  CHECK(F9->q == 9);
  CHECK(F9->modulus == modp::FpPoly{1, 0, 1});
  auto F16 = make_field(Int(2), 4);
  CHECK(F16->modulus == modp::FpPoly{1, 1, 0, 0, 1});
  auto F25 = make_field(Int(5), 2);
  CHECK(F25->modulus == modp::FpPoly{2, 0, 1});
  auto F343 = make_field(Int(7), 3);
  CHECK(F343->modulus == modp::FpPoly{2, 0, 0, 1});
  CHECK_THROWS_AS(make_field(Int(6), 1), NotPrime);
}

TEST_CASE("field elements round-trip through indices and names") {
  auto F9 = make_field(Int(3), 2);
  for (std::uint64_t i = 0; i < 9; ++i)
    CHECK(ff_index(*F9, ff_from_index(*F9, i)) == i);
  CHECK(ff_name(*F9, ff_from_index(*F9, 0)) == "0,0");
  CHECK(ff_name(*F9, ff_from_index(*F9, 5)) == "1,2");
  CHECK(ff_equal(ff_from_residue(*F9, Int(-1)), ff_from_index(*F9, 2)));
}

TEST_CASE("F_9 multiplication matches a hand-rolled quadratic extension") {
  auto F9 = make_field(Int(3), 2);
  const std::uint64_t c0 = F9->modulus[0], c1 = F9->modulus[1];
  for (std::uint64_t i = 0; i < 9; ++i) {
    for (std::uint64_t j = 0; j < 9; ++j) {
      const auto prod = ff_mul(*F9, ff_from_index(*F9, i), ff_from_index(*F9, j));
      const oracles::QuadElem expect = oracles::quad_mul(
          {i % 3, i / 3}, {j % 3, j / 3}, c0, c1, 3);
      CHECK(ff_index(*F9, prod) == expect.a0 + 3 * expect.a1);
    }
  }
}

TEST_CASE("field axioms, Frobenius, and element degrees") {
  for (auto [p, k] : {std::pair<int, unsigned>{3, 2}, {2, 4}, {5, 2}}) {
    auto F = make_field(Int(p), k);
    const std::uint64_t q = F->qu;
    for (std::uint64_t i = 0; i < q; ++i) {
      const FFElem a = ff_from_index(*F, i);
      CHECK(ff_equal(ff_pow(*F, a, F->q), a));  // a^q = a
      CHECK(ff_equal(ff_frobenius(*F, a), ff_pow(*F, a, F->p)));
      if (i != 0)
        CHECK(ff_equal(ff_mul(*F, a, ff_inv(*F, a)), ff_from_index(*F, 1)));
      CHECK(k % element_degree(*F, a) == 0);
    }
  }
  auto F9 = make_field(Int(3), 2);
  int deg1 = 0, deg2 = 0;
  for (std::uint64_t i = 0; i < 9; ++i)
    (element_degree(*F9, ff_from_index(*F9, i)) == 1 ? deg1 : deg2)++;
  CHECK(deg1 == 3);
  CHECK(deg2 == 6);
}

TEST_CASE("rational polynomials reduce mod p") {
  auto f = reduce_poly(parse_poly("1/2x^2+3"), Int(7));
  CHECK(f.c == modp::FpPoly{3, 0, 4});
  CHECK_THROWS_AS(reduce_poly(parse_poly("1/7x"), Int(7)), BadReduction);
  // degree drops when the leading coefficient vanishes
  CHECK(modp::degree(reduce_poly(parse_poly("7x^2+x"), Int(7)).c) == 1);
  CHECK_THROWS_AS(reduce_poly(parse_poly("x"), Int(1) << 62), SizeGuardExceeded);
  CHECK_THROWS_AS(reduce_poly(parse_poly("x"), Int(1)), NotPrime);
}

TEST_CASE("extension-field polynomial arithmetic is consistent") {
  auto F9 = make_field(Int(3), 2);
  auto f = ffp_from_prime(F9, reduce_poly(parse_poly("x^2+1"), Int(3)));
  CHECK(ffp_degree(f) == 2);
  auto x = ffp_x(F9);
  auto prod = ffp_mul(f, x);
  CHECK(ffp_degree(prod) == 3);
  CHECK(ffp_degree(ffp_rem(prod, f)) < 0);
  // gcd(f, f') detects the square in (x+1)^2
  auto sq = ffp_mul(ffp_add(x, ffp_from_prime(F9, reduce_poly(RatPoly(1), Int(3)))),
                    ffp_add(x, ffp_from_prime(F9, reduce_poly(RatPoly(1), Int(3)))));
  CHECK(ffp_degree(ffp_gcd(sq, ffp_derivative(sq))) == 1);
  // evaluation agrees with element arithmetic
  for (std::uint64_t i = 0; i < 9; ++i) {
    const FFElem a = ff_from_index(*F9, i);
    const FFElem want = ff_add(*F9, ff_mul(*F9, a, a), ff_from_index(*F9, 1));
    CHECK(ff_equal(ffp_eval(f, a), want));
  }
}

TEST_CASE("distinct-degree census on fixed inputs") {
  auto F13 = make_field(Int(13), 1);
  auto c1 = ddf_census(ffp_from_prime(F13, reduce_poly(parse_poly("x^2+1"), Int(13))));
  CHECK(c1.entries == std::map<unsigned long, unsigned long>{{1, 2}});
  CHECK(c1.squarefree());

  auto F7 = make_field(Int(7), 1);
  auto c2 = ddf_census(ffp_from_prime(F7, reduce_poly(parse_poly("x^2+1"), Int(7))));
  CHECK(c2.entries == std::map<unsigned long, unsigned long>{{2, 1}});

  // (x+1)^4 over F_2 needs repeated p-th roots
  auto F2 = make_field(Int(2), 1);
  auto c3 = ddf_census(ffp_from_prime(F2, reduce_poly(parse_poly("x^4+1"), Int(2))));
  CHECK(c3.entries == std::map<unsigned long, unsigned long>{{1, 4}});
  CHECK(c3.distinct == std::map<unsigned long, unsigned long>{{1, 1}});
  CHECK_FALSE(c3.squarefree());
}

TEST_CASE("census degrees always add up") {
  std::mt19937 rng(41u);
  auto F5 = make_field(Int(5), 1);
  for (int i = 0; i < 20; ++i) {
    PrimePoly f{5, random_fp(rng, 5, 8)};
    auto c = ddf_census(ffp_from_prime(F5, f));
    unsigned long total = 0;
    for (auto& [k, cnt] : c.entries) total += k * cnt;
    CHECK(total == static_cast<unsigned long>(modp::degree(f.c)));
  }
}

TEST_CASE("linear factor counts match brute-force root counting") {
  std::mt19937 rng(43u);
  for (std::uint64_t p : {13ull, 101ull}) {
    auto F = make_field(Int(p), 1);
    for (int i = 0; i < 15; ++i) {
      auto f = random_fp(rng, p, 7);
      auto lc = count_linear_factors(ffp_from_prime(F, PrimePoly{p, f}));
      auto brute = oracles::brute_roots(f, p);
      CHECK(lc.distinct == brute.distinct);
      CHECK(lc.with_multiplicity == brute.with_multiplicity);
    }
  }
}

TEST_CASE("linear counts agree with the census over an extension") {
  auto F9 = make_field(Int(3), 2);
  auto f = ffp_from_prime(F9, reduce_poly(parse_poly("x^4+x+2"), Int(3)));
  auto lc = count_linear_factors(f);
  auto census = ddf_census(f);
  const auto at = [](const std::map<unsigned long, unsigned long>& m) {
    auto it = m.find(1);
    return it == m.end() ? 0ul : it->second;
  };
  CHECK(lc.with_multiplicity == at(census.entries));
  CHECK(lc.distinct == at(census.distinct));
  // and with direct evaluation
  unsigned long zeros = 0;
  for (std::uint64_t i = 0; i < 9; ++i) {
    FFElem v = ffp_eval(f, ff_from_index(*F9, i));
    if (ff_equal(v, ff_zero(*F9))) ++zeros;
  }
  CHECK(zeros == lc.distinct);
}

}  // TEST_SUITE
