#include <doctest.h>

#include <polydyn/discrim.hpp>
#include <polydyn/parse.hpp>
#include <polydyn/resultant.hpp>

using namespace polydyn;

namespace {

Rat pow_rat_big(const Rat& b, const Int& e) {
  Rat acc(1);
  for (Int i(0); i < e; ++i) acc *= b;
  return acc;
}

RatPoly rebuild_from_trace(const DiscPoly& d) {
  RatPoly acc(1);
  for (const auto& f : d.trace) acc *= pow_poly(f.base, f.exponent);
  return acc.scaled(pow_rat(d.A, d.a_exponent) * pow_rat_big(d.lc, d.lc_exponent));
}

}  // namespace

TEST_SUITE("discrim") {

TEST_CASE("base discriminants of the quadratic tower") {
  auto d1 = disc_tower_recursive(parse_poly("x^2-2"), 1);
  CHECK(d1.value == parse_poly("4x+8"));  // variable is t
  CHECK(d1.A == -4);
  CHECK(d1.lc == 1);
  auto d2 = disc_tower_recursive(parse_poly("x^2-2"), 2);
  CHECK(d2.value == RatPoly::from_coeffs(
                        {Rat(2048), Rat(1024), Rat(-512), Rat(-256)}));
  // D_1 of x^2 picks up the sign convention
  CHECK(disc_tower_recursive(parse_poly("x^2"), 1).value == parse_poly("4x"));
}

TEST_CASE("level recursion for x^2-2 holds symbolically") {
  const RatPoly two_minus_t = RatPoly::from_coeffs({Rat(2), Rat(-1)});
  RatPoly prev = disc_tower_recursive(parse_poly("x^2-2"), 1).value;
  for (unsigned n = 1; n <= 5; ++n) {
    const RatPoly next = disc_tower_recursive(parse_poly("x^2-2"), n + 1).value;
    CHECK(next == (prev * prev * two_minus_t).scaled(pow_rat(Rat(4), 1ul << n)));
    prev = next;
  }
}

TEST_CASE("recursive and direct routes agree, including non-monic maps") {
  for (const char* s : {"x^2-2", "x^2+1", "-4x^2-x+4", "3x^3-2x^2+x-5",
                        "2x^4+x-3", "x^3-3x"}) {
    const RatPoly phi = parse_poly(s);
    for (unsigned n = 1; n <= 3; ++n) {
      auto rec = disc_tower_recursive(phi, n);
      auto dir = disc_tower_direct(phi, n);
      CHECK(rec.value == dir.value);
    }
  }
  // frozen regression: dropping the leading-coefficient factor made the
  // recursive route smaller by lc^5 here
  auto d = disc_tower_direct(parse_poly("-4x^2-x+4"), 2);
  CHECK(d.value ==
        RatPoly::from_coeffs({Rat(Int("73185382400")), Rat(Int("-34922168320")),
                              Rat(Int("3889168384")), Rat(Int("67108864"))}));
}

TEST_CASE("trace factorization rebuilds the discriminant") {
  struct Case {
    const char* phi;
    unsigned n;
    const char* lc_exponent;
  };
  for (const Case c : {Case{"x^2-2", 3, "37"}, Case{"-4x^2-x+4", 2, "5"},
                       Case{"-4x^2-x+4", 3, "37"}, Case{"2x^4+x-3", 2, "51"},
                       Case{"3x^3-2x^2+x-5", 3, "284"}}) {
    auto d = disc_tower_recursive(parse_poly(c.phi), c.n);
    CHECK(d.lc_exponent == Int(c.lc_exponent));
    CHECK(rebuild_from_trace(d) == d.value);
  }
  // direct route has no trace to rebuild from
  CHECK(disc_tower_direct(parse_poly("x^2-2"), 2).trace.empty());
}

TEST_CASE("specializing t commutes with the recursion") {
  CHECK(disc_at(parse_poly("x^2-2"), 1, Rat(0)) == 8);
  CHECK(disc_at(parse_poly("x^2-2"), 2, Rat(0)) == 2048);
  CHECK(disc_at(parse_poly("x^2-2"), 2, Rat(1)) == 2304);
  const RatPoly cubic = parse_poly("3x^3-2x^2+x-5");
  CHECK(disc_at(cubic, 2, Rat(3)) ==
        disc_tower_recursive(cubic, 2).value.eval(Rat(3)));
  // branch values specialize to zero without throwing
  CHECK(disc_at(parse_poly("x^2"), 1, Rat(0)) == 0);
}

TEST_CASE("tower construction rejects bad input") {
  CHECK_THROWS_AS(disc_tower_recursive(RatPoly(3), 1), ConstantInput);
  CHECK_THROWS_AS(disc_tower_recursive(parse_poly("x^2-2"), 0), Error);
  CHECK_THROWS_AS(disc_tower_recursive(parse_poly("x^2-2"), 4, 8),
                  DegreeGuardExceeded);
  CHECK_THROWS_AS(disc_tower_direct(parse_poly("x^2-2"), 25),
                  DegreeGuardExceeded);
}

TEST_CASE("ramified prime sets from the post-critical data") {
  auto s1 = ramified_set(parse_poly("x^2-2"), Rat(1));
  CHECK(s1.primes == std::vector<Int>{Int(2), Int(3)});
  CHECK(s1.includes_real_place);
  CHECK(s1.post_critical_set == std::vector<Rat>{Rat(-2), Rat(2)});

  CHECK(ramified_set(parse_poly("x^2-2"), Rat(7)).primes ==
        std::vector<Int>{Int(2), Int(3), Int(5)});
  CHECK(ramified_set(parse_poly("x^2"), Rat(5)).primes ==
        std::vector<Int>{Int(2), Int(5)});
  CHECK(ramified_set(parse_poly("x^2-2"), Rat(1, 3)).primes ==
        std::vector<Int>{Int(2), Int(3), Int(5), Int(7)});

  RamifiedOptions with_crit;
  with_crit.include_critical_points = true;
  CHECK(ramified_set(parse_poly("x^2-2"), Rat(5)).primes ==
        std::vector<Int>{Int(2), Int(3), Int(7)});
  CHECK(ramified_set(parse_poly("x^2-2"), Rat(5), with_crit).primes ==
        std::vector<Int>{Int(2), Int(3), Int(5), Int(7)});

  CHECK_THROWS_AS(ramified_set(parse_poly("x^2+1"), Rat(0)), NotPcf);
  CHECK_THROWS_AS(ramified_set(parse_poly("x^2-2"), Rat(2)), PostCriticalT0);
  CHECK_THROWS_AS(ramified_set(parse_poly("x^2-2"), Rat(-2)), PostCriticalT0);
}

TEST_CASE("good reduction scans coefficient valuations") {
  CHECK(good_reduction(parse_poly("x^2-2"), Int(2)));
  CHECK_FALSE(good_reduction(parse_poly("2x^2-1"), Int(2)));
  CHECK_FALSE(good_reduction(parse_poly("x^2+1/2"), Int(2)));
  CHECK(good_reduction(parse_poly("3x^2+x"), Int(5)));
  CHECK_FALSE(good_reduction(RatPoly(), Int(2)));
}

TEST_CASE("wild ramification floor for the quadratic tower") {
  for (unsigned n = 1; n <= 4; ++n) {
    auto w = wild_report(parse_poly("x^2-2"), Int(2), Rat(1), n);
    CHECK(w.v_disc == static_cast<long>(n) * (1L << n));
    CHECK(w.bound == Int(n) * pow_int(Int(2), n));
    CHECK(w.satisfied);
    CHECK(w.ord_p_phi_prime == 1);
  }
  CHECK_THROWS_AS(wild_report(parse_poly("x^2-2"), Int(3), Rat(1), 2),
                  HypothesisFailed);
  CHECK_THROWS_AS(wild_report(parse_poly("x^2+1"), Int(2), Rat(1), 2),
                  HypothesisFailed);
  CHECK_THROWS_AS(wild_report(parse_poly("x^2-2"), Int(2), Rat(1, 2), 2),
                  HypothesisFailed);
  CHECK_THROWS_AS(wild_report(parse_poly("2x^2-2"), Int(2), Rat(1), 2),
                  HypothesisFailed);
  CHECK_THROWS_AS(wild_report(parse_poly("x+1"), Int(2), Rat(1), 2),
                  HypothesisFailed);
  CHECK_THROWS_AS(wild_report(parse_poly("x^2-2"), Int(4), Rat(1), 2), NotPrime);
  try {
    wild_report(parse_poly("x^2-2"), Int(3), Rat(1), 2);
  } catch (const HypothesisFailed& e) {
    CHECK(e.hypothesis() == "p divides d");
  }
}

TEST_CASE("root discriminants double along the x^2-2 tower over 1") {
  auto rows = root_disc_sequence(parse_poly("x^2-2"), Rat(1), 3);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].disc == 12);
  CHECK(rows[0].root_disc == "3.46410161513775");
  CHECK(rows[1].disc == 2304);
  CHECK(rows[1].root_disc == "6.92820323027551");
  CHECK(rows[2].disc == 1358954496);
  CHECK(rows[2].root_disc == "13.8564064605510");
  CHECK_THROWS_AS(root_disc_sequence(parse_poly("x^2"), Rat(0), 2),
                  ZeroDiscriminant);
}

TEST_CASE("eisenstein certificates after shifting") {
  auto c1 = eisenstein_check(parse_poly("x^2-2"), Rat(1), 1);
  REQUIRE(c1.has_value());
  CHECK(c1->p == 2);
  CHECK(c1->shift == 1);
  auto c2 = eisenstein_check(parse_poly("x^2-2"), Rat(1), 2);
  REQUIRE(c2.has_value());
  CHECK(c2->p == 2);
  CHECK(c2->shift == 1);
  auto c4 = eisenstein_check(parse_poly("x^2-2"), Rat(4), 2);
  REQUIRE(c4.has_value());
  CHECK(c4->p == 2);
  CHECK(c4->shift == 0);
  CHECK_FALSE(eisenstein_check(parse_poly("x^2-2"), Rat(2), 1).has_value());
  CHECK_THROWS_AS(eisenstein_check(parse_poly("x^2-2"), Rat(1, 2), 1),
                  HypothesisFailed);
}

TEST_CASE("monogenicity certificates for the x^2-2 tower") {
  for (unsigned n = 1; n <= 4; ++n) {
    auto cert = monogenic_x2m2(Int(1), n);
    CHECK(Rat(cert.disc) == disc_at(parse_poly("x^2-2"), n, Rat(1)));
  }
  CHECK(monogenic_x2m2(Int(1), 3).disc == 1358954496);
  CHECK(monogenic_x2m2(Int(0), 1).disc == 8);
  CHECK(monogenic_x2m2(Int(13), 2).t0_mod4_ok);

  const auto hypothesis_of = [](const Int& t0) {
    try {
      monogenic_x2m2(t0, 2);
    } catch (const HypothesisFailed& e) {
      return e.hypothesis();
    }
    return std::string("no failure");
  };
  CHECK(hypothesis_of(Int(7)) == "t0 = 0 or 1 mod 4");
  CHECK(hypothesis_of(Int(2)) == "t0 = 0 or 1 mod 4");
  CHECK(hypothesis_of(Int(16)) == "t0 + 2 squarefree");
  CHECK(hypothesis_of(Int(29)) == "t0 - 2 squarefree");
}

TEST_CASE("tame report combines S, certificates, and wild valuations") {
  auto r = tame_conditions(parse_poly("x^2-2"), Rat(1), 3);
  CHECK(r.ramified_primes == std::vector<Int>{Int(2), Int(3)});
  REQUIRE(r.levels.size() == 3);
  for (const auto& lvl : r.levels) {
    REQUIRE(lvl.eisenstein.has_value());
    CHECK(lvl.eisenstein->p == 2);
  }
  REQUIRE(r.wild_primes.size() == 1);
  CHECK(r.wild_primes[0].p == 2);
  CHECK(r.wild_primes[0].good_reduction);
  CHECK(r.wild_primes[0].wild_forced);
  CHECK(r.wild_primes[0].v_disc == std::vector<long>{2, 8, 24});
  CHECK_FALSE(r.tame_evidence);
}

}  // TEST_SUITE
