#include <doctest.h>

#include <random>
#include <variant>

#include <polydyn/dynamics.hpp>
#include <polydyn/parse.hpp>
#include <polydyn/resultant.hpp>

using namespace polydyn;

TEST_SUITE("dynamics") {

TEST_CASE("critical data for rational critical points") {
  auto cd = critical_data(parse_poly("x^2-2"));
  REQUIRE(cd.critical.size() == 1);
  CHECK(cd.critical[0].r == 0);
  CHECK(cd.critical[0].multiplicity == 1);
  CHECK(cd.critical[0].value == -2);
  REQUIRE(cd.branch.size() == 1);
  CHECK(cd.branch[0].beta == -2);
  CHECK(cd.branch[0].multiplicity == 1);

  auto cubed = critical_data(parse_poly("x^3"));
  REQUIRE(cubed.critical.size() == 1);
  CHECK(cubed.critical[0].multiplicity == 2);

  CHECK_THROWS_AS(critical_data(parse_poly("x^3+x")), NonRationalCritical);
  CHECK_THROWS_AS(critical_data(RatPoly(5)), ZeroDerivative);
}

TEST_CASE("branch points recoverable even with irrational critical points") {
  // x^3 - 3x has critical points +-1 and branch values -+2
  auto bd = rational_branch_data(parse_poly("x^3-3x"));
  REQUIRE(bd.branch.size() == 2);
  CHECK(bd.branch[0].beta == -2);
  CHECK(bd.branch[1].beta == 2);
  CHECK(bd.complete);
  // complex branch values leave nothing rational to find
  auto none = rational_branch_data(parse_poly("x^3+x"));
  CHECK(none.branch.empty());
  CHECK_FALSE(none.complete);
}

TEST_CASE("orbits either cycle or escape with a certificate") {
  auto cyc = orbit_shape(parse_poly("x^2-1"), Rat(0));
  REQUIRE(std::holds_alternative<OrbitShape>(cyc));
  auto& s = std::get<OrbitShape>(cyc);
  CHECK(s.preperiod == 0);
  CHECK(s.period == 2);

  auto tailed = orbit_shape(parse_poly("x^2-2"), Rat(0));
  auto& t = std::get<OrbitShape>(tailed);
  CHECK(t.preperiod == 2);
  CHECK(t.period == 1);
  CHECK(t.tail == std::vector<Rat>{Rat(0), Rat(-2)});
  CHECK(t.cycle == std::vector<Rat>{Rat(2)});

  auto esc = orbit_shape(parse_poly("x^2+1"), Rat(0));
  REQUIRE(std::holds_alternative<Escape>(esc));
  auto& e = std::get<Escape>(esc);
  CHECK(e.kind == Escape::Kind::Archimedean);
  CHECK(e.step == 3);
  CHECK(e.value == 5);

  auto padic = orbit_shape(parse_poly("x^2"), Rat(1, 2));
  auto& e2 = std::get<Escape>(padic);
  CHECK(e2.kind == Escape::Kind::NegativeValuation);
  CHECK(e2.step == 0);
  CHECK(e2.prime == 2);
}

TEST_CASE("post-critically finite maps are recognized exactly") {
  auto v = is_pcf(parse_poly("x^2-2"));
  CHECK(v.kind == PcfKind::Pcf);
  CHECK(v.post_critical_set == std::vector<Rat>{Rat(-2), Rat(2)});
  CHECK(v.orbits.size() == 1);

  CHECK(is_pcf(parse_poly("x^2")).post_critical_set == std::vector<Rat>{Rat(0)});
  CHECK(is_pcf(parse_poly("x^2-1")).post_critical_set ==
        std::vector<Rat>{Rat(-1), Rat(0)});
}

TEST_CASE("escape witnesses carry the diverging value") {
  auto v = is_pcf(parse_poly("x^2+1"));
  CHECK(v.kind == PcfKind::NotPcf);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->kind == Escape::Kind::Archimedean);
  CHECK(v.witness->step == 3);
  CHECK(v.witness->value == 5);

  auto w = is_pcf(parse_poly("x^2+x+1"));
  CHECK(w.kind == PcfKind::NotPcf);
  REQUIRE(w.witness.has_value());
  CHECK(w.witness->kind == Escape::Kind::NegativeValuation);
  CHECK(w.witness->prime == 2);
  CHECK(*w.witness_start == Rat(-1, 2));
}

TEST_CASE("squared linear maps are post-critically finite only three times") {
  for (int r = -50; r <= 50; ++r) {
    const RatPoly f = parse_poly("(x-" + std::to_string(r) + ")^2");
    const auto v = is_pcf(f);
    const bool expected = (r == 0 || r == 1 || r == 2);
    CHECK(v.kind == (expected ? PcfKind::Pcf : PcfKind::NotPcf));
  }
}

TEST_CASE("structural certificate covers irrational critical points") {
  auto v = is_pcf(cfsr_normalized(3));
  CHECK(v.kind == PcfKind::Pcf);
  CHECK(v.structural_certificate);
  CHECK(v.post_critical_set.empty());
}

TEST_CASE("quadratic normal form replays the conjugation") {
  CHECK(quad_normal_form(Rat(1), Rat(0), Rat(-2)) == 2);
  CHECK_THROWS_AS(quad_normal_form(Rat(0), Rat(1), Rat(1)), NotQuadratic);
  std::mt19937 rng(20240817u);
  std::uniform_int_distribution<int> cd(-6, 6);
  for (int i = 0; i < 30; ++i) {
    Rat a(cd(rng));
    if (a == 0) a = 1;
    const Rat b(cd(rng)), c(cd(rng));
    const Rat r = quad_normal_form(a, b, c);
    // sigma(x) = a x + b/2 conjugates a x^2 + b x + c into y^2 - r
    const RatPoly phi = RatPoly::from_coeffs({c, b, a});
    const RatPoly sigma = RatPoly::from_coeffs({b / 2, a});
    const RatPoly psi = RatPoly::from_coeffs({-r, Rat(0), Rat(1)});
    CHECK(compose(sigma, phi) == compose(psi, sigma));
  }
}

TEST_CASE("critical orbit of the quadratic family tracks g_n") {
  for (const Rat r : {Rat(2), Rat(-1), Rat(1, 2)}) {
    const RatPoly phi = RatPoly::from_coeffs({-r, Rat(0), Rat(1)});
    auto g = g_sequence(r, 6);  // g_0 .. g_6
    REQUIRE(g.size() == 7);
    CHECK(g[0] == 0);
    Rat orbit(0);
    for (std::size_t n = 1; n < g.size(); ++n) {
      orbit = phi.eval(orbit);
      CHECK(r * g[n] == orbit);
    }
  }
}

TEST_CASE("normalized maps with simple fixed critical points") {
  for (unsigned d = 2; d <= 8; ++d) {
    const RatPoly f = cfsr_normalized(d);
    CHECK(f.degree() == static_cast<int>(d));
    auto rep = cfsr_verify(f);
    CHECK(rep.identity_holds);
    // d (phi - x) = x phi', checked directly as well
    CHECK((f - RatPoly::x()).scaled(Rat(d)) == RatPoly::x() * derivative(f));
  }
  CHECK(poly_string(cfsr_normalized(3)) == "x^3 + 3/2*x");
  auto quad = cfsr_verify(cfsr_normalized(2));
  CHECK(quad.critical_checked);
  CHECK(quad.critical_simple_fixed);
  CHECK_FALSE(cfsr_verify(parse_poly("x^2-2")).identity_holds);
}

TEST_CASE("chebyshev family satisfies the semigroup law") {
  CHECK(chebyshev(2) == parse_poly("x^2-2"));
  CHECK(chebyshev(3) == parse_poly("x^3-3x"));
  CHECK(chebyshev(4) == parse_poly("x^4-4x^2+2"));
  CHECK(chebyshev(5) == parse_poly("x^5-5x^3+5x"));
  CHECK(chebyshev(6) == parse_poly("x^6-6x^4+9x^2-2"));
  CHECK(compose(chebyshev(2), chebyshev(3)) == chebyshev(6));
  CHECK(compose(chebyshev(3), chebyshev(2)) == chebyshev(6));
  // C_d(z + 1/z) = z^d + 1/z^d at z = 2
  const Rat z(2);
  for (unsigned d = 2; d <= 6; ++d) {
    const Rat lhs = chebyshev(d).eval(z + 1 / z);
    CHECK(lhs == pow_rat(z, d) + 1 / pow_rat(z, d));
  }
}

TEST_CASE("substitution transport identity for discriminants") {
  auto chk = simon_identity_check(phi_tower(parse_poly("x^2-2"), 1), RatPoly(1),
                                  parse_poly("x^2+1"));
  CHECK(chk.equal);
  CHECK(poly_string(chk.lhs, "t") == "-256*t^3 - 1280*t^2 - 2048*t - 1024");
  CHECK(chk.deg_y_R == 2);

  // nonconstant A takes the lc_y(Q) / Res_y(Q, A) route; for
  // P = 2x^2 - t, A = y, B = y + 1 both sides come to 8t by hand
  const Bivar P2 = Bivar(std::vector<RatPoly>{
      RatPoly::from_coeffs({Rat(0), Rat(-1)}), RatPoly(), RatPoly(2)});
  auto gen = simon_identity_check(P2, parse_poly("x"), parse_poly("x+1"));
  CHECK(gen.equal);
  CHECK(poly_string(gen.lhs, "t") == "8*t");

  std::mt19937 rng(424243u);
  std::uniform_int_distribution<int> cd(-3, 3), degp(1, 4), degb(1, 3), degt(0, 2);
  int done = 0;
  while (done < 25) {
    const int dx = degp(rng), db = degb(rng);
    std::vector<RatPoly> pc(static_cast<std::size_t>(dx) + 1);
    for (auto& c : pc) {
      std::vector<Rat> tc(static_cast<std::size_t>(degt(rng)) + 1);
      for (auto& v : tc) v = Rat(cd(rng));
      c = RatPoly(std::move(tc));
    }
    if (pc.back().is_zero()) pc.back() = RatPoly(1);
    const Bivar P{pc};
    std::vector<Rat> bc(static_cast<std::size_t>(db) + 1);
    for (auto& v : bc) v = Rat(cd(rng));
    if (bc.back() == 0) bc.back() = 1;
    auto got = simon_identity_check(P, RatPoly(1), RatPoly(std::move(bc)));
    CHECK(got.equal);
    ++done;
  }
}

}  // TEST_SUITE
