#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "polydyn/discrim.hpp"
#include "polydyn/dynamics.hpp"
#include "polydyn/fungraph.hpp"
#include "polydyn/parse.hpp"
#include "polydyn/resultant.hpp"
#include "polydyn/serialize.hpp"

namespace {

using namespace polydyn;

// Rethrow parse errors with the offending input and a caret under the
// position, so the CLI message is self-contained.
RatPoly arg_poly(const std::string& text) {
  try {
    return parse_poly(text);
  } catch (const ParseError& e) {
    std::string msg = std::string(e.what()) + "\n  " + text + "\n  " +
                      std::string(e.position(), ' ') + "^";
    throw Error(msg);
  }
}

Rat arg_rat(const std::string& text) {
  try {
    return parse_rat(text);
  } catch (const ParseError& e) {
    std::string msg = std::string(e.what()) + "\n  " + text + "\n  " +
                      std::string(e.position(), ' ') + "^";
    throw Error(msg);
  }
}

Int arg_int(const std::string& text) {
  Rat r = arg_rat(text);
  if (r.get_den() != 1) throw Error("expected an integer: " + text);
  return r.get_num();
}

std::string set_string(const std::vector<Rat>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += rat_string(v[i]);
  }
  return s + "}";
}

std::string set_string(const std::vector<Int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  return s + "}";
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

std::uint64_t word_prime(const Int& p) {
  if (!p.fits_ulong_p() || p.get_ui() >= modp::kWordPrimeLimit)
    throw Error("prime too large: " + p.get_str());
  return p.get_ui();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw Error("cannot open output file: " + out_path);
  f << text;
}

// Shared per-invocation settings; everything defaults fixed, nothing read
// from the environment.
struct Common {
  unsigned long guard = kDefaultDegreeGuard;
};

// ---- subcommand handlers ------------------------------------------------

struct PcfCmd {
  std::string phi;
  bool json = false;
  PcfOptions opts;

  void run() const {
    const PcfVerdict v = is_pcf(arg_poly(phi), opts);
    if (json) {
      std::cout << json_pcf(v);
      return;
    }
    switch (v.kind) {
      case PcfKind::Pcf: {
        std::cout << "verdict: pcf\n";
        std::cout << "post-critical set: " << set_string(v.post_critical_set)
                  << "\n";
        if (v.structural_certificate)
          std::cout << "structural certificate: every critical point is "
                       "simple and fixed\n";
        if (v.from_branch_points)
          std::cout << "orbits computed from branch points\n";
        for (const CriticalOrbit& o : v.orbits) {
          std::cout << "orbit of " << rat_string(o.start) << ": tail "
                    << set_string(o.shape.tail) << " cycle "
                    << set_string(o.shape.cycle) << "\n";
        }
        break;
      }
      case PcfKind::NotPcf: {
        std::cout << "verdict: not pcf\n";
        if (v.witness_start && v.witness) {
          std::cout << "witness: orbit of " << rat_string(*v.witness_start)
                    << " escapes at step " << v.witness->step << ", value "
                    << rat_string(v.witness->value) << "\n";
          std::cout << "  " << v.witness->detail << "\n";
        }
        break;
      }
      case PcfKind::Unknown:
        std::cout << "verdict: unknown\n";
        std::cout << "reason: " << v.reason << "\n";
        break;
    }
  }
};

struct NormalFormCmd {
  std::string a, b, c;
  bool json = false;

  void run() const {
    const Rat ra = arg_rat(a), rb = arg_rat(b), rc = arg_rat(c);
    const Rat r = quad_normal_form(ra, rb, rc);
    if (json) {
      std::cout << json_quad_normal(ra, rb, rc, r);
      return;
    }
    const RatPoly nf = RatPoly::from_coeffs({-r, Rat(0), Rat(1)});
    std::cout << "r = " << rat_string(r) << "\n";
    std::cout << "normal form: " << poly_string(nf) << "\n";
  }
};

struct CfsrCmd {
  unsigned d = 2;
  bool json = false;

  void run() const {
    const RatPoly f = cfsr_normalized(d);
    if (json) {
      const CfsrReport rep = cfsr_verify(f);
      std::cout << json_cfsr(f, &rep);
      return;
    }
    std::cout << poly_string(f) << "\n";
  }
};

struct ChebyshevCmd {
  unsigned d = 2;
  bool json = false;

  void run() const {
    const RatPoly f = chebyshev(d);
    if (json) {
      std::cout << json_cfsr(f, nullptr);
      return;
    }
    std::cout << poly_string(f) << "\n";
  }
};

struct DiscCmd {
  std::string phi;
  unsigned n = 1;
  std::string route = "recursive";
  bool json = false;
  const Common* common = nullptr;

  void print_text(const DiscPoly& d) const {
    std::cout << "D_" << d.level << "(t) = " << poly_string(d.value, "t")
              << "\n";
    if (d.route != DiscRoute::Recursive) return;
    std::cout << "A = " << rat_string(d.A) << "\n";
    std::cout << "A exponent = " << d.a_exponent << "\n";
    std::cout << "factors:\n";
    for (const DiscFactor& f : d.trace)
      std::cout << "  level " << f.level << ": (" << poly_string(f.base, "t")
                << ")^" << f.exponent << "\n";
  }

  void run() const {
    const RatPoly f = arg_poly(phi);
    if (route == "both") {
      const DiscPoly rec = disc_tower_recursive(f, n, common->guard);
      const DiscPoly dir = disc_tower_direct(f, n, common->guard);
      if (json) {
        std::cout << json_disc_pair(rec, dir);
        return;
      }
      std::cout << "recursive: D_" << n << "(t) = "
                << poly_string(rec.value, "t") << "\n";
      std::cout << "direct:    D_" << n << "(t) = "
                << poly_string(dir.value, "t") << "\n";
      std::cout << "equal: " << yesno(rec.value == dir.value) << "\n";
      if (rec.value != dir.value)
        throw InternalError("recursive and direct discriminants disagree");
      return;
    }
    const DiscPoly d = route == "direct"
                           ? disc_tower_direct(f, n, common->guard)
                           : disc_tower_recursive(f, n, common->guard);
    if (json) {
      std::cout << json_disc(d);
      return;
    }
    print_text(d);
  }
};

struct DiscAtCmd {
  std::string phi, t0;
  unsigned n = 1;
  bool json = false;
  const Common* common = nullptr;

  void run() const {
    const RatPoly f = arg_poly(phi);
    const Rat tau = arg_rat(t0);
    const Rat d = disc_at(f, n, tau, common->guard);
    if (json) {
      std::cout << json_disc_at(f, n, tau, d);
      return;
    }
    std::cout << "disc Phi_" << n << "(x, " << rat_string(tau)
              << ") = " << rat_string(d) << "\n";
  }
};

struct RamifiedCmd {
  std::string phi, t0;
  bool include_critical = false;
  bool json = false;

  void run() const {
    RamifiedOptions opts;
    opts.include_critical_points = include_critical;
    const RamifiedSet s = ramified_set(arg_poly(phi), arg_rat(t0), opts);
    if (json) {
      std::cout << json_ramified(s);
      return;
    }
    std::cout << "post-critical set: " << set_string(s.post_critical_set)
              << "\n";
    std::cout << "S = " << set_string(s.primes)
              << " together with the real place\n";
  }
};

struct WildCmd {
  std::string phi, p, t0;
  unsigned n = 1;
  bool json = false;

  void run() const {
    const WildReport w = wild_report(arg_poly(phi), arg_int(p), arg_rat(t0), n);
    if (json) {
      std::cout << json_wild(w);
      return;
    }
    std::cout << "p = " << w.p.get_str() << ", t0 = " << rat_string(w.t0)
              << ", n = " << w.n << ", d = " << w.d << "\n";
    std::cout << "disc = " << rat_string(w.disc) << "\n";
    std::cout << "v_" << w.p.get_str() << "(disc) = " << w.v_disc << "\n";
    std::cout << "bound n*d^n = " << w.bound.get_str() << "\n";
    std::cout << "satisfied: " << yesno(w.satisfied) << "\n";
    std::cout << "ord_" << w.p.get_str() << "(phi') = " << w.ord_p_phi_prime
              << "\n";
  }
};

struct EisensteinCmd {
  std::string phi, t0;
  unsigned n = 1;
  unsigned shift_range = 3;
  bool json = false;

  void run() const {
    const Rat tau = arg_rat(t0);
    const auto cert = eisenstein_check(arg_poly(phi), tau, n, shift_range);
    if (json) {
      std::cout << json_eisenstein(tau, n, cert);
      return;
    }
    if (cert)
      std::cout << "Eisenstein certificate: p = " << cert->p.get_str()
                << ", shift x -> x + " << cert->shift.get_str() << "\n";
    else
      std::cout << "no Eisenstein certificate (shift range " << shift_range
                << ")\n";
  }
};

struct MonogenicCmd {
  std::string t0;
  unsigned n = 1;
  bool json = false;

  void run() const {
    const MonogenicCert cert = monogenic_x2m2(arg_int(t0), n);
    if (json) {
      std::cout << json_monogenic(cert);
      return;
    }
    std::cout << "t0 = " << cert.t0.get_str() << ", n = " << cert.n << "\n";
    std::cout << "t0 mod 4 in {0, 1}: " << yesno(cert.t0_mod4_ok) << "\n";
    std::cout << "t0 + 2 squarefree: " << yesno(cert.plus2_squarefree) << "\n";
    std::cout << "t0 - 2 squarefree: " << yesno(cert.minus2_squarefree)
              << "\n";
    std::cout << "D_" << cert.n << " = " << cert.disc.get_str() << "\n";
  }
};

struct TameCmd {
  std::string phi, t0;
  unsigned N = 4;
  unsigned shift_range = 3;
  bool json = false;

  void run() const {
    const TameReport r =
        tame_conditions(arg_poly(phi), arg_rat(t0), N, shift_range);
    if (json) {
      std::cout << json_tame(r);
      return;
    }
    std::cout << "S = " << set_string(r.ramified_primes) << "\n";
    std::cout << "levels:\n";
    for (const TameLevelRow& l : r.levels) {
      std::cout << "  n = " << l.n << ": ";
      if (l.eisenstein)
        std::cout << "Eisenstein p = " << l.eisenstein->p.get_str()
                  << ", shift " << l.eisenstein->shift.get_str() << "\n";
      else
        std::cout << "no Eisenstein certificate\n";
    }
    for (const TamePrimeRow& w : r.wild_primes) {
      std::cout << "p = " << w.p.get_str() << " (divides d): good reduction "
                << yesno(w.good_reduction) << ", wild forced "
                << yesno(w.wild_forced) << ", v_disc by level:";
      for (long v : w.v_disc) std::cout << " " << v;
      std::cout << "\n";
    }
    std::cout << "tame evidence: " << yesno(r.tame_evidence) << "\n";
  }
};

struct GraphCmd {
  std::string phi, p;
  unsigned k = 1;
  bool dot = false;
  bool json = false;
  bool quotient = false;
  std::string highlight;  // residue of t0, optional
  std::string out;

  void run() const {
    const Int pz = arg_int(p);
    FieldPtr F = make_field(pz, k);
    FunctionalGraph G = build_graph(F, reduce_poly(arg_poly(phi), pz));
    if (quotient) G = quotient_graph(G);
    std::optional<std::uint64_t> hl;
    if (!highlight.empty()) {
      const std::uint64_t r = modp::reduce_rat(arg_rat(highlight), word_prime(pz));
      if (G.is_quotient) {
        for (std::uint64_t v = 0; v < G.size; ++v)
          if (G.rep[v] == r) hl = v;
      } else {
        hl = r;
      }
    }
    if (dot) {
      emit(dot_export(G, hl), out);
      return;
    }
    if (json) {
      emit(json_graph(G), out);
      return;
    }
    std::string text = "F_" + G.F->q.get_str() + ", " +
                       (G.is_quotient ? "Frobenius orbit quotient, " : "") +
                       std::to_string(G.size) + " vertices\n";
    for (std::uint64_t v = 0; v < G.size; ++v) {
      text += vertex_label(G, v) + " -> " + vertex_label(G, G.succ[v]);
      if (G.weight[v] > 1)
        text += "  (" + std::string(G.is_quotient ? "orbit size" : "deg") +
                " " + std::to_string(G.weight[v]) + ")";
      text += "\n";
    }
    emit(text, out);
  }
};

struct GraphStructureCmd {
  std::string phi, p;
  unsigned k = 1;
  bool adjacency = false;
  bool json = false;

  void run() const {
    const Int pz = arg_int(p);
    FieldPtr F = make_field(pz, k);
    const FunctionalGraph G = build_graph(F, reduce_poly(arg_poly(phi), pz));
    const auto comps = component_structure(G);
    const SequencePeriod seq = graph_sequence_period(G);
    if (json) {
      std::cout << json_graph_structure(G, comps, seq);
      return;
    }
    std::cout << "vertices: " << G.size << "\n";
    std::cout << "components: " << comps.size() << "\n";
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const Component& c = comps[i];
      std::cout << "  component " << i + 1 << ": " << c.vertices.size()
                << " vertices, cycle length " << c.cycle_length << " (cycle:";
      for (std::uint64_t v : c.cycle) std::cout << " " << vertex_label(G, v);
      std::cout << "), longest arm " << c.max_tail << "\n";
    }
    std::cout << "period = " << seq.period.get_str() << "\n";
    std::cout << "stabilizes at n = " << seq.stabilization << "\n";
    std::cout << "arm-length preperiod = " << seq.paper_preperiod.get_str()
              << " (agrees: " << yesno(seq.preperiod_matches) << ")\n";
    if (adjacency) {
      const auto M = adjacency_matrix(G);
      std::cout << "adjacency matrix:\n";
      for (const auto& row : M) {
        for (std::size_t j = 0; j < row.size(); ++j)
          std::cout << (j ? " " : "") << unsigned(row[j]);
        std::cout << "\n";
      }
    }
  }
};

struct SplittingTableCmd {
  std::string phi, p, t0;
  unsigned N = 7;
  bool linear_only = false;
  bool json = false;

  void run() const {
    const Int pz = arg_int(p);
    const RatPoly f = arg_poly(phi);
    const Rat tau = arg_rat(t0);
    DegreeTableOptions opts;
    opts.linear_only = linear_only;
    opts.phi_rational = f;
    opts.t0_rational = tau;
    const DegreeTable t =
        degree_table(reduce_poly(f, pz), modp::reduce_rat(tau, word_prime(pz)), N, opts);
    std::cout << (json ? json_degree_table(t) : text_degree_table(t));
  }
};

struct SplittingCheckCmd {
  std::string phi, p, t0;
  unsigned long nmax = 5, kmax = 3;
  unsigned jobs = 1;
  bool json = false;

  void run() const {
    const Int pz = arg_int(p);
    const CrosscheckReport r =
        splitting_crosscheck(reduce_poly(arg_poly(phi), pz),
                             modp::reduce_rat(arg_rat(t0), word_prime(pz)), nmax, kmax,
                             jobs);
    if (json) {
      std::cout << json_crosscheck(r);
      return;
    }
    std::cout << "p = " << r.p.get_str() << ", n <= " << nmax << ", k <= "
              << kmax << "\n";
    std::cout << "   n   k  census   graph  match\n";
    for (const CrosscheckCell& c : r.cells) {
      std::cout << std::setw(4) << c.n << std::setw(4) << c.k << std::setw(8)
                << c.census_count << std::setw(8) << c.graph_count << "  "
                << yesno(c.match) << "\n";
    }
    if (!r.non_squarefree_levels.empty()) {
      std::cout << "levels with repeated factors:";
      for (unsigned long n : r.non_squarefree_levels) std::cout << " " << n;
      std::cout << "\n";
    }
    std::cout << "all cells match: " << yesno(r.all_match) << "\n";
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "polydyn: discriminants, ramification, and splitting data for iterated "
      "polynomial towers phi^n(x) - t"};
  app.require_subcommand(1);
  auto common = std::make_shared<Common>();
  app.add_option("--guard", common->guard,
                 "degree guard for iterated constructions")
      ->capture_default_str();

  auto pcf = std::make_shared<PcfCmd>();
  {
    auto* sub = app.add_subcommand("pcf", "decide post-critical finiteness");
    sub->add_option("phi", pcf->phi, "polynomial in x")->required();
    sub->add_flag("--json", pcf->json, "JSON output");
    sub->add_flag("--float-heuristic", pcf->opts.float_heuristic,
                  "annotate unknown verdicts with a floating-point orbit scan");
    sub->add_option("--max-steps", pcf->opts.orbit.max_steps,
                    "orbit step limit")
        ->capture_default_str();
    sub->add_option("--max-bits", pcf->opts.orbit.max_bits,
                    "orbit value size limit in bits")
        ->capture_default_str();
    sub->footer("example: polydyn pcf \"x^2-2\" --json");
    sub->callback([pcf] { pcf->run(); });
  }

  auto nf = std::make_shared<NormalFormCmd>();
  {
    auto* sub = app.add_subcommand(
        "normal-form", "conjugate a*x^2 + b*x + c to x^2 - r over Q");
    sub->add_option("a", nf->a, "leading coefficient")->required();
    sub->add_option("b", nf->b, "linear coefficient")->required();
    sub->add_option("c", nf->c, "constant coefficient")->required();
    sub->add_flag("--json", nf->json, "JSON output");
    sub->footer("example: polydyn normal-form -- 1 0 -2");
    sub->callback([nf] { nf->run(); });
  }

  auto cf = std::make_shared<CfsrCmd>();
  {
    auto* sub = app.add_subcommand(
        "cfsr", "degree-d map with all critical points simple and fixed");
    sub->add_option("d", cf->d, "degree >= 2")->required();
    sub->add_flag("--json", cf->json, "JSON output with the verification report");
    sub->footer("example: polydyn cfsr 3");
    sub->callback([cf] { cf->run(); });
  }

  auto ch = std::make_shared<ChebyshevCmd>();
  {
    auto* sub =
        app.add_subcommand("chebyshev", "normalized Chebyshev polynomial");
    sub->add_option("d", ch->d, "degree >= 1")->required();
    sub->add_flag("--json", ch->json, "JSON output");
    sub->footer("example: polydyn chebyshev 4");
    sub->callback([ch] { ch->run(); });
  }

  auto disc = std::make_shared<DiscCmd>();
  disc->common = common.get();
  {
    auto* sub = app.add_subcommand(
        "disc", "discriminant of phi^n(x) - t as a polynomial in t");
    sub->add_option("phi", disc->phi, "polynomial in x")->required();
    sub->add_option("--n", disc->n, "tower level")->capture_default_str();
    sub->add_option("--route", disc->route,
                    "recursive, direct, or both (compares them)")
        ->check(CLI::IsMember({"recursive", "direct", "both"}))
        ->capture_default_str();
    sub->add_flag("--json", disc->json, "JSON output");
    sub->footer("example: polydyn disc \"x^2-2\" --n 2 --route both");
    sub->callback([disc] { disc->run(); });
  }

  auto discat = std::make_shared<DiscAtCmd>();
  discat->common = common.get();
  {
    auto* sub = app.add_subcommand(
        "disc-at", "discriminant of phi^n(x) - t0 at a rational t0");
    sub->add_option("phi", discat->phi, "polynomial in x")->required();
    sub->add_option("--n", discat->n, "tower level")->capture_default_str();
    sub->add_option("--t0", discat->t0, "base point")->required();
    sub->add_flag("--json", discat->json, "JSON output");
    sub->footer("example: polydyn disc-at \"x^2-3\" --n 12 --t0 1");
    sub->callback([discat] { discat->run(); });
  }

  auto ram = std::make_shared<RamifiedCmd>();
  {
    auto* sub = app.add_subcommand(
        "ramified", "finite set S of primes that can ramify in the tower");
    sub->add_option("phi", ram->phi, "post-critically finite polynomial")
        ->required();
    sub->add_option("--t0", ram->t0, "base point")->required();
    sub->add_flag("--include-critical-points", ram->include_critical,
                  "enlarge the excluded set with the critical points");
    sub->add_flag("--json", ram->json, "JSON output");
    sub->footer("example: polydyn ramified \"x^2-2\" --t0=5");
    sub->callback([ram] { ram->run(); });
  }

  auto wild = std::make_shared<WildCmd>();
  {
    auto* sub = app.add_subcommand(
        "wild", "wild ramification floor v_p(disc) >= n*d^n at p | d");
    sub->add_option("phi", wild->phi, "polynomial in x")->required();
    sub->add_option("--p", wild->p, "prime dividing deg phi")->required();
    sub->add_option("--t0", wild->t0, "integral base point")->required();
    sub->add_option("--n", wild->n, "tower level")->capture_default_str();
    sub->add_flag("--json", wild->json, "JSON output");
    sub->footer("example: polydyn wild \"x^2-2\" --p 2 --t0 1 --n 3");
    sub->callback([wild] { wild->run(); });
  }

  auto eis = std::make_shared<EisensteinCmd>();
  {
    auto* sub = app.add_subcommand(
        "eisenstein", "Eisenstein certificate for phi^n(x) - t0 after a shift");
    sub->add_option("phi", eis->phi, "polynomial in x")->required();
    sub->add_option("--t0", eis->t0, "integral base point")->required();
    sub->add_option("--n", eis->n, "tower level")->capture_default_str();
    sub->add_option("--shift-range", eis->shift_range,
                    "search shifts 0, 1, -1, ..., +/-range")
        ->capture_default_str();
    sub->add_flag("--json", eis->json, "JSON output");
    sub->footer("example: polydyn eisenstein \"x^2-2\" --t0 1 --n 4");
    sub->callback([eis] { eis->run(); });
  }

  auto mono = std::make_shared<MonogenicCmd>();
  {
    auto* sub = app.add_subcommand(
        "monogenic-x2m2",
        "monogenicity certificate for the x^2 - 2 tower over t0");
    sub->add_option("--t0", mono->t0, "integer, 0 or 1 mod 4")->required();
    sub->add_option("--n", mono->n, "tower level")->capture_default_str();
    sub->add_flag("--json", mono->json, "JSON output");
    sub->footer("example: polydyn monogenic-x2m2 --t0 1 --n 4");
    sub->callback([mono] { mono->run(); });
  }

  auto tame = std::make_shared<TameCmd>();
  {
    auto* sub = app.add_subcommand(
        "tame", "ramified set, Eisenstein levels, and wild-prime valuations");
    sub->add_option("phi", tame->phi, "post-critically finite polynomial")
        ->required();
    sub->add_option("--t0", tame->t0, "base point")->required();
    sub->add_option("--N", tame->N, "levels 1..N")->capture_default_str();
    sub->add_option("--shift-range", tame->shift_range,
                    "Eisenstein shift search range")
        ->capture_default_str();
    sub->add_flag("--json", tame->json, "JSON output");
    sub->footer("example: polydyn tame \"x^2-2\" --t0 1 --N 4");
    sub->callback([tame] { tame->run(); });
  }

  auto graph = std::make_shared<GraphCmd>();
  {
    auto* sub = app.add_subcommand(
        "graph", "functional graph of x -> phi(x) on F_{p^k}");
    sub->add_option("phi", graph->phi, "polynomial, reduced mod p")
        ->required();
    sub->add_option("--p", graph->p, "prime")->required();
    sub->add_option("--k", graph->k, "extension degree")
        ->capture_default_str();
    sub->add_flag("--dot", graph->dot, "GraphViz output");
    sub->add_flag("--json", graph->json, "JSON output");
    sub->add_flag("--quotient", graph->quotient,
                  "collapse Frobenius orbits (requires coefficients in F_p)");
    sub->add_option("--highlight", graph->highlight,
                    "mark the vertex of this residue in DOT output");
    sub->add_option("--out", graph->out, "write output to a file");
    sub->footer("example: polydyn graph \"x^2+8\" --p 13 --dot");
    sub->callback([graph] { graph->run(); });
  }

  auto gs = std::make_shared<GraphStructureCmd>();
  {
    auto* sub = app.add_subcommand(
        "graph-structure",
        "components, cycles, arms, and the graph-sequence period");
    sub->add_option("phi", gs->phi, "polynomial, reduced mod p")->required();
    sub->add_option("--p", gs->p, "prime")->required();
    sub->add_option("--k", gs->k, "extension degree")->capture_default_str();
    sub->add_flag("--adjacency", gs->adjacency, "print the adjacency matrix");
    sub->add_flag("--json", gs->json, "JSON output");
    sub->footer("example: polydyn graph-structure \"x^2+8\" --p 13");
    sub->callback([gs] { gs->run(); });
  }

  auto st = std::make_shared<SplittingTableCmd>();
  {
    auto* sub = app.add_subcommand(
        "splitting-table",
        "factor-degree census of phi^n(x) - t0 over F_p, n = 1..N");
    sub->add_option("phi", st->phi, "polynomial, reduced mod p")->required();
    sub->add_option("--p", st->p, "prime")->required();
    sub->add_option("--t0", st->t0, "base point, reduced mod p")->required();
    sub->add_option("--N", st->N, "levels 1..N")->capture_default_str();
    sub->add_flag("--linear-only", st->linear_only,
                  "count only the degree-1 factors (cheap for large N)");
    sub->add_flag("--json", st->json, "JSON output");
    sub->footer(
        "example: polydyn splitting-table \"x^2+8\" --p 13 --t0 11 --N 7");
    sub->callback([st] { st->run(); });
  }

  auto sc = std::make_shared<SplittingCheckCmd>();
  {
    auto* sub = app.add_subcommand(
        "splitting-check",
        "census vs functional-graph path counts on all (n, k) cells");
    sub->add_option("phi", sc->phi, "polynomial, reduced mod p")->required();
    sub->add_option("--p", sc->p, "prime")->required();
    sub->add_option("--t0", sc->t0, "base point, reduced mod p")->required();
    sub->add_option("--nmax", sc->nmax, "levels 1..nmax")
        ->capture_default_str();
    sub->add_option("--kmax", sc->kmax, "extension degrees 1..kmax")
        ->capture_default_str();
    sub->add_option("--jobs", sc->jobs, "parallel workers over k")
        ->check(CLI::Range(1u, 64u))
        ->capture_default_str();
    sub->add_flag("--json", sc->json, "JSON output");
    sub->footer(
        "example: polydyn splitting-check \"x^2+8\" --p 13 --t0 11 --nmax 5 "
        "--kmax 3 --jobs 2");
    sub->callback([sc] { sc->run(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    for (const CLI::App* sub : app.get_subcommands())
      if (!sub->get_footer().empty())
        std::cerr << sub->get_footer() << "\n";
    return 2;
  } catch (const polydyn::HypothesisFailed& e) {
    std::cerr << "error: hypothesis failed (" << e.hypothesis()
              << "): " << e.what() << "\n";
    return 2;
  } catch (const polydyn::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const polydyn::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
