#include "polydyn/serialize.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace polydyn {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json rat_array(const std::vector<Rat>& v) {
  ordered_json a = ordered_json::array();
  for (const Rat& r : v) a.push_back(rat_string(r));
  return a;
}

ordered_json int_array(const std::vector<Int>& v) {
  ordered_json a = ordered_json::array();
  for (const Int& n : v) a.push_back(n.get_str());
  return a;
}

ordered_json orbit_json(const CriticalOrbit& o) {
  ordered_json j;
  j["start"] = rat_string(o.start);
  j["preperiod"] = o.shape.preperiod;
  j["period"] = o.shape.period;
  j["tail"] = rat_array(o.shape.tail);
  j["cycle"] = rat_array(o.shape.cycle);
  return j;
}

ordered_json disc_json(const DiscPoly& d) {
  ordered_json j;
  j["n"] = d.level;
  j["route"] = d.route == DiscRoute::Recursive ? "recursive" : "direct";
  j["disc"] = poly_string(d.value, "t");
  ordered_json coeffs = ordered_json::array();
  for (const Rat& c : d.value.coeffs()) coeffs.push_back(rat_string(c));
  j["coefficients"] = coeffs;
  if (d.route == DiscRoute::Recursive) {
    j["A"] = rat_string(d.A);
    j["A_exponent"] = d.a_exponent;
    j["lc"] = rat_string(d.lc);
    j["lc_exponent"] = d.lc_exponent.get_str();
    ordered_json trace = ordered_json::array();
    for (const DiscFactor& f : d.trace) {
      ordered_json t;
      t["level"] = f.level;
      t["base"] = poly_string(f.base, "t");
      t["exponent"] = f.exponent;
      trace.push_back(t);
    }
    j["trace"] = trace;
  }
  return j;
}

ordered_json eisenstein_json(const std::optional<EisensteinCert>& cert) {
  if (!cert) return nullptr;
  ordered_json j;
  j["p"] = cert->p.get_str();
  j["shift"] = cert->shift.get_str();
  return j;
}

ordered_json count_map_json(const std::map<unsigned long, unsigned long>& m) {
  ordered_json j = ordered_json::object();
  for (const auto& [deg, count] : m) j[std::to_string(deg)] = count;
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string json_pcf(const PcfVerdict& v) {
  ordered_json j;
  switch (v.kind) {
    case PcfKind::Pcf: j["verdict"] = "pcf"; break;
    case PcfKind::NotPcf: j["verdict"] = "not_pcf"; break;
    case PcfKind::Unknown: j["verdict"] = "unknown"; break;
  }
  if (v.kind == PcfKind::Pcf) {
    j["post_critical_set"] = rat_array(v.post_critical_set);
    j["from_branch_points"] = v.from_branch_points;
    j["structural_certificate"] = v.structural_certificate;
    ordered_json orbits = ordered_json::array();
    for (const CriticalOrbit& o : v.orbits) orbits.push_back(orbit_json(o));
    j["orbits"] = orbits;
  } else if (v.kind == PcfKind::NotPcf) {
    if (v.witness_start) j["witness_start"] = rat_string(*v.witness_start);
    if (v.witness) {
      ordered_json w;
      w["kind"] = v.witness->kind == Escape::Kind::Archimedean
                      ? "archimedean"
                      : "negative_valuation";
      w["step"] = v.witness->step;
      w["value"] = rat_string(v.witness->value);
      if (v.witness->kind == Escape::Kind::NegativeValuation)
        w["prime"] = v.witness->prime.get_str();
      w["detail"] = v.witness->detail;
      j["witness"] = w;
    }
  } else {
    j["reason"] = v.reason;
  }
  return dump(j);
}

std::string json_disc(const DiscPoly& d) { return dump(disc_json(d)); }

std::string json_disc_pair(const DiscPoly& recursive, const DiscPoly& direct) {
  ordered_json j;
  j["n"] = recursive.level;
  j["equal"] = recursive.value == direct.value;
  j["recursive"] = disc_json(recursive);
  j["direct"] = disc_json(direct);
  return dump(j);
}

std::string json_disc_at(const RatPoly& phi, unsigned n, const Rat& t0,
                         const Rat& disc) {
  ordered_json j;
  j["phi"] = poly_string(phi);
  j["n"] = n;
  j["t0"] = rat_string(t0);
  j["disc"] = rat_string(disc);
  return dump(j);
}

std::string json_ramified(const RamifiedSet& s) {
  ordered_json j;
  j["primes"] = int_array(s.primes);
  j["includes_real_place"] = s.includes_real_place;
  j["post_critical_set"] = rat_array(s.post_critical_set);
  return dump(j);
}

std::string json_wild(const WildReport& w) {
  ordered_json j;
  j["p"] = w.p.get_str();
  j["t0"] = rat_string(w.t0);
  j["n"] = w.n;
  j["d"] = w.d;
  j["disc"] = rat_string(w.disc);
  j["v_disc"] = w.v_disc;
  j["bound"] = w.bound.get_str();
  j["satisfied"] = w.satisfied;
  j["ord_p_phi_prime"] = w.ord_p_phi_prime;
  return dump(j);
}

std::string json_root_disc(const std::vector<RootDiscRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const RootDiscRow& r : rows) {
    ordered_json j;
    j["n"] = r.n;
    j["disc"] = rat_string(r.disc);
    j["root_disc"] = r.root_disc;
    arr.push_back(j);
  }
  ordered_json j;
  j["rows"] = arr;
  return dump(j);
}

std::string json_eisenstein(const Rat& t0, unsigned n,
                            const std::optional<EisensteinCert>& cert) {
  ordered_json j;
  j["t0"] = rat_string(t0);
  j["n"] = n;
  j["eisenstein"] = cert.has_value();
  j["certificate"] = eisenstein_json(cert);
  return dump(j);
}

std::string json_monogenic(const MonogenicCert& cert) {
  ordered_json j;
  j["t0"] = cert.t0.get_str();
  j["n"] = cert.n;
  j["disc"] = cert.disc.get_str();
  j["t0_mod4_ok"] = cert.t0_mod4_ok;
  j["plus2_squarefree"] = cert.plus2_squarefree;
  j["minus2_squarefree"] = cert.minus2_squarefree;
  return dump(j);
}

std::string json_tame(const TameReport& r) {
  ordered_json j;
  j["ramified_primes"] = int_array(r.ramified_primes);
  ordered_json levels = ordered_json::array();
  for (const TameLevelRow& l : r.levels) {
    ordered_json row;
    row["n"] = l.n;
    row["eisenstein"] = eisenstein_json(l.eisenstein);
    levels.push_back(row);
  }
  j["levels"] = levels;
  ordered_json wild = ordered_json::array();
  for (const TamePrimeRow& w : r.wild_primes) {
    ordered_json row;
    row["p"] = w.p.get_str();
    row["good_reduction"] = w.good_reduction;
    row["wild_forced"] = w.wild_forced;
    row["v_disc"] = w.v_disc;
    wild.push_back(row);
  }
  j["wild_primes"] = wild;
  j["tame_evidence"] = r.tame_evidence;
  return dump(j);
}

std::string json_graph(const FunctionalGraph& G) {
  ordered_json j;
  j["p"] = G.F->p.get_str();
  j["k"] = G.F->k;
  j["q"] = G.F->q.get_str();
  j["size"] = G.size;
  j["is_quotient"] = G.is_quotient;
  j["coeffs_in_prime_field"] = G.coeffs_in_prime_field;
  j["succ"] = G.succ;
  j["weight"] = G.weight;
  if (G.is_quotient) j["rep"] = G.rep;
  if (G.size <= kAdjacencyGuard) {
    ordered_json labels = ordered_json::array();
    for (std::uint64_t v = 0; v < G.size; ++v)
      labels.push_back(vertex_label(G, v));
    j["labels"] = labels;
  }
  return dump(j);
}

std::string json_graph_structure(const FunctionalGraph& G,
                                 const std::vector<Component>& comps,
                                 const SequencePeriod& seq) {
  ordered_json j;
  j["size"] = G.size;
  ordered_json arr = ordered_json::array();
  for (const Component& c : comps) {
    ordered_json row;
    row["vertices"] = c.vertices;
    row["cycle"] = c.cycle;
    row["cycle_length"] = c.cycle_length;
    row["max_tail"] = c.max_tail;
    arr.push_back(row);
  }
  j["components"] = arr;
  j["period"] = seq.period.get_str();
  j["stabilization"] = seq.stabilization;
  j["paper_preperiod"] = seq.paper_preperiod.get_str();
  j["preperiod_matches"] = seq.preperiod_matches;
  return dump(j);
}

std::string json_degree_table(const DegreeTable& t) {
  ordered_json j;
  j["p"] = t.p.get_str();
  j["t0"] = rat_string(t.t0);
  j["linear_only"] = t.linear_only;
  switch (t.s_status) {
    case SWarning::NotComputed: j["s_status"] = "not_computed"; break;
    case SWarning::InS: j["s_status"] = "in_s"; break;
    case SWarning::NotInS: j["s_status"] = "not_in_s"; break;
  }
  j["s_note"] = t.s_note;
  ordered_json rows = ordered_json::array();
  for (const DegreeTableRow& r : t.rows) {
    ordered_json row;
    row["n"] = r.n;
    row["degree"] = r.degree;
    row["squarefree"] = r.squarefree;
    row["census"] = count_map_json(r.census);
    row["distinct"] = count_map_json(r.distinct);
    rows.push_back(row);
  }
  j["rows"] = rows;
  return dump(j);
}

std::string json_crosscheck(const CrosscheckReport& r) {
  ordered_json j;
  j["p"] = r.p.get_str();
  j["all_match"] = r.all_match;
  j["non_squarefree_levels"] = r.non_squarefree_levels;
  ordered_json cells = ordered_json::array();
  for (const CrosscheckCell& c : r.cells) {
    ordered_json cell;
    cell["n"] = c.n;
    cell["k"] = c.k;
    cell["census"] = c.census_count;
    cell["graph"] = c.graph_count;
    cell["match"] = c.match;
    cells.push_back(cell);
  }
  j["cells"] = cells;
  return dump(j);
}

std::string json_quad_normal(const Rat& a, const Rat& b, const Rat& c,
                             const Rat& r) {
  ordered_json j;
  j["a"] = rat_string(a);
  j["b"] = rat_string(b);
  j["c"] = rat_string(c);
  j["r"] = rat_string(r);
  const RatPoly nf = RatPoly::from_coeffs({-r, Rat(0), Rat(1)});
  j["normal_form"] = poly_string(nf);
  return dump(j);
}

std::string json_cfsr(const RatPoly& f, const CfsrReport* report) {
  ordered_json j;
  j["phi"] = poly_string(f);
  ordered_json coeffs = ordered_json::array();
  for (const Rat& c : f.coeffs()) coeffs.push_back(rat_string(c));
  j["coefficients"] = coeffs;
  if (report) {
    j["identity_holds"] = report->identity_holds;
    j["critical_simple_fixed"] = report->critical_simple_fixed;
    j["critical_checked"] = report->critical_checked;
  }
  return dump(j);
}

std::string text_degree_table(const DegreeTable& t) {
  std::ostringstream out;
  out << "p = " << t.p.get_str() << ", t0 = " << rat_string(t.t0);
  if (t.linear_only) out << ", linear factors only";
  out << "\n";
  if (!t.s_note.empty()) out << "note: " << t.s_note << "\n";
  std::size_t deg_w = 6;
  for (const DegreeTableRow& r : t.rows)
    deg_w = std::max(deg_w, std::to_string(r.degree).size());
  out << std::setw(4) << "n" << "  " << std::setw(static_cast<int>(deg_w))
      << "degree" << "  factors k: distinct/total\n";
  for (const DegreeTableRow& r : t.rows) {
    out << std::setw(4) << r.n << "  " << std::setw(static_cast<int>(deg_w))
        << r.degree << " ";
    if (!r.squarefree) out << "*";
    else out << " ";
    for (const auto& [k, total] : r.census) {
      const auto it = r.distinct.find(k);
      const unsigned long dist = it == r.distinct.end() ? 0 : it->second;
      out << " " << k << ": " << dist << "/" << total;
    }
    if (r.census.empty()) out << " (no factors)";
    out << "\n";
  }
  if (std::any_of(t.rows.begin(), t.rows.end(),
                  [](const DegreeTableRow& r) { return !r.squarefree; }))
    out << "* repeated factors at this level\n";
  return out.str();
}

}  // namespace polydyn
