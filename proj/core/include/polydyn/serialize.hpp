#pragma once

#include <optional>
#include <string>

#include "polydyn/discrim.hpp"
#include "polydyn/dynamics.hpp"
#include "polydyn/fungraph.hpp"
#include "polydyn/resultant.hpp"

namespace polydyn {

// JSON renderings with stable key order; strings carry exact values.
std::string json_pcf(const PcfVerdict& v);
std::string json_disc(const DiscPoly& d);
std::string json_disc_pair(const DiscPoly& recursive, const DiscPoly& direct);
std::string json_disc_at(const RatPoly& phi, unsigned n, const Rat& t0,
                         const Rat& disc);
std::string json_ramified(const RamifiedSet& s);
std::string json_wild(const WildReport& w);
std::string json_root_disc(const std::vector<RootDiscRow>& rows);
std::string json_eisenstein(const Rat& t0, unsigned n,
                            const std::optional<EisensteinCert>& cert);
std::string json_monogenic(const MonogenicCert& cert);
std::string json_tame(const TameReport& r);
std::string json_graph(const FunctionalGraph& G);
std::string json_graph_structure(const FunctionalGraph& G,
                                 const std::vector<Component>& comps,
                                 const SequencePeriod& seq);
std::string json_degree_table(const DegreeTable& t);
std::string json_crosscheck(const CrosscheckReport& r);
std::string json_quad_normal(const Rat& a, const Rat& b, const Rat& c,
                             const Rat& r);
std::string json_cfsr(const RatPoly& f, const CfsrReport* report);

// Fixed-width text table for census rows.
std::string text_degree_table(const DegreeTable& t);

}  // namespace polydyn
