#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polydyn/finitefield.hpp"

namespace polydyn {

// Directed graph of x -> phi(x) on F_{p^k}. Vertices are element indices;
// weight is the Frobenius orbit size (element degree over F_p). A quotient
// graph collapses Frobenius orbits: vertex weights become orbit sizes and
// rep holds the minimal element index of each orbit.
struct FunctionalGraph {
  FieldPtr F;
  std::uint64_t size = 0;
  std::vector<std::uint32_t> succ;
  std::vector<std::uint32_t> weight;
  bool is_quotient = false;
  bool coeffs_in_prime_field = true;
  std::vector<std::uint64_t> rep;  // quotient only
};

inline constexpr std::uint64_t kGraphSizeGuard = 1ull << 26;
inline constexpr std::uint64_t kAdjacencyGuard = 2048;

FunctionalGraph build_graph(FieldPtr F, const PrimePoly& fbar);
FunctionalGraph build_graph(FieldPtr F, const FFPoly& fbar);

std::string vertex_label(const FunctionalGraph& G, std::uint64_t v);

// Dense 0/1 matrix M[i][j] = 1 iff phi(i) = j; guarded to small fields.
std::vector<std::vector<std::uint8_t>> adjacency_matrix(const FunctionalGraph& G);

// Number of length-n directed paths ending at target, i.e. |phi^{-n}(target)|
// counted over vertices; the weighted variant restricts to weight w vertices.
std::uint64_t path_count(const FunctionalGraph& G, unsigned long n,
                         std::uint64_t target);
std::uint64_t path_count_weighted(const FunctionalGraph& G, unsigned long n,
                                  std::uint64_t target, std::uint32_t w);

struct Component {
  std::vector<std::uint64_t> vertices;   // ascending
  std::vector<std::uint64_t> cycle;      // along succ, from min cycle vertex
  unsigned long cycle_length = 1;
  unsigned long max_tail = 0;            // longest arm into the cycle
};
std::vector<Component> component_structure(const FunctionalGraph& G);

// Successor-power maps succ_n stabilize into period P = lcm of cycle lengths:
// succ_{n+P} = succ_n exactly when the image of succ_n lies on the cycles,
// because succ^P fixes precisely the cycle vertices. stabilization is the
// least such n >= 1; paper_preperiod is the lcm of the longest arm per
// component (components without arms contribute 1).
struct SequencePeriod {
  Int period;
  unsigned long stabilization = 1;
  Int paper_preperiod;
  bool preperiod_matches = false;  // paper_preperiod == stabilization
};
SequencePeriod graph_sequence_period(const FunctionalGraph& G);

// Frobenius-orbit quotient; requires the defining coefficients in F_p.
FunctionalGraph quotient_graph(const FunctionalGraph& G);

// Number of degree-k primes above t0 at level n: weight-k vertices mapping to
// t0bar under succ^n, divided by k. A non-integral division reports internal
// inconsistency.
std::uint64_t prime_degree_counts(FieldPtr F_k, const PrimePoly& fbar,
                                  std::uint64_t t0bar, unsigned long n);

// Census rows for Phi_n(x, t0) over F_p, n = 1..n_max.
struct DegreeTableRow {
  unsigned long n = 1;
  std::map<unsigned long, unsigned long> census;    // with multiplicity
  std::map<unsigned long, unsigned long> distinct;
  bool squarefree = true;
  unsigned long degree = 0;
};
enum class SWarning { NotComputed, InS, NotInS };
struct DegreeTable {
  Int p;
  Rat t0;
  std::vector<DegreeTableRow> rows;
  bool linear_only = false;
  SWarning s_status = SWarning::NotComputed;
  std::string s_note;
};
struct DegreeTableOptions {
  bool linear_only = false;
  // Rational map the reduction came from; enables the S membership warning.
  std::optional<RatPoly> phi_rational;
  std::optional<Rat> t0_rational;
};
DegreeTable degree_table(const PrimePoly& fbar, std::uint64_t t0bar,
                         unsigned long n_max,
                         const DegreeTableOptions& opts = {});

// Factor-degree counts from the census against path counts in the graphs
// over F_{p^k}, all (n, k) cells. Census side uses distinct factors; rows
// with repeated factors are flagged since the two sides can then disagree
// by multiplicity.
struct CrosscheckCell {
  unsigned long n = 1;
  unsigned long k = 1;
  std::uint64_t census_count = 0;
  std::uint64_t graph_count = 0;
  bool match = false;
};
struct CrosscheckReport {
  Int p;
  std::vector<CrosscheckCell> cells;
  std::vector<unsigned long> non_squarefree_levels;
  bool all_match = false;
};
CrosscheckReport splitting_crosscheck(const PrimePoly& fbar,
                                      std::uint64_t t0bar,
                                      unsigned long n_max, unsigned long k_max,
                                      unsigned jobs = 1);

// GraphViz rendering; highlight marks a vertex (the reduced t0), weights
// label multi-element orbits.
std::string dot_export(const FunctionalGraph& G,
                       std::optional<std::uint64_t> highlight = std::nullopt);

}  // namespace polydyn
