#include "polydyn/fungraph.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "polydyn/discrim.hpp"

namespace polydyn {

namespace {

void check_graph_size(const FieldCtx& F) {
  if (!F.q_fits || F.qu > kGraphSizeGuard)
    throw SizeGuardExceeded("field size exceeds graph guard 2^26");
}

FunctionalGraph build_common(FieldPtr F, const FFPoly& fbar,
                             bool prime_coeffs) {
  check_graph_size(*F);
  if (ffp_degree(fbar) < 1)
    throw Error("graph needs a map of degree >= 1");
  FunctionalGraph G;
  G.F = F;
  G.size = F->qu;
  G.coeffs_in_prime_field = prime_coeffs;
  G.succ.resize(G.size);
  G.weight.resize(G.size);
  for (std::uint64_t i = 0; i < G.size; ++i) {
    const FFElem x = ff_from_index(*F, i);
    G.succ[i] = static_cast<std::uint32_t>(ff_index(*F, ffp_eval(fbar, x)));
    G.weight[i] = element_degree(*F, x);
  }
  return G;
}

}  // namespace

FunctionalGraph build_graph(FieldPtr F, const PrimePoly& fbar) {
  if (F->pu != fbar.p) throw InternalError("characteristic mismatch");
  return build_common(F, ffp_from_prime(F, fbar), true);
}

FunctionalGraph build_graph(FieldPtr F, const FFPoly& fbar) {
  bool prime_coeffs = true;
  for (std::size_t i = 0; i < fbar.coeff_count(); ++i) {
    FFElem c = ffp_coeff(fbar, i);
    bool constant_digit = true;
    for (unsigned t = 1; t < F->k; ++t)
      if (c.a[t]) constant_digit = false;
    if (!constant_digit) prime_coeffs = false;
  }
  return build_common(F, fbar, prime_coeffs);
}

std::string vertex_label(const FunctionalGraph& G, std::uint64_t v) {
  const std::uint64_t elem = G.is_quotient ? G.rep[v] : v;
  return ff_name(*G.F, ff_from_index(*G.F, elem));
}

std::vector<std::vector<std::uint8_t>> adjacency_matrix(
    const FunctionalGraph& G) {
  if (G.size > kAdjacencyGuard)
    throw SizeGuardExceeded("adjacency matrix guarded to " +
                            std::to_string(kAdjacencyGuard) + " vertices");
  std::vector<std::vector<std::uint8_t>> M(
      G.size, std::vector<std::uint8_t>(G.size, 0));
  for (std::uint64_t v = 0; v < G.size; ++v) M[v][G.succ[v]] = 1;
  return M;
}

std::uint64_t path_count(const FunctionalGraph& G, unsigned long n,
                         std::uint64_t target) {
  return path_count_weighted(G, n, target, 0);
}

std::uint64_t path_count_weighted(const FunctionalGraph& G, unsigned long n,
                                  std::uint64_t target, std::uint32_t w) {
  if (target >= G.size) throw Error("target vertex out of range");
  // mark[v] = 1 iff succ^i(v) == target; pull through succ n times
  std::vector<std::uint8_t> mark(G.size, 0), next(G.size);
  mark[target] = 1;
  for (unsigned long i = 0; i < n; ++i) {
    for (std::uint64_t v = 0; v < G.size; ++v) next[v] = mark[G.succ[v]];
    mark.swap(next);
  }
  std::uint64_t count = 0;
  for (std::uint64_t v = 0; v < G.size; ++v)
    if (mark[v] && (w == 0 || G.weight[v] == w)) ++count;
  return count;
}

std::vector<Component> component_structure(const FunctionalGraph& G) {
  const std::uint64_t N = G.size;
  std::vector<std::uint8_t> state(N, 0);  // 0 new, 1 on path, 2 done
  std::vector<std::uint32_t> comp(N, 0), depth(N, 0), order(N, 0);
  std::vector<std::uint8_t> on_cycle(N, 0);
  std::uint32_t comp_count = 0;
  std::vector<std::uint64_t> path;
  for (std::uint64_t v0 = 0; v0 < N; ++v0) {
    if (state[v0]) continue;
    path.clear();
    std::uint64_t v = v0;
    while (state[v] == 0) {
      state[v] = 1;
      order[v] = static_cast<std::uint32_t>(path.size());
      path.push_back(v);
      v = G.succ[v];
    }
    std::size_t tail_top = path.size();
    std::uint32_t cid;
    if (state[v] == 1) {  // new cycle inside the current path
      cid = comp_count++;
      const std::size_t pos = order[v];
      for (std::size_t i = pos; i < path.size(); ++i) {
        const std::uint64_t u = path[i];
        comp[u] = cid;
        depth[u] = 0;
        on_cycle[u] = 1;
        state[u] = 2;
      }
      tail_top = pos;
    } else {
      cid = comp[v];
    }
    for (std::size_t i = tail_top; i-- > 0;) {
      const std::uint64_t u = path[i];
      comp[u] = cid;
      depth[u] = depth[G.succ[u]] + 1;
      state[u] = 2;
    }
  }

  std::vector<Component> out(comp_count);
  for (std::uint64_t v = 0; v < N; ++v) {
    Component& c = out[comp[v]];
    c.vertices.push_back(v);
    if (!on_cycle[v] && depth[v] > c.max_tail) c.max_tail = depth[v];
  }
  for (std::uint32_t cid = 0; cid < comp_count; ++cid) {
    Component& c = out[cid];
    std::uint64_t start = 0;
    bool found = false;
    for (std::uint64_t v : c.vertices)
      if (on_cycle[v]) {
        start = v;
        found = true;
        break;
      }
    if (!found) throw InternalError("component without a cycle");
    std::uint64_t v = start;
    do {
      c.cycle.push_back(v);
      v = G.succ[v];
    } while (v != start);
    c.cycle_length = c.cycle.size();
  }
  return out;
}

SequencePeriod graph_sequence_period(const FunctionalGraph& G) {
  const auto comps = component_structure(G);
  SequencePeriod out;
  out.period = 1;
  out.paper_preperiod = 1;
  unsigned long expected_stab = 1;
  std::vector<std::uint8_t> on_cycle(G.size, 0);
  for (const auto& c : comps) {
    out.period = lcm(out.period, Int(c.cycle_length));
    out.paper_preperiod =
        lcm(out.paper_preperiod, Int(std::max<unsigned long>(c.max_tail, 1)));
    expected_stab = std::max<unsigned long>(expected_stab, c.max_tail);
    for (std::uint64_t v : c.cycle) on_cycle[v] = 1;
  }
  // succ^P fixes exactly the cycle vertices, so succ_{n+P} == succ_n iff the
  // image of succ_n lies on the cycles; scan n upward until that holds.
  std::vector<std::uint32_t> m(G.succ);
  unsigned long n = 1;
  while (true) {
    bool stable = true;
    for (std::uint64_t v = 0; v < G.size && stable; ++v)
      if (!on_cycle[m[v]]) stable = false;
    if (stable) break;
    for (std::uint64_t v = 0; v < G.size; ++v) m[v] = G.succ[m[v]];
    ++n;
    if (n > G.size + 1) throw InternalError("stabilization scan ran away");
  }
  out.stabilization = n;
  if (n != std::max<unsigned long>(expected_stab, 1))
    throw InternalError("stabilization disagrees with arm depth");
  out.preperiod_matches = (out.paper_preperiod == Int(out.stabilization));
  return out;
}

FunctionalGraph quotient_graph(const FunctionalGraph& G) {
  if (G.is_quotient) throw Error("graph is already a quotient");
  if (!G.coeffs_in_prime_field)
    throw CoefficientsNotInPrimeField(
        "Frobenius only commutes with maps defined over F_p");
  const FieldCtx& F = *G.F;
  std::vector<std::uint32_t> orbit_of(G.size, 0);
  std::vector<std::uint8_t> seen(G.size, 0);
  std::vector<std::uint64_t> reps;
  std::vector<std::uint32_t> sizes;
  for (std::uint64_t v = 0; v < G.size; ++v) {
    if (seen[v]) continue;
    const std::uint32_t id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(v);
    std::uint32_t size = 0;
    FFElem e = ff_from_index(F, v);
    std::uint64_t u = v;
    do {
      seen[u] = 1;
      orbit_of[u] = id;
      ++size;
      e = ff_frobenius(F, e);
      u = ff_index(F, e);
    } while (u != v);
    sizes.push_back(size);
  }
  FunctionalGraph Q;
  Q.F = G.F;
  Q.size = reps.size();
  Q.is_quotient = true;
  Q.coeffs_in_prime_field = true;
  Q.rep = std::move(reps);
  Q.succ.resize(Q.size);
  Q.weight.resize(Q.size);
  for (std::uint64_t i = 0; i < Q.size; ++i) {
    Q.succ[i] = orbit_of[G.succ[Q.rep[i]]];
    Q.weight[i] = sizes[i];
  }
  return Q;
}

std::uint64_t prime_degree_counts(FieldPtr F_k, const PrimePoly& fbar,
                                  std::uint64_t t0bar, unsigned long n) {
  const FunctionalGraph G = build_graph(F_k, fbar);
  const unsigned long k = F_k->k;
  const std::uint64_t N =
      path_count_weighted(G, n, t0bar, static_cast<std::uint32_t>(k));
  if (N % k != 0)
    throw NonIntegerCount("path count " + std::to_string(N) +
                          " not divisible by " + std::to_string(k));
  return N / k;
}

DegreeTable degree_table(const PrimePoly& fbar, std::uint64_t t0bar,
                         unsigned long n_max, const DegreeTableOptions& opts) {
  const std::uint64_t p = fbar.p;
  if (modp::degree(fbar.c) < 1)
    throw Error("tower rows need a reduced map of degree >= 1");
  if (t0bar >= p) throw Error("t0 residue out of range");
  DegreeTable out;
  out.p = Int(static_cast<unsigned long>(p));
  out.t0 = Rat(static_cast<unsigned long>(t0bar));
  out.linear_only = opts.linear_only;

  FieldPtr F = make_field(Int(static_cast<unsigned long>(p)), 1);
  modp::FpPoly g{0, 1};  // phi^n, built up by composition
  modp::trim(g);
  for (unsigned long n = 1; n <= n_max; ++n) {
    g = modp::compose(fbar.c, g, p);
    modp::FpPoly f = g;
    if (f.empty()) f.push_back(0);
    f[0] = (f[0] + p - t0bar) % p;
    modp::trim(f);
    DegreeTableRow row;
    row.n = n;
    row.degree = static_cast<unsigned long>(std::max(modp::degree(f), 0));
    FFPoly fq = ffp_from_prime(F, PrimePoly{p, f});
    if (opts.linear_only) {
      LinearCount lin = count_linear_factors(fq);
      if (lin.with_multiplicity) row.census[1] = lin.with_multiplicity;
      if (lin.distinct) row.distinct[1] = lin.distinct;
      row.squarefree = (lin.with_multiplicity == lin.distinct);
    } else {
      DegreeCensus census = ddf_census(fq);
      row.squarefree = census.squarefree();
      row.census = std::move(census.entries);
      row.distinct = std::move(census.distinct);
    }
    out.rows.push_back(std::move(row));
  }

  if (opts.phi_rational && opts.t0_rational) {
    try {
      RamifiedSet S = ramified_set(*opts.phi_rational, *opts.t0_rational);
      const bool in =
          std::binary_search(S.primes.begin(), S.primes.end(), out.p, IntLess{});
      out.s_status = in ? SWarning::InS : SWarning::NotInS;
      out.s_note = in ? "p lies in S: splitting data may misrepresent ramified behavior"
                      : "p is outside S";
    } catch (const Error& e) {
      out.s_status = SWarning::NotComputed;
      out.s_note = std::string("S not computed: ") + e.what();
    }
  }
  return out;
}

CrosscheckReport splitting_crosscheck(const PrimePoly& fbar,
                                      std::uint64_t t0bar,
                                      unsigned long n_max, unsigned long k_max,
                                      unsigned jobs) {
  CrosscheckReport out;
  out.p = Int(static_cast<unsigned long>(fbar.p));
  DegreeTable table = degree_table(fbar, t0bar, n_max);
  for (const auto& row : table.rows)
    if (!row.squarefree) out.non_squarefree_levels.push_back(row.n);

  // graph side: per extension degree k, count weight-k preimages of t0bar
  std::vector<std::vector<std::uint64_t>> graph_counts(
      k_max + 1, std::vector<std::uint64_t>(n_max + 1, 0));
  std::vector<std::exception_ptr> errors(k_max + 1);
  auto run_k = [&](unsigned long k) {
    try {
      FieldPtr F = make_field(Int(static_cast<unsigned long>(fbar.p)),
                              static_cast<unsigned>(k));
      const FunctionalGraph G = build_graph(F, fbar);
      std::vector<std::uint8_t> mark(G.size, 0), next(G.size);
      mark[t0bar] = 1;
      for (unsigned long n = 1; n <= n_max; ++n) {
        for (std::uint64_t v = 0; v < G.size; ++v) next[v] = mark[G.succ[v]];
        mark.swap(next);
        std::uint64_t N = 0;
        for (std::uint64_t v = 0; v < G.size; ++v)
          if (mark[v] && G.weight[v] == k) ++N;
        if (N % k != 0)
          throw NonIntegerCount("path count " + std::to_string(N) +
                                " not divisible by " + std::to_string(k));
        graph_counts[k][n] = N / k;
      }
    } catch (...) {
      errors[k] = std::current_exception();
    }
  };
  if (jobs <= 1) {
    for (unsigned long k = 1; k <= k_max; ++k) run_k(k);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w)
      pool.emplace_back([&, w] {
        for (unsigned long k = 1 + w; k <= k_max; k += jobs) run_k(k);
      });
    for (auto& t : pool) t.join();
  }
  for (unsigned long k = 1; k <= k_max; ++k)
    if (errors[k]) std::rethrow_exception(errors[k]);

  out.all_match = true;
  for (unsigned long n = 1; n <= n_max; ++n) {
    const auto& row = table.rows[n - 1];
    for (unsigned long k = 1; k <= k_max; ++k) {
      CrosscheckCell cell;
      cell.n = n;
      cell.k = k;
      auto it = row.distinct.find(k);
      cell.census_count = it == row.distinct.end() ? 0 : it->second;
      cell.graph_count = graph_counts[k][n];
      cell.match = (cell.census_count == cell.graph_count);
      if (!cell.match) out.all_match = false;
      out.cells.push_back(cell);
    }
  }
  return out;
}

std::string dot_export(const FunctionalGraph& G,
                       std::optional<std::uint64_t> highlight) {
  std::string out = "digraph functional_graph {\n  rankdir=LR;\n";
  for (std::uint64_t v = 0; v < G.size; ++v) {
    const bool hl = highlight && *highlight == v;
    const bool weighted = G.weight[v] > 1;
    if (!hl && !weighted) continue;
    out += "  \"" + vertex_label(G, v) + "\" [";
    if (weighted) {
      out += "label=\"" + vertex_label(G, v) + " (w" +
             std::to_string(G.weight[v]) + ")\"";
      if (hl) out += ", ";
    }
    if (hl) out += "style=filled, fillcolor=lightgray";
    out += "];\n";
  }
  for (std::uint64_t v = 0; v < G.size; ++v)
    out += "  \"" + vertex_label(G, v) + "\" -> \"" +
           vertex_label(G, G.succ[v]) + "\";\n";
  out += "}\n";
  return out;
}

}  // namespace polydyn
