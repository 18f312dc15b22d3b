// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Reference values come from the brute-force oracles in
// tests/oracles.hpp, which share nothing with the library beyond MultiGraph.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "cubicpm/bounds.hpp"
#include "cubicpm/brick_brace.hpp"
#include "cubicpm/canonical.hpp"
#include "cubicpm/catalog.hpp"
#include "cubicpm/connectivity.hpp"
#include "cubicpm/klee.hpp"
#include "cubicpm/matching.hpp"
#include "cubicpm/named_graphs.hpp"
#include "cubicpm/parallel.hpp"
#include "cubicpm/report.hpp"

using namespace cubicpm;

namespace {

// Collects the reasons a criterion failed; an empty list means PASS.
class Criterion {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failure_count_;
  }
  bool passed() const { return failure_count_ == 0; }
  std::string summary() const {
    std::string s;
    for (const auto& f : failures_) s += (s.empty() ? "" : "; ") + f;
    if (failure_count_ > failures_.size()) s += "; +" + std::to_string(failure_count_ - failures_.size()) + " more";
    return s;
  }

 private:
  std::vector<std::string> failures_;
  std::size_t failure_count_ = 0;
};

std::string graph_label(const MultiGraph& g) { return "n=" + std::to_string(g.vertex_count()) + " " + canonical_form(g); }

std::vector<MultiGraph> bridgeless_up_to(int max_n) {
  std::vector<MultiGraph> out;
  for (int n = 2; n <= max_n; n += 2)
    for (MultiGraph& g : generate_catalog(n, GraphClass::all_bridgeless_cubic)) out.push_back(std::move(g));
  return out;
}

void petersen_suite(Criterion& c) {
  const MultiGraph p = named::petersen();
  const auto masks = oracle::matching_masks(p);
  const std::uint64_t expected = masks.size();
  c.require(expected == 6, "oracle pm != 6");
  c.require(count_perfect_matchings(p) == expected, "pm != oracle");

  MatchingProfile prof = matching_profile(p);
  for (EdgeId e = 0; e < p.edge_count(); ++e) {
    const auto through = oracle::count_matchings(masks, {e});
    c.require(through == 2 && prof.per_edge[static_cast<std::size_t>(e)] == through, "per-edge count of edge " + std::to_string(e));
    const auto avoid = oracle::count_matchings(masks, {}, {e});
    c.require(avoid == 4 && count_avoiding(p, e) == avoid, "forbidding edge " + std::to_string(e));
  }

  const auto cyc = cyclic_edge_connectivity(p);
  c.require(cyc && *cyc == 5 && cyc == oracle::cyclic_connectivity(p), "cyclic edge connectivity");

  BoundReport r = verify_graph(p, "petersen");
  const TheoremCheck* cor = r.find("pm_ge_three_quarter_n_minus_3_half");
  c.require(cor && cor->satisfied && cor->slack() == Rational(0), "3n/4-3/2 with slack 0");
  const TheoremCheck* minus_e = r.find("pm_minus_e_ge_half_n_minus_1");
  c.require(minus_e && minus_e->satisfied && minus_e->slack() == Rational(0), "n/2-1 after forbidding an edge, slack 0");
  c.require(r.all_satisfied(), "some applicable check failed");

  Decomposition d = decompose(p);
  c.require(d.brick_count == 1 && d.brace_count == 0, "b != 1");
  c.require(polytope_dimension(p) == 5 && pm_affine_dimension(p) == 5, "dim != affine rank != 5");
}

void exceptional_suite(Criterion& c) {
  const MultiGraph x = named::exceptional_graph();
  c.require(x.vertex_count() == 12, "exceptional graph order");
  c.require(count_perfect_matchings(x) == 6 && oracle::count_matchings(x) == 6, "pm != 6");

  const std::string cert = canonical_form(x);
  int equality_cases = 0;
  for (const MultiGraph& g : bridgeless_up_to(12)) {
    const MatchingCount pm = count_perfect_matchings(g);
    c.require(2 * pm >= static_cast<MatchingCount>(g.vertex_count()), "pm < n/2 on " + graph_label(g));
    if (2 * pm == static_cast<MatchingCount>(g.vertex_count())) {
      ++equality_cases;
      c.require(canonical_form(g) == cert, "pm = n/2 on " + graph_label(g));
    }
  }
  c.require(equality_cases == 1, "equality cases: " + std::to_string(equality_cases));
}

void table_suite(Criterion& c) {
  const BipartiteBoundTable t = bound_table(8);
  const std::vector<std::int64_t> g{4, 6, 8, 11, 15, 20};
  const std::vector<std::int64_t> f{6, 9, 12, 17, 23, 30};
  for (int k = 3; k <= 8; ++k) {
    const auto i = static_cast<std::size_t>(k - 3);
    c.require(t.g.at(k) == g[i], "g(" + std::to_string(k) + ")");
    c.require(t.f.at(k) == f[i], "f(" + std::to_string(k) + ")");
  }
}

void bipartite_suite(Criterion& c) {
  int graphs = 0;
  for (int n = 2; n <= 12; n += 2) {
    for (const MultiGraph& g : generate_catalog(n, GraphClass::bipartite)) {
      ++graphs;
      const auto pm = static_cast<std::int64_t>(count_perfect_matchings(g));
      c.require(2 * pm >= 3 * n - 18, "pm < 3n/2-9 on " + graph_label(g));
    }
  }
  c.require(graphs > 0, "no bipartite graphs generated");
}

void main_theorem_suite(Criterion& c) {
  for (int n = 2; n <= kMaxCatalogOrder; n += 2) {
    for (const MultiGraph& g : generate_catalog(n, GraphClass::all_bridgeless_cubic)) {
      const auto pm = static_cast<std::int64_t>(count_perfect_matchings(g));
      c.require(4 * pm >= 3 * n - 40, "pm < 3n/4-10 on " + graph_label(g));
      if (is_k_edge_connected(g, 3)) c.require(4 * pm >= 3 * n - 36, "pm < 3n/4-9 on " + graph_label(g));
    }
  }
  for (int n = 4; n <= 14; n += 2) {
    for (const KleeClass& k : enumerate_klee(n)) {
      const auto pm = static_cast<std::int64_t>(count_perfect_matchings(k.graph));
      c.require(4 * pm >= 3 * n - 24, "pm < 3n/4-6 on klee " + graph_label(k.graph));
    }
  }
}

void polytope_suite(Criterion& c) {
  for (const MultiGraph& g : bridgeless_up_to(10)) {
    const int dim = polytope_dimension(g);
    const int rank = pm_affine_dimension(g);
    c.require(dim == rank, "dim " + std::to_string(dim) + " vs rank " + std::to_string(rank) + " on " + graph_label(g));
  }
}

void klee_suite(Criterion& c) {
  std::size_t pairs = 0;
  for (int n = 4; n <= 14; n += 2) {
    for (const KleeClass& k : enumerate_klee(n)) {
      for (VertexId v = 0; v < k.graph.vertex_count(); ++v) {
        ExpansionReport r = expand_and_check(k.graph, v);
        ++pairs;
        c.require(r.recurrence_holds, "m(G after expansion) != m(G) + omega on " + graph_label(k.graph));
        c.require(r.new_types_hold, "type update formulas on " + graph_label(k.graph));
      }
    }
  }
  c.require(pairs > 0, "no expansions checked");

  const auto& ten = enumerate_klee(10);
  std::multiset<MatchingCount> pms;
  for (const KleeClass& k : ten) pms.insert(count_perfect_matchings(k.graph));
  c.require(ten.size() == 3, "klee classes at n=10: " + std::to_string(ten.size()));
  c.require(pms == std::multiset<MatchingCount>{6, 6, 7}, "pm multiset at n=10");

  for (int n = 12; n <= kMaxKleeOrder; n += 2)
    for (const KleeClass& k : enumerate_klee(n))
      for (const KleeVertexType& t : vertex_types(k.graph))
        c.require(t.cls != VertexClass::dangerous, "dangerous vertex on " + graph_label(k.graph));

  bool found = false;
  for (const KleeClass& k : enumerate_klee(12)) {
    KleeStats s = klee_stats(k.graph);
    if (s.m == 10 && s.alpha == 4 && s.beta == 6) found = found || s.potential == Rational(3);
  }
  c.require(found, "no 12-vertex class with (m, alpha, beta) = (10, 4, 6)");
}

EdgeConstraints random_constraints(const MultiGraph& g, std::mt19937& rng) {
  const int m = g.edge_count();
  std::uniform_int_distribution<int> pick_edge(0, m - 1);
  std::uniform_int_distribution<int> pick_size(0, 2);
  EdgeConstraints c;
  VertexSet covered;
  for (int i = pick_size(rng); i > 0; --i) {
    const EdgeId e = pick_edge(rng);
    const Edge& ed = g.edge(e);
    if (covered.contains(ed.u) || covered.contains(ed.v)) continue;
    covered.insert(ed.u);
    covered.insert(ed.v);
    c.forced.push_back(e);
  }
  for (int i = pick_size(rng); i > 0; --i) {
    const EdgeId e = pick_edge(rng);
    if (std::find(c.forced.begin(), c.forced.end(), e) != c.forced.end()) continue;
    if (std::find(c.forbidden.begin(), c.forbidden.end(), e) != c.forbidden.end()) continue;
    c.forbidden.push_back(e);
  }
  return c;
}

void oracle_suite(Criterion& c) {
  std::mt19937 rng(20240611);
  for (int n = 2; n <= 10; n += 2) {
    for (const MultiGraph& g : connected_cubic_multigraphs(n)) {
      const auto masks = oracle::matching_masks(g);
      c.require(count_perfect_matchings(g) == masks.size(), "unconstrained count on " + graph_label(g));
      for (int trial = 0; trial < 100; ++trial) {
        EdgeConstraints k = random_constraints(g, rng);
        const std::vector<int> forced(k.forced.begin(), k.forced.end());
        const std::vector<int> forbidden(k.forbidden.begin(), k.forbidden.end());
        c.require(count_perfect_matchings(g, k) == oracle::count_matchings(masks, forced, forbidden),
                  "constrained count on " + graph_label(g));
      }
    }
  }
}

void cut_identity_suite(Criterion& c) {
  struct Sample {
    MultiGraph g;
    Cut cut;
  };
  std::vector<Sample> pool;
  for (int n = 6; n <= 12; n += 2)
    for (const MultiGraph& g : generate_catalog(n, GraphClass::all_bridgeless_cubic))
      for (Cut& cut : enumerate_cuts(g, 4))
        if (cut.size() >= 3) pool.push_back({g, std::move(cut)});
  c.require(pool.size() >= 200, "fewer than 200 (graph, cut) pairs available");

  std::mt19937 rng(977);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(std::min<std::size_t>(pool.size(), 200));

  int completions = 0;
  for (const Sample& s : pool) {
    const auto pm = oracle::count_matchings(s.g);
    BoundaryProfile prof = boundary_profile(s.g, s.cut);
    c.require(prof.combined_count() == pm, "sum over X of m_a m_b != pm on " + graph_label(s.g));
    if (s.cut.size() != 4) continue;

    auto attach = cut_attachments(s.g, s.cut.swapped());
    std::set<VertexId> distinct(attach.begin(), attach.end());
    if (distinct.size() != 4) continue;
    const std::array<CutPairing, 3> pairings{{{{{0, 1}, {2, 3}}}, {{{0, 2}, {1, 3}}}, {{{0, 3}, {1, 2}}}}};
    for (const CutPairing& p : pairings) {
      // x takes b_i, b_j and y takes b_k, b_l; x y covers both or each matches one attachment
      const MultiGraph completed = four_cut_completion_vertices(s.g, s.cut.swapped(), p);
      const int i = p[0][0], j = p[0][1], k = p[1][0], l = p[1][1];
      auto mb = [&](int a, int b) { return prof.m_b[(1U << a) | (1U << b)]; };
      const MatchingCount predicted = mb(i, k) + mb(i, l) + mb(j, k) + mb(j, l) + prof.m_b[0];
      c.require(oracle::count_matchings(completed) == predicted, "completion identity on " + graph_label(s.g));
      ++completions;
    }
  }
  c.require(completions > 0, "no completion identity exercised");
}

void two_cut_suite(Criterion& c) {
  int graphs = 0;
  for (int n = 2; n <= kMaxCatalogOrder; n += 2) {
    for (const MultiGraph& g : generate_catalog(n, GraphClass::all_bridgeless_cubic)) {
      if (edge_connectivity(g) != 2) continue;
      ++graphs;
      for (EdgeId e = 0; e < g.edge_count(); ++e)
        c.require(count_avoiding(g, e) >= 3, "fewer than 3 matchings avoid edge " + std::to_string(e) + " on " + graph_label(g));
    }
  }
  c.require(graphs > 0, "no graph with a 2-edge-cut");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Criterion&)>>> criteria{
      {"Petersen suite", petersen_suite},
      {"exceptional graph is the unique n/2 case (n <= 12)", exceptional_suite},
      {"bipartite bound table", table_suite},
      {"bipartite bound 3n/2-9 (n <= 12)", bipartite_suite},
      {"3n/4-10, 3n/4-9 and klee 3n/4-6 sweeps (n <= 14)", main_theorem_suite},
      {"polytope dimension equals affine rank (n <= 10)", polytope_suite},
      {"klee expansion calculus (n <= 14)", klee_suite},
      {"counter matches brute force with constraints (n <= 10)", oracle_suite},
      {"cut sum and 4-cut completion identities", cut_identity_suite},
      {"2-edge-cut graphs: >= 3 matchings avoid each edge (n <= 14)", two_cut_suite},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %zu %s (%.1fs)%s%s\n", c.passed() ? "PASS" : "FAIL", i + 1, criteria[i].first, secs,
                c.passed() ? "" : ": ", c.summary().c_str());
    std::fflush(stdout);
    if (!c.passed()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
