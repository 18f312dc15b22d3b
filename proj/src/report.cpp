#include "cubicpm/report.hpp"

#include <algorithm>

#include "cubicpm/brick_brace.hpp"
#include "cubicpm/canonical.hpp"
#include "cubicpm/formats.hpp"
#include "cubicpm/klee.hpp"
#include "cubicpm/named_graphs.hpp"

namespace cubicpm {
namespace {

TheoremCheck lower_bound(std::string tag, MatchingCount value, Rational bound, std::string note = "") {
  TheoremCheck c;
  c.tag = std::move(tag);
  c.value = Rational(value);
  c.bound = std::move(bound);
  c.satisfied = c.value >= *c.bound;
  c.note = std::move(note);
  return c;
}

TheoremCheck property(std::string tag, bool holds, Rational value, std::string note = "") {
  TheoremCheck c;
  c.tag = std::move(tag);
  c.value = std::move(value);
  c.satisfied = holds;
  c.note = std::move(note);
  return c;
}

nlohmann::ordered_json rational_json(const Rational& r) {
  if (denominator(r) == 1 && abs(numerator(r)) < boost::multiprecision::cpp_int(1) << 53)
    return static_cast<long long>(numerator(r));
  return to_string(r);
}

const std::string& exceptional_certificate() {
  static const std::string cert = canonical_form(named::exceptional_graph());
  return cert;
}

}  // namespace

bool BoundReport::all_satisfied() const {
  return std::all_of(checks.begin(), checks.end(), [](const TheoremCheck& c) { return c.satisfied; });
}

const TheoremCheck* BoundReport::find(const std::string& tag) const {
  for (const TheoremCheck& c : checks)
    if (c.tag == tag) return &c;
  return nullptr;
}

bool is_matching_covered(const MultiGraph& g) { return matching_profile(g).matching_covered; }

const char* to_string(CompanionResult::Status s) {
  switch (s) {
    case CompanionResult::Status::not_applicable: return "NOT_APPLICABLE";
    case CompanionResult::Status::found: return "FOUND";
    case CompanionResult::Status::not_found: return "NOT_FOUND";
  }
  return "?";
}

CompanionResult bipartite_companion_check(const MultiGraph& g, EdgeId e) {
  if (e < 0 || e >= g.edge_count()) throw GraphError("edge out of range");
  CompanionResult out;
  if (!g.is_cubic() || !g.is_connected() || !is_cyclically_k_edge_connected(g, 5)) return out;
  const std::array<EdgeId, 1> just_e{e};
  if (is_matching_covered(g.without_edges(just_e))) return out;
  out.status = CompanionResult::Status::not_found;
  for (EdgeId f = 0; f < g.edge_count(); ++f) {
    if (f == e) continue;
    const std::array<EdgeId, 2> both{std::min(e, f), std::max(e, f)};
    MultiGraph h = g.without_edges(both);
    if (h.is_bipartite() && is_matching_covered(h)) {
      out.status = CompanionResult::Status::found;
      out.companion = f;
      return out;
    }
  }
  return out;
}

BoundReport verify_graph(const MultiGraph& g, const std::string& id) {
  if (!g.is_cubic()) throw GraphError("verification needs a cubic graph");
  if (!g.is_connected()) throw GraphError("verification needs a connected graph");
  if (!bridges(g).empty()) throw GraphError("verification needs a bridgeless graph");

  BoundReport r;
  r.id = id;
  r.n = g.vertex_count();
  r.m = g.edge_count();
  const Rational n(r.n);
  const bool small = r.n <= kCanonicalVertexBound;
  std::string cert;
  if (small) {
    cert = canonical_form(g);
    r.canonical = to_sparse6(canonical_graph(g));
  }

  GraphInvariants& inv = r.invariants;
  inv.simple = g.is_simple();
  inv.bridgeless = true;
  inv.edge_connectivity = edge_connectivity(g);
  inv.cyclic_edge_connectivity = cyclic_edge_connectivity(g);
  inv.three_edge_connected = inv.edge_connectivity >= 3;
  inv.cyclically_4ec = !inv.cyclic_edge_connectivity || *inv.cyclic_edge_connectivity >= 4;
  inv.cyclically_5ec = !inv.cyclic_edge_connectivity || *inv.cyclic_edge_connectivity >= 5;
  inv.bipartite = g.is_bipartite();
  inv.klee = is_klee(g);
  inv.exceptional = small && cert == exceptional_certificate();

  MatchingProfile profile = matching_profile(g);
  r.pm_count = profile.total;
  Decomposition d = decompose(g);
  r.brick_count = d.brick_count;
  r.brace_count = d.brace_count;
  r.dim = r.m - r.n + 1 - d.brick_count;
  r.affine_dim = pm_affine_dimension(g);

  std::vector<MatchingCount> avoiding;
  for (EdgeId e = 0; e < r.m; ++e) avoiding.push_back(count_avoiding(g, e));
  const MatchingCount min_avoiding = avoiding.empty() ? 0 : *std::min_element(avoiding.begin(), avoiding.end());

  auto& checks = r.checks;
  const MatchingCount pm = r.pm_count;
  checks.push_back(lower_bound("pm_ge_quarter_n_plus_2", pm, n / 4 + 2));
  checks.push_back(lower_bound("pm_ge_half_n", pm, n / 2));
  if (inv.exceptional) {
    TheoremCheck c = lower_bound("exceptional_equality", pm, n / 2, "the one graph allowed to have exactly n/2");
    c.satisfied = c.value == n / 2;
    checks.push_back(c);
  } else {
    checks.push_back(lower_bound("pm_gt_half_n_unless_exceptional", pm, n / 2 + 1));
  }
  checks.push_back(lower_bound("pm_ge_three_quarter_n_minus_10", pm, 3 * n / 4 - 10));
  if (inv.three_edge_connected) checks.push_back(lower_bound("pm_ge_three_quarter_n_minus_9", pm, 3 * n / 4 - 9));
  if (inv.bipartite) checks.push_back(lower_bound("pm_ge_three_half_n_minus_9", pm, 3 * n / 2 - 9));
  if (inv.klee) checks.push_back(lower_bound("pm_ge_three_quarter_n_minus_6", pm, 3 * n / 4 - 6));
  if (inv.cyclically_5ec) {
    checks.push_back(lower_bound("pm_ge_three_quarter_n_minus_3_half", pm, 3 * n / 4 - Rational(3, 2)));
    checks.push_back(lower_bound("pm_minus_e_ge_half_n_minus_1", min_avoiding, n / 2 - 1, "minimum over all edges"));
    int needing = 0;
    int found = 0;
    for (EdgeId e = 0; e < r.m; ++e) {
      CompanionResult c = bipartite_companion_check(g, e);
      if (c.status == CompanionResult::Status::not_applicable) continue;
      ++needing;
      if (c.status == CompanionResult::Status::found) ++found;
    }
    if (needing > 0)
      checks.push_back(property("bipartite_companion", found == needing, found,
                                std::to_string(needing) + " edges with G-e not matching covered"));
  }
  if (inv.edge_connectivity == 2) checks.push_back(lower_bound("avoiding_ge_3", min_avoiding, 3, "minimum over all edges"));

  checks.push_back(property("matching_covered", profile.matching_covered, pm));
  checks.push_back(lower_bound("at_least_two_matchings", pm, 2));
  const bool is_k4 = small && r.n == 4 && inv.simple;
  if (inv.cyclically_4ec && !is_k4 && r.n >= 4)
    checks.push_back(property("double_covered_cyclically_4ec", profile.double_covered, pm));
  if (inv.three_edge_connected && !inv.klee && r.n >= 4)
    checks.push_back(property("double_covered_3ec_non_klee", profile.double_covered, pm));

  MatchingCount per_edge_sum = 0;
  bool additive = true;
  for (EdgeId e = 0; e < r.m; ++e) {
    per_edge_sum += profile.per_edge[static_cast<std::size_t>(e)];
    additive = additive && profile.per_edge[static_cast<std::size_t>(e)] + avoiding[static_cast<std::size_t>(e)] == pm;
  }
  checks.push_back(property("force_forbid_additivity", additive, pm));
  checks.push_back(property("per_edge_sum", per_edge_sum == pm * static_cast<MatchingCount>(r.n / 2), per_edge_sum,
                            "sum of per-edge counts equals n/2 times pm"));

  checks.push_back(property("dimension_matches_affine_rank", r.dim == r.affine_dim, r.dim));
  checks.push_back(lower_bound("pm_ge_dim_plus_1", pm, r.dim + 1));
  if (inv.bipartite) checks.push_back(property("bipartite_has_no_bricks", r.brick_count == 0, r.brick_count));
  if (!d.cut_trace.empty()) {
    bool all_three = std::all_of(d.cut_trace.begin(), d.cut_trace.end(), [](const Cut& c) { return c.size() == 3; });
    checks.push_back(property("tight_cuts_have_size_3", all_three, static_cast<long long>(d.cut_trace.size())));
  }
  auto cuts = enumerate_cuts(g, 4, true);
  if (!cuts.empty()) {
    BoundaryProfile bp = boundary_profile(g, cuts.front());
    checks.push_back(property("boundary_identity", bp.combined_count() == pm, bp.combined_count(),
                              "cut of size " + std::to_string(cuts.front().size())));
  }
  return r;
}

nlohmann::ordered_json to_json(const BoundReport& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["canonical"] = r.canonical.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.canonical);
  j["n"] = r.n;
  j["m"] = r.m;
  const GraphInvariants& inv = r.invariants;
  j["invariants"] = {
      {"simple", inv.simple},
      {"bridgeless", inv.bridgeless},
      {"edge_connectivity", inv.edge_connectivity},
      {"cyclic_edge_connectivity", inv.cyclic_edge_connectivity ? nlohmann::ordered_json(*inv.cyclic_edge_connectivity)
                                                                : nlohmann::ordered_json(nullptr)},
      {"three_edge_connected", inv.three_edge_connected},
      {"cyclically_4ec", inv.cyclically_4ec},
      {"cyclically_5ec", inv.cyclically_5ec},
      {"bipartite", inv.bipartite},
      {"klee", inv.klee},
      {"exceptional", inv.exceptional},
  };
  j["pm_count"] = r.pm_count;
  j["brick_count"] = r.brick_count;
  j["brace_count"] = r.brace_count;
  j["dim"] = r.dim;
  j["affine_dim"] = r.affine_dim;
  auto& checks = j["checks"] = nlohmann::ordered_json::array();
  for (const TheoremCheck& c : r.checks) {
    nlohmann::ordered_json cj;
    cj["tag"] = c.tag;
    cj["value"] = rational_json(c.value);
    cj["bound"] = c.bound ? rational_json(*c.bound) : nlohmann::ordered_json(nullptr);
    cj["slack"] = c.bound ? rational_json(*c.slack()) : nlohmann::ordered_json(nullptr);
    cj["satisfied"] = c.satisfied;
    if (!c.note.empty()) cj["note"] = c.note;
    checks.push_back(std::move(cj));
  }
  j["all_satisfied"] = r.all_satisfied();
  return j;
}

}  // namespace cubicpm
