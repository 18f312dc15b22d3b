#include "cubicpm/klee.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "cubicpm/brick_brace.hpp"
#include "cubicpm/canonical.hpp"
#include "cubicpm/connectivity.hpp"
#include "cubicpm/named_graphs.hpp"

namespace cubicpm {
namespace {

void require_cubic_connected(const MultiGraph& g, const char* what) {
  if (!g.is_cubic()) throw GraphError(std::string(what) + " needs a cubic graph");
  if (!g.is_connected()) throw GraphError(std::string(what) + " needs a connected graph");
}

VertexSet neighbour_set(const MultiGraph& g, VertexId v) {
  VertexSet out;
  for (EdgeId e : g.incident(v)) out.insert(g.edge(e).other(v));
  return out;
}

VertexSet as_set(const std::array<VertexId, 3>& t) { return VertexSet{t[0], t[1], t[2]}; }

KleeVertexType type_with(MatchingCounter& counter, const MultiGraph& g, VertexId v) {
  if (g.degree(v) != 3) throw GraphError("vertex type needs a vertex of degree 3");
  KleeVertexType t;
  auto inc = g.incident(v);
  for (int i = 0; i < 3; ++i) t.neighbours[static_cast<std::size_t>(i)] = g.edge(inc[static_cast<std::size_t>(i)]).other(v);
  const VertexSet around{t.neighbours[0], t.neighbours[1], t.neighbours[2]};
  if (around.size() != 3) throw GraphError("vertex type needs three distinct neighbours");
  const VertexSet all = VertexSet::all(g.vertex_count());
  t.omega = counter.count(all - around - VertexSet{v});
  for (int i = 0; i < 3; ++i) t.mu[static_cast<std::size_t>(i)] = counter.count(all - VertexSet{v, t.neighbours[static_cast<std::size_t>(i)]});
  t.cls = classify(t.omega, t.mu);
  return t;
}

}  // namespace

std::vector<std::array<VertexId, 3>> triangles(const MultiGraph& g) {
  if (g.vertex_count() > VertexSet::kCapacity) throw GraphError("triangle search supports at most 64 vertices");
  std::vector<VertexSet> nbr;
  for (VertexId v = 0; v < g.vertex_count(); ++v) nbr.push_back(neighbour_set(g, v));
  std::vector<std::array<VertexId, 3>> out;
  for (VertexId a = 0; a < g.vertex_count(); ++a) {
    nbr[static_cast<std::size_t>(a)].for_each([&](VertexId b) {
      if (b <= a) return;
      VertexSet common = nbr[static_cast<std::size_t>(a)] & nbr[static_cast<std::size_t>(b)];
      common.for_each([&](VertexId c) {
        if (c > b) out.push_back({a, b, c});
      });
    });
  }
  return out;
}

KleeCertificate klee_certificate(const MultiGraph& g) {
  require_cubic_connected(g, "klee recognition");
  KleeCertificate cert;
  if (!g.is_simple()) return cert;
  MultiGraph cur = g;
  for (;;) {
    if (cur.vertex_count() == 4) {
      cert.is_klee = true;  // the only simple cubic graph on 4 vertices is K4
      return cert;
    }
    bool contracted = false;
    for (const auto& tri : triangles(cur)) {
      const VertexSet inside = as_set(tri);
      VertexSet outside;
      for (VertexId t : tri) outside = outside | (neighbour_set(cur, t) - inside);
      if (outside.size() != 3) continue;
      cur = contract_side(cur, inside).graph;
      cert.contractions.push_back(tri);
      contracted = true;
      break;
    }
    if (!contracted) return cert;
  }
}

bool is_klee(const MultiGraph& g) { return klee_certificate(g).is_klee; }

MultiGraph core(const MultiGraph& g) {
  require_cubic_connected(g, "core");
  auto tris = triangles(g);
  VertexSet used;
  std::vector<VertexSet> parts;
  for (const auto& tri : tris) {
    VertexSet s = as_set(tri);
    if (!(s & used).empty()) throw GraphError("core: triangles overlap");
    used = used | s;
    parts.push_back(s);
  }
  for (const Cut& cut : enumerate_cuts(g, 3)) {
    if (cut.size() != 3 || !is_cyclic_cut(g, cut)) continue;
    bool triangle_side = std::any_of(parts.begin(), parts.end(),
                                     [&](VertexSet s) { return s == cut.side_a || s == cut.side_b; });
    if (!triangle_side) throw GraphError("core: a cyclic 3-edge-cut does not cut off a triangle");
  }
  return contract(g, parts).graph;
}

const char* to_string(VertexClass c) {
  switch (c) {
    case VertexClass::A: return "A";
    case VertexClass::B: return "B";
    case VertexClass::C: return "C";
    case VertexClass::dangerous: return "dangerous";
    case VertexClass::good: return "good";
  }
  return "?";
}

VertexClass classify(MatchingCount omega, const std::array<MatchingCount, 3>& mu) {
  const int mu_ones = static_cast<int>(std::count(mu.begin(), mu.end(), MatchingCount{1}));
  if (mu_ones + (omega == 1 ? 1 : 0) >= 3) return VertexClass::dangerous;
  if (omega == 1 && mu_ones == 1) return VertexClass::A;
  if (omega == 1 && mu_ones == 0) return VertexClass::B;
  if (omega > 1 && mu_ones == 2) return VertexClass::C;
  return VertexClass::good;
}

KleeVertexType vertex_type(const MultiGraph& g, VertexId v) {
  if (v < 0 || v >= g.vertex_count()) throw GraphError("vertex out of range");
  MatchingCounter counter(g);
  return type_with(counter, g, v);
}

std::vector<KleeVertexType> vertex_types(const MultiGraph& g) {
  MatchingCounter counter(g);
  std::vector<KleeVertexType> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) out.push_back(type_with(counter, g, v));
  return out;
}

ExpansionReport expand_and_check(const MultiGraph& g, VertexId v) {
  if (v < 0 || v >= g.vertex_count()) throw GraphError("vertex out of range");
  ExpansionReport r;
  MatchingCounter before(g);
  r.type = type_with(before, g, v);
  r.before = before.count_all();
  r.expanded = replace_vertex_with_triangle(g, v);
  MatchingCounter after(r.expanded);
  r.after = after.count_all();
  r.recurrence_holds = r.after == r.before + r.type.omega;

  const int n = g.vertex_count();
  const std::array<VertexId, 3> t{v, n, n + 1};
  r.new_types_hold = true;
  for (int i = 0; i < 3; ++i) {
    KleeVertexType actual = type_with(after, r.expanded, t[static_cast<std::size_t>(i)]);
    KleeVertexType predicted;
    predicted.neighbours = actual.neighbours;
    predicted.omega = r.type.mu[static_cast<std::size_t>(i)];
    for (int s = 0; s < 3; ++s) {
      VertexId y = actual.neighbours[static_cast<std::size_t>(s)];
      auto j = std::find(t.begin(), t.end(), y) - t.begin();
      // toward the outside: mu_i + omega; toward t_j: mu of the third index
      predicted.mu[static_cast<std::size_t>(s)] =
          j == 3 ? r.type.mu[static_cast<std::size_t>(i)] + r.type.omega
                 : r.type.mu[static_cast<std::size_t>(3 - i - j)];
    }
    predicted.cls = classify(predicted.omega, predicted.mu);
    r.new_types_hold = r.new_types_hold && actual == predicted;
    r.new_types[static_cast<std::size_t>(i)] = actual;
    r.predicted_types[static_cast<std::size_t>(i)] = predicted;
  }

  r.monotone = true;
  r.dangerous_inherited = true;
  for (VertexId u = 0; u < n; ++u) {
    if (u == v || neighbour_set(g, u).size() != 3) continue;
    KleeVertexType old_type = type_with(before, g, u);
    KleeVertexType new_type = type_with(after, r.expanded, u);
    // edge ids survive the expansion, so slots line up
    bool grew = new_type.omega >= old_type.omega;
    for (std::size_t s = 0; s < 3; ++s) grew = grew && new_type.mu[s] >= old_type.mu[s];
    r.monotone = r.monotone && grew;
    if (new_type.cls == VertexClass::dangerous && old_type.cls != VertexClass::dangerous) r.dangerous_inherited = false;
  }
  return r;
}

std::vector<KleeClass> enumerate_klee(int n) {
  if (n < 4 || n > kMaxKleeOrder || n % 2 != 0)
    throw std::invalid_argument("klee enumeration needs an even order between 4 and " + std::to_string(kMaxKleeOrder));
  static std::mutex lock;
  static std::map<int, std::vector<KleeClass>> levels;
  std::lock_guard guard(lock);
  if (levels.empty()) {
    MultiGraph k4 = named::k4();
    levels[4] = {KleeClass{canonical_form(k4), canonical_graph(k4)}};
  }
  for (int k = 6; k <= n; k += 2) {
    if (levels.count(k)) continue;
    std::map<std::string, MultiGraph> found;
    for (const KleeClass& parent : levels.at(k - 2)) {
      for (VertexId v = 0; v < parent.graph.vertex_count(); ++v) {
        MultiGraph child = replace_vertex_with_triangle(parent.graph, v);
        std::string cert = canonical_form(child);
        if (!found.count(cert)) found.emplace(cert, canonical_graph(child));
      }
    }
    auto& level = levels[k];
    for (auto& [cert, graph] : found) level.push_back(KleeClass{cert, std::move(graph)});
  }
  return levels.at(n);
}

KleeStats klee_stats(const MultiGraph& g) {
  if (!is_klee(g)) throw GraphError("klee statistics need a klee-graph");
  KleeStats s;
  s.m = count_perfect_matchings(g);
  for (const KleeVertexType& t : vertex_types(g)) {
    if (t.cls == VertexClass::A) ++s.alpha;
    if (t.cls == VertexClass::B) ++s.beta;
  }
  s.potential = Rational(s.m) - s.alpha - Rational(s.beta, 2);
  return s;
}

const char* to_string(NiceClause c) {
  switch (c) {
    case NiceClause::none: return "none";
    case NiceClause::other_side_not_klee: return "other_side_not_klee";
    case NiceClause::large_side: return "large_side";
    case NiceClause::not_tight: return "not_tight";
    case NiceClause::three_through: return "three_through";
  }
  return "?";
}

NiceCutResult is_nice_cut(const MultiGraph& g, const Cut& cut) {
  if (!g.is_cubic()) throw GraphError("nice cuts are defined for cubic graphs");
  if (cut.size() != 3) throw GraphError("nice cuts have exactly three edges");

  MatchingCount through_all = 0;
  VertexSet ends;
  for (EdgeId e : cut.edges) ends = ends | VertexSet{g.edge(e).u, g.edge(e).v};
  if (ends.size() == 6) {
    EdgeConstraints c;
    c.forced = cut.edges;
    through_all = count_perfect_matchings(g, c);
  }
  const bool tight = every_matching_crosses_once(g, cut);

  NiceCutResult out;
  for (int role = 0; role < 2; ++role) {
    const VertexSet a = role == 0 ? cut.side_a : cut.side_b;
    const VertexSet b = role == 0 ? cut.side_b : cut.side_a;
    if (is_klee(contract_side(g, a).graph)) continue;
    NiceClause clause = NiceClause::none;
    if (!is_klee(contract_side(g, b).graph))
      clause = NiceClause::other_side_not_klee;
    else if (a.size() >= 9)
      clause = NiceClause::large_side;
    else if (a.size() >= 5 && !tight)
      clause = NiceClause::not_tight;
    else if (a.size() == 3 && through_all >= 2)
      clause = NiceClause::three_through;
    if (clause != NiceClause::none) {
      out.nice = true;
      out.clause = clause;
      out.swapped = role == 1;
      return out;
    }
  }
  return out;
}

}  // namespace cubicpm
