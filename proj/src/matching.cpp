#include "cubicpm/matching.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <stdexcept>

namespace cubicpm {
namespace {

MatchingCount checked_add(MatchingCount a, MatchingCount b) {
  MatchingCount out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("perfect matching count overflows 64 bits");
  return out;
}

MatchingCount checked_mul(MatchingCount a, MatchingCount b) {
  MatchingCount out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("perfect matching count overflows 64 bits");
  return out;
}

void require_small(const MultiGraph& g) {
  if (g.vertex_count() > VertexSet::kCapacity) throw GraphError("matching routines support at most 64 vertices");
}

std::vector<char> forbidden_flags(const MultiGraph& g, std::span<const EdgeId> forbidden) {
  std::vector<char> flags(static_cast<std::size_t>(g.edge_count()), 0);
  for (EdgeId e : forbidden) {
    if (e < 0 || e >= g.edge_count()) throw GraphError("constraint edge " + std::to_string(e) + " out of range");
    flags[static_cast<std::size_t>(e)] = 1;
  }
  return flags;
}

std::vector<VertexSet> neighbour_sets(const MultiGraph& g, std::span<const EdgeId> forbidden) {
  require_small(g);
  auto banned = forbidden_flags(g, forbidden);
  std::vector<VertexSet> nbr(static_cast<std::size_t>(g.vertex_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (banned[static_cast<std::size_t>(e)]) continue;
    nbr[static_cast<std::size_t>(g.edge(e).u)].insert(g.edge(e).v);
    nbr[static_cast<std::size_t>(g.edge(e).v)].insert(g.edge(e).u);
  }
  return nbr;
}

// Validated constraints: the vertices left after removing forced endpoints.
VertexSet residual_vertices(const MultiGraph& g, const EdgeConstraints& c) {
  require_small(g);
  auto banned = forbidden_flags(g, c.forbidden);
  VertexSet covered;
  for (EdgeId e : c.forced) {
    if (e < 0 || e >= g.edge_count()) throw GraphError("constraint edge " + std::to_string(e) + " out of range");
    if (banned[static_cast<std::size_t>(e)]) throw GraphError("edge " + std::to_string(e) + " is both forced and forbidden");
    const Edge& ed = g.edge(e);
    if (covered.contains(ed.u) || covered.contains(ed.v))
      throw GraphError("forced edges do not form a matching (edge " + std::to_string(e) + ")");
    covered.insert(ed.u);
    covered.insert(ed.v);
  }
  return VertexSet::all(g.vertex_count()) - covered;
}

// Edmonds' blossom algorithm on at most 64 vertices (e-maxx formulation).
class Blossom {
 public:
  Blossom(std::span<const VertexSet> nbr, VertexSet active)
      : nbr_(nbr), active_(active), n_(static_cast<int>(nbr.size())),
        match_(static_cast<std::size_t>(n_), -1), parent_(static_cast<std::size_t>(n_), -1),
        base_(static_cast<std::size_t>(n_), 0) {}

  int run() {
    int size = 0;
    // greedy start
    active_.for_each([&](VertexId v) {
      if (match_[static_cast<std::size_t>(v)] != -1) return;
      VertexSet free = nbr_[static_cast<std::size_t>(v)] & active_;
      free.for_each([&](VertexId w) {
        if (match_[static_cast<std::size_t>(v)] == -1 && match_[static_cast<std::size_t>(w)] == -1) {
          match_[static_cast<std::size_t>(v)] = w;
          match_[static_cast<std::size_t>(w)] = v;
          ++size;
        }
      });
    });
    active_.for_each([&](VertexId v) {
      if (match_[static_cast<std::size_t>(v)] != -1) return;
      VertexId end = find_path(v);
      if (end == -1) return;
      ++size;
      while (end != -1) {
        VertexId pv = parent_[static_cast<std::size_t>(end)];
        VertexId ppv = match_[static_cast<std::size_t>(pv)];
        match_[static_cast<std::size_t>(end)] = pv;
        match_[static_cast<std::size_t>(pv)] = end;
        end = ppv;
      }
    });
    return size;
  }

  const std::vector<VertexId>& mate() const { return match_; }

 private:
  VertexId lca(VertexId a, VertexId b) {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    for (;;) {
      a = base_[static_cast<std::size_t>(a)];
      seen[static_cast<std::size_t>(a)] = 1;
      if (match_[static_cast<std::size_t>(a)] == -1) break;
      a = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(a)])];
    }
    for (;;) {
      b = base_[static_cast<std::size_t>(b)];
      if (seen[static_cast<std::size_t>(b)]) return b;
      b = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(b)])];
    }
  }

  void mark_path(VertexId v, VertexId b, VertexId child, std::vector<char>& in_blossom) {
    while (base_[static_cast<std::size_t>(v)] != b) {
      VertexId m = match_[static_cast<std::size_t>(v)];
      in_blossom[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = 1;
      in_blossom[static_cast<std::size_t>(base_[static_cast<std::size_t>(m)])] = 1;
      parent_[static_cast<std::size_t>(v)] = child;
      child = m;
      v = parent_[static_cast<std::size_t>(m)];
    }
  }

  VertexId find_path(VertexId root) {
    std::vector<char> used(static_cast<std::size_t>(n_), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[static_cast<std::size_t>(i)] = i;
    used[static_cast<std::size_t>(root)] = 1;
    std::vector<VertexId> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      VertexId v = queue[head];
      VertexSet around = nbr_[static_cast<std::size_t>(v)] & active_;
      for (std::uint64_t bits = around.bits(); bits != 0; bits &= bits - 1) {
        VertexId to = std::countr_zero(bits);
        if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(to)] ||
            match_[static_cast<std::size_t>(v)] == to)
          continue;
        if (to == root || (match_[static_cast<std::size_t>(to)] != -1 &&
                           parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(to)])] != -1)) {
          VertexId cur = lca(v, to);
          std::vector<char> in_blossom(static_cast<std::size_t>(n_), 0);
          mark_path(v, cur, to, in_blossom);
          mark_path(to, cur, v, in_blossom);
          for (int i = 0; i < n_; ++i) {
            if (!active_.contains(i) || !in_blossom[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])]) continue;
            base_[static_cast<std::size_t>(i)] = cur;
            if (!used[static_cast<std::size_t>(i)]) {
              used[static_cast<std::size_t>(i)] = 1;
              queue.push_back(i);
            }
          }
        } else if (parent_[static_cast<std::size_t>(to)] == -1) {
          parent_[static_cast<std::size_t>(to)] = v;
          if (match_[static_cast<std::size_t>(to)] == -1) return to;
          VertexId next = match_[static_cast<std::size_t>(to)];
          used[static_cast<std::size_t>(next)] = 1;
          queue.push_back(next);
        }
      }
    }
    return -1;
  }

  std::span<const VertexSet> nbr_;
  VertexSet active_;
  int n_;
  std::vector<VertexId> match_;
  std::vector<VertexId> parent_;
  std::vector<VertexId> base_;
};

}  // namespace

int maximum_matching(std::span<const VertexSet> neighbours, VertexSet active, std::vector<VertexId>* mate) {
  Blossom b(neighbours, active);
  int size = b.run();
  if (mate) *mate = b.mate();
  return size;
}

MatchingCounter::MatchingCounter(const MultiGraph& g, std::span<const EdgeId> forbidden)
    : n_(g.vertex_count()), adj_(static_cast<std::size_t>(n_)), nbr_(neighbour_sets(g, forbidden)) {
  require_small(g);
  auto banned = forbidden_flags(g, forbidden);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (banned[static_cast<std::size_t>(e)]) continue;
    const Edge& ed = g.edge(e);
    adj_[static_cast<std::size_t>(ed.u)].emplace_back(e, ed.v);
    adj_[static_cast<std::size_t>(ed.v)].emplace_back(e, ed.u);
  }
}

MatchingCount MatchingCounter::count(VertexSet active) {
  active = active & VertexSet::all(n_);
  if (active.size() % 2 != 0) return 0;
  return count_rec(active);
}

MatchingCount MatchingCounter::count_rec(VertexSet active) {
  if (active.empty()) return 1;
  if (auto it = memo_.find(active.bits()); it != memo_.end()) return it->second;

  // branch on the vertex with the fewest usable edges
  VertexId pivot = -1;
  int best_degree = 1 << 30;
  bool dead = false;
  active.for_each([&](VertexId v) {
    if (dead) return;
    int deg = 0;
    for (const auto& [e, w] : adj_[static_cast<std::size_t>(v)])
      if (active.contains(w)) ++deg;
    if (deg == 0) dead = true;
    if (deg < best_degree) {
      best_degree = deg;
      pivot = v;
    }
  });
  MatchingCount total = 0;
  if (!dead && active.size() >= kPruneThreshold && maximum_matching(nbr_, active) * 2 < active.size()) dead = true;
  if (!dead) {
    for (const auto& [e, w] : adj_[static_cast<std::size_t>(pivot)]) {
      if (!active.contains(w)) continue;
      total = checked_add(total, count_rec(active - VertexSet{pivot, w}));
    }
  }
  memo_.emplace(active.bits(), total);
  return total;
}

TutteBarrier gallai_edmonds_barrier(const MultiGraph& g, VertexSet active, std::span<const EdgeId> forbidden) {
  require_small(g);
  auto nbr = neighbour_sets(g, forbidden);
  const int nu = maximum_matching(nbr, active);
  // D: vertices missed by some maximum matching
  VertexSet missable;
  active.for_each([&](VertexId v) {
    if (maximum_matching(nbr, active - VertexSet{v}) == nu) missable.insert(v);
  });
  VertexSet barrier;
  missable.for_each([&](VertexId v) { barrier = barrier | (nbr[static_cast<std::size_t>(v)] & active); });
  barrier = barrier - missable;

  TutteBarrier out;
  out.set = barrier.to_vector();
  VertexSet rest = active - barrier;
  while (!rest.empty()) {
    // components w.r.t. the allowed edges
    VertexSet comp{rest.front()};
    std::vector<VertexId> stack{rest.front()};
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      VertexSet next = (nbr[static_cast<std::size_t>(v)] & rest) - comp;
      next.for_each([&](VertexId w) {
        comp.insert(w);
        stack.push_back(w);
      });
    }
    if (comp.size() % 2 == 1) ++out.odd_component_count;
    rest = rest - comp;
  }
  return out;
}

PerfectMatchingCheck has_perfect_matching(const MultiGraph& g, const EdgeConstraints& constraints) {
  VertexSet residual = residual_vertices(g, constraints);
  auto nbr = neighbour_sets(g, constraints.forbidden);
  std::vector<VertexId> mate;
  int size = maximum_matching(nbr, residual, &mate);
  PerfectMatchingCheck out;
  if (size * 2 == residual.size()) {
    out.exists = true;
    auto banned = forbidden_flags(g, constraints.forbidden);
    out.matching = constraints.forced;
    residual.for_each([&](VertexId v) {
      VertexId w = mate[static_cast<std::size_t>(v)];
      if (w < v) return;
      for (EdgeId e : g.incident(v)) {
        if (!banned[static_cast<std::size_t>(e)] && g.edge(e).other(v) == w) {
          out.matching.push_back(e);
          break;
        }
      }
    });
    std::sort(out.matching.begin(), out.matching.end());
  } else {
    out.barrier = gallai_edmonds_barrier(g, residual, constraints.forbidden);
  }
  return out;
}

bool has_perfect_matching_without(const MultiGraph& g, VertexSet removed) {
  require_small(g);
  VertexSet active = VertexSet::all(g.vertex_count()) - removed;
  if (active.size() % 2 != 0) return false;
  auto nbr = neighbour_sets(g, {});
  return maximum_matching(nbr, active) * 2 == active.size();
}

MatchingCount count_perfect_matchings(const MultiGraph& g, const EdgeConstraints& constraints) {
  VertexSet residual = residual_vertices(g, constraints);
  MatchingCounter counter(g, constraints.forbidden);
  return counter.count(residual);
}

MatchingCount count_perfect_matchings_without(const MultiGraph& g, VertexSet removed) {
  MatchingCounter counter(g);
  return counter.count(VertexSet::all(g.vertex_count()) - removed);
}

MatchingCount count_avoiding(const MultiGraph& g, EdgeId e) {
  EdgeConstraints c;
  c.forbidden = {e};
  return count_perfect_matchings(g, c);
}

MatchingCount count_perfect_matchings_brute_force(const MultiGraph& g, const EdgeConstraints& constraints) {
  residual_vertices(g, constraints);  // validation only
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (n % 2 != 0) return 0;
  if (m > 40) throw GraphError("brute-force counting supports at most 40 edges");
  auto banned = forbidden_flags(g, constraints.forbidden);
  std::vector<char> picked(static_cast<std::size_t>(m), 0);
  std::vector<char> covered(static_cast<std::size_t>(n), 0);

  // every subset of n/2 edges in increasing id order, rejecting shared ends
  MatchingCount total = 0;
  std::function<void(EdgeId, int)> choose = [&](EdgeId from, int left) {
    if (left == 0) {
      for (EdgeId e : constraints.forced)
        if (!picked[static_cast<std::size_t>(e)]) return;
      ++total;
      return;
    }
    for (EdgeId e = from; e <= m - left; ++e) {
      if (banned[static_cast<std::size_t>(e)]) continue;
      const Edge& ed = g.edge(e);
      if (covered[static_cast<std::size_t>(ed.u)] || covered[static_cast<std::size_t>(ed.v)]) continue;
      covered[static_cast<std::size_t>(ed.u)] = covered[static_cast<std::size_t>(ed.v)] = 1;
      picked[static_cast<std::size_t>(e)] = 1;
      choose(e + 1, left - 1);
      picked[static_cast<std::size_t>(e)] = 0;
      covered[static_cast<std::size_t>(ed.u)] = covered[static_cast<std::size_t>(ed.v)] = 0;
    }
  };
  choose(0, n / 2);
  return total;
}

void for_each_perfect_matching(const MultiGraph& g, const std::function<void(std::span<const EdgeId>)>& visit) {
  require_small(g);
  const int n = g.vertex_count();
  if (n % 2 != 0) return;
  std::vector<EdgeId> chosen;
  std::vector<EdgeId> sorted;
  // always match the smallest uncovered vertex, so each matching appears once
  std::function<void(VertexSet)> walk = [&](VertexSet left) {
    if (left.empty()) {
      sorted = chosen;
      std::sort(sorted.begin(), sorted.end());
      visit(sorted);
      return;
    }
    VertexId v = left.front();
    for (EdgeId e : g.incident(v)) {
      VertexId w = g.edge(e).other(v);
      if (!left.contains(w)) continue;
      chosen.push_back(e);
      walk(left - VertexSet{v, w});
      chosen.pop_back();
    }
  };
  walk(VertexSet::all(n));
}

std::vector<std::vector<EdgeId>> perfect_matchings(const MultiGraph& g) {
  std::vector<std::vector<EdgeId>> out;
  for_each_perfect_matching(g, [&](std::span<const EdgeId> m) { out.emplace_back(m.begin(), m.end()); });
  std::sort(out.begin(), out.end());
  return out;
}

MatchingProfile matching_profile(const MultiGraph& g, const EdgeConstraints& constraints) {
  VertexSet residual = residual_vertices(g, constraints);
  MatchingCounter counter(g, constraints.forbidden);
  MatchingProfile out;
  out.constraints = constraints;
  out.total = counter.count(residual);
  out.per_edge.assign(static_cast<std::size_t>(g.edge_count()), 0);

  std::vector<char> state(static_cast<std::size_t>(g.edge_count()), 0);  // 1 forced, 2 forbidden
  for (EdgeId e : constraints.forced) state[static_cast<std::size_t>(e)] = 1;
  for (EdgeId e : constraints.forbidden) state[static_cast<std::size_t>(e)] = 2;
  bool covered = true;
  bool doubly = true;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    MatchingCount c = 0;
    if (state[static_cast<std::size_t>(e)] == 1) {
      c = out.total;
    } else if (state[static_cast<std::size_t>(e)] == 0 && residual.contains(ed.u) && residual.contains(ed.v)) {
      c = counter.count(residual - VertexSet{ed.u, ed.v});
    }
    out.per_edge[static_cast<std::size_t>(e)] = c;
    if (state[static_cast<std::size_t>(e)] == 2) continue;  // forbidden edges are not judged
    covered = covered && c >= 1;
    doubly = doubly && c >= 2;
  }
  out.matching_covered = covered;
  out.double_covered = doubly;
  return out;
}

MatchingCount BoundaryProfile::combined_count() const {
  MatchingCount total = 0;
  for (std::size_t x = 0; x < m_a.size(); ++x) total = checked_add(total, checked_mul(m_a[x], m_b[x]));
  return total;
}

MatchingCount BoundaryProfile::through(unsigned mask) const {
  if (mask >= m_a.size()) throw std::out_of_range("cut edge mask out of range");
  return checked_mul(m_a[mask], m_b[mask]);
}

BoundaryProfile boundary_profile(const MultiGraph& g, const Cut& cut) {
  require_small(g);
  const int k = cut.size();
  if (k > kMaxBoundaryCut)
    throw GraphError("boundary profiles support cuts of at most " + std::to_string(kMaxBoundaryCut) + " edges");
  // one counter for the whole graph: induced subgraphs of a side never use cut edges
  MatchingCounter counter(g);
  BoundaryProfile out;
  out.cut = cut;
  const std::size_t masks = std::size_t{1} << k;
  out.m_a.assign(masks, 0);
  out.m_b.assign(masks, 0);
  for (std::size_t x = 0; x < masks; ++x) {
    VertexSet ends_a;
    VertexSet ends_b;
    bool clash_a = false;
    bool clash_b = false;
    for (int i = 0; i < k; ++i) {
      if (!((x >> i) & 1U)) continue;
      const Edge& ed = g.edge(cut.edges[static_cast<std::size_t>(i)]);
      VertexId a = cut.side_a.contains(ed.u) ? ed.u : ed.v;
      VertexId b = ed.other(a);
      clash_a = clash_a || ends_a.contains(a);
      clash_b = clash_b || ends_b.contains(b);
      ends_a.insert(a);
      ends_b.insert(b);
    }
    if (!clash_a) out.m_a[x] = counter.count(cut.side_a - ends_a);
    if (!clash_b) out.m_b[x] = counter.count(cut.side_b - ends_b);
  }
  return out;
}

}  // namespace cubicpm
