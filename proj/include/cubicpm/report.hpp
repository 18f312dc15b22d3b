#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cubicpm/connectivity.hpp"
#include "cubicpm/matching.hpp"
#include "cubicpm/multigraph.hpp"
#include "cubicpm/rational.hpp"

namespace cubicpm {

/// One evaluated statement. Lower bounds carry the bound and the slack
/// (value - bound); exact identities and properties leave them empty.
struct TheoremCheck {
  std::string tag;
  Rational value;
  std::optional<Rational> bound;
  bool satisfied = false;
  std::string note;

  std::optional<Rational> slack() const {
    if (!bound) return std::nullopt;
    return value - *bound;
  }
};

struct GraphInvariants {
  bool simple = false;
  bool bridgeless = false;
  int edge_connectivity = 0;
  CyclicConnectivity cyclic_edge_connectivity;
  bool three_edge_connected = false;
  bool cyclically_4ec = false;
  bool cyclically_5ec = false;
  bool bipartite = false;
  bool klee = false;
  bool exceptional = false;
};

struct BoundReport {
  std::string id;
  std::string canonical;  // sparse6 of the canonical labelling, empty above 16 vertices
  int n = 0;
  int m = 0;
  GraphInvariants invariants;
  MatchingCount pm_count = 0;
  int brick_count = 0;
  int brace_count = 0;
  int dim = 0;
  int affine_dim = 0;
  std::vector<TheoremCheck> checks;

  bool all_satisfied() const;
  const TheoremCheck* find(const std::string& tag) const;
};

/// Evaluates every statement whose hypotheses g meets. Throws GraphError
/// unless g is cubic, connected and bridgeless.
BoundReport verify_graph(const MultiGraph& g, const std::string& id = "");

nlohmann::ordered_json to_json(const BoundReport& r);

struct CompanionResult {
  enum class Status { not_applicable, found, not_found };
  Status status = Status::not_applicable;
  EdgeId companion = -1;  // f with G - {e, f} bipartite and matching covered
};

const char* to_string(CompanionResult::Status s);

/// For cyclically 5-edge-connected cubic g with G - e not matching covered,
/// searches for f such that G - {e, f} is matching covered and bipartite.
CompanionResult bipartite_companion_check(const MultiGraph& g, EdgeId e);

/// Every edge of the (not necessarily cubic) graph lies in a perfect matching.
bool is_matching_covered(const MultiGraph& g);

}  // namespace cubicpm
