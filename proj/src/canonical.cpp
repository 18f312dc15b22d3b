#include "cubicpm/canonical.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace cubicpm {
namespace {

using Colouring = std::vector<int>;

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const MultiGraph& g) : n_(g.vertex_count()), mult_(static_cast<std::size_t>(n_ * n_), 0) {
    for (const Edge& e : g.edges()) {
      ++at(e.u, e.v);
      ++at(e.v, e.u);
    }
    adj_.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v)
      for (int w = 0; w < n_; ++w)
        if (at(v, w) > 0) adj_[static_cast<std::size_t>(v)].push_back(w);
  }

  CanonicalLabeling run() {
    Colouring start(static_cast<std::size_t>(n_), 0);
    for (int v = 0; v < n_; ++v) {
      int deg = 0;
      for (int w : adj_[static_cast<std::size_t>(v)]) deg += at(v, w);
      start[static_cast<std::size_t>(v)] = deg;
    }
    normalise(start);
    search(std::move(start));
    CanonicalLabeling out;
    out.certificate = std::move(best_cert_);
    out.new_label = std::move(best_label_);
    return out;
  }

 private:
  int& at(int u, int v) { return mult_[static_cast<std::size_t>(u * n_ + v)]; }
  int at(int u, int v) const { return mult_[static_cast<std::size_t>(u * n_ + v)]; }

  // Replace colour values by their rank, keeping order.
  static int normalise(Colouring& c) {
    std::vector<int> values(c);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (int& x : c) x = static_cast<int>(std::lower_bound(values.begin(), values.end(), x) - values.begin());
    return static_cast<int>(values.size());
  }

  // Equitable refinement; each new colour class sits inside an old one and
  // classes keep their relative order, so the result is label-invariant.
  int refine(Colouring& c) const {
    int classes = normalise(c);
    while (classes < n_) {
      using Key = std::pair<int, std::vector<std::pair<int, int>>>;
      std::vector<Key> keys(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) {
        auto& sig = keys[static_cast<std::size_t>(v)];
        sig.first = c[static_cast<std::size_t>(v)];
        for (int w : adj_[static_cast<std::size_t>(v)]) sig.second.emplace_back(c[static_cast<std::size_t>(w)], at(v, w));
        std::sort(sig.second.begin(), sig.second.end());
      }
      std::vector<Key> order(keys);
      std::sort(order.begin(), order.end());
      order.erase(std::unique(order.begin(), order.end()), order.end());
      if (static_cast<int>(order.size()) == classes) break;
      for (int v = 0; v < n_; ++v)
        c[static_cast<std::size_t>(v)] =
            static_cast<int>(std::lower_bound(order.begin(), order.end(), keys[static_cast<std::size_t>(v)]) - order.begin());
      classes = static_cast<int>(order.size());
    }
    return classes;
  }

  void search(Colouring c) {
    int classes = refine(c);
    if (classes == n_) {
      visit_leaf(c);
      return;
    }
    // first non-singleton class
    std::vector<int> size(static_cast<std::size_t>(classes), 0);
    for (int x : c) ++size[static_cast<std::size_t>(x)];
    int target = 0;
    while (size[static_cast<std::size_t>(target)] == 1) ++target;
    for (int v = 0; v < n_; ++v) {
      if (c[static_cast<std::size_t>(v)] != target) continue;
      Colouring child(c);
      for (int w = 0; w < n_; ++w) child[static_cast<std::size_t>(w)] = 2 * c[static_cast<std::size_t>(w)] + (w == v ? 0 : 1);
      search(std::move(child));
    }
  }

  void visit_leaf(const Colouring& label) {
    std::vector<int> inverse(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) inverse[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])] = v;
    std::string cert;
    cert.reserve(static_cast<std::size_t>(2 + n_ * (n_ - 1) / 2));
    cert.push_back(static_cast<char>(n_));
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        cert.push_back(static_cast<char>(at(inverse[static_cast<std::size_t>(i)], inverse[static_cast<std::size_t>(j)])));
    if (!have_best_ || cert < best_cert_) {
      have_best_ = true;
      best_cert_ = std::move(cert);
      best_label_ = label;
    }
  }

  int n_;
  std::vector<int> mult_;
  std::vector<std::vector<int>> adj_;
  bool have_best_ = false;
  std::string best_cert_;
  std::vector<VertexId> best_label_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const MultiGraph& g, int max_vertices) {
  if (g.vertex_count() > max_vertices)
    throw GraphError("canonical form supports at most " + std::to_string(max_vertices) + " vertices, got " +
                     std::to_string(g.vertex_count()));
  for (const Edge& e : g.edges())
    if (g.multiplicity(e.u, e.v) > 127) throw GraphError("edge multiplicity too large for canonical form");
  if (g.vertex_count() == 0) return {std::string(1, '\0'), {}};
  return CanonicalSearch(g).run();
}

std::string canonical_form(const MultiGraph& g, int max_vertices) {
  return canonical_labeling(g, max_vertices).certificate;
}

MultiGraph canonical_graph(const MultiGraph& g, int max_vertices) {
  CanonicalLabeling lab = canonical_labeling(g, max_vertices);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    VertexId a = lab.new_label[static_cast<std::size_t>(e.u)];
    VertexId b = lab.new_label[static_cast<std::size_t>(e.v)];
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
    return std::pair(x.u, x.v) < std::pair(y.u, y.v);
  });
  return MultiGraph(g.vertex_count(), std::move(edges));
}

bool are_isomorphic(const MultiGraph& a, const MultiGraph& b, int max_vertices) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a, max_vertices) == canonical_form(b, max_vertices);
}

}  // namespace cubicpm
