#pragma once

#include <string>
#include <utility>
#include <vector>

#include "extraconn/error.hpp"
#include "extraconn/graph.hpp"

namespace extraconn {

enum class MycielskiRole { original, twin, root };

/// Vertex roles in μ(G) for a base graph of order n: ids 0..n-1 are the
/// originals, n+i is the twin of original i, and 2n is the root.
class MycielskiLabel {
 public:
  MycielskiLabel() = default;
  explicit MycielskiLabel(int base_order) : base_order_(base_order) {
    if (base_order < 0) throw InputError("base order must be non-negative");
  }

  int base_order() const noexcept { return base_order_; }
  int order() const noexcept { return 2 * base_order_ + 1; }
  int root() const noexcept { return 2 * base_order_; }

  MycielskiRole role(int v) const {
    check(v);
    if (v < base_order_) return MycielskiRole::original;
    if (v < 2 * base_order_) return MycielskiRole::twin;
    return MycielskiRole::root;
  }

  /// Original i <-> twin n+i. The root has no twin.
  int twin_of(int v) const {
    switch (role(v)) {
      case MycielskiRole::original: return v + base_order_;
      case MycielskiRole::twin: return v - base_order_;
      case MycielskiRole::root: break;
    }
    throw InputError("the root of the Mycielskian has no twin");
  }

  /// Base-graph vertex a vertex of μ(G) stands for; -1 for the root.
  int base_vertex(int v) const {
    switch (role(v)) {
      case MycielskiRole::original: return v;
      case MycielskiRole::twin: return v - base_order_;
      case MycielskiRole::root: break;
    }
    return -1;
  }

  std::string describe(int v) const {
    switch (role(v)) {
      case MycielskiRole::original: return std::to_string(v);
      case MycielskiRole::twin: return std::to_string(v - base_order_) + "'";
      case MycielskiRole::root: break;
    }
    return "u";
  }

  friend bool operator==(const MycielskiLabel&, const MycielskiLabel&) = default;

 private:
  void check(int v) const {
    if (v < 0 || v >= order()) {
      throw InputError("vertex " + std::to_string(v) + " is not a vertex of a Mycielskian of order " +
                       std::to_string(order()));
    }
  }

  int base_order_ = 0;
};

struct Mycielskian {
  Graph graph;
  MycielskiLabel label;
};

/// μ(G): keeps E, adds i~(n+j) and j~(n+i) for each edge ij, and joins every
/// twin to the root 2n. Order 2n+1, size 3m+n.
inline Mycielskian mycielskian(const Graph& g) {
  const int n = g.order();
  if (n < 1) throw InputError("the Mycielskian needs a graph with at least one vertex");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(3 * g.size() + n));
  for (auto [x, y] : g.edges()) {
    edges.emplace_back(x, y);
    edges.emplace_back(x, n + y);
    edges.emplace_back(y, n + x);
  }
  for (int i = 0; i < n; ++i) edges.emplace_back(n + i, 2 * n);
  return {build_graph(2 * n + 1, edges), MycielskiLabel(n)};
}

/// F' for a set F of originals, as a set over the vertices of μ(G).
inline VertexSet twin_set(const MycielskiLabel& label, const VertexSet& originals) {
  const int n = label.base_order();
  if (originals.universe() != n && originals.universe() != label.order()) {
    throw InputError("twin_set: set universe matches neither G nor μ(G)");
  }
  VertexSet out(label.order());
  for (int v : originals.members()) {
    if (v >= n) throw InputError("twin_set: vertex " + std::to_string(v) + " is not an original vertex");
    out.insert(n + v);
  }
  return out;
}

/// Inverse of twin_set: maps a set of twins back to originals of G.
inline VertexSet original_set(const MycielskiLabel& label, const VertexSet& twins) {
  if (twins.universe() != label.order()) throw InputError("original_set: set is not over μ(G)");
  VertexSet out(label.base_order());
  for (int v : twins.members()) {
    if (label.role(v) != MycielskiRole::twin) {
      throw InputError("original_set: vertex " + std::to_string(v) + " is not a twin");
    }
    out.insert(label.twin_of(v));
  }
  return out;
}

/// Lifts a vertex set of G to the same ids inside μ(G).
inline VertexSet lift_originals(const MycielskiLabel& label, const VertexSet& originals) {
  if (originals.universe() != label.base_order()) throw InputError("lift_originals: set is not over G");
  VertexSet out(label.order());
  for (int v : originals.members()) out.insert(v);
  return out;
}

inline constexpr int kDefaultIterationBound = 10000;

/// μᵏ(G); k = 0 returns G. Refuses when an intermediate order would exceed
/// `max_order`.
inline Graph iterate_mycielskian(const Graph& g, int k, int max_order = kDefaultIterationBound) {
  if (k < 0) throw InputError("iteration count must be non-negative");
  long long order = g.order();
  for (int i = 0; i < k; ++i) {
    order = 2 * order + 1;
    if (order > max_order) {
      throw InputError("μ^" + std::to_string(k) + " would reach order " + std::to_string(order) +
                       ", above the bound " + std::to_string(max_order));
    }
  }
  Graph out = g;
  for (int i = 0; i < k; ++i) out = mycielskian(out).graph;
  return out;
}

}  // namespace extraconn
