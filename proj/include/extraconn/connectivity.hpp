#pragma once

// Exact vertex connectivity κ(G) and g-extra connectivity κ_g(G).
//
// κ(G) is computed with Menger's theorem: unit vertex capacities via vertex
// splitting and augmenting paths between non-adjacent pairs. κ_g(G) has no
// known polynomial algorithm, so it is found by exhaustive search over cut
// sizes in increasing order, enumerating subsets of each size in
// lexicographic order. The first hit is therefore a minimum cut and the
// lexicographically smallest one of that size.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "extraconn/error.hpp"
#include "extraconn/graph.hpp"

namespace extraconn {

// ---------------------------------------------------------------------------
// Classical connectivity

namespace detail {

// Unit-capacity flow network on split vertices: v_in = 2v, v_out = 2v+1.
class SplitFlow {
 public:
  SplitFlow(const Graph& g, int source, int sink) : head_(2 * static_cast<std::size_t>(g.order()), -1) {
    const int n = g.order();
    for (int v = 0; v < n; ++v) {
      const int cap = (v == source || v == sink) ? n : 1;
      add_arc(2 * v, 2 * v + 1, cap);
    }
    for (auto [u, v] : g.edges()) {
      add_arc(2 * u + 1, 2 * v, n);
      add_arc(2 * v + 1, 2 * u, n);
    }
    source_ = 2 * source + 1;
    sink_ = 2 * sink;
  }

  // Augments until the flow reaches `limit` or no path remains.
  int max_flow(int limit) {
    int flow = 0;
    std::vector<int> parent_arc(head_.size());
    while (flow < limit) {
      std::fill(parent_arc.begin(), parent_arc.end(), -1);
      std::queue<int> queue;
      queue.push(source_);
      parent_arc[static_cast<std::size_t>(source_)] = -2;
      while (!queue.empty() && parent_arc[static_cast<std::size_t>(sink_)] == -1) {
        const int x = queue.front();
        queue.pop();
        for (int a = head_[static_cast<std::size_t>(x)]; a != -1; a = arcs_[static_cast<std::size_t>(a)].next) {
          const Arc& arc = arcs_[static_cast<std::size_t>(a)];
          if (arc.cap > 0 && parent_arc[static_cast<std::size_t>(arc.to)] == -1) {
            parent_arc[static_cast<std::size_t>(arc.to)] = a;
            queue.push(arc.to);
          }
        }
      }
      if (parent_arc[static_cast<std::size_t>(sink_)] == -1) break;
      for (int x = sink_; x != source_;) {
        const int a = parent_arc[static_cast<std::size_t>(x)];
        arcs_[static_cast<std::size_t>(a)].cap -= 1;
        arcs_[static_cast<std::size_t>(a ^ 1)].cap += 1;
        x = arcs_[static_cast<std::size_t>(a ^ 1)].to;
      }
      ++flow;
    }
    return flow;
  }

 private:
  struct Arc {
    int to;
    int cap;
    int next;
  };

  void add_arc(int from, int to, int cap) {
    arcs_.push_back({to, cap, head_[static_cast<std::size_t>(from)]});
    head_[static_cast<std::size_t>(from)] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, 0, head_[static_cast<std::size_t>(to)]});
    head_[static_cast<std::size_t>(to)] = static_cast<int>(arcs_.size()) - 1;
  }

  std::vector<int> head_;
  std::vector<Arc> arcs_;
  int source_ = 0;
  int sink_ = 0;
};

}  // namespace detail

/// Maximum number of internally vertex-disjoint s-t paths for non-adjacent
/// s and t, capped at `limit`.
inline int local_vertex_connectivity(const Graph& g, int s, int t,
                                     int limit = std::numeric_limits<int>::max()) {
  if (s < 0 || t < 0 || s >= g.order() || t >= g.order() || s == t) {
    throw InputError("local connectivity needs two distinct vertices of the graph");
  }
  if (g.adjacent(s, t)) throw InputError("local vertex connectivity is undefined for adjacent vertices");
  return detail::SplitFlow(g, s, t).max_flow(limit);
}

/// κ(G): n-1 for complete graphs, otherwise the smallest local connectivity
/// over non-adjacent pairs. Only pairs (v_i, v_j) with i <= current best are
/// examined: some v_i with i <= κ lies outside any minimum cut.
inline int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw InputError("vertex connectivity needs at least two vertices");
  if (!is_connected(g)) throw InputError("vertex connectivity needs a connected graph");
  if (is_complete(g)) return n - 1;
  int best = min_degree(g);
  for (int i = 0; i <= best && i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) continue;
      best = std::min(best, local_vertex_connectivity(g, i, j, best));
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// g-extra connectivity

enum class Method { naive, pruned };

inline std::string_view method_name(Method m) { return m == Method::naive ? "naive" : "pruned"; }

/// Largest graph orders each search method accepts.
struct Budget {
  int max_naive_order = 12;
  int max_pruned_order = 20;
};

inline constexpr int kMaskLimit = 64;

struct ExtraCutCertificate {
  int g = 0;
  VertexSet cut;
  int value = 0;
  std::vector<int> component_sizes;  // ascending

  friend bool operator==(const ExtraCutCertificate&, const ExtraCutCertificate&) = default;
};

/// Either a minimum g-extra cut or the statement that none exists.
class SolveOutcome {
 public:
  static SolveOutcome found(ExtraCutCertificate cert) { return SolveOutcome(cert.g, std::move(cert)); }
  static SolveOutcome not_found(int g) { return SolveOutcome(g, std::nullopt); }

  int g() const noexcept { return g_; }
  bool is_found() const noexcept { return certificate_.has_value(); }
  const ExtraCutCertificate& certificate() const {
    if (!certificate_) throw InputError("no g-extra cut exists; outcome has no certificate");
    return *certificate_;
  }
  std::optional<int> value() const {
    return certificate_ ? std::optional<int>(certificate_->value) : std::nullopt;
  }

  friend bool operator==(const SolveOutcome&, const SolveOutcome&) = default;

 private:
  SolveOutcome(int g, std::optional<ExtraCutCertificate> cert) : g_(g), certificate_(std::move(cert)) {}

  int g_;
  std::optional<ExtraCutCertificate> certificate_;
};

/// True iff G - S has at least two components, each with at least g+1 vertices.
inline bool is_g_extra_cut(const Graph& graph, const VertexSet& cut, int g) {
  if (g < 0) throw InputError("g must be non-negative");
  const auto components = remove_and_split(graph, cut);
  if (components.size() < 2) return false;
  return std::all_of(components.begin(), components.end(),
                     [g](const VertexSet& c) { return c.size() >= g + 1; });
}

namespace detail {

struct MaskGraph {
  int n = 0;
  std::uint64_t all = 0;
  std::array<std::uint64_t, kMaskLimit> adj{};

  explicit MaskGraph(const Graph& g) : n(g.order()) {
    all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbor_set(v).mask();
  }

  std::uint64_t component_of(int start, std::uint64_t alive) const {
    std::uint64_t comp = std::uint64_t{1} << start;
    std::uint64_t frontier = comp;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (auto f = frontier; f != 0; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      next &= alive & ~comp;
      comp |= next;
      frontier = next;
    }
    return comp;
  }

  // Does removing `cut` leave >= 2 components, all of size >= g+1?
  bool splits(std::uint64_t cut, int g) const {
    std::uint64_t alive = all & ~cut;
    if (alive == 0) return false;
    int pieces = 0;
    while (alive != 0) {
      const std::uint64_t comp = component_of(std::countr_zero(alive), alive);
      if (std::popcount(comp) < g + 1) return false;
      alive &= ~comp;
      ++pieces;
      if (pieces == 1 && alive == 0) return false;
    }
    return pieces >= 2;
  }

  std::vector<int> component_sizes(std::uint64_t cut) const {
    std::vector<int> sizes;
    for (std::uint64_t alive = all & ~cut; alive != 0;) {
      const std::uint64_t comp = component_of(std::countr_zero(alive), alive);
      sizes.push_back(std::popcount(comp));
      alive &= ~comp;
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  }
};

// Lexicographic enumeration of `size`-subsets. `chosen` holds the prefix;
// vertices below `next` that are not chosen are excluded for good.
class LexSearch {
 public:
  LexSearch(const MaskGraph& graph, int g, bool prune) : graph_(graph), g_(g), prune_(prune) {}

  std::optional<std::uint64_t> first_cut(int size) {
    size_ = size;
    return descend(0, 0, 0);
  }

 private:
  std::optional<std::uint64_t> descend(std::uint64_t chosen, int depth, int next) {
    if (depth == size_) {
      if (graph_.splits(chosen, g_)) return chosen;
      return std::nullopt;
    }
    const int remaining = size_ - depth;
    for (int v = next; v <= graph_.n - remaining; ++v) {
      const std::uint64_t with_v = chosen | (std::uint64_t{1} << v);
      if (prune_ && stranded(with_v, v + 1)) continue;
      if (auto hit = descend(with_v, depth + 1, v + 1)) return hit;
    }
    return std::nullopt;
  }

  // For g >= 1 a surviving vertex whose whole neighbourhood lies in the cut
  // would be a component of size 1. Excluded vertices (below `next`, not
  // chosen) will survive, so such a branch holds no g-extra cut.
  bool stranded(std::uint64_t chosen, int next) const {
    if (g_ < 1) return false;
    const std::uint64_t below = next >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << next) - 1;
    for (auto excluded = below & graph_.all & ~chosen; excluded != 0; excluded &= excluded - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(excluded));
      if ((graph_.adj[v] & ~chosen) == 0) return true;
    }
    return false;
  }

  const MaskGraph& graph_;
  int g_;
  bool prune_;
  int size_ = 0;
};

}  // namespace detail

/// κ_g(G) with a certificate, or NotFound when G has no g-extra cut.
///
/// Cut sizes are tried from a lower bound up to n - 2(g+1); beyond that two
/// components of g+1 vertices cannot both survive. The naive method starts
/// at 0 and checks every subset. The pruned method starts at κ(G), answers
/// NotFound for complete graphs, and discards branches that already isolate
/// a surviving vertex when g >= 1. Both return the same outcome.
inline SolveOutcome extra_connectivity(const Graph& graph, int g, Method method = Method::pruned,
                                       const Budget& budget = {}) {
  if (g < 0) throw InputError("g must be non-negative");
  const int n = graph.order();
  if (n < 1 || !is_connected(graph)) throw InputError("extra connectivity needs a connected graph");
  const int limit = method == Method::naive ? budget.max_naive_order : budget.max_pruned_order;
  if (n > limit || n > kMaskLimit) {
    throw BudgetExceeded(std::string(method_name(method)) + " search refuses order " + std::to_string(n) +
                         " (budget " + std::to_string(std::min(limit, kMaskLimit)) + ")");
  }

  const int max_size = n - 2 * (g + 1);
  if (max_size < 0) return SolveOutcome::not_found(g);

  int min_size = 0;
  if (method == Method::pruned) {
    if (is_complete(graph)) return SolveOutcome::not_found(g);
    min_size = vertex_connectivity(graph);
  }

  const detail::MaskGraph masks(graph);
  detail::LexSearch search(masks, g, method == Method::pruned);
  for (int size = min_size; size <= max_size; ++size) {
    if (auto cut = search.first_cut(size)) {
      return SolveOutcome::found({g, VertexSet::from_mask(n, *cut), size, masks.component_sizes(*cut)});
    }
  }
  return SolveOutcome::not_found(g);
}

}  // namespace extraconn
