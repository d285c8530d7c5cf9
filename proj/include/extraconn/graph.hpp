#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "extraconn/error.hpp"

namespace extraconn {

using Edge = std::pair<int, int>;

/// Subset of the vertex ids 0..universe-1, stored as a packed bitset.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {
    if (universe < 0) throw InputError("vertex set universe must be non-negative");
  }
  VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
    for (int v : members) insert(v);
  }
  VertexSet(int universe, std::span<const int> members) : VertexSet(universe) {
    for (int v : members) insert(v);
  }

  // Only for universes of at most 64 vertices.
  static VertexSet from_mask(int universe, std::uint64_t mask) {
    if (universe > 64) throw InputError("from_mask needs a universe of at most 64 vertices");
    VertexSet s(universe);
    if (universe < 64) mask &= (std::uint64_t{1} << universe) - 1;
    if (!s.words_.empty()) s.words_[0] = mask;
    return s;
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.insert(v);
    return s;
  }

  int universe() const noexcept { return universe_; }

  int size() const noexcept {
    int total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
  }

  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  bool contains(int v) const noexcept {
    return v >= 0 && v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
  }

  void insert(int v) {
    check(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void erase(int v) {
    check(v);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  std::uint64_t mask() const {
    if (universe_ > 64) throw InputError("mask() needs a universe of at most 64 vertices");
    return words_.empty() ? 0 : words_[0];
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (auto w = words_[i]; w != 0; w &= w - 1) {
        out.push_back(static_cast<int>(i * 64) + std::countr_zero(w));
      }
    }
    return out;
  }

  bool is_subset_of(const VertexSet& other) const {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
  }

  bool intersects(const VertexSet& other) const {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
  }

  VertexSet& operator|=(const VertexSet& o) { return combine(o, [](auto a, auto b) { return a | b; }); }
  VertexSet& operator&=(const VertexSet& o) { return combine(o, [](auto a, auto b) { return a & b; }); }
  VertexSet& operator-=(const VertexSet& o) { return combine(o, [](auto a, auto b) { return a & ~b; }); }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const { return full(universe_) - *this; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int v : members()) {
      if (!first) out += ",";
      out += std::to_string(v);
      first = false;
    }
    return out + "}";
  }

 private:
  static std::size_t word_count(int universe) {
    return universe <= 0 ? 0 : static_cast<std::size_t>((universe + 63) / 64);
  }

  void check(int v) const {
    if (v < 0 || v >= universe_) {
      throw InputError("vertex " + std::to_string(v) + " outside universe of size " +
                       std::to_string(universe_));
    }
  }

  void same_universe(const VertexSet& other) const {
    if (other.universe_ != universe_) throw InputError("vertex sets over different universes");
  }

  template <typename Op>
  VertexSet& combine(const VertexSet& other, Op op) {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] = op(words_[i], other.words_[i]);
    return *this;
  }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Immutable simple undirected graph on vertex ids 0..n-1.
class Graph {
 public:
  Graph() = default;

  int order() const noexcept { return static_cast<int>(adjacency_.size()); }
  int size() const noexcept { return edge_count_; }

  std::span<const int> neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  const VertexSet& neighbor_set(int v) const { return rows_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(int u, int v) const { return neighbor_set(u).contains(v); }

  std::vector<int> degrees() const {
    std::vector<int> out(adjacency_.size());
    for (std::size_t v = 0; v < adjacency_.size(); ++v) out[v] = static_cast<int>(adjacency_[v].size());
    return out;
  }

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < order(); ++u) {
      for (int v : adjacency_[static_cast<std::size_t>(u)]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

  friend Graph build_graph(int n, std::span<const Edge> edges);

 private:
  std::vector<std::vector<int>> adjacency_;
  std::vector<VertexSet> rows_;
  int edge_count_ = 0;
};

/// Builds a graph from an edge list. Self-loops, repeated pairs (in either
/// orientation) and out-of-range ids are rejected.
inline Graph build_graph(int n, std::span<const Edge> edges) {
  if (n < 0) throw InputError("graph order must be non-negative");
  Graph g;
  g.adjacency_.resize(static_cast<std::size_t>(n));
  g.rows_.assign(static_cast<std::size_t>(n), VertexSet(n));
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an id outside 0.." + std::to_string(n - 1));
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    auto& row = g.rows_[static_cast<std::size_t>(u)];
    if (row.contains(v)) {
      throw InputError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    row.insert(v);
    g.rows_[static_cast<std::size_t>(v)].insert(u);
    g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
    g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
    ++g.edge_count_;
  }
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  return g;
}

inline Graph build_graph(int n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

inline Graph build_graph(int n, const std::vector<Edge>& edges) {
  return build_graph(n, std::span<const Edge>(edges));
}

/// δ(G).
inline int min_degree(const Graph& g) {
  if (g.order() == 0) throw InputError("minimum degree of the empty graph is undefined");
  auto d = g.degrees();
  return *std::min_element(d.begin(), d.end());
}

/// N_G(X): vertices outside X with a neighbor in X.
inline VertexSet set_neighborhood(const Graph& g, const VertexSet& x) {
  if (x.universe() != g.order()) throw InputError("vertex set does not match graph order");
  VertexSet out(g.order());
  for (int v : x.members()) out |= g.neighbor_set(v);
  return out - x;
}

/// Components of G - S, ordered by their minimum vertex id.
inline std::vector<VertexSet> remove_and_split(const Graph& g, const VertexSet& removed) {
  if (removed.universe() != g.order()) throw InputError("vertex set does not match graph order");
  const int n = g.order();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<VertexSet> out;
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (removed.contains(start) || comp[static_cast<std::size_t>(start)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back(n);
    comp[static_cast<std::size_t>(start)] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out.back().insert(v);
      for (int w : g.neighbors(v)) {
        if (removed.contains(w) || comp[static_cast<std::size_t>(w)] >= 0) continue;
        comp[static_cast<std::size_t>(w)] = id;
        stack.push_back(w);
      }
    }
  }
  return out;
}

inline bool is_connected(const Graph& g) {
  return remove_and_split(g, VertexSet(g.order())).size() == 1;
}

inline bool is_complete(const Graph& g) {
  const long long n = g.order();
  return 2LL * g.size() == n * (n - 1);
}

inline bool has_triangle(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    if (g.neighbor_set(u).intersects(g.neighbor_set(v))) return true;
  }
  return false;
}

/// Subgraph induced by `keep`, relabelled in increasing id order.
inline Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  auto kept = keep.members();
  for (std::size_t i = 0; i < kept.size(); ++i) index[static_cast<std::size_t>(kept[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    int a = index[static_cast<std::size_t>(u)], b = index[static_cast<std::size_t>(v)];
    if (a >= 0 && b >= 0) edges.emplace_back(a, b);
  }
  return build_graph(static_cast<int>(kept.size()), edges);
}

inline constexpr int kMaxIsomorphismOrder = 12;

namespace detail {

inline bool extend_isomorphism(const Graph& g, const Graph& h, std::vector<int>& map,
                               std::vector<bool>& used, int v) {
  const int n = g.order();
  if (v == n) return true;
  for (int w = 0; w < n; ++w) {
    if (used[static_cast<std::size_t>(w)] || g.degree(v) != h.degree(w)) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u) {
      ok = g.adjacent(u, v) == h.adjacent(map[static_cast<std::size_t>(u)], w);
    }
    if (!ok) continue;
    map[static_cast<std::size_t>(v)] = w;
    used[static_cast<std::size_t>(w)] = true;
    if (extend_isomorphism(g, h, map, used, v + 1)) return true;
    used[static_cast<std::size_t>(w)] = false;
  }
  return false;
}

}  // namespace detail

/// Backtracking isomorphism test for small graphs (order <= 12).
inline bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() > kMaxIsomorphismOrder || h.order() > kMaxIsomorphismOrder) {
    throw InputError("are_isomorphic supports graphs of order at most " +
                     std::to_string(kMaxIsomorphismOrder));
  }
  if (g.order() != h.order() || g.size() != h.size()) return false;
  auto dg = g.degrees(), dh = h.degrees();
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  std::vector<int> map(static_cast<std::size_t>(g.order()), -1);
  std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
  return detail::extend_isomorphism(g, h, map, used, 0);
}

}  // namespace extraconn
