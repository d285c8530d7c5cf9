#pragma once

// Brute-force reference computations for tests. Deliberately naive and
// independent of the library's search code: plain adjacency matrices, every
// subset of the vertex set, recursive DFS.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "extraconn/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix_of(const extraconn::Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  Matrix a(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges()) {
    a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
    a[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
  }
  return a;
}

inline void dfs(const Matrix& a, const std::vector<bool>& removed, std::vector<int>& label, std::size_t v, int id) {
  label[v] = id;
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[v][w] && !removed[w] && label[w] < 0) dfs(a, removed, label, w, id);
  }
}

/// Component sizes of G - removed.
inline std::vector<int> component_sizes(const Matrix& a, const std::vector<bool>& removed) {
  std::vector<int> label(a.size(), -1);
  int count = 0;
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (!removed[v] && label[v] < 0) dfs(a, removed, label, v, count++);
  }
  std::vector<int> sizes(static_cast<std::size_t>(count), 0);
  for (std::size_t v = 0; v < a.size(); ++v)
    if (label[v] >= 0) ++sizes[static_cast<std::size_t>(label[v])];
  return sizes;
}

inline std::vector<bool> subset(std::size_t n, std::uint64_t bits) {
  std::vector<bool> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = ((bits >> i) & 1U) != 0;
  return s;
}

inline std::vector<int> members(const std::vector<bool>& s) {
  std::vector<int> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i]) out.push_back(static_cast<int>(i));
  return out;
}

inline bool is_extra_cut(const Matrix& a, const std::vector<bool>& removed, int g) {
  const auto sizes = component_sizes(a, removed);
  return sizes.size() >= 2 && std::all_of(sizes.begin(), sizes.end(), [g](int s) { return s >= g + 1; });
}

/// Minimum g-extra cut over all 2^n subsets; ties broken by the
/// lexicographically smallest sorted member list.
inline std::optional<std::pair<int, std::vector<int>>> extra_connectivity(const extraconn::Graph& g, int extra) {
  const auto a = matrix_of(g);
  const std::size_t n = a.size();
  std::optional<std::pair<int, std::vector<int>>> best;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const auto s = subset(n, bits);
    if (!is_extra_cut(a, s, extra)) continue;
    auto m = members(s);
    const int size = static_cast<int>(m.size());
    if (!best || size < best->first || (size == best->first && m < best->second)) best = {{size, m}};
  }
  return best;
}

/// Classical κ: smallest S with G - S disconnected, or n-1 when none exists.
inline int vertex_connectivity(const extraconn::Graph& g) {
  const auto a = matrix_of(g);
  const std::size_t n = a.size();
  int best = static_cast<int>(n) - 1;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const auto s = subset(n, bits);
    if (component_sizes(a, s).size() >= 2) best = std::min(best, static_cast<int>(members(s).size()));
  }
  return best;
}

/// Counts connected labeled graphs on n vertices over all 2^C(n,2) edge sets.
inline long count_labeled_connected(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  long count = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs.size()); ++bits) {
    Matrix a(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((bits >> k) & 1U) {
        a[static_cast<std::size_t>(pairs[k].first)][static_cast<std::size_t>(pairs[k].second)] = true;
        a[static_cast<std::size_t>(pairs[k].second)][static_cast<std::size_t>(pairs[k].first)] = true;
      }
    }
    if (component_sizes(a, std::vector<bool>(static_cast<std::size_t>(n), false)).size() == 1) ++count;
  }
  return count;
}

/// Isomorphism by trying every permutation.
inline bool isomorphic(const extraconn::Graph& g, const extraconn::Graph& h) {
  if (g.order() != h.order()) return false;
  const auto a = matrix_of(g), b = matrix_of(h);
  std::vector<std::size_t> perm(a.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i)
      for (std::size_t j = 0; j < a.size() && ok; ++j) ok = a[i][j] == b[perm[i]][perm[j]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace oracle
