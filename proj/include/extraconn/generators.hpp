#pragma once

#include <charconv>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "extraconn/error.hpp"
#include "extraconn/graph.hpp"

namespace extraconn {

enum class Family { path, cycle, complete, complete_bipartite, star, hypercube, petersen };

struct FamilySpec {
  Family family = Family::path;
  std::vector<int> params;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::star: return "star";
    case Family::hypercube: return "hypercube";
    case Family::petersen: return "petersen";
  }
  return "?";
}

inline std::string to_string(const FamilySpec& spec) {
  std::string out(family_name(spec.family));
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    out += (i == 0 ? ":" : ",");
    out += std::to_string(spec.params[i]);
  }
  return out;
}

/// Checks the parameter count and range of a family spec.
inline void validate(const FamilySpec& spec) {
  auto need = [&](std::size_t count) {
    if (spec.params.size() != count) {
      throw InputError(std::string(family_name(spec.family)) + " takes " + std::to_string(count) +
                       " parameter(s), got " + std::to_string(spec.params.size()));
    }
  };
  auto at_least = [&](int value, int lo, std::string_view what) {
    if (value < lo) {
      throw InputError(std::string(family_name(spec.family)) + ": " + std::string(what) + " must be >= " +
                       std::to_string(lo) + ", got " + std::to_string(value));
    }
  };
  switch (spec.family) {
    case Family::path:
    case Family::complete:
      need(1);
      at_least(spec.params[0], 1, "order");
      break;
    case Family::cycle:
      need(1);
      at_least(spec.params[0], 3, "order");
      break;
    case Family::complete_bipartite:
      need(2);
      at_least(spec.params[0], 1, "part size");
      at_least(spec.params[1], 1, "part size");
      break;
    case Family::star:
      need(1);
      at_least(spec.params[0], 1, "leaf count");
      break;
    case Family::hypercube:
      need(1);
      at_least(spec.params[0], 1, "dimension");
      if (spec.params[0] > 13) throw InputError("hypercube: dimension must be <= 13");
      break;
    case Family::petersen:
      need(0);
      break;
  }
  for (int p : spec.params) {
    if (p > 10000) throw InputError("family parameter " + std::to_string(p) + " too large");
  }
}

/// Parses "name:p1,p2" (':' also accepted between parameters), e.g. "cycle:6",
/// "complete_bipartite:2,3", "petersen".
inline FamilySpec parse_family(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  FamilySpec spec;
  constexpr Family kAll[] = {Family::path,      Family::cycle,     Family::complete, Family::complete_bipartite,
                             Family::star,      Family::hypercube, Family::petersen};
  bool known = false;
  for (Family f : kAll) {
    if (family_name(f) == name) {
      spec.family = f;
      known = true;
    }
  }
  if (!known) throw InputError("unknown graph family '" + std::string(name) + "'");
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    while (true) {
      const auto sep = rest.find_first_of(",:");
      const std::string_view token = rest.substr(0, sep);
      int value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
        throw InputError("bad parameter '" + std::string(token) + "' in family spec '" + std::string(text) + "'");
      }
      spec.params.push_back(value);
      if (sep == std::string_view::npos) break;
      rest = rest.substr(sep + 1);
    }
  }
  validate(spec);
  return spec;
}

/// Canonical family members. Paths and cycles use consecutive ids, stars put
/// the centre at 0, hypercube ids are coordinate bit patterns, Petersen is the
/// outer 5-cycle 0..4, spokes i~i+5 and the inner pentagram on 5..9.
inline Graph gen_named(const FamilySpec& spec) {
  validate(spec);
  std::vector<Edge> edges;
  int n = 0;
  switch (spec.family) {
    case Family::path:
      n = spec.params[0];
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::cycle:
      n = spec.params[0];
      for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
      break;
    case Family::complete:
      n = spec.params[0];
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) edges.emplace_back(i, j);
      break;
    case Family::complete_bipartite: {
      const int a = spec.params[0], b = spec.params[1];
      n = a + b;
      for (int i = 0; i < a; ++i)
        for (int j = a; j < n; ++j) edges.emplace_back(i, j);
      break;
    }
    case Family::star:
      n = spec.params[0] + 1;
      for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
      break;
    case Family::hypercube: {
      const int d = spec.params[0];
      n = 1 << d;
      for (int v = 0; v < n; ++v)
        for (int k = 0; k < d; ++k)
          if (int w = v ^ (1 << k); v < w) edges.emplace_back(v, w);
      break;
    }
    case Family::petersen:
      n = 10;
      for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);
      }
      break;
  }
  return build_graph(n, edges);
}

inline Graph gen_named(std::string_view text) { return gen_named(parse_family(text)); }

namespace detail {

// Each pair (i, j), i < j, visited in graph6 column order, is kept when the
// top 53 bits of the next mt19937_64 output, read as a fraction of 2^53, fall
// below p. mt19937_64's output sequence is fixed by the C++ standard.
inline Graph draw_gnp(int n, double p, std::mt19937_64& engine) {
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
      if (u < p) edges.emplace_back(i, j);
    }
  }
  return build_graph(n, edges);
}

inline void check_gnp(int n, double p) {
  if (n < 0) throw InputError("random graph order must be non-negative");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
}

}  // namespace detail

/// Erdős–Rényi G(n, p), reproducible from (n, p, seed) on every platform.
inline Graph gen_random(int n, double p, std::uint64_t seed) {
  detail::check_gnp(n, p);
  std::mt19937_64 engine(seed);
  return detail::draw_gnp(n, p, engine);
}

/// Draws G(n, p) samples from one seeded stream until a connected one appears.
inline Graph gen_random_connected(int n, double p, std::uint64_t seed, int max_attempts = 100000) {
  detail::check_gnp(n, p);
  if (n < 1) throw InputError("a connected random graph needs at least one vertex");
  std::mt19937_64 engine(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Graph g = detail::draw_gnp(n, p, engine);
    if (is_connected(g)) return g;
  }
  throw InputError("no connected sample within " + std::to_string(max_attempts) + " attempts");
}

inline constexpr int kMaxEnumerationOrder = 6;

/// Visits every labeled connected graph on n vertices exactly once. Candidate
/// k has pair number b (graph6 column order) present iff bit b of k is set;
/// candidates are visited in increasing k.
template <typename Visitor>
void for_each_labeled_connected(int n, Visitor&& visit) {
  if (n < 1) throw InputError("labeled enumeration needs n >= 1");
  if (n > kMaxEnumerationOrder) {
    throw InputError("built-in enumeration supports n <= " + std::to_string(kMaxEnumerationOrder) +
                     "; supply larger corpora as a graph6 file (e.g. from nauty's geng -c)");
  }
  std::vector<Edge> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  const std::uint32_t limit = std::uint32_t{1} << pairs.size();
  std::vector<Edge> edges;
  for (std::uint32_t k = 0; k < limit; ++k) {
    edges.clear();
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if ((k >> b) & 1U) edges.push_back(pairs[b]);
    if (static_cast<int>(edges.size()) < n - 1) continue;
    Graph g = build_graph(n, edges);
    if (is_connected(g)) visit(std::move(g));
  }
}

inline std::vector<Graph> enumerate_labeled_connected(int n) {
  std::vector<Graph> out;
  for_each_labeled_connected(n, [&](Graph g) { out.push_back(std::move(g)); });
  return out;
}

}  // namespace extraconn
