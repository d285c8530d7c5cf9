#pragma once

// Mechanical checks of the connectivity laws of the Mycielskian:
//
//   κ(μ(G)) = min{δ(G)+1, 2κ(G)+1}, with κ(μ(G)) = 2κ(G)+1 iff δ(G) >= 2κ(G);
//   κ_{2g+1}(μ(G)) = 2κ_g(G)+1 for g >= 1 when κ_g(G) <= min{g+1, ⌊n/2⌋};
//   κ_{2g+1}(μ(G)) <= 2κ_g(G)+1 whenever κ_g(G) exists, witnessed by F ∪ F' ∪ {u}.

#include <algorithm>
#include <atomic>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "extraconn/connectivity.hpp"
#include "extraconn/error.hpp"
#include "extraconn/graph.hpp"
#include "extraconn/graph6.hpp"
#include "extraconn/mycielskian.hpp"

namespace extraconn {

enum class Status { verified, hypothesis_failed, not_applicable, skipped, violation };

inline std::string_view status_name(Status s) {
  switch (s) {
    case Status::verified: return "verified";
    case Status::hypothesis_failed: return "hypothesis_failed";
    case Status::not_applicable: return "not_applicable";
    case Status::skipped: return "skipped";
    case Status::violation: return "violation";
  }
  return "?";
}

/// One (graph, g) audit row. For g = 0 the row checks the classical law:
/// kappa_g is κ(G), mu_kappa is κ(μ(G)), expected is min{δ+1, 2κ+1} and
/// hypothesis_holds is δ(G) >= 2κ(G). For g >= 1, kappa_g is κ_g(G), mu_kappa
/// is κ_{2g+1}(μ(G)), expected is 2κ_g+1 and hypothesis_holds is
/// κ_g <= min{g+1, ⌊n/2⌋}, with its two halves kept separately.
struct VerificationRecord {
  std::string graph;
  std::string graph6;
  int n = 0;
  int m = 0;
  int g = 0;
  int min_degree = 0;
  std::optional<int> kappa_g;
  std::optional<bool> hypothesis_holds;
  std::optional<bool> hypothesis_g_bound;
  std::optional<bool> hypothesis_half_order;
  std::optional<int> mu_kappa;
  std::optional<int> expected;
  std::optional<bool> equality_holds;
  std::optional<bool> upper_bound_holds;
  std::optional<bool> iff_consistent;
  std::optional<VertexSet> witness;
  std::optional<VertexSet> mu_witness;
  std::optional<VertexSet> upper_witness;
  Status status = Status::not_applicable;
  std::string note;

  friend bool operator==(const VerificationRecord&, const VerificationRecord&) = default;
};

struct CheckOptions {
  Method method = Method::pruned;
  Budget budget{};
};

namespace detail {

inline VerificationRecord blank_record(const Graph& g, int extra, std::string id) {
  VerificationRecord r;
  r.graph = std::move(id);
  r.graph6 = encode_graph6(g);
  r.n = g.order();
  r.m = g.size();
  r.g = extra;
  r.min_degree = min_degree(g);
  return r;
}

inline void require_connected(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) throw InputError("verification needs a connected graph with n >= 2");
}

}  // namespace detail

inline VerificationRecord check_theorem_3_1(const Graph& g, std::string id = {}) {
  detail::require_connected(g);
  auto r = detail::blank_record(g, 0, std::move(id));
  const int kappa = vertex_connectivity(g);
  const int mu_kappa = vertex_connectivity(mycielskian(g).graph);
  r.kappa_g = kappa;
  r.mu_kappa = mu_kappa;
  r.expected = std::min(r.min_degree + 1, 2 * kappa + 1);
  r.hypothesis_holds = r.min_degree >= 2 * kappa;
  r.equality_holds = mu_kappa == *r.expected;
  r.upper_bound_holds = mu_kappa <= 2 * kappa + 1;
  r.iff_consistent = (mu_kappa == 2 * kappa + 1) == *r.hypothesis_holds;
  const bool ok = *r.equality_holds && *r.upper_bound_holds && *r.iff_consistent;
  r.status = ok ? Status::verified : Status::violation;
  return r;
}

/// F ∪ F' ∪ {u} in μ(G) for a g-extra cut F of G.
inline VertexSet witness_upper_cut(const Graph& g, int extra, const VertexSet& cut) {
  if (extra < 1) throw InputError("witness_upper_cut needs g >= 1");
  if (cut.universe() != g.order() || !is_g_extra_cut(g, cut, extra)) {
    throw InputError("witness_upper_cut: " + cut.to_string() + " is not a " + std::to_string(extra) +
                     "-extra cut of the graph");
  }
  const MycielskiLabel label(g.order());
  VertexSet out = lift_originals(label, cut) | twin_set(label, cut);
  out.insert(label.root());
  return out;
}

inline VerificationRecord check_theorem_3_2(const Graph& g, int extra, const CheckOptions& options = {},
                                            std::string id = {}) {
  if (extra < 1) throw InputError("the extra-connectivity law needs g >= 1; use check_theorem_3_1 for g = 0");
  detail::require_connected(g);
  auto r = detail::blank_record(g, extra, std::move(id));

  std::optional<SolveOutcome> base;
  try {
    base = extra_connectivity(g, extra, options.method, options.budget);
  } catch (const BudgetExceeded& e) {
    r.status = Status::skipped;
    r.note = e.what();
    return r;
  }
  if (!base->is_found()) {
    r.status = Status::not_applicable;
    r.note = "no " + std::to_string(extra) + "-extra cut";
    return r;
  }

  const auto& cert = base->certificate();
  const int kappa = cert.value;
  r.kappa_g = kappa;
  r.witness = cert.cut;
  r.hypothesis_g_bound = kappa <= extra + 1;
  r.hypothesis_half_order = kappa <= g.order() / 2;
  r.hypothesis_holds = *r.hypothesis_g_bound && *r.hypothesis_half_order;
  r.expected = 2 * kappa + 1;

  const auto mu = mycielskian(g);
  const VertexSet upper = witness_upper_cut(g, extra, cert.cut);
  r.upper_witness = upper;
  const bool witness_ok = upper.size() == *r.expected && is_g_extra_cut(mu.graph, upper, 2 * extra + 1);

  std::optional<SolveOutcome> lifted;
  try {
    lifted = extra_connectivity(mu.graph, 2 * extra + 1, options.method, options.budget);
  } catch (const BudgetExceeded& e) {
    r.upper_bound_holds = witness_ok;
    r.status = witness_ok ? Status::skipped : Status::violation;
    r.note = e.what();
    return r;
  }
  if (lifted->is_found()) {
    r.mu_kappa = lifted->certificate().value;
    r.mu_witness = lifted->certificate().cut;
  }
  r.upper_bound_holds = witness_ok && r.mu_kappa && *r.mu_kappa <= *r.expected;
  r.equality_holds = r.mu_kappa == r.expected;

  if (!*r.upper_bound_holds) {
    r.status = Status::violation;
  } else if (*r.hypothesis_holds) {
    r.status = *r.equality_holds ? Status::verified : Status::violation;
  } else {
    r.status = Status::hypothesis_failed;
  }
  return r;
}

/// Routes g = 0 to the classical law and g >= 1 to the extra-connectivity law.
inline VerificationRecord verify_graph(const Graph& g, int extra, const CheckOptions& options = {},
                                       std::string id = {}) {
  if (extra < 0) throw InputError("g must be non-negative");
  if (extra == 0) return check_theorem_3_1(g, std::move(id));
  return check_theorem_3_2(g, extra, options, std::move(id));
}

struct MonotonicityEntry {
  int g = 0;
  std::optional<int> value;
  bool skipped = false;

  friend bool operator==(const MonotonicityEntry&, const MonotonicityEntry&) = default;
};

struct MonotonicityAudit {
  std::vector<MonotonicityEntry> entries;
  bool monotone = true;
};

/// κ_g for g = 0..g_max. Monotone means non-decreasing over the defined
/// prefix and NotFound from the first NotFound on; skipped entries are
/// ignored.
inline MonotonicityAudit monotonicity_audit(const Graph& graph, int g_max, const CheckOptions& options = {}) {
  if (g_max < 0) throw InputError("g_max must be non-negative");
  MonotonicityAudit audit;
  std::optional<int> previous;
  bool seen_not_found = false;
  for (int g = 0; g <= g_max; ++g) {
    MonotonicityEntry entry{g, std::nullopt, false};
    try {
      entry.value = extra_connectivity(graph, g, options.method, options.budget).value();
    } catch (const BudgetExceeded&) {
      entry.skipped = true;
    }
    if (!entry.skipped) {
      if (entry.value) {
        if (seen_not_found || (previous && *entry.value < *previous)) audit.monotone = false;
        previous = entry.value;
      } else {
        seen_not_found = true;
      }
    }
    audit.entries.push_back(entry);
  }
  return audit;
}

// ---------------------------------------------------------------------------
// Batches

struct CorpusItem {
  std::string id;
  Graph graph;
};

struct BatchOptions {
  CheckOptions check{};
  int jobs = 1;
};

struct BatchSummary {
  int records = 0;
  int verified = 0;
  int hypothesis_failed = 0;
  int not_applicable = 0;
  int skipped = 0;
  int violations = 0;

  friend bool operator==(const BatchSummary&, const BatchSummary&) = default;
};

struct BatchReport {
  std::vector<VerificationRecord> records;
  BatchSummary summary;
};

inline BatchSummary summarize(const std::vector<VerificationRecord>& records) {
  BatchSummary s;
  s.records = static_cast<int>(records.size());
  for (const auto& r : records) {
    switch (r.status) {
      case Status::verified: ++s.verified; break;
      case Status::hypothesis_failed: ++s.hypothesis_failed; break;
      case Status::not_applicable: ++s.not_applicable; break;
      case Status::skipped: ++s.skipped; break;
      case Status::violation: ++s.violations; break;
    }
  }
  return s;
}

/// One record per (graph, g) in corpus-major order. Work is spread over
/// `jobs` threads; each record lands in its fixed slot so the output does
/// not depend on scheduling.
inline BatchReport run_batch(const std::vector<CorpusItem>& corpus, const std::vector<int>& g_list,
                             const BatchOptions& options = {}) {
  if (options.jobs < 1) throw InputError("parallelism must be at least 1");
  for (int g : g_list) {
    if (g < 0) throw InputError("g must be non-negative");
  }
  const std::size_t per_graph = g_list.size();
  const std::size_t total = corpus.size() * per_graph;
  BatchReport report;
  report.records.resize(total);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next.fetch_add(1); k < total; k = next.fetch_add(1)) {
      const auto& item = corpus[k / per_graph];
      report.records[k] = verify_graph(item.graph, g_list[k % per_graph], options.check, item.id);
    }
  };
  const auto threads = std::min<std::size_t>(static_cast<std::size_t>(options.jobs), std::max<std::size_t>(total, 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  report.summary = summarize(report.records);
  return report;
}

}  // namespace extraconn
