#pragma once

// Command-line front end shared by the `extraconn` tool and its tests.
//
// Exit status: 0 all checks hold, 1 a violation was found, 2 usage or input
// error, 3 an instance exceeded a solver budget without --skip-on-budget.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "extraconn/connectivity.hpp"
#include "extraconn/generators.hpp"
#include "extraconn/graph6.hpp"
#include "extraconn/mycielskian.hpp"
#include "extraconn/report.hpp"
#include "extraconn/verification.hpp"

namespace extraconn::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2, kBudget = 3 };

struct SourceOptions {
  std::string family;
  std::string graph6;
  std::string edge_file;
  std::string graph6_file;
  std::string enumerate;
  std::string random;
  std::uint64_t seed = 0;
};

struct CliInvocation {
  std::string subcommand;
  SourceOptions source;
  std::vector<int> g_values;
  std::string method = "pruned";
  std::string format = "human";
  std::string output;
  int jobs = 1;
  int k = 1;
  Budget budget{};
  bool skip_on_budget = false;
};

inline int default_jobs() {
  if (const char* env = std::getenv("EXTRACONN_JOBS")) {
    try {
      const int jobs = std::stoi(env);
      if (jobs >= 1) return jobs;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

inline std::vector<CorpusItem> load_source(const SourceOptions& s, std::istream& stdin_stream) {
  const int given = !s.family.empty() + !s.graph6.empty() + !s.edge_file.empty() + !s.graph6_file.empty() +
                    !s.enumerate.empty() + !s.random.empty();
  if (given == 0) throw InputError("no graph source given (--family, --graph6, --edges, --g6file, --enumerate, --random)");
  if (given > 1) throw InputError("conflicting graph sources: give exactly one");

  std::vector<CorpusItem> items;
  if (!s.family.empty()) {
    const auto spec = parse_family(s.family);
    items.push_back({to_string(spec), gen_named(spec)});
  } else if (!s.graph6.empty()) {
    items.push_back({s.graph6, decode_graph6(s.graph6)});
  } else if (!s.edge_file.empty()) {
    std::ifstream in(s.edge_file);
    if (!in) throw InputError("cannot open edge list '" + s.edge_file + "'");
    items.push_back({s.edge_file, read_edge_list(in)});
  } else if (!s.graph6_file.empty()) {
    auto read = [&](std::istream& in) {
      for_each_graph6(in, [&](Graph g, std::size_t line) {
        items.push_back({s.graph6_file + ":" + std::to_string(line), std::move(g)});
      });
    };
    if (s.graph6_file == "-") {
      read(stdin_stream);
    } else {
      std::ifstream in(s.graph6_file);
      if (!in) throw InputError("cannot open graph6 file '" + s.graph6_file + "'");
      read(in);
    }
  } else if (!s.enumerate.empty()) {
    // "N" enumerates orders 2..N, "A..B" orders A..B.
    int lo = 2, hi = 0;
    try {
      if (const auto dots = s.enumerate.find(".."); dots != std::string::npos) {
        lo = std::stoi(s.enumerate.substr(0, dots));
        hi = std::stoi(s.enumerate.substr(dots + 2));
      } else {
        hi = std::stoi(s.enumerate);
      }
    } catch (const std::exception&) {
      throw InputError("bad --enumerate value '" + s.enumerate + "'");
    }
    if (lo < 1 || hi < lo) throw InputError("bad --enumerate range '" + s.enumerate + "'");
    for (int n = lo; n <= hi; ++n) {
      int index = 0;
      for_each_labeled_connected(n, [&](Graph g) {
        items.push_back({"enum" + std::to_string(n) + "#" + std::to_string(index++), std::move(g)});
      });
    }
  } else {
    const auto colon = s.random.find(':');
    if (colon == std::string::npos) throw InputError("--random expects N:P");
    int n = 0;
    double p = 0;
    try {
      n = std::stoi(s.random.substr(0, colon));
      p = std::stod(s.random.substr(colon + 1));
    } catch (const std::exception&) {
      throw InputError("bad --random value '" + s.random + "'");
    }
    items.push_back({"random:" + s.random + "@" + std::to_string(s.seed), gen_random(n, p, s.seed)});
  }
  return items;
}

inline const CorpusItem& single(const std::vector<CorpusItem>& items) {
  if (items.size() != 1) {
    throw InputError("this subcommand takes exactly one graph, the source produced " + std::to_string(items.size()));
  }
  return items.front();
}

inline nlohmann::ordered_json graph_json(const std::string& id, const Graph& g) {
  nlohmann::ordered_json j;
  j["graph"] = id;
  j["graph6"] = encode_graph6(g);
  j["n"] = g.order();
  j["m"] = g.size();
  auto edges = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = edges;
  return j;
}

inline std::string render_graphs(const std::vector<CorpusItem>& items, Format format) {
  std::string out;
  switch (format) {
    case Format::json: {
      nlohmann::ordered_json j;
      j["graphs"] = nlohmann::ordered_json::array();
      for (const auto& item : items) j["graphs"].push_back(graph_json(item.id, item.graph));
      out = j.dump() + "\n";
      break;
    }
    case Format::csv:
      out = "graph,graph6,n,m\n";
      for (const auto& item : items) {
        out += detail::csv_escape(item.id) + "," + encode_graph6(item.graph) + "," +
               std::to_string(item.graph.order()) + "," + std::to_string(item.graph.size()) + "\n";
      }
      break;
    case Format::human:
      for (const auto& item : items) out += encode_graph6(item.graph) + "\n" + to_edge_list(item.graph);
      break;
  }
  return out;
}

inline std::string render_outcome(const std::string& id, const Graph& g, const SolveOutcome& outcome, Method method,
                                  Format format) {
  switch (format) {
    case Format::json: {
      nlohmann::ordered_json j;
      j["graph"] = id;
      j["graph6"] = encode_graph6(g);
      j["g"] = outcome.g();
      j["method"] = method_name(method);
      j["found"] = outcome.is_found();
      if (outcome.is_found()) {
        const auto& c = outcome.certificate();
        j["value"] = c.value;
        j["cut"] = c.cut.members();
        j["component_sizes"] = c.component_sizes;
      } else {
        j["value"] = nullptr;
        j["cut"] = nullptr;
        j["component_sizes"] = nullptr;
      }
      return j.dump() + "\n";
    }
    case Format::csv: {
      std::string row = "graph,graph6,g,method,found,value,cut,component_sizes\n";
      row += detail::csv_escape(id) + "," + encode_graph6(g) + "," + std::to_string(outcome.g()) + "," +
             std::string(method_name(method)) + "," + (outcome.is_found() ? "true" : "false") + ",";
      if (outcome.is_found()) {
        const auto& c = outcome.certificate();
        std::string sizes;
        for (int s : c.component_sizes) sizes += (sizes.empty() ? "" : " ") + std::to_string(s);
        row += std::to_string(c.value) + "," + detail::set_cell(c.cut) + "," + sizes;
      } else {
        row += ",,";
      }
      return row + "\n";
    }
    case Format::human:
      break;
  }
  if (!outcome.is_found()) return id + ": no " + std::to_string(outcome.g()) + "-extra cut exists\n";
  const auto& c = outcome.certificate();
  std::string sizes;
  for (int s : c.component_sizes) sizes += (sizes.empty() ? "" : " ") + std::to_string(s);
  return id + ": kappa_" + std::to_string(outcome.g()) + " = " + std::to_string(c.value) + ", cut " +
         c.cut.to_string() + ", component sizes [" + sizes + "]\n";
}

inline std::string render_mycielskian(const std::string& id, const Graph& g, int k, Format format) {
  const Graph before = iterate_mycielskian(g, k > 0 ? k - 1 : 0);
  const Graph result = k > 0 ? mycielskian(before).graph : g;
  std::vector<std::string> roles;
  if (k > 0) {
    const MycielskiLabel label(before.order());
    for (int v = 0; v < label.order(); ++v) roles.push_back(label.describe(v));
  }
  switch (format) {
    case Format::json: {
      auto j = graph_json(id, result);
      j["k"] = k;
      j["labels"] = roles;
      return j.dump() + "\n";
    }
    case Format::csv:
      return "graph,k,graph6,n,m\n" + detail::csv_escape(id) + "," + std::to_string(k) + "," +
             encode_graph6(result) + "," + std::to_string(result.order()) + "," + std::to_string(result.size()) +
             "\n";
    case Format::human:
      break;
  }
  std::string out = encode_graph6(result) + "\n" + to_edge_list(result);
  if (!roles.empty()) {
    out += "labels:";
    for (std::size_t v = 0; v < roles.size(); ++v) out += " " + std::to_string(v) + "=" + roles[v];
    out += "\n";
  }
  return out;
}

inline void add_source_options(CLI::App* cmd, CliInvocation& inv) {
  cmd->add_option("--family", inv.source.family,
                  "named family: path:N cycle:N complete:N complete_bipartite:A,B star:K hypercube:D petersen");
  cmd->add_option("--graph6", inv.source.graph6, "graph6 literal");
  cmd->add_option("--edges", inv.source.edge_file, "edge-list file ('n m' header, then 'u v' lines)");
  cmd->add_option("--g6file", inv.source.graph6_file, "graph6 file, one graph per line ('-' for stdin)");
  cmd->add_option("--enumerate", inv.source.enumerate, "all labeled connected graphs: N (orders 2..N) or A..B");
  cmd->add_option("--random", inv.source.random, "G(n,p) sample as N:P (see --seed)");
  cmd->add_option("--seed", inv.source.seed, "seed for --random");
  cmd->add_option("--format", inv.format, "json | csv | human")->check(CLI::IsMember({"json", "csv", "human"}));
  cmd->add_option("--output,-o", inv.output, "write the report to a file instead of stdout");
}

inline void add_solver_options(CLI::App* cmd, CliInvocation& inv) {
  cmd->add_option("--method", inv.method, "naive | pruned")->check(CLI::IsMember({"naive", "pruned"}));
  cmd->add_option("--max-naive", inv.budget.max_naive_order, "largest order the naive search accepts");
  cmd->add_option("--max-pruned", inv.budget.max_pruned_order, "largest order the pruned search accepts");
  cmd->add_flag("--skip-on-budget", inv.skip_on_budget, "record over-budget instances as skipped");
}

/// Runs one invocation. `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CliInvocation inv;
  inv.jobs = default_jobs();

  CLI::App app{"extraconn: Mycielskian construction and exact g-extra connectivity"};
  app.require_subcommand(1, 1);

  auto* gen = app.add_subcommand("gen", "print a graph as graph6 and edge list");
  add_source_options(gen, inv);

  auto* mu = app.add_subcommand("mu", "print the k-fold Mycielskian with its vertex roles");
  add_source_options(mu, inv);
  mu->add_option("--k", inv.k, "number of Mycielskian steps")->check(CLI::NonNegativeNumber);

  auto* kappa = app.add_subcommand("kappa", "print the vertex connectivity");
  add_source_options(kappa, inv);

  auto* extra = app.add_subcommand("extra", "minimum g-extra cut with witness");
  add_source_options(extra, inv);
  add_solver_options(extra, inv);
  extra->add_option("--g", inv.g_values, "g (non-negative)")->required()->expected(1);

  auto* verify = app.add_subcommand("verify", "audit one graph against the Mycielskian connectivity laws");
  add_source_options(verify, inv);
  add_solver_options(verify, inv);
  verify->add_option("--g", inv.g_values, "g (0 checks the classical law)")->required()->expected(1);

  auto* batch = app.add_subcommand("batch", "audit a corpus and summarize");
  add_source_options(batch, inv);
  add_solver_options(batch, inv);
  batch->add_option("--g", inv.g_values, "g values (repeatable, default 1)")->expected(1, 64);
  batch->add_option("--jobs,-j", inv.jobs, "worker threads (default $EXTRACONN_JOBS or 1)")
      ->check(CLI::PositiveNumber);

  std::vector<const char*> argv{"extraconn"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  for (int g : inv.g_values) {
    if (g < 0) {
      err << "error: g must be non-negative\n";
      return kUsage;
    }
  }
  if (inv.g_values.empty()) inv.g_values.push_back(1);

  try {
    const Format format = parse_format(inv.format);
    const Method method = inv.method == "naive" ? Method::naive : Method::pruned;
    const CheckOptions check{method, inv.budget};
    const auto items = load_source(inv.source, in);

    std::string text;
    int status = kOk;
    if (gen->parsed()) {
      text = render_graphs(items, format);
    } else if (mu->parsed()) {
      const auto& item = single(items);
      text = render_mycielskian(item.id, item.graph, inv.k, format);
    } else if (kappa->parsed()) {
      const auto& item = single(items);
      const int value = vertex_connectivity(item.graph);
      if (format == Format::json) {
        nlohmann::ordered_json j;
        j["graph"] = item.id;
        j["graph6"] = encode_graph6(item.graph);
        j["kappa"] = value;
        text = j.dump() + "\n";
      } else if (format == Format::csv) {
        text = "graph,graph6,kappa\n" + detail::csv_escape(item.id) + "," + encode_graph6(item.graph) + "," +
               std::to_string(value) + "\n";
      } else {
        text = item.id + ": kappa = " + std::to_string(value) + "\n";
      }
    } else if (extra->parsed()) {
      const auto& item = single(items);
      const auto outcome = extra_connectivity(item.graph, inv.g_values.front(), method, inv.budget);
      text = render_outcome(item.id, item.graph, outcome, method, format);
    } else {
      BatchReport report;
      if (verify->parsed()) {
        const auto& item = single(items);
        report.records.push_back(verify_graph(item.graph, inv.g_values.front(), check, item.id));
        report.summary = summarize(report.records);
      } else {
        report = run_batch(items, inv.g_values, {check, inv.jobs});
      }
      text = emit_report(report.records, report.summary, format);
      for (const auto& r : report.records) {
        if (r.status == Status::violation) {
          err << "VIOLATION " << r.graph << " g=" << r.g << " graph6=" << r.graph6 << "\n";
        }
      }
      if (report.summary.violations > 0) {
        status = kViolation;
      } else if (report.summary.skipped > 0 && !inv.skip_on_budget) {
        err << "error: " << report.summary.skipped << " instance(s) exceeded the solver budget\n";
        status = kBudget;
      }
    }

    if (inv.output.empty()) {
      out << text;
    } else {
      std::ofstream file(inv.output, std::ios::binary);
      if (!(file << text) || !file.flush()) {
        err << "error: cannot write '" << inv.output << "'\n";
        return kUsage;
      }
    }
    return status;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace extraconn::cli
