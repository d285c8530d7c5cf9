#pragma once

// graph6 (nauty) and plain edge-list text formats.
//
// graph6 layout: N(n) followed by the upper triangle of the adjacency matrix
// in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six bits per
// byte, most significant bit first, zero padded, each byte offset by 63.
// N(n) is chr(63+n) for n <= 62, '~' plus 18 bits for n <= 258047, and
// "~~" plus 36 bits beyond that.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "extraconn/error.hpp"
#include "extraconn/graph.hpp"

namespace extraconn {

inline constexpr std::uint64_t kMaxGraph6Order = 16384;

namespace detail {

inline void append_bits(std::string& out, std::uint64_t value, int six_bit_groups) {
  for (int k = six_bit_groups - 1; k >= 0; --k) {
    out.push_back(static_cast<char>(63 + ((value >> (6 * k)) & 0x3F)));
  }
}

inline std::size_t graph6_body_length(std::uint64_t n) {
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  return static_cast<std::size_t>((bits + 5) / 6);
}

}  // namespace detail

inline std::string encode_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    detail::append_bits(out, n, 3);
  } else {
    out += "~~";
    detail::append_bits(out, n, 6);
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

/// Decodes one graph6 string. Positions in errors are 1-based byte offsets.
inline Graph decode_graph6(std::string_view text, std::size_t line = 0) {
  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) throw Graph6Error(line, i + 1, "unexpected end of input");
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) {
      throw Graph6Error(line, i + 1, "byte " + std::to_string(c) + " outside printable range 63..126");
    }
    return c - 63;
  };

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (text.empty()) throw Graph6Error(line, 1, "empty graph6 string");
  if (byte_at(0) < 63) {
    n = static_cast<std::uint64_t>(byte_at(0));
    pos = 1;
  } else {
    int groups = 3;
    pos = 1;
    if (text.size() > 1 && text[1] == '~') {
      groups = 6;
      pos = 2;
    }
    for (int k = 0; k < groups; ++k) n = (n << 6) | static_cast<std::uint64_t>(byte_at(pos++));
  }
  if (n > kMaxGraph6Order) throw Graph6Error(line, 1, "order " + std::to_string(n) + " too large");

  const std::size_t body = detail::graph6_body_length(n);
  const std::size_t header = pos;
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (int j = 1; j < static_cast<int>(n); ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int value = byte_at(header + bit / 6);
      if ((value >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bit % 6 != 0) {
    const int last = byte_at(header + bit / 6);
    if ((last & ((1 << (6 - bit % 6)) - 1)) != 0) {
      throw Graph6Error(line, header + bit / 6 + 1, "non-zero padding bits");
    }
  }
  // Validate bytes even when the order leaves no adjacency bits to read.
  for (std::size_t i = header; i < header + body; ++i) byte_at(i);
  if (text.size() != header + body) {
    throw Graph6Error(line, header + body + 1,
                      "trailing data after " + std::to_string(header + body) + " bytes");
  }
  return build_graph(static_cast<int>(n), edges);
}

/// Newline-delimited graph6 stream. An optional ">>graph6<<" prefix on the
/// first line is skipped, blank lines are ignored, and any malformed line
/// aborts the read with its line number.
template <typename Visitor>
void for_each_graph6(std::istream& in, Visitor&& visit) {
  std::string text;
  std::size_t line = 0;
  constexpr std::string_view kHeader = ">>graph6<<";
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    std::string_view view = text;
    if (line == 1 && view.starts_with(kHeader)) view.remove_prefix(kHeader.size());
    if (view.empty()) continue;
    visit(decode_graph6(view, line), line);
  }
  if (in.bad()) throw InputError("graph6 stream: read failure after line " + std::to_string(line));
}

inline std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  for_each_graph6(in, [&](Graph g, std::size_t) { out.push_back(std::move(g)); });
  return out;
}

/// "n m" header followed by m lines "u v" (0-based).
inline Graph read_edge_list(std::istream& in) {
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw InputError("edge list: expected header 'n m'");
  if (n > 100000) throw InputError("edge list: order too large");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(std::min<long long>(m, 1 << 20)));
  for (long long k = 0; k < m; ++k) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) {
      throw InputError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(k));
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("edge list: edge " + std::to_string(k + 1) + " has an id out of range");
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  std::string rest;
  if (in >> rest) throw InputError("edge list: trailing data '" + rest + "'");
  return build_graph(static_cast<int>(n), edges);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace extraconn
