#pragma once

// graph6 and plain edge-list codecs.
//
// graph6: a size prefix N(n) followed by the upper triangle of the adjacency
// matrix in column-major order (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed
// six bits per byte, most significant bit first, each byte offset by 63.

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bootperc/graph.hpp"

namespace bootperc {

inline constexpr std::string_view kGraph6Header = ">>graph6<<";
inline constexpr int kDefaultMaxVertices = 64;

namespace detail {

inline std::string_view trim_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline int g6_value(std::string_view line, std::size_t pos) {
  if (pos >= line.size()) throw ParseError("truncated graph6 string", pos);
  const auto c = static_cast<unsigned char>(line[pos]);
  if (c < 63 || c > 126) throw ParseError("byte outside graph6 range 63..126", pos);
  return c - 63;
}

inline std::size_t triangle_bytes(long long n) {
  const long long bits = n * (n - 1) / 2;
  return static_cast<std::size_t>((bits + 5) / 6);
}

}  // namespace detail

/// Parses one graph6 line. `max_n` is further clamped to the graph's capacity.
template <std::size_t W = 1>
BasicGraph<W> parse_graph6(std::string_view line, int max_n = kDefaultMaxVertices) {
  line = detail::trim_line_end(line);
  std::size_t pos = 0;
  if (line.starts_with(kGraph6Header)) pos = kGraph6Header.size();
  if (pos >= line.size()) throw ParseError("empty graph6 string", pos);

  const std::size_t prefix_start = pos;
  long long n = 0;
  if (line[pos] != '~') {
    n = detail::g6_value(line, pos);
    pos += 1;
  } else if (pos + 1 < line.size() && line[pos + 1] == '~') {
    for (int i = 0; i < 6; ++i) n = (n << 6) | detail::g6_value(line, pos + 2 + static_cast<std::size_t>(i));
    pos += 8;
    if (n <= 258047) throw ParseError("non-canonical graph6 length prefix", prefix_start);
  } else {
    for (int i = 0; i < 3; ++i) n = (n << 6) | detail::g6_value(line, pos + 1 + static_cast<std::size_t>(i));
    pos += 4;
    if (n <= 62) throw ParseError("non-canonical graph6 length prefix", prefix_start);
  }
  const int limit = std::min(max_n, BasicGraph<W>::kMaxVertices);
  if (n > limit)
    throw ParseError("graph6 vertex count " + std::to_string(n) + " exceeds limit " + std::to_string(limit),
                     prefix_start);

  const std::size_t body = detail::triangle_bytes(n);
  const std::size_t body_start = pos;
  if (line.size() < body_start + body) throw ParseError("truncated graph6 string", line.size());
  if (line.size() > body_start + body) throw ParseError("trailing bytes after graph6 string", body_start + body);

  const int nv = static_cast<int>(n);
  std::vector<BasicVertexSet<W>> adj(static_cast<std::size_t>(nv));
  std::size_t bit_index = 0;
  for (int j = 1; j < nv; ++j) {
    for (int i = 0; i < j; ++i, ++bit_index) {
      const int byte = detail::g6_value(line, body_start + bit_index / 6);
      if ((byte >> (5 - bit_index % 6)) & 1) {
        adj[i].insert(j);
        adj[j].insert(i);
      }
    }
  }
  if (bit_index % 6 != 0) {
    const std::size_t at = body_start + bit_index / 6;
    const int byte = detail::g6_value(line, at);
    const int pad = 6 - static_cast<int>(bit_index % 6);
    if (byte & ((1 << pad) - 1)) throw ParseError("nonzero graph6 padding bits", at);
  } else {
    // Every byte must still be in range even when no padding is present.
    for (std::size_t b = 0; b < body; ++b) detail::g6_value(line, body_start + b);
  }
  return BasicGraph<W>(nv, std::move(adj));
}

/// Canonical graph6 bytes (shortest size prefix, zero padding, no header, no newline).
template <std::size_t W>
std::string encode_graph6(const BasicGraph<W>& g) {
  const long long n = g.n();
  std::string out;
  auto put = [&out](long long v) { out.push_back(static_cast<char>(v + 63)); };
  if (n <= 62) {
    put(n);
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) put((n >> shift) & 63);
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) put((n >> shift) & 63);
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < g.n(); ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        put(acc);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) put(acc << (6 - filled));
  return out;
}

/// Parses "n u1 v1 u2 v2 ..." separated by arbitrary whitespace (normally one edge per line).
template <std::size_t W = 1>
BasicGraph<W> parse_edge_list(std::string_view text, int max_n = kDefaultMaxVertices) {
  std::vector<std::pair<long long, std::size_t>> tokens;
  std::size_t pos = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos >= text.size()) break;
    const std::size_t start = pos;
    while (pos < text.size() && !is_space(text[pos])) ++pos;
    long long value = 0;
    const char* first = text.data() + start;
    const char* last = text.data() + pos;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) throw ParseError("non-integer token in edge list", start);
    tokens.emplace_back(value, start);
  }
  if (tokens.empty()) throw ParseError("empty edge list", 0);
  const auto [n, n_at] = tokens.front();
  const int limit = std::min(max_n, BasicGraph<W>::kMaxVertices);
  if (n < 0 || n > limit) throw ParseError("vertex count out of range", n_at);
  if (tokens.size() % 2 == 0) throw ParseError("edge with a single endpoint", tokens.back().second);

  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 1; i + 1 < tokens.size(); i += 2) {
    const auto [u, u_at] = tokens[i];
    const auto [v, v_at] = tokens[i + 1];
    if (u < 0 || u >= n) throw ParseError("vertex out of range", u_at);
    if (v < 0 || v >= n) throw ParseError("vertex out of range", v_at);
    if (u == v) throw ParseError("self-loop", u_at);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return BasicGraph<W>::from_edges(static_cast<int>(n), edges);
}

/// "n\nu v\n..." rendering accepted by parse_edge_list.
template <std::size_t W>
std::string encode_edge_list(const BasicGraph<W>& g) {
  std::string out = std::to_string(g.n());
  for (auto [u, v] : g.edges()) out += "\n" + std::to_string(u) + " " + std::to_string(v);
  return out;
}

}  // namespace bootperc
