#include "skelkit/formats.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

#include "skelkit/errors.hpp"

namespace skelkit {
namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_id(std::string_view tok, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError("expected a non-negative integer, got '" + std::string(tok) + "'", line);
  }
  return value;
}

constexpr std::size_t kGraph6SmallLimit = 62;
constexpr std::size_t kGraph6MediumLimit = 258047;

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<std::size_t> declared;
  std::vector<Edge> edges;
  std::size_t max_id_plus_one = 0;
  bool seen_content = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    auto tok = tokens(line);
    if (tok.size() != 2) throw ParseError("expected two fields 'u v'", line_no);
    if (tok[0] == "n") {
      if (seen_content) throw ParseError("'n <count>' header must come first", line_no);
      declared = parse_id(tok[1], line_no);
      seen_content = true;
      continue;
    }
    seen_content = true;
    std::size_t u = parse_id(tok[0], line_no);
    std::size_t v = parse_id(tok[1], line_no);
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u) + " (simple graphs only)", line_no);
    if (declared && (u >= *declared || v >= *declared)) {
      throw ParseError("vertex id exceeds declared count " + std::to_string(*declared), line_no);
    }
    max_id_plus_one = std::max({max_id_plus_one, u + 1, v + 1});
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  return Graph(declared.value_or(max_id_plus_one), edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) {
      throw ParseError("graph6: byte " + std::to_string(c) + " at offset " + std::to_string(i) +
                       " outside 63..126");
    }
  }
  if (text.empty()) throw ParseError("graph6: empty input");

  std::size_t n = 0;
  std::size_t cursor = 0;
  auto chunk = [&](std::size_t i) { return static_cast<std::size_t>(text[i]) - 63; };
  if (text[0] != '~') {
    n = chunk(0);
    cursor = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') {
      throw ParseError("graph6: only vertex counts up to " + std::to_string(kGraph6MediumLimit) +
                       " are supported");
    }
    n = (chunk(1) << 12) | (chunk(2) << 6) | chunk(3);
    cursor = 4;
  }

  const std::size_t bits = n * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - cursor != bytes) {
    throw ParseError("graph6: expected " + std::to_string(bytes) + " data bytes for n=" +
                     std::to_string(n) + ", got " + std::to_string(text.size() - cursor));
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t v = 1; v < n; ++v) {
    for (std::size_t u = 0; u < v; ++u, ++k) {
      std::size_t byte = chunk(cursor + k / 6);
      if (byte & (1u << (5 - k % 6))) edges.emplace_back(u, v);
    }
  }
  // Padding bits must be zero.
  for (; k < bytes * 6; ++k) {
    if (chunk(cursor + k / 6) & (1u << (5 - k % 6))) throw ParseError("graph6: non-zero padding bits");
  }
  return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= kGraph6SmallLimit) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= kGraph6MediumLimit) {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  } else {
    throw CapacityError("graph6: vertex count " + std::to_string(n) + " too large");
  }
  unsigned acc = 0;
  int filled = 0;
  for (std::size_t v = 1; v < n; ++v) {
    for (std::size_t u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1u : 0u);
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

Graph read_graph(std::string_view text, InputFormat format) {
  switch (format) {
    case InputFormat::EdgeList:
      return parse_edge_list(text);
    case InputFormat::Graph6:
      return parse_graph6(text);
  }
  throw ArgumentError("unknown input format");
}

std::string to_dot(const Graph& g, std::span<const std::string> colors, std::string_view name) {
  if (!colors.empty() && colors.size() != g.order()) throw ArgumentError("to_dot: one color per vertex");
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v << " [label=\"" << g.label(v) << '"';
    if (!colors.empty()) out << ", style=filled, fillcolor=\"" << colors[v] << '"';
    out << "];\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace skelkit
