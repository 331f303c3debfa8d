#include "certdom/graph_io.hpp"

#include <charconv>
#include <sstream>

namespace certdom {

namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

using Unit = ParseError::Unit;

std::string_view strip_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

void encode_order(int n, std::string& out) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    // 18-bit form is enough for kMaxVertices.
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t offset = 0;
  if (text.starts_with(kHeader)) offset = kHeader.size();
  const std::string_view body = strip_line_end(text);

  auto sextet = [&](std::size_t pos) -> int {
    if (pos >= body.size()) throw ParseError(Unit::Byte, pos, "truncated graph6 record");
    const int c = static_cast<unsigned char>(body[pos]);
    if (c < 63 || c > 126) {
      throw ParseError(Unit::Byte, pos, "character outside the graph6 alphabet (code " + std::to_string(c) + ")");
    }
    return c - kBias;
  };

  std::size_t pos = offset;
  long long n = sextet(pos);
  ++pos;
  if (n == 63) {
    if (pos < body.size() && body[pos] == 126) {
      ++pos;
      n = 0;
      for (int i = 0; i < 6; ++i) n = (n << 6) | sextet(pos++);
      if (n <= 258047) throw ParseError(Unit::Byte, offset, "non-canonical 36-bit order field");
    } else {
      n = 0;
      for (int i = 0; i < 3; ++i) n = (n << 6) | sextet(pos++);
      if (n <= 62) throw ParseError(Unit::Byte, offset, "non-canonical 18-bit order field");
    }
  }
  if (n > kMaxVertices) {
    throw ParseError(Unit::Byte, offset, "order " + std::to_string(n) + " exceeds supported maximum " +
                                             std::to_string(kMaxVertices));
  }

  const int order = static_cast<int>(n);
  const std::size_t bits = static_cast<std::size_t>(order) * (order - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (body.size() < pos + bytes) throw ParseError(Unit::Byte, body.size(), "truncated bit vector");
  if (body.size() > pos + bytes) throw ParseError(Unit::Byte, pos + bytes, "trailing data after bit vector");

  std::vector<Edge> es;
  std::size_t k = 0;
  for (Vertex j = 1; j < order; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int chunk = sextet(pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) es.push_back({i, j});
    }
  }
  if (bits % 6 != 0) {
    const int chunk = sextet(pos + bytes - 1);
    const int pad = 6 - static_cast<int>(bits % 6);
    if (chunk & ((1 << pad) - 1)) throw ParseError(Unit::Byte, pos + bytes - 1, "nonzero padding bits");
  }
  return Graph::from_edges(order, es);
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  encode_order(n, out);
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

namespace {

bool parse_int(std::string_view token, int& value) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
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

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(line_no, line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

bool is_blank_or_comment(std::string_view line) {
  auto tokens = split_ws(line);
  return tokens.empty() || tokens.front().starts_with('#');
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  int n = -1;
  std::vector<Edge> es;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (is_blank_or_comment(line)) return;
    auto tokens = split_ws(line);
    if (n < 0) {
      int count = 0;
      if (tokens.size() != 2 || tokens[0] != "n" || !parse_int(tokens[1], count)) {
        throw ParseError(Unit::Line, line_no, "expected header \"n <count>\"");
      }
      if (count < 0 || count > kMaxVertices) {
        throw ParseError(Unit::Line, line_no, "vertex count " + std::to_string(count) + " outside [0, " +
                                                  std::to_string(kMaxVertices) + "]");
      }
      n = count;
      return;
    }
    int u = 0, v = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v)) {
      throw ParseError(Unit::Line, line_no, "expected \"u v\"");
    }
    if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(Unit::Line, line_no, "vertex index out of range");
    if (u == v) throw ParseError(Unit::Line, line_no, "self-loop at vertex " + std::to_string(u));
    es.push_back({u, v});
  });
  if (n < 0) throw ParseError(Unit::Line, 1, "missing header \"n <count>\"");
  return Graph::from_edges(n, es);
}

std::string encode_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.order() << '\n';
  for (Edge e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Graph parse_graph(std::string_view text, InputFormat format) {
  if (format == InputFormat::Auto) {
    format = InputFormat::Graph6;
    bool decided = false;
    for_each_line(text, [&](std::size_t, std::string_view line) {
      if (decided || is_blank_or_comment(line)) return;
      decided = true;
      auto tokens = split_ws(line);
      if (tokens.front() == "n") format = InputFormat::EdgeList;
    });
  }
  if (format == InputFormat::EdgeList) return parse_edge_list(text);

  // Byte offsets in errors are relative to the record itself.
  std::string_view record;
  std::size_t meaningful = 0;
  std::size_t second_line = 0;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (split_ws(line).empty()) return;
    if (++meaningful == 1) {
      record = line;
    } else if (meaningful == 2) {
      second_line = line_no;
    }
  });
  if (meaningful == 0) throw ParseError(Unit::Byte, 0, "empty input");
  if (meaningful > 1) throw ParseError(Unit::Line, second_line, "expected a single graph6 record");
  return parse_graph6(record);
}

std::vector<Graph> read_graph6_batch(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = strip_line_end(line);
    if (split_ws(view).empty()) continue;
    try {
      out.push_back(parse_graph6(view));
    } catch (const std::exception& e) {
      throw ParseError(Unit::Line, line_no, e.what());
    }
  }
  return out;
}

}  // namespace certdom
