#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "certdom/graph.hpp"

namespace certdom {

/// Malformed input. position is a byte offset (graph6) or a 1-based line number (edge lists, batches).
class ParseError : public std::runtime_error {
 public:
  enum class Unit { Byte, Line };

  ParseError(Unit unit, std::size_t position, const std::string& what)
      : std::runtime_error(describe(unit, position, what)), unit_(unit), position_(position) {}

  Unit unit() const { return unit_; }
  std::size_t position() const { return position_; }

 private:
  static std::string describe(Unit unit, std::size_t position, const std::string& what) {
    return (unit == Unit::Byte ? "byte " : "line ") + std::to_string(position) + ": " + what;
  }

  Unit unit_;
  std::size_t position_;
};

/// One graph6 record, optionally prefixed by ">>graph6<<" and followed by a newline.
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

/// "n <count>" followed by "u v" lines; blank lines and '#' comments are skipped.
Graph parse_edge_list(std::string_view text);
std::string encode_edge_list(const Graph& g);

enum class InputFormat { Auto, Graph6, EdgeList };

/// Auto picks edge-list when the first meaningful line starts with "n ", graph6 otherwise.
Graph parse_graph(std::string_view text, InputFormat format = InputFormat::Auto);

/// One graph6 record per line; blank lines skipped. Errors carry the line number.
std::vector<Graph> read_graph6_batch(std::istream& in);

}  // namespace certdom
