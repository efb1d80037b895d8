#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"
#include "robustham/graph.hpp"

namespace robustham {

using AnyGraph = std::variant<Graph, Digraph>;

// Malformed input. line/column are 1-based; 0 means "not applicable".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

// Edge-list document:
//   n m directed|undirected
//   u v        (m lines)
// Blank lines and lines starting with '#' are ignored.
AnyGraph parse_edge_list(std::string_view text);

// {"n": N, "directed": bool, "edges": [[u, v], ...]}
AnyGraph graph_from_json(const nlohmann::json& doc);

// Dispatches on the first non-blank character: '{' selects JSON.
AnyGraph parse_graph(std::string_view text);

std::string to_edge_list(const Graph& g);
std::string to_edge_list(const Digraph& d);

// Edges sorted lexicographically, so dump() output is byte-stable.
nlohmann::json to_json(const Graph& g);
nlohmann::json to_json(const Digraph& d);
nlohmann::json to_json(const AnyGraph& g);

}  // namespace robustham
