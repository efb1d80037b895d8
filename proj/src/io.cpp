#include "robustham/io.hpp"

#include <charconv>
#include <set>
#include <sstream>
#include <vector>

namespace robustham {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " +
                                        std::to_string(column) + ": " + message
                                  : message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  int column = 0;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

long long to_integer(const Token& t, int line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
    throw ParseError("expected an integer, got '" + std::string(t.text) + "'", line, t.column);
  }
  return value;
}

}  // namespace

AnyGraph parse_edge_list(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> lines;
  {
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t end = std::min(text.find('\n', pos), text.size());
      ++number;
      std::string_view line = text.substr(pos, end - pos);
      const auto tokens = tokenize(line);
      if (!tokens.empty() && tokens.front().text.front() != '#') lines.emplace_back(number, line);
      if (end == text.size()) break;
      pos = end + 1;
    }
  }
  if (lines.empty()) throw ParseError("empty input: missing header 'n m directed|undirected'", 1, 1);

  const auto [header_line, header_text] = lines.front();
  const auto header = tokenize(header_text);
  if (header.size() != 3) {
    throw ParseError("header must be 'n m directed|undirected'", header_line, 1);
  }
  const long long n = to_integer(header[0], header_line);
  const long long m = to_integer(header[1], header_line);
  if (n < 0) throw ParseError("negative vertex count", header_line, header[0].column);
  if (m < 0) throw ParseError("negative edge count", header_line, header[1].column);
  bool directed = false;
  if (header[2].text == "directed") {
    directed = true;
  } else if (header[2].text != "undirected") {
    throw ParseError("expected 'directed' or 'undirected', got '" + std::string(header[2].text) + "'",
                     header_line, header[2].column);
  }
  if (static_cast<long long>(lines.size()) - 1 != m) {
    const int where = lines.size() - 1 > static_cast<std::size_t>(m) ? lines[m + 1].first : lines.back().first;
    throw ParseError("header declares " + std::to_string(m) + " edges but " +
                         std::to_string(lines.size() - 1) + " edge lines follow",
                     where, 1);
  }

  std::set<std::pair<int, int>> seen;
  std::vector<Edge> edges;
  std::vector<Arc> arcs;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto [number, line] = lines[k];
    const auto tokens = tokenize(line);
    if (tokens.size() != 2) throw ParseError("edge line must be 'u v'", number, 1);
    const long long u = to_integer(tokens[0], number);
    const long long v = to_integer(tokens[1], number);
    for (int side = 0; side < 2; ++side) {
      const long long x = side == 0 ? u : v;
      if (x < 0 || x >= n) {
        throw ParseError("vertex " + std::to_string(x) + " out of range [0, " + std::to_string(n) + ")",
                         number, tokens[side].column);
      }
    }
    if (u == v) throw ParseError("loop at vertex " + std::to_string(u), number, tokens[0].column);
    std::pair<int, int> key{static_cast<int>(u), static_cast<int>(v)};
    if (!directed && key.first > key.second) std::swap(key.first, key.second);
    if (!seen.insert(key).second) {
      throw ParseError(std::string(directed ? "duplicate arc " : "duplicate edge ") + "(" + std::to_string(u) +
                           ", " + std::to_string(v) + ")",
                       number, tokens[0].column);
    }
    if (directed) {
      arcs.push_back({key.first, key.second});
    } else {
      edges.push_back({key.first, key.second});
    }
  }
  if (directed) return Digraph(static_cast<int>(n), std::move(arcs));
  return Graph(static_cast<int>(n), std::move(edges));
}

AnyGraph graph_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("directed") || !doc.contains("edges")) {
    throw ParseError("graph JSON needs fields n, directed, edges", 0, 0);
  }
  if (!doc["n"].is_number_integer() || !doc["directed"].is_boolean() || !doc["edges"].is_array()) {
    throw ParseError("graph JSON field has the wrong type", 0, 0);
  }
  const long long n = doc["n"].get<long long>();
  if (n < 0) throw ParseError("negative vertex count", 0, 0);
  const bool directed = doc["directed"].get<bool>();
  std::vector<Arc> pairs;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw ParseError("edge must be a pair of integers", 0, 0);
    }
    pairs.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  try {
    if (directed) return Digraph(static_cast<int>(n), std::move(pairs));
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& p : pairs) edges.push_back({p.tail, p.head});
    return Graph(static_cast<int>(n), std::move(edges));
  } catch (const GraphError& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

AnyGraph parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      // Translate the byte offset reported by the parser into line/column.
      const std::size_t offset = std::min<std::size_t>(e.byte, text.size());
      int line = 1;
      int column = 1;
      for (std::size_t i = 0; i + 1 < offset; ++i) {
        if (text[i] == '\n') {
          ++line;
          column = 1;
        } else {
          ++column;
        }
      }
      throw ParseError("invalid JSON", line, column);
    }
    return graph_from_json(doc);
  }
  return parse_edge_list(text);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << " undirected\n";
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string to_edge_list(const Digraph& d) {
  std::ostringstream out;
  out << d.order() << ' ' << d.size() << " directed\n";
  for (const auto& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
  return out.str();
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"directed", false}, {"edges", std::move(edges)}, {"n", g.order()}};
}

nlohmann::json to_json(const Digraph& d) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& a : d.arcs()) edges.push_back({a.tail, a.head});
  return {{"directed", true}, {"edges", std::move(edges)}, {"n", d.order()}};
}

nlohmann::json to_json(const AnyGraph& g) {
  return std::visit([](const auto& x) { return to_json(x); }, g);
}

}  // namespace robustham
