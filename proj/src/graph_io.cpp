#include "graphprod/graph_io.hpp"

#include <sstream>

#include "graphprod/error.hpp"

namespace graphprod {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

}  // namespace

SimpleGraph parse_graph6(std::string_view text) {
  std::size_t offset = 0;
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) offset = kGraph6Header.size();
  std::size_t end = text.size();
  while (end > offset && (text[end - 1] == '\n' || text[end - 1] == '\r' || text[end - 1] == ' ' ||
                          text[end - 1] == '\t')) {
    --end;
  }
  if (end == offset) throw InputError("graph6: empty input", offset);

  auto byte_at = [&](std::size_t pos) {
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) {
      throw InputError("graph6: byte outside the printable range 63..126", pos);
    }
    return static_cast<int>(c) - 63;
  };

  const int n = byte_at(offset);
  if (n == 63) throw InputError("graph6: graphs with more than 62 vertices are not supported", offset);
  if (n == 0) throw InputError("graph6: graph must have at least one vertex", offset);

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t groups = (bits + 5) / 6;
  const std::size_t expected = 1 + groups;
  if (end - offset != expected) {
    const std::size_t at = end - offset < expected ? end : offset + expected;
    throw InputError("graph6: expected " + std::to_string(expected) + " bytes for " +
                         std::to_string(n) + " vertices, got " + std::to_string(end - offset),
                     at);
  }

  SimpleGraph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t pos = offset + 1 + k / 6;
      const int value = byte_at(pos);
      if ((value >> (5 - static_cast<int>(k % 6))) & 1) g.add_edge(i, j);
    }
  }
  for (; k < groups * 6; ++k) {
    const std::size_t pos = offset + 1 + k / 6;
    if ((byte_at(pos) >> (5 - static_cast<int>(k % 6))) & 1) {
      throw InputError("graph6: nonzero padding bit", pos);
    }
  }
  return g;
}

std::string to_graph6(const SimpleGraph& g) {
  const int n = g.n();
  if (n < 1 || n > 62) throw InputError("graph6: only 1..62 vertices are supported");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

nlohmann::json parse_json_text(std::string_view text) {
  try {
    return nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("JSON syntax error: ") + e.what(), e.byte);
  }
}

SimpleGraph graph_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputError("graph JSON must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw InputError("graph JSON: field \"n\" must be an integer");
  }
  const auto n = doc["n"].get<long long>();
  if (n < 1 || n > kMaxVertices) {
    throw InputError("graph JSON: \"n\" must be in [1, 64], got " + std::to_string(n));
  }
  SimpleGraph g(static_cast<int>(n));
  if (doc.contains("edges")) {
    const auto& edges = doc["edges"];
    if (!edges.is_array()) throw InputError("graph JSON: \"edges\" must be an array");
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const auto& e = edges[k];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        throw InputError("graph JSON: edges[" + std::to_string(k) + "] must be [i, j]");
      }
      const auto u = e[0].get<long long>();
      const auto v = e[1].get<long long>();
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw InputError("graph JSON: edges[" + std::to_string(k) + "] endpoint out of range");
      }
      if (u == v) throw InputError("graph JSON: edges[" + std::to_string(k) + "] is a loop");
      g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
  }
  if (doc.contains("names")) {
    const auto& names = doc["names"];
    if (!names.is_array() || static_cast<long long>(names.size()) != n) {
      throw InputError("graph JSON: \"names\" must list one string per vertex");
    }
    std::vector<std::string> list;
    for (const auto& s : names) {
      if (!s.is_string()) throw InputError("graph JSON: names must be strings");
      list.push_back(s.get<std::string>());
    }
    g.set_names(std::move(list));
  }
  return g;
}

SimpleGraph parse_edge_json(std::string_view text) { return graph_from_json(parse_json_text(text)); }

nlohmann::json graph_to_json(const SimpleGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  nlohmann::json out = {{"n", g.n()}, {"edges", edges}};
  if (!g.names().empty()) out["names"] = g.names();
  return out;
}

std::string to_dot(const SimpleGraph& g, std::string_view name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.n(); ++v) os << "  " << v << " [label=\"" << g.name(v) << "\"];\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace graphprod
