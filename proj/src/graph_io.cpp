#include "plumbkit/graph_io.hpp"

#include "plumbkit/errors.hpp"

#include <sstream>
#include <vector>

namespace plumbkit {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream in(body);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

bool valid_vertex_id(const std::string& id) {
  if (id.empty()) return false;
  for (char ch : id) {
    const bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') ||
                    ch == '_' || ch == '.' || ch == ':' || ch == '-';
    if (!ok) return false;
  }
  return true;
}

PlumbingGraph parse_graph(const std::string& text) { return parse_graph(text, 1); }

PlumbingGraph parse_graph(const std::string& text, std::size_t first_line) {
  PlumbingGraph g;
  std::istringstream in(text);
  std::size_t lineno = first_line - 1;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    const auto tok = tokenize(line);
    if (tok.empty()) continue;
    if (tok[0] == "vertex") {
      if (tok.size() != 3) throw ParseError(lineno, "expected 'vertex <id> <weight>'");
      if (!valid_vertex_id(tok[1])) throw ParseError(lineno, "field 'id': invalid vertex id '" + tok[1] + "'");
      Integer weight;
      try {
        weight = parse_integer(tok[2]);
      } catch (const DomainError&) {
        throw ParseError(lineno, "field 'weight': not an integer: '" + tok[2] + "'");
      }
      if (g.contains(tok[1])) throw ParseError(lineno, "field 'id': duplicate vertex id '" + tok[1] + "'");
      g.add_vertex(tok[1], std::move(weight));
    } else if (tok[0] == "edge") {
      if (tok.size() != 3) throw ParseError(lineno, "expected 'edge <id> <id>'");
      for (std::size_t i = 1; i <= 2; ++i) {
        if (!g.contains(tok[i]))
          throw ParseError(lineno, "field 'endpoint " + std::to_string(i) + "': unknown vertex '" + tok[i] + "'");
      }
      try {
        g.add_edge(tok[1], tok[2]);
      } catch (const DomainError& e) {
        throw ParseError(lineno, std::string("field 'edge': ") + e.what());
      }
    } else {
      throw ParseError(lineno, "unknown record '" + tok[0] + "'");
    }
  }
  return g;
}

std::string serialize_graph(const PlumbingGraph& g) {
  std::string out;
  for (const auto& v : g.vertices()) out += "vertex " + v + " " + g.weight(v).str() + "\n";
  for (const auto& e : g.edges()) out += "edge " + e.a + " " + e.b + "\n";
  return out;
}

std::string to_dot(const PlumbingGraph& g) {
  std::string out = "graph plumbing {\n";
  for (const auto& v : g.vertices()) out += "  \"" + v + "\" [label=\"" + g.weight(v).str() + "\"];\n";
  for (const auto& e : g.edges()) out += "  \"" + e.a + "\" -- \"" + e.b + "\";\n";
  out += "}\n";
  return out;
}

}  // namespace plumbkit
