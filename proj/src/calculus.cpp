#include "plumbkit/calculus.hpp"

#include "plumbkit/errors.hpp"
#include "plumbkit/graph_io.hpp"
#include "plumbkit/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_set>

namespace plumbkit {

const char* to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::BlowDown: return "blowdown";
    case MoveKind::CancelZeroPair: return "cancel";
    case MoveKind::DeleteUnitVertex: return "delete";
    case MoveKind::BlowUp: return "blowup";
  }
  return "?";
}

const char* to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::S3: return "S3";
    case VerdictKind::NotHomologySphere: return "NOT-HS";
    case VerdictKind::Unknown: return "UNKNOWN";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Moves

PlumbingGraph blow_down(const PlumbingGraph& g, const VertexId& v) {
  if (!g.contains(v)) throw MoveError("blow-down: unknown vertex '" + v + "'");
  const Integer& w = g.weight(v);
  if (w != 1 && w != -1) throw MoveError("blow-down: vertex '" + v + "' has weight " + w.str() + ", not +-1");
  const auto nbrs = std::vector<VertexId>(g.neighbors(v).begin(), g.neighbors(v).end());
  if (nbrs.size() > 2) throw MoveError("blow-down: vertex '" + v + "' has valence " + std::to_string(nbrs.size()));
  if (nbrs.size() == 2 && g.adjacent(nbrs[0], nbrs[1]))
    throw MoveError("blow-down: neighbors of '" + v + "' are already adjacent");

  PlumbingGraph out = g;
  out.remove_vertex(v);
  for (const auto& n : nbrs) out.set_weight(n, out.weight(n) - w);
  if (nbrs.size() == 2) {
    try {
      out.add_edge(nbrs[0], nbrs[1]);
    } catch (const DomainError& e) {
      throw MoveError(std::string("blow-down: ") + e.what());
    }
  }
  return out;
}

PlumbingGraph cancel_zero_pair(const PlumbingGraph& g, const VertexId& u, const VertexId& v) {
  if (!g.contains(u) || !g.contains(v)) throw MoveError("cancel: unknown vertex in pair " + u + "-" + v);
  if (!g.adjacent(u, v)) throw MoveError("cancel: " + u + " and " + v + " are not adjacent");
  if (g.valence(u) != 1 || g.valence(v) != 1)
    throw MoveError("cancel: " + u + "-" + v + " is not a whole component");
  if (g.weight(u) != 0 && g.weight(v) != 0) throw MoveError("cancel: neither " + u + " nor " + v + " has weight 0");
  PlumbingGraph out = g;
  out.remove_vertex(u);
  out.remove_vertex(v);
  return out;
}

PlumbingGraph blow_up(const PlumbingGraph& g, const VertexId& fresh, int sign, const std::vector<VertexId>& anchors) {
  if (sign != 1 && sign != -1) throw MoveError("blow-up: sign must be +-1");
  if (g.contains(fresh)) throw MoveError("blow-up: vertex '" + fresh + "' already exists");
  if (!valid_vertex_id(fresh)) throw MoveError("blow-up: invalid vertex id '" + fresh + "'");
  if (anchors.size() > 2) throw MoveError("blow-up: at most two anchors");
  for (const auto& a : anchors)
    if (!g.contains(a)) throw MoveError("blow-up: unknown anchor '" + a + "'");
  if (anchors.size() == 2 && !g.adjacent(anchors[0], anchors[1]))
    throw MoveError("blow-up: anchors " + anchors[0] + " and " + anchors[1] + " are not adjacent");

  PlumbingGraph out = g;
  if (anchors.size() == 2) out.remove_edge(anchors[0], anchors[1]);
  out.add_vertex(fresh, sign);
  for (const auto& a : anchors) {
    out.set_weight(a, out.weight(a) + sign);
    out.add_edge(fresh, a);
  }
  return out;
}

namespace {

std::vector<WeightChange> diff_weights(const PlumbingGraph& before, const PlumbingGraph& after,
                                       const std::set<VertexId>& ids) {
  std::vector<WeightChange> out;
  for (const auto& id : ids) {
    WeightChange c{id, std::nullopt, std::nullopt};
    if (before.contains(id)) c.before = before.weight(id);
    if (after.contains(id)) c.after = after.weight(id);
    out.push_back(std::move(c));
  }
  return out;
}

std::set<VertexId> closed_neighborhood(const PlumbingGraph& g, const std::vector<VertexId>& ids) {
  std::set<VertexId> out;
  for (const auto& id : ids) {
    if (!g.contains(id)) continue;
    out.insert(id);
    out.insert(g.neighbors(id).begin(), g.neighbors(id).end());
  }
  return out;
}

PlumbingGraph perform(const PlumbingGraph& g, const Move& m) {
  switch (m.kind) {
    case MoveKind::BlowDown:
    case MoveKind::DeleteUnitVertex:
      if (m.targets.size() != 1) throw MoveError("blow-down takes one vertex");
      if (g.contains(m.targets[0]) && (g.valence(m.targets[0]) == 0) != (m.kind == MoveKind::DeleteUnitVertex))
        throw MoveError("recorded move kind does not match valence of '" + m.targets[0] + "'");
      return blow_down(g, m.targets[0]);
    case MoveKind::CancelZeroPair:
      if (m.targets.size() != 2) throw MoveError("cancel takes two vertices");
      return cancel_zero_pair(g, m.targets[0], m.targets[1]);
    case MoveKind::BlowUp:
      if (m.targets.empty()) throw MoveError("blow-up needs a new vertex id");
      return blow_up(g, m.targets[0], m.sign, {m.targets.begin() + 1, m.targets.end()});
  }
  throw MoveError("unknown move kind");
}

}  // namespace

Move record_blow_down(const PlumbingGraph& g, const VertexId& v) {
  PlumbingGraph after = blow_down(g, v);
  Move m{g.valence(v) == 0 ? MoveKind::DeleteUnitVertex : MoveKind::BlowDown, {v}, 0, {}};
  m.changes = diff_weights(g, after, closed_neighborhood(g, {v}));
  return m;
}

Move record_cancel_zero_pair(const PlumbingGraph& g, const VertexId& u, const VertexId& v) {
  PlumbingGraph after = cancel_zero_pair(g, u, v);
  Move m{MoveKind::CancelZeroPair, {u, v}, 0, {}};
  m.changes = diff_weights(g, after, {u, v});
  return m;
}

Move record_blow_up(const PlumbingGraph& g, const VertexId& fresh, int sign, const std::vector<VertexId>& anchors) {
  PlumbingGraph after = blow_up(g, fresh, sign, anchors);
  Move m{MoveKind::BlowUp, {fresh}, sign, {}};
  m.targets.insert(m.targets.end(), anchors.begin(), anchors.end());
  std::set<VertexId> ids(anchors.begin(), anchors.end());
  ids.insert(fresh);
  m.changes = diff_weights(g, after, ids);
  return m;
}

PlumbingGraph apply_move(const PlumbingGraph& g, const Move& m) {
  for (const auto& c : m.changes) {
    const bool present = g.contains(c.id);
    if (present != c.before.has_value() || (present && g.weight(c.id) != *c.before))
      throw MoveError(std::string(to_string(m.kind)) + ": recorded state of '" + c.id + "' does not match the graph");
  }
  PlumbingGraph out = perform(g, m);
  for (const auto& c : m.changes) {
    const bool present = out.contains(c.id);
    if (present != c.after.has_value() || (present && out.weight(c.id) != *c.after))
      throw MoveError(std::string(to_string(m.kind)) + ": result for '" + c.id + "' differs from the record");
  }
  return out;
}

std::vector<Move> applicable_moves(const PlumbingGraph& g, bool include_blow_ups) {
  const auto canon = canonicalize(g);
  const auto& pos = canon.position;
  // (kind, valence, canonical positions, sign): leaf blow-downs come before
  // valence-2 ones, so tree shape is disturbed as late as possible.
  using Key = std::tuple<int, std::size_t, std::vector<std::size_t>, int>;
  std::vector<std::pair<Key, Move>> keyed;

  for (const auto& v : g.vertices()) {
    const Integer& w = g.weight(v);
    if ((w == 1 || w == -1) && g.valence(v) <= 2) {
      Move m = record_blow_down(g, v);
      keyed.push_back({Key{static_cast<int>(m.kind), g.valence(v), {pos.at(v)}, 0}, std::move(m)});
    }
  }
  for (const auto& comp : g.components()) {
    if (comp.size() != 2) continue;
    const auto& u = comp[0];
    const auto& v = comp[1];
    if (g.weight(u) == 0 || g.weight(v) == 0) {
      Move m = record_cancel_zero_pair(g, u, v);
      keyed.push_back({Key{static_cast<int>(m.kind), 1, {pos.at(u), pos.at(v)}, 0}, std::move(m)});
    }
  }
  if (include_blow_ups) {
    const VertexId fresh = g.fresh_id("x");
    for (int sign : {-1, 1}) {
      for (const auto& v : g.vertices()) {
        keyed.push_back(
            {Key{static_cast<int>(MoveKind::BlowUp), 1, {pos.at(v)}, sign}, record_blow_up(g, fresh, sign, {v})});
      }
      for (const auto& e : g.edges()) {
        std::vector<std::size_t> p{pos.at(e.a), pos.at(e.b)};
        std::sort(p.begin(), p.end());
        keyed.push_back(
            {Key{static_cast<int>(MoveKind::BlowUp), 2, p, sign}, record_blow_up(g, fresh, sign, {e.a, e.b})});
      }
    }
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<Move> out;
  out.reserve(keyed.size());
  for (auto& [k, m] : keyed) out.push_back(std::move(m));
  return out;
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

class TreeEncoder {
 public:
  explicit TreeEncoder(const PlumbingGraph& g) : g_(g) {}

  // Subtree code of v hanging away from parent.
  std::string encode(const VertexId& v, const VertexId* parent) {
    std::vector<std::pair<std::string, VertexId>> kids = children(v, parent);
    std::string out = "(" + g_.weight(v).str();
    for (const auto& [code, id] : kids) out += code;
    return out + ")";
  }

  void assign(const VertexId& v, const VertexId* parent, std::map<VertexId, std::size_t>& pos) {
    pos.emplace(v, pos.size());
    for (const auto& [code, id] : children(v, parent)) assign(id, &v, pos);
  }

 private:
  std::vector<std::pair<std::string, VertexId>> children(const VertexId& v, const VertexId* parent) {
    std::vector<std::pair<std::string, VertexId>> kids;
    for (const auto& n : g_.neighbors(v)) {
      if (parent && n == *parent) continue;
      kids.emplace_back(encode(n, &v), n);
    }
    std::sort(kids.begin(), kids.end());
    return kids;
  }

  const PlumbingGraph& g_;
};

// One or two centers of a tree, by repeated leaf stripping.
std::vector<VertexId> tree_centers(const PlumbingGraph& g, const std::vector<VertexId>& comp) {
  std::map<VertexId, std::size_t> degree;
  std::vector<VertexId> layer;
  for (const auto& v : comp) {
    degree[v] = g.valence(v);
    if (degree[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = comp.size();
  while (remaining > 2) {
    std::vector<VertexId> next;
    for (const auto& leaf : layer) {
      --remaining;
      for (const auto& n : g.neighbors(leaf)) {
        if (--degree[n] == 1) next.push_back(n);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace

CanonicalForm canonicalize(const PlumbingGraph& g) {
  TreeEncoder enc(g);
  struct Piece {
    std::string code;
    std::vector<VertexId> roots;  // traversal order
  };
  std::vector<Piece> pieces;
  for (const auto& comp : g.components()) {
    const auto centers = tree_centers(g, comp);
    if (centers.size() == 1) {
      pieces.push_back({enc.encode(centers[0], nullptr), {centers[0]}});
    } else {
      std::string c0 = enc.encode(centers[0], &centers[1]);
      std::string c1 = enc.encode(centers[1], &centers[0]);
      std::vector<VertexId> roots{centers[0], centers[1]};
      if (c1 < c0) {
        std::swap(c0, c1);
        std::swap(roots[0], roots[1]);
      }
      pieces.push_back({"<" + c0 + c1 + ">", roots});
    }
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece& l, const Piece& r) { return std::tie(l.code, l.roots) < std::tie(r.code, r.roots); });

  CanonicalForm out;
  out.code = "{";
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i) out.code += ",";
    out.code += pieces[i].code;
    const auto& roots = pieces[i].roots;
    if (roots.size() == 1) {
      enc.assign(roots[0], nullptr, out.position);
    } else {
      out.position.emplace(roots[0], out.position.size());
      out.position.emplace(roots[1], out.position.size());
      enc.assign(roots[0], &roots[1], out.position);
      enc.assign(roots[1], &roots[0], out.position);
    }
  }
  out.code += "}";
  return out;
}

std::string canonical_form(const PlumbingGraph& g) { return canonicalize(g).code; }

// ---------------------------------------------------------------------------
// Traces

std::vector<PlumbingGraph> MoveTrace::intermediates() const {
  std::vector<PlumbingGraph> out{start};
  for (const auto& m : moves) out.push_back(apply_move(out.back(), m));
  return out;
}

PlumbingGraph replay(const MoveTrace& trace) {
  PlumbingGraph g = trace.start;
  for (const auto& m : trace.moves) g = apply_move(g, m);
  if (!(g == trace.end)) throw MoveError("replayed trace does not end at the recorded graph");
  return g;
}

std::string serialize_trace(const MoveTrace& trace) {
  std::string out = serialize_graph(trace.start);
  out += "moves\n";
  for (const auto& m : trace.moves) {
    switch (m.kind) {
      case MoveKind::BlowDown:
      case MoveKind::DeleteUnitVertex:
        out += "blowdown " + m.targets[0] + "\n";
        break;
      case MoveKind::CancelZeroPair:
        out += "cancel " + m.targets[0] + " " + m.targets[1] + "\n";
        break;
      case MoveKind::BlowUp:
        out += "blowup " + m.targets[0] + " " + std::to_string(m.sign);
        for (std::size_t i = 1; i < m.targets.size(); ++i) out += " " + m.targets[i];
        out += "\n";
        break;
    }
  }
  return out;
}

MoveTrace parse_trace(const std::string& text) {
  std::istringstream in(text);
  std::string graph_text;
  std::size_t lineno = 0;
  bool in_moves = false;
  MoveTrace trace;
  PlumbingGraph current;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    std::istringstream fields(line.substr(0, line.find('#')));
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (!in_moves) {
      if (tok.size() == 1 && tok[0] == "moves") {
        trace.start = parse_graph(graph_text);
        current = trace.start;
        in_moves = true;
      } else {
        graph_text += line + "\n";
      }
      continue;
    }
    if (tok.empty()) continue;
    try {
      if (tok[0] == "blowdown" && tok.size() == 2) {
        trace.moves.push_back(record_blow_down(current, tok[1]));
      } else if (tok[0] == "cancel" && tok.size() == 3) {
        trace.moves.push_back(record_cancel_zero_pair(current, tok[1], tok[2]));
      } else if (tok[0] == "blowup" && tok.size() >= 3 && tok.size() <= 5) {
        int sign = 0;
        if (tok[2] == "1" || tok[2] == "+1") sign = 1;
        else if (tok[2] == "-1") sign = -1;
        else throw ParseError(lineno, "field 'sign': expected +-1, got '" + tok[2] + "'");
        trace.moves.push_back(record_blow_up(current, tok[1], sign, {tok.begin() + 3, tok.end()}));
      } else {
        throw ParseError(lineno, "unrecognized move '" + line + "'");
      }
    } catch (const MoveError& e) {
      throw MoveError("line " + std::to_string(lineno) + ": " + e.what());
    }
    current = apply_move(current, trace.moves.back());
  }
  if (!in_moves) throw ParseError(lineno, "missing 'moves' line");
  trace.end = current;
  return trace;
}

// ---------------------------------------------------------------------------
// Search

std::string Reduction::label() const {
  if (verdict == VerdictKind::NotHomologySphere) return "NOT-HS(" + det_abs.str() + ")";
  return to_string(verdict);
}

Reduction reduce_to_s3(const PlumbingGraph& g, const ReduceOptions& options) {
  Reduction result;
  result.det_abs = abs(determinant(linking_matrix(g)));
  if (result.det_abs != 1) {
    result.verdict = VerdictKind::NotHomologySphere;
    return result;
  }

  struct Node {
    PlumbingGraph graph;
    std::size_t parent;
    std::optional<Move> move;
    std::size_t blow_ups;
  };
  std::vector<Node> nodes;
  std::unordered_set<std::string> seen;
  auto key = [](const PlumbingGraph& graph, std::size_t used) {
    return canonical_form(graph) + "#" + std::to_string(used);
  };

  auto finish = [&](std::size_t idx) {
    MoveTrace trace;
    std::vector<Move> moves;
    for (std::size_t i = idx; nodes[i].move; i = nodes[i].parent) moves.push_back(*nodes[i].move);
    std::reverse(moves.begin(), moves.end());
    trace.start = g;
    trace.moves = std::move(moves);
    trace.end = nodes[idx].graph;
    result.verdict = VerdictKind::S3;
    result.trace = std::move(trace);
    result.states_visited = seen.size();
    return result;
  };

  nodes.push_back({g, 0, std::nullopt, 0});
  seen.insert(key(g, 0));
  if (g.empty()) return finish(0);

  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      const bool may_blow_up = nodes[idx].blow_ups < options.blow_up_depth;
      auto moves = applicable_moves(nodes[idx].graph, may_blow_up);
      for (auto& m : moves) {
        PlumbingGraph child = apply_move(nodes[idx].graph, m);
        const std::size_t used = nodes[idx].blow_ups + (m.kind == MoveKind::BlowUp ? 1 : 0);
        auto k = key(child, used);
        if (seen.contains(k)) continue;
        if (seen.size() >= options.budget) {
          result.budget_exhausted = true;
          result.states_visited = seen.size();
          return result;
        }
        seen.insert(std::move(k));
        const bool done = child.empty();
        nodes.push_back({std::move(child), idx, std::move(m), used});
        if (done) return finish(nodes.size() - 1);
        next.push_back(nodes.size() - 1);
      }
    }
    frontier = std::move(next);
  }
  result.states_visited = seen.size();
  return result;
}

}  // namespace plumbkit
