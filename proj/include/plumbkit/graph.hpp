#pragma once

#include "plumbkit/arith.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace plumbkit {

using VertexId = std::string;

struct Edge {
  VertexId a;  // a < b
  VertexId b;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

Edge make_edge(VertexId u, VertexId v);

// Weighted forest of surgery components. Vertices are ordered by id; the
// class refuses loops, parallel edges and cycles.
class PlumbingGraph {
 public:
  PlumbingGraph() = default;

  /// Throws DomainError if the id already exists.
  void add_vertex(const VertexId& id, Integer weight);
  /// Throws DomainError on unknown ids, loops, parallel edges, or if the edge
  /// would close a cycle.
  void add_edge(const VertexId& u, const VertexId& v);
  void remove_vertex(const VertexId& id);
  void remove_edge(const VertexId& u, const VertexId& v);
  void set_weight(const VertexId& id, Integer weight);

  bool contains(const VertexId& id) const { return weights_.contains(id); }
  bool adjacent(const VertexId& u, const VertexId& v) const;
  const Integer& weight(const VertexId& id) const;
  const std::set<VertexId>& neighbors(const VertexId& id) const;
  std::size_t valence(const VertexId& id) const { return neighbors(id).size(); }

  std::size_t vertex_count() const noexcept { return weights_.size(); }
  std::size_t edge_count() const noexcept;
  bool empty() const noexcept { return weights_.empty(); }

  /// Ids in ascending order.
  std::vector<VertexId> vertices() const;
  /// Edges sorted, each with a < b.
  std::vector<Edge> edges() const;

  /// Vertex sets of the connected components, each sorted; components ordered
  /// by their smallest id.
  std::vector<std::vector<VertexId>> components() const;
  bool connected(const VertexId& u, const VertexId& v) const;

  /// Copy of the subgraph induced on ids.
  PlumbingGraph induced(const std::vector<VertexId>& ids) const;

  /// Returns an id not yet used, of the form prefix + number.
  VertexId fresh_id(const std::string& prefix) const;

  /// Re-checks simplicity and acyclicity. Used by property tests.
  bool is_valid_forest() const;

  friend bool operator==(const PlumbingGraph&, const PlumbingGraph&) = default;

 private:
  std::map<VertexId, Integer> weights_;
  std::map<VertexId, std::set<VertexId>> adjacency_;
};

}  // namespace plumbkit
