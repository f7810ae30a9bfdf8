#include "plumbkit/graph.hpp"

#include "plumbkit/errors.hpp"

#include <algorithm>
#include <deque>

namespace plumbkit {

Edge make_edge(VertexId u, VertexId v) {
  if (v < u) std::swap(u, v);
  return {std::move(u), std::move(v)};
}

void PlumbingGraph::add_vertex(const VertexId& id, Integer weight) {
  if (id.empty()) throw DomainError("empty vertex id");
  if (weights_.contains(id)) throw DomainError("duplicate vertex id '" + id + "'");
  weights_.emplace(id, std::move(weight));
  adjacency_.emplace(id, std::set<VertexId>{});
}

void PlumbingGraph::add_edge(const VertexId& u, const VertexId& v) {
  if (!contains(u)) throw DomainError("unknown vertex '" + u + "'");
  if (!contains(v)) throw DomainError("unknown vertex '" + v + "'");
  if (u == v) throw DomainError("loop at '" + u + "'");
  if (adjacent(u, v)) throw DomainError("parallel edge " + u + "-" + v);
  if (connected(u, v)) throw DomainError("edge " + u + "-" + v + " would close a cycle");
  adjacency_[u].insert(v);
  adjacency_[v].insert(u);
}

void PlumbingGraph::remove_vertex(const VertexId& id) {
  auto it = adjacency_.find(id);
  if (it == adjacency_.end()) throw DomainError("unknown vertex '" + id + "'");
  for (const auto& n : it->second) adjacency_[n].erase(id);
  adjacency_.erase(it);
  weights_.erase(id);
}

void PlumbingGraph::remove_edge(const VertexId& u, const VertexId& v) {
  if (!adjacent(u, v)) throw DomainError("no edge " + u + "-" + v);
  adjacency_[u].erase(v);
  adjacency_[v].erase(u);
}

void PlumbingGraph::set_weight(const VertexId& id, Integer weight) {
  auto it = weights_.find(id);
  if (it == weights_.end()) throw DomainError("unknown vertex '" + id + "'");
  it->second = std::move(weight);
}

bool PlumbingGraph::adjacent(const VertexId& u, const VertexId& v) const {
  auto it = adjacency_.find(u);
  return it != adjacency_.end() && it->second.contains(v);
}

const Integer& PlumbingGraph::weight(const VertexId& id) const {
  auto it = weights_.find(id);
  if (it == weights_.end()) throw DomainError("unknown vertex '" + id + "'");
  return it->second;
}

const std::set<VertexId>& PlumbingGraph::neighbors(const VertexId& id) const {
  auto it = adjacency_.find(id);
  if (it == adjacency_.end()) throw DomainError("unknown vertex '" + id + "'");
  return it->second;
}

std::size_t PlumbingGraph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& [id, nbrs] : adjacency_) twice += nbrs.size();
  return twice / 2;
}

std::vector<VertexId> PlumbingGraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(weights_.size());
  for (const auto& [id, w] : weights_) out.push_back(id);
  return out;
}

std::vector<Edge> PlumbingGraph::edges() const {
  std::vector<Edge> out;
  for (const auto& [id, nbrs] : adjacency_) {
    for (const auto& n : nbrs) {
      if (id < n) out.push_back({id, n});
    }
  }
  return out;
}

std::vector<std::vector<VertexId>> PlumbingGraph::components() const {
  std::vector<std::vector<VertexId>> out;
  std::set<VertexId> seen;
  for (const auto& [start, w] : weights_) {
    if (seen.contains(start)) continue;
    std::vector<VertexId> comp;
    std::deque<VertexId> queue{start};
    seen.insert(start);
    while (!queue.empty()) {
      VertexId cur = queue.front();
      queue.pop_front();
      comp.push_back(cur);
      for (const auto& n : adjacency_.at(cur)) {
        if (seen.insert(n).second) queue.push_back(n);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool PlumbingGraph::connected(const VertexId& u, const VertexId& v) const {
  if (u == v) return true;
  std::set<VertexId> seen{u};
  std::deque<VertexId> queue{u};
  while (!queue.empty()) {
    VertexId cur = queue.front();
    queue.pop_front();
    for (const auto& n : adjacency_.at(cur)) {
      if (n == v) return true;
      if (seen.insert(n).second) queue.push_back(n);
    }
  }
  return false;
}

PlumbingGraph PlumbingGraph::induced(const std::vector<VertexId>& ids) const {
  PlumbingGraph g;
  for (const auto& id : ids) g.add_vertex(id, weight(id));
  for (const auto& id : ids) {
    for (const auto& n : neighbors(id)) {
      if (id < n && g.contains(n)) g.add_edge(id, n);
    }
  }
  return g;
}

VertexId PlumbingGraph::fresh_id(const std::string& prefix) const {
  for (std::size_t i = 1;; ++i) {
    VertexId candidate = prefix + std::to_string(i);
    if (!contains(candidate)) return candidate;
  }
}

bool PlumbingGraph::is_valid_forest() const {
  for (const auto& [id, nbrs] : adjacency_) {
    if (nbrs.contains(id)) return false;
    for (const auto& n : nbrs) {
      if (!weights_.contains(n) || !adjacency_.at(n).contains(id)) return false;
    }
  }
  // A simple graph is a forest iff |E| = |V| - #components.
  return edge_count() + components().size() == vertex_count();
}

}  // namespace plumbkit
