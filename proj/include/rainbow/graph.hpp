#pragma once

// Simple undirected graphs on at most 64 vertices, stored as adjacency
// bitmasks. This is the representation used by the game, the independence
// complexes and the transversal solver.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"

namespace rainbow {

using VertexMask = std::uint64_t;

constexpr VertexMask bit(std::size_t v) noexcept { return VertexMask{1} << v; }

constexpr VertexMask low_bits(std::size_t n) noexcept {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

template <class Fn>
constexpr void for_each_bit(VertexMask m, Fn&& fn) {
  while (m) {
    fn(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
}

class Graph {
 public:
  static constexpr std::size_t max_vertices = 64;

  Graph() = default;

  explicit Graph(std::size_t n) : adj_(n, 0) {
    if (n > max_vertices) throw std::invalid_argument("graphs are limited to 64 vertices");
  }

  Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  void add_edge(Vertex u, Vertex v) {
    if (u >= size() || v >= size()) {
      throw std::out_of_range("edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside " +
                              std::to_string(size()) + " vertices");
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }

  void remove_edge(Vertex u, Vertex v) {
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
  }

  std::size_t size() const noexcept { return adj_.size(); }
  VertexMask all() const noexcept { return low_bits(size()); }
  VertexMask neighbors(Vertex v) const { return adj_[v]; }
  bool has_edge(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }
  std::size_t degree(Vertex v) const { return static_cast<std::size_t>(std::popcount(adj_[v])); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (auto m : adj_) twice += static_cast<std::size_t>(std::popcount(m));
    return twice / 2;
  }

  // Edges (u, v) with u < v, lexicographic.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < size(); ++u) {
      for_each_bit(adj_[u] & ~low_bits(u + 1), [&](Vertex v) { out.emplace_back(u, v); });
    }
    return out;
  }

  bool has_isolated_vertex() const {
    for (auto m : adj_) {
      if (m == 0) return true;
    }
    return false;
  }

  bool is_independent(VertexMask s) const {
    VertexMask rest = s;
    while (rest) {
      const auto v = std::countr_zero(rest);
      if (adj_[v] & s) return false;
      rest &= rest - 1;
    }
    return true;
  }

  VertexMask closed_neighborhood(VertexMask s) const {
    VertexMask out = s;
    for_each_bit(s, [&](Vertex v) { out |= adj_[v]; });
    return out;
  }

  // Induced subgraph on `keep`, relabelled to 0..|keep|-1 in increasing order.
  Graph induced(VertexMask keep) const {
    std::vector<int> relabel(size(), -1);
    std::size_t k = 0;
    for_each_bit(keep, [&](Vertex v) { relabel[v] = static_cast<int>(k++); });
    Graph g(k);
    for_each_bit(keep, [&](Vertex v) {
      VertexMask m = 0;
      for_each_bit(adj_[v] & keep, [&](Vertex x) { m |= bit(static_cast<std::size_t>(relabel[x])); });
      g.adj_[static_cast<std::size_t>(relabel[v])] = m;
    });
    return g;
  }

  // g' with g'.has_edge(perm[u], perm[v]) iff has_edge(u, v).
  Graph relabelled(const std::vector<std::size_t>& perm) const {
    Graph g(size());
    for (auto [u, v] : edges()) g.add_edge(static_cast<Vertex>(perm[u]), static_cast<Vertex>(perm[v]));
    return g;
  }

  const std::vector<VertexMask>& adjacency() const noexcept { return adj_; }

  bool operator==(const Graph&) const = default;

 private:
  std::vector<VertexMask> adj_;
};

// Vertices u in [0, left), w mapped to left + w.
inline Graph as_graph(const BipartiteGraph& g) {
  Graph out(g.left_size() + g.right_size());
  for (const auto& e : g.edges()) out.add_edge(e.u, static_cast<Vertex>(g.left_size() + e.w));
  return out;
}

// Vertex i is the i-th edge of g in sorted order; adjacent iff the edges
// share an endpoint.
inline Graph line_graph(const BipartiteGraph& g) {
  const auto& e = g.edges();
  Graph out(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (e[i].u == e[j].u || e[i].w == e[j].w) out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return out;
}

// A graph with a list of vertex sets V_1..V_m (possibly overlapping).
class PartitionedGraph {
 public:
  PartitionedGraph() = default;

  PartitionedGraph(Graph g, std::vector<std::vector<Vertex>> parts) : graph_(std::move(g)), parts_(std::move(parts)) {
    for (auto& p : parts_) {
      std::sort(p.begin(), p.end());
      p.erase(std::unique(p.begin(), p.end()), p.end());
      for (auto v : p) {
        if (v >= graph_.size()) throw std::out_of_range("part member outside the vertex set");
      }
    }
  }

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<std::vector<Vertex>>& parts() const noexcept { return parts_; }
  std::size_t part_count() const noexcept { return parts_.size(); }

  VertexMask part_mask(std::size_t i) const {
    VertexMask m = 0;
    for (auto v : parts_[i]) m |= bit(v);
    return m;
  }

  // V_I for a subset I of part indices given as a bitmask.
  VertexMask union_of(std::uint64_t subset) const {
    VertexMask m = 0;
    for_each_bit(subset, [&](Vertex i) { m |= part_mask(i); });
    return m;
  }

  bool operator==(const PartitionedGraph&) const = default;

 private:
  Graph graph_;
  std::vector<std::vector<Vertex>> parts_;
};

// Independent sets of the returned graph meeting k distinct parts are
// exactly the matchings of h of size k: vertices are the distinct edges of
// h, adjacent when they meet outside `partition_side`, and parts are the
// fibers over `partition_side`.
inline PartitionedGraph transversal_view(const TriHypergraph& h, Side partition_side) {
  auto e = h.edges();
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  if (e.size() > Graph::max_vertices) throw std::invalid_argument("too many distinct edges for a transversal view");
  const auto p = index_of(partition_side);
  Graph g(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      for (std::size_t s = 0; s < 3; ++s) {
        if (s != p && e[i][s] == e[j][s]) {
          g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
          break;
        }
      }
    }
  }
  std::vector<std::vector<Vertex>> parts(h.side_size(partition_side));
  for (std::size_t i = 0; i < e.size(); ++i) parts[e[i][p]].push_back(static_cast<Vertex>(i));
  return PartitionedGraph(std::move(g), std::move(parts));
}

}  // namespace rainbow
