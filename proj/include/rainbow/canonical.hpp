#pragma once

// Graph codes for memo tables. A canonical code is the lexicographically
// largest adjacency row sequence over all vertex orders that list vertices
// by a refined degree colouring; isomorphic graphs, and only those, share
// it. A labelled code is the adjacency of the graph as given.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "graph.hpp"

namespace rainbow {

struct GraphCode {
  std::vector<std::uint64_t> words;  // words[0] = vertex count, then one row per vertex

  bool operator==(const GraphCode&) const = default;
  auto operator<=>(const GraphCode&) const = default;
};

struct GraphCodeHash {
  std::size_t operator()(const GraphCode& c) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto w : c.words) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

inline GraphCode labelled_code(const Graph& g) {
  GraphCode c;
  c.words.reserve(g.size() + 1);
  c.words.push_back(g.size());
  for (auto m : g.adjacency()) c.words.push_back(m);
  return c;
}

namespace detail {

// Colour = rank of (degree, sorted neighbour degrees); isomorphism invariant.
inline std::vector<std::size_t> refined_colours(const Graph& g) {
  const auto n = g.size();
  std::vector<std::vector<std::size_t>> sig(n);
  for (Vertex v = 0; v < n; ++v) {
    sig[v].push_back(g.degree(v));
    std::vector<std::size_t> nd;
    for_each_bit(g.neighbors(v), [&](Vertex x) { nd.push_back(g.degree(x)); });
    std::sort(nd.begin(), nd.end());
    sig[v].insert(sig[v].end(), nd.begin(), nd.end());
  }
  auto distinct = sig;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<std::size_t> colour(n);
  for (Vertex v = 0; v < n; ++v) {
    colour[v] = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
  }
  return colour;
}

}  // namespace detail

// Exhaustive over colour-respecting orders with prefix pruning. Cost grows
// with the automorphism group; intended for small graphs.
inline GraphCode canonical_code(const Graph& g) {
  const auto n = g.size();
  const auto colour = detail::refined_colours(g);
  std::vector<std::size_t> slot_colour(colour);
  std::sort(slot_colour.begin(), slot_colour.end());

  std::vector<std::uint64_t> best, cur(n);
  std::vector<Vertex> order(n);
  VertexMask placed = 0;

  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (depth == n) {
      if (best.empty() || cur > best) best = cur;
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      if ((placed >> v) & 1U || colour[v] != slot_colour[depth]) continue;
      std::uint64_t row = 0;
      for (std::size_t j = 0; j < depth; ++j) {
        if (g.has_edge(v, order[j])) row |= bit(j);
      }
      cur[depth] = row;
      if (!best.empty()) {
        const auto c = std::lexicographical_compare_three_way(cur.begin(), cur.begin() + static_cast<long>(depth) + 1,
                                                              best.begin(), best.begin() + static_cast<long>(depth) + 1);
        if (c < 0) continue;
      }
      order[depth] = v;
      placed |= bit(v);
      self(self, depth + 1);
      placed &= ~bit(v);
    }
  };
  search(search, 0);

  GraphCode c;
  c.words.reserve(n + 1);
  c.words.push_back(n);
  c.words.insert(c.words.end(), best.begin(), best.end());
  return c;
}

// Rebuilds a graph from a canonical code (rows list lower-triangle adjacency).
inline Graph graph_from_canonical(const GraphCode& c) {
  const auto n = static_cast<std::size_t>(c.words[0]);
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for_each_bit(c.words[i + 1], [&](Vertex j) { g.add_edge(static_cast<Vertex>(i), j); });
  }
  return g;
}

// One representative per isomorphism class of graphs on n vertices, grown
// from the classes on n - 1 vertices by adding a vertex with every possible
// neighbourhood. Sorted by code.
inline std::vector<Graph> nonisomorphic_graphs(std::size_t n) {
  std::set<GraphCode> classes;
  if (n == 0) {
    classes.insert(canonical_code(Graph(0)));
  } else {
    for (const auto& small : nonisomorphic_graphs(n - 1)) {
      for (VertexMask nb = 0; nb < bit(n - 1); ++nb) {
        Graph g(n);
        for (auto [u, v] : small.edges()) g.add_edge(u, v);
        for_each_bit(nb, [&](Vertex u) { g.add_edge(u, static_cast<Vertex>(n - 1)); });
        classes.insert(canonical_code(g));
      }
    }
  }
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (const auto& c : classes) out.push_back(graph_from_canonical(c));
  return out;
}

}  // namespace rainbow
