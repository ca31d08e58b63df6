#pragma once

// Exact value of the deletion/explosion game on a graph. CON offers an edge
// e; NON either deletes it (G - e) or explodes it (G * e: both endpoints and
// all their neighbours vanish). An isolated vertex ends the game with value
// infinity; otherwise the value is the number of explosions once every
// vertex is gone. Recursively,
//   psi(empty) = 0, psi(G) = inf if G has an isolated vertex,
//   psi(G) = max over e of min(psi(G - e), psi(G * e) + 1).

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "canonical.hpp"
#include "graph.hpp"

namespace rainbow {

// Non-negative integer or infinity; infinity is above every integer and
// absorbs +1.
class ExtendedNat {
 public:
  constexpr ExtendedNat() = default;
  constexpr explicit ExtendedNat(std::uint32_t v) : v_(v) {}

  static constexpr ExtendedNat infinity() { return ExtendedNat(inf_raw); }

  constexpr bool is_infinite() const noexcept { return v_ == inf_raw; }
  constexpr std::uint32_t value() const {
    if (is_infinite()) throw std::logic_error("infinite value has no integer representation");
    return v_;
  }

  constexpr ExtendedNat plus_one() const noexcept { return is_infinite() ? *this : ExtendedNat(v_ + 1); }

  constexpr auto operator<=>(const ExtendedNat&) const = default;

  constexpr bool at_least(std::size_t k) const noexcept { return is_infinite() || v_ >= k; }

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(v_); }

 private:
  static constexpr std::uint32_t inf_raw = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t v_ = 0;
};

using GameValue = ExtendedNat;

class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A position: every edge joins two active vertices.
struct GameState {
  Graph graph;
  VertexMask active = 0;

  static GameState of(const Graph& g) { return {g, g.all()}; }

  bool empty() const noexcept { return active == 0; }

  bool has_isolated_vertex() const {
    bool found = false;
    for_each_bit(active, [&](Vertex v) { found = found || graph.neighbors(v) == 0; });
    return found;
  }

  bool operator==(const GameState&) const = default;
};

inline void require_active_edge(const GameState& s, Vertex u, Vertex v) {
  if (u >= s.graph.size() || v >= s.graph.size() || !s.graph.has_edge(u, v)) {
    throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") is not active");
  }
}

inline GameState delete_edge(const GameState& s, Vertex u, Vertex v) {
  require_active_edge(s, u, v);
  GameState out = s;
  out.graph.remove_edge(u, v);
  return out;
}

inline GameState explode(const GameState& s, Vertex u, Vertex v) {
  require_active_edge(s, u, v);
  const VertexMask gone = s.graph.closed_neighborhood(bit(u) | bit(v));
  GameState out = s;
  out.active &= ~gone;
  for_each_bit(gone, [&](Vertex x) {
    for_each_bit(out.graph.neighbors(x), [&](Vertex y) { out.graph.remove_edge(x, y); });
  });
  return out;
}

struct GameOptions {
  // States with at most this many vertices are memoised by isomorphism
  // class; larger ones by labelled adjacency.
  std::size_t canonical_threshold = 10;
  std::size_t memo_limit = 4'000'000;
};

namespace detail {

class GameSolver {
 public:
  explicit GameSolver(GameOptions opt) : opt_(opt) {}

  GameValue value(const Graph& g) {
    if (g.size() == 0) return GameValue(0);
    if (g.has_isolated_vertex()) return GameValue::infinity();
    const auto key = code_of(g);
    if (auto it = exact_.find(key); it != exact_.end()) return it->second;

    GameValue best(0);
    for (const auto& [u, v] : ordered_edges(g)) {
      const auto exploded = value(exploded_graph(g, u, v)).plus_one();
      if (exploded <= best) continue;  // min(., exploded) cannot beat best
      Graph deleted = g;
      deleted.remove_edge(u, v);
      best = std::max(best, std::min(value(deleted), exploded));
      if (best.is_infinite()) break;
    }
    remember(exact_, key, best);
    return best;
  }

  // psi(g) >= k, decided without computing the exact value.
  bool at_least(const Graph& g, std::size_t k) {
    if (k == 0) return true;
    if (g.size() == 0) return false;
    if (g.has_isolated_vertex()) return true;
    if (k == 1) return true;  // every nonempty position is worth at least 1
    auto key = code_of(g);
    key.words.push_back(k);
    if (auto it = threshold_.find(key); it != threshold_.end()) return it->second;

    bool result = false;
    for (const auto& [u, v] : ordered_edges(g)) {
      if (!at_least(exploded_graph(g, u, v), k - 1)) continue;
      Graph deleted = g;
      deleted.remove_edge(u, v);
      if (at_least(deleted, k)) {
        result = true;
        break;
      }
    }
    remember(threshold_, key, result);
    return result;
  }

  std::size_t memo_size() const noexcept { return exact_.size() + threshold_.size(); }

 private:
  GraphCode code_of(const Graph& g) const {
    return g.size() <= opt_.canonical_threshold ? canonical_code(g) : labelled_code(g);
  }

  template <class Map, class V>
  void remember(Map& m, const GraphCode& key, V value) {
    if (memo_size() >= opt_.memo_limit) {
      throw ResourceLimitExceeded("game memo table exceeded " + std::to_string(opt_.memo_limit) + " entries");
    }
    m.emplace(key, value);
  }

  static Graph exploded_graph(const Graph& g, Vertex u, Vertex v) {
    return g.induced(g.all() & ~g.closed_neighborhood(bit(u) | bit(v)));
  }

  // Edges whose explosion removes the most vertices first.
  static std::vector<std::pair<Vertex, Vertex>> ordered_edges(const Graph& g) {
    auto e = g.edges();
    std::vector<std::pair<int, std::size_t>> keyed;
    keyed.reserve(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      keyed.emplace_back(-std::popcount(g.closed_neighborhood(bit(e[i].first) | bit(e[i].second))), i);
    }
    std::stable_sort(keyed.begin(), keyed.end());
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(e.size());
    for (auto [_, i] : keyed) out.push_back(e[i]);
    return out;
  }

  GameOptions opt_;
  std::unordered_map<GraphCode, GameValue, GraphCodeHash> exact_;
  std::unordered_map<GraphCode, bool, GraphCodeHash> threshold_;
};

inline Graph compact(const GameState& s) { return s.graph.induced(s.active); }

}  // namespace detail

inline GameValue psi(const Graph& g, GameOptions opt = {}) { return detail::GameSolver(opt).value(g); }

inline GameValue psi(const GameState& s, GameOptions opt = {}) { return psi(detail::compact(s), opt); }

inline bool psi_at_least(const Graph& g, std::size_t k, GameOptions opt = {}) {
  return detail::GameSolver(opt).at_least(g, k);
}

inline GameValue psi_line(const BipartiteGraph& g, GameOptions opt = {}) { return psi(line_graph(g), opt); }

inline bool psi_line_at_least(const BipartiteGraph& g, std::size_t k, GameOptions opt = {}) {
  return psi_at_least(line_graph(g), k, opt);
}

}  // namespace rainbow
