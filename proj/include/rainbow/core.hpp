#pragma once

// Combinatorial objects shared by every solver: bipartite graphs, 3-partite
// hypergraphs, matchings and families of matchings, Latin squares and
// diagonals. All vertex indices are 0-based. Objects validate on
// construction and are immutable afterwards.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rainbow {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;  // side U (left)
  Vertex w = 0;  // side W (right)
  auto operator<=>(const Edge&) const = default;
};

struct Triple {
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;
  auto operator<=>(const Triple&) const = default;

  Vertex operator[](std::size_t side) const { return side == 0 ? a : side == 1 ? b : c; }
};

enum class Side : std::uint8_t { A = 0, B = 1, C = 2 };
enum class SidePair : std::uint8_t { AB, AC, BC };

constexpr std::size_t index_of(Side s) noexcept { return static_cast<std::size_t>(s); }

constexpr std::array<Side, 2> sides_of(SidePair p) noexcept {
  switch (p) {
    case SidePair::AB: return {Side::A, Side::B};
    case SidePair::AC: return {Side::A, Side::C};
    default: return {Side::B, Side::C};
  }
}

using GraphMatching = std::vector<Edge>;
using HyperMatching = std::vector<Triple>;

inline bool is_matching(std::span<const Edge> edges) {
  std::vector<Vertex> us, ws;
  for (const auto& e : edges) {
    us.push_back(e.u);
    ws.push_back(e.w);
  }
  std::sort(us.begin(), us.end());
  std::sort(ws.begin(), ws.end());
  return std::adjacent_find(us.begin(), us.end()) == us.end() &&
         std::adjacent_find(ws.begin(), ws.end()) == ws.end();
}

inline bool is_matching(std::span<const Triple> edges) {
  for (std::size_t s = 0; s < 3; ++s) {
    std::vector<Vertex> vs;
    for (const auto& t : edges) vs.push_back(t[s]);
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
  }
  return true;
}

class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  BipartiteGraph(std::size_t left_size, std::size_t right_size, std::vector<Edge> edges)
      : left_(left_size), right_(right_size), edges_(std::move(edges)) {
    for (const auto& e : edges_) {
      if (e.u >= left_ || e.w >= right_) {
        throw std::out_of_range("bipartite edge (" + std::to_string(e.u) + "," +
                                std::to_string(e.w) + ") outside sides " +
                                std::to_string(left_) + "x" + std::to_string(right_));
      }
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
      throw std::invalid_argument("bipartite graph has a duplicate edge");
    }
  }

  std::size_t left_size() const noexcept { return left_; }
  std::size_t right_size() const noexcept { return right_; }

  // Sorted, duplicate-free.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool contains(Edge e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

  std::size_t left_degree(Vertex u) const {
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [u](const Edge& e) { return e.u == u; }));
  }

  std::size_t right_degree(Vertex w) const {
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [w](const Edge& e) { return e.w == w; }));
  }

  bool operator==(const BipartiteGraph&) const = default;

 private:
  std::size_t left_ = 0;
  std::size_t right_ = 0;
  std::vector<Edge> edges_;
};

// 3-partite hypergraph over sides (A, B, C). Edges form a multiset; whether
// the hypergraph is simple is a predicate, not a representation constraint.
class TriHypergraph {
 public:
  TriHypergraph() = default;

  TriHypergraph(std::array<std::size_t, 3> sides, std::vector<Triple> edges)
      : sides_(sides), edges_(std::move(edges)) {
    for (const auto& t : edges_) {
      if (t.a >= sides_[0] || t.b >= sides_[1] || t.c >= sides_[2]) {
        throw std::out_of_range("hyperedge (" + std::to_string(t.a) + "," + std::to_string(t.b) +
                                "," + std::to_string(t.c) + ") outside sides");
      }
    }
  }

  const std::array<std::size_t, 3>& sides() const noexcept { return sides_; }
  std::size_t side_size(Side s) const noexcept { return sides_[index_of(s)]; }
  const std::vector<Triple>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool operator==(const TriHypergraph&) const = default;

 private:
  std::array<std::size_t, 3> sides_{0, 0, 0};
  std::vector<Triple> edges_;
};

inline std::size_t degree(const TriHypergraph& h, Side side, Vertex v) {
  if (v >= h.side_size(side)) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside side of size " +
                            std::to_string(h.side_size(side)));
  }
  const auto s = index_of(side);
  return static_cast<std::size_t>(std::count_if(
      h.edges().begin(), h.edges().end(), [&](const Triple& t) { return t[s] == v; }));
}

inline std::vector<std::size_t> degrees(const TriHypergraph& h, Side side) {
  std::vector<std::size_t> d(h.side_size(side), 0);
  const auto s = index_of(side);
  for (const auto& t : h.edges()) ++d[t[s]];
  return d;
}

// delta(S) and Delta(S) for a union of sides. Empty unions give 0.
inline std::size_t min_degree(const TriHypergraph& h, std::initializer_list<Side> sides) {
  bool any = false;
  std::size_t best = 0;
  for (Side s : sides) {
    for (auto d : degrees(h, s)) {
      best = any ? std::min(best, d) : d;
      any = true;
    }
  }
  return best;
}

inline std::size_t max_degree(const TriHypergraph& h, std::initializer_list<Side> sides) {
  std::size_t best = 0;
  for (Side s : sides) {
    for (auto d : degrees(h, s)) best = std::max(best, d);
  }
  return best;
}

// Largest number of edges sharing one (x, y) projection onto the pair.
inline std::size_t pair_multiplicity(const TriHypergraph& h, SidePair pair) {
  const auto [x, y] = sides_of(pair);
  std::map<std::pair<Vertex, Vertex>, std::size_t> counts;
  std::size_t worst = 0;
  for (const auto& t : h.edges()) {
    worst = std::max(worst, ++counts[{t[index_of(x)], t[index_of(y)]}]);
  }
  return worst;
}

inline bool is_p_simple(const TriHypergraph& h, SidePair pair, std::size_t p) {
  if (p == 0) throw std::invalid_argument("p-simplicity needs p >= 1");
  return pair_multiplicity(h, pair) <= p;
}

inline bool is_simple_pair(const TriHypergraph& h, SidePair pair) { return is_p_simple(h, pair, 1); }

// No edge repeated.
inline bool is_simple(const TriHypergraph& h) {
  auto e = h.edges();
  std::sort(e.begin(), e.end());
  return std::adjacent_find(e.begin(), e.end()) == e.end();
}

inline bool is_regular(const TriHypergraph& h, std::size_t d) {
  for (Side s : {Side::A, Side::B, Side::C}) {
    for (auto x : degrees(h, s)) {
      if (x != d) return false;
    }
  }
  return true;
}

class MatchingFamily {
 public:
  MatchingFamily() = default;

  MatchingFamily(BipartiteGraph host, std::vector<GraphMatching> members)
      : host_(std::move(host)), members_(std::move(members)) {
    for (std::size_t i = 0; i < members_.size(); ++i) {
      auto& m = members_[i];
      std::sort(m.begin(), m.end());
      for (const auto& e : m) {
        if (!host_.contains(e)) {
          throw std::invalid_argument("member " + std::to_string(i) + " uses an edge not in the host");
        }
      }
      if (!is_matching(m)) {
        throw std::invalid_argument("member " + std::to_string(i) + " is not a matching");
      }
    }
  }

  const BipartiteGraph& host() const noexcept { return host_; }
  const std::vector<GraphMatching>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }

  bool operator==(const MatchingFamily&) const = default;

 private:
  BipartiteGraph host_;
  std::vector<GraphMatching> members_;
};

// n x n grid of symbols in [0, n). Rows and columns are not required to be
// Latin; those are predicates.
class LatinSquare {
 public:
  LatinSquare() = default;

  LatinSquare(std::size_t order, std::vector<Vertex> cells) : n_(order), cells_(std::move(cells)) {
    if (cells_.size() != n_ * n_) throw std::invalid_argument("square needs n*n cells");
    for (auto s : cells_) {
      if (s >= n_) throw std::out_of_range("symbol " + std::to_string(s) + " outside [0, n)");
    }
  }

  std::size_t order() const noexcept { return n_; }
  Vertex at(std::size_t row, std::size_t col) const { return cells_[row * n_ + col]; }
  const std::vector<Vertex>& cells() const noexcept { return cells_; }

  bool is_row_latin() const {
    for (std::size_t r = 0; r < n_; ++r) {
      std::vector<bool> seen(n_, false);
      for (std::size_t c = 0; c < n_; ++c) {
        if (seen[at(r, c)]) return false;
        seen[at(r, c)] = true;
      }
    }
    return true;
  }

  bool is_column_latin() const {
    for (std::size_t c = 0; c < n_; ++c) {
      std::vector<bool> seen(n_, false);
      for (std::size_t r = 0; r < n_; ++r) {
        if (seen[at(r, c)]) return false;
        seen[at(r, c)] = true;
      }
    }
    return true;
  }

  bool is_latin() const { return is_row_latin() && is_column_latin(); }

  bool operator==(const LatinSquare&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Vertex> cells_;
};

// The cell set {(i, sigma(i))}.
class Diagonal {
 public:
  Diagonal() = default;

  explicit Diagonal(std::vector<Vertex> columns) : sigma_(std::move(columns)) {
    std::vector<bool> seen(sigma_.size(), false);
    for (auto c : sigma_) {
      if (c >= sigma_.size() || seen[c]) throw std::invalid_argument("diagonal is not a permutation");
      seen[c] = true;
    }
  }

  std::size_t size() const noexcept { return sigma_.size(); }
  Vertex column(std::size_t row) const { return sigma_[row]; }
  const std::vector<Vertex>& columns() const noexcept { return sigma_; }

  // Largest number of times one symbol occurs on the diagonal.
  std::size_t max_symbol_multiplicity(const LatinSquare& sq) const {
    std::vector<std::size_t> count(sq.order(), 0);
    std::size_t worst = 0;
    for (std::size_t r = 0; r < sigma_.size(); ++r) worst = std::max(worst, ++count[sq.at(r, sigma_[r])]);
    return worst;
  }

  bool operator==(const Diagonal&) const = default;

 private:
  std::vector<Vertex> sigma_;
};

// Sides (A, B, C) = (symbols, columns, rows).
inline TriHypergraph latin_to_hypergraph(const LatinSquare& sq) {
  const auto n = sq.order();
  std::vector<Triple> edges;
  edges.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      edges.push_back({sq.at(r, c), static_cast<Vertex>(c), static_cast<Vertex>(r)});
    }
  }
  return TriHypergraph({n, n, n}, std::move(edges));
}

// Sides (A, B, C) = (host U, host W, members); edge (u, w, i) per (u, w) in F_i.
inline TriHypergraph family_to_hypergraph(const MatchingFamily& f) {
  std::vector<Triple> edges;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (const auto& e : f.members()[i]) edges.push_back({e.u, e.w, static_cast<Vertex>(i)});
  }
  return TriHypergraph({f.host().left_size(), f.host().right_size(), f.size()}, std::move(edges));
}

// Inverse of family_to_hypergraph: the C-fibers projected onto (A, B).
inline std::vector<GraphMatching> side_c_fibers(const TriHypergraph& h) {
  std::vector<GraphMatching> out(h.side_size(Side::C));
  for (const auto& t : h.edges()) out[t.c].push_back({t.a, t.b});
  for (auto& m : out) std::sort(m.begin(), m.end());
  return out;
}

}  // namespace rainbow
