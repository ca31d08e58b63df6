#pragma once

// Exact search for maximum matchings in 3-partite hypergraphs, rainbow
// matchings of matching families, bounded-multiplicity diagonals of
// squares, and partial independent transversals. Every solver counts search
// nodes against a budget; exhausting the budget is reported as its own
// status and never as infeasibility.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "core.hpp"
#include "graph.hpp"

namespace rainbow {

struct SearchLimits {
  std::uint64_t node_budget = 10'000'000;
};

enum class SearchStatus { complete, budget_exceeded };

template <class Witness>
struct SolveResult {
  SearchStatus status = SearchStatus::complete;
  // Exact optimum when complete and no target was hit; the target itself when
  // it was reached; the best value found when the budget ran out.
  std::size_t optimum = 0;
  bool feasible = false;  // target reached
  Witness witness{};
  std::uint64_t nodes = 0;

  bool complete() const noexcept { return status == SearchStatus::complete; }
};

constexpr std::size_t no_target = std::numeric_limits<std::size_t>::max();

namespace detail {

class HyperMatchingSearch {
 public:
  HyperMatchingSearch(const TriHypergraph& h, std::size_t target, SearchLimits limits)
      : target_(target), limits_(limits) {
    edges_ = h.edges();
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    offset_ = {0, h.sides()[0], h.sides()[0] + h.sides()[1]};
    vertex_count_ = h.sides()[0] + h.sides()[1] + h.sides()[2];
    degree_.assign(vertex_count_, 0);
  }

  SolveResult<HyperMatching> run() {
    std::vector<std::uint32_t> live(edges_.size());
    std::iota(live.begin(), live.end(), 0U);
    if (target_ == 0) done_ = true;
    if (!done_) search(live);
    SolveResult<HyperMatching> r;
    r.status = exceeded_ ? SearchStatus::budget_exceeded : SearchStatus::complete;
    r.optimum = best_.size();
    r.feasible = best_.size() >= target_;
    for (auto i : best_) r.witness.push_back(edges_[i]);
    std::sort(r.witness.begin(), r.witness.end());
    r.nodes = nodes_;
    return r;
  }

 private:
  std::size_t gid(const Triple& t, std::size_t s) const { return offset_[s] + t[s]; }

  bool touches(const Triple& t, std::size_t v) const {
    return gid(t, 0) == v || gid(t, 1) == v || gid(t, 2) == v;
  }

  static bool disjoint(const Triple& x, const Triple& y) { return x.a != y.a && x.b != y.b && x.c != y.c; }

  void search(const std::vector<std::uint32_t>& live) {
    if (done_ || exceeded_) return;
    if (++nodes_ > limits_.node_budget) {
      exceeded_ = true;
      return;
    }
    if (current_.size() > best_.size()) {
      best_ = current_;
      if (best_.size() >= target_) {
        done_ = true;
        return;
      }
    }
    if (live.empty()) return;

    // Upper bound: uncovered vertices that still carry a live edge, on the
    // scarcest side.
    std::array<std::size_t, 3> alive{0, 0, 0};
    for (auto i : live) {
      for (std::size_t s = 0; s < 3; ++s) {
        if (degree_[gid(edges_[i], s)]++ == 0) ++alive[s];
      }
    }
    std::size_t pick = vertex_count_;
    std::size_t pick_degree = std::numeric_limits<std::size_t>::max();
    for (auto i : live) {
      for (std::size_t s = 0; s < 3; ++s) {
        const auto v = gid(edges_[i], s);
        if (degree_[v] < pick_degree || (degree_[v] == pick_degree && v < pick)) {
          pick = v;
          pick_degree = degree_[v];
        }
      }
    }
    for (auto i : live) {
      for (std::size_t s = 0; s < 3; ++s) degree_[gid(edges_[i], s)] = 0;
    }
    const auto bound = current_.size() + std::min({alive[0], alive[1], alive[2], live.size()});
    if (bound <= best_.size()) return;

    std::vector<std::uint32_t> next;
    next.reserve(live.size());
    for (auto i : live) {
      if (!touches(edges_[i], pick)) continue;
      next.clear();
      for (auto j : live) {
        if (disjoint(edges_[i], edges_[j])) next.push_back(j);
      }
      current_.push_back(i);
      search(next);
      current_.pop_back();
      if (done_ || exceeded_) return;
    }
    // Leave `pick` uncovered.
    next.clear();
    for (auto j : live) {
      if (!touches(edges_[j], pick)) next.push_back(j);
    }
    search(next);
  }

  std::vector<Triple> edges_;
  std::array<std::size_t, 3> offset_{};
  std::size_t vertex_count_ = 0;
  std::vector<std::size_t> degree_;
  std::size_t target_;
  SearchLimits limits_;
  std::vector<std::uint32_t> current_, best_;
  std::uint64_t nodes_ = 0;
  bool done_ = false;
  bool exceeded_ = false;
};

}  // namespace detail

// nu(H) with a maximum matching as witness. With a finite target the search
// stops as soon as a matching of that size is found.
inline SolveResult<HyperMatching> max_matching_size(const TriHypergraph& h, SearchLimits limits = {},
                                                    std::size_t target = no_target) {
  return detail::HyperMatchingSearch(h, target, limits).run();
}

// Member index for every chosen edge; pairwise disjoint, distinct members.
struct RainbowPick {
  std::size_t member = 0;
  Edge edge;
  auto operator<=>(const RainbowPick&) const = default;
};
using RainbowMatching = std::vector<RainbowPick>;

namespace detail {

// Walks members in order, choosing an edge from each or skipping it. Shares
// nothing with the hypergraph search on purpose: the two are compared.
class RainbowSearch {
 public:
  RainbowSearch(const MatchingFamily& f, std::size_t target, SearchLimits limits)
      : family_(f), target_(target), limits_(limits),
        used_u_(f.host().left_size(), false), used_w_(f.host().right_size(), false) {}

  SolveResult<RainbowMatching> run() {
    if (target_ == 0) {
      done_ = true;
    } else {
      search(0, f_free_u(), f_free_w());
    }
    SolveResult<RainbowMatching> r;
    r.status = exceeded_ ? SearchStatus::budget_exceeded : SearchStatus::complete;
    r.optimum = best_.size();
    r.feasible = best_.size() >= target_;
    r.witness = best_;
    r.nodes = nodes_;
    return r;
  }

 private:
  std::size_t f_free_u() const { return used_u_.size(); }
  std::size_t f_free_w() const { return used_w_.size(); }

  void search(std::size_t i, std::size_t free_u, std::size_t free_w) {
    if (done_ || exceeded_) return;
    if (++nodes_ > limits_.node_budget) {
      exceeded_ = true;
      return;
    }
    if (current_.size() > best_.size()) {
      best_ = current_;
      if (best_.size() >= target_) {
        done_ = true;
        return;
      }
    }
    const auto m = family_.size();
    if (i == m) return;
    const auto bound = current_.size() + std::min({m - i, free_u, free_w});
    if (bound <= best_.size()) return;

    for (const auto& e : family_.members()[i]) {
      if (used_u_[e.u] || used_w_[e.w]) continue;
      used_u_[e.u] = used_w_[e.w] = true;
      current_.push_back({i, e});
      search(i + 1, free_u - 1, free_w - 1);
      current_.pop_back();
      used_u_[e.u] = used_w_[e.w] = false;
      if (done_ || exceeded_) return;
    }
    search(i + 1, free_u, free_w);
  }

  const MatchingFamily& family_;
  std::size_t target_;
  SearchLimits limits_;
  std::vector<bool> used_u_, used_w_;
  RainbowMatching current_, best_;
  std::uint64_t nodes_ = 0;
  bool done_ = false;
  bool exceeded_ = false;
};

}  // namespace detail

// Largest rainbow matching, or one of size `target` if it exists.
inline SolveResult<RainbowMatching> find_rainbow_matching(const MatchingFamily& f, std::size_t target = no_target,
                                                          SearchLimits limits = {}) {
  if (target != no_target && target > f.size()) {
    throw std::invalid_argument("rainbow target exceeds the number of members");
  }
  return detail::RainbowSearch(f, target, limits).run();
}

inline bool is_rainbow_matching(const MatchingFamily& f, const RainbowMatching& r) {
  std::vector<std::size_t> members;
  GraphMatching edges;
  for (const auto& p : r) {
    if (p.member >= f.size()) return false;
    const auto& m = f.members()[p.member];
    if (!std::binary_search(m.begin(), m.end(), p.edge)) return false;
    members.push_back(p.member);
    edges.push_back(p.edge);
  }
  std::sort(members.begin(), members.end());
  return std::adjacent_find(members.begin(), members.end()) == members.end() && is_matching(edges);
}

// A diagonal on which every symbol occurs at most `bound` times. Rows are
// filled top to bottom, columns tried in increasing order.
inline SolveResult<Diagonal> find_bounded_diagonal(const LatinSquare& sq, std::size_t bound, SearchLimits limits = {}) {
  if (bound == 0) throw std::invalid_argument("diagonal bound must be at least 1");
  const auto n = sq.order();
  std::vector<Vertex> sigma(n);
  std::vector<bool> used(n, false);
  std::vector<std::size_t> count(n, 0);
  SolveResult<Diagonal> r;
  bool found = false, exceeded = false;

  auto search = [&](auto&& self, std::size_t row) -> void {
    if (found || exceeded) return;
    if (++r.nodes > limits.node_budget) {
      exceeded = true;
      return;
    }
    if (row == n) {
      found = true;
      return;
    }
    for (Vertex c = 0; c < n; ++c) {
      const auto s = sq.at(row, c);
      if (used[c] || count[s] >= bound) continue;
      used[c] = true;
      ++count[s];
      sigma[row] = c;
      self(self, row + 1);
      if (found || exceeded) return;
      used[c] = false;
      --count[s];
    }
  };
  search(search, 0);

  r.status = exceeded ? SearchStatus::budget_exceeded : SearchStatus::complete;
  r.feasible = found;
  r.optimum = found ? n : 0;
  if (found) r.witness = Diagonal(sigma);
  return r;
}

// Independent set meeting as many parts as possible; stops once it meets
// m - deficiency parts.
inline SolveResult<std::vector<Vertex>> find_independent_transversal(const PartitionedGraph& p, std::size_t deficiency,
                                                                     SearchLimits limits = {}) {
  const auto m = p.part_count();
  if (deficiency > m) throw std::invalid_argument("deficiency exceeds the number of parts");
  const auto target = m - deficiency;
  const auto& g = p.graph();
  std::vector<VertexMask> parts(m);
  for (std::size_t i = 0; i < m; ++i) parts[i] = p.part_mask(i);

  SolveResult<std::vector<Vertex>> r;
  VertexMask best = 0;
  std::size_t best_met = 0;
  bool done = target == 0, exceeded = false;

  auto search = [&](auto&& self, std::size_t i, VertexMask chosen, VertexMask blocked, std::size_t met) -> void {
    if (done || exceeded) return;
    if (++r.nodes > limits.node_budget) {
      exceeded = true;
      return;
    }
    // Parts already hit by the chosen set cost nothing.
    while (i < m && (parts[i] & chosen)) {
      ++i;
      ++met;
    }
    if (met > best_met) {
      best_met = met;
      best = chosen;
      if (met >= target) {
        done = true;
        return;
      }
    }
    if (i == m || met + (m - i) <= best_met) return;
    for_each_bit(parts[i] & ~blocked, [&](Vertex v) {
      if (done || exceeded) return;
      self(self, i + 1, chosen | bit(v), blocked | bit(v) | g.neighbors(v), met + 1);
    });
    self(self, i + 1, chosen, blocked, met);
  };
  if (!done) search(search, 0, 0, 0, 0);

  r.status = exceeded ? SearchStatus::budget_exceeded : SearchStatus::complete;
  r.optimum = best_met;
  r.feasible = best_met >= target;
  for_each_bit(best, [&](Vertex v) { r.witness.push_back(v); });
  return r;
}

// Number of parts an independent set meets; the witness validator.
inline std::size_t parts_met(const PartitionedGraph& p, VertexMask s) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.part_count(); ++i) k += (p.part_mask(i) & s) != 0;
  return k;
}

inline VertexMask to_mask(const std::vector<Vertex>& vs) {
  VertexMask m = 0;
  for (auto v : vs) m |= bit(v);
  return m;
}

// nu(H) through the transversal view; an independent route for checks.
inline SolveResult<HyperMatching> max_matching_via_transversal(const TriHypergraph& h, SearchLimits limits = {},
                                                               std::size_t target = no_target) {
  auto e = h.edges();
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  const auto view = transversal_view(h, Side::B);
  const auto m = view.part_count();
  const std::size_t deficiency = target == no_target || target > m ? 0 : m - target;
  auto t = find_independent_transversal(view, deficiency, limits);
  SolveResult<HyperMatching> r;
  r.status = t.status;
  r.nodes = t.nodes;
  r.optimum = t.optimum;
  r.feasible = target == no_target ? false : t.optimum >= target;
  std::vector<bool> part_taken(m, false);
  for (auto v : t.witness) {
    const auto& edge = e[v];
    if (!part_taken[edge.b]) {
      part_taken[edge.b] = true;
      r.witness.push_back(edge);
    }
  }
  return r;
}

}  // namespace rainbow
