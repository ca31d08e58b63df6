#pragma once

// Brute-force reference implementations for tests. They share no code with
// the library beyond the plain data types and are only meant for tiny inputs.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "rainbow/core.hpp"
#include "rainbow/graph.hpp"

namespace oracle {

using rainbow::Edge;
using rainbow::Graph;
using rainbow::LatinSquare;
using rainbow::MatchingFamily;
using rainbow::PartitionedGraph;
using rainbow::TriHypergraph;
using rainbow::Triple;

// Largest pairwise-disjoint subset of the edge list, by trying every subset.
inline std::size_t nu(const TriHypergraph& h) {
  const auto& e = h.edges();
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << e.size()); ++s) {
    std::set<std::uint32_t> a, b, c;
    bool ok = true;
    std::size_t size = 0;
    for (std::size_t i = 0; i < e.size() && ok; ++i) {
      if (!((s >> i) & 1U)) continue;
      ok = a.insert(e[i].a).second && b.insert(e[i].b).second && c.insert(e[i].c).second;
      ++size;
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

// Largest rainbow matching by trying every choice function (an edge or
// nothing from each member).
inline std::size_t rainbow(const MatchingFamily& f) {
  const auto& m = f.members();
  std::vector<std::size_t> pick(m.size(), 0);  // 0 = skip, k = edge k-1
  std::size_t best = 0;
  for (;;) {
    std::set<std::uint32_t> us, ws;
    bool ok = true;
    std::size_t size = 0;
    for (std::size_t i = 0; i < m.size() && ok; ++i) {
      if (pick[i] == 0) continue;
      const auto& e = m[i][pick[i] - 1];
      ok = us.insert(e.u).second && ws.insert(e.w).second;
      ++size;
    }
    if (ok) best = std::max(best, size);
    std::size_t i = 0;
    while (i < m.size() && ++pick[i] > m[i].size()) pick[i++] = 0;
    if (i == m.size()) return best;
  }
}

// Smallest achievable maximum symbol multiplicity over all n! diagonals.
inline std::size_t best_diagonal_multiplicity(const LatinSquare& sq) {
  const auto n = sq.order();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t best = n;
  do {
    std::map<std::uint32_t, std::size_t> count;
    std::size_t worst = 0;
    for (std::size_t r = 0; r < n; ++r) worst = std::max(worst, ++count[sq.at(r, perm[r])]);
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return n == 0 ? 0 : best;
}

// Graph as a vertex set plus an edge set of ordered pairs (u < v).
struct SmallGraph {
  std::set<int> vertices;
  std::set<std::pair<int, int>> edges;
};

inline SmallGraph small_graph(const Graph& g) {
  SmallGraph s;
  for (std::size_t v = 0; v < g.size(); ++v) s.vertices.insert(static_cast<int>(v));
  for (auto [u, v] : g.edges()) s.edges.insert({static_cast<int>(u), static_cast<int>(v)});
  return s;
}

inline constexpr int infinite = 1 << 20;

// Game value straight from the definition, with no memo and no pruning.
inline int psi(const SmallGraph& g) {
  if (g.vertices.empty()) return 0;
  for (int v : g.vertices) {
    bool touched = false;
    for (auto [a, b] : g.edges) touched = touched || a == v || b == v;
    if (!touched) return infinite;
  }
  int best = 0;
  for (const auto& e : g.edges) {
    SmallGraph deleted = g;
    deleted.edges.erase(e);
    std::set<int> gone{e.first, e.second};
    for (auto [a, b] : g.edges) {
      if (a == e.first || a == e.second) gone.insert(b);
      if (b == e.first || b == e.second) gone.insert(a);
    }
    SmallGraph exploded;
    for (int v : g.vertices) {
      if (!gone.count(v)) exploded.vertices.insert(v);
    }
    for (auto [a, b] : g.edges) {
      if (!gone.count(a) && !gone.count(b)) exploded.edges.insert({a, b});
    }
    const int after = psi(exploded);
    const int value = std::min(psi(deleted), after >= infinite ? infinite : after + 1);
    best = std::max(best, value);
  }
  return best;
}

inline int psi(const Graph& g) { return psi(small_graph(g)); }

// Independent sets, by subset enumeration.
inline std::vector<std::uint64_t> independent_sets(const Graph& g) {
  std::vector<std::uint64_t> out;
  const auto n = g.size();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool ok = true;
    for (auto [u, v] : g.edges()) ok = ok && !(((s >> u) & 1U) && ((s >> v) & 1U));
    if (ok) out.push_back(s);
  }
  return out;
}

// Most parts met by one independent set.
inline std::size_t transversal_optimum(const PartitionedGraph& p) {
  std::size_t best = 0;
  for (auto s : independent_sets(p.graph())) {
    std::size_t met = 0;
    for (const auto& part : p.parts()) {
      bool hit = false;
      for (auto v : part) hit = hit || ((s >> v) & 1U);
      met += hit;
    }
    best = std::max(best, met);
  }
  return best;
}

// Rank modulo a large prime by dense Gaussian elimination.
inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> m) {
  constexpr std::int64_t p = 1'000'000'007;
  auto power = [&](std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    b %= p;
    for (; e > 0; e >>= 1, b = b * b % p) {
      if (e & 1) r = r * b % p;
    }
    return r;
  };
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && ((m[pivot][c] % p) + p) % p == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    const auto inv = power(((m[rank][c] % p) + p) % p, p - 2);
    for (auto& x : m[rank]) x = ((x % p) + p) % p * inv % p;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank) continue;
      const auto f = ((m[r][c] % p) + p) % p;
      if (f == 0) continue;
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = ((m[r][k] - f * m[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// Reduced Betti numbers of I(G) from dense boundary matrices over Z/p,
// indexed from dimension -1.
inline std::vector<std::size_t> reduced_betti(const Graph& g) {
  std::map<int, std::vector<std::uint64_t>> faces;  // dimension -> faces
  for (auto s : independent_sets(g)) faces[__builtin_popcountll(s) - 1].push_back(s);
  const int top = faces.rbegin()->first;
  auto boundary_rank = [&](int j) -> std::size_t {  // rank of d_j : C_j -> C_{j-1}
    if (j < 0 || j > top) return 0;
    const auto& rows = faces[j];
    const auto& cols = faces[j - 1];
    std::map<std::uint64_t, std::size_t> col_index;
    for (std::size_t i = 0; i < cols.size(); ++i) col_index[cols[i]] = i;
    std::vector<std::vector<std::int64_t>> m(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      int sign = 1;
      for (int v = 0; v < 64; ++v) {
        if (!((rows[r] >> v) & 1U)) continue;
        m[r][col_index[rows[r] & ~(std::uint64_t{1} << v)]] = sign;
        sign = -sign;
      }
    }
    return rank_mod_p(m);
  };
  std::vector<std::size_t> b;
  for (int j = -1; j <= top; ++j) b.push_back(faces[j].size() - boundary_rank(j) - boundary_rank(j + 1));
  return b;
}

// Isomorphism classes on n vertices, by minimising the edge mask over all
// relabellings.
inline std::size_t isomorphism_classes(std::size_t n) {
  std::vector<std::pair<int, int>> slots;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::map<std::pair<int, int>, int> slot_of;
  for (std::size_t i = 0; i < slots.size(); ++i) slot_of[slots[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<bool> seen(std::size_t{1} << slots.size(), false);
  std::size_t classes = 0;
  for (std::uint64_t mask = 0; mask < seen.size(); ++mask) {
    if (seen[mask]) continue;
    ++classes;
    for (const auto& q : perms) {
      std::uint64_t image = 0;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if (!((mask >> i) & 1U)) continue;
        auto a = q[slots[i].first], b = q[slots[i].second];
        image |= std::uint64_t{1} << slot_of[{std::min(a, b), std::max(a, b)}];
      }
      seen[image] = true;
    }
  }
  return classes;
}

}  // namespace oracle
