#pragma once

// Deterministic extremal constructions and seeded random generators for
// instances that satisfy the hypotheses of the checked statements.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "core.hpp"
#include "graph.hpp"
#include "matching.hpp"
#include "rng.hpp"

namespace rainbow {

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Matching families in even cycles

// C_{2n} with U = W = {0..n-1}: even edges (i, i), odd edges (i+1 mod n, i).
inline BipartiteGraph even_cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) {
    e.push_back({i, i});
    e.push_back({static_cast<Vertex>((i + 1) % n), i});
  }
  return BipartiteGraph(n, n, std::move(e));
}

inline GraphMatching cycle_even_edges(std::size_t n) {
  GraphMatching m;
  for (Vertex i = 0; i < n; ++i) m.push_back({i, i});
  return m;
}

// Odd edges e_1..e_n in the order used by the counterexample family.
inline GraphMatching cycle_odd_edges(std::size_t n) {
  GraphMatching m;
  for (Vertex i = 0; i < n; ++i) m.push_back({static_cast<Vertex>((i + 1) % n), i});
  return m;
}

// n - 1 copies each of the even and the odd perfect matchings of C_{2n}.
inline MatchingFamily gen_drisko_extremal(std::size_t n) {
  if (n < 2) throw std::invalid_argument("drisko extremal family needs n >= 2");
  std::vector<GraphMatching> members;
  for (std::size_t i = 0; i + 1 < n; ++i) members.push_back(cycle_even_edges(n));
  for (std::size_t i = 0; i + 1 < n; ++i) members.push_back(cycle_odd_edges(n));
  return MatchingFamily(even_cycle(n), std::move(members));
}

// a_i >= min(i, n) for every (1-based) i; the accommodating threshold.
inline bool meets_accommodating_threshold(const std::vector<std::size_t>& a, std::size_t n) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < std::min(i + 1, n)) return false;
  }
  return true;
}

inline void require_size_sequence(const std::vector<std::size_t>& a, std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (a.size() != 2 * n - 1) throw std::invalid_argument("size sequence must have length 2n - 1");
  if (!std::is_sorted(a.begin(), a.end())) throw std::invalid_argument("size sequence must be ascending");
}

// For a sequence with a_k <= k - 1 at some k <= n: F_i is the first
// min(n, a_i) odd edges of C_{2n} for i <= n, and the even matching for
// i > n. No rainbow matching of size n exists. For n = 1 the only such
// sequence is (0), met by one empty matching.
inline MatchingFamily gen_accommodating_counterexample(const std::vector<std::size_t>& a, std::size_t n) {
  require_size_sequence(a, n);
  if (a.back() > n) throw std::invalid_argument("entries above n cannot be met inside C_{2n}");
  bool deficient = false;
  for (std::size_t k = 1; k <= n; ++k) deficient = deficient || a[k - 1] + 1 <= k;
  if (!deficient) throw std::invalid_argument("sequence has no a_k <= k - 1 with k <= n");
  if (n == 1) return MatchingFamily(BipartiteGraph(1, 1, {}), {GraphMatching{}});
  const auto odd = cycle_odd_edges(n);
  std::vector<GraphMatching> members;
  for (std::size_t i = 0; i < n; ++i) {
    members.emplace_back(odd.begin(), odd.begin() + static_cast<long>(std::min(n, a[i])));
  }
  for (std::size_t i = n; i < 2 * n - 1; ++i) members.push_back(cycle_even_edges(n));
  return MatchingFamily(even_cycle(n), std::move(members));
}

// 2k disjoint 3-edge paths x_j - y_j - z_j - t_j with x_j = 2j, z_j = 2j + 1
// in U and y_j = 2j, t_j = 2j + 1 in W. Middle edge e_j = (z_j, y_j), odd
// pair O_j = {(x_j, y_j), (z_j, t_j)}. F_i = {e_1..e_k} for i <= k and
// F_i = O_1 u .. u O_{i-k} u {e_j : i - k < j <= k} for i > k, so |F_i| = i
// exactly once i > k. The largest rainbow matching has floor(3k/2) edges.
inline MatchingFamily gen_p3_family(std::size_t k) {
  if (k < 1) throw std::invalid_argument("P3 family needs k >= 1");
  const auto paths = 2 * k;
  auto middle = [](std::size_t j) { return Edge{static_cast<Vertex>(2 * j + 1), static_cast<Vertex>(2 * j)}; };
  auto odd_a = [](std::size_t j) { return Edge{static_cast<Vertex>(2 * j), static_cast<Vertex>(2 * j)}; };
  auto odd_b = [](std::size_t j) { return Edge{static_cast<Vertex>(2 * j + 1), static_cast<Vertex>(2 * j + 1)}; };
  std::vector<Edge> host;
  for (std::size_t j = 0; j < paths; ++j) {
    host.push_back(odd_a(j));
    host.push_back(middle(j));
    host.push_back(odd_b(j));
  }
  std::vector<GraphMatching> members;
  for (std::size_t i = 1; i <= 2 * k; ++i) {
    GraphMatching f;
    const std::size_t opened = i > k ? i - k : 0;  // paths whose odd pair is used
    for (std::size_t j = 0; j < opened; ++j) {
      f.push_back(odd_a(j));
      f.push_back(odd_b(j));
    }
    for (std::size_t j = opened; j < k; ++j) f.push_back(middle(j));
    members.push_back(std::move(f));
  }
  return MatchingFamily(BipartiteGraph(2 * paths, 2 * paths, std::move(host)), std::move(members));
}

// ---------------------------------------------------------------------------
// Degree-constrained 3-partite hypergraphs

// Visits every subset of `candidates` (taken without repetition, in
// candidate order) with vertex degrees exactly `target`. The visitor returns
// false to stop. Returns false when the node budget ran out.
template <class Visit>
bool for_each_degree_constrained(std::array<std::size_t, 3> sides, std::vector<Triple> candidates,
                                 const std::array<std::vector<std::size_t>, 3>& target, Visit&& visit,
                                 SearchLimits limits = {}) {
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::array<std::vector<std::size_t>, 3> need = target, avail;
  for (std::size_t s = 0; s < 3; ++s) {
    if (need[s].size() != sides[s]) throw std::invalid_argument("degree target size mismatch");
    avail[s].assign(sides[s], 0);
  }
  for (const auto& t : candidates) {
    for (std::size_t s = 0; s < 3; ++s) ++avail[s][t[s]];
  }
  for (std::size_t s = 0; s < 3; ++s) {
    for (std::size_t v = 0; v < sides[s]; ++v) {
      if (avail[s][v] < need[s][v]) return true;  // no completion at all
    }
  }
  std::size_t outstanding = 0;
  for (const auto& n : need[0]) outstanding += n;

  std::vector<Triple> chosen;
  std::uint64_t nodes = 0;
  bool stop = false, exceeded = false;

  auto search = [&](auto&& self, std::size_t i) -> void {
    if (stop || exceeded) return;
    if (++nodes > limits.node_budget) {
      exceeded = true;
      return;
    }
    if (outstanding == 0) {
      stop = !visit(static_cast<const std::vector<Triple>&>(chosen));
      return;
    }
    if (i == candidates.size()) return;
    const auto& t = candidates[i];
    for (std::size_t s = 0; s < 3; ++s) --avail[s][t[s]];
    if (need[0][t.a] > 0 && need[1][t.b] > 0 && need[2][t.c] > 0) {
      for (std::size_t s = 0; s < 3; ++s) --need[s][t[s]];
      --outstanding;
      chosen.push_back(t);
      self(self, i + 1);
      chosen.pop_back();
      ++outstanding;
      for (std::size_t s = 0; s < 3; ++s) ++need[s][t[s]];
    }
    bool can_skip = true;
    for (std::size_t s = 0; s < 3; ++s) can_skip = can_skip && avail[s][t[s]] >= need[s][t[s]];
    if (can_skip) self(self, i + 1);
    for (std::size_t s = 0; s < 3; ++s) ++avail[s][t[s]];
  };
  search(search, 0);
  return !exceeded;
}

inline std::vector<Triple> all_triples(std::array<std::size_t, 3> sides) {
  std::vector<Triple> out;
  for (Vertex a = 0; a < sides[0]; ++a)
    for (Vertex b = 0; b < sides[1]; ++b)
      for (Vertex c = 0; c < sides[2]; ++c) out.push_back({a, b, c});
  return out;
}

// Every simple d-regular 3-partite hypergraph with sides of size n, in
// lexicographic order of edge sets.
template <class Visit>
bool for_each_simple_regular(std::size_t n, std::size_t d, Visit&& visit, SearchLimits limits = {}) {
  const std::array<std::size_t, 3> sides{n, n, n};
  const std::array<std::vector<std::size_t>, 3> target{std::vector<std::size_t>(n, d), std::vector<std::size_t>(n, d),
                                                       std::vector<std::size_t>(n, d)};
  return for_each_degree_constrained(
      sides, all_triples(sides), target,
      [&](const std::vector<Triple>& e) { return visit(TriHypergraph(sides, e)); }, limits);
}

// Vertex 0 of each side is a, b, c. The three stars
// {(a,b,x)}, {(a,y,c)}, {(z,b,c)} give a, b, c degree 2n - 2; the rest is
// completed to (2n - 2)-regularity with simple edges avoiding a, b, c.
inline TriHypergraph gen_fracd_sharp(std::size_t n, SearchLimits limits = {}) {
  if (n < 2) throw std::invalid_argument("sharpness construction needs n >= 2");
  std::vector<Triple> stars;
  for (Vertex x = 1; x < n; ++x) stars.push_back({0, 0, x});
  for (Vertex y = 1; y < n; ++y) stars.push_back({0, y, 0});
  for (Vertex z = 1; z < n; ++z) stars.push_back({z, 0, 0});
  const std::array<std::size_t, 3> sides{n, n, n};
  std::array<std::vector<std::size_t>, 3> target;
  for (auto& t : target) {
    t.assign(n, 2 * n - 3);
    t[0] = 0;
  }
  std::vector<Triple> residual;
  for (const auto& t : all_triples(sides)) {
    if (t.a != 0 && t.b != 0 && t.c != 0) residual.push_back(t);
  }
  std::vector<Triple> completion;
  bool found = false;
  const bool finished = for_each_degree_constrained(
      sides, residual, target,
      [&](const std::vector<Triple>& e) {
        completion = e;
        found = true;
        return false;
      },
      limits);
  if (!found) {
    throw ConstructionError(finished ? "no (2n-2)-regular completion exists for n = " + std::to_string(n)
                                     : "completion search exhausted its budget for n = " + std::to_string(n));
  }
  stars.insert(stars.end(), completion.begin(), completion.end());
  std::sort(stars.begin(), stars.end());
  return TriHypergraph(sides, std::move(stars));
}

// A' = A u A^dagger with a^dagger = a + |A|; every edge gets a dagger copy.
inline TriHypergraph double_side_a(const TriHypergraph& h) {
  const auto na = h.side_size(Side::A);
  auto e = h.edges();
  for (const auto& t : h.edges()) e.push_back({static_cast<Vertex>(t.a + na), t.b, t.c});
  return TriHypergraph({2 * na, h.side_size(Side::B), h.side_size(Side::C)}, std::move(e));
}

// ---------------------------------------------------------------------------
// Latin and row-Latin squares

inline LatinSquare cyclic_latin(std::size_t n) {
  std::vector<Vertex> cells(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cells[i * n + j] = static_cast<Vertex>((i + j) % n);
  return LatinSquare(n, std::move(cells));
}

// All Latin squares of order n, lexicographic in row-major cell order.
// Returns false if the visitor stopped early.
template <class Visit>
bool for_each_latin_square(std::size_t n, Visit&& visit) {
  if (n > 5) throw std::invalid_argument("exhaustive Latin squares are capped at order 5");
  std::vector<Vertex> cells(n * n, 0);
  std::vector<std::vector<bool>> in_row(n, std::vector<bool>(n, false)), in_col = in_row;
  bool stop = false;
  auto fill = [&](auto&& self, std::size_t k) -> void {
    if (stop) return;
    if (k == n * n) {
      stop = !visit(LatinSquare(n, cells));
      return;
    }
    const auto r = k / n, c = k % n;
    for (Vertex s = 0; s < n && !stop; ++s) {
      if (in_row[r][s] || in_col[c][s]) continue;
      in_row[r][s] = in_col[c][s] = true;
      cells[k] = s;
      self(self, k + 1);
      in_row[r][s] = in_col[c][s] = false;
    }
  };
  fill(fill, 0);
  return !stop;
}

// Seeded backtracking with shuffled symbol order per cell; restarts when a
// branch stalls. Not a uniform sampler.
inline LatinSquare random_latin(std::size_t n, Rng& rng) {
  if (n == 0) return LatinSquare(0, {});
  for (;;) {
    std::vector<Vertex> cells(n * n, 0);
    std::vector<std::vector<bool>> in_row(n, std::vector<bool>(n, false)), in_col = in_row;
    std::uint64_t nodes = 0;
    const std::uint64_t budget = 20000 * n * n;
    bool done = false;
    auto fill = [&](auto&& self, std::size_t k) -> void {
      if (done || nodes++ > budget) return;
      if (k == n * n) {
        done = true;
        return;
      }
      const auto r = k / n, c = k % n;
      std::vector<Vertex> order(n);
      std::iota(order.begin(), order.end(), Vertex{0});
      rng.shuffle(order);
      for (auto s : order) {
        if (in_row[r][s] || in_col[c][s]) continue;
        in_row[r][s] = in_col[c][s] = true;
        cells[k] = s;
        self(self, k + 1);
        if (done) return;
        in_row[r][s] = in_col[c][s] = false;
      }
    };
    fill(fill, 0);
    if (done) return LatinSquare(n, std::move(cells));
  }
}

// Row-Latin squares of order n with row 0 fixed to the identity, each
// remaining row a permutation; lexicographic. (n!)^(n-1) squares.
template <class Visit>
bool for_each_row_latin_normalized(std::size_t n, Visit&& visit) {
  if (n > 4) throw std::invalid_argument("exhaustive row-Latin squares are capped at order 4");
  if (n == 0) return visit(LatinSquare(0, {}));
  std::vector<Vertex> identity(n);
  std::iota(identity.begin(), identity.end(), Vertex{0});
  std::vector<std::vector<Vertex>> rows(n, identity);
  for (;;) {
    std::vector<Vertex> cells;
    for (const auto& r : rows) cells.insert(cells.end(), r.begin(), r.end());
    if (!visit(LatinSquare(n, std::move(cells)))) return false;
    std::size_t r = n;
    while (r > 1) {
      --r;
      if (std::next_permutation(rows[r].begin(), rows[r].end())) break;  // resets to identity on wrap
      if (r == 1) return true;
    }
    if (n == 1) return true;
  }
}

inline LatinSquare random_row_latin(std::size_t n, Rng& rng) {
  std::vector<Vertex> cells;
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<Vertex> row(n);
    std::iota(row.begin(), row.end(), Vertex{0});
    rng.shuffle(row);
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return LatinSquare(n, std::move(cells));
}

// ---------------------------------------------------------------------------
// Random hypergraphs

// |A| = 2n - 1, |B| = |C| = n; each a picks one b per c, then overfull (b, c)
// pairs are repaired so no pair lies in more than two edges.
inline TriHypergraph gen_theorem19_instance(std::size_t n, Rng& rng) {
  if (n < 2) throw std::invalid_argument("doubled instances need n >= 2");
  const auto na = 2 * n - 1;
  std::vector<Triple> edges;
  for (Vertex c = 0; c < n; ++c) {
    std::vector<Vertex> choice(na);
    std::vector<std::size_t> load(n, 0);
    for (auto& b : choice) {
      b = static_cast<Vertex>(rng.below(n));
      ++load[b];
    }
    for (std::size_t a = 0; a < na; ++a) {
      if (load[choice[a]] <= 2) continue;
      std::vector<Vertex> open;
      for (Vertex b = 0; b < n; ++b) {
        if (load[b] < 2) open.push_back(b);
      }
      const auto to = open[rng.below(open.size())];  // 2n slots for 2n - 1 vertices
      --load[choice[a]];
      ++load[to];
      choice[a] = to;
    }
    for (Vertex a = 0; a < na; ++a) edges.push_back({a, choice[a], c});
  }
  std::sort(edges.begin(), edges.end());
  return TriHypergraph({na, n, n}, std::move(edges));
}

// Fills each of the |A| vertices with `a_degree` edges; B- and C-coordinates
// are drawn from stub lists in which each vertex appears at most `cap`
// times. With `simple`, repeated triples are repaired by coordinate swaps
// (which keep every degree). Throws if the stub lists are too short.
inline TriHypergraph random_capped_hypergraph(std::array<std::size_t, 3> sides, std::size_t a_degree, std::size_t cap,
                                              bool simple, Rng& rng) {
  const auto slots = sides[0] * a_degree;
  auto stubs = [&](std::size_t side) {
    std::vector<Vertex> s;
    for (std::size_t r = 0; r < cap; ++r)
      for (Vertex v = 0; v < sides[side]; ++v) s.push_back(v);
    if (s.size() < slots) throw std::invalid_argument("degree cap too small for the requested A-degree");
    rng.shuffle(s);
    s.resize(slots);
    return s;
  };
  for (int attempt = 0; attempt < 200; ++attempt) {
    auto bs = stubs(1), cs = stubs(2);
    std::vector<Triple> e(slots);
    for (std::size_t i = 0; i < slots; ++i) e[i] = {static_cast<Vertex>(i / a_degree), bs[i], cs[i]};
    if (!simple) return TriHypergraph(sides, std::move(e));
    bool clean = false;
    for (int pass = 0; pass < 2000 && !clean; ++pass) {
      std::map<Triple, std::size_t> seen;
      clean = true;
      for (std::size_t i = 0; i < slots; ++i) {
        if (seen.emplace(e[i], i).second) continue;
        clean = false;
        const auto j = rng.below(slots);
        if (rng.coin()) {
          std::swap(e[i].b, e[j].b);
        } else {
          std::swap(e[i].c, e[j].c);
        }
        break;
      }
    }
    if (clean) {
      std::sort(e.begin(), e.end());
      return TriHypergraph(sides, std::move(e));
    }
  }
  throw ConstructionError("could not repair a simple hypergraph with the requested degrees");
}

// Simple d-regular hypergraph with sides of size n (configuration model and
// swap repair). Needs d <= n^2.
inline TriHypergraph random_simple_regular(std::size_t n, std::size_t d, Rng& rng) {
  if (d > n * n) throw std::invalid_argument("a simple d-regular hypergraph needs d <= n^2");
  return random_capped_hypergraph({n, n, n}, d, d, true, rng);
}

// n-regular, sides of size n, (A, B) simple: every (symbol, column) pair
// occurs once and gets a row; each row is used n times.
inline TriHypergraph random_stein_instance(std::size_t n, Rng& rng) {
  std::vector<Vertex> rows;
  for (Vertex c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) rows.push_back(c);
  rng.shuffle(rows);
  std::vector<Triple> e;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b) e.push_back({a, b, rows[a * n + b]});
  return TriHypergraph({n, n, n}, std::move(e));
}

// ---------------------------------------------------------------------------
// Random graphs and families

// A random matching of `size` edges between sides of the given sizes.
inline GraphMatching random_matching(std::size_t left, std::size_t right, std::size_t size, Rng& rng) {
  if (size > std::min(left, right)) throw std::invalid_argument("matching larger than a side");
  auto us = rng.permutation(left), ws = rng.permutation(right);
  GraphMatching m;
  for (std::size_t i = 0; i < size; ++i) m.push_back({static_cast<Vertex>(us[i]), static_cast<Vertex>(ws[i])});
  std::sort(m.begin(), m.end());
  return m;
}

// Family with member i of size sizes[i]; the host is the union of members.
inline MatchingFamily random_family(std::size_t left, std::size_t right, const std::vector<std::size_t>& sizes,
                                    Rng& rng) {
  std::vector<GraphMatching> members;
  std::set<Edge> host;
  for (auto s : sizes) {
    members.push_back(random_matching(left, right, s, rng));
    host.insert(members.back().begin(), members.back().end());
  }
  return MatchingFamily(BipartiteGraph(left, right, {host.begin(), host.end()}), std::move(members));
}

inline Graph random_graph(std::size_t n, std::uint64_t edge_num, std::uint64_t edge_den, Rng& rng) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.coin(edge_num, edge_den)) g.add_edge(u, v);
  return g;
}

// Largest l such that some 2l - 1 vertices of U have degrees dominating
// min(i, l); 0 when even l = 1 fails.
inline std::size_t degree_condition_level(const BipartiteGraph& g) {
  std::vector<std::size_t> d;
  for (Vertex u = 0; u < g.left_size(); ++u) d.push_back(g.left_degree(u));
  std::sort(d.rbegin(), d.rend());
  std::size_t best = 0;
  for (std::size_t l = 1; 2 * l - 1 <= d.size(); ++l) {
    // The 2l - 1 largest degrees, in ascending order, must dominate min(i, l).
    bool ok = true;
    for (std::size_t i = 1; i <= 2 * l - 1; ++i) ok = ok && d[2 * l - 1 - i] >= std::min(i, l);
    if (ok) best = l;
  }
  return best;
}

// Bipartite graph with 2l - 1 (shuffled) U-vertices of degree at least
// min(i, l), at most `max_edges` edges, plus occasional extra U-vertices.
inline BipartiteGraph random_degree_condition_graph(std::size_t level, std::size_t max_edges, Rng& rng) {
  const auto core = 2 * level - 1;
  std::vector<std::size_t> need(core);
  std::size_t total = 0;
  for (std::size_t i = 1; i <= core; ++i) total += need[i - 1] = std::min(i, level);
  if (total > max_edges) throw std::invalid_argument("edge cap below the minimal degree profile");
  const std::size_t right = rng.between(level, level + 3);
  std::size_t spare = max_edges - total;
  std::vector<std::size_t> deg = need;
  for (auto& d : deg) {
    const auto extra = std::min<std::size_t>(spare, rng.below(3));
    const auto grown = std::min(right, d + extra);
    spare -= grown - d;
    d = grown;
  }
  const std::size_t extra_u = spare > 0 ? rng.below(3) : 0;
  for (std::size_t i = 0; i < extra_u && spare > 0; ++i) {
    const auto d = std::min<std::size_t>({spare, right, 1 + rng.below(2)});
    deg.push_back(d);
    spare -= d;
  }
  const auto relabel = rng.permutation(deg.size());
  std::vector<Edge> e;
  for (std::size_t i = 0; i < deg.size(); ++i) {
    auto ws = rng.permutation(right);
    for (std::size_t k = 0; k < deg[i]; ++k) e.push_back({static_cast<Vertex>(relabel[i]), static_cast<Vertex>(ws[k])});
  }
  return BipartiteGraph(deg.size(), right, std::move(e));
}

// Graph on n vertices with m parts: a random set partition (disjoint) or
// random nonempty subsets (possibly overlapping).
inline PartitionedGraph random_partitioned_graph(std::size_t n, std::size_t m, bool disjoint, Rng& rng) {
  auto g = random_graph(n, rng.between(1, 3), 4, rng);
  std::vector<std::vector<Vertex>> parts(m);
  if (disjoint) {
    if (m > n) throw std::invalid_argument("more disjoint parts than vertices");
    auto perm = rng.permutation(n);
    for (std::size_t i = 0; i < n; ++i) parts[i < m ? i : rng.below(m)].push_back(static_cast<Vertex>(perm[i]));
  } else {
    for (auto& p : parts) {
      const auto size = rng.between(1, std::max<std::size_t>(1, n / 2));
      auto perm = rng.permutation(n);
      for (std::size_t i = 0; i < size; ++i) p.push_back(static_cast<Vertex>(perm[i]));
    }
  }
  return PartitionedGraph(std::move(g), std::move(parts));
}

}  // namespace rainbow
