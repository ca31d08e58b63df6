#pragma once

// Exhaustive instance streams. Each `for_each_*` calls the visitor once per
// object in a fixed order and stops early when the visitor returns false;
// the return value is false iff it stopped early. `count_*` functions give
// the stream length without walking it, for scope caps.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "core.hpp"
#include "graph.hpp"

namespace rainbow {

// C(n, k) as a double; large values only need to compare against caps.
inline double binomial(double n, double k) {
  if (k < 0 || k > n) return 0;
  double r = 1;
  for (double i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

inline double multiset_count(std::size_t choices, std::size_t k) {
  if (choices == 0) return k == 0 ? 1 : 0;
  return binomial(static_cast<double>(choices + k - 1), static_cast<double>(k));
}

// Nondecreasing index vectors of length k over [0, choices).
template <class Visit>
bool for_each_multiset(std::size_t choices, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> pick(k, 0);
  if (k == 0) return visit(static_cast<const std::vector<std::size_t>&>(pick));
  if (choices == 0) return true;
  for (;;) {
    if (!visit(static_cast<const std::vector<std::size_t>&>(pick))) return false;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == choices - 1) --i;
    if (i == 0) return true;
    const auto v = pick[i - 1] + 1;
    for (std::size_t j = i - 1; j < k; ++j) pick[j] = v;
  }
}

// All matchings with exactly `size` edges in K_{left,right}, sorted.
inline std::vector<GraphMatching> all_matchings(std::size_t left, std::size_t right, std::size_t size) {
  std::vector<GraphMatching> out;
  GraphMatching cur;
  std::vector<bool> used_w(right, false);
  auto rec = [&](auto&& self, Vertex u) -> void {
    if (cur.size() == size) {
      out.push_back(cur);
      return;
    }
    if (u == left || left - u < size - cur.size()) return;
    for (Vertex w = 0; w < right; ++w) {
      if (used_w[w]) continue;
      used_w[w] = true;
      cur.push_back({u, w});
      self(self, u + 1);
      cur.pop_back();
      used_w[w] = false;
    }
    self(self, u + 1);
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline double matching_count(std::size_t left, std::size_t right, std::size_t size) {
  double f = 1;
  for (std::size_t i = 1; i <= size; ++i) f *= static_cast<double>(i);
  return binomial(static_cast<double>(left), static_cast<double>(size)) *
         binomial(static_cast<double>(right), static_cast<double>(size)) * f;
}

inline double family_count(std::size_t side, const std::vector<std::size_t>& sizes) {
  std::vector<std::size_t> s = sizes;
  std::sort(s.begin(), s.end());
  double total = 1;
  for (std::size_t i = 0; i < s.size();) {
    std::size_t j = i;
    while (j < s.size() && s[j] == s[i]) ++j;
    total *= multiset_count(static_cast<std::size_t>(matching_count(side, side, s[i])), j - i);
    i = j;
  }
  return total;
}

// Families of matchings in K_{side,side} with the given member sizes, up to
// reordering members of equal size. Members appear in ascending size order;
// the host is the union of the members.
template <class Visit>
bool for_each_family(std::size_t side, std::vector<std::size_t> sizes, Visit&& visit) {
  std::sort(sizes.begin(), sizes.end());
  struct Group {
    std::vector<GraphMatching> options;
    std::size_t count;
  };
  std::vector<Group> groups;
  for (std::size_t i = 0; i < sizes.size();) {
    std::size_t j = i;
    while (j < sizes.size() && sizes[j] == sizes[i]) ++j;
    groups.push_back({all_matchings(side, side, sizes[i]), j - i});
    i = j;
  }
  std::vector<GraphMatching> members;
  auto rec = [&](auto&& self, std::size_t g) -> bool {
    if (g == groups.size()) {
      std::vector<Edge> host;
      for (const auto& m : members) host.insert(host.end(), m.begin(), m.end());
      std::sort(host.begin(), host.end());
      host.erase(std::unique(host.begin(), host.end()), host.end());
      return visit(MatchingFamily(BipartiteGraph(side, side, std::move(host)), members));
    }
    return for_each_multiset(groups[g].options.size(), groups[g].count, [&](const std::vector<std::size_t>& pick) {
      for (auto i : pick) members.push_back(groups[g].options[i]);
      const bool go_on = self(self, g + 1);
      members.resize(members.size() - pick.size());
      return go_on;
    });
  };
  return rec(rec, 0);
}

// Every labelled graph on n vertices, by edge bitmask.
template <class Visit>
bool for_each_labelled_graph(std::size_t n, Visit&& visit) {
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((mask >> i) & 1U) g.add_edge(slots[i].first, slots[i].second);
    }
    if (!visit(g)) return false;
  }
  return true;
}

// Set partitions of {0..n-1} into nonempty blocks (restricted growth strings).
template <class Visit>
bool for_each_set_partition(std::size_t n, Visit&& visit) {
  std::vector<std::size_t> block(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t used) -> bool {
    if (i == n) {
      std::vector<std::vector<Vertex>> parts(used);
      for (std::size_t v = 0; v < n; ++v) parts[block[v]].push_back(static_cast<Vertex>(v));
      return visit(static_cast<const std::vector<std::vector<Vertex>>&>(parts));
    }
    for (std::size_t b = 0; b <= used; ++b) {
      block[i] = b;
      if (!self(self, i + 1, std::max(used, b + 1))) return false;
    }
    return true;
  };
  return rec(rec, 0, 0);
}

inline double bell_number(std::size_t n) {
  std::vector<double> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> next{row.back()};
    for (auto x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

// n-regular hypergraphs with sides n whose (A, B) pair is simple: a row for
// every (symbol, column), each row used n times.
template <class Visit>
bool for_each_stein_instance(std::size_t n, Visit&& visit) {
  std::vector<Vertex> rows(n * n);
  std::vector<std::size_t> left(n, n);
  auto rec = [&](auto&& self, std::size_t k) -> bool {
    if (k == n * n) {
      std::vector<Triple> e;
      for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b) e.push_back({a, b, rows[a * n + b]});
      return visit(TriHypergraph({n, n, n}, std::move(e)));
    }
    for (Vertex c = 0; c < n; ++c) {
      if (left[c] == 0) continue;
      --left[c];
      rows[k] = c;
      const bool go_on = self(self, k + 1);
      ++left[c];
      if (!go_on) return false;
    }
    return true;
  };
  return rec(rec, 0);
}

inline double stein_count(std::size_t n) {
  // (n^2)! / (n!)^n
  double r = 1;
  const auto total = n * n;
  std::size_t placed = 0;
  for (std::size_t c = 0; c < n; ++c) {
    r *= binomial(static_cast<double>(total - placed), static_cast<double>(n));
    placed += n;
  }
  return r;
}

// Hypergraphs whose A-vertices each take one "fiber" (a list of (b, c)
// pairs) from `fibers`, up to permuting A. Sides (k, sb, sc).
template <class Visit>
bool for_each_fibered_hypergraph(std::size_t k, std::size_t sb, std::size_t sc,
                                 const std::vector<std::vector<std::pair<Vertex, Vertex>>>& fibers, Visit&& visit) {
  return for_each_multiset(fibers.size(), k, [&](const std::vector<std::size_t>& pick) {
    std::vector<Triple> e;
    for (std::size_t a = 0; a < pick.size(); ++a) {
      for (auto [b, c] : fibers[pick[a]]) e.push_back({static_cast<Vertex>(a), b, c});
    }
    return visit(TriHypergraph({k, sb, sc}, std::move(e)));
  });
}

inline std::vector<std::pair<Vertex, Vertex>> all_pairs(std::size_t sb, std::size_t sc) {
  std::vector<std::pair<Vertex, Vertex>> p;
  for (Vertex b = 0; b < sb; ++b)
    for (Vertex c = 0; c < sc; ++c) p.emplace_back(b, c);
  return p;
}

// Fibers: functions C -> B, as pairs (f(c), c).
inline std::vector<std::vector<std::pair<Vertex, Vertex>>> function_fibers(std::size_t sb, std::size_t sc) {
  std::vector<std::vector<std::pair<Vertex, Vertex>>> out;
  if (sb == 0 && sc > 0) return out;
  std::vector<Vertex> f(sc, 0);
  for (;;) {
    std::vector<std::pair<Vertex, Vertex>> fiber;
    for (Vertex c = 0; c < sc; ++c) fiber.emplace_back(f[c], c);
    out.push_back(std::move(fiber));
    std::size_t i = 0;
    while (i < sc && ++f[i] == sb) f[i++] = 0;
    if (i == sc) break;
  }
  return out;
}

// Fibers: d-subsets (distinct) or d-multisets of B x C pairs.
inline std::vector<std::vector<std::pair<Vertex, Vertex>>> pair_fibers(std::size_t sb, std::size_t sc, std::size_t d,
                                                                       bool repeats) {
  const auto pairs = all_pairs(sb, sc);
  std::vector<std::vector<std::pair<Vertex, Vertex>>> out;
  for_each_multiset(pairs.size(), d, [&](const std::vector<std::size_t>& pick) {
    if (!repeats && std::adjacent_find(pick.begin(), pick.end()) != pick.end()) return true;
    std::vector<std::pair<Vertex, Vertex>> fiber;
    for (auto i : pick) fiber.push_back(pairs[i]);
    out.push_back(std::move(fiber));
    return true;
  });
  return out;
}

}  // namespace rainbow
