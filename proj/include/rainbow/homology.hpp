#pragma once

// Independence complexes, reduced rational Betti numbers and homological
// connectivity eta_H. Ranks come from fraction-free integer elimination on
// sparse boundary matrices, so no floating point is involved.

#include <algorithm>
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "game.hpp"
#include "graph.hpp"
#include "matching.hpp"

namespace rainbow {

using ConnectivityValue = ExtendedNat;

// Faces grouped by dimension; by_dim[0] holds the empty face (dimension -1),
// by_dim[k] the faces on k vertices. Lexicographic order within a dimension.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  explicit SimplicialComplex(std::vector<std::vector<VertexMask>> by_size) : faces_(std::move(by_size)) {
    if (faces_.empty() || faces_[0].size() != 1 || faces_[0][0] != 0) {
      throw std::invalid_argument("a complex must contain exactly the empty face in dimension -1");
    }
    while (faces_.size() > 1 && faces_.back().empty()) faces_.pop_back();
  }

  // Number of stored dimensions, counting dimension -1.
  std::size_t levels() const noexcept { return faces_.size(); }
  int dimension() const noexcept { return static_cast<int>(faces_.size()) - 2; }

  // Faces of dimension j, j >= -1.
  const std::vector<VertexMask>& faces(int j) const { return faces_.at(static_cast<std::size_t>(j + 1)); }

  std::size_t face_count() const {
    std::size_t n = 0;
    for (const auto& f : faces_) n += f.size();
    return n;
  }

  bool is_closed_downward() const {
    for (std::size_t k = 2; k < faces_.size(); ++k) {
      const auto& below = faces_[k - 1];
      for (auto f : faces_[k]) {
        bool ok = true;
        for_each_bit(f, [&](Vertex v) { ok = ok && std::binary_search(below.begin(), below.end(), f & ~bit(v), lex_less); });
        if (!ok) return false;
      }
    }
    return true;
  }

  // Lexicographic order of the sorted vertex lists of two equal-size faces.
  static bool lex_less(VertexMask x, VertexMask y) {
    while (x && y) {
      const auto a = std::countr_zero(x), b = std::countr_zero(y);
      if (a != b) return a < b;
      x &= x - 1;
      y &= y - 1;
    }
    return y != 0 && x == 0;
  }

 private:
  std::vector<std::vector<VertexMask>> faces_;
};

struct ComplexLimits {
  std::size_t max_faces = 2'000'000;
};

// All independent sets of g, including the empty one.
inline SimplicialComplex independence_complex(const Graph& g, ComplexLimits limits = {}) {
  std::vector<std::vector<VertexMask>> by_size(1, std::vector<VertexMask>{0});
  std::size_t total = 1;
  // Depth-first preorder with increasing vertices lists each size class in
  // lexicographic order.
  auto grow = [&](auto&& self, VertexMask face, std::size_t size, VertexMask candidates) -> void {
    while (candidates) {
      const auto v = static_cast<Vertex>(std::countr_zero(candidates));
      candidates &= candidates - 1;
      const VertexMask next = face | bit(v);
      if (by_size.size() <= size + 1) by_size.emplace_back();
      by_size[size + 1].push_back(next);
      if (++total > limits.max_faces) {
        throw ResourceLimitExceeded("independence complex exceeds " + std::to_string(limits.max_faces) + " faces");
      }
      self(self, next, size + 1, candidates & ~g.neighbors(v));
    }
  };
  grow(grow, 0, 0, g.all());
  return SimplicialComplex(std::move(by_size));
}

// Reduced Betti numbers; index 0 is dimension -1.
class BettiVector {
 public:
  BettiVector() = default;
  explicit BettiVector(std::vector<std::size_t> reduced) : b_(std::move(reduced)) {}

  std::size_t at(int j) const {
    const auto i = static_cast<std::size_t>(j + 1);
    return i < b_.size() ? b_[i] : 0;
  }
  const std::vector<std::size_t>& values() const noexcept { return b_; }
  bool all_zero() const {
    return std::all_of(b_.begin(), b_.end(), [](std::size_t x) { return x == 0; });
  }

  bool operator==(const BettiVector&) const = default;

 private:
  std::vector<std::size_t> b_;
};

template <class Int>
using SparseRow = std::vector<std::pair<std::size_t, Int>>;  // sorted by column, nonzero entries

namespace detail {

template <class Int>
Int abs_value(const Int& x) {
  return x < 0 ? Int(-x) : x;
}

template <class Int>
Int gcd_of(Int a, Int b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != 0) {
    Int t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

template <class Int>
void normalise(SparseRow<Int>& row) {
  if (row.empty()) return;
  Int g = 0;
  for (const auto& [_, x] : row) g = gcd_of(g, x);
  if (row.front().second < 0) g = -g;
  if (g != 1) {
    for (auto& [_, x] : row) x /= g;
  }
}

// r := pivot_lead * r - r_lead * p, scaled down, exact over Z.
template <class Int>
SparseRow<Int> eliminate(const SparseRow<Int>& r, const SparseRow<Int>& p) {
  const Int g = gcd_of(r.front().second, p.front().second);
  const Int mr = p.front().second / g;
  const Int mp = r.front().second / g;
  SparseRow<Int> out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.emplace_back(r[i].first, mr * r[i].second);
      ++i;
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, Int(-(mp * p[j].second)));
      ++j;
    } else {
      Int x = mr * r[i].second - mp * p[j].second;
      if (x != 0) out.emplace_back(r[i].first, std::move(x));
      ++i;
      ++j;
    }
  }
  normalise(out);
  return out;
}

}  // namespace detail

// Rank over Q of the matrix whose rows are given.
template <class Int = boost::multiprecision::cpp_int>
std::size_t exact_rank(std::vector<SparseRow<Int>> rows) {
  std::unordered_map<std::size_t, SparseRow<Int>> pivots;  // leading column -> row
  for (auto& row : rows) {
    detail::normalise(row);
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        const auto lead = row.front().first;
        pivots.emplace(lead, std::move(row));
        break;
      }
      row = detail::eliminate(row, it->second);
    }
  }
  return pivots.size();
}

// Rows of the boundary map from dimension j to j - 1 (one row per j-face).
template <class Int = boost::multiprecision::cpp_int>
std::vector<SparseRow<Int>> boundary_rows(const SimplicialComplex& c, int j) {
  const auto& upper = c.faces(j);
  const auto& lower = c.faces(j - 1);
  std::unordered_map<VertexMask, std::size_t> index;
  index.reserve(lower.size());
  for (std::size_t i = 0; i < lower.size(); ++i) index.emplace(lower[i], i);
  std::vector<SparseRow<Int>> rows;
  rows.reserve(upper.size());
  for (auto f : upper) {
    SparseRow<Int> row;
    int sign = 1;
    for_each_bit(f, [&](Vertex v) {
      auto it = index.find(f & ~bit(v));
      if (it == index.end()) throw std::invalid_argument("complex is not closed downward");
      row.emplace_back(it->second, Int(sign));
      sign = -sign;
    });
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    rows.push_back(std::move(row));
  }
  return rows;
}

// beta_j = dim C_j - rank d_j - rank d_{j+1}, with d_0 the augmentation onto
// the empty face.
template <class Int = boost::multiprecision::cpp_int>
BettiVector betti(const SimplicialComplex& c) {
  const auto top = c.dimension();
  std::vector<std::size_t> rank(static_cast<std::size_t>(top + 3), 0);  // rank[j + 1] = rank d_j
  for (int j = 0; j <= top; ++j) rank[static_cast<std::size_t>(j + 1)] = exact_rank<Int>(boundary_rows<Int>(c, j));
  std::vector<std::size_t> b;
  for (int j = -1; j <= top; ++j) {
    const auto dim = c.faces(j).size();
    b.push_back(dim - rank[static_cast<std::size_t>(j + 1)] - rank[static_cast<std::size_t>(j + 2)]);
  }
  return BettiVector(std::move(b));
}

// Infinite when every reduced Betti number vanishes, otherwise 2 plus the
// largest k with beta_j = 0 for all -1 <= j <= k; that is, the first
// dimension carrying homology, plus one.
inline ConnectivityValue eta_from_betti(const BettiVector& b) {
  const auto& v = b.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) return ConnectivityValue(static_cast<std::uint32_t>(i));
  }
  return ConnectivityValue::infinity();
}

inline ConnectivityValue eta_homological(const SimplicialComplex& c) { return eta_from_betti(betti(c)); }

inline ConnectivityValue eta_of_graph(const Graph& g) { return eta_homological(independence_complex(g)); }

// sum (-1)^j f_j - sum (-1)^j beta_j over j >= -1; zero for every complex.
inline long long euler_poincare_defect(const SimplicialComplex& c, const BettiVector& b) {
  long long faces = 0, homology = 0;
  for (int j = -1; j <= c.dimension(); ++j) {
    const long long s = (j + 1) % 2 == 0 ? -1 : 1;  // (-1)^j
    faces += s * static_cast<long long>(c.faces(j).size());
    homology += s * static_cast<long long>(b.at(j));
  }
  return faces - homology;
}

struct HallReport {
  bool hypothesis = false;
  bool conclusion = false;
  bool violation = false;  // hypothesis holds but no partial transversal found
  bool conclusion_decided = true;
  std::optional<std::uint64_t> failing_subset;  // first I with eta < |I| - d
  SolveResult<std::vector<Vertex>> transversal;
};

struct HallLimits {
  std::size_t max_parts = 16;
  std::size_t max_vertices = 24;
  SearchLimits search{};
};

// eta_H of I(G) restricted to V_I for every I; memoised on V_I.
inline std::vector<ConnectivityValue> restricted_connectivities(const PartitionedGraph& p) {
  const auto m = p.part_count();
  std::unordered_map<VertexMask, ConnectivityValue> cache;
  std::vector<ConnectivityValue> out(std::size_t{1} << m);
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << m); ++subset) {
    const auto u = p.union_of(subset);
    auto it = cache.find(u);
    if (it == cache.end()) it = cache.emplace(u, eta_of_graph(p.graph().induced(u))).first;
    out[subset] = it->second;
  }
  return out;
}

// Smallest d for which eta(I(G)|V_I) >= |I| - d holds for every I.
inline std::size_t minimal_hall_deficiency(const PartitionedGraph& p) {
  const auto eta = restricted_connectivities(p);
  std::size_t d = 0;
  for (std::uint64_t subset = 0; subset < eta.size(); ++subset) {
    if (eta[subset].is_infinite()) continue;
    const auto size = static_cast<std::size_t>(std::popcount(subset));
    if (size > eta[subset].value()) d = std::max(d, size - eta[subset].value());
  }
  return d;
}

// Tests the topological Hall condition with deficiency d and compares it
// against an exact search for a partial independent transversal.
inline HallReport check_topological_hall(const PartitionedGraph& p, std::size_t deficiency, HallLimits limits = {}) {
  if (p.part_count() > limits.max_parts || p.graph().size() > limits.max_vertices) {
    throw ResourceLimitExceeded("instance exceeds the topological Hall check caps");
  }
  HallReport r;
  r.hypothesis = true;
  const auto eta = restricted_connectivities(p);
  for (std::uint64_t subset = 0; subset < eta.size(); ++subset) {
    const auto size = static_cast<std::size_t>(std::popcount(subset));
    const std::size_t need = size > deficiency ? size - deficiency : 0;
    if (!eta[subset].at_least(need)) {
      r.hypothesis = false;
      r.failing_subset = subset;
      break;
    }
  }
  r.transversal = find_independent_transversal(p, std::min(deficiency, p.part_count()), limits.search);
  r.conclusion_decided = r.transversal.complete() || r.transversal.feasible;
  r.conclusion = r.transversal.feasible;
  r.violation = r.hypothesis && r.conclusion_decided && !r.conclusion;
  return r;
}

}  // namespace rainbow
