#pragma once

// Statement harness. Every catalog entry pairs a hypothesis predicate with
// a conclusion predicate over one instance domain, an exhaustive stream, a
// seeded sampler, and an independent re-check used to confirm any failure
// before it is reported. Instances failing the hypothesis are counted and
// never judged.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <variant>
#include <vector>

#include "canonical.hpp"
#include "constructions.hpp"
#include "core.hpp"
#include "enumerate.hpp"
#include "game.hpp"
#include "graph.hpp"
#include "homology.hpp"
#include "io.hpp"
#include "matching.hpp"
#include "rng.hpp"

namespace rainbow {

enum class StatementId : std::uint8_t {
  DRISKO_1_5,
  IMPROVED_1_7,
  ACCOMMODATING_1_8,
  ALMOST_DRISKO_1_9,
  CAMWAN_1_10,
  STRONG_CAMWAN_1_12,
  TOPHALL_2_3,
  TOPHALL_DEF_2_4,
  ETA_GE_PSI_2_5,
  LEMMA_3_1,
  CONJ_RBS_1_1,
  CONJ_STEIN_1_2,
  CONJ_SYM_1_3,
  CONJ_AB_1_4,
  CONJ_DRISKO_1_6,
  CONJ_FRACD_5_1,
  CONJ_ASYM_5_2,
  CONJ_GEN_5_3,
  REMARK_5_DOUBLE_DELTA,
};

inline constexpr std::size_t statement_count = 19;

enum class StatementKind { theorem, conjecture, remark };

// Ascending member-size profile a_1 <= ... <= a_{2n-1}.
struct SizeSequence {
  std::vector<std::size_t> sizes;
  bool operator==(const SizeSequence&) const = default;
};

using Instance = std::variant<MatchingFamily, TriHypergraph, LatinSquare, PartitionedGraph, Graph, BipartiteGraph,
                              SizeSequence>;

enum class Domain { family, hypergraph, square, partitioned, graph, bipartite, sequence };

enum class Verdict { holds, fails, undecided };

class ScopeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Params = std::vector<std::size_t>;
using Emit = std::function<bool(Instance)>;

struct Statement {
  StatementId id;
  std::string_view name;
  StatementKind kind;
  Domain domain;
  std::string_view exhaustive_params;  // meaning of exhaustive size parameters
  std::string_view random_params;      // meaning of randomized size parameters
  Params default_random;
  std::function<bool(const Instance&)> hypothesis;
  std::function<Verdict(const Instance&)> conclusion;
  std::function<Verdict(const Instance&)> recheck;
  // Throws ScopeError when the parameters are outside the feasibility caps.
  std::function<void(const Params&)> check_exhaustive;
  std::function<void(const Params&)> check_random;
  std::function<void(const Params&, const Emit&)> exhaustive;
  std::function<Instance(Rng&, const Params&)> sample;
};

struct Scope {
  enum class Mode { exhaustive, randomized, supplied };
  Mode mode = Mode::exhaustive;
  Params params;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;

  static Scope exhaustive_scope(Params p) { return {Mode::exhaustive, std::move(p), 0, 0}; }
  static Scope randomized_scope(std::uint64_t trials, std::uint64_t seed, Params p = {}) {
    return {Mode::randomized, std::move(p), trials, seed};
  }
  // Instances come from the caller (e.g. standard input).
  static Scope supplied_scope() { return {Mode::supplied, {}, 0, 0}; }
};

inline json to_json(const Scope& s) {
  if (s.mode == Scope::Mode::exhaustive) return {{"mode", "exhaustive"}, {"params", s.params}};
  if (s.mode == Scope::Mode::supplied) return {{"mode", "supplied"}};
  return {{"mode", "randomized"}, {"trials", s.trials}, {"seed", s.seed}, {"params", s.params}};
}

inline json to_json(const SizeSequence& s) { return {{"sizes", s.sizes}}; }

inline json to_json(const Instance& inst) {
  return std::visit([](const auto& x) -> json { return to_json(x); }, inst);
}

inline Instance instance_from_json(Domain d, const json& j) {
  switch (d) {
    case Domain::family: return family_from_json(j);
    case Domain::hypergraph: return hypergraph_from_json(j);
    case Domain::square: return square_from_json(j);
    case Domain::partitioned: return partitioned_from_json(j);
    case Domain::graph: return graph_from_json(j);
    case Domain::bipartite: return bipartite_from_json(j);
    case Domain::sequence: {
      SizeSequence s;
      for (const auto& x : detail::array_of(detail::field(j, "sizes"), "sizes")) {
        s.sizes.push_back(detail::count_of(x, "size"));
      }
      return s;
    }
  }
  throw FormatError("unknown instance domain");
}

struct Violation {
  std::uint64_t index = 0;
  json instance;
};

struct VerificationReport {
  StatementId statement{};
  std::string name;
  StatementKind kind = StatementKind::theorem;
  Scope scope;
  std::uint64_t instances_checked = 0;
  std::uint64_t hypothesis_hits = 0;
  std::uint64_t undecided = 0;     // budget ran out before a verdict
  std::uint64_t inconsistent = 0;  // conclusion failed but the re-check disagreed
  std::vector<Violation> violations;
  double wall_time = 0;

  // Theorems must be violation-free; every kind must be decided and
  // internally consistent.
  bool passed() const {
    return undecided == 0 && inconsistent == 0 && (kind != StatementKind::theorem || violations.empty());
  }

  json to_json() const {
    json v = json::array();
    for (const auto& x : violations) v.push_back({{"index", x.index}, {"instance", x.instance}});
    json j{{"statement", name},
           {"kind", kind == StatementKind::theorem ? "theorem" : kind == StatementKind::conjecture ? "conjecture" : "remark"},
           {"scope", rainbow::to_json(scope)},
           {"instances_checked", instances_checked},
           {"hypothesis_hits", hypothesis_hits},
           {"undecided", undecided},
           {"inconsistent", inconsistent},
           {"violations", v},
           {"wall_time", wall_time},
           {"seed", scope.seed},
           {"passed", passed()}};
    if (kind != StatementKind::theorem && violations.empty()) j["note"] = "no counterexample found in budget";
    return j;
  }
};

namespace detail {

template <class Witness>
Verdict verdict_of(const SolveResult<Witness>& r) {
  if (r.feasible) return Verdict::holds;
  return r.complete() ? Verdict::fails : Verdict::undecided;
}

inline Verdict verdict_of(bool b) { return b ? Verdict::holds : Verdict::fails; }

inline Verdict both(Verdict x, Verdict y) {
  if (x == Verdict::fails || y == Verdict::fails) return Verdict::fails;
  if (x == Verdict::undecided || y == Verdict::undecided) return Verdict::undecided;
  return Verdict::holds;
}

inline void need(bool ok, const std::string& why) {
  if (!ok) throw ScopeError(why);
}

inline void need_params(const Params& p, std::size_t count, std::string_view meaning) {
  need(p.size() == count, "expected " + std::to_string(count) + " size parameter(s): " + std::string(meaning));
}

inline constexpr double exhaustive_cap = 3e6;

inline void need_count(double count) {
  need(count <= exhaustive_cap, "exhaustive scope of about " + std::to_string(static_cast<long long>(count)) +
                                    " instances exceeds the cap");
}

// nu(H) >= target with the branch-and-bound search, re-checked through the
// transversal formulation.
inline Verdict nu_at_least(const TriHypergraph& h, std::size_t target) {
  return verdict_of(max_matching_size(h, {}, target));
}

inline std::size_t distinct_edges(const TriHypergraph& h) {
  auto e = h.edges();
  std::sort(e.begin(), e.end());
  return static_cast<std::size_t>(std::unique(e.begin(), e.end()) - e.begin());
}

inline Verdict nu_at_least_recheck(const TriHypergraph& h, std::size_t target) {
  if (distinct_edges(h) > Graph::max_vertices) return Verdict::undecided;
  return verdict_of(max_matching_via_transversal(h, {}, target));
}

inline Verdict rainbow_at_least(const MatchingFamily& f, std::size_t target) {
  return verdict_of(find_rainbow_matching(f, target));
}

inline Verdict rainbow_at_least_recheck(const MatchingFamily& f, std::size_t target) {
  return verdict_of(max_matching_size(family_to_hypergraph(f), {}, target));
}

// Number of parts met by the best independent set, by scanning every face.
inline std::size_t transversal_optimum_by_faces(const PartitionedGraph& p) {
  const auto c = independence_complex(p.graph());
  std::size_t best = 0;
  for (int j = -1; j <= c.dimension(); ++j) {
    for (auto f : c.faces(j)) best = std::max(best, parts_met(p, f));
  }
  return best;
}

inline void need_hall_caps(const PartitionedGraph& p) {
  if (p.graph().size() > 16 || p.part_count() > 10) throw ScopeError("instance exceeds the topological Hall caps");
}

inline std::optional<std::size_t> odd_family_n(const MatchingFamily& f) {
  if (f.size() % 2 == 0) return std::nullopt;
  return (f.size() + 1) / 2;
}

inline bool drisko_profile(const MatchingFamily& f, bool graded) {
  const auto n = odd_family_n(f);
  if (!n) return false;
  std::vector<std::size_t> s;
  for (const auto& m : f.members()) s.push_back(m.size());
  std::sort(s.begin(), s.end());
  for (std::size_t i = 1; i <= s.size(); ++i) {
    const auto need_size = graded ? std::min(i, *n) : *n;
    if (s[i - 1] < need_size) return false;
  }
  return true;
}

inline std::vector<std::size_t> graded_profile(std::size_t n) {
  std::vector<std::size_t> s;
  for (std::size_t i = 1; i <= 2 * n - 1; ++i) s.push_back(std::min(i, n));
  return s;
}

inline std::size_t largest_drisko_n(const TriHypergraph& h) {
  const auto na = h.side_size(Side::A);
  if (na == 0) return 0;
  return std::min((na + 1) / 2, min_degree(h, {Side::A}));
}

inline bool equal_sides(const TriHypergraph& h) {
  return h.sides()[0] == h.sides()[1] && h.sides()[1] == h.sides()[2];
}

template <class Build>
Instance retry_sample(Rng& rng, Build&& build) {
  for (int attempt = 0;; ++attempt) {
    try {
      return build(rng);
    } catch (const ConstructionError&) {
      if (attempt > 100) throw;
    }
  }
}

}  // namespace detail

VerificationReport check_accommodating(const std::vector<std::size_t>& a, std::size_t n, const Scope& scope);

namespace detail {

inline void need_latin_order(const Params& p, std::size_t max_n) {
  need_params(p, 1, "n");
  need(p[0] >= 1 && p[0] <= max_n, "order must lie in [1, " + std::to_string(max_n) + "]");
}

inline void need_family(const Params& p, std::size_t max_n, std::size_t max_side) {
  need_params(p, 2, "n, host side s");
  need(p[0] >= 1 && p[0] <= max_n && p[1] >= p[0] && p[1] <= max_side,
       "need 1 <= n <= " + std::to_string(max_n) + " and n <= s <= " + std::to_string(max_side));
}

inline Statement family_statement(StatementId id, std::string_view name, StatementKind kind) {
  Statement s;
  s.id = id;
  s.name = name;
  s.kind = kind;
  s.domain = Domain::family;
  s.exhaustive_params = "n, host side s (families inside K_{s,s})";
  s.random_params = "n, host side s";
  return s;
}

inline Statement hyper_statement(StatementId id, std::string_view name, StatementKind kind) {
  Statement s;
  s.id = id;
  s.name = name;
  s.kind = kind;
  s.domain = Domain::hypergraph;
  return s;
}

inline std::vector<Statement> build_catalog() {
  std::vector<Statement> cat;

  // Families of 2n - 1 matchings of size n have a rainbow n-matching.
  {
    auto s = family_statement(StatementId::DRISKO_1_5, "DRISKO_1_5", StatementKind::theorem);
    s.default_random = {3, 4};
    s.hypothesis = [](const Instance& i) { return drisko_profile(std::get<MatchingFamily>(i), false); };
    s.conclusion = [](const Instance& i) {
      const auto& f = std::get<MatchingFamily>(i);
      return rainbow_at_least(f, *odd_family_n(f));
    };
    s.recheck = [](const Instance& i) {
      const auto& f = std::get<MatchingFamily>(i);
      return rainbow_at_least_recheck(f, *odd_family_n(f));
    };
    s.check_exhaustive = [](const Params& p) {
      need_family(p, 4, 5);
      need_count(family_count(p[1], std::vector<std::size_t>(2 * p[0] - 1, p[0])));
    };
    s.check_random = [](const Params& p) { need_family(p, 6, 12); };
    s.exhaustive = [](const Params& p, const Emit& emit) {
      for_each_family(p[1], std::vector<std::size_t>(2 * p[0] - 1, p[0]), [&](MatchingFamily f) { return emit(std::move(f)); });
    };
    s.sample = [](Rng& rng, const Params& p) -> Instance {
      return random_family(p[1], p[1], std::vector<std::size_t>(2 * p[0] - 1, p[0]), rng);
    };
    cat.push_back(std::move(s));
  }

  // Graded sizes |F_i| >= min(i, n) suffice.
  {
    auto s = family_statement(StatementId::IMPROVED_1_7, "IMPROVED_1_7", StatementKind::theorem);
    s.default_random = {3, 4};
    s.hypothesis = [](const Instance& i) { return drisko_profile(std::get<MatchingFamily>(i), true); };
    s.conclusion = [](const Instance& i) {
      const auto& f = std::get<MatchingFamily>(i);
      return rainbow_at_least(f, *odd_family_n(f));
    };
    s.recheck = [](const Instance& i) {
      const auto& f = std::get<MatchingFamily>(i);
      return rainbow_at_least_recheck(f, *odd_family_n(f));
    };
    s.check_exhaustive = [](const Params& p) {
      need_family(p, 4, 5);
      need_count(family_count(p[1], graded_profile(p[0])));
    };
    s.check_random = [](const Params& p) { need_family(p, 6, 12); };
    s.exhaustive = [](const Params& p, const Emit& emit) {
      for_each_family(p[1], graded_profile(p[0]), [&](MatchingFamily f) { return emit(std::move(f)); });
    };
    s.sample = [](Rng& rng, const Params& p) -> Instance {
      const auto n = p[0];
      std::vector<std::size_t> sizes;
      for (std::size_t i = 1; i <= 2 * n - 1; ++i) sizes.push_back(i < n ? rng.between(i, n) : n);
      rng.shuffle(sizes);
      return random_family(p[1], p[1], sizes, rng);
    };
    cat.push_back(std::move(s));
  }

  // Accommodating iff a_i >= min(i, n): both directions per sequence.
  {
    Statement s;
    s.id = StatementId::ACCOMMODATING_1_8;
    s.name = "ACCOMMODATING_1_8";
    s.kind = StatementKind::theorem;
    s.domain = Domain::sequence;
    s.exhaustive_params = "n (every ascending sequence of length 2n-1 with entries in [0, n])";
    s.random_params = "n";
    s.default_random = {3};
    s.hypothesis = [](const Instance& i) {
      const auto& a = std::get<SizeSequence>(i).sizes;
      if (a.empty() || a.size() % 2 == 0 || !std::is_sorted(a.begin(), a.end())) return false;
      const auto n = (a.size() + 1) / 2;
      return n >= 2 && a.back() <= n;
    };
    auto judge = [](const Instance& i, std::uint64_t salt) {
      const auto& a = std::get<SizeSequence>(i).sizes;
      const auto n = (a.size() + 1) / 2;
      std::uint64_t seed = salt;
      for (auto x : a) seed = mix_seed(seed ^ x);
      const auto r = check_accommodating(a, n, Scope::randomized_scope(200, seed));
      if (!r.violations.empty()) return Verdict::fails;
      return r.undecided == 0 && r.inconsistent == 0 ? Verdict::holds : Verdict::undecided;
    };
    s.conclusion = [judge](const Instance& i) { return judge(i, 1); };
    s.recheck = [judge](const Instance& i) { return judge(i, 1); };
    s.check_exhaustive = [](const Params& p) {
      need_params(p, 1, "n");
      need(p[0] >= 2 && p[0] <= 3, "n must lie in [2, 3]");
    };
    s.check_random = [](const Params& p) {
      need_params(p, 1, "n");
      need(p[0] >= 2 && p[0] <= 4, "n must lie in [2, 4]");
    };
    s.exhaustive = [](const Params& p, const Emit& emit) {
      const auto n = p[0];
      for_each_multiset(n + 1, 2 * n - 1, [&](const std::vector<std::size_t>& a) { return emit(SizeSequence{a}); });
    };
    s.sample = [](Rng& rng, const Params& p) -> Instance {
      const auto n = p[0];
      SizeSequence q;
      for (std::size_t i = 0; i < 2 * n - 1; ++i) q.sizes.push_back(rng.between(0, n));
      std::sort(q.sizes.begin(), q.sizes.end());
      return q;
    };
    cat.push_back(std::move(s));
  }

  // |A| >= 2n - 1, |B| = |C| = n, deg(a) = n, (A,C) simple, (B,C) 2-simple.
  {
    auto s = hyper_statement(StatementId::ALMOST_DRISKO_1_9, "ALMOST_DRISKO_1_9", StatementKind::theorem);
    s.exhaustive_params = "n (A-vertices take functions C -> B, up to permuting A)";
    s.random_params = "n";
    s.default_random = {3};
    s.hypothesis = [](const Instance& i) {
      const auto& h = std::get<TriHypergraph>(i);
      const auto n = h.side_size(Side::B);
      if (n == 0 || h.side_size(Side::C) != n || h.side_size(Side::A) + 1 < 2 * n) return false;
      for (auto d : degrees(h, Side::A)) {
        if (d != n) return false;
      }
      return is_simple_pair(h, SidePair::AC) && is_p_simple(h, SidePair::BC, 2);
    };
    s.conclusion = [](const Instance& i) {
      const auto& h = std::get<TriHypergraph>(i);
      return nu_at_least(h, h.side_size(Side::B));
    };
    s.recheck = [](const Instance& i) {
      const auto& h = std::get<TriHypergraph>(i);
      return nu_at_least_recheck(h, h.side_size(Side::B));
    };
    s.check_exhaustive = [](const Params& p) {
      need_params(p, 1, "n");
      need(p[0] >= 1 && p[0] <= 3, "n must lie in [1, 3]");
    };
    s.check_random = [](const Params& p) {
      need_params(p, 1, "n");
      need(p[0] >= 2 && p[0] <= 5, "n must lie in [2, 5]");
    };
    s.exhaustive = [](const Params& p, const Emit& emit) {
      const auto n = p[0];
      for_each_fibered_hypergraph(2 * n - 1, n, n, function_fibers(n, n), [&](TriHypergraph h) { return emit(std::move(h)); });
    };
    s.sample = [](Rng& rng, const Params& p) -> Instance { return gen_theorem19_instance(p[0], rng); };
    cat.push_back(std::move(s));
  }

  // Latin (then row-Latin) squares have a diagonal with symbol multiplicity <= 2.
  for (bool strong : {false, true}) {
    Statement s;
    s.id = strong ? StatementId::STRONG_CAMWAN_1_12 : StatementId::CAMWAN_1_10;
    s.name = strong ? "STRONG_CAMWAN_1_12" : "CAMWAN_1_10";
    s.kind = StatementKind::theorem;
    s.domain = Domain::square;
    s.exhaustive_params = strong ? "n (row-Latin squares, first row normalized)" : "n (every Latin square)";
    s.random_params = "n";
    s.default_random = {6};
    s.hypothesis = [strong](const Instance& i) {
      const auto& sq = std::get<LatinSquare>(i);
      return strong ? sq.is_row_latin() : sq.is_latin();
    };
    s.conclusion = [](const Instance& i) { return verdict_of(find_bounded_diagonal(std::get<LatinSquare>(i), 2)); };
    // A matching of size n in the A-doubled hypergraph is such a diagonal.
    s.recheck = [](const Instance& i) {
      const auto& sq = std::get<LatinSquare>(i);
      return nu_at_least(double_side_a(latin_to_hypergraph(sq)), sq.order());
    };
    s.check_exhaustive = [strong](const Params& p) { need_latin_order(p, strong ? 4 : 5); };
    s.check_random = [](const Params& p) { need_latin_order(p, 8); };
    s.exhaustive = [strong](const Params& p, const Emit& emit) {
      auto visit = [&](LatinSquare sq) { return emit(std::move(sq)); };
      if (strong) {
        for_each_row_latin_normalized(p[0], visit);
      } else {
        for_each_latin_square(p[0], visit);
      }
    };
    s.sample = [strong](Rng& rng, const Params& p) -> Instance {
      return strong ? random_row_latin(p[0], rng) : random_latin(p[0], rng);
    };
    cat.push_back(std::move(s));
  }

  // Topological Hall, plain and with deficiency.
  for (bool deficiency : {false, true}) {
    Statement s;
    s.id = deficiency ? StatementId::TOPHALL_DEF_2_4 : StatementId::TOPHALL_2_3;
    s.name = deficiency ? "TOPHALL_DEF_2_4" : "TOPHALL_2_3";
    s.kind = StatementKind::theorem;
    s.domain = Domain::partitioned;
    s.exhaustive_params = "v (every labelled graph on v vertices with every set partition as parts)";
    s.random_params = "v, m (random graph on v vertices with m parts)";
    s.default_random = deficiency ? Params{7, 4} : Params{7, 3};
    s.hypothesis = [deficiency](const Instance& i) {
      const auto& p = std::get<PartitionedGraph>(i);
      need_hall_caps(p);
      return deficiency || minimal_hall_deficiency(p) == 0;
    };
    // The deficiency form is judged at the smallest d meeting its hypothesis.
    s.conclusion = [](const Instance& i) {
      const auto& p = std::get<PartitionedGraph>(i);
      return verdict_of(find_independent_transversal(p, minimal_hall_deficiency(p)));
    };
    s.recheck = [](const Instance& i) {
      const auto& p = std::get<PartitionedGraph>(i);
      return verdict_of(transversal_optimum_by_faces(p) + minimal_hall_deficiency(p) >= p.part_count());
    };
    s.check_exhaustive = [](const Params& p) {
      need_params(p, 1, "v");
      need(p[0] <= 5, "v must be at most 5");
    };
    s.check_random = [](const Params& p) {
      need_params(p, 2, "v, m");
      need(p[0] >= 1 && p[0] <= 12 && p[1] >= 1 && p[1] <= 8, "need 1 <= v <= 12 and 1 <= m <= 8");
    };
    s.exhaustive = [](const Params& p, const Emit& emit) {
      for_each_labelled_graph(p[0], [&](const Graph& g) {
        return for_each_set_partition(p[0], [&](const std::vector<std::vector<Vertex>>& parts) {
          return emit(PartitionedGraph(g, parts));
        });
      });
    };
    s.sample = [](Rng& rng, const Params& p) -> Instance {
      const bool disjoint = p[1] <= p[0] && rng.coin();
      return random_partitioned_graph(p[0], p[1], disjoint, rng);
    };
    cat.push_back(std::move(s));
  }

  // eta_H(I(G)) >= psi(G).
  {
    Statement s;
    s.id = StatementId::ETA_GE_PSI_2_5;
    s.name = "ETA_GE_PSI_2_5";
    s.kind = StatementKind::theorem;
    s.domain = Domain::graph;
    s.exhaustive_params = "v (one graph per isomorphism class on at most v vertices)";
    s.random_params = "v";
    s.default_random = {7};
    s.hypothesis = [](const Instance&) { return true; };
    s.conclusion = [](const Instance& i) {
      const auto& g = std::get<Graph>(i);
      return verdict_of(eta_of_graph(g) >= psi(g));
    };
    s.recheck = [](const Instance& i) {
      const auto& g = std::get<Graph>(i);
      const auto eta = eta_of_graph(g);
      return verdict_of(eta.is_infinite() || !psi_at_least(g, eta.value() + 1));
    };
    s.check_exhaustive = [](const Params& p) {
      need_params(p, 1, "v");
      need(p[0] <= 7, "v must be at most 7");
    };
    s.check_random = [](const Params& p) {
      need_params(p, 1, "v");
      need(p[0] <= 9, "v must be at most 9");
    };
    s.exhaustive = [](const Params& p, const Emit& emit) {
      for (std::size_t v = 0; v <= p[0]; ++v) {
        for (auto& g : nonisomorphic_graphs(v)) {
          if (!emit(std::move(g))) return;
        }
      }
    };
    s.sample = [](Rng& rng, const Params& p) -> Instance { return random_graph(p[0], rng.between(1, 3), 4, rng); };
    cat.push_back(std::move(s));
  }

  // 2l - 1 vertices of U with deg(u_i) >= min(i, l) give psi(L(G)) >= l.
  {
    Statement s;
    s.id = StatementId::LEMMA_3_1;
    s.name = "LEMMA_3_1";
    s.kind = StatementKind::theorem;
    s.domain = Domain::bipartite;
    s.exhaustive_params = "|U|, |W| (every labelled bipartite graph)";
    s.random_params = "l, edge cap";
    s.default_random = {3, 12};
    s.hypothesis = [](const Instance& i) {
      const auto& g = std::get<BipartiteGraph>(i);
      if (g.edges().size() > 16) throw ScopeError("line graphs are capped at 16 vertices");
      return degree_condition_level(g) >= 1;
    };
    s.conclusion = [](const Instance& i) {
      const auto& g = std::get<BipartiteGraph>(i);
      return verdict_of(psi_line_at_least(g, degree_condition_level(g)));
    };
    s.recheck = [](const Instance& i) {
      const auto& g = std::get<BipartiteGraph>(i);
      return verdict_of(psi_line(g).at_least(degree_condition_level(g)));
    };
    s.check_exhaustive = [](const Params& p) {
      need_params(p, 2, "|U|, |W|");
      need(p[0] * p[1] <= 12, "|U| * |W| must be at most 12");
    };
    s.check_random = [](const Params& p) {
      need_params(p, 2, "l, edge cap");
      need(p[0] >= 1 && p[0] <= 3 && p[1] <= 14, "need 1 <= l <= 3 and edge cap <= 14");
      std::size_t minimal = 0;
      for (std::size_t i = 1; i <= 2 * p[0] - 1; ++i) minimal += std::min(i, p[0]);
      need(p[1] >= minimal, "edge cap below the minimal degree profile");
    };
    s.exhaustive = [](const Params& p, const Emit& emit) {
      const auto slots = p[0] * p[1];
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask) {
        std::vector<Edge> e;
        for (std::size_t k = 0; k < slots; ++k) {
          if ((mask >> k) & 1U) e.push_back({static_cast<Vertex>(k / p[1]), static_cast<Vertex>(k % p[1])});
        }
        if (!emit(BipartiteGraph(p[0], p[1], std::move(e)))) return;
      }
    };
    s.sample = [](Rng& rng, const Params& p) -> Instance { return random_degree_condition_graph(p[0], p[1], rng); };
    cat.push_back(std::move(s));
  }

  // n-regular, sides n, all pairs simple => nu >= n - 1.
  {
    auto s = hyper_statement(StatementId::CONJ_RBS_1_1, "CONJ_RBS_1_1", StatementKind::conjecture);
    s.exhaustive_params = "n (hypergraphs of all Latin squares of order n)";
    s.random_params = "n";
    s.default_random = {6};
    s.hypothesis = [](const Instance& i) {
      const auto& h = std::get<TriHypergraph>(i);
      const auto n = h.side_size(Side::A);
      return equal_sides(h) && is_regular(h, n) && is_simple_pair(h, SidePair::AB) &&
             is_simple_pair(h, SidePair::AC) && is_simple_pair(h, SidePair::BC);
    };
    s.conclusion = [](const Instance& i) {
      const auto& h = std::get<TriHypergraph>(i);
      return nu_at_least(h, h.side_size(Side::A) > 0 ? h.side_size(Side::A) - 1 : 0);
    };
    s.recheck = [](const Instance& i) {
      const auto& h = std::get<TriHypergraph>(i);
      return nu_at_least_recheck(h, h.side_size(Side::A) > 0 ? h.side_size(Side::A) - 1 : 0);
    };
    s.check_exhaustive = [](const Params& p) { need_latin_order(p, 5); };
    s.check_random = [](const Params& p) { need_latin_order(p, 8); };
    s.exhaustive = [](const Params& p, const Emit& emit) {
      for_each_latin_square(p[0], [&](const LatinSquare& sq) { return emit(latin_to_hypergraph(sq)); });
    };
    s.sample = [](Rng& rng, const Params& p) -> Instance { return latin_to_hypergraph(random_latin(p[0], rng)); };
    cat.push_back(std::move(s));
  }

  // n-regular, sides n, (A,B) simple => nu >= n - 1.
  {
    auto s = hyper_statement(StatementId::CONJ_STEIN_1_2, "CONJ_STEIN_1_2", StatementKind::conjecture);
    s.exhaustive_params = "n (every row assignment of the symbol-column grid)";
    s.random_params = "n";
    s.default_random = {5};
    s.hypothesis = [](const Instance& i) {
      const auto& h = std::get<TriHypergraph>(i);
      return equal_sides(h) && is_regular(h, h.side_size(Side::A)) && is_simple_pair(h, SidePair::AB);
    };
    s.conclusion = [](const Instance& i) {
      const auto& h = std::get<TriHypergraph>(i);
      return nu_at_least(h, h.side_size(Side::A) > 0 ? h.side_size(Side::A) - 1 : 0);
    };
    s.recheck = [](const Instance& i) {
      const auto& h = std::get<TriHypergraph>(i);
      return nu_at_least_recheck(h, h.side_size(Side::A) > 0 ? h.side_size(Side::A) - 1 : 0);
    };
    s.check_exhaustive = [](const Params& p) {
      need_latin_order(p, 3);
      need_count(stein_count(p[0]));
    };
    s.check_random = [](const Params& p) { need_latin_order(p, 8); };
    s.exhaustive = [](const Params& p, const Emit& emit) {
      for_each_stein_instance(p[0], [&](TriHypergraph h) { return emit(std::move(h)); });
    };
    s.sample = [](Rng& rng, const Params& p) -> Instance { return random_stein_instance(p[0], rng); };
    cat.push_back(std::move(s));
  }

  // Simple n-regular, sides n => nu >= n - 1.
  {
    auto s = hyper_statement(StatementId::CONJ_SYM_1_3, "CONJ_SYM_1_3", StatementKind::conjecture);
    s.exhaustive_params = "n (every simple n-regular hypergraph with sides n)";
    s.random_params = "n";
    s.default_random = {3};
    s.hypothesis = [](const Instance& i) {
      const auto& h = std::get<TriHypergraph>(i);
      return equal_sides(h) && is_simple(h) && is_regular(h, h.side_size(Side::A));
    };
    s.conclusion = [](const Instance& i) {
      const auto& h = std::get<TriHypergraph>(i);
      return nu_at_least(h, h.side_size(Side::A) > 0 ? h.side_size(Side::A) - 1 : 0);
    };
    s.recheck = [](const Instance& i) {
      const auto& h = std::get<TriHypergraph>(i);
      return nu_at_least_recheck(h, h.side_size(Side::A) > 0 ? h.side_size(Side::A) - 1 : 0);
    };
    s.check_exhaustive = [](const Params& p) { need_latin_order(p, 3); };
    s.check_random = [](const Params& p) { need_latin_order(p, 8); };
    s.exhaustive = [](const Params& p, const Emit& emit) {
      for_each_simple_regular(p[0], p[0], [&](TriHypergraph h) { return emit(std::move(h)); });
    };
    s.sample = [](Rng& rng, const Params& p) -> Instance {
      return retry_sample(rng, [&](Rng& r) { return random_simple_regular(p[0], p[0], r); });
    };
    cat.push_back(std::move(s));
  }

  // n matchings of size n => rainbow matching of size n - 1.
  {
    auto s = family_statement(StatementId::CONJ_AB_1_4, "CONJ_AB_1_4", StatementKind::conjecture);
    s.default_random = {3, 4};
    s.hypothesis = [](const Instance& i) {
      const auto& f = std::get<MatchingFamily>(i);
      if (f.size() == 0) return false;
      return std::all_of(f.members().begin(), f.members().end(), [&](const GraphMatching& m) { return m.size() >= f.size(); });
    };
    s.conclusion = [](const Instance& i) {
      const auto& f = std::get<MatchingFamily>(i);
      return rainbow_at_least(f, f.size() - 1);
    };
    s.recheck = [](const Instance& i) {
      const auto& f = std::get<MatchingFamily>(i);
      return rainbow_at_least_recheck(f, f.size() - 1);
    };
    s.check_exhaustive = [](const Params& p) {
      need_family(p, 4, 5);
      need_count(family_count(p[1], std::vector<std::size_t>(p[0], p[0])));
    };
    s.check_random = [](const Params& p) { need_family(p, 8, 12); };
    s.exhaustive = [](const Params& p, const Emit& emit) {
      for_each_family(p[1], std::vector<std::size_t>(p[0], p[0]), [&](MatchingFamily f) { return emit(std::move(f)); });
    };
    s.sample = [](Rng& rng, const Params& p) -> Instance {
      return random_family(p[1], p[1], std::vector<std::size_t>(p[0], p[0]), rng);
    };
    cat.push_back(std::move(s));
  }

  // |A| >= 2n - 1, deg(a) >= n, deg(v) <= 2n - 1 on B u C => nu >= n, judged
  // at the largest n the first two conditions allow.
  for (bool simple : {false, true}) {
    auto s = hyper_statement(simple ? StatementId::CONJ_GEN_5_3 : StatementId::CONJ_DRISKO_1_6,
                             simple ? "CONJ_GEN_5_3" : "CONJ_DRISKO_1_6", StatementKind::conjecture);
    s.exhaustive_params = simple ? "n, |B|, |C| (|A| = 2n-1, each a takes n distinct (b,c) pairs)"
                                 : "n, |B|, |C| (|A| = 2n-1, each a takes n (b,c) pairs with repetition)";
    s.random_params = "n";
    s.default_random = {3};
    s.hypothesis = [simple](const Instance& i) {
      const auto& h = std::get<TriHypergraph>(i);
      if (simple && (!is_simple(h) || h.side_size(Side::A) % 2 == 0)) return false;
      const auto n = largest_drisko_n(h);
      if (n == 0 || (simple && 2 * n - 1 != h.side_size(Side::A))) return false;
      return max_degree(h, {Side::B, Side::C}) <= 2 * n - 1;
    };
    s.conclusion = [](const Instance& i) {
      const auto& h = std::get<TriHypergraph>(i);
      return nu_at_least(h, largest_drisko_n(h));
    };
    s.recheck = [](const Instance& i) {
      const auto& h = std::get<TriHypergraph>(i);
      return nu_at_least_recheck(h, largest_drisko_n(h));
    };
    s.check_exhaustive = [simple](const Params& p) {
      need_params(p, 3, "n, |B|, |C|");
      need(p[0] >= 1 && p[0] <= 3 && p[1] <= 4 && p[2] <= 4, "need 1 <= n <= 3 and sides at most 4");
      need_count(multiset_count(pair_fibers(p[1], p[2], p[0], !simple).size(), 2 * p[0] - 1));
    };
    s.check_random = [](const Params& p) {
      need_params(p, 1, "n");
      need(p[0] >= 1 && p[0] <= 5, "n must lie in [1, 5]");
    };
    s.exhaustive = [simple](const Params& p, const Emit& emit) {
      for_each_fibered_hypergraph(2 * p[0] - 1, p[1], p[2], pair_fibers(p[1], p[2], p[0], !simple),
                                  [&](TriHypergraph h) { return emit(std::move(h)); });
    };
    s.sample = [simple](Rng& rng, const Params& p) -> Instance {
      const auto n = p[0];
      return retry_sample(rng, [&](Rng& r) {
        const auto sb = r.between(n, 2 * n), sc = r.between(n, 2 * n);
        return random_capped_hypergraph({2 * n - 1, sb, sc}, n, 2 * n - 1, simple, r);
      });
    };
    cat.push_back(std::move(s));
  }

  // Simple d-regular, sides n: d <= n => nu >= (d-1)n/d; d >= 2n-1 => nu = n.
  {
    auto s = hyper_statement(StatementId::CONJ_FRACD_5_1, "CONJ_FRACD_5_1", StatementKind::conjecture);
    s.exhaustive_params = "n, d (every simple d-regular hypergraph with sides n)";
    s.random_params = "n, d";
    s.default_random = {4, 3};
    s.hypothesis = [](const Instance& i) {
      const auto& h = std::get<TriHypergraph>(i);
      const auto n = h.side_size(Side::A);
      if (n == 0 || !equal_sides(h) || !is_simple(h)) return false;
      const auto d = degree(h, Side::A, 0);
      return d >= 1 && is_regular(h, d) && (d <= n || d + 1 >= 2 * n);
    };
    auto judge = [](const Instance& i, bool recheck) {
      const auto& h = std::get<TriHypergraph>(i);
      const auto n = h.side_size(Side::A);
      const auto d = degree(h, Side::A, 0);
      // nu * d >= (d - 1) * n, i.e. nu >= ceil((d - 1) n / d); d >= 2n - 1 asks for n.
      std::size_t target = ((d - 1) * n + d - 1) / d;
      if (d + 1 >= 2 * n) target = n;
      return recheck ? nu_at_least_recheck(h, target) : nu_at_least(h, target);
    };
    s.conclusion = [judge](const Instance& i) { return judge(i, false); };
    s.recheck = [judge](const Instance& i) { return judge(i, true); };
    s.check_exhaustive = [](const Params& p) {
      need_params(p, 2, "n, d");
      need(p[0] >= 1 && p[0] <= 3 && p[1] >= 1 && p[1] <= p[0] * p[0], "need 1 <= n <= 3 and 1 <= d <= n^2");
    };
    s.check_random = [](const Params& p) {
      need_params(p, 2, "n, d");
      need(p[0] >= 1 && p[0] <= 7 && p[1] >= 1 && p[1] <= p[0] * p[0] && p[0] * p[1] <= 64,
           "need 1 <= n <= 7, 1 <= d <= n^2 and n*d <= 64");
    };
    s.exhaustive = [](const Params& p, const Emit& emit) {
      for_each_simple_regular(p[0], p[1], [&](TriHypergraph h) { return emit(std::move(h)); });
    };
    s.sample = [](Rng& rng, const Params& p) -> Instance {
      return retry_sample(rng, [&](Rng& r) { return random_simple_regular(p[0], p[1], r); });
    };
    cat.push_back(std::move(s));
  }

  // Simple, d = delta(A) >= Delta(B u C): nu >= (d-1)|A|/d, and nu = |A|
  // once delta(A) >= 2|A| - 1 as well.
  {
    auto s = hyper_statement(StatementId::CONJ_ASYM_5_2, "CONJ_ASYM_5_2", StatementKind::conjecture);
    s.exhaustive_params = "|A|, |B|, |C|, d (each a takes d distinct (b,c) pairs)";
    s.random_params = "|A|";
    s.default_random = {3};
    s.hypothesis = [](const Instance& i) {
      const auto& h = std::get<TriHypergraph>(i);
      if (!is_simple(h) || h.side_size(Side::A) == 0) return false;
      const auto d = min_degree(h, {Side::A});
      return d >= 1 && d >= max_degree(h, {Side::B, Side::C});
    };
    auto judge = [](const Instance& i, bool recheck) {
      const auto& h = std::get<TriHypergraph>(i);
      const auto k = h.side_size(Side::A);
      const auto d = min_degree(h, {Side::A});
      std::size_t target = ((d - 1) * k + d - 1) / d;
      if (d + 1 >= 2 * k) target = k;
      return recheck ? nu_at_least_recheck(h, target) : nu_at_least(h, target);
    };
    s.conclusion = [judge](const Instance& i) { return judge(i, false); };
    s.recheck = [judge](const Instance& i) { return judge(i, true); };
    s.check_exhaustive = [](const Params& p) {
      need_params(p, 4, "|A|, |B|, |C|, d");
      need(p[0] >= 1 && p[0] <= 4 && p[1] <= 4 && p[2] <= 4 && p[3] >= 1, "need 1 <= |A| <= 4, sides <= 4, d >= 1");
      need_count(multiset_count(pair_fibers(p[1], p[2], p[3], false).size(), p[0]));
    };
    s.check_random = [](const Params& p) {
      need_params(p, 1, "|A|");
      need(p[0] >= 1 && p[0] <= 6, "|A| must lie in [1, 6]");
    };
    s.exhaustive = [](const Params& p, const Emit& emit) {
      for_each_fibered_hypergraph(p[0], p[1], p[2], pair_fibers(p[1], p[2], p[3], false),
                                  [&](TriHypergraph h) { return emit(std::move(h)); });
    };
    s.sample = [](Rng& rng, const Params& p) -> Instance {
      const auto k = p[0];
      return retry_sample(rng, [&](Rng& r) {
        const auto sb = r.between(k, k + 2), sc = r.between(k, k + 2);
        const auto d = r.coin() ? r.between(1, std::min(sb * sc, k + 1)) : std::min(sb * sc, 2 * k - 1 + r.below(2));
        return random_capped_hypergraph({k, sb, sc}, d, d, true, r);
      });
    };
    cat.push_back(std::move(s));
  }

  // Simple, delta(A) >= 2 Delta(B u C) - 1 => nu = |A|.
  {
    auto s = hyper_statement(StatementId::REMARK_5_DOUBLE_DELTA, "REMARK_5_DOUBLE_DELTA", StatementKind::remark);
    s.exhaustive_params = "|A|, |B|, |C|, d (each a takes d distinct (b,c) pairs)";
    s.random_params = "|A|";
    s.default_random = {3};
    s.hypothesis = [](const Instance& i) {
      const auto& h = std::get<TriHypergraph>(i);
      if (!is_simple(h)) return false;
      const auto delta = min_degree(h, {Side::A});
      const auto big = max_degree(h, {Side::B, Side::C});
      return delta + 1 >= 2 * big;
    };
    s.conclusion = [](const Instance& i) {
      const auto& h = std::get<TriHypergraph>(i);
      return nu_at_least(h, h.side_size(Side::A));
    };
    s.recheck = [](const Instance& i) {
      const auto& h = std::get<TriHypergraph>(i);
      return nu_at_least_recheck(h, h.side_size(Side::A));
    };
    s.check_exhaustive = [](const Params& p) {
      need_params(p, 4, "|A|, |B|, |C|, d");
      need(p[0] >= 1 && p[0] <= 4 && p[1] <= 5 && p[2] <= 5 && p[3] >= 1, "need 1 <= |A| <= 4, sides <= 5, d >= 1");
      need_count(multiset_count(pair_fibers(p[1], p[2], p[3], false).size(), p[0]));
    };
    s.check_random = [](const Params& p) {
      need_params(p, 1, "|A|");
      need(p[0] >= 1 && p[0] <= 6, "|A| must lie in [1, 6]");
    };
    s.exhaustive = [](const Params& p, const Emit& emit) {
      for_each_fibered_hypergraph(p[0], p[1], p[2], pair_fibers(p[1], p[2], p[3], false),
                                  [&](TriHypergraph h) { return emit(std::move(h)); });
    };
    s.sample = [](Rng& rng, const Params& p) -> Instance {
      const auto k = p[0];
      return retry_sample(rng, [&](Rng& r) {
        const auto t = r.between(1, 3);
        const auto d = 2 * t - 1;
        const auto lo = (k * d + t - 1) / t;
        const auto sb = r.between(lo, lo + 2), sc = r.between(lo, lo + 2);
        return random_capped_hypergraph({k, sb, sc}, d, t, true, r);
      });
    };
    cat.push_back(std::move(s));
  }

  std::sort(cat.begin(), cat.end(), [](const Statement& x, const Statement& y) { return x.id < y.id; });
  return cat;
}

}  // namespace detail

inline const std::vector<Statement>& catalog() {
  static const std::vector<Statement> cat = detail::build_catalog();
  return cat;
}

inline const Statement& statement(StatementId id) { return catalog().at(static_cast<std::size_t>(id)); }

inline std::optional<StatementId> parse_statement_id(std::string_view name) {
  for (const auto& s : catalog()) {
    if (s.name == name) return s.id;
  }
  return std::nullopt;
}

struct RunOptions {
  unsigned jobs = 1;
  std::function<void(const Statement&, const Violation&)> on_violation;
};

namespace detail {

struct Outcome {
  bool hypothesis = false;
  Verdict verdict = Verdict::holds;
  Verdict recheck = Verdict::holds;
};

inline Outcome evaluate(const Statement& st, const Instance& inst) {
  Outcome o;
  o.hypothesis = st.hypothesis(inst);
  if (!o.hypothesis) return o;
  o.verdict = st.conclusion(inst);
  if (o.verdict == Verdict::fails) o.recheck = st.recheck(inst);
  return o;
}

// Evaluates a batch across `jobs` threads; results are stored by position so
// aggregation does not depend on scheduling.
inline std::vector<Outcome> evaluate_batch(const Statement& st, const std::vector<Instance>& batch, unsigned jobs) {
  std::vector<Outcome> out(batch.size());
  if (jobs <= 1 || batch.size() < 2) {
    for (std::size_t i = 0; i < batch.size(); ++i) out[i] = evaluate(st, batch[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < batch.size();) {
        try {
          out[i] = evaluate(st, batch[i]);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace detail

// Judges every instance `source` emits; `scope` is recorded in the report.
inline VerificationReport run_source(const Statement& st, const Scope& scope,
                                     const std::function<void(const Emit&)>& source, const RunOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.statement = st.id;
  r.name = std::string(st.name);
  r.kind = st.kind;
  r.scope = scope;

  std::vector<Instance> batch;
  std::uint64_t base = 0;
  auto flush = [&] {
    const auto outcomes = detail::evaluate_batch(st, batch, opt.jobs);
    for (std::size_t i = 0; i < batch.size(); ++i) {
      const auto& o = outcomes[i];
      ++r.instances_checked;
      if (!o.hypothesis) continue;
      ++r.hypothesis_hits;
      if (o.verdict == Verdict::undecided) {
        ++r.undecided;
      } else if (o.verdict == Verdict::fails) {
        if (o.recheck == Verdict::fails) {
          Violation v{base + i, to_json(batch[i])};
          if (opt.on_violation) opt.on_violation(st, v);
          r.violations.push_back(std::move(v));
        } else if (o.recheck == Verdict::holds) {
          ++r.inconsistent;
        } else {
          ++r.undecided;
        }
      }
    }
    base += batch.size();
    batch.clear();
  };
  constexpr std::size_t batch_size = 256;

  source([&](Instance inst) {
    batch.push_back(std::move(inst));
    if (batch.size() >= batch_size) flush();
    return true;
  });
  flush();
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// Runs a statement over an exhaustive or randomized scope without consulting
// the caps; `verify` is the checked entry point.
inline VerificationReport run_statement(const Statement& st, const Scope& scope, const RunOptions& opt = {}) {
  if (scope.mode == Scope::Mode::supplied) throw ScopeError("a supplied scope needs an instance source");
  return run_source(
      st, scope,
      [&](const Emit& emit) {
        if (scope.mode == Scope::Mode::exhaustive) {
          st.exhaustive(scope.params, emit);
          return;
        }
        for (std::uint64_t t = 0; t < scope.trials; ++t) {
          Rng rng(derive_seed(scope.seed, t));
          if (!emit(st.sample(rng, scope.params))) return;
        }
      },
      opt);
}

// Checks the scope against the statement's caps, then runs it.
inline VerificationReport verify(StatementId id, Scope scope, const RunOptions& opt = {}) {
  const auto& st = statement(id);
  if (scope.mode == Scope::Mode::supplied) throw ScopeError("a supplied scope needs an instance source");
  if (scope.mode == Scope::Mode::randomized && scope.params.empty()) scope.params = st.default_random;
  if (scope.mode == Scope::Mode::exhaustive) {
    st.check_exhaustive(scope.params);
  } else {
    st.check_random(scope.params);
  }
  return run_statement(st, scope, opt);
}

// Seeded counterexample search over a conjecture's random distribution.
inline VerificationReport hunt(StatementId id, std::uint64_t budget, std::uint64_t seed, Params params = {},
                               const RunOptions& opt = {}) {
  if (statement(id).kind == StatementKind::theorem) {
    throw ScopeError(std::string(statement(id).name) + " is a theorem; hunt targets conjectures and remarks");
  }
  return verify(id, Scope::randomized_scope(budget, seed, std::move(params)), opt);
}

// Both directions of the accommodating characterisation for one sequence.
// Above the threshold, families with |F_i| = a_i (exhaustive scope: every
// family inside K_{s,s}, params {s}; randomized: inside K_{n+1,n+1}) must all
// have a rainbow n-matching. Below it, the constructed family must have
// none; a violation records whichever failed.
inline VerificationReport check_accommodating(const std::vector<std::size_t>& a, std::size_t n, const Scope& scope) {
  require_size_sequence(a, n);
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.statement = StatementId::ACCOMMODATING_1_8;
  r.name = "ACCOMMODATING_1_8";
  r.kind = StatementKind::theorem;
  r.scope = scope;

  auto judge = [&](const MatchingFamily& f, bool expect_rainbow, std::uint64_t index) {
    ++r.instances_checked;
    ++r.hypothesis_hits;
    const auto v = detail::rainbow_at_least(f, n);
    if (v == Verdict::undecided) {
      ++r.undecided;
      return;
    }
    if ((v == Verdict::holds) == expect_rainbow) return;
    const auto again = detail::rainbow_at_least_recheck(f, n);
    if (again == v) {
      r.violations.push_back({index, to_json(f)});
    } else {
      ++r.inconsistent;
    }
  };

  if (meets_accommodating_threshold(a, n)) {
    if (scope.mode == Scope::Mode::exhaustive) {
      detail::need_params(scope.params, 1, "host side s");
      detail::need_count(family_count(scope.params[0], a));
      std::uint64_t index = 0;
      for_each_family(scope.params[0], a, [&](const MatchingFamily& f) {
        judge(f, true, index++);
        return true;
      });
    } else {
      for (std::uint64_t t = 0; t < scope.trials; ++t) {
        Rng rng(derive_seed(scope.seed, t));
        judge(random_family(n + 1, n + 1, a, rng), true, t);
      }
    }
  } else {
    bool fits = a.back() <= n;
    bool deficient = false;
    for (std::size_t k = 1; k <= n; ++k) deficient = deficient || a[k - 1] + 1 <= k;
    if (!fits || !deficient) throw std::invalid_argument("sequence outside the constructible range");
    const auto f = gen_accommodating_counterexample(a, n);
    bool sizes_ok = true;
    for (std::size_t i = 0; i < a.size(); ++i) sizes_ok = sizes_ok && f.members()[i].size() >= a[i];
    if (!sizes_ok) {
      ++r.instances_checked;
      ++r.hypothesis_hits;
      r.violations.push_back({0, to_json(f)});
    } else {
      judge(f, false, 0);
    }
  }
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// Shipped zero-violation scopes for every theorem.
inline std::vector<std::pair<StatementId, Scope>> theorem_suite() {
  using S = Scope;
  using I = StatementId;
  return {
      {I::DRISKO_1_5, S::exhaustive_scope({2, 3})},
      {I::DRISKO_1_5, S::exhaustive_scope({3, 3})},
      {I::DRISKO_1_5, S::randomized_scope(2000, 15, {3, 4})},
      {I::IMPROVED_1_7, S::exhaustive_scope({2, 3})},
      {I::IMPROVED_1_7, S::exhaustive_scope({3, 3})},
      {I::IMPROVED_1_7, S::randomized_scope(2000, 17, {3, 4})},
      {I::ACCOMMODATING_1_8, S::exhaustive_scope({2})},
      {I::ACCOMMODATING_1_8, S::exhaustive_scope({3})},
      {I::ALMOST_DRISKO_1_9, S::exhaustive_scope({3})},
      {I::ALMOST_DRISKO_1_9, S::randomized_scope(1000, 19, {3})},
      {I::CAMWAN_1_10, S::exhaustive_scope({5})},
      {I::CAMWAN_1_10, S::randomized_scope(200, 110, {6})},
      {I::STRONG_CAMWAN_1_12, S::exhaustive_scope({3})},
      {I::STRONG_CAMWAN_1_12, S::exhaustive_scope({4})},
      {I::STRONG_CAMWAN_1_12, S::randomized_scope(2000, 112, {8})},
      {I::TOPHALL_2_3, S::exhaustive_scope({5})},
      {I::TOPHALL_2_3, S::randomized_scope(300, 23, {7, 3})},
      {I::TOPHALL_DEF_2_4, S::exhaustive_scope({5})},
      {I::TOPHALL_DEF_2_4, S::randomized_scope(300, 24, {7, 4})},
      {I::ETA_GE_PSI_2_5, S::exhaustive_scope({7})},
      {I::ETA_GE_PSI_2_5, S::randomized_scope(500, 25, {7})},
      {I::LEMMA_3_1, S::exhaustive_scope({3, 4})},
      {I::LEMMA_3_1, S::randomized_scope(1000, 312, {2, 12})},
      {I::LEMMA_3_1, S::randomized_scope(1000, 313, {3, 12})},
  };
}

// Shipped counterexample hunts for the conjectures and the remark.
inline std::vector<std::pair<StatementId, Scope>> conjecture_suite() {
  using S = Scope;
  using I = StatementId;
  return {
      {I::CONJ_RBS_1_1, S::exhaustive_scope({4})},
      {I::CONJ_RBS_1_1, S::randomized_scope(500, 11, {6})},
      {I::CONJ_STEIN_1_2, S::exhaustive_scope({3})},
      {I::CONJ_STEIN_1_2, S::randomized_scope(500, 12, {5})},
      {I::CONJ_SYM_1_3, S::exhaustive_scope({3})},
      {I::CONJ_SYM_1_3, S::randomized_scope(10000, 13, {3})},
      {I::CONJ_AB_1_4, S::exhaustive_scope({3, 3})},
      {I::CONJ_AB_1_4, S::randomized_scope(10000, 14, {3, 4})},
      {I::CONJ_DRISKO_1_6, S::exhaustive_scope({2, 3, 3})},
      {I::CONJ_DRISKO_1_6, S::randomized_scope(1000, 16, {3})},
      {I::CONJ_FRACD_5_1, S::exhaustive_scope({3, 2})},
      {I::CONJ_FRACD_5_1, S::randomized_scope(500, 51, {4, 3})},
      {I::CONJ_FRACD_5_1, S::randomized_scope(500, 52, {3, 5})},
      {I::CONJ_ASYM_5_2, S::exhaustive_scope({2, 3, 3, 2})},
      {I::CONJ_ASYM_5_2, S::randomized_scope(1000, 53, {3})},
      {I::CONJ_GEN_5_3, S::exhaustive_scope({2, 3, 3})},
      {I::CONJ_GEN_5_3, S::randomized_scope(1000, 54, {3})},
      {I::REMARK_5_DOUBLE_DELTA, S::exhaustive_scope({2, 3, 3, 3})},
      {I::REMARK_5_DOUBLE_DELTA, S::randomized_scope(1000, 55, {3})},
  };
}

}  // namespace rainbow
