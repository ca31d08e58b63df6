#pragma once

// JSON-line instance formats:
//   bipartite graph  {"left":m,"right":k,"edges":[[u,w],...]}
//   hypergraph       {"sides":[x,y,z],"edges":[[a,b,c],...]}   (repeats allowed)
//   family           {"graph":<bipartite graph>,"members":[[[u,w],...],...]}
//   square           {"n":k,"cells":[[...],...]}
//   graph            {"vertices":n,"edges":[[u,v],...]}  (a bipartite graph object is also accepted)
//   partitioned      {"graph":<graph>,"parts":[[v,...],...]}

#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "core.hpp"
#include "game.hpp"
#include "graph.hpp"
#include "homology.hpp"
#include "matching.hpp"

namespace rainbow {

using json = nlohmann::json;

class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline const json& field(const json& j, const char* name) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw FormatError(std::string("missing field \"") + name + "\"");
  return *it;
}

inline std::size_t count_of(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw FormatError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

inline Vertex index_of_json(const json& j) {
  return static_cast<Vertex>(count_of(j, "vertex index"));
}

inline const json& array_of(const json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array");
  return j;
}

template <class Fn>
decltype(auto) rethrowing(Fn&& fn) {
  try {
    return fn();
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(e.what());
  }
}

}  // namespace detail

inline json to_json(const Edge& e) { return json::array({e.u, e.w}); }
inline json to_json(const Triple& t) { return json::array({t.a, t.b, t.c}); }

inline json to_json(const GraphMatching& m) {
  json j = json::array();
  for (const auto& e : m) j.push_back(to_json(e));
  return j;
}

inline json to_json(const HyperMatching& m) {
  json j = json::array();
  for (const auto& t : m) j.push_back(to_json(t));
  return j;
}

inline json to_json(const BipartiteGraph& g) {
  return {{"left", g.left_size()}, {"right", g.right_size()}, {"edges", to_json(g.edges())}};
}

inline json to_json(const TriHypergraph& h) {
  return {{"sides", json::array({h.sides()[0], h.sides()[1], h.sides()[2]})}, {"edges", to_json(h.edges())}};
}

inline json to_json(const MatchingFamily& f) {
  json members = json::array();
  for (const auto& m : f.members()) members.push_back(to_json(m));
  return {{"graph", to_json(f.host())}, {"members", members}};
}

inline json to_json(const LatinSquare& sq) {
  json rows = json::array();
  for (std::size_t r = 0; r < sq.order(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < sq.order(); ++c) row.push_back(sq.at(r, c));
    rows.push_back(row);
  }
  return {{"n", sq.order()}, {"cells", rows}};
}

inline json to_json(const Graph& g) {
  json e = json::array();
  for (auto [u, v] : g.edges()) e.push_back(json::array({u, v}));
  return {{"vertices", g.size()}, {"edges", e}};
}

inline json to_json(const PartitionedGraph& p) {
  return {{"graph", to_json(p.graph())}, {"parts", p.parts()}};
}

inline json to_json(const Diagonal& d) { return d.columns(); }

inline json to_json(const RainbowMatching& r) {
  json j = json::array();
  for (const auto& p : r) j.push_back({{"member", p.member}, {"edge", to_json(p.edge)}});
  return j;
}

inline json to_json(const ExtendedNat& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

inline json to_json(const BettiVector& b) { return b.values(); }

inline BipartiteGraph bipartite_from_json(const json& j) {
  return detail::rethrowing([&] {
    const auto left = detail::count_of(detail::field(j, "left"), "left");
    const auto right = detail::count_of(detail::field(j, "right"), "right");
    std::vector<Edge> edges;
    for (const auto& e : detail::array_of(detail::field(j, "edges"), "edges")) {
      if (!e.is_array() || e.size() != 2) throw FormatError("bipartite edges are [u, w] pairs");
      edges.push_back({detail::index_of_json(e[0]), detail::index_of_json(e[1])});
    }
    return BipartiteGraph(left, right, std::move(edges));
  });
}

inline TriHypergraph hypergraph_from_json(const json& j) {
  return detail::rethrowing([&] {
    const auto& s = detail::array_of(detail::field(j, "sides"), "sides");
    if (s.size() != 3) throw FormatError("sides must list three sizes");
    std::array<std::size_t, 3> sides{detail::count_of(s[0], "side"), detail::count_of(s[1], "side"),
                                     detail::count_of(s[2], "side")};
    std::vector<Triple> edges;
    for (const auto& e : detail::array_of(detail::field(j, "edges"), "edges")) {
      if (!e.is_array() || e.size() != 3) throw FormatError("hyperedges are [a, b, c] triples");
      edges.push_back({detail::index_of_json(e[0]), detail::index_of_json(e[1]), detail::index_of_json(e[2])});
    }
    return TriHypergraph(sides, std::move(edges));
  });
}

inline MatchingFamily family_from_json(const json& j) {
  return detail::rethrowing([&] {
    auto host = bipartite_from_json(detail::field(j, "graph"));
    std::vector<GraphMatching> members;
    for (const auto& m : detail::array_of(detail::field(j, "members"), "members")) {
      GraphMatching f;
      for (const auto& e : detail::array_of(m, "member")) {
        if (!e.is_array() || e.size() != 2) throw FormatError("member edges are [u, w] pairs");
        f.push_back({detail::index_of_json(e[0]), detail::index_of_json(e[1])});
      }
      members.push_back(std::move(f));
    }
    return MatchingFamily(std::move(host), std::move(members));
  });
}

inline LatinSquare square_from_json(const json& j) {
  return detail::rethrowing([&] {
    const auto n = detail::count_of(detail::field(j, "n"), "n");
    const auto& rows = detail::array_of(detail::field(j, "cells"), "cells");
    if (rows.size() != n) throw FormatError("cells must have n rows");
    std::vector<Vertex> cells;
    for (const auto& r : rows) {
      if (!r.is_array() || r.size() != n) throw FormatError("every row must have n cells");
      for (const auto& x : r) cells.push_back(detail::index_of_json(x));
    }
    return LatinSquare(n, std::move(cells));
  });
}

inline Graph graph_from_json(const json& j) {
  return detail::rethrowing([&] {
    if (j.is_object() && j.contains("left")) return as_graph(bipartite_from_json(j));
    const auto n = detail::count_of(detail::field(j, "vertices"), "vertices");
    Graph g(n);
    for (const auto& e : detail::array_of(detail::field(j, "edges"), "edges")) {
      if (!e.is_array() || e.size() != 2) throw FormatError("graph edges are [u, v] pairs");
      g.add_edge(detail::index_of_json(e[0]), detail::index_of_json(e[1]));
    }
    return g;
  });
}

inline PartitionedGraph partitioned_from_json(const json& j) {
  return detail::rethrowing([&] {
    auto g = graph_from_json(detail::field(j, "graph"));
    std::vector<std::vector<Vertex>> parts;
    for (const auto& p : detail::array_of(detail::field(j, "parts"), "parts")) {
      std::vector<Vertex> part;
      for (const auto& v : detail::array_of(p, "part")) part.push_back(detail::index_of_json(v));
      parts.push_back(std::move(part));
    }
    return PartitionedGraph(std::move(g), std::move(parts));
  });
}

template <class Witness>
json to_json(const SolveResult<Witness>& r) {
  json j{{"optimum", r.optimum}, {"nodes", r.nodes}, {"feasible", r.feasible},
         {"status", r.complete() ? "complete" : "budget_exceeded"}};
  if constexpr (std::is_same_v<Witness, std::vector<Vertex>>) {
    j["witness"] = r.witness;
  } else {
    j["witness"] = to_json(r.witness);
  }
  return j;
}

inline json to_json(const SolveResult<Diagonal>& r) {
  json j{{"optimum", r.optimum}, {"nodes", r.nodes}, {"feasible", r.feasible},
         {"status", r.complete() ? "complete" : "budget_exceeded"}};
  j["witness"] = r.feasible ? to_json(r.witness) : json(nullptr);
  return j;
}

}  // namespace rainbow
