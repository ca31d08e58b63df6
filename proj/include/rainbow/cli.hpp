#pragma once

// Command-line front end. `dispatch` takes the arguments after the program
// name and never touches the process streams directly, so tests can drive it
// with string streams. Exit status: 0 success, 1 a violated theorem or an
// asserted feasibility that failed, 2 a usage error or malformed input.

#include <openssl/crypto.h>
#include <openssl/evp.h>

#include <CLI11.hpp>
#include <boost/version.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <streambuf>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "constructions.hpp"
#include "core.hpp"
#include "game.hpp"
#include "homology.hpp"
#include "io.hpp"
#include "matching.hpp"
#include "rng.hpp"
#include "verifier.hpp"

namespace rainbow::cli {

inline constexpr const char* version = "0.1.0";

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Sha256 {
 public:
  Sha256() : ctx_(EVP_MD_CTX_new(), &EVP_MD_CTX_free) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1) throw std::runtime_error("sha256 init failed");
  }

  void update(const char* data, std::size_t size) {
    if (size > 0) EVP_DigestUpdate(ctx_.get(), data, size);
  }

  std::string hex() const {
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> copy(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
    EVP_MD_CTX_copy_ex(copy.get(), ctx_.get());
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(copy.get(), md, &len);
    std::ostringstream s;
    for (unsigned i = 0; i < len; ++i) s << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return s.str();
  }

 private:
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx_;
};

// Forwards to another buffer while hashing everything written.
class DigestBuf : public std::streambuf {
 public:
  explicit DigestBuf(std::streambuf* target) : target_(target) {}
  const Sha256& digest() const { return digest_; }

 protected:
  int_type overflow(int_type ch) override {
    if (traits_type::eq_int_type(ch, traits_type::eof())) return traits_type::not_eof(ch);
    const char c = traits_type::to_char_type(ch);
    digest_.update(&c, 1);
    return target_->sputc(c);
  }
  std::streamsize xsputn(const char* s, std::streamsize n) override {
    digest_.update(s, static_cast<std::size_t>(n));
    return target_->sputn(s, n);
  }
  int sync() override { return target_->pubsync(); }

 private:
  std::streambuf* target_;
  Sha256 digest_;
};

// JSON-lines reader that hashes what it consumes and reports positions.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::optional<json> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      digest_.update(line.data(), line.size());
      digest_.update("\n", 1);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      try {
        return json::parse(line);
      } catch (const json::parse_error& e) {
        throw FormatError("line " + std::to_string(line_) + ", byte " + std::to_string(e.byte) + ": " + e.what());
      }
    }
    return std::nullopt;
  }

  template <class Parse>
  auto parse(const json& j, Parse&& fn) {
    try {
      return fn(j);
    } catch (const std::exception& e) {
      throw FormatError("line " + std::to_string(line_) + ": " + e.what());
    }
  }

  const Sha256& digest() const { return digest_; }

 private:
  std::istream& in_;
  Sha256 digest_;
  std::size_t line_ = 0;
};

struct Options {
  std::string format = "json";
  unsigned jobs = 1;
  std::string manifest;
  std::string input;
  std::optional<std::uint64_t> seed;

  std::optional<std::size_t> target;
  std::optional<std::size_t> bound;
  std::optional<std::size_t> deficiency;
  std::uint64_t node_budget = SearchLimits{}.node_budget;
  bool expect_feasible = false;

  std::string construction;
  std::vector<std::size_t> gen_params;
  std::optional<std::uint64_t> count;
  std::string mode;
  bool as_hypergraph = false;

  std::string statement;
  std::vector<std::size_t> exhaustive;
  std::optional<std::uint64_t> random_trials;
  std::vector<std::size_t> size;
  bool from_stdin = false;
  std::string certificates;
  std::optional<std::uint64_t> hunt_budget;

  bool theorems = false;
  bool conjectures = false;
};

struct Streams {
  LineReader& in;
  std::ostream& out;
  std::ostream& err;
  bool summary;
};

namespace detail {

inline std::string status_word(bool complete) { return complete ? "complete" : "budget_exceeded"; }

template <class Witness>
std::string solve_summary(const SolveResult<Witness>& r, std::optional<std::size_t> target) {
  std::string s = "optimum " + std::to_string(r.optimum);
  if (target) s += (r.feasible ? ", feasible at " : ", infeasible at ") + std::to_string(*target);
  return s + ", " + status_word(r.complete()) + ", " + std::to_string(r.nodes) + " nodes";
}

template <class Parse, class Solve>
int solve_lines(Streams& io, const Options& o, Parse&& parse, Solve&& solve) {
  int status = 0;
  while (auto j = io.in.next()) {
    auto instance = io.in.parse(*j, parse);
    const auto r = solve(instance);
    if (io.summary) {
      io.out << solve_summary(r, o.target) << '\n';
    } else {
      io.out << to_json(r).dump() << '\n';
    }
    if (o.expect_feasible && !r.feasible) status = 1;
  }
  return status;
}

template <class Parse, class Value>
int value_lines(Streams& io, const char* key, Parse&& parse, Value&& value) {
  while (auto j = io.in.next()) {
    auto instance = io.in.parse(*j, parse);
    const json v = value(instance);
    if (io.summary) {
      io.out << key << ' ' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    } else {
      io.out << json{{key, v}}.dump() << '\n';
    }
  }
  return 0;
}

inline std::uint64_t require_seed(const Options& o, const std::string& what) {
  if (!o.seed) throw UsageError(what + " is randomized and needs --seed");
  return *o.seed;
}

inline void need_gen_params(const Options& o, std::size_t count, const std::string& usage) {
  if (o.gen_params.size() != count) throw UsageError("usage: gen " + usage);
}

// Generated instances are always JSON lines so they can be piped on.
inline void emit_line(Streams& io, const json& j) { io.out << j.dump() << '\n'; }

template <class Make>
void emit_random(Streams& io, const Options& o, const std::string& what, Make&& make) {
  const auto seed = require_seed(o, what);
  for (std::uint64_t i = 0; i < o.count.value_or(1); ++i) {
    Rng rng(derive_seed(seed, i));
    emit_line(io, make(rng));
  }
}

inline json square_or_hypergraph(const LatinSquare& sq, bool as_hypergraph) {
  return as_hypergraph ? to_json(latin_to_hypergraph(sq)) : to_json(sq);
}

inline int gen(Streams& io, const Options& o) {
  const auto& c = o.construction;
  const auto& p = o.gen_params;
  if (c == "drisko-extremal") {
    need_gen_params(o, 1, "drisko-extremal <n>");
    emit_line(io, to_json(gen_drisko_extremal(p[0])));
  } else if (c == "accommodating") {
    if (p.size() < 2) throw UsageError("usage: gen accommodating <n> <a_1> ... <a_{2n-1}>");
    const std::vector<std::size_t> a(p.begin() + 1, p.end());
    emit_line(io, to_json(gen_accommodating_counterexample(a, p[0])));
  } else if (c == "p3") {
    need_gen_params(o, 1, "p3 <k>");
    emit_line(io, to_json(gen_p3_family(p[0])));
  } else if (c == "fracd-sharp") {
    need_gen_params(o, 1, "fracd-sharp <n>");
    emit_line(io, to_json(gen_fracd_sharp(p[0])));
  } else if (c == "double-a") {
    need_gen_params(o, 0, "double-a  (hypergraph lines on the input)");
    while (auto j = io.in.next()) emit_line(io, to_json(double_side_a(io.in.parse(*j, hypergraph_from_json))));
  } else if (c == "latin" || c == "row-latin") {
    need_gen_params(o, 1, c + " <n> [--mode cyclic|random|exhaustive]");
    const auto n = p[0];
    const bool row = c == "row-latin";
    const auto mode = o.mode.empty() ? std::string(row ? "random" : "cyclic") : o.mode;
    if (mode == "cyclic" && !row) {
      emit_line(io, square_or_hypergraph(cyclic_latin(n), o.as_hypergraph));
    } else if (mode == "random") {
      emit_random(io, o, "gen " + c, [&](Rng& rng) {
        return square_or_hypergraph(row ? random_row_latin(n, rng) : random_latin(n, rng), o.as_hypergraph);
      });
    } else if (mode == "exhaustive") {
      if (n > (row ? 4U : 5U)) throw UsageError("exhaustive " + c + " streams stop at order " + (row ? "4" : "5"));
      std::uint64_t left = o.count.value_or(~std::uint64_t{0});
      if (left == 0) return 0;
      auto visit = [&](const LatinSquare& sq) {
        emit_line(io, square_or_hypergraph(sq, o.as_hypergraph));
        return --left > 0;
      };
      if (row) {
        for_each_row_latin_normalized(n, visit);
      } else {
        for_each_latin_square(n, visit);
      }
    } else {
      throw UsageError("unknown --mode " + mode + " for " + c);
    }
  } else if (c == "theorem19") {
    need_gen_params(o, 1, "theorem19 <n>");
    emit_random(io, o, "gen theorem19", [&](Rng& rng) { return to_json(gen_theorem19_instance(p[0], rng)); });
  } else if (c == "family") {
    if (p.size() < 2) throw UsageError("usage: gen family <side> <size>...");
    const std::vector<std::size_t> sizes(p.begin() + 1, p.end());
    emit_random(io, o, "gen family", [&](Rng& rng) { return to_json(random_family(p[0], p[0], sizes, rng)); });
  } else if (c == "graph") {
    need_gen_params(o, 1, "graph <vertices>");
    emit_random(io, o, "gen graph", [&](Rng& rng) { return to_json(random_graph(p[0], 1, 2, rng)); });
  } else if (c == "degree-condition") {
    need_gen_params(o, 2, "degree-condition <l> <edge cap>");
    emit_random(io, o, "gen degree-condition", [&](Rng& rng) { return to_json(random_degree_condition_graph(p[0], p[1], rng)); });
  } else if (c == "partitioned") {
    need_gen_params(o, 2, "partitioned <vertices> <parts>");
    emit_random(io, o, "gen partitioned", [&](Rng& rng) {
      return to_json(random_partitioned_graph(p[0], p[1], p[1] <= p[0], rng));
    });
  } else {
    throw UsageError("unknown construction \"" + c +
                     "\"; expected drisko-extremal, accommodating, p3, fracd-sharp, double-a, latin, row-latin, "
                     "theorem19, family, graph, degree-condition or partitioned");
  }
  return 0;
}

inline std::string kind_word(StatementKind k) {
  switch (k) {
    case StatementKind::theorem: return "theorem";
    case StatementKind::conjecture: return "conjecture";
    case StatementKind::remark: return "remark";
  }
  return "";
}

inline std::string report_summary(const VerificationReport& r) {
  std::ostringstream s;
  s << r.name << " (" << kind_word(r.kind) << ") " << rainbow::to_json(r.scope).dump() << ": " << r.instances_checked
    << " checked, " << r.hypothesis_hits << " met the hypothesis, " << r.violations.size() << " violations";
  if (r.undecided) s << ", " << r.undecided << " undecided";
  if (r.inconsistent) s << ", " << r.inconsistent << " inconsistent";
  s << ", " << std::fixed << std::setprecision(3) << r.wall_time << " s";
  if (r.kind != StatementKind::theorem && r.violations.empty()) s << " (no counterexample found in budget)";
  s << (r.passed() ? "" : " FAILED");
  return s.str();
}

inline void print_report(Streams& io, const VerificationReport& r) {
  if (io.summary) {
    io.out << report_summary(r) << '\n';
  } else {
    io.out << r.to_json().dump() << '\n';
  }
  io.err << report_summary(r) << '\n';
}

inline RunOptions run_options(const Options& o) {
  RunOptions ro;
  ro.jobs = o.jobs;
  if (!o.certificates.empty()) {
    std::filesystem::create_directories(o.certificates);
    const std::filesystem::path dir = o.certificates;
    ro.on_violation = [dir](const Statement& st, const Violation& v) {
      std::ofstream f(dir / (std::string(st.name) + "-" + std::to_string(v.index) + ".json"));
      f << v.instance.dump() << '\n';
    };
  }
  return ro;
}

inline StatementId statement_of(const std::string& name) {
  const auto id = parse_statement_id(name);
  if (!id) throw UsageError("unknown statement id \"" + name + "\"");
  return *id;
}

inline int verify_verb(Streams& io, const Options& o) {
  const auto id = statement_of(o.statement);
  const int modes = int(!o.exhaustive.empty()) + int(o.random_trials.has_value()) + int(o.from_stdin);
  if (modes != 1) throw UsageError("verify needs exactly one of --exhaustive k..., --random t --seed s, --stdin");
  VerificationReport r;
  if (o.from_stdin) {
    const auto& st = statement(id);
    r = run_source(
        st, Scope::supplied_scope(),
        [&](const Emit& emit) {
          while (auto j = io.in.next()) {
            if (!emit(io.in.parse(*j, [&](const json& x) { return instance_from_json(st.domain, x); }))) return;
          }
        },
        run_options(o));
  } else if (o.random_trials) {
    r = verify(id, Scope::randomized_scope(*o.random_trials, require_seed(o, "verify --random"), o.size), run_options(o));
  } else {
    r = verify(id, Scope::exhaustive_scope(o.exhaustive), run_options(o));
  }
  print_report(io, r);
  return r.passed() ? 0 : 1;
}

inline int hunt_verb(Streams& io, const Options& o) {
  const auto id = statement_of(o.statement);
  if (!o.hunt_budget) throw UsageError("hunt needs --budget t");
  const auto r = hunt(id, *o.hunt_budget, require_seed(o, "hunt"), o.size, run_options(o));
  print_report(io, r);
  return r.passed() ? 0 : 1;
}

inline int suite_verb(Streams& io, const Options& o) {
  if (o.theorems == o.conjectures) throw UsageError("suite needs exactly one of --theorems, --conjectures");
  const auto runs = o.theorems ? theorem_suite() : conjecture_suite();
  bool passed = true;
  std::size_t violations = 0;
  const auto ro = run_options(o);
  for (const auto& [id, scope] : runs) {
    const auto r = verify(id, scope, ro);
    passed = passed && r.passed();
    violations += r.violations.size();
    print_report(io, r);
  }
  const json total{{"suite", o.theorems ? "theorems" : "conjectures"},
                   {"runs", runs.size()},
                   {"violations", violations},
                   {"passed", passed}};
  if (io.summary) {
    io.out << total["suite"].get<std::string>() << ": " << runs.size() << " runs, " << violations << " violations, "
           << (passed ? "passed" : "FAILED") << '\n';
  } else {
    io.out << total.dump() << '\n';
  }
  return passed ? 0 : 1;
}

inline SearchLimits limits_of(const Options& o) { return SearchLimits{o.node_budget}; }

inline int run_verb(const std::string& verb, Streams& io, const Options& o) {
  const auto limits = limits_of(o);
  const auto target = o.target.value_or(no_target);
  if (verb == "nu") {
    return solve_lines(io, o, hypergraph_from_json, [&](const TriHypergraph& h) { return max_matching_size(h, limits, target); });
  }
  if (verb == "rainbow") {
    return solve_lines(io, o, family_from_json,
                       [&](const MatchingFamily& f) { return find_rainbow_matching(f, target, limits); });
  }
  if (verb == "diagonal") {
    return solve_lines(io, o, square_from_json,
                       [&](const LatinSquare& sq) { return find_bounded_diagonal(sq, *o.bound, limits); });
  }
  if (verb == "transversal") {
    return solve_lines(io, o, partitioned_from_json, [&](const PartitionedGraph& p) {
      return find_independent_transversal(p, *o.deficiency, limits);
    });
  }
  if (verb == "psi") return value_lines(io, "psi", graph_from_json, [](const Graph& g) { return to_json(psi(g)); });
  if (verb == "psi-line") {
    return value_lines(io, "psi", bipartite_from_json, [](const BipartiteGraph& g) { return to_json(psi_line(g)); });
  }
  if (verb == "eta") {
    return value_lines(io, "eta", graph_from_json, [](const Graph& g) { return to_json(eta_of_graph(g)); });
  }
  if (verb == "betti") {
    return value_lines(io, "betti", graph_from_json,
                       [](const Graph& g) { return to_json(betti(independence_complex(g))); });
  }
  if (verb == "gen") return gen(io, o);
  if (verb == "verify") return verify_verb(io, o);
  if (verb == "hunt") return hunt_verb(io, o);
  if (verb == "suite") return suite_verb(io, o);
  throw UsageError("unknown verb " + verb);
}

inline std::string joined(const std::vector<std::string>& args) {
  std::string s = "rainbow";
  for (const auto& a : args) s += " " + a;
  return s;
}

}  // namespace detail

inline int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Options o;
  CLI::App app{"Rainbow matchings, hypergraph matchings and Meshulam's game: solvers, generators and a statement "
               "verifier. Instances are JSON lines."};
  app.name("rainbow");
  app.require_subcommand(1);
  app.set_version_flag("--version", version);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "summary"}));
  app.add_option("--jobs", o.jobs, "Worker threads across instances")->check(CLI::PositiveNumber);
  app.add_option("--manifest", o.manifest, "Write the run manifest to this file instead of standard error");
  app.add_option("--input", o.input, "Read JSON lines from this file instead of standard input");
  app.add_option("--seed", o.seed, "Seed for randomized verbs");

  auto solver = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    s->add_option("--budget", o.node_budget, "Search node budget");
    s->add_flag("--expect-feasible", o.expect_feasible, "Exit 1 unless every instance is feasible");
    return s;
  };
  solver("nu", "Maximum matching of 3-partite hypergraphs")->add_option("--target", o.target, "Stop at this size");
  solver("rainbow", "Maximum rainbow matching of matching families")
      ->add_option("--target", o.target, "Stop at this size");
  solver("diagonal", "Diagonal of a square with every symbol used at most b times")
      ->add_option("--bound", o.bound, "Symbol multiplicity bound")
      ->required();
  solver("transversal", "Independent set meeting all but d parts")
      ->add_option("--deficiency", o.deficiency, "Parts allowed to be missed")
      ->required();
  for (auto [name, help] : {std::pair{"psi", "Value of Meshulam's game on a graph"},
                            std::pair{"psi-line", "Game value on the line graph of a bipartite graph"},
                            std::pair{"eta", "Homological connectivity of the independence complex"},
                            std::pair{"betti", "Reduced Betti numbers of the independence complex"}}) {
    app.add_subcommand(name, help)->fallthrough();
  }

  auto* gen = app.add_subcommand("gen", "Emit constructions and instance streams as JSON lines");
  gen->fallthrough();
  gen->add_option("construction", o.construction, "Construction name")->required();
  gen->add_option("params", o.gen_params, "Size parameters");
  gen->add_option("--count", o.count, "Number of random instances (or a limit on exhaustive streams)");
  gen->add_option("--mode", o.mode, "cyclic, random or exhaustive (latin, row-latin)");
  gen->add_flag("--as-hypergraph", o.as_hypergraph, "Emit squares as 3-partite hypergraphs");

  auto* ver = app.add_subcommand("verify", "Check a catalog statement over a scope");
  ver->fallthrough();
  ver->add_option("id", o.statement, "Statement id")->required();
  ver->add_option("--exhaustive", o.exhaustive, "Exhaustive scope size parameters");
  ver->add_option("--random", o.random_trials, "Randomized trial count");
  ver->add_option("--size", o.size, "Size parameters of the random distribution");
  ver->add_flag("--stdin", o.from_stdin, "Judge the instances on the input");
  ver->add_option("--certificates", o.certificates, "Directory for violation certificates");

  auto* hun = app.add_subcommand("hunt", "Seeded counterexample search for a conjecture");
  hun->fallthrough();
  hun->add_option("id", o.statement, "Statement id")->required();
  hun->add_option("--budget", o.hunt_budget, "Trial count")->required();
  hun->add_option("--size", o.size, "Size parameters of the random distribution");
  hun->add_option("--certificates", o.certificates, "Directory for violation certificates");

  auto* sui = app.add_subcommand("suite", "Run the shipped scopes of the catalog");
  sui->fallthrough();
  sui->add_flag("--theorems", o.theorems, "Zero-violation theorem scopes");
  sui->add_flag("--conjectures", o.conjectures, "Shipped conjecture hunts");
  sui->add_option("--certificates", o.certificates, "Directory for violation certificates");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  std::string verb;
  for (auto* s : app.get_subcommands()) verb = s->get_name();

  std::ifstream file;
  if (!o.input.empty()) {
    file.open(o.input);
    if (!file) {
      err << "error: cannot open " << o.input << '\n';
      return 2;
    }
  }
  LineReader reader(o.input.empty() ? in : file);
  DigestBuf digest_buf(out.rdbuf());
  std::ostream digest_out(&digest_buf);
  Streams io{reader, digest_out, err, o.format == "summary"};

  int status = 0;
  try {
    status = detail::run_verb(verb, io, o);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    status = 2;
  } catch (const ScopeError& e) {
    err << "scope error: " << e.what() << '\n';
    status = 2;
  } catch (const FormatError& e) {
    err << "malformed input: " << e.what() << '\n';
    status = 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    status = 1;
  }
  digest_out.flush();

  const json manifest{
      {"command", detail::joined(args)},
      {"seed", o.seed ? json(*o.seed) : json(nullptr)},
      {"versions",
       {{"rainbow", version},
        {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." + std::to_string(NLOHMANN_JSON_VERSION_MINOR) +
                              "." + std::to_string(NLOHMANN_JSON_VERSION_PATCH)},
        {"boost", BOOST_LIB_VERSION},
        {"openssl", OpenSSL_version(OPENSSL_VERSION)},
        {"compiler", __VERSION__}}},
      {"input_digests", {{o.input.empty() ? "stdin" : o.input, reader.digest().hex()}}},
      {"output_digests", {{"stdout", digest_buf.digest().hex()}}},
      {"exit_status", status},
      {"wall_time", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
  if (o.manifest.empty()) {
    err << manifest.dump() << '\n';
  } else {
    std::ofstream m(o.manifest);
    m << manifest.dump(2) << '\n';
  }
  return status;
}

}  // namespace rainbow::cli
