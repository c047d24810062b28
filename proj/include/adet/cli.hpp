#pragma once

// Text syntax for ideals and the command dispatcher behind the `adet`
// tool. `run` never writes to the process streams; it returns the exit
// code and the rendered output so it can be driven from tests.

#include <CLI11.hpp>

#include <cctype>
#include <chrono>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "adet/core.hpp"
#include "adet/error.hpp"
#include "adet/harness.hpp"
#include "adet/homology.hpp"
#include "adet/ideal.hpp"
#include "adet/pairmod.hpp"
#include "adet/stanley.hpp"

namespace adet {

inline constexpr int kMaxExponent = 1'000'000;

namespace detail {

class IdealLexer {
 public:
  explicit IdealLexer(const std::string& text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }
  /// A decimal number; values above `limit` are an overflow.
  long number(long limit, const char* what) {
    skip_space();
    const std::size_t start = pos_;
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > limit) {
        throw SyntaxError(std::string(what) + " overflow", start);
      }
      ++pos_;
    }
    if (pos_ == start) fail(std::string("expected ") + what);
    return v;
  }
  std::size_t position() const noexcept { return pos_; }
  [[noreturn]] void fail(const std::string& why) const { throw SyntaxError(why, pos_); }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses "x1^3, x1^2*x2". "0" is the zero ideal and "1" the unit ideal.
/// Without an explicit n the variable count is the highest index used.
inline MonomialIdeal parse_ideal(const std::string& text,
                                 std::optional<std::size_t> n = std::nullopt) {
  detail::IdealLexer lex(text);
  if (lex.done()) throw SyntaxError("empty ideal", 0);
  std::vector<std::vector<std::pair<std::size_t, int>>> monomials;
  std::size_t highest = 0;
  bool zero = false;
  do {
    std::vector<std::pair<std::size_t, int>> factors;
    if (lex.at_digit()) {
      const std::size_t at = lex.position();
      const long c = lex.number(1, "constant");
      if (c == 0) {
        zero = true;
      } else if (c != 1) {
        throw SyntaxError("only the constants 0 and 1 are allowed", at);
      }
    } else {
      do {
        lex.expect('x');
        const long idx = lex.number(static_cast<long>(kMaxVariables), "variable index");
        if (idx == 0) lex.fail("variables are numbered from x1");
        long e = 1;
        if (lex.accept('^')) e = lex.number(kMaxExponent, "exponent");
        factors.emplace_back(static_cast<std::size_t>(idx), static_cast<int>(e));
        highest = std::max(highest, static_cast<std::size_t>(idx));
      } while (lex.accept('*'));
    }
    monomials.push_back(std::move(factors));
  } while (lex.accept(','));
  if (!lex.done()) lex.fail("unexpected character");
  if (zero && monomials.size() > 1) {
    throw SyntaxError("0 cannot be combined with other generators", 0);
  }
  const std::size_t vars = n ? *n : std::max<std::size_t>(highest, 1);
  if (highest > vars) {
    throw DimensionError("variable x" + std::to_string(highest) + " used with n = " +
                         std::to_string(vars));
  }
  if (zero) return MonomialIdeal::zero(vars);
  std::vector<Multidegree> gens;
  for (const auto& factors : monomials) {
    Multidegree g(vars);
    for (const auto& [idx, e] : factors) {
      if (g[idx - 1] + e > kMaxExponent) throw SyntaxError("exponent overflow", 0);
      g[idx - 1] += e;
    }
    gens.push_back(g);
  }
  return MonomialIdeal::generated_by(vars, std::move(gens));
}

inline std::string print_monomial(const Multidegree& g) {
  std::string s;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i + 1);
    if (g[i] != 1) s += '^' + std::to_string(g[i]);
  }
  return s.empty() ? "1" : s;
}

/// Inverse of parse_ideal on canonical forms (given the same n).
inline std::string print_ideal(const MonomialIdeal& I) {
  if (I.is_zero()) return "0";
  std::string s;
  for (const auto& g : I.generators()) {
    if (!s.empty()) s += ", ";
    s += print_monomial(g);
  }
  return s;
}

/// Parses "3,1" into a multidegree.
inline Multidegree parse_multidegree(const std::string& text) {
  detail::IdealLexer lex(text);
  std::vector<int> v;
  do {
    v.push_back(static_cast<int>(lex.number(kMaxExponent, "integer")));
  } while (lex.accept(','));
  if (!lex.done()) lex.fail("unexpected character");
  return Multidegree(std::move(v));
}

struct CliOutcome {
  int exit_code = 0;
  std::string out;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int validation = 2;
inline constexpr int domain = 3;
inline constexpr int resource = 4;
inline constexpr int check_failed = 5;
}  // namespace exit_code

inline int exit_code_for(const Error& e) {
  const std::string_view c = e.code();
  if (c == "resource_error") return exit_code::resource;
  if (c == "domain_error" || c == "zero_module") return exit_code::domain;
  return exit_code::validation;
}

namespace detail {

struct CliOptions {
  std::string ideal_text;
  std::string ideal_json;
  std::string top_text;
  std::string bottom_text;
  std::string input_file;
  std::size_t n = 0;
  std::string box;
  std::string module = "quotient";
  std::string by;
  int level = 0;
  std::uint64_t characteristic = 0;
  std::string mode = "direct";
  std::string kind = "quasi";
  std::string sweep = "downward";
  std::uint64_t node_limit = SearchConfig().node_limit;
  double time_limit = 600;
  std::string suite;
  std::string family;
  std::string family_mode = "exhaustive";
  int max_exp = 2;
  std::size_t max_gens = 0;
  std::uint64_t seed = 1;
  std::size_t count = 100;
  unsigned workers = 1;
  bool jsonl = false;
  bool no_timing = false;
};

inline std::optional<std::size_t> explicit_n(const CliOptions& o) {
  if (o.n == 0) return std::nullopt;
  return o.n;
}

inline MonomialIdeal input_ideal(const CliOptions& o) {
  if (!o.ideal_json.empty()) {
    json j;
    try {
      j = json::parse(o.ideal_json);
    } catch (const json::parse_error& e) {
      throw SyntaxError(std::string("bad JSON ideal: ") + e.what(), e.byte);
    }
    return ideal_from_json(j);
  }
  if (o.ideal_text.empty()) throw SyntaxError("no ideal given (use --ideal)", 0);
  return parse_ideal(o.ideal_text, explicit_n(o));
}

inline std::optional<Multidegree> input_box(const CliOptions& o) {
  if (o.box.empty()) return std::nullopt;
  return parse_multidegree(o.box);
}

inline PairModule input_module(const CliOptions& o) {
  const auto box = input_box(o);
  if (o.module == "pair") {
    if (o.top_text.empty() || o.bottom_text.empty()) {
      throw SyntaxError("--module pair needs --top and --bottom", 0);
    }
    std::size_t n = o.n;
    if (n == 0) {
      n = std::max(parse_ideal(o.top_text).n(), parse_ideal(o.bottom_text).n());
    }
    return PairModule::make(parse_ideal(o.top_text, n), parse_ideal(o.bottom_text, n),
                            box);
  }
  const MonomialIdeal I = input_ideal(o);
  if (o.module == "quotient") return PairModule::quotient(I, box);
  if (o.module == "ideal") return PairModule::ideal(I, box);
  throw SyntaxError("unknown module kind '" + o.module + "'", 0);
}

inline SearchConfig search_config(const CliOptions& o) {
  SearchConfig cfg;
  cfg.node_limit = o.node_limit;
  if (!(o.time_limit > 0)) throw DomainError("time limit must be positive");
  cfg.time_limit = std::chrono::milliseconds(
      static_cast<std::int64_t>(o.time_limit * 1000.0 + 0.5));
  if (o.kind == "quasi") {
    cfg.kind = PartitionKind::quasi;
  } else if (o.kind == "stanley") {
    cfg.kind = PartitionKind::stanley;
  } else {
    throw SyntaxError("unknown partition kind '" + o.kind + "'", 0);
  }
  if (o.sweep == "downward") {
    cfg.sweep = SweepDirection::downward;
  } else if (o.sweep == "upward") {
    cfg.sweep = SweepDirection::upward;
  } else {
    throw SyntaxError("unknown sweep '" + o.sweep + "'", 0);
  }
  cfg.validate();
  return cfg;
}

inline json ideal_record(const MonomialIdeal& I) {
  json j = to_json(I);
  j["text"] = print_ideal(I);
  return j;
}

inline json module_record(const PairModule& M) {
  json j = to_json(M);
  j["top_text"] = print_ideal(M.top());
  j["bottom_text"] = print_ideal(M.bottom());
  j["grid_size"] = M.grid().size();
  return j;
}

inline json stanley_spaces_json(const std::vector<StanleySpace>& spaces) {
  json out = json::array();
  for (const auto& sp : spaces) {
    json z = json::array();
    for (std::size_t i : sp.free_variables()) z.push_back(i + 1);
    out.push_back({{"generator", to_json(sp.generator)}, {"free", z}});
  }
  return out;
}

/// Parses "n=3,max-exp=2,max-gens=3,mode=random,seed=7,count=50".
inline InstanceFamily parse_family(const std::string& spec, const CliOptions& o) {
  InstanceFamily fam;
  fam.n = o.n ? o.n : 2;
  fam.max_exp = o.max_exp;
  fam.max_gens = o.max_gens;
  fam.seed = o.seed;
  fam.count = o.count;
  fam.mode = o.family_mode == "random" ? InstanceFamily::Mode::random
                                       : InstanceFamily::Mode::exhaustive;
  if (o.family_mode != "random" && o.family_mode != "exhaustive") {
    throw SyntaxError("unknown family mode '" + o.family_mode + "'", 0);
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw SyntaxError("family entry '" + item + "' lacks '='", 0);
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    auto num = [&]() -> std::uint64_t {
      try {
        std::size_t used = 0;
        const auto v = std::stoull(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
      } catch (const std::exception&) {
        throw SyntaxError("family entry '" + item + "' is not numeric", 0);
      }
    };
    if (key == "n") {
      fam.n = num();
    } else if (key == "max-exp") {
      fam.max_exp = static_cast<int>(num());
    } else if (key == "max-gens") {
      fam.max_gens = num();
    } else if (key == "seed") {
      fam.seed = num();
    } else if (key == "count") {
      fam.count = num();
    } else if (key == "mode") {
      if (value == "random") {
        fam.mode = InstanceFamily::Mode::random;
      } else if (value == "exhaustive") {
        fam.mode = InstanceFamily::Mode::exhaustive;
      } else {
        throw SyntaxError("unknown family mode '" + value + "'", 0);
      }
    } else {
      throw SyntaxError("unknown family key '" + key + "'", 0);
    }
  }
  fam.validate();
  return fam;
}

/// Ideals from a file holding a JSON array, or one JSON object or text
/// ideal per line.
inline std::vector<MonomialIdeal> read_ideals(const std::string& path,
                                              const CliOptions& o) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open input file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  std::vector<MonomialIdeal> out;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw SyntaxError(std::string("bad JSON input: ") + e.what(), e.byte);
    }
    for (const auto& item : j) out.push_back(ideal_from_json(item));
    return out;
  }
  std::stringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos || line[p] == '#') continue;
    if (line[p] == '{') {
      try {
        out.push_back(ideal_from_json(json::parse(line)));
      } catch (const json::parse_error& e) {
        throw SyntaxError(std::string("bad JSON line: ") + e.what(), e.byte);
      }
    } else {
      out.push_back(parse_ideal(line, explicit_n(o)));
    }
  }
  return out;
}

inline json partition_record(const PairModule& M, const SearchResult& r) {
  return {{"value", r.value},
          {"witness", to_json(r.witness)},
          {"witness_valid", validate_partition(M, r.witness).valid},
          {"nodes", r.nodes}};
}

struct Emitted {
  json result;
  bool exact = true;
  bool check_failed = false;
  std::vector<json> records;  // streamed individually with --jsonl
};

inline Emitted run_command(const std::string& cmd, const CliOptions& o, json& input) {
  Emitted e;
  if (cmd == "info") {
    const MonomialIdeal I = input_ideal(o);
    input["ideal"] = ideal_record(I);
    const auto box = input_box(o);
    for (const char* kind : {"quotient", "ideal"}) {
      const PairModule M = std::string(kind) == "quotient" ? PairModule::quotient(I, box)
                                                           : PairModule::ideal(I, box);
      if (M.is_zero()) {
        e.result[kind] = {{"zero", true}};
        continue;
      }
      const HomologicalInvariants h = homological_invariants(M);
      e.result[kind] = {{"box", to_json(M.box())}, {"dim", h.dim},
                        {"sigma", sigma(M)},       {"depth", h.depth},
                        {"sreg", h.sreg},           {"projdim", h.projdim},
                        {"cohen_macaulay", h.cohen_macaulay}};
    }
    if (I.is_proper_nonzero()) {
      e.result["generic"] = is_generic(I);
      e.result["cogeneric"] = is_cogeneric(I);
    }
    return e;
  }
  if (cmd == "dual") {
    const MonomialIdeal I = input_ideal(o);
    input["ideal"] = ideal_record(I);
    const Multidegree a = o.box.empty() ? I.generator_join() : parse_multidegree(o.box);
    input["box"] = to_json(a);
    e.result["dual"] = ideal_record(dual_ideal(I, a));
    return e;
  }
  if (cmd == "slide") {
    const MonomialIdeal I = input_ideal(o);
    if (o.by.empty()) throw SyntaxError("slide needs --by", 0);
    const Multidegree b = parse_multidegree(o.by);
    input["ideal"] = ideal_record(I);
    input["by"] = to_json(b);
    e.result["slid"] = ideal_record(slide_ideal(I, b));
    return e;
  }
  if (cmd == "irr-decomp") {
    const MonomialIdeal I = input_ideal(o);
    input["ideal"] = ideal_record(I);
    json comps = json::array();
    for (const auto& c : irreducible_decomposition(I)) {
      comps.push_back({{"exponents", to_json(c.exponents)},
                       {"ideal", ideal_record(c.to_ideal())}});
    }
    e.result["components"] = comps;
    return e;
  }

  if (cmd == "check") {
    if (o.suite.empty()) throw SyntaxError("check needs --suite", 0);
    SuiteOptions so;
    so.family = parse_family(o.family, o);
    so.workers = o.workers;
    so.search = search_config(o);
    input["suite"] = o.suite;
    input["family"] = {{"n", so.family.n},
                       {"max_exp", so.family.max_exp},
                       {"max_gens", so.family.max_gens},
                       {"mode", so.family.mode == InstanceFamily::Mode::random ? "random"
                                                                               : "exhaustive"},
                       {"seed", so.family.seed},
                       {"count", so.family.count}};
    const auto reports = run_suite(o.suite, so);
    const SuiteSummary s = summarize(reports);
    json failures = json::array();
    for (const auto& r : s.failures) failures.push_back(r.to_json());
    e.result = {{"passed", s.passed},
                {"failed", s.failed},
                {"skipped", s.skipped},
                {"failures", failures}};
    for (const auto& r : reports) e.records.push_back(r.to_json());
    e.check_failed = !s.ok();
    e.exact = s.skipped == 0;
    return e;
  }
  if (cmd == "survey") {
    std::vector<MonomialIdeal> ideals;
    if (!o.input_file.empty()) {
      ideals = read_ideals(o.input_file, o);
      input["file"] = o.input_file;
    } else {
      const InstanceFamily fam = parse_family(o.family, o);
      ideals = enumerate_ideals(fam);
      input["family"] = o.family;
    }
    const Survey s = survey_conjecture(ideals, search_config(o), o.workers);
    json rows = json::array();
    for (const auto& r : s.rows) {
      rows.push_back(r.to_json());
      e.records.push_back(r.to_json());
    }
    json notable = json::array();
    for (const auto& r : s.notable) notable.push_back(r.to_json());
    e.result = {{"rows", rows}, {"notable", notable}, {"partial", s.partial}};
    e.exact = !s.partial;
    return e;
  }

  const PairModule M = input_module(o);
  input["module"] = module_record(M);
  if (cmd == "skeleton") {
    const PairModule K = skeleton(M, o.level);
    input["level"] = o.level;
    e.result["skeleton"] = module_record(K);
    e.result["zero"] = K.is_zero();
    if (!K.is_zero()) e.result["dim"] = module_dim(K);
    return e;
  }
  if (cmd == "betti") {
    if (o.characteristic >= (std::uint64_t{1} << 31)) {
      throw DomainError("field characteristic must be below 2^31");
    }
    const FieldSpec field(static_cast<std::uint32_t>(o.characteristic));
    const BettiTable T = betti_table(M, field);
    json entries = json::array();
    for (const auto& [key, v] : T.entries()) {
      entries.push_back({{"i", key.first}, {"degree", to_json(key.second)}, {"value", v}});
    }
    input["characteristic"] = o.characteristic;
    e.result = {{"entries", entries},
                {"projdim", T.projdim()},
                {"depth", static_cast<int>(M.n()) - T.projdim()},
                {"sreg", T.sreg()}};
    return e;
  }
  const SearchConfig cfg = search_config(o);
  input["kind"] = o.kind;
  if (cmd == "sdepth") {
    e.result = partition_record(M, sdepth(M, cfg));
    return e;
  }
  if (cmd == "shreg") {
    ShregMode mode;
    if (o.mode == "direct") {
      mode = ShregMode::direct;
    } else if (o.mode == "dual") {
      mode = ShregMode::dual;
    } else if (o.mode == "both") {
      mode = ShregMode::both;
    } else {
      throw SyntaxError("unknown shreg mode '" + o.mode + "'", 0);
    }
    input["mode"] = o.mode;
    e.result = partition_record(M, shreg(M, cfg, mode));
    return e;
  }
  if (cmd == "decomp") {
    const SearchResult r = sdepth(M, cfg);
    e.result = partition_record(M, r);
    e.result["stanley_spaces"] = stanley_spaces_json(refine_to_stanley(M, r.witness));
    return e;
  }
  throw SyntaxError("unknown command '" + cmd + "'", 0);
}

inline void add_module_options(CLI::App* sub, CliOptions& o) {
  sub->add_option("--ideal", o.ideal_text, "ideal in text form, e.g. \"x1^3, x1^2*x2\"");
  sub->add_option("--ideal-json", o.ideal_json, "ideal as {\"n\": .., \"gens\": [..]}");
  sub->add_option("--n", o.n, "number of variables");
  sub->add_option("--box", o.box, "box as comma-separated integers");
}

inline void add_search_options(CLI::App* sub, CliOptions& o) {
  sub->add_option("--module", o.module, "quotient | ideal | pair");
  sub->add_option("--top", o.top_text, "top ideal for --module pair");
  sub->add_option("--bottom", o.bottom_text, "bottom ideal for --module pair");
  sub->add_option("--kind", o.kind, "quasi | stanley");
  sub->add_option("--sweep", o.sweep, "downward | upward");
  sub->add_option("--node-limit", o.node_limit, "search node budget");
  sub->add_option("--time-limit", o.time_limit, "search time budget in seconds");
}

inline void add_family_options(CLI::App* sub, CliOptions& o) {
  sub->add_option("--n", o.n, "number of variables");
  sub->add_option("--max-exp", o.max_exp, "largest exponent");
  sub->add_option("--max-gens", o.max_gens, "largest generator count");
  sub->add_option("--family-mode", o.family_mode, "exhaustive | random");
  sub->add_option("--seed", o.seed, "random seed");
  sub->add_option("--count", o.count, "instances in random mode");
  sub->add_option("--family", o.family, "family as key=value list");
  sub->add_option("--workers", o.workers, "parallel workers");
  sub->add_option("--node-limit", o.node_limit, "search node budget");
  sub->add_option("--time-limit", o.time_limit, "search time budget in seconds");
  sub->add_option("--kind", o.kind, "quasi | stanley");
}

}  // namespace detail

/// Runs one command line. `args` excludes the program name.
inline CliOutcome run(const std::vector<std::string>& args) {
  detail::CliOptions o;
  CLI::App app{"Exact invariants of positively a-determined monomial modules", "adet"};
  app.require_subcommand(1);
  app.add_flag("--jsonl", o.jsonl, "one record per line");
  app.add_flag("--no-timing", o.no_timing, "omit timing from the output");
  app.fallthrough();

  auto* info = app.add_subcommand("info", "dim, sigma, depth and sreg of S/I and I");
  detail::add_module_options(info, o);
  auto* dual = app.add_subcommand("dual", "Alexander dual ideal");
  detail::add_module_options(dual, o);
  auto* slide = app.add_subcommand("slide", "slide an ideal");
  detail::add_module_options(slide, o);
  slide->add_option("--by", o.by, "shift vector");
  auto* irr = app.add_subcommand("irr-decomp", "irreducible decomposition");
  detail::add_module_options(irr, o);
  auto* skel = app.add_subcommand("skeleton", "skeleton module M^{<=l}");
  detail::add_module_options(skel, o);
  detail::add_search_options(skel, o);
  skel->add_option("--level", o.level, "skeleton level")->required();
  auto* betti = app.add_subcommand("betti", "multigraded Betti numbers");
  detail::add_module_options(betti, o);
  detail::add_search_options(betti, o);
  betti->add_option("--char", o.characteristic, "field characteristic (0 or prime)");
  auto* sd = app.add_subcommand("sdepth", "exact Stanley depth with witness");
  detail::add_module_options(sd, o);
  detail::add_search_options(sd, o);
  auto* sh = app.add_subcommand("shreg", "exact shreg with witness");
  detail::add_module_options(sh, o);
  detail::add_search_options(sh, o);
  sh->add_option("--mode", o.mode, "direct | dual | both");
  auto* dec = app.add_subcommand("decomp", "optimal interval partition and Stanley spaces");
  detail::add_module_options(dec, o);
  detail::add_search_options(dec, o);
  auto* check = app.add_subcommand("check", "run a verification suite");
  detail::add_family_options(check, o);
  check->add_option("--suite", o.suite, "suite name")->required();
  auto* survey = app.add_subcommand("survey", "tabulate depth and sdepth over a family");
  detail::add_family_options(survey, o);
  survey->add_option("--input", o.input_file, "file of ideals");

  CliOutcome res;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::Success&) {
    res.out = app.help();
    return res;
  } catch (const CLI::ParseError& e) {
    json err = {{"error", {{"code", "usage_error"}, {"message", e.what()}}}};
    res.exit_code = exit_code::validation;
    res.out = err.dump() + "\n";
    return res;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();

  json doc = {{"command", cmd}};
  json input = json::object();
  const auto start = std::chrono::steady_clock::now();
  auto elapsed_ms = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  };
  try {
    detail::Emitted e = detail::run_command(cmd, o, input);
    doc["input"] = input;
    doc["exact"] = e.exact;
    if (!o.no_timing) doc["timing_ms"] = elapsed_ms();
    if (o.jsonl && !e.records.empty()) {
      for (const auto& r : e.records) res.out += r.dump() + "\n";
      json tail = doc;
      tail["summary"] = e.result;
      tail["summary"].erase("rows");
      tail["summary"].erase("failures");
      res.out += tail.dump() + "\n";
    } else {
      doc["result"] = e.result;
      res.out = doc.dump(2) + "\n";
    }
    res.exit_code = e.check_failed ? exit_code::check_failed : exit_code::ok;
  } catch (const Error& err) {
    json payload = {{"code", std::string(err.code())}, {"message", err.what()}};
    if (const auto* r = dynamic_cast<const ResourceError*>(&err); r && r->has_bounds()) {
      payload["lower"] = r->lower();
      payload["upper"] = r->upper();
    }
    doc["input"] = input;
    doc["error"] = payload;
    res.exit_code = exit_code_for(err);
    res.out = doc.dump(2) + "\n";
  } catch (const json::exception& err) {
    doc["error"] = {{"code", "syntax_error"}, {"message", err.what()}};
    res.exit_code = exit_code::validation;
    res.out = doc.dump(2) + "\n";
  }
  return res;
}

}  // namespace adet
