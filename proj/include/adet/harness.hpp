#pragma once

// Instance generators and theorem checks.
//
// Every check takes an instance, computes both sides of an identity with
// independent code paths and returns a CheckReport. Reports carry a JSON
// encoding of the instance that `rerun_check` accepts, so any failure can
// be reproduced from its report alone.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "adet/core.hpp"
#include "adet/error.hpp"
#include "adet/homology.hpp"
#include "adet/ideal.hpp"
#include "adet/pairmod.hpp"
#include "adet/stanley.hpp"

namespace adet {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Encoding

inline json to_json(const Multidegree& d) { return json(d.coords()); }

inline json to_json(const MonomialIdeal& I) {
  json gens = json::array();
  for (const auto& g : I.generators()) gens.push_back(to_json(g));
  return {{"n", I.n()}, {"gens", gens}};
}

inline json to_json(const PairModule& M) {
  return {{"n", M.n()},
          {"top", to_json(M.top())["gens"]},
          {"bottom", to_json(M.bottom())["gens"]},
          {"box", to_json(M.box())}};
}

inline json to_json(const IntervalPartition& P) {
  json parts = json::array();
  for (const auto& p : P.parts) parts.push_back({to_json(p.lo), to_json(p.hi)});
  return {{"box", to_json(P.box)}, {"parts", parts}};
}

inline Multidegree multidegree_from_json(const json& j) {
  if (!j.is_array()) throw SyntaxError("expected an exponent list", 0);
  std::vector<int> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw SyntaxError("exponent is not an integer", 0);
    const auto e = x.get<std::int64_t>();
    if (e < 0 || e > 1'000'000) {
      throw SyntaxError("exponent " + std::to_string(e) + " out of range", 0);
    }
    v.push_back(static_cast<int>(e));
  }
  return Multidegree(std::move(v));
}

inline std::vector<Multidegree> generators_from_json(std::size_t n, const json& j) {
  if (!j.is_array()) throw SyntaxError("expected a generator list", 0);
  std::vector<Multidegree> gens;
  for (const auto& g : j) {
    Multidegree d = multidegree_from_json(g);
    if (d.size() != n) {
      throw DimensionError("generator " + d.to_string() + " has length " +
                           std::to_string(d.size()) + ", expected " +
                           std::to_string(n));
    }
    gens.push_back(std::move(d));
  }
  return gens;
}

inline MonomialIdeal ideal_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("gens")) {
    throw SyntaxError("ideal object needs \"n\" and \"gens\"", 0);
  }
  const auto n = j.at("n").get<std::size_t>();
  return MonomialIdeal::generated_by(n, generators_from_json(n, j.at("gens")));
}

inline PairModule module_from_json(const json& j) {
  const auto n = j.at("n").get<std::size_t>();
  return PairModule::make(
      MonomialIdeal::generated_by(n, generators_from_json(n, j.at("top"))),
      MonomialIdeal::generated_by(n, generators_from_json(n, j.at("bottom"))),
      multidegree_from_json(j.at("box")));
}

inline IntervalPartition partition_from_json(const json& j) {
  IntervalPartition P{multidegree_from_json(j.at("box")), {}};
  for (const auto& part : j.at("parts")) {
    P.parts.emplace_back(multidegree_from_json(part.at(0)),
                         multidegree_from_json(part.at(1)));
  }
  return P;
}

// ---------------------------------------------------------------------------
// Reports

enum class CheckStatus { pass, fail, skipped_resource };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped_resource:
      return "skipped-resource";
  }
  return "?";
}

struct CheckReport {
  std::string name;
  json instance;
  CheckStatus status = CheckStatus::pass;
  std::string details;
  json data = json::object();

  bool passed() const noexcept { return status == CheckStatus::pass; }

  json to_json() const {
    return {{"check", name},
            {"instance", instance},
            {"status", adet::to_string(status)},
            {"details", details},
            {"data", data}};
  }
};

namespace detail {

/// Collects the individual equalities of one check.
class Verdict {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      if (!failures_.empty()) failures_ += "; ";
      failures_ += what;
    }
  }
  template <typename A, typename B>
  void expect_eq(const A& lhs, const B& rhs, const std::string& what) {
    if (!(lhs == rhs)) {
      std::ostringstream os;
      os << what << ": " << lhs << " != " << rhs;
      expect(false, os.str());
    }
  }
  bool ok() const noexcept { return failures_.empty(); }
  const std::string& failures() const noexcept { return failures_; }

 private:
  std::string failures_;
};

template <typename Body>
CheckReport run_check(std::string name, json instance, Body&& body) {
  CheckReport rep;
  rep.name = std::move(name);
  rep.instance = std::move(instance);
  try {
    Verdict v;
    body(v, rep.data);
    rep.status = v.ok() ? CheckStatus::pass : CheckStatus::fail;
    rep.details = v.ok() ? "ok" : v.failures();
  } catch (const ResourceError& e) {
    rep.status = CheckStatus::skipped_resource;
    rep.details = e.what();
  }
  return rep;
}

inline json module_instance(const PairModule& M) { return {{"module", to_json(M)}}; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Random numbers. Our own bounded draw keeps streams identical across
// standard libraries.

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi) {
    if (hi < lo) throw DomainError("Rng::uniform: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<int>(x % span);
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// ---------------------------------------------------------------------------
// Instance families

struct InstanceFamily {
  enum class Mode { exhaustive, random };

  std::size_t n = 2;
  int max_exp = 2;
  std::size_t max_gens = 0;  // 0: unbounded in exhaustive mode
  Mode mode = Mode::exhaustive;
  std::uint64_t seed = 1;
  std::size_t count = 100;     // random mode
  std::size_t limit = 100000;  // exhaustive mode

  void validate() const {
    PolyContext ctx(n);
    if (max_exp < 0) throw DomainError("family: negative maximal exponent");
    if (mode == Mode::random && max_gens == 0) {
      throw DomainError("family: random mode needs a generator bound");
    }
  }
};

/// Distinct minimalized ideals, neither zero nor unit, in a deterministic
/// order. Exhaustive mode lists every antichain of nonzero exponent
/// vectors in [0, max_exp]^n with at most max_gens elements.
inline std::vector<MonomialIdeal> enumerate_ideals(const InstanceFamily& fam) {
  fam.validate();
  std::vector<MonomialIdeal> out;
  if (fam.max_exp == 0) return out;
  const std::size_t n = fam.n;
  if (fam.mode == InstanceFamily::Mode::exhaustive) {
    std::vector<Multidegree> points;
    for (const auto& d : enumerate_box(Multidegree::constant(n, fam.max_exp))) {
      if (!d.is_zero()) points.push_back(d);
    }
    const std::size_t cap = fam.max_gens ? fam.max_gens : points.size();
    std::vector<Multidegree> chosen;
    auto rec = [&](auto&& self, std::size_t from) -> void {
      for (std::size_t k = from; k < points.size(); ++k) {
        const Multidegree& p = points[k];
        bool comparable = false;
        for (const auto& c : chosen) {
          if (divides(c, p) || divides(p, c)) {
            comparable = true;
            break;
          }
        }
        if (comparable) continue;
        chosen.push_back(p);
        if (out.size() >= fam.limit) {
          throw ResourceError("enumerate_ideals: more than " +
                              std::to_string(fam.limit) + " instances");
        }
        out.push_back(MonomialIdeal::generated_by(n, chosen));
        if (chosen.size() < cap) self(self, k + 1);
        chosen.pop_back();
      }
    };
    rec(rec, 0);
    return out;
  }
  Rng rng(fam.seed);
  std::set<MonomialIdeal> seen;
  std::size_t attempts = 0;
  while (out.size() < fam.count) {
    if (++attempts > 1000 * (fam.count + 10)) {
      throw ResourceError("enumerate_ideals: family too small for " +
                          std::to_string(fam.count) + " distinct instances");
    }
    const int r = rng.uniform(1, static_cast<int>(fam.max_gens));
    std::vector<Multidegree> gens;
    for (int k = 0; k < r; ++k) {
      Multidegree g(n);
      for (std::size_t i = 0; i < n; ++i) g[i] = rng.uniform(0, fam.max_exp);
      gens.push_back(g);
    }
    MonomialIdeal I = MonomialIdeal::generated_by(n, std::move(gens));
    if (!I.is_proper_nonzero()) continue;
    if (seen.insert(I).second) out.push_back(std::move(I));
  }
  return out;
}

/// For every ideal both S/I and I, each over its default box.
inline std::vector<PairModule> quotients_and_ideals(
    const std::vector<MonomialIdeal>& ideals) {
  std::vector<PairModule> out;
  for (const auto& I : ideals) {
    out.push_back(PairModule::quotient(I));
    out.push_back(PairModule::ideal(I));
  }
  return out;
}

/// Cogeneric ideal from k random irreducible components whose nonzero
/// exponents are pairwise distinct in every coordinate.
inline MonomialIdeal random_cogeneric(Rng& rng, std::size_t n, int max_exp,
                                      int max_components) {
  PolyContext ctx(n);
  if (max_exp < 1 || max_components < 1) {
    throw DomainError("random_cogeneric: bounds must be positive");
  }
  for (;;) {
    const int k = rng.uniform(1, max_components);
    std::vector<Multidegree> comps(static_cast<std::size_t>(k), Multidegree(n));
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<int> pool;
      for (int e = 1; e <= max_exp; ++e) pool.push_back(e);
      for (auto& c : comps) {
        if (rng.uniform(0, 1) == 0 || pool.empty()) continue;
        const int pick = rng.uniform(0, static_cast<int>(pool.size()) - 1);
        c[i] = pool[static_cast<std::size_t>(pick)];
        pool.erase(pool.begin() + pick);
      }
    }
    std::vector<IrreducibleComponent> ic;
    bool ok = true;
    for (const auto& c : comps) {
      if (c.is_zero()) {
        ok = false;
        break;
      }
      ic.emplace_back(c);
    }
    if (!ok) continue;
    MonomialIdeal I = intersect_components(n, ic);
    if (I.is_proper_nonzero() && is_cogeneric(I)) return I;
  }
}

/// Generic ideal with at most max_gens generators and σ(I) < n.
inline MonomialIdeal random_generic(Rng& rng, std::size_t n, int max_exp,
                                    int max_gens) {
  PolyContext ctx(n);
  if (max_exp < 1 || max_gens < 1) {
    throw DomainError("random_generic: bounds must be positive");
  }
  for (;;) {
    const int k = rng.uniform(1, max_gens);
    std::vector<Multidegree> gens(static_cast<std::size_t>(k), Multidegree(n));
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<int> pool;
      for (int e = 1; e <= max_exp; ++e) pool.push_back(e);
      for (auto& g : gens) {
        if (rng.uniform(0, 1) == 0 || pool.empty()) continue;
        const int pick = rng.uniform(0, static_cast<int>(pool.size()) - 1);
        g[i] = pool[static_cast<std::size_t>(pick)];
        pool.erase(pool.begin() + pick);
      }
    }
    if (std::any_of(gens.begin(), gens.end(),
                    [](const Multidegree& g) { return g.is_zero(); })) {
      continue;
    }
    MonomialIdeal I = MonomialIdeal::generated_by(n, std::move(gens));
    if (is_generic(I) && sigma(I) < static_cast<int>(n)) return I;
  }
}

/// (x_{i_1}^{e_1}, ..., x_{i_c}^{e_c}) for every nonempty variable subset
/// and every exponent choice in [1, max_exp].
inline std::vector<MonomialIdeal> complete_intersections(std::size_t n,
                                                         int max_exp) {
  PolyContext ctx(n);
  std::vector<MonomialIdeal> out;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    const IndexSet vars = mask_to_indices(mask);
    for (const auto& e : enumerate_box(
             Multidegree::constant(vars.size(), max_exp - 1))) {
      std::vector<Multidegree> gens;
      for (std::size_t k = 0; k < vars.size(); ++k) {
        gens.push_back(Multidegree::unit_vector(n, vars[k], e[k] + 1));
      }
      out.push_back(MonomialIdeal::generated_by(n, std::move(gens)));
    }
  }
  return out;
}

/// A random triple c ≼ b ≼ a with a_i in [0, max_box].
inline IntervalModuleSpec random_interval_triple(Rng& rng, std::size_t n,
                                                 int max_box) {
  Multidegree a(n), b(n), c(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = rng.uniform(0, max_box);
    b[i] = rng.uniform(0, a[i]);
    c[i] = rng.uniform(0, b[i]);
  }
  return IntervalModuleSpec(c, b, a);
}

inline Multidegree random_multidegree(Rng& rng, std::size_t n, int max_entry) {
  Multidegree d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = rng.uniform(0, max_entry);
  return d;
}

// ---------------------------------------------------------------------------
// Checks

/// sreg(M) + depth(A_a(M)) = n.
inline CheckReport check_duality_depth(const PairModule& M) {
  return detail::run_check(
      "duality-depth", detail::module_instance(M), [&](auto& v, json& data) {
        require_nonzero(M, "check_duality_depth");
        const int r = sreg(M);
        const int d = depth(alexander_dual(M));
        data = {{"sreg", r}, {"depth_dual", d}};
        v.expect_eq(r + d, static_cast<int>(M.n()), "sreg(M) + depth(A(M))");
      });
}

/// shreg(M) + sdepth(A_a(M)) = n, shreg by the direct search.
inline CheckReport check_duality_sdepth(const PairModule& M,
                                        const SearchConfig& cfg = SearchConfig()) {
  return detail::run_check(
      "duality-sdepth", detail::module_instance(M), [&](auto& v, json& data) {
        require_nonzero(M, "check_duality_sdepth");
        const SearchResult h = shreg_direct(M, cfg);
        const PairModule D = alexander_dual(M);
        const SearchResult s = sdepth(D, cfg);
        data = {{"shreg", h.value}, {"sdepth_dual", s.value}};
        v.expect(static_cast<bool>(validate_partition(M, h.witness)),
                 "shreg witness invalid");
        v.expect(static_cast<bool>(validate_partition(D, s.witness)),
                 "sdepth witness invalid");
        v.expect_eq(partition_shreg(h.witness), h.value, "shreg witness value");
        v.expect_eq(partition_sdepth(s.witness), s.value, "sdepth witness value");
        v.expect_eq(h.value + s.value, static_cast<int>(M.n()),
                    "shreg(M) + sdepth(A(M))");
      });
}

/// The slide M^{◁b} has the same dim, depth, sreg, sdepth and shreg, and
/// β_{i,d}(M) = β_{i,d◁b}(M^{◁b}).
inline CheckReport check_slide_invariance(const PairModule& M, const Multidegree& b,
                                          const SearchConfig& cfg = SearchConfig()) {
  json inst = detail::module_instance(M);
  inst["b"] = to_json(b);
  return detail::run_check("slide", inst, [&](auto& v, json& data) {
    require_nonzero(M, "check_slide_invariance");
    const PairModule N = slide_pair(M, b);
    const BettiTable TM = betti_table(M);
    const BettiTable TN = betti_table(N);
    BettiTable moved(N.n(), N.box(), TN.field());
    for (const auto& [key, value] : TM.entries()) {
      moved.set(key.first, slide_vec(key.second, b), value);
    }
    v.expect(moved == TN, "Betti tables differ after reindexing");
    v.expect_eq(module_dim(M), module_dim(N), "dim");
    v.expect_eq(static_cast<int>(M.n()) - TM.projdim(),
                static_cast<int>(N.n()) - TN.projdim(), "depth");
    v.expect_eq(TM.sreg(), TN.sreg(), "sreg");
    const int sdM = sdepth(M, cfg).value;
    const int sdN = sdepth(N, cfg).value;
    v.expect_eq(sdM, sdN, "sdepth");
    const int shM = shreg_direct(M, cfg).value;
    const int shN = shreg_direct(N, cfg).value;
    v.expect_eq(shM, shN, "shreg");
    data = {{"slid_box", to_json(N.box())},
            {"sdepth", sdM},
            {"shreg", shM},
            {"betti_entries", TM.entries().size()}};
  });
}

namespace detail {

/// sdepth M ≥ t, with sdepth(0) = ∞.
inline bool sdepth_reaches(const PairModule& M, int t, const SearchConfig& cfg) {
  if (M.is_zero()) return true;
  return sdepth_at_least(M, t, cfg).has_value();
}

}  // namespace detail

/// depth M = max{l : M^{≤l} CM}, dim M^{≤depth} = depth, every nonzero
/// layer is CM with sdepth equal to its level, and sdepth M ≥ t iff
/// sdepth M^{≤t} ≥ t for 0 ≤ t ≤ dim M.
inline CheckReport check_skeletons(const PairModule& M,
                                   const SearchConfig& cfg = SearchConfig()) {
  return detail::run_check(
      "skeletons", detail::module_instance(M), [&](auto& v, json& data) {
        require_nonzero(M, "check_skeletons");
        const int n = static_cast<int>(M.n());
        const int d = depth(M);
        const int dim = module_dim(M);
        int best_cm = -1;
        for (int l = 0; l <= dim; ++l) {
          const PairModule K = skeleton(M, l);
          if (!K.is_zero() && is_cohen_macaulay(K)) best_cm = l;
        }
        v.expect_eq(best_cm, d, "max CM skeleton level vs depth");
        const PairModule Kd = skeleton(M, d);
        v.expect(!Kd.is_zero(), "skeleton at depth level is zero");
        if (!Kd.is_zero()) v.expect_eq(module_dim(Kd), d, "dim of depth skeleton");
        for (int l = 0; l <= n; ++l) {
          const PairModule L = l == 0 ? skeleton(M, 0) : layer(M, l);
          if (L.is_zero()) continue;
          const std::string tag = "layer " + std::to_string(l);
          const HomologicalInvariants h = homological_invariants(L);
          v.expect_eq(h.dim, l, tag + " dim");
          v.expect(h.cohen_macaulay, tag + " not CM");
          v.expect_eq(sdepth(L, cfg).value, l, tag + " sdepth");
        }
        const int sd = sdepth(M, cfg).value;
        for (int t = 0; t <= dim; ++t) {
          const bool lhs = sd >= t;
          const bool rhs = detail::sdepth_reaches(skeleton(M, t), t, cfg);
          v.expect(lhs == rhs, "skeleton equivalence at t = " + std::to_string(t));
        }
        data = {{"depth", d}, {"dim", dim}, {"sdepth", sd}};
      });
}

/// On 0 → M^{>i-1}/M^{>i} → M^{≤i} → M^{≤i-1} → 0: sdepth of the middle
/// is at least the min of the ends and shreg at most the max. Also
/// sdepth(M^{≤depth}) ≥ depth iff sdepth M ≥ depth.
inline CheckReport check_exact_sequences(const PairModule& M,
                                         const SearchConfig& cfg = SearchConfig()) {
  return detail::run_check(
      "exact-sequences", detail::module_instance(M), [&](auto& v, json& data) {
        require_nonzero(M, "check_exact_sequences");
        const int n = static_cast<int>(M.n());
        struct Inv {
          bool zero;
          int sdepth;
          int shreg;
        };
        auto inv = [&](const PairModule& X) {
          if (X.is_zero()) return Inv{true, 0, 0};
          return Inv{false, sdepth(X, cfg).value, shreg_direct(X, cfg).value};
        };
        std::vector<Inv> skel;
        for (int l = 0; l <= n; ++l) skel.push_back(inv(skeleton(M, l)));
        for (int i = 1; i <= n; ++i) {
          const Inv L = inv(layer(M, i));
          const Inv& mid = skel[static_cast<std::size_t>(i)];
          const Inv& right = skel[static_cast<std::size_t>(i - 1)];
          if (mid.zero) continue;
          int lo = n;
          int hi = 0;
          for (const Inv* end : {&L, &right}) {
            if (end->zero) continue;
            lo = std::min(lo, end->sdepth);
            hi = std::max(hi, end->shreg);
          }
          const std::string tag = " at level " + std::to_string(i);
          v.expect(mid.sdepth >= lo, "sdepth below min of ends" + tag);
          v.expect(mid.shreg <= hi, "shreg above max of ends" + tag);
        }
        const int d = depth(M);
        const int sd = sdepth(M, cfg).value;
        const bool lhs = detail::sdepth_reaches(skeleton(M, d), d, cfg);
        v.expect(lhs == (sd >= d), "depth skeleton reduction");
        data = {{"depth", d}, {"sdepth", sd}};
      });
}

/// sdepth(S/I) ≥ depth(S/I) for cogeneric I, and dually shreg(I*) ≤
/// sreg(I*) for the generic ideal I* = A_a(S/I).
inline CheckReport check_cogeneric_conjecture(const MonomialIdeal& I,
                                              const SearchConfig& cfg = SearchConfig()) {
  json inst = {{"ideal", to_json(I)}};
  if (!is_cogeneric(I)) {
    CheckReport rep;
    rep.name = "cogeneric";
    rep.instance = inst;
    rep.status = CheckStatus::skipped_resource;
    rep.details = "ideal is not cogeneric";
    return rep;
  }
  return detail::run_check("cogeneric", inst, [&](auto& v, json& data) {
    const PairModule Q = PairModule::quotient(I);
    const int d = depth(Q);
    const auto witness = sdepth_at_least(Q, d, cfg);
    v.expect(witness.has_value(), "sdepth(S/I) < depth(S/I)");
    if (witness) {
      v.expect(static_cast<bool>(validate_partition(Q, *witness)),
               "sdepth witness invalid");
    }
    const PairModule G = alexander_dual(Q);
    v.expect(is_generic(G.top()), "dual ideal is not generic");
    const int r = sreg(G);
    const auto low = shreg_at_most(G, r, cfg);
    v.expect(low.has_value(), "shreg(I*) > sreg(I*)");
    data = {{"depth", d}, {"dual_ideal", to_json(G.top())}, {"sreg_dual", r}};
  });
}

/// Data of the construction that lowers σ by one step: I' is the slide
/// of I by (r, ..., r), r the number of generators; m_1, ..., m_t are the
/// generators of support size s = σ(I') in descending lexicographic
/// order, followed by the others; J = Σ_i (x_j^i m_i | j ∉ supp m_i) +
/// (m_{t+1}, ..., m_r).
struct GenericConstruction {
  MonomialIdeal original;
  MonomialIdeal slid;
  MonomialIdeal J;
  int r = 0;
  int s = 0;
  int t = 0;
  std::vector<Multidegree> ordered;  // m_1, ..., m_r in I'
};

inline GenericConstruction construct_generic_J(const MonomialIdeal& I) {
  if (!I.is_proper_nonzero()) throw DomainError("construct_generic_J: zero or unit ideal");
  if (!is_generic(I)) throw DomainError("construct_generic_J: ideal is not generic");
  const std::size_t n = I.n();
  if (sigma(I) >= static_cast<int>(n)) {
    throw DomainError("construct_generic_J: need σ(I) < n");
  }
  GenericConstruction g;
  g.original = I;
  g.r = static_cast<int>(I.num_generators());
  g.slid = slide_ideal(I, Multidegree::constant(n, g.r));
  g.s = sigma(g.slid);
  std::vector<Multidegree> low, high;
  for (const auto& m : g.slid.generators()) {
    (supp_count(m) == g.s ? low : high).push_back(m);
  }
  std::sort(low.begin(), low.end(), std::greater<>());
  std::sort(high.begin(), high.end(), std::greater<>());
  g.t = static_cast<int>(low.size());
  g.ordered = low;
  g.ordered.insert(g.ordered.end(), high.begin(), high.end());
  std::vector<Multidegree> gens;
  for (int i = 1; i <= g.t; ++i) {
    const Multidegree& m = g.ordered[static_cast<std::size_t>(i - 1)];
    for (std::size_t j = 0; j < n; ++j) {
      if (m[j] != 0) continue;
      Multidegree x = m;
      x[j] = i;
      gens.push_back(x);
    }
  }
  gens.insert(gens.end(), high.begin(), high.end());
  g.J = MonomialIdeal::generated_by(n, std::move(gens));
  return g;
}

inline json to_json(const GenericConstruction& g) {
  json ordered = json::array();
  for (const auto& m : g.ordered) ordered.push_back(to_json(m));
  return {{"slid", to_json(g.slid)}, {"J", to_json(g.J)}, {"r", g.r},
          {"s", g.s},                {"t", g.t},          {"ordered", ordered}};
}

/// The stated properties of J: generic, J ⊆ I', σ(J) = σ(I') + 1.
inline CheckReport check_generic_J_guarantees(const MonomialIdeal& I) {
  return detail::run_check(
      "generic-j-guarantees", {{"ideal", to_json(I)}}, [&](auto& v, json& data) {
        const GenericConstruction g = construct_generic_J(I);
        data = to_json(g);
        const bool generic = is_generic(g.J);
        data["J_generic"] = generic;
        v.expect(generic, "J is not generic");
        v.expect(g.slid.contains_ideal(g.J), "J is not contained in I'");
        v.expect_eq(sigma(g.J), g.s + 1, "σ(J) vs σ(I') + 1");
      });
}

/// Builds the interval partition of I'/J part by part: for every support
/// F of size s, and every b ≼ a_F (the join of the m_i with support F)
/// with x^b in (m_i | supp m_i = F), the part [b, b'] where b'_i = b_i on
/// F (open up to the box where b_i = (a_F)_i) and l(b) - 1 off F, with
/// l(b) the least i such that m_i divides x^b. Checks the partition,
/// partition_shreg = s and sreg(I'/J) = s.
inline CheckReport check_IJ_layer(const MonomialIdeal& I) {
  return detail::run_check(
      "ij-layer", {{"ideal", to_json(I)}}, [&](auto& v, json& data) {
        const GenericConstruction g = construct_generic_J(I);
        const std::size_t n = I.n();
        const PairModule M = PairModule::make(g.slid, g.J);
        const Multidegree& A = M.box();
        std::map<std::uint32_t, std::vector<int>> by_support;  // F -> indices i
        for (int i = 1; i <= g.t; ++i) {
          by_support[supp_mask(g.ordered[static_cast<std::size_t>(i - 1)])]
              .push_back(i);
        }
        IntervalPartition P{A, {}};
        for (const auto& [F, idx] : by_support) {
          Multidegree aF(n);
          for (int i : idx) aF = join(aF, g.ordered[static_cast<std::size_t>(i - 1)]);
          for (const auto& b : enumerate_box(aF)) {
            int l = 0;
            for (int i : idx) {
              if (divides(g.ordered[static_cast<std::size_t>(i - 1)], b)) {
                l = i;
                break;
              }
            }
            if (l == 0) continue;
            Multidegree hi(n);
            bool fits = true;
            for (std::size_t k = 0; k < n; ++k) {
              if (F & (std::uint32_t{1} << k)) {
                hi[k] = b[k] == aF[k] ? A[k] : b[k];
              } else {
                hi[k] = l - 1;
                if (hi[k] > A[k]) fits = false;
              }
            }
            if (!fits) {
              v.expect(false, "part above " + b.to_string() + " leaves the box");
              continue;
            }
            P.parts.emplace_back(b, hi);
          }
        }
        P = P.canonical();
        const PartitionCheck pc = validate_partition(M, P);
        v.expect(pc.valid, pc.valid ? "" : "partition invalid: " + pc.problems.front());
        if (!P.parts.empty()) {
          v.expect_eq(partition_shreg(P), g.s, "partition shreg vs s");
        }
        const int r = sreg(M);
        v.expect_eq(r, g.s, "sreg(I'/J) vs s");
        data = to_json(g);
        data["sreg"] = r;
        data["parts"] = P.parts.size();
      });
}

/// sdepth(I^{◁b}) ≥ depth(I^{◁b}) for I with linear quotients.
inline CheckReport check_linear_quotient_slides(const MonomialIdeal& I,
                                                const Multidegree& b,
                                                const SearchConfig& cfg = SearchConfig()) {
  json inst = {{"ideal", to_json(I)}, {"b", to_json(b)}};
  if (!has_linear_quotient(I)) {
    CheckReport rep;
    rep.name = "linear-quotient";
    rep.instance = inst;
    rep.status = CheckStatus::skipped_resource;
    rep.details = "ideal has no linear quotient";
    return rep;
  }
  return detail::run_check("linear-quotient", inst, [&](auto& v, json& data) {
    const PairModule N = PairModule::ideal(slide_ideal(I, b));
    const int d = depth(N);
    v.expect(sdepth_at_least(N, d, cfg).has_value(), "sdepth below depth");
    data = {{"depth", d}};
  });
}

/// Re-runs a check from the instance encoding stored in its report.
inline CheckReport rerun_check(const std::string& name, const json& instance) {
  if (name == "duality-depth") {
    return check_duality_depth(module_from_json(instance.at("module")));
  }
  if (name == "duality-sdepth") {
    return check_duality_sdepth(module_from_json(instance.at("module")));
  }
  if (name == "slide") {
    return check_slide_invariance(module_from_json(instance.at("module")),
                                  multidegree_from_json(instance.at("b")));
  }
  if (name == "skeletons") {
    return check_skeletons(module_from_json(instance.at("module")));
  }
  if (name == "exact-sequences") {
    return check_exact_sequences(module_from_json(instance.at("module")));
  }
  if (name == "cogeneric") {
    return check_cogeneric_conjecture(ideal_from_json(instance.at("ideal")));
  }
  if (name == "generic-j-guarantees") {
    return check_generic_J_guarantees(ideal_from_json(instance.at("ideal")));
  }
  if (name == "ij-layer") {
    return check_IJ_layer(ideal_from_json(instance.at("ideal")));
  }
  if (name == "linear-quotient") {
    return check_linear_quotient_slides(ideal_from_json(instance.at("ideal")),
                                        multidegree_from_json(instance.at("b")));
  }
  throw DomainError("unknown check '" + name + "'");
}

inline CheckReport rerun_check(const CheckReport& rep) {
  return rerun_check(rep.name, rep.instance);
}

// ---------------------------------------------------------------------------
// Parallel evaluation

/// f(items[k]) for every k; results stay in input order.
template <typename T, typename F>
auto parallel_map(const std::vector<T>& items, F&& f, unsigned workers = 1)
    -> std::vector<decltype(f(items.front()))> {
  using R = decltype(f(items.front()));
  std::vector<std::optional<R>> slots(items.size());
  if (workers <= 1 || items.size() < 2) {
    for (std::size_t k = 0; k < items.size(); ++k) slots[k] = f(items[k]);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    const unsigned count =
        std::min<unsigned>(workers, static_cast<unsigned>(items.size()));
    for (unsigned w = 0; w < count; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < items.size(); k = next++) {
          try {
            slots[k] = f(items[k]);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
  }
  std::vector<R> out;
  out.reserve(items.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

// ---------------------------------------------------------------------------
// Suites and surveys

struct SuiteSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::vector<CheckReport> failures;

  void add(const CheckReport& r) {
    switch (r.status) {
      case CheckStatus::pass:
        ++passed;
        break;
      case CheckStatus::fail:
        ++failed;
        failures.push_back(r);
        break;
      case CheckStatus::skipped_resource:
        ++skipped;
        break;
    }
  }
  bool ok() const noexcept { return failed == 0; }
  std::size_t total() const noexcept { return passed + failed + skipped; }
};

inline SuiteSummary summarize(const std::vector<CheckReport>& reports) {
  SuiteSummary s;
  for (const auto& r : reports) s.add(r);
  return s;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "duality",  "slide",   "skeletons",       "exact-sequences",
      "cogeneric", "generic-j", "linear-quotient"};
  return names;
}

struct SuiteOptions {
  InstanceFamily family;
  unsigned workers = 1;
  SearchConfig search;
  int max_slide = 3;
};

/// Runs a named suite over a family. Module-level suites use S/I and I
/// for every ideal of the family. The cogeneric and generic-j suites
/// draw `family.count` constructed instances from `family.seed`.
inline std::vector<CheckReport> run_suite(const std::string& name,
                                          const SuiteOptions& opt) {
  const InstanceFamily& fam = opt.family;
  const SearchConfig& cfg = opt.search;
  auto modules = [&] { return quotients_and_ideals(enumerate_ideals(fam)); };
  std::vector<CheckReport> out;
  auto append = [&](std::vector<CheckReport> part) {
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  };
  if (name == "duality") {
    const auto ms = modules();
    append(parallel_map(ms, [](const PairModule& M) { return check_duality_depth(M); },
                        opt.workers));
    append(parallel_map(
        ms, [&](const PairModule& M) { return check_duality_sdepth(M, cfg); },
        opt.workers));
  } else if (name == "slide") {
    const auto ms = modules();
    Rng rng(fam.seed ^ 0x5bd1e995u);
    std::vector<std::pair<PairModule, Multidegree>> items;
    for (const auto& M : ms) {
      items.emplace_back(M, random_multidegree(rng, M.n(), opt.max_slide));
    }
    append(parallel_map(
        items,
        [&](const auto& p) { return check_slide_invariance(p.first, p.second, cfg); },
        opt.workers));
  } else if (name == "skeletons") {
    append(parallel_map(
        modules(), [&](const PairModule& M) { return check_skeletons(M, cfg); },
        opt.workers));
  } else if (name == "exact-sequences") {
    append(parallel_map(
        modules(), [&](const PairModule& M) { return check_exact_sequences(M, cfg); },
        opt.workers));
  } else if (name == "cogeneric") {
    Rng rng(fam.seed);
    std::vector<MonomialIdeal> ideals;
    for (std::size_t k = 0; k < fam.count; ++k) {
      ideals.push_back(random_cogeneric(rng, fam.n, std::max(fam.max_exp, 1),
                                        static_cast<int>(std::max<std::size_t>(fam.max_gens, 1))));
    }
    append(parallel_map(
        ideals,
        [&](const MonomialIdeal& I) { return check_cogeneric_conjecture(I, cfg); },
        opt.workers));
  } else if (name == "generic-j") {
    Rng rng(fam.seed);
    std::vector<MonomialIdeal> ideals;
    for (std::size_t k = 0; k < fam.count; ++k) {
      ideals.push_back(random_generic(rng, fam.n, std::max(fam.max_exp, 1),
                                      static_cast<int>(std::max<std::size_t>(fam.max_gens, 1))));
    }
    append(parallel_map(ideals, [](const MonomialIdeal& I) {
      return check_generic_J_guarantees(I);
    }, opt.workers));
    append(parallel_map(ideals, [](const MonomialIdeal& I) { return check_IJ_layer(I); },
                        opt.workers));
  } else if (name == "linear-quotient") {
    Rng rng(fam.seed ^ 0x9e3779b9u);
    std::vector<std::pair<MonomialIdeal, Multidegree>> items;
    for (const auto& I : enumerate_ideals(fam)) {
      items.emplace_back(I, random_multidegree(rng, I.n(), opt.max_slide));
    }
    append(parallel_map(
        items,
        [&](const auto& p) {
          return check_linear_quotient_slides(p.first, p.second, cfg);
        },
        opt.workers));
  } else {
    throw DomainError("unknown suite '" + name + "'");
  }
  return out;
}

/// One line of a conjecture survey. `gap` is sdepth - depth.
struct SurveyRow {
  json instance;
  std::string kind;
  int depth = 0;
  int sdepth = 0;
  int dim = 0;
  bool generic = false;
  bool cogeneric = false;
  int gap = 0;
  bool exact = true;

  json to_json() const {
    return {{"instance", instance}, {"kind", kind},       {"depth", depth},
            {"sdepth", sdepth},     {"dim", dim},          {"generic", generic},
            {"cogeneric", cogeneric}, {"gap", gap},       {"exact", exact}};
  }
};

struct Survey {
  std::vector<SurveyRow> rows;
  /// Rows with sdepth < depth. Reported, never asserted.
  std::vector<SurveyRow> notable;
  bool partial = false;
};

/// depth and sdepth of S/I and of I for every ideal of the family. Rows
/// whose search ran out of budget carry the certified lower bound and
/// `exact = false`.
inline Survey survey_conjecture(const std::vector<MonomialIdeal>& ideals,
                                const SearchConfig& cfg = SearchConfig(),
                                unsigned workers = 1) {
  auto rows_for = [&](const MonomialIdeal& I) {
    std::vector<SurveyRow> rows;
    const bool gen = is_generic(I);
    const bool cogen = is_cogeneric(I);
    for (const char* kind : {"quotient", "ideal"}) {
      const PairModule M = std::string(kind) == "quotient" ? PairModule::quotient(I)
                                                           : PairModule::ideal(I);
      SurveyRow row;
      row.instance = to_json(I);
      row.kind = kind;
      row.depth = depth(M);
      row.dim = module_dim(M);
      row.generic = gen;
      row.cogeneric = cogen;
      try {
        row.sdepth = sdepth(M, cfg).value;
      } catch (const ResourceError& e) {
        row.sdepth = e.has_bounds() ? e.lower() : 0;
        row.exact = false;
      }
      row.gap = row.sdepth - row.depth;
      rows.push_back(std::move(row));
    }
    return rows;
  };
  Survey s;
  for (auto& chunk : parallel_map(ideals, rows_for, workers)) {
    for (auto& row : chunk) {
      if (!row.exact) s.partial = true;
      if (row.exact && row.gap < 0) s.notable.push_back(row);
      s.rows.push_back(std::move(row));
    }
  }
  return s;
}

inline Survey survey_conjecture(const InstanceFamily& fam,
                                const SearchConfig& cfg = SearchConfig(),
                                unsigned workers = 1) {
  return survey_conjecture(enumerate_ideals(fam), cfg, workers);
}

}  // namespace adet
