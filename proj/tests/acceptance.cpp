// Acceptance suite. Prints one PASS/FAIL line per criterion; every
// criterion is exact. Usage: acceptance [--criterion N]... [--workers K]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "adet/adet.hpp"
#include "oracles.hpp"

using namespace adet;

namespace {

struct Outcome {
  bool pass = true;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string note;
  std::vector<std::string> samples;

  void record(bool ok, const std::string& what) {
    ++checked;
    if (!ok) {
      pass = false;
      ++failed;
      if (samples.size() < 5) samples.push_back(what);
    }
  }
  void absorb(const std::vector<CheckReport>& reps) {
    for (const auto& r : reps) record(r.passed(), r.to_json().dump());
  }
};

unsigned g_workers = 1;

std::vector<MonomialIdeal> duality_family() {
  InstanceFamily ex;
  ex.n = 2;
  ex.max_exp = 2;
  auto ideals = enumerate_ideals(ex);
  InstanceFamily rnd;
  rnd.n = 3;
  rnd.max_exp = 3;
  rnd.max_gens = 4;
  rnd.mode = InstanceFamily::Mode::random;
  rnd.seed = 20240601;
  rnd.count = 200;
  for (auto& I : enumerate_ideals(rnd)) ideals.push_back(std::move(I));
  return ideals;
}

Outcome criterion1() {
  Outcome o;
  const auto modules = quotients_and_ideals(duality_family());
  o.absorb(parallel_map(modules, [](const PairModule& M) { return check_duality_depth(M); },
                        g_workers));
  o.absorb(parallel_map(modules, [](const PairModule& M) { return check_duality_sdepth(M); },
                        g_workers));
  o.note = std::to_string(modules.size()) + " modules, both identities";
  return o;
}

Outcome criterion2() {
  Outcome o;
  Rng rng(4242);
  std::vector<IntervalModuleSpec> specs;
  for (int k = 0; k < 500; ++k) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    specs.push_back(random_interval_triple(rng, n, 4));
  }
  const auto results = parallel_map(
      specs,
      [](const IntervalModuleSpec& s) {
        std::vector<std::pair<bool, std::string>> out;
        const std::string tag = "c=" + s.c.to_string() + " b=" + s.b.to_string() +
                                " a=" + s.box.to_string();
        const PairModule M = interval_module(s);
        const int top = supp_rel_count(s.b, s.box);
        out.emplace_back(sdepth(M).value == top, "sdepth " + tag);
        out.emplace_back(sreg(M) == supp_count(s.c), "sreg " + tag);
        const PairModule D = alexander_dual(M);
        Grid want(s.box);
        for (const auto& d : BoxRange(s.box - s.b, s.box - s.c)) want.insert(d);
        out.emplace_back(D.grid() == want, "dual grid " + tag);
        for (int l = supp_rel_count(s.c, s.box); l <= top; ++l) {
          out.emplace_back(sdepth(skeleton(M, l)).value == l,
                           "skeleton l=" + std::to_string(l) + " " + tag);
        }
        return out;
      },
      g_workers);
  for (const auto& r : results) {
    for (const auto& [ok, what] : r) o.record(ok, what);
  }
  o.note = "500 triples";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto I = MonomialIdeal::generated_by(2, {Multidegree{3, 0}, Multidegree{2, 1}});
  const PairModule M = PairModule::quotient(I);
  o.record(sdepth(M).value == 0, "sdepth S/(x^3,x^2y)");
  const IntervalPartition P{Multidegree{3, 1},
                            {Interval(Multidegree{0, 0}, Multidegree{1, 1}),
                             Interval(Multidegree{2, 0}, Multidegree{2, 0})}};
  o.record(validate_partition(M, P).valid && partition_sdepth(P) == 0,
           "quasi Stanley decomposition of S/(x^3,x^2y)");
  const PairModule Q = PairModule::quotient(
      MonomialIdeal::generated_by(2, {Multidegree{1, 0}, Multidegree{0, 2}}), Multidegree{1, 2});
  o.record(shreg(Q).value == 0, "shreg S/(x,y^2)");
  SearchConfig st;
  st.kind = PartitionKind::stanley;
  o.record(shreg(Q, st).value == 1, "Stanley-only shreg S/(x,y^2)");
  std::vector<MonomialIdeal> cis;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto& J : complete_intersections(n, 3)) cis.push_back(std::move(J));
  }
  const auto results = parallel_map(
      cis,
      [](const MonomialIdeal& J) {
        const int n = static_cast<int>(J.n());
        const int c = static_cast<int>(J.num_generators());
        const bool q = sdepth(PairModule::quotient(J)).value == n - c;
        const bool i = sdepth(PairModule::ideal(J)).value == n - c / 2;
        return std::make_pair(q && i, J.to_string());
      },
      g_workers);
  for (const auto& [ok, what] : results) o.record(ok, "complete intersection " + what);
  o.note = std::to_string(cis.size()) + " complete intersections";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto modules = quotients_and_ideals(duality_family());
  o.absorb(parallel_map(modules, [](const PairModule& M) { return check_skeletons(M); },
                        g_workers));
  o.note = std::to_string(modules.size()) + " modules";
  return o;
}

Outcome criterion5() {
  Outcome o;
  InstanceFamily fam;
  fam.n = 3;
  fam.max_exp = 3;
  fam.max_gens = 4;
  fam.mode = InstanceFamily::Mode::random;
  fam.seed = 5150;
  fam.count = 100;
  const auto modules = quotients_and_ideals(enumerate_ideals(fam));
  Rng rng(77);
  std::vector<std::pair<PairModule, Multidegree>> items;
  for (const auto& M : modules) items.emplace_back(M, random_multidegree(rng, M.n(), 3));
  o.absorb(parallel_map(
      items, [](const auto& p) { return check_slide_invariance(p.first, p.second); },
      g_workers));
  o.note = std::to_string(items.size()) + " slid modules";
  return o;
}

Outcome criterion6() {
  Outcome o;
  Rng rng(6006);
  std::vector<MonomialIdeal> ideals;
  for (int k = 0; k < 100; ++k) {
    const auto n = static_cast<std::size_t>(rng.uniform(2, 4));
    ideals.push_back(random_cogeneric(rng, n, 4, 4));
  }
  o.absorb(parallel_map(
      ideals, [](const MonomialIdeal& I) { return check_cogeneric_conjecture(I); }, g_workers));
  o.note = "100 cogeneric ideals";
  return o;
}

Outcome criterion7() {
  Outcome o;
  Rng rng(7007);
  std::vector<MonomialIdeal> ideals;
  for (int k = 0; k < 50; ++k) {
    const auto n = static_cast<std::size_t>(rng.uniform(2, 4));
    ideals.push_back(random_generic(rng, n, 3, 4));
  }
  const auto guarantees = parallel_map(
      ideals, [](const MonomialIdeal& I) { return check_generic_J_guarantees(I); }, g_workers);
  const auto layers = parallel_map(
      ideals, [](const MonomialIdeal& I) { return check_IJ_layer(I); }, g_workers);
  o.absorb(guarantees);
  o.absorb(layers);
  std::size_t not_generic = 0, other = 0, layer_fail = 0;
  for (const auto& r : guarantees) {
    if (r.passed()) continue;
    if (r.details == "J is not generic") {
      ++not_generic;
    } else {
      ++other;
    }
  }
  for (const auto& r : layers) layer_fail += !r.passed();
  o.note = "50 generic ideals; J not generic in " + std::to_string(not_generic) +
           ", other guarantee failures " + std::to_string(other) + ", layer failures " +
           std::to_string(layer_fail);
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto ideals = duality_family();
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    const MonomialIdeal& I = ideals[k];
    const std::string tag = I.to_string();
    const Multidegree a = I.generator_join();
    const auto comps = irreducible_decomposition(I);
    const MonomialIdeal D = dual_ideal(I, a);
    bool decomp_ok = true, dual_ok = true;
    for (const auto& d : oracle::box_points(a.coords())) {
      bool all = true;
      for (const auto& c : comps) all = all && oracle::in_irreducible(c.exponents.coords(), d);
      decomp_ok = decomp_ok && all == oracle::member(I.generators(), d);
      oracle::Point r(d.size());
      for (std::size_t i = 0; i < d.size(); ++i) r[i] = a[i] - d[i];
      dual_ok = dual_ok && oracle::member(D.generators(), d) == !oracle::member(I.generators(), r);
    }
    o.record(decomp_ok, "irreducible decomposition " + tag);
    o.record(dual_ok, "dual ideal " + tag);
    // Pair with the next ideal over the same ring.
    const MonomialIdeal& J = ideals[(k + 1) % ideals.size()].n() == I.n()
                                 ? ideals[(k + 1) % ideals.size()]
                                 : I;
    const Multidegree box = join(a, J.generator_join());
    const MonomialIdeal IJ = intersect(I, J);
    bool inter_ok = true, colon_ok = true;
    for (const auto& m : J.generators()) {
      const MonomialIdeal C = colon(I, m);
      for (const auto& d : oracle::box_points(box.coords())) {
        oracle::Point dm(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) dm[i] = d[i] + m[i];
        colon_ok = colon_ok && oracle::member(C.generators(), d) == oracle::member(I.generators(), dm);
      }
    }
    for (const auto& d : oracle::box_points(box.coords())) {
      inter_ok = inter_ok && oracle::member(IJ.generators(), d) ==
                                 (oracle::member(I.generators(), d) &&
                                  oracle::member(J.generators(), d));
    }
    o.record(inter_ok, "intersection " + tag + " with " + J.to_string());
    o.record(colon_ok, "colon " + tag + " by generators of " + J.to_string());
  }
  o.note = std::to_string(ideals.size()) + " ideals";
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto modules = quotients_and_ideals(duality_family());
  Rng rng(9009);
  for (int k = 0; k < 1000; ++k) {
    const PairModule& M =
        modules[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(modules.size()) - 1))];
    const Multidegree b = [&] {
      Multidegree d(M.n());
      for (std::size_t i = 0; i < M.n(); ++i) d[i] = rng.uniform(0, M.box()[i]);
      return d;
    }();
    const KoszulDegree K = koszul_basis(M, b);
    bool ok = true;
    for (std::size_t i = 2; i < K.basis.size(); ++i) {
      const IntMatrix d1 = koszul_differential(K, i - 1);
      const IntMatrix d2 = koszul_differential(K, i);
      for (std::size_t r = 0; r < d1.size(); ++r) {
        for (std::size_t c = 0; c < (d2.empty() ? 0 : d2.front().size()); ++c) {
          long long s = 0;
          for (std::size_t m = 0; m < d2.size(); ++m) s += d1[r][m] * d2[m][c];
          ok = ok && s == 0;
        }
      }
    }
    o.record(ok, "d^2 at " + b.to_string() + " for " + M.to_string());
  }
  // Regular sequences: monomials with pairwise disjoint supports.
  std::vector<MonomialIdeal> regular;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto& J : complete_intersections(n, 3)) regular.push_back(std::move(J));
  }
  for (int k = 0; k < 100; ++k) {
    const auto n = static_cast<std::size_t>(rng.uniform(2, 4));
    std::vector<int> block(n);
    for (auto& x : block) x = rng.uniform(0, static_cast<int>(n) - 1);
    std::vector<Multidegree> gens;
    for (std::size_t g = 0; g < n; ++g) {
      Multidegree m(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (block[i] == static_cast<int>(g)) m[i] = rng.uniform(1, 3);
      }
      if (!m.is_zero()) gens.push_back(m);
    }
    regular.push_back(MonomialIdeal::generated_by(n, gens));
  }
  for (const auto& J : regular) {
    const auto& gens = J.generators();
    const std::size_t c = gens.size();
    std::map<std::pair<int, Multidegree>, int> want;
    for (std::uint32_t F = 0; F < (1u << c); ++F) {
      Multidegree d(J.n());
      for (std::size_t g = 0; g < c; ++g) {
        if (F & (1u << g)) d = d + gens[g];
      }
      want[{popcount(F), d}] = 1;
    }
    const BettiTable T = betti_table(PairModule::quotient(J));
    o.record(T.entries() == want, "Koszul pattern for " + J.to_string());
  }
  o.note = "1000 degrees, " + std::to_string(regular.size()) + " regular sequences";
  return o;
}

const std::map<int, std::pair<const char*, std::function<Outcome()>>>& criteria() {
  static const std::map<int, std::pair<const char*, std::function<Outcome()>>> table = {
      {1, {"duality identities", criterion1}},
      {2, {"interval module formulas", criterion2}},
      {3, {"known values", criterion3}},
      {4, {"skeleton suite", criterion4}},
      {5, {"slide suite", criterion5}},
      {6, {"cogeneric theorem", criterion6}},
      {7, {"generic J construction", criterion7}},
      {8, {"oracle equivalence", criterion8}},
      {9, {"homology sanity", criterion9}},
  };
  return table;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> chosen;
  for (int k = 1; k < argc; ++k) {
    const std::string arg = argv[k];
    if (arg == "--criterion" && k + 1 < argc) {
      chosen.push_back(std::stoi(argv[++k]));
    } else if (arg == "--workers" && k + 1 < argc) {
      g_workers = static_cast<unsigned>(std::stoul(argv[++k]));
    } else {
      std::cerr << "usage: acceptance [--criterion N]... [--workers K]\n";
      return 2;
    }
  }
  if (chosen.empty()) {
    for (const auto& [id, entry] : criteria()) chosen.push_back(id);
  }
  bool all = true;
  for (int id : chosen) {
    const auto it = criteria().find(id);
    if (it == criteria().end()) {
      std::cerr << "unknown criterion " << id << "\n";
      return 2;
    }
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = it->second.second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d (%s): %s  [%zu checked, %zu failed; %s; %.1fs]\n", id,
                it->second.first, o.pass ? "PASS" : "FAIL", o.checked, o.failed,
                o.note.c_str(), secs);
    for (const auto& s : o.samples) std::printf("    failure: %s\n", s.c_str());
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
