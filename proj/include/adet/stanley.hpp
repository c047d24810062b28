#pragma once

// Stanley depth and shreg of pair modules by exact interval-partition
// search.
//
// An interval partition of the grid of M = I/J over the box a is a
// positively a-determined quasi Stanley decomposition ⊕ k_a[c_i, b_i]. Its
// Stanley depth is min #supp^a(b_i) and its shreg is max #supp(c_i);
// sdepth M and shreg M are the max and min of these over all partitions.
// Each bound is decided by an exact cover of the grid cells with the
// admissible intervals.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "adet/core.hpp"
#include "adet/error.hpp"
#include "adet/exact_cover.hpp"
#include "adet/pairmod.hpp"

namespace adet {

struct IntervalPartition {
  Multidegree box;
  std::vector<Interval> parts;

  /// Parts in lexicographic order.
  IntervalPartition canonical() const {
    IntervalPartition p = *this;
    std::sort(p.parts.begin(), p.parts.end());
    return p;
  }
};

/// The Stanley space x^generator k[Z] with Z given as a bit mask.
struct StanleySpace {
  Multidegree generator;
  std::uint32_t free_mask = 0;

  IndexSet free_variables() const { return mask_to_indices(free_mask); }
  int size() const { return popcount(free_mask); }

  /// Degrees of the space inside [0, box].
  Interval degrees_in_box(const Multidegree& box) const {
    Multidegree hi = generator;
    for (std::size_t i = 0; i < hi.size(); ++i) {
      if (free_mask & (std::uint32_t{1} << i)) hi[i] = box[i];
    }
    return Interval(generator, hi);
  }

  friend bool operator==(const StanleySpace&, const StanleySpace&) = default;
};

/// Which intervals a search may use. `stanley` restricts to the
/// intervals of genuine Stanley decompositions: every coordinate of the
/// top equals the bottom or the box.
enum class PartitionKind { quasi, stanley };

enum class SweepDirection { downward, upward };

struct SearchConfig {
  std::uint64_t node_limit = 200'000'000;
  std::chrono::milliseconds time_limit{600'000};
  SweepDirection sweep = SweepDirection::downward;
  /// Candidate order: larger volume first, then lexicographic lo, then hi.
  std::string tie_break = "volume-lex";
  PartitionKind kind = PartitionKind::quasi;
  /// Cap on the number of candidate cells materialized for one search.
  std::uint64_t max_candidate_cells = 100'000'000;

  void validate() const {
    if (node_limit == 0) throw DomainError("search node limit must be positive");
    if (time_limit.count() <= 0) {
      throw DomainError("search time limit must be positive");
    }
    if (tie_break != "volume-lex") {
      throw DomainError("unknown tie-break policy '" + tie_break + "'");
    }
  }
};

struct SearchResult {
  int value = 0;
  IntervalPartition witness;
  std::uint64_t nodes = 0;
};

struct PartitionCheck {
  bool valid = true;
  std::vector<std::string> problems;

  explicit operator bool() const noexcept { return valid; }
};

/// Disjoint interval cover of grid(M) by parts lying inside the grid.
inline PartitionCheck validate_partition(const PairModule& M,
                                         const IntervalPartition& P) {
  if (P.box != M.box()) {
    throw DomainError("validate_partition: partition box " + P.box.to_string() +
                      " differs from module box " + M.box().to_string());
  }
  PartitionCheck check;
  auto fail = [&](std::string why) {
    check.valid = false;
    if (check.problems.size() < 16) check.problems.push_back(std::move(why));
  };
  const BoxIndexer& ix = M.grid().indexer();
  std::vector<int> hits(ix.volume(), 0);
  for (const auto& part : P.parts) {
    if (part.lo.size() != M.n() || part.hi.size() != M.n() ||
        !divides(part.lo, part.hi) || !divides(part.hi, M.box())) {
      fail("part " + part.to_string() + " is not an interval of the box");
      continue;
    }
    for (const auto& d : BoxRange(part.lo, part.hi)) {
      const std::size_t idx = ix.index(d);
      if (!M.grid().contains_index(idx)) {
        fail("part " + part.to_string() + " leaves the grid at " + d.to_string());
      }
      if (++hits[idx] == 2) fail("degree " + d.to_string() + " covered twice");
    }
  }
  for (std::size_t idx : M.grid().member_indices()) {
    if (hits[idx] == 0) fail("degree " + ix.point(idx).to_string() + " uncovered");
  }
  return check;
}

/// min #supp^a(hi) over the parts.
inline int partition_sdepth(const IntervalPartition& P) {
  if (P.parts.empty()) throw DomainError("partition_sdepth: empty partition");
  int best = static_cast<int>(P.box.size());
  for (const auto& part : P.parts) {
    best = std::min(best, supp_rel_count(part.hi, P.box));
  }
  return best;
}

/// max #supp(lo) over the parts.
inline int partition_shreg(const IntervalPartition& P) {
  if (P.parts.empty()) throw DomainError("partition_shreg: empty partition");
  int best = 0;
  for (const auto& part : P.parts) best = std::max(best, supp_count(part.lo));
  return best;
}

/// Splits k_a[c, b] into the Stanley spaces x^{c'} k[supp^a(b)], c'
/// agreeing with c on supp^a(b) and ranging over [c_i, b_i] elsewhere.
inline std::vector<StanleySpace> refine_to_stanley(const IntervalPartition& P) {
  std::vector<StanleySpace> out;
  for (const auto& part : P.parts) {
    if (!divides(part.lo, part.hi) || !divides(part.hi, P.box)) {
      throw DomainError("refine_to_stanley: part " + part.to_string() +
                        " is not an interval of the box");
    }
    const std::uint32_t Z = supp_rel_mask(part.hi, P.box);
    Multidegree hi = part.hi;
    for (std::size_t i = 0; i < hi.size(); ++i) {
      if (Z & (std::uint32_t{1} << i)) hi[i] = part.lo[i];
    }
    for (const auto& c : BoxRange(part.lo, hi)) out.push_back({c, Z});
  }
  return out;
}

inline std::vector<StanleySpace> refine_to_stanley(const PairModule& M,
                                                   const IntervalPartition& P) {
  if (auto check = validate_partition(M, P); !check) {
    throw DomainError("refine_to_stanley: invalid partition: " +
                      check.problems.front());
  }
  return refine_to_stanley(P);
}

/// Parts [a - b_i, a - c_i]; a partition of the grid of A_a(M).
inline IntervalPartition dual_partition(const PairModule& M,
                                        const IntervalPartition& P) {
  if (auto check = validate_partition(M, P); !check) {
    throw DomainError("dual_partition: invalid partition: " +
                      check.problems.front());
  }
  IntervalPartition D{P.box, {}};
  for (const auto& part : P.parts) {
    D.parts.emplace_back(P.box - part.hi, P.box - part.lo);
  }
  return D;
}

namespace detail {

/// Admissibility test for a candidate interval [lo, hi].
using IntervalFilter =
    std::function<bool(const Multidegree& lo, const Multidegree& hi)>;

struct CoverOutcome {
  ExactCover::Status status = ExactCover::Status::infeasible;
  IntervalPartition partition;
  std::uint64_t nodes = 0;
};

inline bool stanley_shaped(const Multidegree& lo, const Multidegree& hi,
                           const Multidegree& box) {
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (hi[i] != lo[i] && hi[i] != box[i]) return false;
  }
  return true;
}

/// Exact cover of grid(M) by admissible intervals contained in the grid.
/// The grid of a pair module is order-convex, so [lo, hi] lies in it as
/// soon as both corners do.
inline CoverOutcome cover_grid(const PairModule& M, const IntervalFilter& admit,
                               const SearchConfig& cfg,
                               std::chrono::steady_clock::time_point deadline) {
  const Grid& grid = M.grid();
  const BoxIndexer& ix = grid.indexer();
  const Multidegree& box = M.box();
  const std::vector<std::size_t> cells = grid.member_indices();
  std::vector<std::uint32_t> column(ix.volume(), UINT32_MAX);
  for (std::size_t k = 0; k < cells.size(); ++k) {
    column[cells[k]] = static_cast<std::uint32_t>(k);
  }

  struct Candidate {
    Interval span;
    std::uint64_t volume;
  };
  std::vector<Candidate> candidates;
  std::uint64_t total_cells = 0;
  for (std::size_t lo_idx : cells) {
    const Multidegree lo = ix.point(lo_idx);
    for (const auto& hi : BoxRange(lo, box)) {
      if (!grid.contains_index(ix.index(hi))) continue;
      if (cfg.kind == PartitionKind::stanley && !stanley_shaped(lo, hi, box)) {
        continue;
      }
      if (!admit(lo, hi)) continue;
      Interval span(lo, hi);
      const std::uint64_t v = span.volume();
      total_cells += v;
      if (total_cells > cfg.max_candidate_cells) {
        throw ResourceError("interval search: candidate set too large");
      }
      candidates.push_back({std::move(span), v});
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& x, const Candidate& y) {
              if (x.volume != y.volume) return x.volume > y.volume;
              return x.span < y.span;
            });

  CoverOutcome out;
  out.partition.box = box;
  ExactCover dlx(cells.size());
  std::vector<std::uint32_t> row;
  for (const auto& cand : candidates) {
    row.clear();
    for (const auto& d : BoxRange(cand.span.lo, cand.span.hi)) {
      row.push_back(column[ix.index(d)]);
    }
    dlx.add_row(row);
  }
  std::vector<std::size_t> chosen;
  ExactCover::Limits limits;
  limits.max_nodes = cfg.node_limit;
  limits.deadline = deadline;
  out.status = dlx.solve(chosen, limits);
  out.nodes = dlx.nodes_explored();
  if (out.status == ExactCover::Status::found) {
    for (std::size_t r : chosen) out.partition.parts.push_back(candidates[r].span);
    out.partition = out.partition.canonical();
  }
  return out;
}

enum class GreedyGoal { sdepth, shreg };

/// Cells in lexicographic order; each uncovered cell becomes the bottom of
/// an interval of uncovered grid cells, chosen to maximize #supp^a of the
/// top (sdepth goal) or the volume (shreg goal). Always a valid partition.
inline IntervalPartition greedy_partition(const PairModule& M, GreedyGoal goal,
                                          PartitionKind kind) {
  const Grid& grid = M.grid();
  const BoxIndexer& ix = grid.indexer();
  const Multidegree& box = M.box();
  std::vector<bool> covered(ix.volume(), false);
  IntervalPartition P{box, {}};
  for (std::size_t lo_idx : grid.member_indices()) {
    if (covered[lo_idx]) continue;
    const Multidegree lo = ix.point(lo_idx);
    Multidegree best = lo;
    int best_rank = supp_rel_count(lo, box);
    std::uint64_t best_volume = 1;
    for (const auto& hi : BoxRange(lo, box)) {
      const std::size_t hi_idx = ix.index(hi);
      if (!grid.contains_index(hi_idx) || covered[hi_idx]) continue;
      if (kind == PartitionKind::stanley && !stanley_shaped(lo, hi, box)) continue;
      const int rank = supp_rel_count(hi, box);
      const std::uint64_t volume = Interval(lo, hi).volume();
      const bool better = goal == GreedyGoal::sdepth
                              ? (rank > best_rank ||
                                 (rank == best_rank && volume > best_volume))
                              : volume > best_volume;
      if (!better) continue;
      bool free = true;
      for (const auto& d : BoxRange(lo, hi)) {
        if (covered[ix.index(d)]) {
          free = false;
          break;
        }
      }
      if (!free) continue;
      best = hi;
      best_rank = rank;
      best_volume = volume;
    }
    for (const auto& d : BoxRange(lo, best)) covered[ix.index(d)] = true;
    P.parts.emplace_back(lo, best);
  }
  return P.canonical();
}

inline std::chrono::steady_clock::time_point deadline_for(const SearchConfig& cfg) {
  return std::chrono::steady_clock::now() + cfg.time_limit;
}

inline std::optional<IntervalPartition> decide_sdepth(
    const PairModule& M, int t, const SearchConfig& cfg,
    std::chrono::steady_clock::time_point deadline, std::uint64_t& nodes,
    int lower, int upper) {
  const Multidegree& box = M.box();
  CoverOutcome r = cover_grid(
      M,
      [&](const Multidegree&, const Multidegree& hi) {
        return supp_rel_count(hi, box) >= t;
      },
      cfg, deadline);
  nodes += r.nodes;
  if (r.status == ExactCover::Status::limit) {
    throw ResourceError("sdepth search exceeded its budget at threshold " +
                            std::to_string(t),
                        lower, upper);
  }
  if (r.status == ExactCover::Status::found) return r.partition;
  return std::nullopt;
}

inline std::optional<IntervalPartition> decide_shreg(
    const PairModule& M, int r, const SearchConfig& cfg,
    std::chrono::steady_clock::time_point deadline, std::uint64_t& nodes,
    int lower, int upper) {
  CoverOutcome res = cover_grid(
      M,
      [&](const Multidegree& lo, const Multidegree&) {
        return supp_count(lo) <= r;
      },
      cfg, deadline);
  nodes += res.nodes;
  if (res.status == ExactCover::Status::limit) {
    throw ResourceError("shreg search exceeded its budget at threshold " +
                            std::to_string(r),
                        lower, upper);
  }
  if (res.status == ExactCover::Status::found) return res.partition;
  return std::nullopt;
}

/// Every minimal grid element is the bottom of its part.
inline int shreg_lower_bound(const PairModule& M) {
  const Grid& grid = M.grid();
  const BoxIndexer& ix = grid.indexer();
  int best = 0;
  for (std::size_t idx : grid.member_indices()) {
    const Multidegree d = ix.point(idx);
    bool minimal = true;
    for (std::size_t j = 0; j < d.size() && minimal; ++j) {
      if (d[j] == 0) continue;
      Multidegree e = d;
      --e[j];
      minimal = !grid.contains(e);
    }
    if (minimal) best = std::max(best, supp_count(d));
  }
  return best;
}

}  // namespace detail

/// A partition of grid(M) into intervals with #supp^a(top) >= t, if any.
inline std::optional<IntervalPartition> sdepth_at_least(
    const PairModule& M, int t, const SearchConfig& cfg = SearchConfig()) {
  cfg.validate();
  require_nonzero(M, "sdepth_at_least");
  if (t > module_dim(M)) return std::nullopt;
  IntervalPartition greedy =
      detail::greedy_partition(M, detail::GreedyGoal::sdepth, cfg.kind);
  const int g = partition_sdepth(greedy);
  if (g >= t) return greedy;
  std::uint64_t nodes = 0;
  return detail::decide_sdepth(M, t, cfg, detail::deadline_for(cfg), nodes, g,
                               module_dim(M));
}

/// Exact Stanley depth with a witness partition attaining it.
inline SearchResult sdepth(const PairModule& M, const SearchConfig& cfg = SearchConfig()) {
  cfg.validate();
  require_nonzero(M, "sdepth");
  const int dim = module_dim(M);
  IntervalPartition greedy =
      detail::greedy_partition(M, detail::GreedyGoal::sdepth, cfg.kind);
  const int g = partition_sdepth(greedy);
  const auto deadline = detail::deadline_for(cfg);
  SearchResult res{g, greedy, 0};
  if (cfg.sweep == SweepDirection::downward) {
    for (int t = dim; t > g; --t) {
      if (auto p = detail::decide_sdepth(M, t, cfg, deadline, res.nodes, g, t)) {
        res.value = t;
        res.witness = std::move(*p);
        return res;
      }
    }
    return res;
  }
  for (int t = g + 1; t <= dim; ++t) {
    auto p = detail::decide_sdepth(M, t, cfg, deadline, res.nodes, res.value, dim);
    if (!p) break;
    res.value = t;
    res.witness = std::move(*p);
  }
  return res;
}

/// A partition of grid(M) into intervals with #supp(bottom) <= r, if any.
inline std::optional<IntervalPartition> shreg_at_most(
    const PairModule& M, int r, const SearchConfig& cfg = SearchConfig()) {
  cfg.validate();
  require_nonzero(M, "shreg_at_most");
  if (r < detail::shreg_lower_bound(M)) return std::nullopt;
  IntervalPartition greedy =
      detail::greedy_partition(M, detail::GreedyGoal::shreg, cfg.kind);
  const int u = partition_shreg(greedy);
  if (u <= r) return greedy;
  std::uint64_t nodes = 0;
  return detail::decide_shreg(M, r, cfg, detail::deadline_for(cfg), nodes,
                              detail::shreg_lower_bound(M), u);
}

enum class ShregMode { direct, dual, both };

/// shreg by a direct upward sweep over r. Thresholds below the largest
/// support of a minimal grid element are refuted without search.
inline SearchResult shreg_direct(const PairModule& M,
                                 const SearchConfig& cfg = SearchConfig()) {
  cfg.validate();
  require_nonzero(M, "shreg");
  IntervalPartition greedy =
      detail::greedy_partition(M, detail::GreedyGoal::shreg, cfg.kind);
  const int u = partition_shreg(greedy);
  const int lower = detail::shreg_lower_bound(M);
  const auto deadline = detail::deadline_for(cfg);
  SearchResult res{u, greedy, 0};
  for (int r = lower; r < u; ++r) {
    if (auto p = detail::decide_shreg(M, r, cfg, deadline, res.nodes, r, u)) {
      res.value = r;
      res.witness = std::move(*p);
      return res;
    }
  }
  return res;
}

/// shreg(M) = n - sdepth(A_a(M)); the witness is the dual of the sdepth
/// witness of A_a(M).
/// shreg as n - sdepth of the Alexander dual. Reflection maps Stanley
/// parts to parts with lo_j in {0, hi_j}, so only the quasi kind is
/// supported here.
inline SearchResult shreg_dual(const PairModule& M, const SearchConfig& cfg = SearchConfig()) {
  cfg.validate();
  require_nonzero(M, "shreg");
  if (cfg.kind != PartitionKind::quasi) {
    throw DomainError("shreg: dual mode requires the quasi partition kind");
  }
  const PairModule D = alexander_dual(M);
  SearchResult s = sdepth(D, cfg);
  SearchResult res;
  res.value = static_cast<int>(M.n()) - s.value;
  res.witness = dual_partition(D, s.witness).canonical();
  res.nodes = s.nodes;
  return res;
}

inline SearchResult shreg(const PairModule& M, const SearchConfig& cfg = SearchConfig(),
                          ShregMode mode = ShregMode::direct) {
  switch (mode) {
    case ShregMode::direct:
      return shreg_direct(M, cfg);
    case ShregMode::dual:
      return shreg_dual(M, cfg);
    case ShregMode::both: {
      SearchResult d = shreg_direct(M, cfg);
      SearchResult u = shreg_dual(M, cfg);
      if (d.value != u.value) {
        throw std::logic_error("shreg: direct value " + std::to_string(d.value) +
                               " disagrees with dual value " +
                               std::to_string(u.value));
      }
      d.nodes += u.nodes;
      return d;
    }
  }
  throw std::logic_error("shreg: unknown mode");
}

}  // namespace adet
