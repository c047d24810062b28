#pragma once

// Brute-force reference implementations. None of these call into the
// library beyond its value types, so they can be used to cross-check it.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "adet/core.hpp"

namespace oracle {

using adet::Multidegree;
using Gens = std::vector<Multidegree>;
using Point = std::vector<int>;

inline bool le(const Point& a, const Point& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline Point pt(const Multidegree& d) { return d.coords(); }

/// Some generator divides x^d.
inline bool member(const Gens& gens, const Point& d) {
  for (const auto& g : gens) {
    if (le(g.coords(), d)) return true;
  }
  return false;
}

/// x^d in 𝔪^c = (x_i^{c_i} | c_i > 0).
inline bool in_irreducible(const Point& c, const Point& d) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] > 0 && d[i] >= c[i]) return true;
  }
  return false;
}

/// All points of [0, a], last coordinate fastest.
inline std::vector<Point> box_points(const Point& a) {
  std::vector<Point> out;
  Point p(a.size(), 0);
  for (;;) {
    out.push_back(p);
    std::size_t i = a.size();
    while (i > 0 && p[i - 1] == a[i - 1]) p[--i] = 0;
    if (i == 0) return out;
    ++p[i - 1];
  }
}

inline int count_ge(const Point& b, const Point& a) {
  int c = 0;
  for (std::size_t i = 0; i < b.size(); ++i) c += b[i] >= a[i];
  return c;
}

inline int count_nonzero(const Point& b) {
  int c = 0;
  for (int x : b) c += x != 0;
  return c;
}

/// Grid of I/J in [0, a] as a membership predicate list.
inline std::vector<Point> pair_grid(const Gens& top, const Gens& bottom, const Point& a) {
  std::vector<Point> out;
  for (const auto& p : box_points(a)) {
    if (member(top, p) && !member(bottom, p)) out.push_back(p);
  }
  return out;
}

struct PartitionOptimum {
  int sdepth = -1;
  int shreg = 1 << 20;
  std::size_t partitions = 0;
};

/// Enumerates every interval partition of a grid (given as a point list
/// inside box a). The lexicographically least uncovered point is always
/// the bottom of its part, so each partition is produced once.
inline PartitionOptimum optimize_partitions(const std::vector<Point>& grid, const Point& a,
                                            bool stanley_only = false) {
  std::vector<Point> cells = grid;
  std::sort(cells.begin(), cells.end());
  auto index_of = [&](const Point& p) -> long {
    auto it = std::lower_bound(cells.begin(), cells.end(), p);
    if (it == cells.end() || *it != p) return -1;
    return it - cells.begin();
  };
  std::vector<char> used(cells.size(), 0);
  PartitionOptimum best;
  std::vector<std::pair<Point, Point>> parts;
  std::function<void()> rec = [&] {
    long first = -1;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (!used[k]) {
        first = static_cast<long>(k);
        break;
      }
    }
    if (first < 0) {
      ++best.partitions;
      int sd = static_cast<int>(a.size());
      int sh = 0;
      for (const auto& [lo, hi] : parts) {
        sd = std::min(sd, count_ge(hi, a));
        sh = std::max(sh, count_nonzero(lo));
      }
      best.sdepth = std::max(best.sdepth, sd);
      best.shreg = std::min(best.shreg, sh);
      return;
    }
    const Point lo = cells[static_cast<std::size_t>(first)];
    for (const auto& hi : cells) {
      if (!le(lo, hi)) continue;
      if (stanley_only) {
        bool ok = true;
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (hi[i] != lo[i] && hi[i] != a[i]) ok = false;
        }
        if (!ok) continue;
      }
      Point span(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) span[i] = hi[i] - lo[i];
      std::vector<long> members;
      bool ok = true;
      for (const auto& off : box_points(span)) {
        Point q(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) q[i] = lo[i] + off[i];
        const long idx = index_of(q);
        if (idx < 0 || used[static_cast<std::size_t>(idx)]) {
          ok = false;
          break;
        }
        members.push_back(idx);
      }
      if (!ok) continue;
      for (long m : members) used[static_cast<std::size_t>(m)] = 1;
      parts.emplace_back(lo, hi);
      rec();
      parts.pop_back();
      for (long m : members) used[static_cast<std::size_t>(m)] = 0;
    }
  };
  rec();
  return best;
}

/// Rank over F_p by Gaussian elimination.
inline std::size_t rank_mod(std::vector<std::vector<long>> m, long p) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && ((m[piv][c] % p) + p) % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    long inv = 1;
    const long v = ((m[rank][c] % p) + p) % p;
    for (long e = p - 2, b = v; e > 0; e >>= 1, b = b * b % p) {
      if (e & 1) inv = inv * b % p;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const long f = ((m[r][c] % p) + p) % p * inv % p;
      if (f == 0) continue;
      for (std::size_t k = 0; k < cols; ++k) {
        m[r][k] = ((m[r][k] - f * m[rank][k]) % p + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

/// β_{i,b}(S/I) = dim H̃_{i-2} of the upper Koszul complex
/// K^b(I) = {F ⊆ supp(b) : x^{b - F} ∈ I}, computed over F_p; i ≥ 1.
/// β_{0,b} is 1 exactly for b = 0.
inline int betti_quotient(const Gens& gens, int i, const Point& b, long p = 32003) {
  const std::size_t n = b.size();
  if (i == 0) return count_nonzero(b) == 0 && !member(gens, b) ? 1 : 0;
  std::vector<std::uint32_t> faces;
  std::uint32_t support = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (b[k] > 0) support |= 1u << k;
  }
  for (std::uint32_t F = 0; F < (1u << n); ++F) {
    if ((F & ~support) != 0) continue;
    Point d = b;
    for (std::size_t k = 0; k < n; ++k) {
      if (F & (1u << k)) --d[k];
    }
    if (member(gens, d)) faces.push_back(F);
  }
  auto by_dim = [&](int dim) {
    std::vector<std::uint32_t> out;
    for (auto F : faces) {
      if (__builtin_popcount(F) == dim + 1) out.push_back(F);
    }
    return out;
  };
  // Reduced chains: the empty face has dimension -1.
  auto boundary = [&](const std::vector<std::uint32_t>& hi,
                      const std::vector<std::uint32_t>& lo) {
    std::vector<std::vector<long>> m(lo.size(), std::vector<long>(hi.size(), 0));
    for (std::size_t c = 0; c < hi.size(); ++c) {
      int pos = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (!(hi[c] & (1u << k))) continue;
        const std::uint32_t face = hi[c] & ~(1u << k);
        const auto it = std::find(lo.begin(), lo.end(), face);
        if (it != lo.end()) m[static_cast<std::size_t>(it - lo.begin())][c] = pos % 2 ? -1 : 1;
        ++pos;
      }
    }
    return m;
  };
  const int q = i - 2;
  const auto cq = by_dim(q);
  if (cq.empty()) return 0;
  const auto cqm = by_dim(q - 1);
  const auto cqp = by_dim(q + 1);
  const std::size_t r_out = cqm.empty() ? 0 : rank_mod(boundary(cq, cqm), p);
  const std::size_t r_in = cqp.empty() ? 0 : rank_mod(boundary(cqp, cq), p);
  return static_cast<int>(cq.size() - r_out - r_in);
}

}  // namespace oracle
