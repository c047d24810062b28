#pragma once

// Multigraded Betti numbers of pair modules via Koszul homology.
//
// In degree b the Koszul complex K(M) has the summand M_{b - ε_F} in
// homological degree |F| for every F ⊆ supp(b), and
//   ∂(e_F ⊗ m) = Σ_{j ∈ F} (-1)^{pos(j, F)} e_{F \ j} ⊗ x_j m,
// with pos(j, F) = #{k ∈ F | k < j}. Each M_d is 0 or k, so the
// differential is a 0/±1 matrix and β_{i,b}(M) = dim H_i(K(M)_b).

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "adet/core.hpp"
#include "adet/error.hpp"
#include "adet/pairmod.hpp"

namespace adet {

/// Characteristic of the coefficient field: 0 (rationals) or a prime.
struct FieldSpec {
  std::uint32_t characteristic = 0;

  FieldSpec() = default;
  explicit FieldSpec(std::uint32_t p) : characteristic(p) {
    if (p == 1) throw DomainError("field characteristic 1");
    if (p >= (std::uint32_t{1} << 31)) {
      throw DomainError("field characteristic must be below 2^31");
    }
    if (p != 0) {
      for (std::uint32_t d = 2; std::uint64_t{d} * d <= p; ++d) {
        if (p % d == 0) {
          throw DomainError("field characteristic " + std::to_string(p) +
                            " is not prime");
        }
      }
    }
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;

namespace detail {

inline std::size_t rank_mod_p(IntMatrix m, std::uint64_t p) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  auto norm = [p](std::int64_t v) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
  };
  auto inverse = [p](std::uint64_t a) {
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = norm(m[r][c]);
  }
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const std::uint64_t inv = inverse(a[rank][c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      const std::uint64_t f = a[r][c] * inv % p;
      for (std::size_t k = c; k < cols; ++k) {
        a[r][k] = (a[r][k] + (p - f) * a[rank][k]) % p;
      }
    }
    ++rank;
  }
  return rank;
}

/// Fraction-free (Bareiss) elimination. Returns nullopt when an
/// intermediate value does not fit in T.
template <typename T>
std::optional<std::size_t> bareiss_rank(const IntMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::vector<T>> a(rows, std::vector<T>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = T(m[r][c]);
  }
  T prev(1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        if constexpr (std::is_same_v<T, std::int64_t>) {
          std::int64_t x, y, z;
          if (__builtin_mul_overflow(a[rank][c], a[r][k], &x) ||
              __builtin_mul_overflow(a[r][c], a[rank][k], &y) ||
              __builtin_sub_overflow(x, y, &z)) {
            return std::nullopt;
          }
          a[r][k] = z / prev;
        } else {
          a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
        }
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Exact rank over the given field.
inline std::size_t matrix_rank(const IntMatrix& m, FieldSpec field = {}) {
  if (m.empty() || m[0].empty()) return 0;
  if (field.characteristic != 0) {
    return detail::rank_mod_p(m, field.characteristic);
  }
  if (auto r = detail::bareiss_rank<std::int64_t>(m)) return *r;
  return *detail::bareiss_rank<boost::multiprecision::cpp_int>(m);
}

/// Basis of the degree-b Koszul complex of M in homological degree i:
/// the subsets F ⊆ supp(b), |F| = i, with b - ε_F in the grid.
struct KoszulDegree {
  Multidegree degree;
  std::vector<std::vector<std::uint32_t>> basis;  // basis[i] = sets F as masks
};

inline KoszulDegree koszul_basis(const PairModule& M, const Multidegree& b) {
  if (b.size() != M.n() || !divides(b, M.box())) {
    throw DomainError("Koszul degree " + b.to_string() + " outside box " +
                      M.box().to_string());
  }
  KoszulDegree K;
  K.degree = b;
  K.basis.resize(M.n() + 1);
  const std::uint32_t s = supp_mask(b);
  // Enumerate submasks of s.
  for (std::uint32_t F = s;; F = (F - 1) & s) {
    Multidegree d = b;
    for (std::size_t j = 0; j < M.n(); ++j) {
      if (F & (std::uint32_t{1} << j)) --d[j];
    }
    if (M.grid().contains(d)) K.basis[popcount(F)].push_back(F);
    if (F == 0) break;
  }
  for (auto& v : K.basis) std::sort(v.begin(), v.end());
  return K;
}

/// Matrix of ∂_i : K_i → K_{i-1} in degree b (rows index K_{i-1}).
inline IntMatrix koszul_differential(const KoszulDegree& K, std::size_t i) {
  if (i == 0 || i >= K.basis.size()) return {};
  const auto& src = K.basis[i];
  const auto& dst = K.basis[i - 1];
  IntMatrix m(dst.size(), std::vector<std::int64_t>(src.size(), 0));
  for (std::size_t col = 0; col < src.size(); ++col) {
    const std::uint32_t F = src[col];
    for (std::uint32_t rest = F; rest; rest &= rest - 1) {
      const std::uint32_t bit = rest & (~rest + 1);
      const std::uint32_t G = F & ~bit;
      auto it = std::lower_bound(dst.begin(), dst.end(), G);
      if (it == dst.end() || *it != G) continue;  // x_j m = 0
      const int pos = popcount(F & (bit - 1));
      m[static_cast<std::size_t>(it - dst.begin())][col] = (pos % 2) ? -1 : 1;
    }
  }
  return m;
}

inline IntMatrix koszul_differential(const PairModule& M, const Multidegree& b,
                                     std::size_t i) {
  return koszul_differential(koszul_basis(M, b), i);
}

/// β_{i,b}(M) for every i in degree b.
inline std::vector<int> betti_degree_all(const PairModule& M,
                                         const Multidegree& b,
                                         FieldSpec field = {}) {
  const KoszulDegree K = koszul_basis(M, b);
  const std::size_t n = M.n();
  std::vector<std::size_t> rank(n + 2, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    if (K.basis[i].empty() || K.basis[i - 1].empty()) continue;
    rank[i] = matrix_rank(koszul_differential(K, i), field);
  }
  std::vector<int> out(n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i) {
    out[i] = static_cast<int>(K.basis[i].size() - rank[i] - rank[i + 1]);
  }
  return out;
}

/// β_{i,b}(M) = dim_k Tor_i(k, M)_b.
inline int betti_degree(const PairModule& M, int i, const Multidegree& b,
                        FieldSpec field = {}) {
  const auto all = betti_degree_all(M, b, field);
  if (i < 0 || static_cast<std::size_t>(i) >= all.size()) return 0;
  return all[static_cast<std::size_t>(i)];
}

/// Nonzero graded Betti numbers of a module over [0, box].
class BettiTable {
 public:
  using Key = std::pair<int, Multidegree>;

  BettiTable() = default;
  BettiTable(std::size_t n, Multidegree box, FieldSpec field)
      : n_(n), box_(std::move(box)), field_(field) {}

  void set(int i, const Multidegree& b, int value) {
    if (value != 0) entries_[{i, b}] = value;
  }
  int get(int i, const Multidegree& b) const {
    auto it = entries_.find({i, b});
    return it == entries_.end() ? 0 : it->second;
  }

  const std::map<Key, int>& entries() const noexcept { return entries_; }
  const Multidegree& box() const noexcept { return box_; }
  FieldSpec field() const noexcept { return field_; }
  std::size_t n() const noexcept { return n_; }

  /// Projective dimension: largest i with a nonzero β_{i,b}.
  int projdim() const {
    int pd = -1;
    for (const auto& [key, v] : entries_) pd = std::max(pd, key.first);
    return pd;
  }
  /// sreg = max #supp(b) - i over nonzero β_{i,b}.
  int sreg() const {
    int best = -static_cast<int>(n_) - 1;
    for (const auto& [key, v] : entries_) {
      best = std::max(best, supp_count(key.second) - key.first);
    }
    return best;
  }
  /// Σ_b β_{i,b}.
  int total(int i) const {
    int t = 0;
    for (const auto& [key, v] : entries_) {
      if (key.first == i) t += v;
    }
    return t;
  }

  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::size_t n_ = 0;
  Multidegree box_;
  FieldSpec field_;
  std::map<Key, int> entries_;
};

inline BettiTable betti_table(const PairModule& M, FieldSpec field = {}) {
  require_nonzero(M, "betti_table");
  BettiTable T(M.n(), M.box(), field);
  for (const auto& b : enumerate_box(M.box())) {
    const auto all = betti_degree_all(M, b, field);
    for (std::size_t i = 0; i < all.size(); ++i) {
      T.set(static_cast<int>(i), b, all[i]);
    }
  }
  return T;
}

inline int projdim(const PairModule& M, FieldSpec field = {}) {
  return betti_table(M, field).projdim();
}

/// Auslander–Buchsbaum: depth = n - pd.
inline int depth(const PairModule& M, FieldSpec field = {}) {
  return static_cast<int>(M.n()) - projdim(M, field);
}

inline int sreg(const PairModule& M, FieldSpec field = {}) {
  return betti_table(M, field).sreg();
}

inline bool is_cohen_macaulay(const PairModule& M, FieldSpec field = {}) {
  return depth(M, field) == module_dim(M);
}

/// Summary of the homological invariants computed from one Betti table.
struct HomologicalInvariants {
  int projdim = 0;
  int depth = 0;
  int sreg = 0;
  int dim = 0;
  bool cohen_macaulay = false;
};

inline HomologicalInvariants homological_invariants(const PairModule& M,
                                                    FieldSpec field = {}) {
  const BettiTable T = betti_table(M, field);
  HomologicalInvariants h;
  h.projdim = T.projdim();
  h.depth = static_cast<int>(M.n()) - h.projdim;
  h.sreg = T.sreg();
  h.dim = module_dim(M);
  h.cohen_macaulay = h.depth == h.dim;
  return h;
}

}  // namespace adet
