#pragma once

// Positively a-determined quotient modules M = I/J of monomial ideals.
//
// A PairModule stores (top I, bottom J, box a) together with the grid of
// degrees b in [0, a] with x^b in I \ J. Every module has a k-basis of
// monomials with at most one basis element per degree, x_i maps basis
// element b to b + e_i or to zero, and everything outside the box is
// determined by the box.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "adet/core.hpp"
#include "adet/error.hpp"
#include "adet/ideal.hpp"

namespace adet {

class PairModule {
 public:
  PairModule() = default;

  /// I/J with box a. The box defaults to the join of all generators of I
  /// and J. Throws DomainError if J ⊄ I or the box is too small.
  static PairModule make(const MonomialIdeal& top, const MonomialIdeal& bottom,
                         std::optional<Multidegree> box = std::nullopt,
                         std::uint64_t grid_limit = kDefaultGridLimit) {
    top.require_same_ring(bottom, "make_pair");
    if (!top.contains_ideal(bottom)) {
      throw DomainError("make_pair: bottom ideal " + bottom.to_string() +
                        " is not contained in top ideal " + top.to_string());
    }
    Multidegree a = box ? *box : join(top.generator_join(), bottom.generator_join());
    if (a.size() != top.n()) {
      throw DimensionError("make_pair: box of length " +
                           std::to_string(a.size()) + " for " +
                           std::to_string(top.n()) + " variables");
    }
    for (const auto* ideal : {&top, &bottom}) {
      for (const auto& g : ideal->generators()) {
        if (!divides(g, a)) {
          throw DomainError("make_pair: box " + a.to_string() +
                            " does not dominate generator " + g.to_string());
        }
      }
    }
    PairModule M;
    M.top_ = top;
    M.bottom_ = bottom;
    M.grid_ = Grid(a, grid_limit);
    const BoxIndexer& ix = M.grid_.indexer();
    for (std::size_t idx = 0; idx < ix.volume(); ++idx) {
      const Multidegree d = ix.point(idx);
      if (top.contains(d) && !bottom.contains(d)) M.grid_.set_index(idx, true);
    }
    return M;
  }

  /// S/I.
  static PairModule quotient(const MonomialIdeal& I,
                             std::optional<Multidegree> box = std::nullopt) {
    return make(MonomialIdeal::unit(I.n()), I, std::move(box));
  }
  /// I regarded as a module.
  static PairModule ideal(const MonomialIdeal& I,
                          std::optional<Multidegree> box = std::nullopt) {
    return make(I, MonomialIdeal::zero(I.n()), std::move(box));
  }
  /// The free module S.
  static PairModule free_module(std::size_t n,
                         std::optional<Multidegree> box = std::nullopt) {
    return make(MonomialIdeal::unit(n), MonomialIdeal::zero(n), std::move(box));
  }

  const MonomialIdeal& top() const noexcept { return top_; }
  const MonomialIdeal& bottom() const noexcept { return bottom_; }
  const Multidegree& box() const noexcept { return grid_.box(); }
  const Grid& grid() const noexcept { return grid_; }
  std::size_t n() const noexcept { return top_.n(); }
  bool is_zero() const noexcept { return grid_.empty(); }

  friend bool operator==(const PairModule& a, const PairModule& b) {
    return a.top_ == b.top_ && a.bottom_ == b.bottom_ && a.box() == b.box();
  }

  std::string to_string() const {
    return top_.to_string() + " / " + bottom_.to_string() + " @ " +
           box().to_string();
  }

 private:
  MonomialIdeal top_;
  MonomialIdeal bottom_;
  Grid grid_;
};

inline PairModule make_pair_module(const MonomialIdeal& top,
                                   const MonomialIdeal& bottom,
                                   std::optional<Multidegree> box = std::nullopt) {
  return PairModule::make(top, bottom, std::move(box));
}

inline void require_nonzero(const PairModule& M, const char* op) {
  if (M.is_zero()) throw ZeroModuleError(std::string(op) + ": zero module");
}

/// dim_S M = max #supp^a(b) over the grid.
inline int module_dim(const PairModule& M) {
  require_nonzero(M, "module_dim");
  int best = 0;
  for (const auto& b : M.grid().members()) {
    best = std::max(best, supp_rel_count(b, M.box()));
  }
  return best;
}

/// σ(M) = min #supp(b) over the grid.
inline int sigma(const PairModule& M) {
  require_nonzero(M, "sigma");
  int best = static_cast<int>(M.n());
  for (const auto& b : M.grid().members()) best = std::min(best, supp_count(b));
  return best;
}

/// Same ideals over a larger box a' ≽ box(M).
inline PairModule rebox(const PairModule& M, const Multidegree& a) {
  require_same_size(a, M.box(), "rebox");
  if (!divides(M.box(), a)) {
    throw DomainError("rebox: " + a.to_string() + " does not dominate " +
                      M.box().to_string());
  }
  return PairModule::make(M.top(), M.bottom(), a);
}

namespace detail {

/// Dual ideal with the conventions A(0) = S and A(S) = 0.
inline MonomialIdeal dual_or_convention(const MonomialIdeal& I,
                                        const Multidegree& a) {
  if (I.is_zero()) return MonomialIdeal::unit(I.n());
  if (I.is_unit()) return MonomialIdeal::zero(I.n());
  return dual_ideal(I, a);
}

inline Grid reflect(const Grid& g) {
  Grid out(g.box());
  for (const auto& b : g.members()) out.insert(g.box() - b);
  return out;
}

}  // namespace detail

/// A_a(I/J) = J*/I* with * the dual ideal with respect to the box. The
/// grid of the result is the reflection a - grid(M).
inline PairModule alexander_dual(const PairModule& M) {
  const Multidegree& a = M.box();
  PairModule D = PairModule::make(detail::dual_or_convention(M.bottom(), a),
                                  detail::dual_or_convention(M.top(), a), a);
  if (!(D.grid() == detail::reflect(M.grid()))) {
    throw std::logic_error("alexander_dual: grid is not the reflection of " +
                           M.to_string());
  }
  return D;
}

/// A_a(M) for a ≽ box(M); the module is reboxed to a first.
inline PairModule alexander_dual(const PairModule& M, const Multidegree& a) {
  if (a.size() != M.n() || !divides(M.box(), a)) {
    throw DomainError("alexander_dual: box " + a.to_string() +
                      " does not dominate " + M.box().to_string());
  }
  return alexander_dual(a == M.box() ? M : rebox(M, a));
}

/// M^{≤l} = M / M^{>l}: kills every degree with #supp^a > l.
inline PairModule skeleton(const PairModule& M, int l) {
  const MonomialIdeal high = skeleton_power_ideal(M.box(), l);
  return PairModule::make(M.top(),
                          sum(M.bottom(), intersect(M.top(), high)), M.box());
}

/// M^{>l-1} / M^{>l}: the degrees with #supp^a exactly l.
inline PairModule layer(const PairModule& M, int l) {
  if (l < 1 || static_cast<std::size_t>(l) > M.n()) {
    throw RangeError("layer level " + std::to_string(l) + " outside [1, " +
                     std::to_string(M.n()) + "]");
  }
  const MonomialIdeal above = skeleton_power_ideal(M.box(), l - 1);
  const MonomialIdeal high = skeleton_power_ideal(M.box(), l);
  return PairModule::make(sum(intersect(M.top(), above), M.bottom()),
                          sum(intersect(M.top(), high), M.bottom()), M.box());
}

/// M^{◁b} = I^{◁b} / J^{◁b} over the box box(M) ◁ b.
inline PairModule slide_pair(const PairModule& M, const Multidegree& b) {
  if (b.size() != M.n()) {
    throw DimensionError("slide_pair: shift of length " +
                         std::to_string(b.size()));
  }
  return PairModule::make(slide_ideal(M.top(), b), slide_ideal(M.bottom(), b),
                          slide_vec(M.box(), b));
}

/// Parameters of k_a[c, b], c ≼ b ≼ a.
struct IntervalModuleSpec {
  Multidegree c;
  Multidegree b;
  Multidegree box;

  IntervalModuleSpec(Multidegree lo, Multidegree hi, Multidegree a)
      : c(std::move(lo)), b(std::move(hi)), box(std::move(a)) {
    require_same_size(c, b, "interval_module");
    require_same_size(b, box, "interval_module");
    if (!divides(c, b) || !divides(b, box)) {
      throw DomainError("interval_module: need c ≼ b ≼ a, got " +
                        c.to_string() + ", " + b.to_string() + ", " +
                        box.to_string());
    }
  }
};

/// k_a[c, b] = x^c S / x^c (x_i^{b_i - c_i + 1} | i ∉ supp^a(b)). Its grid
/// in [0, a] is the interval [c, b].
inline PairModule interval_module(const IntervalModuleSpec& spec) {
  const std::size_t n = spec.c.size();
  const std::uint32_t open = supp_rel_mask(spec.b, spec.box);
  std::vector<Multidegree> killers;
  for (std::size_t i = 0; i < n; ++i) {
    if (open & (std::uint32_t{1} << i)) continue;
    Multidegree g = spec.c;
    g[i] = spec.b[i] + 1;
    killers.push_back(g);
  }
  return PairModule::make(MonomialIdeal::generated_by(n, {spec.c}),
                          MonomialIdeal::generated_by(n, std::move(killers)),
                          spec.box);
}

inline PairModule interval_module(const Multidegree& c, const Multidegree& b,
                                  const Multidegree& a) {
  return interval_module(IntervalModuleSpec(c, b, a));
}

}  // namespace adet
