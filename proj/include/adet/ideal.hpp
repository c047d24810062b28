#pragma once

// Monomial ideals of S = k[x_1, ..., x_n] held by their minimal generators.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "adet/core.hpp"
#include "adet/error.hpp"

namespace adet {

class MonomialIdeal;
MonomialIdeal minimalize(std::size_t n, std::vector<Multidegree> gens);

/// A monomial ideal given by its minimal generators, sorted
/// lexicographically. The zero ideal has no generators; the unit ideal has
/// the single generator 0.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  static MonomialIdeal zero(std::size_t n) {
    PolyContext ctx(n);
    MonomialIdeal I;
    I.n_ = ctx.n;
    return I;
  }
  static MonomialIdeal unit(std::size_t n) {
    MonomialIdeal I = zero(n);
    I.gens_.push_back(Multidegree(n));
    return I;
  }
  static MonomialIdeal generated_by(std::size_t n,
                                    std::vector<Multidegree> gens) {
    return minimalize(n, std::move(gens));
  }

  std::size_t n() const noexcept { return n_; }
  const std::vector<Multidegree>& generators() const noexcept { return gens_; }
  std::size_t num_generators() const noexcept { return gens_.size(); }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept {
    return gens_.size() == 1 && gens_.front().is_zero();
  }
  bool is_proper_nonzero() const noexcept { return !is_zero() && !is_unit(); }

  /// Join of all generators; the zero vector for the zero ideal.
  Multidegree generator_join() const {
    Multidegree j(n_);
    for (const auto& g : gens_) j = join(j, g);
    return j;
  }

  /// x^b in I.
  bool contains(const Multidegree& b) const {
    if (b.size() != n_) {
      throw DimensionError("contains: ideal in " + std::to_string(n_) +
                           " variables, degree of length " +
                           std::to_string(b.size()));
    }
    for (const auto& g : gens_) {
      bool ok = true;
      for (std::size_t i = 0; i < n_; ++i) {
        if (g[i] > b[i]) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
    return false;
  }

  /// Every generator of J lies in *this.
  bool contains_ideal(const MonomialIdeal& J) const {
    require_same_ring(J, "contains_ideal");
    return std::all_of(J.gens_.begin(), J.gens_.end(),
                       [&](const Multidegree& g) { return contains(g); });
  }

  void require_same_ring(const MonomialIdeal& other, const char* op) const {
    if (other.n_ != n_) {
      throw DimensionError(std::string(op) + ": ideals in " +
                           std::to_string(n_) + " and " +
                           std::to_string(other.n_) + " variables");
    }
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
  friend auto operator<=>(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.gens_ <=> b.gens_;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i) s += ", ";
      s += gens_[i].to_string();
    }
    return s + ")";
  }

 private:
  friend MonomialIdeal minimalize(std::size_t n, std::vector<Multidegree> gens);

  std::size_t n_ = 0;
  std::vector<Multidegree> gens_;
};

/// Divisibility-minimal antichain of `gens`, sorted lexicographically.
inline MonomialIdeal minimalize(std::size_t n, std::vector<Multidegree> gens) {
  MonomialIdeal I = MonomialIdeal::zero(n);
  for (const auto& g : gens) {
    if (g.size() != n) {
      throw DimensionError("minimalize: generator " + g.to_string() +
                           " in a ring with " + std::to_string(n) +
                           " variables");
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // A divisor of g precedes g lexicographically, so one forward pass with
  // the kept prefix suffices.
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : I.gens_) {
      if (divides(h, g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) I.gens_.push_back(g);
  }
  return I;
}

/// 𝔪^d = (x_i^{d_i} | d_i > 0), an irreducible monomial ideal.
struct IrreducibleComponent {
  Multidegree exponents;

  explicit IrreducibleComponent(Multidegree d) : exponents(std::move(d)) {
    if (exponents.is_zero()) {
      throw DomainError("irreducible component with zero exponent vector");
    }
  }

  MonomialIdeal to_ideal() const {
    const std::size_t n = exponents.size();
    std::vector<Multidegree> gens;
    for (std::size_t i = 0; i < n; ++i) {
      if (exponents[i] > 0) {
        gens.push_back(Multidegree::unit_vector(n, i, exponents[i]));
      }
    }
    return minimalize(n, std::move(gens));
  }

  /// 𝔪^d ⊆ 𝔪^e.
  bool inside(const IrreducibleComponent& e) const {
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (exponents[i] > 0 &&
          (e.exponents[i] == 0 || e.exponents[i] > exponents[i])) {
        return false;
      }
    }
    return true;
  }

  friend auto operator<=>(const IrreducibleComponent&,
                          const IrreducibleComponent&) = default;
  friend bool operator==(const IrreducibleComponent&,
                         const IrreducibleComponent&) = default;
};

inline MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  a.require_same_ring(b, "sum");
  std::vector<Multidegree> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return minimalize(a.n(), std::move(gens));
}

inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  a.require_same_ring(b, "intersect");
  std::vector<Multidegree> gens;
  gens.reserve(a.num_generators() * b.num_generators());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(join(g, h));
  }
  return minimalize(a.n(), std::move(gens));
}

/// I : x^m, generated by g - meet(g, m) over the generators g of I.
inline MonomialIdeal colon(const MonomialIdeal& I, const Multidegree& m) {
  if (m.size() != I.n()) {
    throw DimensionError("colon: monomial of length " +
                         std::to_string(m.size()) + " for ideal in " +
                         std::to_string(I.n()) + " variables");
  }
  std::vector<Multidegree> gens;
  for (const auto& g : I.generators()) gens.push_back(g - meet(g, m));
  return minimalize(I.n(), std::move(gens));
}

inline MonomialIdeal intersect_components(
    std::size_t n, const std::vector<IrreducibleComponent>& comps) {
  MonomialIdeal acc = MonomialIdeal::unit(n);
  for (const auto& c : comps) acc = intersect(acc, c.to_ideal());
  return acc;
}

namespace detail {

inline void split_components(std::vector<Multidegree> gens,
                             std::vector<IrreducibleComponent>& out) {
  const std::size_t n = gens.front().size();
  auto it = std::find_if(gens.begin(), gens.end(), [](const Multidegree& g) {
    return supp_count(g) >= 2;
  });
  if (it == gens.end()) {
    // Minimal pure powers: at most one per variable.
    Multidegree d(n);
    for (const auto& g : gens) {
      for (std::size_t i = 0; i < n; ++i) {
        if (g[i] > 0) d[i] = g[i];
      }
    }
    out.emplace_back(d);
    return;
  }
  const Multidegree u = *it;
  gens.erase(it);
  std::size_t j = 0;
  while (u[j] == 0) ++j;
  Multidegree v(n);
  v[j] = u[j];
  Multidegree w = u - v;
  for (const Multidegree& piece : {v, w}) {
    std::vector<Multidegree> branch = gens;
    branch.push_back(piece);
    split_components(minimalize(n, std::move(branch)).generators(), out);
  }
}

}  // namespace detail

/// Irredundant irreducible decomposition I = ∩ 𝔪^{d_i}, sorted.
inline std::vector<IrreducibleComponent> irreducible_decomposition(
    const MonomialIdeal& I) {
  if (!I.is_proper_nonzero()) {
    throw DomainError("irreducible_decomposition: zero or unit ideal");
  }
  std::vector<IrreducibleComponent> raw;
  detail::split_components(I.generators(), raw);
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<IrreducibleComponent> out;
  for (std::size_t a = 0; a < raw.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < raw.size() && !redundant; ++b) {
      // A component containing another one is implied by it.
      redundant = a != b && raw[b].inside(raw[a]);
    }
    if (!redundant) out.push_back(raw[a]);
  }
  return out;
}

/// Alexander dual ideal with respect to a: generated by a \ d over the
/// irreducible components 𝔪^d of I, and equal to ∩ 𝔪^{a \ g} over the
/// generators g of I. Both forms are computed and compared.
inline MonomialIdeal dual_ideal(const MonomialIdeal& I, const Multidegree& a) {
  if (a.size() != I.n()) {
    throw DimensionError("dual_ideal: box of length " +
                         std::to_string(a.size()));
  }
  if (!I.is_proper_nonzero()) {
    throw DomainError("dual_ideal: zero or unit ideal");
  }
  for (const auto& g : I.generators()) {
    if (!divides(g, a)) {
      throw DomainError("dual_ideal: box " + a.to_string() +
                        " does not dominate generator " + g.to_string());
    }
  }
  std::vector<Multidegree> gens;
  for (const auto& c : irreducible_decomposition(I)) {
    gens.push_back(setminus_vec(a, c.exponents));
  }
  MonomialIdeal by_components = minimalize(I.n(), std::move(gens));

  std::vector<IrreducibleComponent> comps;
  for (const auto& g : I.generators()) comps.emplace_back(setminus_vec(a, g));
  MonomialIdeal by_generators = intersect_components(I.n(), comps);
  if (by_components != by_generators) {
    throw std::logic_error("dual_ideal: generator and component forms differ");
  }
  return by_components;
}

/// I^{◁b}, generated by g ◁ b over the generators g of I.
inline MonomialIdeal slide_ideal(const MonomialIdeal& I, const Multidegree& b) {
  if (b.size() != I.n()) {
    throw DimensionError("slide_ideal: shift of length " +
                         std::to_string(b.size()));
  }
  std::vector<Multidegree> gens;
  for (const auto& g : I.generators()) gens.push_back(slide_vec(g, b));
  return minimalize(I.n(), std::move(gens));
}

namespace detail {

inline bool share_nonzero_exponent(const Multidegree& x, const Multidegree& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0 && x[i] == y[i]) return true;
  }
  return false;
}

inline bool pairwise_distinct_exponents(const std::vector<Multidegree>& v) {
  for (std::size_t a = 0; a < v.size(); ++a) {
    for (std::size_t b = a + 1; b < v.size(); ++b) {
      if (share_nonzero_exponent(v[a], v[b])) return false;
    }
  }
  return true;
}

}  // namespace detail

/// No two distinct minimal generators share a nonzero exponent in a variable.
inline bool is_generic(const MonomialIdeal& I) {
  if (!I.is_proper_nonzero()) throw DomainError("is_generic: zero or unit ideal");
  return detail::pairwise_distinct_exponents(I.generators());
}

/// No two distinct irreducible components share a minimal generator.
inline bool is_cogeneric(const MonomialIdeal& I) {
  if (!I.is_proper_nonzero()) {
    throw DomainError("is_cogeneric: zero or unit ideal");
  }
  std::vector<Multidegree> exps;
  for (const auto& c : irreducible_decomposition(I)) exps.push_back(c.exponents);
  return detail::pairwise_distinct_exponents(exps);
}

/// Generated by variables (a monomial prime ideal, possibly zero).
inline bool is_generated_by_variables(const MonomialIdeal& I) {
  return std::all_of(I.generators().begin(), I.generators().end(),
                     [](const Multidegree& g) { return g.total_degree() == 1; });
}

/// An ordering m_1, ..., m_r of the generators such that every colon
/// (m_1, ..., m_{i-1}) : m_i is generated by variables, or nullopt. The
/// search is depth-first over generators in lexicographic order, so the
/// returned ordering is the lexicographically first witness.
inline std::optional<std::vector<Multidegree>> has_linear_quotient(
    const MonomialIdeal& I) {
  const auto& gens = I.generators();
  const std::size_t r = gens.size();
  if (r == 0) return std::nullopt;
  if (r > 20) throw ResourceError("has_linear_quotient: too many generators");
  std::vector<std::size_t> order;
  std::set<std::uint32_t> dead;  // chosen-prefix sets with no completion

  auto extend = [&](auto&& self, std::uint32_t used) -> bool {
    if (order.size() == r) return true;
    if (dead.count(used)) return false;
    std::vector<Multidegree> prefix;
    for (std::size_t k : order) prefix.push_back(gens[k]);
    const MonomialIdeal prev = minimalize(I.n(), prefix);
    for (std::size_t k = 0; k < r; ++k) {
      if (used & (std::uint32_t{1} << k)) continue;
      if (!order.empty() && !is_generated_by_variables(colon(prev, gens[k]))) {
        continue;
      }
      order.push_back(k);
      if (self(self, used | (std::uint32_t{1} << k))) return true;
      order.pop_back();
    }
    dead.insert(used);
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  std::vector<Multidegree> out;
  for (std::size_t k : order) out.push_back(gens[k]);
  return out;
}

/// The ideal of monomials x^b with #supp^a(b) > l. Coordinates with
/// a_i = 0 lie in supp^a(b) for every b, so they never appear in a
/// generator but count towards the threshold.
inline MonomialIdeal skeleton_power_ideal(const Multidegree& a, int l) {
  const std::size_t n = a.size();
  if (l < 0 || static_cast<std::size_t>(l) > n) {
    throw RangeError("skeleton level " + std::to_string(l) +
                     " outside [0, " + std::to_string(n) + "]");
  }
  std::vector<std::size_t> positive;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] > 0) positive.push_back(i);
  }
  const int always = static_cast<int>(n - positive.size());
  const int need = l + 1 - always;
  if (need <= 0) return MonomialIdeal::unit(n);
  if (static_cast<std::size_t>(need) > positive.size()) {
    return MonomialIdeal::zero(n);
  }
  std::vector<Multidegree> gens;
  const std::size_t p = positive.size();
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << p); ++mask) {
    if (popcount(mask) != need) continue;
    Multidegree g(n);
    for (std::size_t k = 0; k < p; ++k) {
      if (mask & (std::uint32_t{1} << k)) g[positive[k]] = a[positive[k]];
    }
    gens.push_back(g);
  }
  return minimalize(n, std::move(gens));
}

/// σ(I) = min #supp over the generators (the minimum over all of I).
inline int sigma(const MonomialIdeal& I) {
  if (I.is_zero()) throw DomainError("sigma: zero ideal");
  int s = static_cast<int>(I.n());
  for (const auto& g : I.generators()) s = std::min(s, supp_count(g));
  return s;
}

}  // namespace adet
