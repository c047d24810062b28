#pragma once

// Multidegree arithmetic over N^n and boxes [0, a].
//
// A multidegree b stands for the monomial x^b = x_1^{b_1} ... x_n^{b_n}.
// Coordinates are 0-based throughout the library; the text syntax of the
// command line tool uses 1-based variable names x1..xn.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <string>
#include <vector>

#include "adet/error.hpp"

#ifndef ADET_MAX_VARIABLES
#define ADET_MAX_VARIABLES 12
#endif

namespace adet {

inline constexpr std::size_t kMaxVariables = ADET_MAX_VARIABLES;

/// Upper bound on the number of cells of a materialized box.
inline constexpr std::uint64_t kDefaultGridLimit = std::uint64_t{1} << 20;

/// Number of variables of S = k[x_1, ..., x_n].
struct PolyContext {
  std::size_t n = 0;

  explicit PolyContext(std::size_t vars) : n(vars) {
    if (n < 1 || n > kMaxVariables) {
      throw DomainError("number of variables must lie in [1, " +
                        std::to_string(kMaxVariables) + "], got " +
                        std::to_string(n));
    }
  }

  friend bool operator==(const PolyContext&, const PolyContext&) = default;
};

/// An exponent vector in N^n. Ordered lexicographically.
class Multidegree {
 public:
  using value_type = int;

  Multidegree() = default;
  explicit Multidegree(std::size_t n) : coords_(n, 0) {}
  Multidegree(std::initializer_list<int> coords) : coords_(coords) {
    check_nonnegative();
  }
  explicit Multidegree(std::vector<int> coords) : coords_(std::move(coords)) {
    check_nonnegative();
  }

  static Multidegree unit_vector(std::size_t n, std::size_t i, int value = 1) {
    Multidegree e(n);
    e.coords_.at(i) = value;
    return e;
  }
  static Multidegree constant(std::size_t n, int value) {
    return Multidegree(std::vector<int>(n, value));
  }

  std::size_t size() const noexcept { return coords_.size(); }
  int operator[](std::size_t i) const noexcept { return coords_[i]; }
  int& operator[](std::size_t i) noexcept { return coords_[i]; }

  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }
  const std::vector<int>& coords() const noexcept { return coords_; }

  bool is_zero() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](int v) { return v == 0; });
  }
  int total_degree() const noexcept {
    int s = 0;
    for (int v : coords_) s += v;
    return s;
  }

  friend auto operator<=>(const Multidegree&, const Multidegree&) = default;
  friend bool operator==(const Multidegree&, const Multidegree&) = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(coords_[i]);
    }
    return s + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const Multidegree& m) {
    return os << m.to_string();
  }

 private:
  void check_nonnegative() const {
    for (int v : coords_) {
      if (v < 0) throw DomainError("multidegree entries must be nonnegative");
    }
  }

  std::vector<int> coords_;
};

struct MultidegreeHash {
  std::size_t operator()(const Multidegree& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int v : m) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};

inline void require_same_size(const Multidegree& a, const Multidegree& b,
                              const char* op) {
  if (a.size() != b.size()) {
    throw DimensionError(std::string(op) + ": multidegrees of length " +
                         std::to_string(a.size()) + " and " +
                         std::to_string(b.size()));
  }
}

/// a ≼ b componentwise, i.e. x^a divides x^b.
inline bool divides(const Multidegree& a, const Multidegree& b) {
  require_same_size(a, b, "divides");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline Multidegree join(const Multidegree& a, const Multidegree& b) {
  require_same_size(a, b, "join");
  Multidegree r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline Multidegree meet(const Multidegree& a, const Multidegree& b) {
  require_same_size(a, b, "meet");
  Multidegree r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

inline Multidegree operator+(const Multidegree& a, const Multidegree& b) {
  require_same_size(a, b, "add");
  Multidegree r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

/// a - b; requires b ≼ a.
inline Multidegree operator-(const Multidegree& a, const Multidegree& b) {
  require_same_size(a, b, "subtract");
  Multidegree r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] > a[i]) throw DomainError("subtract: result would be negative");
    r[i] = a[i] - b[i];
  }
  return r;
}

/// Indices are 0-based. Held as a sorted vector.
using IndexSet = std::vector<std::size_t>;

/// Bit i set iff b_i >= a_i. n is bounded by kMaxVariables, so 32 bits do.
inline std::uint32_t supp_rel_mask(const Multidegree& b, const Multidegree& a) {
  require_same_size(b, a, "supp_rel");
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] >= a[i]) mask |= std::uint32_t{1} << i;
  }
  return mask;
}

inline IndexSet mask_to_indices(std::uint32_t mask) {
  IndexSet s;
  for (std::size_t i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1u) s.push_back(i);
  }
  return s;
}

inline int popcount(std::uint32_t mask) noexcept {
  return __builtin_popcount(mask);
}

/// supp^a(b) = {i | b_i >= a_i}.
inline IndexSet supp_rel(const Multidegree& b, const Multidegree& a) {
  return mask_to_indices(supp_rel_mask(b, a));
}

inline int supp_rel_count(const Multidegree& b, const Multidegree& a) {
  return popcount(supp_rel_mask(b, a));
}

/// supp(b) = supp^1(b) = {i | b_i >= 1}.
inline std::uint32_t supp_mask(const Multidegree& b) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] > 0) mask |= std::uint32_t{1} << i;
  }
  return mask;
}

inline IndexSet supp(const Multidegree& b) {
  return mask_to_indices(supp_mask(b));
}

inline int supp_count(const Multidegree& b) { return popcount(supp_mask(b)); }

/// (a ◁ b)_i = a_i + b_i if a_i != 0, else 0.
inline Multidegree slide_vec(const Multidegree& a, const Multidegree& b) {
  require_same_size(a, b, "slide_vec");
  Multidegree r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] ? a[i] + b[i] : 0;
  return r;
}

/// (c \ a)_i = c_i + 1 - a_i if a_i != 0, else 0. Requires a ≼ c.
inline Multidegree setminus_vec(const Multidegree& c, const Multidegree& a) {
  require_same_size(c, a, "setminus_vec");
  if (!divides(a, c)) {
    throw DomainError("setminus_vec: " + a.to_string() + " is not below " +
                      c.to_string());
  }
  Multidegree r(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) r[i] = a[i] ? c[i] + 1 - a[i] : 0;
  return r;
}

/// Closed interval [lo, hi] of N^n with lo ≼ hi.
struct Interval {
  Multidegree lo;
  Multidegree hi;

  Interval() = default;
  Interval(Multidegree l, Multidegree h) : lo(std::move(l)), hi(std::move(h)) {
    require_same_size(lo, hi, "Interval");
    if (!divides(lo, hi)) {
      throw DomainError("interval bounds out of order: " + lo.to_string() +
                        " vs " + hi.to_string());
    }
  }

  bool contains(const Multidegree& d) const {
    return divides(lo, d) && divides(d, hi);
  }
  std::uint64_t volume() const {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < lo.size(); ++i) {
      v *= static_cast<std::uint64_t>(hi[i] - lo[i] + 1);
    }
    return v;
  }

  friend auto operator<=>(const Interval&, const Interval&) = default;
  friend bool operator==(const Interval&, const Interval&) = default;

  std::string to_string() const {
    return "[" + lo.to_string() + "," + hi.to_string() + "]";
  }
};

/// Number of points of [0, a]; throws ResourceError beyond `limit`.
inline std::uint64_t box_volume(const Multidegree& a,
                                std::uint64_t limit = kDefaultGridLimit) {
  std::uint64_t v = 1;
  for (int ai : a) {
    v *= static_cast<std::uint64_t>(ai) + 1;
    if (v > limit) {
      throw ResourceError("box " + a.to_string() + " exceeds grid limit of " +
                          std::to_string(limit) + " cells");
    }
  }
  return v;
}

/// Forward range over [lo, hi] in lexicographic order (last coordinate
/// varies fastest).
class BoxRange {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Multidegree;
    using difference_type = std::ptrdiff_t;
    using pointer = const Multidegree*;
    using reference = const Multidegree&;

    iterator() = default;
    iterator(const BoxRange* range, bool done)
        : range_(range), current_(range->lo_), done_(done) {}

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }

    iterator& operator++() {
      const std::size_t n = current_.size();
      for (std::size_t k = n; k-- > 0;) {
        if (current_[k] < range_->hi_[k]) {
          ++current_[k];
          return *this;
        }
        current_[k] = range_->lo_[k];
      }
      done_ = true;
      return *this;
    }
    iterator operator++(int) {
      iterator t = *this;
      ++*this;
      return t;
    }

    friend bool operator==(const iterator& x, const iterator& y) {
      return x.done_ == y.done_ && (x.done_ || x.current_ == y.current_);
    }

   private:
    const BoxRange* range_ = nullptr;
    Multidegree current_;
    bool done_ = true;
  };

  BoxRange(Multidegree lo, Multidegree hi)
      : lo_(std::move(lo)), hi_(std::move(hi)) {
    require_same_size(lo_, hi_, "BoxRange");
    empty_ = !divides(lo_, hi_);
  }

  iterator begin() const { return iterator(this, empty_); }
  iterator end() const { return iterator(this, true); }

 private:
  Multidegree lo_;
  Multidegree hi_;
  bool empty_ = false;
};

/// Lexicographic stream of all b in [0, a]. Throws ResourceError when the
/// box has more than `limit` cells.
inline BoxRange enumerate_box(const Multidegree& a,
                              std::uint64_t limit = kDefaultGridLimit) {
  box_volume(a, limit);
  return BoxRange(Multidegree(a.size()), a);
}

/// Lexicographic linearization of [0, a]; index 0 is the zero vector.
class BoxIndexer {
 public:
  BoxIndexer() = default;
  explicit BoxIndexer(const Multidegree& box,
                      std::uint64_t limit = kDefaultGridLimit)
      : box_(box), strides_(box.size()) {
    volume_ = box_volume(box, limit);
    std::size_t s = 1;
    for (std::size_t k = box.size(); k-- > 0;) {
      strides_[k] = s;
      s *= static_cast<std::size_t>(box[k]) + 1;
    }
  }

  const Multidegree& box() const noexcept { return box_; }
  std::size_t volume() const noexcept { return volume_; }
  std::size_t stride(std::size_t k) const noexcept { return strides_[k]; }

  bool in_box(const Multidegree& d) const {
    return d.size() == box_.size() && divides(d, box_);
  }

  std::size_t index(const Multidegree& d) const noexcept {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < d.size(); ++k) {
      idx += strides_[k] * static_cast<std::size_t>(d[k]);
    }
    return idx;
  }

  Multidegree point(std::size_t idx) const {
    Multidegree d(box_.size());
    for (std::size_t k = 0; k < box_.size(); ++k) {
      d[k] = static_cast<int>(idx / strides_[k]);
      idx %= strides_[k];
    }
    return d;
  }

 private:
  Multidegree box_;
  std::vector<std::size_t> strides_;
  std::size_t volume_ = 0;
};

/// A subset of the box [0, box], stored as a bit table over the
/// lexicographic linearization.
class Grid {
 public:
  Grid() = default;
  explicit Grid(const Multidegree& box, std::uint64_t limit = kDefaultGridLimit)
      : indexer_(box, limit), bits_(indexer_.volume(), false) {}

  const Multidegree& box() const noexcept { return indexer_.box(); }
  const BoxIndexer& indexer() const noexcept { return indexer_; }
  std::size_t dimension() const noexcept { return indexer_.box().size(); }

  bool contains(const Multidegree& d) const {
    return indexer_.in_box(d) && bits_[indexer_.index(d)];
  }
  bool contains_index(std::size_t idx) const noexcept { return bits_[idx]; }

  void insert(const Multidegree& d) {
    if (!indexer_.in_box(d)) {
      throw DomainError("grid point " + d.to_string() + " outside box " +
                        box().to_string());
    }
    set_index(indexer_.index(d), true);
  }
  void set_index(std::size_t idx, bool value) {
    if (bits_[idx] != value) count_ += value ? 1 : -1;
    bits_[idx] = value;
  }

  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  /// Members in lexicographic order.
  std::vector<Multidegree> members() const {
    std::vector<Multidegree> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i]) out.push_back(indexer_.point(i));
    }
    return out;
  }
  std::vector<std::size_t> member_indices() const {
    std::vector<std::size_t> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i]) out.push_back(i);
    }
    return out;
  }

  /// b, d in the grid and b ≼ e ≼ d imply e in the grid.
  bool is_order_convex() const {
    const auto pts = members();
    for (const auto& lo : pts) {
      for (const auto& hi : pts) {
        if (!divides(lo, hi)) continue;
        for (const auto& e : BoxRange(lo, hi)) {
          if (!contains(e)) return false;
        }
      }
    }
    return true;
  }

  friend bool operator==(const Grid& x, const Grid& y) {
    return x.box() == y.box() && x.bits_ == y.bits_;
  }

 private:
  BoxIndexer indexer_;
  std::vector<bool> bits_;
  std::size_t count_ = 0;
};

}  // namespace adet

template <>
struct std::hash<adet::Multidegree> : adet::MultidegreeHash {};
