#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace adet {

/// Base of every error raised by the library. `code()` is a stable
/// machine-readable identifier surfaced by the command line tool.
class Error : public std::runtime_error {
 public:
  Error(std::string_view code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  std::string_view code() const noexcept { return code_; }

 private:
  std::string_view code_;
};

/// Operands live in polynomial rings with different numbers of variables.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what)
      : Error("dimension_error", what) {}
};

/// A mathematical precondition does not hold (J not inside I, box too
/// small, zero or unit ideal where a proper one is required, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error("domain_error", what) {}
};

/// An integer argument (skeleton level, homological degree) out of range.
class RangeError : public Error {
 public:
  explicit RangeError(const std::string& what) : Error("range_error", what) {}
};

/// Invariants such as depth or sdepth are undefined for the zero module.
class ZeroModuleError : public Error {
 public:
  explicit ZeroModuleError(const std::string& what)
      : Error("zero_module", what) {}
};

/// Grid size, node or time budget exhausted. When raised by a search the
/// certified bounds are attached; `lower <= true value <= upper`.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what, int lower = -1,
                         int upper = -1)
      : Error("resource_error", what), lower_(lower), upper_(upper) {}

  bool has_bounds() const noexcept { return lower_ >= 0 && upper_ >= 0; }
  int lower() const noexcept { return lower_; }
  int upper() const noexcept { return upper_; }

 private:
  int lower_;
  int upper_;
};

/// Malformed textual or structured input.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error("syntax_error", what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace adet
