#pragma once

#include <cstdint>
#include <vector>

#include "orbitrace/integer.hpp"

namespace orbitrace {

/// Exceptional fiber invariants; beta is 0 for bounded data.
struct Fiber {
  std::int64_t mu = 0;
  std::int64_t beta = 0;

  bool operator==(const Fiber&) const = default;
};

/// Seifert invariants of a Seifert fibered space over an oriented surface.
struct SeifertData {
  enum class Variant { Closed, Bounded };

  Variant variant = Variant::Closed;
  std::int64_t genus = 0;
  std::int64_t b = 0;         // closed only
  std::int64_t boundary = 0;  // bounded only, >= 1
  std::vector<Fiber> fibers;

  static SeifertData closed(std::int64_t genus, std::int64_t b, std::vector<Fiber> fibers);
  static SeifertData bounded(std::int64_t genus, std::int64_t boundary,
                             const std::vector<std::int64_t>& mus);

  bool is_closed() const { return variant == Variant::Closed; }
  std::int64_t r() const { return static_cast<std::int64_t>(fibers.size()); }
  /// Euler characteristic of the base surface: 2-2g, or 2-2g-m when bounded.
  std::int64_t chi_surface() const;

  /// Throws InvalidInput describing the first violated constraint.
  void validate() const;

  bool operator==(const SeifertData&) const = default;
};

}  // namespace orbitrace
