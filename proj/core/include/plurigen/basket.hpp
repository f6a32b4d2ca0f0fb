#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace plurigen {

/// A virtual cyclic quotient point of type 1/r(1,-1,b).
///
/// Valid points satisfy r >= 2, gcd(b, r) = 1 and 0 < 2b <= r.
class OrbifoldPoint {
 public:
  /// Throws PreconditionError if (b, r) is not a normalized basket pair.
  OrbifoldPoint(std::int64_t b, std::int64_t r);

  std::int64_t b() const noexcept { return b_; }
  std::int64_t r() const noexcept { return r_; }

  /// "b/r"
  std::string to_string() const;

  friend bool operator==(const OrbifoldPoint&, const OrbifoldPoint&) = default;
  /// Canonical order: by r, then by b.
  friend auto operator<=>(const OrbifoldPoint& lhs, const OrbifoldPoint& rhs) {
    if (auto c = lhs.r_ <=> rhs.r_; c != 0) return c;
    return lhs.b_ <=> rhs.b_;
  }

  static bool is_valid(std::int64_t b, std::int64_t r) noexcept;

 private:
  std::int64_t b_;
  std::int64_t r_;
};

/// Reid basket: a multiset of orbifold points stored as (point, multiplicity)
/// entries sorted by point, with no zero multiplicities.
class Basket {
 public:
  struct Entry {
    OrbifoldPoint point;
    std::int64_t mult;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  Basket() = default;
  explicit Basket(const std::vector<OrbifoldPoint>& points);

  /// Adds `mult` copies of `p`. Throws PreconditionError if mult < 1.
  void add(const OrbifoldPoint& p, std::int64_t mult = 1);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  /// Number of points counted with multiplicity.
  std::int64_t size() const noexcept;
  /// Largest index r over the basket, 0 when empty.
  std::int64_t max_index() const noexcept;
  /// The points expanded by multiplicity, in canonical order.
  std::vector<OrbifoldPoint> points() const;

  /// Renders in the parse_basket grammar, e.g. "3x1/2,1/3".
  std::string to_string() const;

  friend bool operator==(const Basket&, const Basket&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Parses a comma-separated list of items "b/r" or "k x b/r" (whitespace
/// ignored, multiplicity separator 'x' or 'X'). An empty or all-blank string
/// is the empty basket. Throws ParseError naming the offending item.
Basket parse_basket(std::string_view text);

}  // namespace plurigen
