#pragma once

#include <cstdint>
#include <vector>

#include "plurigen/basket.hpp"
#include "plurigen/rational.hpp"

namespace plurigen {

/// Anti-canonical volume (-K)^3 together with the Reid basket; these two
/// determine every plurigenus h^0(-mK).
class NumericalData {
 public:
  /// Throws PreconditionError unless volume > 0.
  NumericalData(Rational volume, Basket basket);

  const Rational& volume() const noexcept { return volume_; }
  const Basket& basket() const noexcept { return basket_; }

 private:
  Rational volume_;
  Basket basket_;
};

/// Sum_{j=1..m} jb(r - jb) / (2r), jb the least non-negative residue of j*b mod r.
Rational point_correction(const OrbifoldPoint& p, std::int64_t m);

/// The correction term l(m+1): point_correction summed over the basket with
/// multiplicity.
Rational basket_correction(const Basket& basket, std::int64_t m);

/// Corrections l(m+1) for m = 0..n, computed in one pass.
std::vector<Rational> basket_corrections(const Basket& basket, std::int64_t n);

/// The polynomial part m(m+1)(2m+1)/12 * volume + (2m+1).
Rational rr_main_term(const Rational& volume, std::int64_t m);

/// Riemann-Roch value as an unchecked rational. Inconsistent data may give a
/// negative or fractional result here; reid_h0 rejects those.
Rational rr_value(const NumericalData& data, std::int64_t m);

/// rr_value for m = 0..n.
std::vector<Rational> rr_values(const NumericalData& data, std::int64_t n);

/// h^0(-mK). Throws InconsistentDataError("inconsistent numerical data ...")
/// when the Riemann-Roch value is not a non-negative integer.
Integer reid_h0(const NumericalData& data, std::int64_t m);

/// reid_h0 for m = 0..n. Errors name the first offending m.
std::vector<Integer> h0_sequence(const NumericalData& data, std::int64_t n);

}  // namespace plurigen
