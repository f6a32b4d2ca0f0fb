#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plurigen/basket.hpp"
#include "plurigen/hypersurface.hpp"
#include "plurigen/rational.hpp"

namespace plurigen {

struct BasketSearch {
  std::int64_t r_max;       ///< largest index r considered, >= 2
  std::int64_t max_points;  ///< basket size bound counted with multiplicity, >= 1
  std::int64_t n;           ///< corrections are matched for m = 1..n, n >= r_max
};

struct InferenceResult {
  /// Every matching basket, in depth-first canonical order.
  std::vector<Basket> baskets;
  /// Non-empty when the search was skipped because the target could not
  /// come from any basket.
  std::string diagnostic;
};

/// The correction sequence l(m+1), m = 0..n, that a basket must produce for
/// Riemann-Roch to reproduce the Hilbert series of `family`:
/// l(m+1) = m(m+1)(2m+1)/12 * vol + (2m+1) - H(m).
std::vector<Rational> target_corrections(const AbFamily& family, std::int64_t n);

/// Exhaustive search for baskets whose corrections match target_corrections
/// at every m = 1..n. Corrections only grow as points are added, so a branch
/// is cut at the first m where its running total overshoots the target.
/// Throws PreconditionError on bounds violating BasketSearch's constraints.
InferenceResult infer_basket(const AbFamily& family, const BasketSearch& bounds);

}  // namespace plurigen
