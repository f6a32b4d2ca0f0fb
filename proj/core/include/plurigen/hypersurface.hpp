#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "plurigen/rational.hpp"

namespace plurigen {

/// A hypersurface X_d in P(a0,...,a4): five weights held in ascending order
/// and a degree exceeding every weight.
class WeightedFamily {
 public:
  /// Weights are sorted on construction. Throws PreconditionError if a
  /// weight is < 1 or degree <= max weight.
  WeightedFamily(std::array<std::int64_t, 5> weights, std::int64_t degree);

  const std::array<std::int64_t, 5>& weights() const noexcept { return weights_; }
  std::int64_t degree() const noexcept { return degree_; }

  /// "X_66 in P(1,5,6,22,33)"
  std::string to_string() const;

  friend bool operator==(const WeightedFamily&, const WeightedFamily&) = default;

 private:
  std::array<std::int64_t, 5> weights_;
  std::int64_t degree_;
};

/// The shape X_{6d} in P(1, a, b, 2d, 3d) with d = a + b.
class AbFamily {
 public:
  std::int64_t a() const noexcept { return a_; }
  std::int64_t b() const noexcept { return b_; }
  std::int64_t d() const noexcept { return a_ + b_; }

  WeightedFamily weighted() const;

  friend bool operator==(const AbFamily&, const AbFamily&) = default;
  friend AbFamily family_from_ab(std::int64_t a, std::int64_t b);

 private:
  AbFamily(std::int64_t a, std::int64_t b) : a_(a), b_(b) {}
  std::int64_t a_;
  std::int64_t b_;
};

/// Throws PreconditionError unless 1 <= a <= b.
AbFamily family_from_ab(std::int64_t a, std::int64_t b);

/// degree / (a0 a1 a2 a3 a4), the anti-canonical volume of X_d.
Rational volume_from_weights(const WeightedFamily& f);

/// Number of non-negative integer solutions of sum s_i w_i = k; 0 for k < 0.
/// Throws PreconditionError on an empty list or a non-positive weight.
Integer denumerant(std::span<const std::int64_t> weights, std::int64_t k);

/// denumerant(weights, k) for every k = 0..n, by the coin-counting recurrence.
std::vector<Integer> denumerant_table(std::span<const std::int64_t> weights, std::int64_t n);

/// Coefficients of q^0..q^n in (1 - q^d) / prod (1 - q^{a_i}). Throws
/// InconsistentDataError if a coefficient comes out negative.
std::vector<Integer> hilbert_coeffs(const WeightedFamily& f, std::int64_t n);

/// |S_k|: monomials of degree k in variables of weight (1, a, b, 2d).
Integer s_count(const AbFamily& f, std::int64_t k);

/// |S'_k|: monomials of degree k in variables of weight (1, a, b).
Integer s_prime_count(const AbFamily& f, std::int64_t k);

/// Parses comma-separated positive integers such as "1,5,6,22,33".
std::vector<std::int64_t> parse_weights(std::string_view text);

}  // namespace plurigen
