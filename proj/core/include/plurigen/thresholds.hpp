#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plurigen/hypersurface.hpp"
#include "plurigen/rational.hpp"

namespace plurigen {

/// Inputs to the generic-finiteness / birationality criteria for |-mK|.
///
/// m0 and m1 are the indices of the two anti-pluricanonical systems in use,
/// mu0 and zeta the associated intersection data, genus the genus of the
/// generic curve C. The last three are geometric and may be unknown.
class SetupParams {
 public:
  /// Throws PreconditionError unless 1 <= m0 <= m1, 0 < mu0 <= m0,
  /// zeta > 0 and genus >= 0 (each checked only when supplied).
  SetupParams(std::int64_t m0, std::int64_t m1, std::optional<Rational> mu0 = std::nullopt,
              std::optional<Rational> zeta = std::nullopt,
              std::optional<std::int64_t> genus = std::nullopt);

  std::int64_t m0() const noexcept { return m0_; }
  std::int64_t m1() const noexcept { return m1_; }
  const std::optional<Rational>& mu0() const noexcept { return mu0_; }
  const std::optional<Rational>& zeta() const noexcept { return zeta_; }
  const std::optional<std::int64_t>& genus() const noexcept { return genus_; }

  /// Fills an unknown mu0 with its upper bound m0, then an unknown zeta with
  /// zeta_lower_bound when the genus is known. Both substitutions can only
  /// lower epsilon(m).
  SetupParams with_conservative_substitutes() const;

 private:
  std::int64_t m0_;
  std::int64_t m1_;
  std::optional<Rational> mu0_;
  std::optional<Rational> zeta_;
  std::optional<std::int64_t> genus_;
};

enum class Verdict { kNotCertified, kCertified };

inline constexpr const char* kRuleNone = "none";
inline constexpr const char* kRuleTwiceSum = "m >= 2m0+2m1";
inline constexpr const char* kRuleGenusNotOne = "g(C) != 1 and m >= m0+m1+1";
inline constexpr const char* kRuleThriceSum = "m >= 3m0+3m1";
inline constexpr const char* kRuleEpsilonFinite = "epsilon(m) > max{2-g(C), 0}";
inline constexpr const char* kRuleEpsilonBirational = "epsilon(m) > 2";

struct Certificate {
  Verdict generically_finite = Verdict::kNotCertified;
  Verdict birational = Verdict::kNotCertified;
  /// First rule giving the strongest certified conclusion, kRuleNone if none.
  std::string rule = kRuleNone;
  /// Every rule that fired, in evaluation order.
  std::vector<std::string> rules_fired;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Lower bound for zeta: 2 when genus = 0, else (2g-1)/(mu0_bound+m1).
/// Throws PreconditionError unless mu0_bound > 0 and genus >= 0.
Rational zeta_lower_bound(std::int64_t genus, const Rational& mu0_bound, std::int64_t m1);

/// (m + 1 - mu0 - m1) * zeta. Throws PreconditionError ("insufficient
/// data") if mu0 or zeta is unknown.
Rational epsilon(const SetupParams& params, std::int64_t m);

/// Evaluates every criterion at m and reports what they certify. Missing
/// data never certifies anything.
Certificate certify(const SetupParams& params, std::int64_t m);

struct FamilyThresholds {
  std::int64_t gen_finite_at;
  std::int64_t birational_at;
  friend bool operator==(const FamilyThresholds&, const FamilyThresholds&) = default;
};

/// (2d, 3d): the criteria with m0 = a and m1 = b.
FamilyThresholds family_thresholds(const AbFamily& family);

/// SetupParams with m0 = a, m1 = b and nothing else known.
SetupParams family_setup(const AbFamily& family);

std::string to_string(Verdict v);

}  // namespace plurigen
