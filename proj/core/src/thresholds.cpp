#include "plurigen/thresholds.hpp"

#include <algorithm>

#include "plurigen/errors.hpp"

namespace plurigen {

SetupParams::SetupParams(std::int64_t m0, std::int64_t m1, std::optional<Rational> mu0,
                         std::optional<Rational> zeta, std::optional<std::int64_t> genus)
    : m0_(m0), m1_(m1), mu0_(std::move(mu0)), zeta_(std::move(zeta)), genus_(genus) {
  if (m0_ < 1) throw PreconditionError("m0 must be positive");
  if (m1_ < m0_) {
    throw PreconditionError("m1 < m0 (m0=" + std::to_string(m0_) + ", m1=" + std::to_string(m1_) +
                            ")");
  }
  if (mu0_ && (mu0_->sign() <= 0 || *mu0_ > Rational(m0_))) {
    throw PreconditionError("mu0 must satisfy 0 < mu0 <= m0, got " + mu0_->to_string());
  }
  if (zeta_ && zeta_->sign() <= 0) throw PreconditionError("zeta must be positive");
  if (genus_ && *genus_ < 0) throw PreconditionError("genus must be non-negative");
}

SetupParams SetupParams::with_conservative_substitutes() const {
  Rational mu0 = mu0_.value_or(Rational(m0_));
  std::optional<Rational> zeta = zeta_;
  if (!zeta && genus_) zeta = zeta_lower_bound(*genus_, mu0, m1_);
  return SetupParams(m0_, m1_, mu0, zeta, genus_);
}

Rational zeta_lower_bound(std::int64_t genus, const Rational& mu0_bound, std::int64_t m1) {
  if (genus < 0) throw PreconditionError("genus must be non-negative");
  if (mu0_bound.sign() <= 0) throw PreconditionError("mu0 bound must be positive");
  if (genus == 0) return Rational(2);
  return Rational(2 * genus - 1) / (mu0_bound + Rational(m1));
}

Rational epsilon(const SetupParams& params, std::int64_t m) {
  if (!params.mu0() || !params.zeta()) {
    throw PreconditionError("insufficient data: epsilon needs mu0 and zeta");
  }
  return (Rational(m + 1 - params.m1()) - *params.mu0()) * *params.zeta();
}

Certificate certify(const SetupParams& params, std::int64_t m) {
  const std::int64_t m0 = params.m0();
  const std::int64_t m1 = params.m1();
  const auto& genus = params.genus();

  std::vector<std::string> finite_rules;
  std::vector<std::string> birational_rules;
  Certificate cert;
  auto fire = [&](const char* rule, bool birational) {
    cert.rules_fired.emplace_back(rule);
    (birational ? birational_rules : finite_rules).emplace_back(rule);
  };

  if (m >= 2 * m0 + 2 * m1) fire(kRuleTwiceSum, false);
  if (genus && *genus != 1 && m >= m0 + m1 + 1) fire(kRuleGenusNotOne, false);
  if (m >= 3 * m0 + 3 * m1) fire(kRuleThriceSum, true);
  if (params.mu0() && params.zeta() && m >= m0 + m1 + 1) {
    const Rational eps = epsilon(params, m);
    if (genus && eps > Rational(std::max<std::int64_t>(2 - *genus, 0)))
      fire(kRuleEpsilonFinite, false);
    if (eps > Rational(2)) fire(kRuleEpsilonBirational, true);
  }

  if (!birational_rules.empty()) {
    cert.birational = Verdict::kCertified;
    cert.generically_finite = Verdict::kCertified;
    cert.rule = birational_rules.front();
  } else if (!finite_rules.empty()) {
    cert.generically_finite = Verdict::kCertified;
    cert.rule = finite_rules.front();
  }
  return cert;
}

FamilyThresholds family_thresholds(const AbFamily& family) {
  return {2 * family.d(), 3 * family.d()};
}

SetupParams family_setup(const AbFamily& family) { return SetupParams(family.a(), family.b()); }

std::string to_string(Verdict v) {
  return v == Verdict::kCertified ? "certified" : "not_certified";
}

}  // namespace plurigen
