#pragma once

#include <nlohmann/json.hpp>

#include "plurigen/basket.hpp"
#include "plurigen/rational.hpp"
#include "plurigen/thresholds.hpp"
#include "plurigen/verifier.hpp"

// nlohmann::json adapters. Deserializers validate and throw ParseError.

namespace plurigen {

/// Rationals serialize as the string "num/den" (or "num").
void to_json(nlohmann::json& j, const Rational& x);
void from_json(const nlohmann::json& j, Rational& x);

/// [{"b": 1, "r": 2, "mult": 3}, ...]
void to_json(nlohmann::json& j, const Basket& basket);
void from_json(const nlohmann::json& j, Basket& basket);

void to_json(nlohmann::json& j, const CheckResult& check);
void from_json(const nlohmann::json& j, CheckResult& check);

/// {"row_no": 95, "checks": [...], "overall": true}
void to_json(nlohmann::json& j, const VerificationReport& report);
void from_json(const nlohmann::json& j, VerificationReport& report);

/// {"gen_finite": "certified", "birational": "not_certified", "rule": "...",
///  "rules_fired": [...]}
void to_json(nlohmann::json& j, const Certificate& cert);
void from_json(const nlohmann::json& j, Certificate& cert);

}  // namespace plurigen
