#include "plurigen/json_io.hpp"

#include "plurigen/errors.hpp"

namespace plurigen {

namespace {

template <typename T>
T field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing JSON field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON field '") + key + "': " + e.what());
  }
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "certified") return Verdict::kCertified;
  if (s == "not_certified") return Verdict::kNotCertified;
  throw ParseError("bad verdict '" + s + "'");
}

}  // namespace

void to_json(nlohmann::json& j, const Rational& x) { j = x.to_string(); }

void from_json(const nlohmann::json& j, Rational& x) {
  if (!j.is_string()) throw ParseError("rational must be a JSON string");
  x = parse_rational(j.get<std::string>());
}

void to_json(nlohmann::json& j, const Basket& basket) {
  j = nlohmann::json::array();
  for (const auto& e : basket.entries()) {
    j.push_back({{"b", e.point.b()}, {"r", e.point.r()}, {"mult", e.mult}});
  }
}

void from_json(const nlohmann::json& j, Basket& basket) {
  if (!j.is_array()) throw ParseError("basket must be a JSON array");
  Basket out;
  for (const auto& item : j) {
    auto b = field<std::int64_t>(item, "b");
    auto r = field<std::int64_t>(item, "r");
    auto mult = field<std::int64_t>(item, "mult");
    try {
      out.add(OrbifoldPoint(b, r), mult);
    } catch (const PreconditionError& e) {
      throw ParseError(e.what());
    }
  }
  basket = std::move(out);
}

void to_json(nlohmann::json& j, const CheckResult& check) {
  j = {{"name", check.name}, {"pass", check.pass}, {"detail", check.detail}};
}

void from_json(const nlohmann::json& j, CheckResult& check) {
  check.name = field<std::string>(j, "name");
  check.pass = field<bool>(j, "pass");
  check.detail = field<std::string>(j, "detail");
}

void to_json(nlohmann::json& j, const VerificationReport& report) {
  j = {{"row_no", report.row_no}, {"checks", report.checks}, {"overall", report.overall()}};
}

void from_json(const nlohmann::json& j, VerificationReport& report) {
  report.row_no = field<int>(j, "row_no");
  report.checks = field<std::vector<CheckResult>>(j, "checks");
  if (field<bool>(j, "overall") != report.overall()) {
    throw ParseError("report overall flag disagrees with its checks");
  }
}

void to_json(nlohmann::json& j, const Certificate& cert) {
  j = {{"gen_finite", to_string(cert.generically_finite)},
       {"birational", to_string(cert.birational)},
       {"rule", cert.rule},
       {"rules_fired", cert.rules_fired}};
}

void from_json(const nlohmann::json& j, Certificate& cert) {
  cert.generically_finite = verdict_from_string(field<std::string>(j, "gen_finite"));
  cert.birational = verdict_from_string(field<std::string>(j, "birational"));
  cert.rule = field<std::string>(j, "rule");
  cert.rules_fired = field<std::vector<std::string>>(j, "rules_fired");
  if (cert.birational == Verdict::kCertified && cert.generically_finite != Verdict::kCertified) {
    throw ParseError("certificate claims birational without generic finiteness");
  }
}

}  // namespace plurigen
