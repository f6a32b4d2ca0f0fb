#include "plurigen/hypersurface.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "plurigen/errors.hpp"

namespace plurigen {

WeightedFamily::WeightedFamily(std::array<std::int64_t, 5> weights, std::int64_t degree)
    : weights_(weights), degree_(degree) {
  std::sort(weights_.begin(), weights_.end());
  if (weights_.front() < 1) throw PreconditionError("weights must be positive");
  if (degree_ <= weights_.back()) {
    throw PreconditionError("degree " + std::to_string(degree_) +
                            " must exceed the largest weight " + std::to_string(weights_.back()));
  }
}

std::string WeightedFamily::to_string() const {
  std::string out = "X_" + std::to_string(degree_) + " in P(";
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(weights_[i]);
  }
  return out + ")";
}

WeightedFamily AbFamily::weighted() const {
  return WeightedFamily({1, a_, b_, 2 * d(), 3 * d()}, 6 * d());
}

AbFamily family_from_ab(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw PreconditionError("a and b must be positive");
  if (a > b) {
    throw PreconditionError("need a <= b, got a=" + std::to_string(a) + " b=" + std::to_string(b));
  }
  return AbFamily(a, b);
}

Rational volume_from_weights(const WeightedFamily& f) {
  Integer product = 1;
  for (auto w : f.weights()) product *= w;
  return Rational(Integer(f.degree()), product);
}

std::vector<Integer> denumerant_table(std::span<const std::int64_t> weights, std::int64_t n) {
  if (weights.empty()) throw PreconditionError("denumerant needs at least one weight");
  if (std::any_of(weights.begin(), weights.end(), [](auto w) { return w < 1; }))
    throw PreconditionError("denumerant weights must be positive");
  if (n < 0) return {};
  const auto len = static_cast<std::size_t>(n) + 1;
  std::vector<Integer> ways(len, 0);
  ways[0] = 1;
  for (auto w : weights) {
    const auto step = static_cast<std::size_t>(w);
    for (std::size_t k = step; k < len; ++k) ways[k] += ways[k - step];
  }
  return ways;
}

Integer denumerant(std::span<const std::int64_t> weights, std::int64_t k) {
  auto table = denumerant_table(weights, k);
  return k < 0 ? Integer(0) : table.back();
}

std::vector<Integer> hilbert_coeffs(const WeightedFamily& f, std::int64_t n) {
  if (n < 0) throw PreconditionError("truncation order must be non-negative");
  auto ways = denumerant_table(f.weights(), n);
  const auto d = static_cast<std::size_t>(f.degree());
  std::vector<Integer> coeffs(ways.size());
  for (std::size_t m = 0; m < ways.size(); ++m) {
    coeffs[m] = m >= d ? Integer(ways[m] - ways[m - d]) : ways[m];
    if (sgn(coeffs[m]) < 0) {
      throw InconsistentDataError("not a valid hypersurface numerator: coefficient of q^" +
                                  std::to_string(m) + " is " + coeffs[m].get_str());
    }
  }
  return coeffs;
}

Integer s_count(const AbFamily& f, std::int64_t k) {
  const std::array<std::int64_t, 4> w{1, f.a(), f.b(), 2 * f.d()};
  return denumerant(w, k);
}

Integer s_prime_count(const AbFamily& f, std::int64_t k) {
  const std::array<std::int64_t, 3> w{1, f.a(), f.b()};
  return denumerant(w, k);
}

std::vector<std::int64_t> parse_weights(std::string_view text) {
  std::vector<std::int64_t> out;
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  std::string_view rest = compact;
  while (true) {
    auto comma = rest.find(',');
    auto item = rest.substr(0, comma);
    std::int64_t w = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), w);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || w < 1) {
      throw ParseError("bad weight '" + std::string(item) + "'");
    }
    out.push_back(w);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace plurigen
