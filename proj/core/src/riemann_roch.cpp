#include "plurigen/riemann_roch.hpp"

#include <string>

#include "plurigen/errors.hpp"

namespace plurigen {

namespace {

void require_non_negative(std::int64_t m) {
  if (m < 0) throw PreconditionError("m must be non-negative, got " + std::to_string(m));
}

// Integer numerator of point_correction over the common denominator 2r.
// Residues are advanced by adding b and reducing mod r.
Integer point_correction_numerator(const OrbifoldPoint& p, std::int64_t m) {
  const std::int64_t b = p.b();
  const std::int64_t r = p.r();
  Integer total = 0;
  std::int64_t residue = 0;
  for (std::int64_t j = 1; j <= m; ++j) {
    residue += b;
    if (residue >= r) residue -= r;
    total += residue * (r - residue);
  }
  return total;
}

Integer checked_h0(const Rational& value, std::int64_t m) {
  if (!value.is_integer() || value.sign() < 0) {
    throw InconsistentDataError("inconsistent numerical data: h0 at m=" + std::to_string(m) +
                                " evaluates to " + value.to_string());
  }
  return value.num();
}

}  // namespace

NumericalData::NumericalData(Rational volume, Basket basket)
    : volume_(std::move(volume)), basket_(std::move(basket)) {
  if (volume_.sign() <= 0) throw PreconditionError("volume must be positive");
}

Rational point_correction(const OrbifoldPoint& p, std::int64_t m) {
  require_non_negative(m);
  return Rational(point_correction_numerator(p, m), Integer(2 * p.r()));
}

Rational basket_correction(const Basket& basket, std::int64_t m) {
  require_non_negative(m);
  Rational total;
  for (const auto& e : basket.entries()) {
    total += Rational(Integer(point_correction_numerator(e.point, m) * e.mult),
                      Integer(2 * e.point.r()));
  }
  return total;
}

std::vector<Rational> basket_corrections(const Basket& basket, std::int64_t n) {
  require_non_negative(n);
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  struct State {
    std::int64_t b, r, mult, residue;
  };
  std::vector<State> states;
  for (const auto& e : basket.entries()) states.push_back({e.point.b(), e.point.r(), e.mult, 0});

  Rational running;
  for (std::int64_t m = 1; m <= n; ++m) {
    Rational step;
    for (auto& s : states) {
      s.residue += s.b;
      if (s.residue >= s.r) s.residue -= s.r;
      step += Rational(Integer(s.residue * (s.r - s.residue) * s.mult), Integer(2 * s.r));
    }
    running += step;
    out[static_cast<std::size_t>(m)] = running;
  }
  return out;
}

Rational rr_main_term(const Rational& volume, std::int64_t m) {
  Integer mm = m;
  Integer cubic = mm * (mm + 1) * (2 * mm + 1);
  return Rational(cubic, Integer(12)) * volume + Rational(Integer(2 * mm + 1));
}

Rational rr_value(const NumericalData& data, std::int64_t m) {
  require_non_negative(m);
  return rr_main_term(data.volume(), m) - basket_correction(data.basket(), m);
}

std::vector<Rational> rr_values(const NumericalData& data, std::int64_t n) {
  auto corrections = basket_corrections(data.basket(), n);
  std::vector<Rational> out;
  out.reserve(corrections.size());
  for (std::int64_t m = 0; m <= n; ++m) {
    out.push_back(rr_main_term(data.volume(), m) - corrections[static_cast<std::size_t>(m)]);
  }
  return out;
}

Integer reid_h0(const NumericalData& data, std::int64_t m) {
  return checked_h0(rr_value(data, m), m);
}

std::vector<Integer> h0_sequence(const NumericalData& data, std::int64_t n) {
  auto values = rr_values(data, n);
  std::vector<Integer> out;
  out.reserve(values.size());
  for (std::int64_t m = 0; m <= n; ++m) out.push_back(checked_h0(values[static_cast<std::size_t>(m)], m));
  return out;
}

}  // namespace plurigen
