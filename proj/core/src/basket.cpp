#include "plurigen/basket.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "plurigen/errors.hpp"

namespace plurigen {

bool OrbifoldPoint::is_valid(std::int64_t b, std::int64_t r) noexcept {
  return r >= 2 && b >= 1 && 2 * b <= r && std::gcd(b, r) == 1;
}

OrbifoldPoint::OrbifoldPoint(std::int64_t b, std::int64_t r) : b_(b), r_(r) {
  if (!is_valid(b, r)) {
    throw PreconditionError("invalid basket point (" + std::to_string(b) + "," +
                            std::to_string(r) + "): need r >= 2, gcd(b,r) = 1, 0 < b <= r/2");
  }
}

std::string OrbifoldPoint::to_string() const {
  return std::to_string(b_) + "/" + std::to_string(r_);
}

Basket::Basket(const std::vector<OrbifoldPoint>& points) {
  for (const auto& p : points) add(p);
}

void Basket::add(const OrbifoldPoint& p, std::int64_t mult) {
  if (mult < 1) throw PreconditionError("basket multiplicity must be positive");
  auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                             [](const Entry& e, const OrbifoldPoint& q) { return e.point < q; });
  if (it != entries_.end() && it->point == p) {
    it->mult += mult;
  } else {
    entries_.insert(it, Entry{p, mult});
  }
}

std::int64_t Basket::size() const noexcept {
  std::int64_t n = 0;
  for (const auto& e : entries_) n += e.mult;
  return n;
}

std::int64_t Basket::max_index() const noexcept {
  return entries_.empty() ? 0 : entries_.back().point.r();
}

std::vector<OrbifoldPoint> Basket::points() const {
  std::vector<OrbifoldPoint> out;
  for (const auto& e : entries_) out.insert(out.end(), static_cast<std::size_t>(e.mult), e.point);
  return out;
}

std::string Basket::to_string() const {
  std::string out;
  for (const auto& e : entries_) {
    if (!out.empty()) out += ',';
    if (e.mult > 1) out += std::to_string(e.mult) + "x";
    out += e.point.to_string();
  }
  return out;
}

namespace {

bool parse_int(std::string_view s, std::int64_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

Basket parse_basket(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  Basket basket;
  if (compact.empty()) return basket;

  std::string_view rest = compact;
  while (true) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    auto fail = [&](const std::string& why) {
      return ParseError("bad basket item '" + std::string(item) + "': " + why);
    };

    std::int64_t mult = 1;
    std::string_view pair = item;
    if (auto x = item.find_first_of("xX"); x != std::string_view::npos) {
      if (!parse_int(item.substr(0, x), mult) || mult < 1) throw fail("bad multiplicity");
      pair = item.substr(x + 1);
    }
    auto slash = pair.find('/');
    std::int64_t b = 0;
    std::int64_t r = 0;
    if (slash == std::string_view::npos || !parse_int(pair.substr(0, slash), b) ||
        !parse_int(pair.substr(slash + 1), r)) {
      throw fail("expected b/r or k x b/r");
    }
    if (r < 2) throw fail("need r >= 2");
    if (b < 1) throw fail("need b >= 1");
    if (std::gcd(b, r) != 1) throw fail("gcd(b,r) != 1");
    if (2 * b > r) throw fail("need b <= r/2");
    basket.add(OrbifoldPoint(b, r), mult);

    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return basket;
}

}  // namespace plurigen
