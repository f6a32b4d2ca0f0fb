#include "plurigen/inference.hpp"

#include "plurigen/errors.hpp"
#include "plurigen/riemann_roch.hpp"

namespace plurigen {

namespace {

struct Candidate {
  OrbifoldPoint point;
  std::vector<Integer> scaled;  // corrections l(m+1) * scale, m = 0..n
};

class Search {
 public:
  Search(std::vector<Candidate> candidates, std::vector<Integer> target, std::int64_t max_points)
      : candidates_(std::move(candidates)),
        target_(std::move(target)),
        max_points_(max_points),
        acc_(target_.size(), 0) {}

  std::vector<Basket> run() {
    descend(0);
    return std::move(found_);
  }

 private:
  bool matches() const { return acc_ == target_; }

  // Adds candidate c to the running total; on overshoot, undoes the partial
  // addition and returns false.
  bool try_add(std::size_t c) {
    const auto& add = candidates_[c].scaled;
    for (std::size_t m = 1; m < acc_.size(); ++m) {
      acc_[m] += add[m];
      if (acc_[m] > target_[m]) {
        for (std::size_t k = 1; k <= m; ++k) acc_[k] -= add[k];
        return false;
      }
    }
    return true;
  }

  void remove(std::size_t c) {
    const auto& sub = candidates_[c].scaled;
    for (std::size_t m = 1; m < acc_.size(); ++m) acc_[m] -= sub[m];
  }

  void descend(std::size_t first) {
    if (matches()) {
      found_.push_back(Basket(chosen_));
      return;  // every point contributes at m = 1, so nothing more can fit
    }
    if (static_cast<std::int64_t>(chosen_.size()) == max_points_) return;
    for (std::size_t c = first; c < candidates_.size(); ++c) {
      if (!try_add(c)) continue;
      chosen_.push_back(candidates_[c].point);
      descend(c);
      chosen_.pop_back();
      remove(c);
    }
  }

  std::vector<Candidate> candidates_;
  std::vector<Integer> target_;
  std::int64_t max_points_;
  std::vector<Integer> acc_;
  std::vector<OrbifoldPoint> chosen_;
  std::vector<Basket> found_;
};

}  // namespace

std::vector<Rational> target_corrections(const AbFamily& family, std::int64_t n) {
  const auto hilbert = hilbert_coeffs(family.weighted(), n);
  const Rational volume(Integer(1), Integer(family.a() * family.b() * family.d()));
  std::vector<Rational> out;
  out.reserve(hilbert.size());
  for (std::int64_t m = 0; m <= n; ++m) {
    out.push_back(rr_main_term(volume, m) - Rational(hilbert[static_cast<std::size_t>(m)]));
  }
  return out;
}

InferenceResult infer_basket(const AbFamily& family, const BasketSearch& bounds) {
  if (bounds.r_max < 2) throw PreconditionError("r_max must be at least 2");
  if (bounds.max_points < 1) throw PreconditionError("max_points must be at least 1");
  if (bounds.n < bounds.r_max) throw PreconditionError("N must be at least r_max");

  const auto target = target_corrections(family, bounds.n);
  for (std::int64_t m = 1; m <= bounds.n; ++m) {
    if (target[static_cast<std::size_t>(m)].sign() < 0) {
      return {{}, "derived correction l(" + std::to_string(m + 1) + ") = " +
                      target[static_cast<std::size_t>(m)].to_string() + " is negative"};
    }
  }

  // Every correction of a point with index r lies in (1/2r)Z.
  Integer scale_z = 1;
  for (std::int64_t r = 2; r <= bounds.r_max; ++r) scale_z = lcm(scale_z, Integer(2 * r));

  std::vector<Integer> scaled_target;
  scaled_target.reserve(target.size());
  for (std::int64_t m = 0; m <= bounds.n; ++m) {
    Rational t = target[static_cast<std::size_t>(m)] * Rational(scale_z);
    if (!t.is_integer()) {
      return {{}, "derived correction l(" + std::to_string(m + 1) + ") = " +
                      target[static_cast<std::size_t>(m)].to_string() +
                      " is not attainable with r <= " + std::to_string(bounds.r_max)};
    }
    scaled_target.push_back(t.num());
  }

  std::vector<Candidate> candidates;
  for (std::int64_t r = 2; r <= bounds.r_max; ++r) {
    for (std::int64_t b = 1; 2 * b <= r; ++b) {
      if (!OrbifoldPoint::is_valid(b, r)) continue;
      OrbifoldPoint p(b, r);
      Basket single;
      single.add(p);
      auto corrections = basket_corrections(single, bounds.n);
      Candidate cand{p, {}};
      cand.scaled.reserve(corrections.size());
      for (const auto& c : corrections) cand.scaled.push_back((c * Rational(scale_z)).num());
      candidates.push_back(std::move(cand));
    }
  }

  return {Search(std::move(candidates), std::move(scaled_target), bounds.max_points).run(), {}};
}

}  // namespace plurigen
