#include "plurigen/verifier.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <optional>

#include "plurigen/errors.hpp"

namespace plurigen {

namespace {

std::string mismatch(std::int64_t m, const Rational& got, const Rational& want,
                     const char* got_label = "h0", const char* want_label = "expected") {
  return "m=" + std::to_string(m) + ": " + got_label + "=" + got.to_string() + " " + want_label +
         "=" + want.to_string() + " diff=" + (got - want).to_string();
}

class RowChecker {
 public:
  RowChecker(const TableRow& row, std::int64_t n)
      : row_(row),
        n_(n),
        a_(row.family.a()),
        b_(row.family.b()),
        d_(row.family.d()),
        rr_(rr_values(row.numerical_data(), n)),
        hilbert_(hilbert_coeffs(row.family.weighted(), n)),
        s_table_(denumerant_table(std::array<std::int64_t, 4>{1, a_, b_, 2 * d_}, 6 * d_)) {}

  VerificationReport run() const {
    return VerificationReport{row_.row_no,
                              {volume_formula(), rr_equals_hilbert(), positivity(), pattern(),
                               basis_counts(), degree_bound()}};
  }

 private:
  const Rational& h0(std::int64_t k) const { return rr_[static_cast<std::size_t>(k)]; }
  Integer s(std::int64_t k) const { return s_table_[static_cast<std::size_t>(k)]; }

  // Returns a failure detail for the first k in [lo, hi] where h0(k) != want(k).
  template <typename Want>
  std::optional<std::string> expect_range(std::int64_t lo, std::int64_t hi, Want want) const {
    for (std::int64_t k = lo; k <= hi; ++k) {
      Rational w = want(k);
      if (h0(k) != w) return mismatch(k, h0(k), w);
    }
    return std::nullopt;
  }

  CheckResult volume_formula() const {
    Rational expected(Integer(1), Integer(a_ * b_ * d_));
    bool ok = row_.volume == expected && volume_from_weights(row_.family.weighted()) == expected;
    return {kCheckVolumeFormula, ok,
            ok ? "volume " + expected.to_string()
               : "volume " + row_.volume.to_string() + " != 1/(a*b*d) = " + expected.to_string()};
  }

  CheckResult rr_equals_hilbert() const {
    for (std::int64_t m = 0; m <= n_; ++m) {
      Rational h(hilbert_[static_cast<std::size_t>(m)]);
      if (h0(m) != h) return {kCheckRrEqualsHilbert, false, mismatch(m, h0(m), h, "rr", "hilbert")};
    }
    return {kCheckRrEqualsHilbert, true, "m=0.." + std::to_string(n_)};
  }

  CheckResult positivity() const {
    for (std::int64_t k = 1; k <= n_; ++k) {
      if (h0(k) < Rational(1)) {
        return {kCheckPositivity, false,
                "m=" + std::to_string(k) + ": h0=" + h0(k).to_string() + " < 1"};
      }
    }
    if (h0(a_) < Rational(2)) {
      return {kCheckPositivity, false,
              "m=a=" + std::to_string(a_) + ": h0=" + h0(a_).to_string() + " < 2"};
    }
    return {kCheckPositivity, true, "h0>=1 for m=1.." + std::to_string(n_) + ", h0(a)>=2"};
  }

  CheckResult pattern() const {
    std::optional<std::string> failure;
    std::string branch;
    if (b_ == 1) {
      branch = "b=1";
      failure = expect_range(1, 1, [](std::int64_t) { return Rational(3); });
    } else if (a_ == 1) {
      branch = "a=1<b";
      failure = expect_range(1, b_ - 1, [](std::int64_t k) { return Rational(k + 1); });
      if (!failure) failure = expect_range(b_, b_, [&](std::int64_t) { return Rational(b_ + 2); });
    } else {
      branch = "a>1";
      failure = expect_range(1, a_ - 1, [](std::int64_t) { return Rational(1); });
      if (!failure)
        failure = expect_range(a_, b_ - 1, [&](std::int64_t k) { return Rational(k / a_ + 1); });
      if (!failure)
        failure = expect_range(b_, b_, [&](std::int64_t) { return Rational(b_ / a_ + 2); });
    }
    if (failure) return {kCheckPattern, false, "branch " + branch + ", " + *failure};
    return {kCheckPattern, true, "branch " + branch};
  }

  CheckResult basis_counts() const {
    auto fail = [](const std::string& what, std::int64_t k, const Rational& got,
                   const Rational& want) {
      return CheckResult{kCheckBasisCounts, false, what + " " + mismatch(k, got, want)};
    };
    for (std::int64_t k = 1; k <= 3 * d_ - 1; ++k) {
      if (h0(k) != Rational(s(k))) return fail("h0=|S_k|", k, h0(k), Rational(s(k)));
    }
    Rational at_2d(Integer(s_prime_count(row_.family, 2 * d_) + 1));
    if (h0(2 * d_) != at_2d) return fail("h0=|S'_2d|+1", 2 * d_, h0(2 * d_), at_2d);
    Rational at_3d(Integer(s(3 * d_) + 1));
    if (h0(3 * d_) != at_3d) return fail("h0=|S_3d|+1", 3 * d_, h0(3 * d_), at_3d);
    Rational at_6d(Integer(s(6 * d_) + s(3 * d_)));
    if (h0(6 * d_) != at_6d) return fail("h0=|S_6d|+|S_3d|", 6 * d_, h0(6 * d_), at_6d);
    return {kCheckBasisCounts, true, "k=1.." + std::to_string(3 * d_ - 1) + ", 2d, 3d, 6d"};
  }

  CheckResult degree_bound() const {
    Rational bound = Rational(Integer(2 * a_ * b_ * d_)) * row_.volume;
    bool ok = bound == Rational(2);
    return {kCheckDegreeBound, ok, "2abd*volume=" + bound.to_string()};
  }

  const TableRow& row_;
  std::int64_t n_;
  std::int64_t a_;
  std::int64_t b_;
  std::int64_t d_;
  std::vector<Rational> rr_;
  std::vector<Integer> hilbert_;
  std::vector<Integer> s_table_;
};

void require_truncation(const TableRow& row, std::int64_t n) {
  const std::int64_t need = 6 * row.family.d();
  if (n < need) {
    throw PreconditionError("truncation too small: row " + std::to_string(row.row_no) +
                            " needs N >= " + std::to_string(need) + ", got " + std::to_string(n));
  }
}

}  // namespace

bool VerificationReport::overall() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* VerificationReport::find(const std::string& name) const noexcept {
  auto it = std::find_if(checks.begin(), checks.end(),
                         [&](const CheckResult& c) { return c.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

VerificationReport verify_row(const TableRow& row, std::int64_t n) {
  require_truncation(row, n);
  return RowChecker(row, n).run();
}

std::vector<VerificationReport> verify_table(const std::vector<TableRow>& rows, std::int64_t n) {
  auto widest = std::max_element(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    return x.family.d() < y.family.d();
  });
  if (widest != rows.end()) require_truncation(*widest, n);
  std::vector<std::future<VerificationReport>> tasks;
  tasks.reserve(rows.size());
  for (const auto& row : rows) {
    tasks.push_back(std::async(std::launch::async, [&row, n] { return verify_row(row, n); }));
  }
  std::vector<VerificationReport> reports;
  reports.reserve(rows.size());
  for (auto& t : tasks) reports.push_back(t.get());
  return reports;
}

std::vector<VerificationReport> verify_all(std::int64_t n) { return verify_table(builtin_table(), n); }

}  // namespace plurigen
