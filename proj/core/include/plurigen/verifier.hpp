#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plurigen/table.hpp"

namespace plurigen {

inline constexpr std::int64_t kDefaultTruncation = 400;

// Check names, in the order verify_row runs them.
inline constexpr const char* kCheckVolumeFormula = "volume-formula";
inline constexpr const char* kCheckRrEqualsHilbert = "rr-equals-hilbert";
inline constexpr const char* kCheckPositivity = "positivity";
inline constexpr const char* kCheckPattern = "pattern";
inline constexpr const char* kCheckBasisCounts = "basis-counts";
inline constexpr const char* kCheckDegreeBound = "degree-bound";

struct CheckResult {
  std::string name;
  bool pass;
  /// On failure, the first failing index with both values; on success a
  /// short summary of what was covered.
  std::string detail;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerificationReport {
  int row_no;
  std::vector<CheckResult> checks;

  bool overall() const noexcept;
  /// The named check, or nullptr.
  const CheckResult* find(const std::string& name) const noexcept;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Runs the six numerical checks for one row against Riemann-Roch values and
/// Hilbert coefficients up to m = n. Throws PreconditionError("truncation
/// too small ...") when n < 6d.
VerificationReport verify_row(const TableRow& row, std::int64_t n);

/// verify_row over every row, one task per row, reports in input order.
/// Throws PreconditionError before doing any work if n < 6d for some row.
std::vector<VerificationReport> verify_table(const std::vector<TableRow>& rows, std::int64_t n);

/// verify_table over builtin_table().
std::vector<VerificationReport> verify_all(std::int64_t n = kDefaultTruncation);

}  // namespace plurigen
