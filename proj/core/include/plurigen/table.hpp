#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "plurigen/basket.hpp"
#include "plurigen/hypersurface.hpp"
#include "plurigen/rational.hpp"
#include "plurigen/riemann_roch.hpp"

namespace plurigen {

/// One family X_{6d} in P(1,a,b,2d,3d) with its tabulated volume and basket.
/// The volume is stored as given; verify_row checks it against the weights.
struct TableRow {
  int row_no;
  AbFamily family;
  Rational volume;
  Basket basket;

  NumericalData numerical_data() const { return NumericalData(volume, basket); }
};

/// The twelve X_{6d} rows of Iano-Fletcher's list, ordered by row number.
const std::vector<TableRow>& builtin_table();

/// Reads the CSV schema "no,a,b,volume,basket". The basket field uses the
/// parse_basket grammar and must be double-quoted when it contains commas.
/// Throws ParseError naming the line number.
std::vector<TableRow> read_table_csv(std::istream& in);
std::vector<TableRow> read_table_csv(const std::filesystem::path& path);

void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows);

}  // namespace plurigen
