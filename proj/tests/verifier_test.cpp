#include <gtest/gtest.h>

#include <sstream>

#include "plurigen/errors.hpp"
#include "plurigen/verifier.hpp"

namespace plurigen {
namespace {

Rational q(long n, long d) { return Rational(Integer(n), Integer(d)); }

const TableRow& row(int no) {
  for (const auto& r : builtin_table()) {
    if (r.row_no == no) return r;
  }
  throw std::out_of_range("no such row");
}

TEST(BuiltinTableTest, Rows) {
  const auto& table = builtin_table();
  ASSERT_EQ(table.size(), 12u);
  std::vector<int> numbers;
  for (const auto& r : table) numbers.push_back(r.row_no);
  EXPECT_EQ(numbers, (std::vector<int>{14, 34, 53, 70, 72, 82, 88, 89, 90, 92, 94, 95}));

  EXPECT_EQ(row(95).family, family_from_ab(5, 6));
  EXPECT_EQ(row(95).volume, q(1, 330));
  EXPECT_EQ(row(95).basket, parse_basket("1/2,2/5,1/3,2/11"));
  EXPECT_EQ(row(72).family, family_from_ab(2, 3));
  EXPECT_EQ(row(72).volume, q(1, 30));
  EXPECT_EQ(row(72).basket, parse_basket("3x1/2,2/5,2x1/3"));
  EXPECT_EQ(row(90).family, family_from_ab(3, 4));
  EXPECT_EQ(row(90).volume, q(1, 84));
  EXPECT_EQ(row(90).basket, parse_basket("1/2,2x1/3,2/7,1/4"));
}

TEST(VerifyRowTest, Row95Passes) {
  auto report = verify_row(row(95), 200);
  EXPECT_EQ(report.row_no, 95);
  ASSERT_EQ(report.checks.size(), 6u);
  std::vector<std::string> names;
  for (const auto& c : report.checks) {
    names.push_back(c.name);
    EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
  }
  EXPECT_EQ(names, (std::vector<std::string>{"volume-formula", "rr-equals-hilbert", "positivity",
                                             "pattern", "basis-counts", "degree-bound"}));
  EXPECT_TRUE(report.overall());
  EXPECT_EQ(report.find(kCheckPattern)->detail, "branch a>1");
}

TEST(VerifyRowTest, Row14TakesBEqualsOneBranch) {
  auto report = verify_row(row(14), 100);
  EXPECT_TRUE(report.overall());
  EXPECT_EQ(report.find(kCheckPattern)->detail, "branch b=1");
  EXPECT_EQ(verify_row(row(34), 100).find(kCheckPattern)->detail, "branch a=1<b");
}

TEST(VerifyRowTest, TamperedBasketReportsFirstMismatch) {
  TableRow bad = row(95);
  bad.basket = parse_basket("1/2,2/5,1/4,2/11");
  auto report = verify_row(bad, 200);
  EXPECT_FALSE(report.overall());
  const auto* rr = report.find(kCheckRrEqualsHilbert);
  ASSERT_NE(rr, nullptr);
  EXPECT_FALSE(rr->pass);
  EXPECT_EQ(rr->detail, "m=1: rr=23/24 hilbert=1 diff=-1/24");
  EXPECT_TRUE(report.find(kCheckVolumeFormula)->pass);
}

TEST(VerifyRowTest, TamperedVolume) {
  TableRow bad = row(95);
  bad.volume = q(1, 331);
  auto report = verify_row(bad, 400);
  EXPECT_FALSE(report.find(kCheckVolumeFormula)->pass);
  EXPECT_FALSE(report.find(kCheckDegreeBound)->pass);
  EXPECT_EQ(report.find(kCheckRrEqualsHilbert)->detail.rfind("m=1:", 0), 0u);
}

TEST(VerifyRowTest, TruncationTooSmall) {
  // d = a + b = 11 for row 95, so N >= 6d = 66.
  EXPECT_THROW(verify_row(row(95), 65), PreconditionError);
  EXPECT_NO_THROW(verify_row(row(95), 66));
  EXPECT_NO_THROW(verify_row(row(95), 396));
  try {
    verify_all(10);
    FAIL();
  } catch (const PreconditionError& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("truncation too small"), std::string::npos);
    EXPECT_NE(msg.find("row 95"), std::string::npos);
    EXPECT_NE(msg.find("N >= 66"), std::string::npos);
  }
}

TEST(VerifyAllTest, AllRowsPass) {
  for (std::int64_t n : {396, 400}) {
    auto reports = verify_all(n);
    ASSERT_EQ(reports.size(), 12u);
    for (std::size_t i = 0; i < reports.size(); ++i) {
      EXPECT_EQ(reports[i].row_no, builtin_table()[i].row_no);
      EXPECT_TRUE(reports[i].overall()) << reports[i].row_no;
    }
  }
}

TEST(VerifyAllTest, Deterministic) { EXPECT_EQ(verify_all(400), verify_all(400)); }

TEST(TableCsvTest, RoundTrip) {
  std::stringstream buffer;
  write_table_csv(buffer, builtin_table());
  auto rows = read_table_csv(buffer);
  ASSERT_EQ(rows.size(), 12u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].row_no, builtin_table()[i].row_no);
    EXPECT_EQ(rows[i].family, builtin_table()[i].family);
    EXPECT_EQ(rows[i].volume, builtin_table()[i].volume);
    EXPECT_EQ(rows[i].basket, builtin_table()[i].basket);
  }
}

std::string csv_error(const std::string& text) {
  std::istringstream in(text);
  try {
    read_table_csv(in);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "no error";
}

TEST(TableCsvTest, ErrorsNameTheLine) {
  const std::string header = "no,a,b,volume,basket\n";
  EXPECT_EQ(csv_error("no,a,b\n").rfind("line 1:", 0), 0u);
  EXPECT_EQ(csv_error(header + "95,5,6,1/330,\"1/2,2/4\"\n").rfind("line 2:", 0), 0u);
  EXPECT_EQ(csv_error(header + "14,1,1,1/2,1/2\n95,5,x,1/330,1/2\n").rfind("line 3:", 0), 0u);
  EXPECT_EQ(csv_error(header + "95,6,5,1/330,1/2\n").rfind("line 2:", 0), 0u);
  EXPECT_EQ(csv_error(header + "95,5,6,0,1/2\n").rfind("line 2:", 0), 0u);
  EXPECT_EQ(csv_error(header + "95,5,6,1/330\n").rfind("line 2:", 0), 0u);
  EXPECT_EQ(csv_error(header + "95,5,6,1/330,\"1/2\n").rfind("line 2:", 0), 0u);
  EXPECT_EQ(csv_error(""), "line 1: missing header 'no,a,b,volume,basket'");
}

TEST(TableCsvTest, BlankLinesAndUnquotedSinglePoint) {
  std::istringstream in("no,a,b,volume,basket\n\n14,1,1,1/2,1/2\n");
  auto rows = read_table_csv(in);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_TRUE(verify_row(rows[0], 12).overall());
}

}  // namespace
}  // namespace plurigen
