#include "plurigen/table.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "plurigen/errors.hpp"

namespace plurigen {

namespace {

TableRow make_row(int no, std::int64_t a, std::int64_t b, long vol_den, const char* basket) {
  return TableRow{no, family_from_ab(a, b), Rational(Integer(1), Integer(vol_den)),
                  parse_basket(basket)};
}

std::vector<std::string> split_csv_line(const std::string& line, std::size_t line_no) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c != '\r') {
      fields.back() += c;
    }
  }
  if (quoted) throw ParseError("line " + std::to_string(line_no) + ": unterminated quote");
  return fields;
}

std::int64_t parse_field_int(const std::string& s, const char* what, std::size_t line_no) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) + ": bad " + what + " '" + s + "'");
  }
}

}  // namespace

const std::vector<TableRow>& builtin_table() {
  static const std::vector<TableRow> rows = {
      make_row(14, 1, 1, 2, "1/2"),
      make_row(34, 1, 2, 6, "3x1/2,1/3"),
      make_row(53, 1, 3, 12, "2x1/3,1/4"),
      make_row(70, 1, 4, 20, "1/2,1/4,1/5"),
      make_row(72, 2, 3, 30, "3x1/2,2/5,2x1/3"),
      make_row(82, 1, 5, 30, "2/5,1/6"),
      make_row(88, 1, 6, 42, "1/2,1/3,1/7"),
      make_row(89, 2, 5, 70, "3x1/2,3/7,1/5"),
      make_row(90, 3, 4, 84, "1/2,2x1/3,2/7,1/4"),
      make_row(92, 3, 5, 120, "3/8,2x1/3,1/5"),
      make_row(94, 4, 5, 180, "1/2,2/5,1/4,2/9"),
      make_row(95, 5, 6, 330, "1/2,2/5,1/3,2/11"),
  };
  return rows;
}

std::vector<TableRow> read_table_csv(std::istream& in) {
  std::vector<TableRow> rows;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto fields = split_csv_line(line, line_no);
    for (auto& f : fields) {
      auto first = f.find_first_not_of(" \t");
      auto last = f.find_last_not_of(" \t");
      f = first == std::string::npos ? std::string() : f.substr(first, last - first + 1);
    }
    if (!header_seen) {
      if (fields != std::vector<std::string>{"no", "a", "b", "volume", "basket"}) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected header 'no,a,b,volume,basket'");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 5) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 5 fields, got " +
                       std::to_string(fields.size()));
    }
    try {
      auto no = parse_field_int(fields[0], "row number", line_no);
      auto a = parse_field_int(fields[1], "a", line_no);
      auto b = parse_field_int(fields[2], "b", line_no);
      rows.push_back(TableRow{static_cast<int>(no), family_from_ab(a, b),
                              parse_rational(fields[3]), parse_basket(fields[4])});
      if (rows.back().volume.sign() <= 0) throw ParseError("volume must be positive");
    } catch (const ParseError& e) {
      std::string msg = e.what();
      if (msg.rfind("line ", 0) == 0) throw;
      throw ParseError("line " + std::to_string(line_no) + ": " + msg);
    } catch (const PreconditionError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!header_seen) throw ParseError("line 1: missing header 'no,a,b,volume,basket'");
  return rows;
}

std::vector<TableRow> read_table_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open table file '" + path.string() + "'");
  return read_table_csv(in);
}

void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows) {
  out << "no,a,b,volume,basket\n";
  for (const auto& row : rows) {
    out << row.row_no << ',' << row.family.a() << ',' << row.family.b() << ','
        << row.volume.to_string() << ",\"" << row.basket.to_string() << "\"\n";
  }
}

}  // namespace plurigen
