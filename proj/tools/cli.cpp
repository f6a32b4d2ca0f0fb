#include "cli.hpp"

#include <CLI11.hpp>

#include <climits>
#include <optional>
#include <ostream>

#include "plurigen/plurigen.hpp"

namespace plurigen::cli {

namespace {

enum class Format { kPlain, kJson, kCsv };

using nlohmann::json;

// Small integers as JSON numbers, anything wider as a decimal string.
json json_integer(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void print_sequence(std::ostream& out, Format format, const std::vector<Integer>& values,
                    const char* column) {
  switch (format) {
    case Format::kPlain:
      for (std::size_t m = 0; m < values.size(); ++m) out << (m ? " " : "") << values[m];
      out << '\n';
      break;
    case Format::kJson: {
      json arr = json::array();
      for (const auto& v : values) arr.push_back(json_integer(v));
      out << arr.dump() << '\n';
      break;
    }
    case Format::kCsv:
      out << "m," << column << '\n';
      for (std::size_t m = 0; m < values.size(); ++m) out << m << ',' << values[m] << '\n';
      break;
  }
}

struct RrOptions {
  std::string volume;
  std::string basket;
  std::optional<std::int64_t> m;
  std::optional<std::int64_t> upto;
};

int run_rr(const RrOptions& opt, Format format, std::ostream& out) {
  NumericalData data(parse_rational(opt.volume), parse_basket(opt.basket));
  if (opt.m) {
    Integer h0 = reid_h0(data, *opt.m);
    switch (format) {
      case Format::kPlain: out << h0 << '\n'; break;
      case Format::kJson: out << json_integer(h0).dump() << '\n'; break;
      case Format::kCsv: out << "m,h0\n" << *opt.m << ',' << h0 << '\n'; break;
    }
  } else {
    print_sequence(out, format, h0_sequence(data, *opt.upto), "h0");
  }
  return kExitOk;
}

struct HilbertOptions {
  std::string weights;
  std::int64_t degree = 0;
  std::int64_t upto = 0;
};

int run_hilbert(const HilbertOptions& opt, Format format, std::ostream& out) {
  auto weights = parse_weights(opt.weights);
  if (weights.size() != 5) {
    throw PreconditionError("need 5 weights, got " + std::to_string(weights.size()));
  }
  WeightedFamily family({weights[0], weights[1], weights[2], weights[3], weights[4]}, opt.degree);
  print_sequence(out, format, hilbert_coeffs(family, opt.upto), "coefficient");
  return kExitOk;
}

struct VerifyOptions {
  std::string table = "builtin";
  std::int64_t upto = kDefaultTruncation;
};

int run_verify(const VerifyOptions& opt, Format format, std::ostream& out) {
  const auto rows = opt.table == "builtin" ? builtin_table() : read_table_csv(opt.table);
  const auto reports = verify_table(rows, opt.upto);
  std::size_t passed = 0;
  for (const auto& r : reports) passed += r.overall() ? 1 : 0;

  switch (format) {
    case Format::kPlain: {
      out << "row  check              result  detail\n";
      for (const auto& r : reports) {
        for (const auto& c : r.checks) {
          std::string no = std::to_string(r.row_no);
          std::string name = c.name;
          no.resize(std::max<std::size_t>(no.size(), 4), ' ');
          name.resize(std::max<std::size_t>(name.size(), 18), ' ');
          out << no << ' ' << name << ' ' << (c.pass ? "pass  " : "FAIL  ") << "  " << c.detail
              << '\n';
        }
      }
      out << passed << '/' << reports.size() << " rows pass\n";
      break;
    }
    case Format::kJson:
      out << json(reports).dump(2) << '\n';
      break;
    case Format::kCsv:
      out << "row_no,check,pass,detail\n";
      for (const auto& r : reports) {
        for (const auto& c : r.checks) {
          out << r.row_no << ',' << c.name << ',' << (c.pass ? "true" : "false") << ','
              << csv_quote(c.detail) << '\n';
        }
      }
      break;
  }
  return passed == reports.size() ? kExitOk : kExitCheckFailed;
}

struct ThresholdOptions {
  std::optional<std::int64_t> a, b, m0, m1, genus, m;
  std::optional<std::string> mu0, zeta;
};

// Smallest m certifying each conclusion; certify is monotone in m and every
// rule fires by m = 3(m0+m1).
FamilyThresholds first_certified(const SetupParams& params) {
  const std::int64_t limit = 3 * (params.m0() + params.m1());
  FamilyThresholds t{limit, limit};
  for (std::int64_t m = limit; m >= 1; --m) {
    Certificate c = certify(params, m);
    if (c.generically_finite == Verdict::kCertified) t.gen_finite_at = m;
    if (c.birational == Verdict::kCertified) t.birational_at = m;
  }
  return t;
}

int run_thresholds(const ThresholdOptions& opt, Format format, std::ostream& out) {
  const bool family_form = opt.a || opt.b;
  const bool raw_form = opt.m0 || opt.m1;
  if (family_form == raw_form) throw PreconditionError("give either --a/--b or --m0/--m1");
  if (family_form && !(opt.a && opt.b)) throw PreconditionError("--a and --b go together");
  if (raw_form && !(opt.m0 && opt.m1)) throw PreconditionError("--m0 and --m1 go together");

  std::int64_t m0 = 0;
  std::int64_t m1 = 0;
  if (family_form) {
    AbFamily family = family_from_ab(*opt.a, *opt.b);
    m0 = family.a();
    m1 = family.b();
  } else {
    m0 = *opt.m0;
    m1 = *opt.m1;
  }
  std::optional<Rational> mu0;
  std::optional<Rational> zeta;
  if (opt.mu0) mu0 = parse_rational(*opt.mu0);
  if (opt.zeta) zeta = parse_rational(*opt.zeta);
  SetupParams params(m0, m1, mu0, zeta, opt.genus);

  if (!opt.m) {
    FamilyThresholds t = first_certified(params);
    switch (format) {
      case Format::kPlain:
        out << "gen-finite at " << t.gen_finite_at << ", birational at " << t.birational_at
            << '\n';
        break;
      case Format::kJson:
        out << json{{"gen_finite_at", t.gen_finite_at}, {"birational_at", t.birational_at}}.dump()
            << '\n';
        break;
      case Format::kCsv:
        out << "gen_finite_at,birational_at\n" << t.gen_finite_at << ',' << t.birational_at << '\n';
        break;
    }
    return kExitOk;
  }

  if (*opt.m < 1) throw PreconditionError("--m must be positive");
  Certificate cert = certify(params, *opt.m);
  switch (format) {
    case Format::kPlain:
      out << "generically finite: " << to_string(cert.generically_finite) << '\n'
          << "birational: " << to_string(cert.birational) << '\n'
          << "rule: " << cert.rule << '\n';
      break;
    case Format::kJson:
      out << json(cert).dump() << '\n';
      break;
    case Format::kCsv:
      out << "gen_finite,birational,rule\n"
          << to_string(cert.generically_finite) << ',' << to_string(cert.birational) << ','
          << csv_quote(cert.rule) << '\n';
      break;
  }
  return kExitOk;
}

struct InferOptions {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t r_max = 0;
  std::int64_t max_points = 0;
  std::optional<std::int64_t> upto;
};

int run_infer(const InferOptions& opt, Format format, std::ostream& out, std::ostream& err) {
  AbFamily family = family_from_ab(opt.a, opt.b);
  BasketSearch bounds{opt.r_max, opt.max_points, opt.upto.value_or(6 * family.d())};
  InferenceResult result = infer_basket(family, bounds);
  if (!result.diagnostic.empty()) err << result.diagnostic << '\n';

  switch (format) {
    case Format::kPlain:
      for (const auto& basket : result.baskets) out << basket.to_string() << '\n';
      if (result.baskets.empty()) out << "no basket found\n";
      break;
    case Format::kJson:
      out << json(result.baskets).dump() << '\n';
      break;
    case Format::kCsv:
      out << "index,basket\n";
      for (std::size_t i = 0; i < result.baskets.size(); ++i) {
        out << i << ',' << csv_quote(result.baskets[i].to_string()) << '\n';
      }
      break;
  }
  return result.baskets.empty() ? kExitCheckFailed : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact plurigenera, Hilbert series and threshold checks for Fano 3-folds",
               "plurigen"};
  app.require_subcommand(1);
  app.fallthrough();

  Format format = Format::kPlain;
  const std::map<std::string, Format> formats{
      {"plain", Format::kPlain}, {"json", Format::kJson}, {"csv", Format::kCsv}};
  app.add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  RrOptions rr;
  auto* rr_cmd = app.add_subcommand("rr", "Plurigenera h0(-mK) from volume and basket");
  rr_cmd->add_option("--volume", rr.volume, "Anti-canonical volume, e.g. 1/330")->required();
  rr_cmd->add_option("--basket", rr.basket, "Basket, e.g. \"3x1/2,1/3\"")->required();
  auto* rr_m = rr_cmd->add_option("--m", rr.m, "Single index m")->check(CLI::NonNegativeNumber);
  auto* rr_upto =
      rr_cmd->add_option("--upto", rr.upto, "Sequence for m = 0..N")->check(CLI::NonNegativeNumber);
  rr_m->excludes(rr_upto);
  rr_cmd->callback([&] {
    if (!rr.m && !rr.upto) throw CLI::RequiredError("--m or --upto");
  });

  HilbertOptions hilbert;
  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert series coefficients of X_d");
  hilbert_cmd->add_option("--weights", hilbert.weights, "Five weights, e.g. 1,5,6,22,33")
      ->required();
  hilbert_cmd->add_option("--degree", hilbert.degree, "Hypersurface degree")->required();
  hilbert_cmd->add_option("--upto", hilbert.upto, "Last coefficient index")
      ->required()
      ->check(CLI::NonNegativeNumber);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check every row of a table");
  verify_cmd->add_option("--table", verify.table, "\"builtin\" or a CSV path")
      ->capture_default_str();
  verify_cmd->add_option("--upto", verify.upto, "Truncation order N")->capture_default_str();

  ThresholdOptions th;
  auto* th_cmd = app.add_subcommand("thresholds", "Generic finiteness and birationality");
  th_cmd->add_option("--a", th.a, "Family weight a");
  th_cmd->add_option("--b", th.b, "Family weight b");
  th_cmd->add_option("--m0", th.m0, "m0");
  th_cmd->add_option("--m1", th.m1, "m1");
  th_cmd->add_option("--mu0", th.mu0, "mu0 as a rational");
  th_cmd->add_option("--zeta", th.zeta, "zeta as a rational");
  th_cmd->add_option("--genus", th.genus, "Genus of C");
  th_cmd->add_option("--m", th.m, "Index to certify");

  InferOptions infer;
  auto* infer_cmd = app.add_subcommand("infer-basket", "Recover baskets from the Hilbert series");
  infer_cmd->add_option("--a", infer.a, "Family weight a")->required();
  infer_cmd->add_option("--b", infer.b, "Family weight b")->required();
  infer_cmd->add_option("--r-max", infer.r_max, "Largest index r")->required();
  infer_cmd->add_option("--max-points", infer.max_points, "Largest basket size")->required();
  infer_cmd->add_option("--upto", infer.upto, "Match corrections for m = 1..N (default 6d)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*rr_cmd) return run_rr(rr, format, out);
    if (*hilbert_cmd) return run_hilbert(hilbert, format, out);
    if (*verify_cmd) return run_verify(verify, format, out);
    if (*th_cmd) return run_thresholds(th, format, out);
    if (*infer_cmd) return run_infer(infer, format, out, err);
  } catch (const InconsistentDataError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace plurigen::cli
