#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "modinv/errors.hpp"
#include "modinv/kirwan.hpp"
#include "modinv/serialize.hpp"
#include "modinv/stringy.hpp"
#include "modinv/verify.hpp"

namespace modinv::cli {
namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GenusRange {
  int lo;
  int hi;
};

int parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError("not an integer: '" + std::string(s) + "'");
  return value;
}

// "a..b" or a single "g".
GenusRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int g = parse_int(text);
    return {g, g};
  }
  return {parse_int(std::string_view(text).substr(0, dots)), parse_int(std::string_view(text).substr(dots + 2))};
}

void check_range(GenusRange r, int min) {
  const int cap = max_genus();
  if (r.lo > r.hi) throw UsageError("empty genus range " + std::to_string(r.lo) + ".." + std::to_string(r.hi));
  if (r.lo < min || r.hi > cap) {
    throw UsageError("genus must lie in " + std::to_string(min) + ".." + std::to_string(cap));
  }
}

std::string json_int_array(const std::vector<BigInt>& xs) {
  std::string s = "[";
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k != 0) s += ",";
    s += xs[k].get_str();
  }
  return s + "]";
}

std::string format_poincare(const kirwan::PoincareTable& table, const std::string& format) {
  const std::string space(kirwan::to_string(table.space));
  std::ostringstream os;
  if (format == "json") {
    os << "{\"genus\": " << table.genus << ", \"space\": \"" << space << "\", \"betti\": " << json_int_array(table.betti)
       << "}\n";
  } else if (format == "csv") {
    os << "genus,space,degree,betti\n";
    for (std::size_t d = 0; d < table.betti.size(); ++d) {
      os << table.genus << ',' << space << ',' << d << ',' << table.betti[d].get_str() << '\n';
    }
  } else {
    os << "P(" << space << "), g=" << table.genus << ": " << to_pretty(kirwan::to_poly(table)) << '\n';
  }
  return os.str();
}

std::string format_stringy(int g, const std::string& format) {
  const RatFun closed = stringy::stringy_e_closed(g);
  const auto poly = closed.as_polynomial();
  std::ostringstream os;
  if (format == "json") {
    nlohmann::ordered_json out;
    out["genus"] = g;
    out["polynomial"] = poly.has_value();
    out["closed_form"] = nlohmann::ordered_json::parse(to_json(closed).dump());
    if (poly) out["expanded"] = nlohmann::ordered_json::parse(to_json(*poly).dump());
    os << out.dump(2) << '\n';
  } else {
    os << "E_st(M0), g=" << g << (poly ? " (polynomial)" : " (not a polynomial)") << '\n';
    os << (poly ? to_pretty(*poly) : to_pretty(closed)) << '\n';
  }
  return os.str();
}

std::string format_euler(GenusRange r, const std::string& format) {
  std::ostringstream os;
  if (format == "csv") os << "genus,euler\n";
  if (format == "json") os << '[';
  for (int g = r.lo; g <= r.hi; ++g) {
    const BigRat e = stringy::stringy_euler(g).value;
    const std::string value = is_integer(e) ? e.get_num().get_str() : to_pq_string(e);
    if (format == "json") {
      os << (g == r.lo ? "" : ", ") << "{\"genus\": " << g << ", \"euler\": " << value << '}';
    } else if (format == "csv") {
      os << g << ',' << value << '\n';
    } else {
      os << "g=" << g << " e_st=" << value << '\n';
    }
  }
  if (format == "json") os << "]\n";
  return os.str();
}

std::string format_report(const VerificationReport& report, const std::string& format) {
  if (format == "json") return report.to_json() + "\n";
  std::ostringstream os;
  for (const auto& e : report.entries()) {
    os << (e.pass ? "PASS " : "FAIL ") << e.identity << " g=" << e.genus;
    if (e.witness) os << "  " << *e.witness;
    os << '\n';
  }
  os << (report.all_pass() ? "all checks passed" : "verification FAILED") << '\n';
  return os.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + path + "'");
  file << text;
}

}  // namespace

int max_genus() {
  if (const char* env = std::getenv("MODINV_MAX_GENUS")) {
    try {
      const int cap = parse_int(env);
      if (cap >= 3) return cap;
    } catch (const UsageError&) {
    }
  }
  return kDefaultMaxGenus;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomological invariants of the moduli space of rank-2 bundles, computed exactly", "modinv"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string output;
  int genus = 0;
  std::string space_name;
  std::optional<std::size_t> order;
  std::string range_text;
  const auto formats = CLI::IsMember({"json", "csv", "pretty"});

  auto* poincare = app.add_subcommand("poincare", "Betti numbers of M2, K, Ksigma or S");
  poincare->add_option("--genus,-g", genus, "Genus (>= 3)")->required();
  poincare->add_option("--space,-s", space_name, "M2, K, Ksigma, S (or Rss, R1ss)")->required();
  poincare->add_option("--order", order, "Truncation order for Rss/R1ss");
  poincare->add_option("--format,-f", format, "json, csv or pretty")->check(formats);
  poincare->add_option("--output,-o", output, "Output file (default stdout)");

  auto* stringy_cmd = app.add_subcommand("stringy", "Stringy E-function of M0");
  stringy_cmd->add_option("--genus,-g", genus, "Genus (>= 3)")->required();
  stringy_cmd->add_option("--format,-f", format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));
  stringy_cmd->add_option("--output,-o", output, "Output file (default stdout)");

  auto* euler = app.add_subcommand("euler", "Stringy Euler numbers");
  auto* euler_range = euler->add_option("--genus-range,-r", range_text, "Genus range a..b (>= 2)");
  auto* euler_genus = euler->add_option("--genus,-g", genus, "Single genus");
  euler_range->excludes(euler_genus);
  euler->add_option("--format,-f", format, "json, csv or pretty")->check(formats);
  euler->add_option("--output,-o", output, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check every identity over a genus range");
  verify->add_option("--genus-range,-r", range_text, "Genus range a..b (>= 2)")->required();
  verify->add_option("--format,-f", format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));
  verify->add_option("--output,-o", output, "Output file (default stdout)");

  std::vector<std::string> storage{"modinv"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadArguments;
  }

  try {
    if (poincare->parsed()) {
      check_range({genus, genus}, 3);
      const auto space = kirwan::parse_space(space_name);
      if (!space) throw UsageError("unknown space '" + space_name + "'");
      emit(format_poincare(kirwan::poincare_table(genus, *space, order), format), output, out);
    } else if (stringy_cmd->parsed()) {
      check_range({genus, genus}, 3);
      emit(format_stringy(genus, format), output, out);
    } else if (euler->parsed()) {
      GenusRange r{genus, genus};
      if (!range_text.empty()) {
        r = parse_range(range_text);
      } else if (euler_genus->count() == 0) {
        throw UsageError("euler needs --genus-range or --genus");
      }
      check_range(r, 2);
      emit(format_euler(r, format), output, out);
    } else if (verify->parsed()) {
      const GenusRange r = parse_range(range_text);
      check_range(r, 2);
      const VerificationReport report = run_verification(r.lo, r.hi);
      emit(format_report(report, format), output, out);
      if (const auto* bad = report.first_failure()) {
        err << "first failure: " << bad->identity << " g=" << bad->genus << ": " << bad->witness.value_or("") << '\n';
        return kFailure;
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  } catch (const CertificationError& e) {
    err << "certification failed: " << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}

}  // namespace modinv::cli
