#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "qpb/errors.hpp"
#include "qpb/report.hpp"
#include "qpb/suites.hpp"
#include "qpb/weyl.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::map<std::string, double> parse_overrides(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw qpb::ConfigurationError("tolerance override '" + item + "' is not check_id=value");
    }
    const std::string id = item.substr(0, eq);
    const std::string text = item.substr(eq + 1);
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size()) {
      throw qpb::ConfigurationError("tolerance override '" + item + "' has a non-numeric value");
    }
    out[id] = value;
  }
  return out;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw qpb::ConfigurationError("cannot open output file '" + path + "'");
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical and exact verification of canonical commutation results", "qpb"};
  app.require_subcommand(1);

  qpb::SuiteConfig cfg;
  std::string suite_name;
  std::vector<std::string> overrides;
  std::string format = "json";
  std::string out_path;
  auto* verify = app.add_subcommand("verify", "Run a verification suite and report every check");
  verify->add_option("suite", suite_name, "fourier, poisson, kk, weyl, uncertainty, ladder or all")
      ->required();
  verify->add_option("--n-points", cfg.n_points, "1D operator grid size (power of two)");
  verify->add_option("--half-extent", cfg.half_extent, "1D operator grid half extent L");
  verify->add_option("--hbar", cfg.hbar, "Value of hbar");
  verify->add_option("--n-trunc", cfg.n_trunc, "Number-basis truncation for matrix checks");
  verify->add_option("--omega", cfg.omega, "Ladder constant Omega");
  verify->add_option("--seed", cfg.seed, "Seed for random states and polynomials");
  verify->add_option("--tolerance", overrides, "Tolerance override check_id=value (repeatable)");
  verify->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
  verify->add_option("--out", out_path, "Write the report to FILE instead of stdout");

  std::string expression;
  auto* normal = app.add_subcommand("normal-order", "Print the normal-ordered form of an expression");
  normal->add_option("expression", expression, "Operator expression, e.g. \"[X, P^2]\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*normal) {
      const auto ast = qpb::weyl::parse(expression);
      std::cout << qpb::weyl::to_string(qpb::weyl::normal_order(qpb::weyl::evaluate(*ast))) << '\n';
      return kExitPass;
    }
    cfg.suite = qpb::parse_suite(suite_name);
    cfg.tolerance_overrides = parse_overrides(overrides);
    const auto reports = qpb::run_suite(cfg);
    const auto fmt = format == "table" ? qpb::ReportFormat::table : qpb::ReportFormat::json;
    write_output(qpb::emit_report(reports, fmt) + "\n", out_path);
    for (const auto& r : reports) {
      if (!r.pass) return kExitFail;
    }
    return kExitPass;
  } catch (const qpb::ParseError& e) {
    std::cerr << "qpb: " << e.what() << '\n';
    return kExitUsage;
  } catch (const qpb::ConfigurationError& e) {
    std::cerr << "qpb: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "qpb: check aborted: " << e.what() << '\n';
    return kExitFail;
  }
}
