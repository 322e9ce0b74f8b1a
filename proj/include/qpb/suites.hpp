#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qpb/report.hpp"

namespace qpb {

enum class Suite { fourier, poisson, kk, weyl, uncertainty, ladder, all };

std::string_view to_string(Suite suite);
// Throws ConfigurationError for an unknown name.
Suite parse_suite(std::string_view name);

/// Run configuration. The 1D operator grid is (n_points, half_extent); the
/// Kramers-Kronig grid is (16 n_points, 8 half_extent) and the 3D grid is
/// (n_points / 4, half_extent), so the defaults give 4096 / 64 and 64^3 / 8.
struct SuiteConfig {
  Suite suite = Suite::all;
  std::size_t n_points = 256;
  double half_extent = 8.0;
  double hbar = 1.0;
  std::size_t n_trunc = 64;
  double omega = 1.0;
  std::uint64_t seed = 1;
  std::map<std::string, double> tolerance_overrides;

  std::size_t kk_points() const { return 16 * n_points; }
  double kk_half_extent() const { return 8.0 * half_extent; }
  std::size_t points_3d() const { return n_points / 4; }

  // Throws ConfigurationError on invalid grids, parameters or unknown
  // override keys.
  void validate() const;
};

/// Checks that make up a suite, in sorted order.
std::vector<std::string> suite_check_ids(Suite suite);

/// Runs every check of the suite once, applies the tolerance overrides and
/// returns the reports sorted by check id. Independent suites of `all` run
/// concurrently; the output does not depend on scheduling.
std::vector<CheckReport> run_suite(const SuiteConfig& cfg);

// Individual suites, without overrides.
std::vector<CheckReport> fourier_suite(const SuiteConfig& cfg);
std::vector<CheckReport> poisson_suite(const SuiteConfig& cfg);
std::vector<CheckReport> kk_suite(const SuiteConfig& cfg);
std::vector<CheckReport> weyl_suite(const SuiteConfig& cfg);
std::vector<CheckReport> uncertainty_suite(const SuiteConfig& cfg);
std::vector<CheckReport> ladder_suite(const SuiteConfig& cfg);

}  // namespace qpb
