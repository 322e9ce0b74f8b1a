#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace qpb {

using ContextValue = std::variant<bool, std::int64_t, double, std::string>;
using Context = std::map<std::string, ContextValue>;

// How a residual is compared against its tolerance. Most checks are
// `at_most` (an error that must stay small); checks that certify a failure
// or a convergence rate are `at_least`.
enum class Criterion { at_most, at_least };

/// The unit of evidence emitted by every verification routine.
struct CheckReport {
  std::string check_id;
  std::string paper_ref;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  Context context;

  // Builds a report for a catalogued check; paper_ref comes from the catalog.
  // Throws std::out_of_range for an unknown check id.
  static CheckReport evaluate(const std::string& check_id, double residual, double tolerance,
                              Context context = {}, Criterion criterion = Criterion::at_most);

  // Re-judges the report against a new tolerance, keeping its criterion.
  void retolerance(double new_tolerance);
};

// Every check id the library can emit, in sorted order.
std::vector<std::string> known_check_ids();
bool is_known_check(const std::string& check_id);
const std::string& paper_ref_for(const std::string& check_id);

enum class ReportFormat { json, table };

std::string emit_report(const std::vector<CheckReport>& reports, ReportFormat format);

}  // namespace qpb
