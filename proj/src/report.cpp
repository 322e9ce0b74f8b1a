#include "qpb/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qpb {
namespace {

// check id -> citation of the result the check certifies.
const std::map<std::string, std::string>& catalog() {
  static const std::map<std::string, std::string> table{
      {"corollary_residual_momentum", "Eq 21"},
      {"energy_time_uncertainty", "Eq 33"},
      {"fourier_3d_factorization", "Eq 6"},
      {"fourier_gaussian", "Eq 6"},
      {"fourier_hbar_covariance", "Eq 6"},
      {"fourier_round_trip", "Eqs 6-7"},
      {"hilbert_involution", "Eq 14"},
      {"hilbert_pv_agreement", "Eq 14"},
      {"hilbert_refinement", "Eq 14"},
      {"ht_commutator_residual", "Eq 29"},
      {"kk_residual", "Eq 14"},
      {"kk_wrong_half_plane", "Eq 14"},
      {"ladder_algebra", "Eqs B6-B7"},
      {"ladder_b5_substitution", "Eq B5"},
      {"ladder_eigen_representations", "App B"},
      {"momentum_hermiticity", "Eqs 4-5"},
      {"parseval", "Def 9"},
      {"phase_equivalence", "Sec 2.3"},
      {"poisson_fd_convergence", "Eq 20"},
      {"poisson_residual", "Eq 20"},
      {"tensor_commutator", "Eq 22"},
      {"uncertainty_check", "Eq 30"},
      {"uncertainty_gaussian_saturation", "Eq 30"},
      {"uncertainty_hermite1", "Eq 30"},
      {"uncertainty_random_states", "Eq 30"},
      {"vector_uncertainty", "Eqs 33-34"},
      {"weyl_centrality", "Eqs 26-28"},
      {"weyl_hermiticity", "Eq 25"},
      {"weyl_ht_commutator", "Eq 29"},
      {"weyl_matrix_oracle", "Eqs 15, 20"},
      {"weyl_recursion_agreement", "Eq 25"},
      {"weyl_symmetrize_xp", "Eq 25"},
      {"weyl_xp_commutator", "Eq 20"},
  };
  return table;
}

bool judge(double residual, double tolerance, Criterion criterion) {
  if (std::isnan(residual)) return false;
  return criterion == Criterion::at_most ? residual <= tolerance : residual >= tolerance;
}

Criterion criterion_of(const CheckReport& r) {
  auto it = r.context.find("criterion");
  if (it != r.context.end()) {
    if (const auto* s = std::get_if<std::string>(&it->second); s && *s == "at_least") {
      return Criterion::at_least;
    }
  }
  return Criterion::at_most;
}

nlohmann::ordered_json to_json(const ContextValue& v) {
  return std::visit([](const auto& x) { return nlohmann::ordered_json(x); }, v);
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string format_context(const Context& ctx) {
  std::string out;
  for (const auto& [key, value] : ctx) {
    if (key == "criterion") continue;
    if (!out.empty()) out += ' ';
    out += key + '=';
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, bool>) {
            out += x ? "true" : "false";
          } else if constexpr (std::is_same_v<T, double>) {
            out += format_number(x);
          } else if constexpr (std::is_same_v<T, std::string>) {
            out += x;
          } else {
            out += std::to_string(x);
          }
        },
        value);
  }
  return out;
}

}  // namespace

CheckReport CheckReport::evaluate(const std::string& check_id, double residual, double tolerance,
                                  Context context, Criterion criterion) {
  CheckReport r;
  r.check_id = check_id;
  r.paper_ref = paper_ref_for(check_id);
  r.residual = residual;
  r.tolerance = tolerance;
  r.context = std::move(context);
  r.context["criterion"] = std::string(criterion == Criterion::at_most ? "at_most" : "at_least");
  r.pass = judge(residual, tolerance, criterion);
  return r;
}

void CheckReport::retolerance(double new_tolerance) {
  tolerance = new_tolerance;
  pass = judge(residual, tolerance, criterion_of(*this));
}

std::vector<std::string> known_check_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, ref] : catalog()) ids.push_back(id);
  return ids;
}

bool is_known_check(const std::string& check_id) {
  return catalog().contains(check_id);
}

const std::string& paper_ref_for(const std::string& check_id) {
  auto it = catalog().find(check_id);
  if (it == catalog().end()) throw std::out_of_range("unknown check id: " + check_id);
  return it->second;
}

std::string emit_report(const std::vector<CheckReport>& reports, ReportFormat format) {
  if (format == ReportFormat::json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
      nlohmann::ordered_json ctx = nlohmann::ordered_json::object();
      for (const auto& [key, value] : r.context) ctx[key] = to_json(value);
      nlohmann::ordered_json obj;
      obj["check_id"] = r.check_id;
      obj["paper_ref"] = r.paper_ref;
      obj["residual"] = r.residual;
      obj["tolerance"] = r.tolerance;
      obj["pass"] = r.pass;
      obj["context"] = std::move(ctx);
      arr.push_back(std::move(obj));
    }
    return arr.dump(2);
  }

  std::size_t id_w = 8, ref_w = 9;
  for (const auto& r : reports) {
    id_w = std::max(id_w, r.check_id.size());
    ref_w = std::max(ref_w, r.paper_ref.size());
  }
  std::ostringstream os;
  auto pad = [](const std::string& s, std::size_t w) {
    return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
  };
  os << pad("check_id", id_w) << "  " << pad("paper_ref", ref_w) << "  "
     << pad("residual", 11) << "  " << pad("tolerance", 11) << "  " << "pass  context\n";
  for (const auto& r : reports) {
    const bool at_least = criterion_of(r) == Criterion::at_least;
    os << pad(r.check_id, id_w) << "  " << pad(r.paper_ref, ref_w) << "  "
       << pad(format_number(r.residual), 11) << "  "
       << pad((at_least ? ">=" : "") + format_number(r.tolerance), 11) << "  "
       << (r.pass ? "PASS" : "FAIL") << "  " << format_context(r.context) << '\n';
  }
  return os.str();
}

}  // namespace qpb
