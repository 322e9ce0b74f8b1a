#include "qpb/suites.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>

#include "qpb/analyticity_kk.hpp"
#include "qpb/conjugate_transform.hpp"
#include "qpb/errors.hpp"
#include "qpb/operator_engine.hpp"
#include "qpb/states.hpp"
#include "qpb/time_ladder.hpp"
#include "qpb/uncertainty.hpp"
#include "qpb/weyl/checks.hpp"

namespace qpb {
namespace {

constexpr unsigned kRandomStates = 100;
constexpr double kPoleDistances[] = {0.5, 1.0, 2.0};

Context grid_context(const UniformGrid& g) {
  return {{"dim", static_cast<std::int64_t>(g.dim())},
          {"n_points", static_cast<std::int64_t>(g.n_points())},
          {"half_extent", g.half_extent()},
          {"hbar", g.hbar()}};
}

double max_gap(const WaveFunction& a, const WaveFunction& b) {
  double m = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
  return m;
}

UniformGrid operator_grid(const SuiteConfig& cfg) {
  return make_uniform_grid(1, cfg.n_points, cfg.half_extent, cfg.hbar);
}

UniformGrid grid_3d(const SuiteConfig& cfg) {
  return make_uniform_grid(3, cfg.points_3d(), cfg.half_extent, cfg.hbar);
}

UniformGrid kk_grid(const SuiteConfig& cfg, unsigned level = 0) {
  return make_uniform_grid(1, cfg.kk_points() << level, cfg.kk_half_extent() * (1 << level), cfg.hbar);
}

std::vector<WaveFunction> poisson_states(const UniformGrid& g) {
  std::vector<WaveFunction> states{gaussian_state(g, Representation::position, 0.0, 1.0),
                                   gaussian_state(g, Representation::position, 0.5, 0.8, 1.0)};
  for (unsigned k = 0; k <= 4; ++k) states.push_back(hermite_state(g, Representation::position, k));
  return states;
}

// Gaussian of width sigma centered at x0 with mean momentum p0, in momentum
// representation, with the phase exp(-i (p - p0) x0 / hbar) of the transform.
WaveFunction analytic_momentum_gaussian(const UniformGrid& pg, double x0, double sigma, double p0) {
  const double h = pg.hbar();
  const double amp = std::sqrt(sigma / (h * std::sqrt(std::numbers::pi)));
  return WaveFunction::sample(pg, Representation::momentum, [&](double p) {
    const double q = (p - p0) / h;
    return amp * std::exp(cplx{-0.5 * q * q * sigma * sigma, -q * x0});
  });
}

CheckReport fourier_gaussian_check(const UniformGrid& g, const std::string& id) {
  const double sigma = 1.0, x0 = 0.5, p0 = 1.5 * g.hbar();
  const WaveFunction psi = gaussian_state(g, Representation::position, x0, sigma, p0);
  const WaveFunction phi = to_momentum(psi);
  const WaveFunction expected = analytic_momentum_gaussian(phi.grid(), x0, sigma, p0);
  Context ctx = grid_context(g);
  ctx["sigma"] = sigma;
  ctx["center"] = x0;
  ctx["momentum"] = p0;
  return CheckReport::evaluate(id, max_gap(phi, expected), 1e-10, std::move(ctx));
}

}  // namespace

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::fourier: return "fourier";
    case Suite::poisson: return "poisson";
    case Suite::kk: return "kk";
    case Suite::weyl: return "weyl";
    case Suite::uncertainty: return "uncertainty";
    case Suite::ladder: return "ladder";
    case Suite::all: return "all";
  }
  return "unknown";
}

Suite parse_suite(std::string_view name) {
  for (Suite s : {Suite::fourier, Suite::poisson, Suite::kk, Suite::weyl, Suite::uncertainty,
                  Suite::ladder, Suite::all}) {
    if (to_string(s) == name) return s;
  }
  throw ConfigurationError("unknown suite '" + std::string(name) +
                           "' (expected fourier, poisson, kk, weyl, uncertainty, ladder or all)");
}

void SuiteConfig::validate() const {
  if (n_points < 32 || (n_points & (n_points - 1)) != 0) {
    throw ConfigurationError("n_points must be a power of two >= 32");
  }
  if (!(half_extent > 0.0) || !std::isfinite(half_extent)) {
    throw ConfigurationError("half_extent must be positive");
  }
  if (!(hbar > 0.0) || !std::isfinite(hbar)) throw ConfigurationError("hbar must be positive");
  if (!(omega > 0.0) || !std::isfinite(omega)) throw ConfigurationError("omega must be positive");
  if (n_trunc < 8) throw ConfigurationError("n_trunc must be at least 8");
  for (const auto& [id, tol] : tolerance_overrides) {
    if (!is_known_check(id)) throw ConfigurationError("tolerance override for unknown check '" + id + "'");
    if (!(tol >= 0.0) || !std::isfinite(tol)) {
      throw ConfigurationError("tolerance override for '" + id + "' must be a finite non-negative number");
    }
  }
}

std::vector<CheckReport> fourier_suite(const SuiteConfig& cfg) {
  const UniformGrid g = operator_grid(cfg);
  std::vector<CheckReport> out;

  SeededRng rng(cfg.seed);
  double round_trip = 0.0, parseval = 0.0;
  for (unsigned k = 0; k < kRandomStates; ++k) {
    const WaveFunction psi = random_band_limited_state(g, rng);
    round_trip = std::max(round_trip, max_gap(to_position(to_momentum(psi)), psi));
    parseval = std::max(parseval, check_parseval(psi).residual);
  }
  Context ctx = grid_context(g);
  ctx["states"] = static_cast<std::int64_t>(kRandomStates);
  ctx["seed"] = static_cast<std::int64_t>(cfg.seed);
  out.push_back(CheckReport::evaluate("fourier_round_trip", round_trip, 1e-12, ctx));
  out.push_back(CheckReport::evaluate("parseval", parseval, 1e-12, ctx));

  out.push_back(fourier_gaussian_check(g, "fourier_gaussian"));

  double covariance = 0.0;
  for (double scale : {0.5, 2.0}) {
    const UniformGrid gh = make_uniform_grid(1, cfg.n_points, cfg.half_extent, cfg.hbar * scale);
    covariance = std::max(covariance, fourier_gaussian_check(gh, "fourier_hbar_covariance").residual);
  }
  Context cov = grid_context(g);
  cov["hbar_scales"] = std::string("0.5,2");
  out.push_back(CheckReport::evaluate("fourier_hbar_covariance", covariance, 1e-10, std::move(cov)));

  const UniformGrid g3 = grid_3d(cfg);
  const std::array<double, 3> sigma{0.8, 1.0, 1.25};
  const WaveFunction psi3 = gaussian_state_3d(g3, sigma);
  const WaveFunction phi3 = to_momentum(psi3);
  const UniformGrid& pg = phi3.grid();
  const std::array<double, 3> sigma_p{cfg.hbar / sigma[0], cfg.hbar / sigma[1], cfg.hbar / sigma[2]};
  WaveFunction expected = gaussian_state_3d(pg, sigma_p);
  expected = WaveFunction(pg, Representation::momentum,
                          std::vector<cplx>(expected.values().begin(), expected.values().end()));
  Context c3 = grid_context(g3);
  c3["sigma"] = std::string("0.8,1,1.25");
  out.push_back(CheckReport::evaluate("fourier_3d_factorization", max_gap(phi3, expected), 1e-10,
                                      std::move(c3)));
  return out;
}

std::vector<CheckReport> poisson_suite(const SuiteConfig& cfg) {
  const UniformGrid g = operator_grid(cfg);
  std::vector<CheckReport> out;
  const auto states = poisson_states(g);

  double spectral = 0.0, corollary = 0.0;
  for (const WaveFunction& psi : states) {
    spectral = std::max(spectral, poisson_residual(psi).residual);
    corollary = std::max(corollary, corollary_residual_momentum(to_momentum(psi)).residual);
  }
  Context ctx = grid_context(g);
  ctx["backend"] = std::string("spectral");
  ctx["states"] = std::string("gaussian x2, hermite 0-4");
  out.push_back(CheckReport::evaluate("poisson_residual", spectral, 1e-6, ctx));
  ctx.erase("backend");
  ctx["representation"] = std::string("momentum");
  out.push_back(CheckReport::evaluate("corollary_residual_momentum", corollary, 1e-6, ctx));

  // Finite-difference residual under spacing halving at fixed extent.
  PoissonOptions fd;
  fd.backend = OperatorKind::momentum_finite_difference;
  double min_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t n = cfg.n_points / 2; n < 4 * cfg.n_points; n *= 2) {
    const UniformGrid coarse = make_uniform_grid(1, n, cfg.half_extent, cfg.hbar);
    const UniformGrid fine = make_uniform_grid(1, 2 * n, cfg.half_extent, cfg.hbar);
    const auto cs = poisson_states(coarse);
    const auto fs = poisson_states(fine);
    for (std::size_t k = 0; k < cs.size(); ++k) {
      const double r = poisson_residual(cs[k], fd).residual / poisson_residual(fs[k], fd).residual;
      min_ratio = std::min(min_ratio, r);
    }
  }
  Context fdc = grid_context(g);
  fdc["backend"] = std::string("finite_difference");
  fdc["levels"] = std::string("n/2 through 4n");
  out.push_back(CheckReport::evaluate("poisson_fd_convergence", min_ratio, 3.5, std::move(fdc),
                                      Criterion::at_least));

  const WaveFunction psi3 = gaussian_state_3d(grid_3d(cfg), {1.0, 1.0, 1.0});
  out.push_back(tensor_commutator_check(psi3));

  SeededRng rng(cfg.seed);
  double herm = 0.0;
  for (unsigned k = 0; k < 20; ++k) {
    const WaveFunction a = random_band_limited_state(g, rng);
    const WaveFunction b = random_band_limited_state(g, rng);
    for (OperatorKind kind : {OperatorKind::momentum_spectral, OperatorKind::momentum_finite_difference}) {
      const GridOperator p = momentum_operator(g, 0, kind);
      herm = std::max(herm, std::abs(inner_product(a, apply(p, b)) - inner_product(apply(p, a), b)));
    }
    const WaveFunction am = to_momentum(a), bm = to_momentum(b);
    const GridOperator x = position_operator(am.grid());
    herm = std::max(herm, std::abs(inner_product(am, apply(x, bm)) - inner_product(apply(x, am), bm)));
  }
  Context hc = grid_context(g);
  hc["pairs"] = static_cast<std::int64_t>(20);
  hc["seed"] = static_cast<std::int64_t>(cfg.seed);
  out.push_back(CheckReport::evaluate("momentum_hermiticity", herm, 1e-10, std::move(hc)));
  return out;
}

std::vector<CheckReport> kk_suite(const SuiteConfig& cfg) {
  const UniformGrid g = kk_grid(cfg);
  const double interior = 0.5 * g.half_extent();
  std::vector<CheckReport> out;

  double agreement = 0.0;
  for (double a : kPoleDistances) agreement = std::max(agreement, pv_agreement_gap(g, a, interior));
  Context ac = grid_context(g);
  ac["pole_distances"] = std::string("0.5,1,2");
  ac["padding"] = static_cast<std::int64_t>(kHilbertPadding);
  out.push_back(CheckReport::evaluate("hilbert_pv_agreement", agreement, 1e-5, ac));

  // Same physical sample points at every level: the spacing is fixed while n
  // and L double together.
  std::vector<double> gaps;
  for (unsigned level = 0; level < 3; ++level) {
    double gap = 0.0;
    for (double a : kPoleDistances) gap = std::max(gap, pv_agreement_gap(kk_grid(cfg, level), a, interior, 16));
    gaps.push_back(gap);
  }
  const double worst_ratio = std::max(gaps[1] / gaps[0], gaps[2] / gaps[1]);
  Context rc = grid_context(g);
  rc["gap_level0"] = gaps[0];
  rc["gap_level1"] = gaps[1];
  rc["gap_level2"] = gaps[2];
  rc["monotone"] = gaps[1] < gaps[0] && gaps[2] < gaps[1];
  out.push_back(CheckReport::evaluate("hilbert_refinement", worst_ratio, 1.0, std::move(rc)));

  double kk = 0.0, wrong = std::numeric_limits<double>::infinity();
  for (double a : kPoleDistances) {
    kk = std::max(kk, kk_residual(AnalyticSignal::unchecked(g, pole_family(g, a), HalfPlane::lower)).residual);
    wrong = std::min(wrong, kk_residual(AnalyticSignal::unchecked(g, pole_family(g, a, true),
                                                                  HalfPlane::lower)).residual);
  }
  Context kc = grid_context(g);
  kc["family"] = std::string("1/(u - i a), a in 0.5,1,2");
  kc["half_plane"] = std::string("lower");
  out.push_back(CheckReport::evaluate("kk_residual", kk, kKkTolerance, kc));
  kc["family"] = std::string("1/(u + i a), a in 0.5,1,2");
  out.push_back(CheckReport::evaluate("kk_wrong_half_plane", wrong, 1e-2, std::move(kc),
                                      Criterion::at_least));

  double involution = 0.0;
  for (double sigma : {1.0, 2.0, 4.0}) {
    std::vector<double> s(g.n_points());
    for (std::size_t j = 0; j < s.size(); ++j) s[j] = std::exp(-0.5 * std::pow(g.point(j) / sigma, 2));
    const auto hh = hilbert_line(hilbert_line(s, g), g);
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (std::abs(g.point(j)) <= interior) involution = std::max(involution, std::abs(hh[j] + s[j]));
    }
  }
  Context ic = grid_context(g);
  ic["sigmas"] = std::string("1,2,4");
  out.push_back(CheckReport::evaluate("hilbert_involution", involution, 1e-5, std::move(ic)));

  // Phase of a shifted, boosted Gaussian sampled directly and reconstructed
  // from its analytic momentum representation.
  const UniformGrid og = operator_grid(cfg);
  const double x0 = 0.5, sigma = 1.0, p0 = 1.5 * cfg.hbar;
  const WaveFunction direct = gaussian_state(og, Representation::position, x0, sigma, p0);
  const WaveFunction rebuilt =
      to_position(analytic_momentum_gaussian(reciprocal_grid(og), x0, sigma, p0), og);
  std::vector<double> mag(og.n_points()), pa(og.n_points()), pb(og.n_points());
  for (std::size_t j = 0; j < mag.size(); ++j) {
    mag[j] = std::abs(direct[j]);
    pa[j] = std::arg(direct[j]);
    pb[j] = std::arg(rebuilt[j]);
  }
  CheckReport phase = phase_equivalence(mag, pa, pb);
  for (const auto& [k, v] : grid_context(og)) phase.context[k] = v;
  out.push_back(std::move(phase));
  return out;
}

std::vector<CheckReport> weyl_suite(const SuiteConfig& cfg) {
  return {weyl::check_xp_commutator(),
          weyl::check_ht_commutator(),
          weyl::check_symmetrize_xp(),
          weyl::check_centrality(8, cfg.seed),
          weyl::check_hermiticity(8),
          weyl::check_recursion_agreement(6),
          weyl::check_matrix_oracle(200, cfg.seed, cfg.n_trunc, cfg.hbar)};
}

std::vector<CheckReport> uncertainty_suite(const SuiteConfig& cfg) {
  const UniformGrid g = operator_grid(cfg);
  const WaveFunction h2 = hermite_state(g, Representation::position, 2);
  return {uncertainty_check(position_operator(g), momentum_operator(g), h2),
          gaussian_saturation_check(g),
          hermite1_check(g),
          random_states_check(g, cfg.seed, 500),
          vector_uncertainty_check(gaussian_state_3d(grid_3d(cfg), {1.0, 1.0, 1.0})),
          energy_time_check(build_ladder(cfg.n_trunc, cfg.omega, cfg.hbar), cfg.seed)};
}

std::vector<CheckReport> ladder_suite(const SuiteConfig& cfg) {
  const LadderSystem sys = build_ladder(cfg.n_trunc, cfg.omega, cfg.hbar);
  return {check_ladder_algebra(sys), check_b5_substitution(sys), ht_commutator_residual(sys),
          eigenstate_representations(sys, 0)};
}

std::vector<std::string> suite_check_ids(Suite suite) {
  static const std::map<Suite, std::vector<std::string>> table{
      {Suite::fourier,
       {"fourier_3d_factorization", "fourier_gaussian", "fourier_hbar_covariance",
        "fourier_round_trip", "parseval"}},
      {Suite::poisson,
       {"corollary_residual_momentum", "momentum_hermiticity", "poisson_fd_convergence",
        "poisson_residual", "tensor_commutator"}},
      {Suite::kk,
       {"hilbert_involution", "hilbert_pv_agreement", "hilbert_refinement", "kk_residual",
        "kk_wrong_half_plane", "phase_equivalence"}},
      {Suite::weyl,
       {"weyl_centrality", "weyl_hermiticity", "weyl_ht_commutator", "weyl_matrix_oracle",
        "weyl_recursion_agreement", "weyl_symmetrize_xp", "weyl_xp_commutator"}},
      {Suite::uncertainty,
       {"energy_time_uncertainty", "uncertainty_check", "uncertainty_gaussian_saturation",
        "uncertainty_hermite1", "uncertainty_random_states", "vector_uncertainty"}},
      {Suite::ladder,
       {"ht_commutator_residual", "ladder_algebra", "ladder_b5_substitution",
        "ladder_eigen_representations"}}};
  if (suite != Suite::all) return table.at(suite);
  std::vector<std::string> ids;
  for (const auto& [s, list] : table) ids.insert(ids.end(), list.begin(), list.end());
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<CheckReport> run_suite(const SuiteConfig& cfg) {
  cfg.validate();
  using Runner = std::vector<CheckReport> (*)(const SuiteConfig&);
  std::vector<Runner> runners;
  switch (cfg.suite) {
    case Suite::fourier: runners = {fourier_suite}; break;
    case Suite::poisson: runners = {poisson_suite}; break;
    case Suite::kk: runners = {kk_suite}; break;
    case Suite::weyl: runners = {weyl_suite}; break;
    case Suite::uncertainty: runners = {uncertainty_suite}; break;
    case Suite::ladder: runners = {ladder_suite}; break;
    case Suite::all:
      runners = {fourier_suite, poisson_suite, kk_suite, weyl_suite, uncertainty_suite, ladder_suite};
      break;
  }
  std::vector<std::future<std::vector<CheckReport>>> jobs;
  for (Runner r : runners) jobs.push_back(std::async(std::launch::async, r, std::cref(cfg)));
  std::vector<CheckReport> out;
  for (auto& j : jobs) {
    auto part = j.get();
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  for (CheckReport& r : out) {
    if (auto it = cfg.tolerance_overrides.find(r.check_id); it != cfg.tolerance_overrides.end()) {
      r.retolerance(it->second);
      r.context["tolerance_overridden"] = true;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const CheckReport& a, const CheckReport& b) { return a.check_id < b.check_id; });
  return out;
}

}  // namespace qpb
