#include "qpb/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qpb/errors.hpp"

namespace qpb {
namespace {

void require_normalized(const WaveFunction& psi) {
  const double n = psi.norm();
  if (std::abs(n - 1.0) > kNormalizationTolerance) {
    throw PreconditionError("state is not normalized (norm " + std::to_string(n) + ")");
  }
}

void require_grid(const GridOperator& op, const WaveFunction& psi) {
  if (!(op.grid == psi.grid())) throw IncompatibleOperandsError("operator and state grids differ");
}

Context grid_context(const UniformGrid& g) {
  return {{"n_points", static_cast<std::int64_t>(g.n_points())},
          {"half_extent", g.half_extent()},
          {"hbar", g.hbar()},
          {"dim", static_cast<std::int64_t>(g.dim())}};
}

double product_xp(const WaveFunction& psi) {
  const UniformGrid& g = psi.grid();
  return moments(position_operator(g), psi).std_dev * moments(momentum_operator(g), psi).std_dev;
}

double ladder_std(const Eigen::MatrixXcd& op, const Eigen::VectorXcd& v) {
  const Eigen::VectorXcd av = op * v;
  const double mean = v.dot(av).real();
  return std::sqrt(std::max(0.0, av.squaredNorm() - mean * mean));
}

}  // namespace

std::string operator_tag(const GridOperator& op) {
  std::string out = is_momentum(op.kind) ? "P" : "X";
  out += std::to_string(op.axis);
  if (op.kind == OperatorKind::momentum_finite_difference) out += " finite_difference";
  if (op.kind == OperatorKind::momentum_spectral) out += " spectral";
  return out;
}

cplx expectation(const GridOperator& op, const WaveFunction& psi) {
  require_grid(op, psi);
  require_normalized(psi);
  return inner_product(psi, apply(op, psi));
}

Moments moments(const GridOperator& op, const WaveFunction& psi) {
  require_grid(op, psi);
  require_normalized(psi);
  const WaveFunction a_psi = apply(op, psi);
  const cplx mean = inner_product(psi, a_psi);
  Moments out;
  out.mean = mean.real();
  out.imaginary_residue = std::abs(mean.imag());
  out.second_moment = inner_product(a_psi, a_psi).real();
  out.std_dev = std::sqrt(std::max(0.0, out.second_moment - out.mean * out.mean));
  out.operator_tag = operator_tag(op);
  return out;
}

CheckReport uncertainty_check(const GridOperator& a, const GridOperator& b, const WaveFunction& psi,
                              double slack) {
  const Moments ma = moments(a, psi);
  const Moments mb = moments(b, psi);
  const double bound = 0.5 * std::abs(inner_product(psi, commutator_apply(a, b, psi)));
  const double product = ma.std_dev * mb.std_dev;
  Context ctx = grid_context(psi.grid());
  ctx["operator_a"] = ma.operator_tag;
  ctx["operator_b"] = mb.operator_tag;
  ctx["product"] = product;
  ctx["bound"] = bound;
  ctx["imaginary_residue"] = std::max(ma.imaginary_residue, mb.imaginary_residue);
  return CheckReport::evaluate("uncertainty_check", bound - product, slack, std::move(ctx));
}

CheckReport vector_uncertainty_check(const WaveFunction& psi3d, double slack) {
  const UniformGrid& g = psi3d.grid();
  if (g.dim() != 3) throw ConfigurationError("vector uncertainty needs a three-dimensional state");
  double sum = 0.0;
  Context ctx = grid_context(g);
  for (int axis = 0; axis < 3; ++axis) {
    const double p = moments(position_operator(g, axis), psi3d).std_dev *
                     moments(momentum_operator(g, axis), psi3d).std_dev;
    ctx["axis" + std::to_string(axis) + "_product"] = p;
    sum += p;
  }
  const double bound = 1.5 * g.hbar();
  ctx["product"] = sum;
  ctx["bound"] = bound;
  ctx["saturation_gap"] = sum - bound;
  return CheckReport::evaluate("vector_uncertainty", bound - sum, slack, std::move(ctx));
}

CheckReport gaussian_saturation_check(const UniformGrid& grid, double sigma, double tolerance) {
  const WaveFunction psi = gaussian_state(grid, Representation::position, 0.0, sigma);
  const double product = product_xp(psi);
  Context ctx = grid_context(grid);
  ctx["sigma"] = sigma;
  ctx["product"] = product;
  return CheckReport::evaluate("uncertainty_gaussian_saturation",
                               std::abs(product - 0.5 * grid.hbar()), tolerance, std::move(ctx));
}

CheckReport hermite1_check(const UniformGrid& grid, double tolerance) {
  const WaveFunction psi = hermite_state(grid, Representation::position, 1);
  const double product = product_xp(psi);
  Context ctx = grid_context(grid);
  ctx["product"] = product;
  return CheckReport::evaluate("uncertainty_hermite1", std::abs(product - 1.5 * grid.hbar()),
                               tolerance, std::move(ctx));
}

CheckReport random_states_check(const UniformGrid& grid, std::uint64_t seed, unsigned count,
                                double slack) {
  SeededRng rng(seed);
  double worst = -std::numeric_limits<double>::infinity();
  double min_product = std::numeric_limits<double>::infinity();
  for (unsigned k = 0; k < count; ++k) {
    const WaveFunction psi = random_band_limited_state(grid, rng);
    const double product = product_xp(psi);
    min_product = std::min(min_product, product);
    worst = std::max(worst, 0.5 * grid.hbar() - product);
  }
  Context ctx = grid_context(grid);
  ctx["seed"] = static_cast<std::int64_t>(seed);
  ctx["states"] = static_cast<std::int64_t>(count);
  ctx["min_product"] = min_product;
  return CheckReport::evaluate("uncertainty_random_states", worst, slack, std::move(ctx));
}

CheckReport energy_time_check(const LadderSystem& sys, std::uint64_t seed, unsigned count,
                              double slack) {
  const auto n = static_cast<Eigen::Index>(sys.n_trunc);
  const Eigen::MatrixXcd comm = sys.H * sys.T - sys.T * sys.H;
  SeededRng rng(seed);
  double worst = -std::numeric_limits<double>::infinity();
  double ground_product = 0.0;
  for (unsigned k = 0; k <= count; ++k) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
    if (k == 0) {
      v(0) = 1.0;
    } else {
      for (Eigen::Index j = 0; j < n / 2; ++j) v(j) = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
      v.normalize();
    }
    const double product = ladder_std(sys.H, v) * ladder_std(sys.T, v);
    const double bound = 0.5 * std::abs(v.dot(comm * v));
    if (k == 0) ground_product = product;
    worst = std::max(worst, bound - product);
  }
  Context ctx{{"n_trunc", static_cast<std::int64_t>(sys.n_trunc)},
              {"omega", sys.omega},
              {"hbar", sys.hbar},
              {"seed", static_cast<std::int64_t>(seed)},
              {"states", static_cast<std::int64_t>(count + 1)},
              {"ground_state_product", ground_product}};
  return CheckReport::evaluate("energy_time_uncertainty", worst, slack, std::move(ctx));
}

}  // namespace qpb
