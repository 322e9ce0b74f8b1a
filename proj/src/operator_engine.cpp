#include "qpb/operator_engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "fft.hpp"
#include "qpb/conjugate_transform.hpp"
#include "qpb/errors.hpp"

namespace qpb {
namespace {

std::string_view backend_name(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::position_multiply: return "position_multiply";
    case OperatorKind::momentum_spectral: return "spectral";
    case OperatorKind::momentum_finite_difference: return "finite_difference";
  }
  return "unknown";
}

std::vector<cplx> multiply_by_coordinate(const WaveFunction& psi, int axis) {
  const UniformGrid& g = psi.grid();
  std::vector<cplx> out(psi.size());
  for (std::size_t f = 0; f < out.size(); ++f) out[f] = g.point(g.axis_index(f, axis)) * psi[f];
  return out;
}

// -i hbar d/dx along `axis` with the Fourier multiplier hbar k; the Nyquist
// mode has no odd derivative and is dropped.
std::vector<cplx> spectral_momentum(const WaveFunction& psi, int axis) {
  const UniformGrid& g = psi.grid();
  const std::size_t n = g.n_points();
  std::vector<cplx> data(psi.values().begin(), psi.values().end());
  detail::fft_axis(data, n, g.dim(), axis, detail::FftSign::forward);
  const double dk = 2.0 * std::numbers::pi / (static_cast<double>(n) * g.spacing());
  const double scale = g.hbar() / static_cast<double>(n);
  for (std::size_t f = 0; f < data.size(); ++f) {
    const std::size_t m = g.axis_index(f, axis);
    double k = 0.0;
    if (m < n / 2) {
      k = dk * static_cast<double>(m);
    } else if (m > n / 2) {
      k = -dk * static_cast<double>(n - m);
    }
    data[f] *= k * scale;
  }
  detail::fft_axis(data, n, g.dim(), axis, detail::FftSign::backward);
  return data;
}

std::vector<cplx> finite_difference_momentum(const WaveFunction& psi, int axis) {
  const UniformGrid& g = psi.grid();
  const std::size_t n = g.n_points();
  const std::size_t stride = g.dim() == 1 ? 1 : axis == 0 ? n * n : axis == 1 ? n : 1;
  const cplx factor{0.0, -g.hbar() / (2.0 * g.spacing())};
  std::vector<cplx> out(psi.size());
  for (std::size_t f = 0; f < out.size(); ++f) {
    const std::size_t j = g.axis_index(f, axis);
    const std::size_t base = f - j * stride;
    const std::size_t up = base + ((j + 1) % n) * stride;
    const std::size_t down = base + ((j + n - 1) % n) * stride;
    out[f] = factor * (psi[up] - psi[down]);
  }
  return out;
}

struct InteriorResidual {
  double residual = 0.0;
  std::int64_t points = 0;
};

// max over masked points of |lhs_j - i hbar psi_j| / max|psi|.
InteriorResidual relative_interior_residual(const WaveFunction& lhs, const WaveFunction& psi,
                                            double threshold) {
  const double peak = psi.max_abs();
  const cplx ihbar{0.0, psi.grid().hbar()};
  InteriorResidual out;
  for (std::size_t j = 0; j < psi.size(); ++j) {
    if (std::abs(psi[j]) <= threshold * peak) continue;
    out.residual = std::max(out.residual, std::abs(lhs[j] - ihbar * psi[j]) / peak);
    ++out.points;
  }
  return out;
}

Context grid_context(const UniformGrid& g) {
  return {{"dim", static_cast<std::int64_t>(g.dim())},
          {"n_points", static_cast<std::int64_t>(g.n_points())},
          {"half_extent", g.half_extent()},
          {"spacing", g.spacing()},
          {"hbar", g.hbar()}};
}

void require_boundary_clean(const WaveFunction& psi) {
  const double mass = psi.boundary_mass();
  if (mass > kBoundaryContaminationLimit) {
    throw BoundaryContaminationError(
        "state carries mass " + std::to_string(mass) +
        " near the window edge; the periodic truncation breaks the pointwise identity there");
  }
}

}  // namespace

GridOperator position_operator(const UniformGrid& grid, int axis) {
  if (axis < 0 || axis >= grid.dim()) throw ConfigurationError("operator axis out of range");
  return {OperatorKind::position_multiply, axis, grid};
}

GridOperator momentum_operator(const UniformGrid& grid, int axis, OperatorKind backend) {
  if (axis < 0 || axis >= grid.dim()) throw ConfigurationError("operator axis out of range");
  if (!is_momentum(backend)) throw ConfigurationError("momentum backend must be a momentum kind");
  return {backend, axis, grid};
}

bool is_momentum(OperatorKind kind) noexcept {
  return kind != OperatorKind::position_multiply;
}

WaveFunction apply(const GridOperator& op, const WaveFunction& psi) {
  if (!(op.grid == psi.grid())) {
    throw IncompatibleOperandsError("operator and wavefunction live on different grids");
  }
  if (op.axis < 0 || op.axis >= psi.grid().dim()) {
    throw ConfigurationError("operator axis out of range");
  }
  switch (psi.representation()) {
    case Representation::position:
      switch (op.kind) {
        case OperatorKind::position_multiply:
          return psi.with_values(multiply_by_coordinate(psi, op.axis));
        case OperatorKind::momentum_spectral:
          return psi.with_values(spectral_momentum(psi, op.axis));
        case OperatorKind::momentum_finite_difference:
          return psi.with_values(finite_difference_momentum(psi, op.axis));
      }
      break;
    case Representation::momentum:
      if (is_momentum(op.kind)) return psi.with_values(multiply_by_coordinate(psi, op.axis));
      {
        // +i hbar d/dp = F^-1 (r .) F
        const WaveFunction chi = to_position(psi);
        const WaveFunction r_chi = chi.with_values(multiply_by_coordinate(chi, op.axis));
        return to_momentum(r_chi, psi.grid());
      }
    default:
      break;
  }
  throw RepresentationError("grid operators act on position or momentum states, got " +
                            std::string(to_string(psi.representation())));
}

WaveFunction commutator_apply(const GridOperator& a, const GridOperator& b,
                              const WaveFunction& psi) {
  const WaveFunction ab = apply(a, apply(b, psi));
  const WaveFunction ba = apply(b, apply(a, psi));
  return ab - ba;
}

CheckReport poisson_residual(const WaveFunction& psi, const PoissonOptions& options) {
  if (psi.representation() != Representation::position) {
    throw RepresentationError("poisson_residual expects a position-representation state");
  }
  if (!is_momentum(options.backend)) {
    throw ConfigurationError("poisson_residual backend must be a momentum kind");
  }
  const UniformGrid& g = psi.grid();
  const bool spectral = options.backend == OperatorKind::momentum_spectral;
  const double tolerance =
      spectral ? 1e-6 : options.fd_constant * g.spacing() * g.spacing();

  Context ctx = grid_context(g);
  ctx["backend"] = std::string(backend_name(options.backend));
  ctx["interior_mask_threshold"] = options.interior_mask_threshold;
  ctx["axis"] = static_cast<std::int64_t>(options.axis);
  if (!spectral) ctx["fd_constant"] = options.fd_constant;

  if (psi.max_abs() == 0.0) {
    ctx["degenerate_input"] = true;
    return CheckReport::evaluate("poisson_residual", 0.0, tolerance, std::move(ctx));
  }
  require_boundary_clean(psi);
  ctx["boundary_mass"] = psi.boundary_mass();

  const WaveFunction lhs =
      commutator_apply(position_operator(g, options.axis),
                       momentum_operator(g, options.axis, options.backend), psi);
  const auto r = relative_interior_residual(lhs, psi, options.interior_mask_threshold);
  ctx["interior_points"] = r.points;
  return CheckReport::evaluate("poisson_residual", r.residual, tolerance, std::move(ctx));
}

CheckReport corollary_residual_momentum(const WaveFunction& g, double interior_mask_threshold) {
  if (g.representation() != Representation::momentum) {
    throw RepresentationError("corollary_residual_momentum expects a momentum-representation state");
  }
  Context ctx = grid_context(g.grid());
  ctx["interior_mask_threshold"] = interior_mask_threshold;
  if (g.max_abs() == 0.0) {
    ctx["degenerate_input"] = true;
    return CheckReport::evaluate("corollary_residual_momentum", 0.0, 1e-6, std::move(ctx));
  }
  require_boundary_clean(g);
  ctx["boundary_mass"] = g.boundary_mass();

  const UniformGrid& grid = g.grid();
  // In the momentum representation position_operator is +i hbar d/dp and
  // momentum_operator multiplies by p.
  const WaveFunction lhs =
      commutator_apply(position_operator(grid), momentum_operator(grid), g);
  const auto r = relative_interior_residual(lhs, g, interior_mask_threshold);
  ctx["interior_points"] = r.points;
  return CheckReport::evaluate("corollary_residual_momentum", r.residual, 1e-6, std::move(ctx));
}

std::array<std::array<cplx, 3>, 3> commutator_tensor(const WaveFunction& psi3d) {
  const UniformGrid& g = psi3d.grid();
  if (g.dim() != 3) throw ConfigurationError("commutator_tensor needs a 3D state");
  require_boundary_clean(psi3d);
  const cplx ihbar{0.0, g.hbar()};
  std::array<std::array<cplx, 3>, 3> t{};
  for (int m = 0; m < 3; ++m) {
    for (int n = 0; n < 3; ++n) {
      const WaveFunction c =
          commutator_apply(position_operator(g, m), momentum_operator(g, n), psi3d);
      t[m][n] = inner_product(psi3d, c) / ihbar;
    }
  }
  return t;
}

CheckReport tensor_commutator_check(const WaveFunction& psi3d, double tolerance) {
  const auto t = commutator_tensor(psi3d);
  double worst = 0.0;
  double worst_off = 0.0;
  for (int m = 0; m < 3; ++m) {
    for (int n = 0; n < 3; ++n) {
      const double dev = std::abs(t[m][n] - cplx{m == n ? 1.0 : 0.0, 0.0});
      worst = std::max(worst, dev);
      if (m != n) worst_off = std::max(worst_off, dev);
    }
  }
  Context ctx = grid_context(psi3d.grid());
  ctx["max_off_diagonal"] = worst_off;
  ctx["diag_xx_real"] = t[0][0].real();
  ctx["diag_yy_real"] = t[1][1].real();
  ctx["diag_zz_real"] = t[2][2].real();
  return CheckReport::evaluate("tensor_commutator", worst, tolerance, std::move(ctx));
}

}  // namespace qpb
