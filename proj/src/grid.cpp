#include "qpb/grid.hpp"

#include <algorithm>
#include <cmath>

#include "qpb/errors.hpp"

namespace qpb {

std::string_view to_string(Representation rep) {
  switch (rep) {
    case Representation::position: return "position";
    case Representation::momentum: return "momentum";
    case Representation::energy: return "energy";
    case Representation::time: return "time";
  }
  return "unknown";
}

std::size_t UniformGrid::size() const noexcept {
  return dim_ == 1 ? n_ : n_ * n_ * n_;
}

double UniformGrid::cell_volume() const noexcept {
  return std::pow(spacing(), dim_);
}

std::vector<double> UniformGrid::points() const {
  std::vector<double> xs(n_);
  for (std::size_t j = 0; j < n_; ++j) xs[j] = point(j);
  return xs;
}

std::size_t UniformGrid::axis_index(std::size_t flat, int axis) const noexcept {
  if (dim_ == 1) return flat;
  switch (axis) {
    case 0: return flat / (n_ * n_);
    case 1: return (flat / n_) % n_;
    default: return flat % n_;
  }
}

UniformGrid make_uniform_grid(int dim, std::size_t n_points, double half_extent, double hbar) {
  if (dim != 1 && dim != 3) {
    throw ConfigurationError("grid dimension must be 1 or 3, got " + std::to_string(dim));
  }
  if (n_points < 8 || (n_points & (n_points - 1)) != 0) {
    throw ConfigurationError("n_points must be a power of two >= 8, got " +
                             std::to_string(n_points));
  }
  if (!(half_extent > 0.0) || !std::isfinite(half_extent)) {
    throw ConfigurationError("half_extent must be positive");
  }
  if (!(hbar > 0.0) || !std::isfinite(hbar)) {
    throw ConfigurationError("hbar must be positive");
  }
  return UniformGrid(dim, n_points, half_extent, hbar);
}

WaveFunction::WaveFunction(UniformGrid grid, Representation rep, std::vector<cplx> values)
    : grid_(grid), rep_(rep), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw ConfigurationError("wavefunction has " + std::to_string(values_.size()) +
                             " samples but the grid holds " + std::to_string(grid_.size()));
  }
}

WaveFunction WaveFunction::zeros(UniformGrid grid, Representation rep) {
  return WaveFunction(grid, rep, std::vector<cplx>(grid.size()));
}

WaveFunction WaveFunction::sample(UniformGrid grid, Representation rep,
                                  const std::function<cplx(double)>& f) {
  if (grid.dim() != 1) throw ConfigurationError("1D sampler used on a 3D grid");
  std::vector<cplx> v(grid.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = f(grid.point(j));
  return WaveFunction(grid, rep, std::move(v));
}

WaveFunction WaveFunction::sample(UniformGrid grid, Representation rep,
                                  const std::function<cplx(double, double, double)>& f) {
  if (grid.dim() != 3) throw ConfigurationError("3D sampler used on a 1D grid");
  const std::size_t n = grid.n_points();
  std::vector<cplx> v(grid.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        v[(i * n + j) * n + k] = f(grid.point(i), grid.point(j), grid.point(k));
  return WaveFunction(grid, rep, std::move(v));
}

double WaveFunction::norm() const {
  double s = 0.0;
  for (const auto& z : values_) s += std::norm(z);
  return std::sqrt(s * grid_.cell_volume());
}

double WaveFunction::max_abs() const {
  double m = 0.0;
  for (const auto& z : values_) m = std::max(m, std::abs(z));
  return m;
}

double WaveFunction::boundary_mass(std::size_t cells) const {
  const std::size_t n = grid_.n_points();
  auto near_edge = [&](std::size_t j) { return j < cells || j + cells >= n; };
  double s = 0.0;
  for (std::size_t f = 0; f < values_.size(); ++f) {
    bool edge = false;
    for (int a = 0; a < grid_.dim() && !edge; ++a) edge = near_edge(grid_.axis_index(f, a));
    if (edge) s += std::norm(values_[f]);
  }
  return s * grid_.cell_volume();
}

WaveFunction WaveFunction::with_values(std::vector<cplx> values) const {
  return WaveFunction(grid_, rep_, std::move(values));
}

void require_compatible(const WaveFunction& a, const WaveFunction& b) {
  if (!(a.grid() == b.grid())) {
    throw IncompatibleOperandsError("wavefunctions live on different grids");
  }
  if (a.representation() != b.representation()) {
    throw IncompatibleOperandsError("wavefunctions are in different representations (" +
                                    std::string(to_string(a.representation())) + " vs " +
                                    std::string(to_string(b.representation())) + ")");
  }
}

WaveFunction operator+(const WaveFunction& a, const WaveFunction& b) {
  require_compatible(a, b);
  std::vector<cplx> v(a.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = a.values_[j] + b.values_[j];
  return a.with_values(std::move(v));
}

WaveFunction operator-(const WaveFunction& a, const WaveFunction& b) {
  require_compatible(a, b);
  std::vector<cplx> v(a.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = a.values_[j] - b.values_[j];
  return a.with_values(std::move(v));
}

WaveFunction operator*(cplx s, const WaveFunction& a) {
  std::vector<cplx> v(a.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = s * a.values_[j];
  return a.with_values(std::move(v));
}

cplx inner_product(const WaveFunction& a, const WaveFunction& b) {
  require_compatible(a, b);
  cplx s{0.0, 0.0};
  const auto av = a.values();
  const auto bv = b.values();
  for (std::size_t j = 0; j < av.size(); ++j) s += std::conj(av[j]) * bv[j];
  return s * a.grid().cell_volume();
}

WaveFunction normalize(const WaveFunction& psi) {
  const double nrm = psi.norm();
  if (!(nrm > 0.0)) throw DegenerateStateError("cannot normalize the zero function");
  return cplx{1.0 / nrm, 0.0} * psi;
}

}  // namespace qpb
