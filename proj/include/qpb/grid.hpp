#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace qpb {

using cplx = std::complex<double>;

enum class Representation { position, momentum, energy, time };

std::string_view to_string(Representation rep);

/// Periodic uniform sampling of [-L, L) along each of `dim` axes.
///
/// Sample j sits at -L + j * spacing with spacing = 2L / n, so +L itself is
/// excluded. All axes share n and L; the flat index of a 3D sample (i, j, k)
/// is (i * n + j) * n + k, with axis 0 the slowest.
class UniformGrid {
 public:
  int dim() const noexcept { return dim_; }
  std::size_t n_points() const noexcept { return n_; }
  double half_extent() const noexcept { return half_extent_; }
  double hbar() const noexcept { return hbar_; }
  double spacing() const noexcept { return 2.0 * half_extent_ / static_cast<double>(n_); }

  // Total number of samples, n^dim.
  std::size_t size() const noexcept;
  double cell_volume() const noexcept;

  double point(std::size_t j) const noexcept {
    return -half_extent_ + static_cast<double>(j) * spacing();
  }
  std::vector<double> points() const;

  // Per-axis index of a flat sample index.
  std::size_t axis_index(std::size_t flat, int axis) const noexcept;

  bool operator==(const UniformGrid&) const = default;

 private:
  friend UniformGrid make_uniform_grid(int, std::size_t, double, double);
  UniformGrid(int dim, std::size_t n, double half_extent, double hbar)
      : dim_(dim), n_(n), half_extent_(half_extent), hbar_(hbar) {}

  int dim_;
  std::size_t n_;
  double half_extent_;
  double hbar_;
};

/// Throws ConfigurationError unless dim is 1 or 3, n is a power of two >= 8,
/// and both the half extent and hbar are positive.
UniformGrid make_uniform_grid(int dim, std::size_t n_points, double half_extent,
                              double hbar = 1.0);

class WaveFunction {
 public:
  WaveFunction(UniformGrid grid, Representation rep, std::vector<cplx> values);

  static WaveFunction zeros(UniformGrid grid, Representation rep);
  static WaveFunction sample(UniformGrid grid, Representation rep,
                             const std::function<cplx(double)>& f);
  static WaveFunction sample(UniformGrid grid, Representation rep,
                             const std::function<cplx(double, double, double)>& f);

  const UniformGrid& grid() const noexcept { return grid_; }
  Representation representation() const noexcept { return rep_; }
  std::span<const cplx> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  cplx operator[](std::size_t j) const noexcept { return values_[j]; }

  double norm() const;
  double max_abs() const;

  // Probability mass carried by samples within `cells` spacings of the window
  // edge along any axis.
  double boundary_mass(std::size_t cells = 4) const;

  WaveFunction with_values(std::vector<cplx> values) const;

  friend WaveFunction operator+(const WaveFunction& a, const WaveFunction& b);
  friend WaveFunction operator-(const WaveFunction& a, const WaveFunction& b);
  friend WaveFunction operator*(cplx s, const WaveFunction& a);

 private:
  UniformGrid grid_;
  Representation rep_;
  std::vector<cplx> values_;
};

/// Riemann sum  sum_j conj(a_j) b_j spacing^dim.
cplx inner_product(const WaveFunction& a, const WaveFunction& b);

WaveFunction normalize(const WaveFunction& psi);

// Throws IncompatibleOperandsError unless both share grid and representation.
void require_compatible(const WaveFunction& a, const WaveFunction& b);

}  // namespace qpb
