#pragma once

#include <array>
#include <cstdint>

#include "qpb/grid.hpp"

namespace qpb {

/// Normalized Gaussian exp(-(x-center)^2 / (2 sigma^2)) exp(i k0 x) sampled in
/// `rep`, with k0 = momentum / hbar. Normalization is the continuum one, so
/// the discrete norm is 1 up to truncation and quadrature error.
WaveFunction gaussian_state(const UniformGrid& grid, Representation rep, double center,
                            double sigma, double momentum = 0.0);

/// Isotropic or anisotropic 3D Gaussian, a product of three 1D Gaussians.
WaveFunction gaussian_state_3d(const UniformGrid& grid, std::array<double, 3> sigma,
                               std::array<double, 3> center = {0.0, 0.0, 0.0});

/// Harmonic-oscillator eigenfunction of order `order` with length scale
/// sigma: H_n(y) exp(-y^2/2), y = (x - center) / sigma, continuum-normalized.
WaveFunction hermite_state(const UniformGrid& grid, Representation rep, unsigned order,
                           double center = 0.0, double sigma = 1.0);

/// Deterministic 64-bit generator (splitmix64). The standard distributions are
/// implementation-defined, so draws are formed by hand from raw bits.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next_u64();
  // Uniform on [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::uint64_t below(std::uint64_t bound) { return next_u64() % bound; }

 private:
  std::uint64_t state_;
};

/// Gaussian envelope times a random combination of low-order Fourier modes,
/// normalized on the grid. Envelope width and center are drawn so the state
/// is boundary clean on the default operator grid (n=256, L=8).
WaveFunction random_band_limited_state(const UniformGrid& grid, SeededRng& rng,
                                       Representation rep = Representation::position);

}  // namespace qpb
