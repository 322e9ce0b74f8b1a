#include "qpb/states.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "qpb/errors.hpp"

namespace qpb {
namespace {

// Physicists' Hermite polynomial by the three-term recurrence.
double hermite(unsigned order, double y) {
  double h0 = 1.0;
  if (order == 0) return h0;
  double h1 = 2.0 * y;
  for (unsigned k = 1; k < order; ++k) {
    const double h2 = 2.0 * y * h1 - 2.0 * k * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

}  // namespace

WaveFunction gaussian_state(const UniformGrid& grid, Representation rep, double center,
                            double sigma, double momentum) {
  if (!(sigma > 0.0)) throw ConfigurationError("gaussian width must be positive");
  const double amp = 1.0 / std::sqrt(sigma * std::sqrt(std::numbers::pi));
  const double k0 = momentum / grid.hbar();
  return WaveFunction::sample(grid, rep, [&](double x) {
    const double y = (x - center) / sigma;
    return amp * std::exp(-0.5 * y * y) * std::polar(1.0, k0 * x);
  });
}

WaveFunction gaussian_state_3d(const UniformGrid& grid, std::array<double, 3> sigma,
                               std::array<double, 3> center) {
  auto factor = [](double x, double c, double s) {
    const double y = (x - c) / s;
    return std::exp(-0.5 * y * y) / std::sqrt(s * std::sqrt(std::numbers::pi));
  };
  return WaveFunction::sample(grid, Representation::position, [&](double x, double y, double z) {
    return cplx{factor(x, center[0], sigma[0]) * factor(y, center[1], sigma[1]) *
                factor(z, center[2], sigma[2])};
  });
}

WaveFunction hermite_state(const UniformGrid& grid, Representation rep, unsigned order,
                           double center, double sigma) {
  double norm = std::sqrt(sigma * std::sqrt(std::numbers::pi));
  for (unsigned k = 1; k <= order; ++k) norm *= std::sqrt(2.0 * k);
  return WaveFunction::sample(grid, rep, [&](double x) {
    const double y = (x - center) / sigma;
    return cplx{hermite(order, y) * std::exp(-0.5 * y * y) / norm};
  });
}

std::uint64_t SeededRng::next_u64() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SeededRng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

WaveFunction random_band_limited_state(const UniformGrid& grid, SeededRng& rng,
                                       Representation rep) {
  // Envelope and mode ranges scale with the window so the state stays well
  // inside it: at L = 8 the edge amplitude is below exp(-28).
  const double scale = grid.half_extent() / 8.0;
  const double sigma = rng.uniform(0.5, 1.0) * scale;
  const double center = rng.uniform(-0.5, 0.5) * scale;
  const double kappa = rng.uniform(0.5, 1.0) / scale;
  constexpr int modes = 3;
  std::vector<cplx> coeff(2 * modes + 1);
  for (auto& c : coeff) c = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};

  auto envelope_times_modes = [&](double x) {
    const double y = (x - center) / sigma;
    cplx s{0.0, 0.0};
    for (int m = -modes; m <= modes; ++m) s += coeff[m + modes] * std::polar(1.0, m * kappa * x);
    return std::exp(-0.5 * y * y) * s;
  };

  if (grid.dim() == 1) {
    return normalize(WaveFunction::sample(grid, rep, envelope_times_modes));
  }
  return normalize(WaveFunction::sample(
      grid, rep, [&](double x, double y, double z) {
        const double r2 = (y * y + z * z) / (sigma * sigma);
        return envelope_times_modes(x) * std::exp(-0.5 * r2);
      }));
}

}  // namespace qpb
