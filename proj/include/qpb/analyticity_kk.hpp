#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qpb/grid.hpp"
#include "qpb/report.hpp"

namespace qpb {

/// Half-plane of the complex variable in which a boundary value f(u) extends
/// analytically. For `upper` the Kramers-Kronig pair reads
///   Im f(z) = -(1/pi) PV int Re f(u) / (u - z) du
///   Re f(z) = +(1/pi) PV int Im f(u) / (u - z) du
/// and for `lower` both signs flip. 1/(u - i a), a > 0, is `lower`.
enum class HalfPlane { upper, lower };

std::string_view to_string(HalfPlane plane);

// Zero-padding factor of the spectral transform.
inline constexpr std::size_t kHilbertPadding = 64;

/// H[g](z) = -(1/pi) PV int_window g(u) / (u - z) du, where the window is the
/// union of the sample cells [u_0 - h/2, u_{n-1} + h/2]. Computed with the
/// -i sgn(k) multiplier on a zero-padded FFT; the bias of the periodic kernel
/// is removed through the low moments of the samples.
///
/// Throws BoundaryContaminationError when an edge sample exceeds 10% of the
/// peak magnitude (the input does not decay towards the window edge).
std::vector<double> hilbert_spectral(std::span<const double> samples, const UniformGrid& grid);

/// Far-field contribution outside the window. A rational tail model
/// sum_k a_k Re w^k + b_k Im w^k, w = beta / (u - i beta), beta = L/8,
/// k <= 6, is fitted to the outer quarter on each side; its whole-line
/// transform is known in closed form. Zero for boundary-clean input.
std::vector<double> tail_closure(std::span<const double> samples, const UniformGrid& grid);

/// Whole-line transform: the window transform of g minus its tail model,
/// plus the exact transform of the model. Equals hilbert_spectral +
/// tail_closure; reliable on the interior |u| <= L/2.
std::vector<double> hilbert_line(std::span<const double> samples, const UniformGrid& grid);

/// Brute-force oracle for hilbert_spectral at sample `z_index`: the same
/// window integral, by subtracting g(z) to remove the pole, a cell sum on the
/// remainder (whose value at u = z is -g'(z), from central differences), and
/// the closed-form PV of the constant term.
double pv_quadrature(std::span<const double> samples, const UniformGrid& grid,
                     std::size_t z_index);

/// Complex boundary values declared analytic in one half-plane.
class AnalyticSignal {
 public:
  // Rejects (PreconditionError) a signal whose declared KK pair fails by more
  // than the kk tolerance.
  static AnalyticSignal checked(const UniformGrid& grid, std::vector<cplx> values,
                                HalfPlane plane);
  static AnalyticSignal unchecked(const UniformGrid& grid, std::vector<cplx> values,
                                  HalfPlane plane);

  const UniformGrid& grid() const noexcept { return grid_; }
  std::span<const cplx> values() const noexcept { return values_; }
  HalfPlane half_plane() const noexcept { return plane_; }

 private:
  AnalyticSignal(const UniformGrid& grid, std::vector<cplx> values, HalfPlane plane);

  UniformGrid grid_;
  std::vector<cplx> values_;
  HalfPlane plane_;
};

inline constexpr double kKkTolerance = 1e-5;

/// max over |u| <= L/2 of |Im f - s H[Re f]| and |Re f + s H[Im f]|, with
/// s = +1 for the upper and -1 for the lower half-plane.
CheckReport kk_residual(const AnalyticSignal& f, double tolerance = kKkTolerance);

/// Compares two phase profiles modulo 2 pi on the window where
/// mag >= 1e-3 max(mag). Both phases are unwrapped first; a remaining jump
/// above pi/2 between neighbours fails the check with a resolution flag.
/// Throws PhaseUndefinedError if mag vanishes inside the window.
CheckReport phase_equivalence(std::span<const double> mag, std::span<const double> phase_a,
                              std::span<const double> phase_b, double tolerance = 1e-6);

/// Samples of 1/(u - i a), or of its conjugate 1/(u + i a).
std::vector<cplx> pole_family(const UniformGrid& grid, double a, bool conjugate = false);

/// Largest gap between hilbert_spectral and pv_quadrature, over both the real
/// and imaginary part of pole_family(grid, a), at every `stride`-th sample of
/// the interior |u| <= half_window.
double pv_agreement_gap(const UniformGrid& grid, double a, double half_window,
                        std::size_t stride = 1);

// Sequential 1D unwrap with jump threshold pi.
std::vector<double> unwrap_phase(std::span<const double> phase);

}  // namespace qpb
