#pragma once

#include "qpb/grid.hpp"
#include "qpb/report.hpp"

namespace qpb {

/// The hbar-scaled Fourier pair between momentum and position samples.
///
///   to_position:  Psi(r) = (2 pi hbar)^(-d/2) sum_p psi(p) exp(+i r.p/hbar) dp^d
///   to_momentum:  psi(p) = (2 pi hbar)^(-d/2) sum_r Psi(r) exp(-i r.p/hbar) dr^d
///
/// The output grid is the reciprocal of the input grid, dr * dp = 2 pi hbar / n
/// per axis, which makes the discrete pair exactly unitary. Both grids are
/// centered, so the raw FFT is wrapped in the (-1)^j phase bookkeeping that
/// maps it onto the centered continuum integral.
struct TransformConvention {
  static constexpr int sign_forward = +1;  // momentum -> position kernel sign
  static constexpr int sign_inverse = -1;
};

/// Grid with the same n and hbar whose half extent satisfies L * L' = n pi hbar / 2.
UniformGrid reciprocal_grid(const UniformGrid& grid);

WaveFunction to_position(const WaveFunction& psi_p);
// Same, but first checks that `output` is the reciprocal of the input grid.
WaveFunction to_position(const WaveFunction& psi_p, const UniformGrid& output);

WaveFunction to_momentum(const WaveFunction& chi_r);
WaveFunction to_momentum(const WaveFunction& chi_r, const UniformGrid& output);

// Transforms to the conjugate representation, whichever one `psi` is in.
WaveFunction to_conjugate(const WaveFunction& psi);

/// Parseval certificate: |‖F psi‖² - ‖psi‖²| plus the probability mass that
/// sits within four cells of the window edge in either representation. The
/// discrete transform is unitary by construction, so the edge mass is what
/// tells a truncated (clipped) state apart from a resolved one.
CheckReport check_parseval(const WaveFunction& psi, double tolerance = 1e-12);

}  // namespace qpb
