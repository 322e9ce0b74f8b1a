#pragma once

#include <array>

#include "qpb/grid.hpp"
#include "qpb/report.hpp"

namespace qpb {

enum class OperatorKind { position_multiply, momentum_spectral, momentum_finite_difference };

/// Position or momentum component acting on grid wavefunctions.
///
/// In the position representation X multiplies by x and P is -i hbar d/dx
/// (spectral or second-order central difference). In the momentum
/// representation the roles swap: P multiplies by p and X is +i hbar d/dp,
/// realized by conjugating the position multiplication with the transform
/// pair.
struct GridOperator {
  OperatorKind kind;
  int axis;
  UniformGrid grid;
};

GridOperator position_operator(const UniformGrid& grid, int axis = 0);
GridOperator momentum_operator(const UniformGrid& grid, int axis = 0,
                               OperatorKind backend = OperatorKind::momentum_spectral);

bool is_momentum(OperatorKind kind) noexcept;

WaveFunction apply(const GridOperator& op, const WaveFunction& psi);

/// (AB - BA) psi by two applications per term.
WaveFunction commutator_apply(const GridOperator& a, const GridOperator& b,
                              const WaveFunction& psi);

struct PoissonOptions {
  OperatorKind backend = OperatorKind::momentum_spectral;
  double interior_mask_threshold = 1e-6;
  // Order-h^2 constant for the finite-difference tolerance C * spacing^2.
  double fd_constant = 4.0;
  int axis = 0;
};

// Boundary mass above which the pointwise identity is refused.
inline constexpr double kBoundaryContaminationLimit = 1e-6;

/// Pointwise [X, P] psi = i hbar psi on interior points of a position-space
/// state: max |([X,P]psi)_j - i hbar psi_j| / max|psi| where |psi_j| exceeds
/// the mask threshold times max|psi|.
CheckReport poisson_residual(const WaveFunction& psi, const PoissonOptions& options = {});

/// Same identity on the momentum side, [R, P] g = i hbar g with R = +i hbar d/dp.
/// A zero state passes vacuously and carries a `degenerate_input` flag.
CheckReport corollary_residual_momentum(const WaveFunction& g,
                                        double interior_mask_threshold = 1e-6);

/// <[X_m, P_n]> / (i hbar) for m, n in {0, 1, 2} on a normalized 3D state.
std::array<std::array<cplx, 3>, 3> commutator_tensor(const WaveFunction& psi3d);

/// Max entrywise deviation of commutator_tensor from the Kronecker delta.
CheckReport tensor_commutator_check(const WaveFunction& psi3d, double tolerance = 1e-6);

}  // namespace qpb
