#pragma once

#include <cstddef>

#include <Eigen/Dense>

#include "qpb/report.hpp"

namespace qpb {

/// Number-basis truncation of the energy/time ladder algebra. The top index
/// n_trunc - 1 carries the truncation defect; identities are checked on the
/// protected block of indices below it.
struct LadderSystem {
  std::size_t n_trunc = 0;
  double omega = 1.0;
  double hbar = 1.0;
  Eigen::MatrixXcd b;
  Eigen::MatrixXcd b_dagger;
  Eigen::MatrixXcd K;
  Eigen::MatrixXcd H;
  Eigen::MatrixXcd T;

  std::size_t protected_size() const noexcept { return n_trunc - 1; }
};

/// b[m-1, m] = sqrt(m), K = b^H b + 1/2, H = hbar Omega (b + b^H) / sqrt(2),
/// T = (b - b^H) / (i sqrt(2) Omega). Throws ConfigurationError for
/// n_trunc < 4 or non-positive omega or hbar.
LadderSystem build_ladder(std::size_t n_trunc, double omega, double hbar);

/// Action of b, b^H and K on basis vectors m <= n_trunc - 2 and
/// [b, b^H] = 1 on the protected block. The corner entry of [b, b^H] is
/// recorded in the context.
CheckReport check_ladder_algebra(const LadderSystem& sys, double tolerance = 1e-12);

/// Rebuilds b and b^H from H and T, and compares the quadratic form of K
/// written in H and T with b^H b + 1/2 on the protected block.
CheckReport check_b5_substitution(const LadderSystem& sys, double tolerance = 1e-12);

/// max |[H, T] - i hbar| over the protected block; the largest deviation
/// outside it is recorded.
CheckReport ht_commutator_residual(const LadderSystem& sys, double tolerance = 1e-10);

struct EigenBasis {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXcd eigenvectors; // columns, first nonzero component real positive
};

/// Eigenbasis of the protected block of a Hermitian matrix.
EigenBasis protected_eigenbasis(const LadderSystem& sys, const Eigen::MatrixXcd& op);

struct EigenRepresentations {
  EigenBasis time_basis;
  EigenBasis energy_basis;
  Eigen::VectorXcd phi;  // <t|m> sampled on the T eigenvalues
  Eigen::VectorXcd chi;  // <e|m> sampled on the H eigenvalues
};

/// Throws RangeError unless m <= n_trunc - 2.
EigenRepresentations eigen_representations(const LadderSystem& sys, std::size_t m);

/// Unit norm of both representations of |m>, unitarity of the overlap between
/// the H and T eigenbases, and orthonormality of phi_j for j <= min(4, block).
CheckReport eigenstate_representations(const LadderSystem& sys, std::size_t m,
                                       double tolerance = 1e-10);

}  // namespace qpb
