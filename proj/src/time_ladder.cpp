#include "qpb/time_ladder.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "qpb/errors.hpp"

namespace qpb {
namespace {

using Eigen::Index;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using cd = std::complex<double>;

double max_abs(const MatrixXcd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

VectorXcd basis_vector(Index n, Index m) {
  VectorXcd e = VectorXcd::Zero(n);
  if (m >= 0 && m < n) e(m) = 1.0;
  return e;
}

Context system_context(const LadderSystem& sys) {
  return {{"n_trunc", static_cast<std::int64_t>(sys.n_trunc)},
          {"omega", sys.omega},
          {"hbar", sys.hbar},
          {"protected_block", static_cast<std::int64_t>(sys.protected_size())},
          {"block_policy", std::string("indices < n_trunc - 1")}};
}

}  // namespace

LadderSystem build_ladder(std::size_t n_trunc, double omega, double hbar) {
  if (n_trunc < 4) throw ConfigurationError("n_trunc must be at least 4");
  if (!(omega > 0.0)) throw ConfigurationError("omega must be positive");
  if (!(hbar > 0.0)) throw ConfigurationError("hbar must be positive");
  const auto n = static_cast<Index>(n_trunc);
  LadderSystem sys;
  sys.n_trunc = n_trunc;
  sys.omega = omega;
  sys.hbar = hbar;
  sys.b = MatrixXcd::Zero(n, n);
  for (Index m = 1; m < n; ++m) sys.b(m - 1, m) = std::sqrt(static_cast<double>(m));
  sys.b_dagger = sys.b.adjoint();
  sys.K = sys.b_dagger * sys.b + 0.5 * MatrixXcd::Identity(n, n);
  sys.H = (hbar * omega / std::sqrt(2.0)) * (sys.b + sys.b_dagger);
  sys.T = (sys.b - sys.b_dagger) / cd(0.0, std::sqrt(2.0) * omega);
  return sys;
}

CheckReport check_ladder_algebra(const LadderSystem& sys, double tolerance) {
  const auto n = static_cast<Index>(sys.n_trunc);
  const Index p = n - 1;
  double action = 0.0;
  for (Index m = 0; m <= n - 2; ++m) {
    const VectorXcd e = basis_vector(n, m);
    const double sm = std::sqrt(static_cast<double>(m));
    const double sm1 = std::sqrt(static_cast<double>(m + 1));
    action = std::max(action, (sys.b * e - sm * basis_vector(n, m - 1)).cwiseAbs().maxCoeff());
    action = std::max(action, (sys.b_dagger * e - sm1 * basis_vector(n, m + 1)).cwiseAbs().maxCoeff());
    action = std::max(action, (sys.K * e - (m + 0.5) * e).cwiseAbs().maxCoeff());
  }
  const MatrixXcd comm = sys.b * sys.b_dagger - sys.b_dagger * sys.b;
  const double block = max_abs(comm.topLeftCorner(p, p) - MatrixXcd::Identity(p, p));

  Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(sys.K.topLeftCorner(p, p));
  double spectrum = 0.0;
  for (Index m = 0; m < p; ++m) spectrum = std::max(spectrum, std::abs(solver.eigenvalues()(m) - (m + 0.5)));

  Context ctx = system_context(sys);
  ctx["basis_action_residual"] = action;
  ctx["commutator_block_residual"] = block;
  ctx["k_spectrum_residual"] = spectrum;
  ctx["corner_defect"] = comm(p, p).real();
  ctx["truncation_defect"] = true;
  return CheckReport::evaluate("ladder_algebra", std::max({action, block, spectrum}), tolerance,
                               std::move(ctx));
}

CheckReport check_b5_substitution(const LadderSystem& sys, double tolerance) {
  const double h = sys.hbar, w = sys.omega;
  const auto p = static_cast<Index>(sys.protected_size());
  const cd pre = 1.0 / std::sqrt(2.0 * h);
  const MatrixXcd b = pre * (sys.H / (std::sqrt(h) * w) + cd(0.0, std::sqrt(h) * w) * sys.T);
  const MatrixXcd bd = pre * (sys.H / (std::sqrt(h) * w) - cd(0.0, std::sqrt(h) * w) * sys.T);
  const double ladder = std::max(max_abs(b - sys.b), max_abs(bd - sys.b_dagger));
  const MatrixXcd k = sys.H * sys.H / (2.0 * h * h * w * w) + (w * w / 2.0) * sys.T * sys.T;
  const double quadratic = max_abs((k - sys.K).topLeftCorner(p, p));
  const double hermitian = std::max(max_abs(sys.H - sys.H.adjoint()), max_abs(sys.T - sys.T.adjoint()));

  Context ctx = system_context(sys);
  ctx["ladder_residual"] = ladder;
  ctx["quadratic_form_residual"] = quadratic;
  ctx["hermiticity_residual"] = hermitian;
  ctx["quadratic_form_corner"] = std::abs(k(p, p) - sys.K(p, p));
  return CheckReport::evaluate("ladder_b5_substitution", std::max({ladder, quadratic, hermitian}),
                               tolerance, std::move(ctx));
}

CheckReport ht_commutator_residual(const LadderSystem& sys, double tolerance) {
  const auto n = static_cast<Index>(sys.n_trunc);
  const Index p = n - 1;
  const MatrixXcd dev = sys.H * sys.T - sys.T * sys.H - cd(0.0, sys.hbar) * MatrixXcd::Identity(n, n);
  const double inside = max_abs(dev.topLeftCorner(p, p));
  double outside = 0.0;
  for (Index i = 0; i < n; ++i) outside = std::max({outside, std::abs(dev(i, p)), std::abs(dev(p, i))});
  Context ctx = system_context(sys);
  ctx["outside_block_residual"] = outside;
  ctx["truncation_defect"] = outside > 0.0;
  return CheckReport::evaluate("ht_commutator_residual", inside, tolerance, std::move(ctx));
}

EigenBasis protected_eigenbasis(const LadderSystem& sys, const MatrixXcd& op) {
  const auto p = static_cast<Index>(sys.protected_size());
  Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(op.topLeftCorner(p, p));
  if (solver.info() != Eigen::Success) throw PreconditionError("eigendecomposition did not converge");
  EigenBasis out{solver.eigenvalues(), solver.eigenvectors()};
  for (Index c = 0; c < p; ++c) {
    auto col = out.eigenvectors.col(c);
    for (Index r = 0; r < p; ++r) {
      if (std::abs(col(r)) > 1e-12) {
        col *= std::conj(col(r)) / std::abs(col(r));
        break;
      }
    }
  }
  return out;
}

EigenRepresentations eigen_representations(const LadderSystem& sys, std::size_t m) {
  if (m + 2 > sys.n_trunc) {
    throw RangeError("basis index " + std::to_string(m) + " outside the protected range 0.." +
                     std::to_string(sys.n_trunc - 2));
  }
  EigenRepresentations out{protected_eigenbasis(sys, sys.T), protected_eigenbasis(sys, sys.H), {}, {}};
  const auto p = static_cast<Index>(sys.protected_size());
  const VectorXcd e = basis_vector(p, static_cast<Index>(m));
  out.phi = out.time_basis.eigenvectors.adjoint() * e;
  out.chi = out.energy_basis.eigenvectors.adjoint() * e;
  return out;
}

CheckReport eigenstate_representations(const LadderSystem& sys, std::size_t m, double tolerance) {
  const EigenRepresentations rep = eigen_representations(sys, m);
  const auto p = static_cast<Index>(sys.protected_size());
  const double norms = std::max(std::abs(rep.phi.norm() - 1.0), std::abs(rep.chi.norm() - 1.0));
  const MatrixXcd overlap = rep.energy_basis.eigenvectors.adjoint() * rep.time_basis.eigenvectors;
  const double unitarity = max_abs(overlap.adjoint() * overlap - MatrixXcd::Identity(p, p));

  const Index k = std::min<Index>(5, p);
  MatrixXcd phis(p, k);
  for (Index j = 0; j < k; ++j) phis.col(j) = eigen_representations(sys, static_cast<std::size_t>(j)).phi;
  const double ortho = max_abs(phis.adjoint() * phis - MatrixXcd::Identity(k, k));

  Context ctx = system_context(sys);
  ctx["m"] = static_cast<std::int64_t>(m);
  ctx["norm_residual"] = norms;
  ctx["overlap_unitarity_residual"] = unitarity;
  ctx["orthonormality_residual"] = ortho;
  return CheckReport::evaluate("ladder_eigen_representations", std::max({norms, unitarity, ortho}),
                               tolerance, std::move(ctx));
}

}  // namespace qpb
