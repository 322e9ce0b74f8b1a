#pragma once

#include <complex>

#include <Eigen/Dense>

#include "qpb/weyl/operator_poly.hpp"

namespace qpb::weyl {

/// Truncated harmonic-basis matrices: X = sqrt(hbar/2)(a + a^H) and
/// P = i sqrt(hbar/2)(a^H - a) with a[m-1, m] = sqrt(m).
Eigen::MatrixXcd truncated_position(std::size_t n_trunc, double hbar_value);
Eigen::MatrixXcd truncated_momentum(std::size_t n_trunc, double hbar_value);

/// Numerical value of p with the first register letter mapped to X and the
/// second to P. Words of length d are exact on rows and columns below
/// n_trunc - d. Throws ConfigurationError for n_trunc < 4.
/// Products are accumulated in long double and rounded once at the end.
Eigen::MatrixXcd matrix_realize(const OperatorPoly& p, std::size_t n_trunc, double hbar_value);

using MatrixXcld = Eigen::Matrix<std::complex<long double>, Eigen::Dynamic, Eigen::Dynamic>;

// Same, without the final rounding.
MatrixXcld matrix_realize_extended(const OperatorPoly& p, std::size_t n_trunc, double hbar_value);

/// Size of the leading block on which matrix_realize(p) is free of truncation
/// defects (never negative).
std::size_t protected_block(const OperatorPoly& p, std::size_t n_trunc);

}  // namespace qpb::weyl
