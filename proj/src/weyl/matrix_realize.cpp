#include "qpb/weyl/matrix_realize.hpp"

#include <cmath>

#include "qpb/errors.hpp"

namespace qpb::weyl {
namespace {

using cld = std::complex<long double>;

template <class M>
M lowering(std::size_t n) {
  using S = typename M::Scalar::value_type;
  M a = M::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t m = 1; m < n; ++m) {
    a(static_cast<Eigen::Index>(m - 1), static_cast<Eigen::Index>(m)) = std::sqrt(static_cast<S>(m));
  }
  return a;
}

template <class M>
M position(std::size_t n, double hbar_value) {
  using S = typename M::Scalar::value_type;
  const M a = lowering<M>(n);
  return std::sqrt(static_cast<S>(hbar_value) / 2) * (a + a.adjoint());
}

template <class M>
M momentum(std::size_t n, double hbar_value) {
  using S = typename M::Scalar::value_type;
  const M a = lowering<M>(n);
  return typename M::Scalar(0, std::sqrt(static_cast<S>(hbar_value) / 2)) * (a.adjoint() - a);
}

// term * t for a tridiagonal t with zero diagonal.
void right_multiply_tridiagonal(MatrixXcld& term, const MatrixXcld& t) {
  const Eigen::Index n = term.cols();
  MatrixXcld out = MatrixXcld::Zero(term.rows(), n);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (j > 0) out.col(j) += term.col(j - 1) * t(j - 1, j);
    if (j + 1 < n) out.col(j) += term.col(j + 1) * t(j + 1, j);
  }
  term = std::move(out);
}

// Exact rational coefficient, rounded once to long double.
cld coefficient(const HbarPoly& c, double hbar_value) {
  cld s{0, 0};
  for (const auto& [k, g] : c.terms()) {
    const cld v(static_cast<long double>(g.re.get_num().get_d()) / g.re.get_den().get_d(),
                static_cast<long double>(g.im.get_num().get_d()) / g.im.get_den().get_d());
    s += v * std::pow(static_cast<long double>(hbar_value), static_cast<int>(k));
  }
  return s;
}

void require_size(std::size_t n_trunc) {
  if (n_trunc < 4) throw ConfigurationError("n_trunc must be at least 4");
}

}  // namespace

Eigen::MatrixXcd truncated_position(std::size_t n_trunc, double hbar_value) {
  require_size(n_trunc);
  return position<Eigen::MatrixXcd>(n_trunc, hbar_value);
}

Eigen::MatrixXcd truncated_momentum(std::size_t n_trunc, double hbar_value) {
  require_size(n_trunc);
  return momentum<Eigen::MatrixXcd>(n_trunc, hbar_value);
}

MatrixXcld matrix_realize_extended(const OperatorPoly& p, std::size_t n_trunc, double hbar_value) {
  require_size(n_trunc);
  const MatrixXcld x = position<MatrixXcld>(n_trunc, hbar_value);
  const MatrixXcld pm = momentum<MatrixXcld>(n_trunc, hbar_value);
  const auto n = static_cast<Eigen::Index>(n_trunc);
  MatrixXcld out = MatrixXcld::Zero(n, n);
  for (const auto& [w, c] : p.terms()) {
    const char second = second_letter(w.reg());
    MatrixXcld term = MatrixXcld::Identity(n, n);
    for (char letter : w.letters()) right_multiply_tridiagonal(term, letter == second ? pm : x);
    out += coefficient(c, hbar_value) * term;
  }
  return out;
}

Eigen::MatrixXcd matrix_realize(const OperatorPoly& p, std::size_t n_trunc, double hbar_value) {
  return matrix_realize_extended(p, n_trunc, hbar_value).cast<std::complex<double>>();
}

std::size_t protected_block(const OperatorPoly& p, std::size_t n_trunc) {
  const std::size_t d = p.degree();
  return d >= n_trunc ? 0 : n_trunc - d;
}

}  // namespace qpb::weyl
