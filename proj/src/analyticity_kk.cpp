#include "qpb/analyticity_kk.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "fft.hpp"
#include "qpb/errors.hpp"

namespace qpb {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kTailOrder = 6;

void require_1d(std::span<const double> samples, const UniformGrid& grid) {
  if (grid.dim() != 1) throw ConfigurationError("Hilbert transforms act on 1D grids");
  if (samples.size() != grid.n_points()) {
    throw ConfigurationError("sample count does not match the grid");
  }
}

double peak(std::span<const double> g) {
  double m = 0.0;
  for (double v : g) m = std::max(m, std::abs(v));
  return m;
}

void require_decay(std::span<const double> g, double top) {
  const double edge = std::max(std::abs(g.front()), std::abs(g.back()));
  if (edge > 0.1 * top) {
    throw BoundaryContaminationError("input does not decay towards the window edge (edge/peak = " +
                                     std::to_string(edge / top) + ")");
  }
}

// Spectral window transform without the edge precondition.
std::vector<double> window_transform(std::span<const double> samples, const UniformGrid& grid) {
  const std::size_t n = samples.size();
  const std::size_t m = n * kHilbertPadding;
  std::vector<cplx> padded(m), spec(m);
  std::copy(samples.begin(), samples.end(), padded.begin());
  detail::fft(padded, spec, detail::FftSign::forward);
  for (std::size_t k = 0; k < m; ++k) {
    // -i sgn(k); the zero and Nyquist modes carry no signum.
    if (k == 0 || k == m / 2) {
      spec[k] = 0.0;
    } else {
      spec[k] *= cplx{0.0, k < m / 2 ? -1.0 : 1.0};
    }
  }
  detail::fft(spec, padded, detail::FftSign::backward);

  // The FFT realizes the periodic kernel (1/P) cot(pi x / P) over the padded
  // period P; its first two deviations from 1/(pi x) are restored from the
  // low moments of the samples.
  const double h = grid.spacing();
  const double period = h * static_cast<double>(m);
  double mom[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t j = 0; j < n; ++j) {
    double p = samples[j] * h;
    for (double& mk : mom) {
      mk += p;
      p *= grid.point(j);
    }
  }
  const double c1 = kPi / (3.0 * period * period);
  const double c3 = std::pow(kPi, 3) / (45.0 * std::pow(period, 4));
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double z = grid.point(j);
    const double lin = z * mom[0] - mom[1];
    const double cub = z * z * z * mom[0] - 3.0 * z * z * mom[1] + 3.0 * z * mom[2] - mom[3];
    out[j] = padded[j].real() / static_cast<double>(m) + c1 * lin + c3 * cub;
  }
  return out;
}

// Rational model of the slowly decaying part of g, fitted on the outer
// quarter of each side, together with its exact whole-line transform.
//   basis: Re and Im of (beta / (u - i beta))^k, k = 1..kTailOrder
// These are boundary values of functions analytic in the lower half-plane,
// so H[Re f] = -Im f and H[Im f] = Re f.
struct TailModel {
  std::vector<double> values;
  std::vector<double> transform;
};

TailModel fit_tail_model(std::span<const double> g, const UniformGrid& grid) {
  const std::size_t n = g.size();
  const std::size_t q = n / 4;
  const double beta = grid.half_extent() / 8.0;
  const Eigen::Index cols = 2 * kTailOrder;

  Eigen::MatrixXd val(static_cast<Eigen::Index>(n), cols), hil(static_cast<Eigen::Index>(n), cols);
  for (std::size_t j = 0; j < n; ++j) {
    const auto r = static_cast<Eigen::Index>(j);
    const cplx w = beta / cplx(grid.point(j), -beta);
    cplx p = 1.0;
    for (int k = 0; k < kTailOrder; ++k) {
      p *= w;
      val(r, 2 * k) = p.real();
      val(r, 2 * k + 1) = p.imag();
      hil(r, 2 * k) = -p.imag();
      hil(r, 2 * k + 1) = p.real();
    }
  }
  Eigen::MatrixXd a(static_cast<Eigen::Index>(2 * q), cols);
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(2 * q));
  for (std::size_t r = 0; r < q; ++r) {
    const std::size_t left = r, right = n - q + r;
    a.row(static_cast<Eigen::Index>(r)) = val.row(static_cast<Eigen::Index>(left));
    a.row(static_cast<Eigen::Index>(q + r)) = val.row(static_cast<Eigen::Index>(right));
    rhs(static_cast<Eigen::Index>(r)) = g[left];
    rhs(static_cast<Eigen::Index>(q + r)) = g[right];
  }
  const Eigen::VectorXd c = a.completeOrthogonalDecomposition().solve(rhs);
  const Eigen::VectorXd mv = val * c;
  const Eigen::VectorXd mh = hil * c;
  return {std::vector<double>(mv.data(), mv.data() + mv.size()),
          std::vector<double>(mh.data(), mh.data() + mh.size())};
}

// Central-difference derivative at i, highest order the window allows.
double derivative_at(std::span<const double> g, std::size_t i, double h) {
  const std::size_t n = g.size();
  auto at = [&](std::ptrdiff_t k) { return g[static_cast<std::size_t>(static_cast<std::ptrdiff_t>(i) + k)]; };
  const std::size_t left = i, right = n - 1 - i;
  const std::size_t reach = std::min(left, right);
  if (reach >= 3) {
    return (-at(-3) + 9 * at(-2) - 45 * at(-1) + 45 * at(1) - 9 * at(2) + at(3)) / (60 * h);
  }
  if (reach == 2) return (at(-2) - 8 * at(-1) + 8 * at(1) - at(2)) / (12 * h);
  if (reach == 1) return (at(1) - at(-1)) / (2 * h);
  if (n < 2) return 0.0;
  return left == 0 ? (at(1) - at(0)) / h : (at(0) - at(-1)) / h;
}

}  // namespace

std::string_view to_string(HalfPlane plane) {
  return plane == HalfPlane::upper ? "upper" : "lower";
}

std::vector<double> hilbert_spectral(std::span<const double> samples, const UniformGrid& grid) {
  require_1d(samples, grid);
  const double top = peak(samples);
  if (top == 0.0) return std::vector<double>(samples.size(), 0.0);
  require_decay(samples, top);
  return window_transform(samples, grid);
}

std::vector<double> tail_closure(std::span<const double> samples, const UniformGrid& grid) {
  require_1d(samples, grid);
  const TailModel model = fit_tail_model(samples, grid);
  std::vector<double> out = window_transform(model.values, grid);
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = model.transform[j] - out[j];
  return out;
}

std::vector<double> hilbert_line(std::span<const double> samples, const UniformGrid& grid) {
  require_1d(samples, grid);
  const double top = peak(samples);
  if (top == 0.0) return std::vector<double>(samples.size(), 0.0);
  require_decay(samples, top);
  const TailModel model = fit_tail_model(samples, grid);
  std::vector<double> rest(samples.begin(), samples.end());
  for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= model.values[j];
  std::vector<double> out = window_transform(rest, grid);
  for (std::size_t j = 0; j < out.size(); ++j) out[j] += model.transform[j];
  return out;
}

double pv_quadrature(std::span<const double> samples, const UniformGrid& grid,
                     std::size_t z_index) {
  require_1d(samples, grid);
  const std::size_t n = samples.size();
  if (z_index >= n) throw RangeError("z_index outside the grid");
  const double h = grid.spacing();
  const double z = grid.point(z_index);
  const double gz = samples[z_index];

  // Each sample owns one cell, so the window is [u_0 - h/2, u_{n-1} + h/2].
  double s = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == z_index) {
      s -= h * derivative_at(samples, j, h);
    } else {
      s += h * (samples[j] - gz) / (z - grid.point(j));
    }
  }
  if (gz != 0.0) {
    const double a = grid.point(0) - 0.5 * h;
    const double b = grid.point(n - 1) + 0.5 * h;
    s += gz * std::log((z - a) / (b - z));
  }
  return s / kPi;
}

AnalyticSignal::AnalyticSignal(const UniformGrid& grid, std::vector<cplx> values, HalfPlane plane)
    : grid_(grid), values_(std::move(values)), plane_(plane) {
  if (grid_.dim() != 1) throw ConfigurationError("analytic signals live on 1D grids");
  if (values_.size() != grid_.n_points()) {
    throw ConfigurationError("sample count does not match the grid");
  }
}

AnalyticSignal AnalyticSignal::checked(const UniformGrid& grid, std::vector<cplx> values,
                                       HalfPlane plane) {
  AnalyticSignal s(grid, std::move(values), plane);
  const CheckReport r = kk_residual(s);
  if (!r.pass) {
    throw PreconditionError("signal is not analytic in the declared " +
                            std::string(to_string(plane)) + " half-plane (KK residual " +
                            std::to_string(r.residual) + ")");
  }
  return s;
}

AnalyticSignal AnalyticSignal::unchecked(const UniformGrid& grid, std::vector<cplx> values,
                                         HalfPlane plane) {
  return AnalyticSignal(grid, std::move(values), plane);
}

CheckReport kk_residual(const AnalyticSignal& f, double tolerance) {
  const UniformGrid& g = f.grid();
  const std::size_t n = g.n_points();
  std::vector<double> re(n), im(n);
  for (std::size_t j = 0; j < n; ++j) {
    re[j] = f.values()[j].real();
    im[j] = f.values()[j].imag();
  }
  const std::vector<double> h_re = hilbert_line(re, g);
  const std::vector<double> h_im = hilbert_line(im, g);
  const double s = f.half_plane() == HalfPlane::upper ? 1.0 : -1.0;

  double first = 0.0, second = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (std::abs(g.point(j)) > 0.5 * g.half_extent()) continue;
    first = std::max(first, std::abs(im[j] - s * h_re[j]));
    second = std::max(second, std::abs(re[j] + s * h_im[j]));
  }
  Context ctx{{"half_plane", std::string(to_string(f.half_plane()))},
              {"n_points", static_cast<std::int64_t>(n)},
              {"half_extent", g.half_extent()},
              {"interior_half_width", 0.5 * g.half_extent()},
              {"residual_imag_from_real", first},
              {"residual_real_from_imag", second},
              {"padding", static_cast<std::int64_t>(kHilbertPadding)}};
  return CheckReport::evaluate("kk_residual", std::max(first, second), tolerance, std::move(ctx));
}

std::vector<double> unwrap_phase(std::span<const double> phase) {
  std::vector<double> out(phase.begin(), phase.end());
  double offset = 0.0;
  for (std::size_t j = 1; j < out.size(); ++j) {
    const double jump = phase[j] - phase[j - 1];
    if (jump > kPi) {
      offset -= 2.0 * kPi * std::floor((jump + kPi) / (2.0 * kPi));
    } else if (jump < -kPi) {
      offset += 2.0 * kPi * std::floor((-jump + kPi) / (2.0 * kPi));
    }
    out[j] = phase[j] + offset;
  }
  return out;
}

CheckReport phase_equivalence(std::span<const double> mag, std::span<const double> phase_a,
                              std::span<const double> phase_b, double tolerance) {
  if (mag.size() != phase_a.size() || mag.size() != phase_b.size()) {
    throw ConfigurationError("magnitude and phase arrays differ in length");
  }
  const double top = peak(mag);
  if (!(top > 0.0)) throw PhaseUndefinedError("magnitude vanishes everywhere");
  const double threshold = 1e-3 * top;

  std::size_t first = mag.size(), last = 0;
  for (std::size_t j = 0; j < mag.size(); ++j) {
    if (mag[j] >= threshold) {
      first = std::min(first, j);
      last = j;
    }
  }
  for (std::size_t j = first; j <= last; ++j) {
    if (mag[j] <= 1e-12 * top) {
      throw PhaseUndefinedError("magnitude vanishes at sample " + std::to_string(j) +
                                " inside the comparison window");
    }
  }

  const auto a = unwrap_phase(phase_a.subspan(first, last - first + 1));
  const auto b = unwrap_phase(phase_b.subspan(first, last - first + 1));
  double residual = 0.0, max_jump = 0.0;
  std::int64_t compared = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k > 0) {
      max_jump = std::max({max_jump, std::abs(a[k] - a[k - 1]), std::abs(b[k] - b[k - 1])});
    }
    if (mag[first + k] < threshold) continue;
    const double d = a[k] - b[k];
    residual = std::max(residual, std::abs(d - 2.0 * kPi * std::round(d / (2.0 * kPi))));
    ++compared;
  }
  const bool under_resolved = max_jump > 0.5 * kPi;
  Context ctx{{"window_first", static_cast<std::int64_t>(first)},
              {"window_last", static_cast<std::int64_t>(last)},
              {"compared_points", compared},
              {"max_neighbour_jump", max_jump},
              {"insufficient_resolution", under_resolved}};
  if (under_resolved) residual = std::max(residual, max_jump);
  return CheckReport::evaluate("phase_equivalence", residual, tolerance, std::move(ctx));
}

std::vector<cplx> pole_family(const UniformGrid& grid, double a, bool conjugate) {
  if (!(a > 0.0)) throw ConfigurationError("pole distance must be positive");
  const cplx ia{0.0, conjugate ? -a : a};
  std::vector<cplx> out(grid.n_points());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = 1.0 / (grid.point(j) - ia);
  return out;
}

double pv_agreement_gap(const UniformGrid& grid, double a, double half_window, std::size_t stride) {
  if (stride == 0) throw ConfigurationError("stride must be positive");
  const std::vector<cplx> f = pole_family(grid, a);
  const std::size_t n = f.size();
  std::vector<double> re(n), im(n);
  for (std::size_t j = 0; j < n; ++j) {
    re[j] = f[j].real();
    im[j] = f[j].imag();
  }
  const auto h_re = hilbert_spectral(re, grid);
  const auto h_im = hilbert_spectral(im, grid);
  double gap = 0.0;
  for (std::size_t j = 0; j < n; j += stride) {
    if (std::abs(grid.point(j)) > half_window) continue;
    gap = std::max(gap, std::abs(h_re[j] - pv_quadrature(re, grid, j)));
    gap = std::max(gap, std::abs(h_im[j] - pv_quadrature(im, grid, j)));
  }
  return gap;
}

}  // namespace qpb
