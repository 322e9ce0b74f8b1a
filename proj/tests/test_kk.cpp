#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qpb/analyticity_kk.hpp"
#include "qpb/conjugate_transform.hpp"
#include "qpb/errors.hpp"
#include "qpb/states.hpp"

using namespace qpb;

namespace {

constexpr double kPi = std::numbers::pi;

UniformGrid kk_grid(std::size_t n = 4096, double half = 64.0) {
  return make_uniform_grid(1, n, half);
}

std::vector<double> sample(const UniformGrid& g, double (*f)(double)) {
  std::vector<double> out(g.n_points());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = f(g.point(j));
  return out;
}

// Dawson's integral D(x) = int_0^x exp(t^2 - x^2) dt by composite Simpson.
double dawson(double x) {
  const double ax = std::abs(x);
  if (ax == 0.0) return 0.0;
  const int m = 2 * static_cast<int>(std::ceil(ax * 2000.0 + 100));
  const double h = ax / m;
  double s = 0.0;
  for (int k = 0; k <= m; ++k) {
    const double t = k * h;
    const double w = (k == 0 || k == m) ? 1.0 : (k % 2 ? 4.0 : 2.0);
    s += w * std::exp((t - ax) * (t + ax));
  }
  return std::copysign(s * h / 3.0, x);
}

}  // namespace

TEST(HilbertSpectral, ZeroInZeroOut) {
  const UniformGrid g = kk_grid();
  const std::vector<double> zero(g.n_points(), 0.0);
  for (double v : hilbert_spectral(zero, g)) EXPECT_EQ(v, 0.0);
  for (double v : hilbert_line(zero, g)) EXPECT_EQ(v, 0.0);
}

TEST(HilbertSpectral, EvenInOddOut) {
  const UniformGrid g = kk_grid();
  const auto out = hilbert_spectral(sample(g, [](double u) { return std::exp(-u * u); }), g);
  const std::size_t n = g.n_points();
  double worst = 0.0;
  for (std::size_t j = 1; j < n; ++j) worst = std::max(worst, std::abs(out[j] + out[n - j]));
  EXPECT_LT(worst, 1e-10);
}

TEST(HilbertSpectral, BoundaryHeavyInputRejected) {
  const UniformGrid g = kk_grid(256, 8.0);
  const std::vector<double> flat(g.n_points(), 1.0);
  EXPECT_THROW(hilbert_spectral(flat, g), BoundaryContaminationError);
  EXPECT_THROW(hilbert_line(flat, g), BoundaryContaminationError);
}

TEST(HilbertSpectral, AgreesWithPvOracle) {
  // u / (u^2 + 1), every 16th interior sample.
  const UniformGrid g = kk_grid(8192, 64.0);
  const auto re = sample(g, [](double u) { return u / (u * u + 1.0); });
  const auto spec = hilbert_spectral(re, g);
  double worst = 0.0;
  for (std::size_t j = 0; j < g.n_points(); j += 16) {
    if (std::abs(g.point(j)) > 32.0) continue;
    worst = std::max(worst, std::abs(spec[j] - pv_quadrature(re, g, j)));
  }
  EXPECT_LT(worst, 1e-6);
}

TEST(HilbertLine, GaussianMatchesDawson) {
  const UniformGrid g = kk_grid();
  const auto out = hilbert_line(sample(g, [](double u) { return std::exp(-u * u); }), g);
  double worst = 0.0;
  for (std::size_t j = 0; j < g.n_points(); j += 37) {
    if (std::abs(g.point(j)) > 32.0) continue;
    worst = std::max(worst, std::abs(out[j] - 2.0 / std::sqrt(kPi) * dawson(g.point(j))));
  }
  EXPECT_LT(worst, 1e-9);
}

TEST(HilbertLine, RationalPairClosedForm) {
  const UniformGrid g = kk_grid();
  for (double a : {0.5, 1.0, 2.0}) {
    std::vector<double> re(g.n_points());
    for (std::size_t j = 0; j < re.size(); ++j) re[j] = g.point(j) / (g.point(j) * g.point(j) + a * a);
    const auto h = hilbert_line(re, g);
    double worst = 0.0;
    for (std::size_t j = 0; j < re.size(); ++j) {
      const double u = g.point(j);
      if (std::abs(u) <= 32.0) worst = std::max(worst, std::abs(h[j] + a / (u * u + a * a)));
    }
    EXPECT_LT(worst, 1e-8) << "a = " << a;
  }
}

TEST(HilbertLine, InvolutionOnGaussians) {
  const UniformGrid g = kk_grid();
  for (double sigma : {1.0, 2.0, 4.0}) {
    std::vector<double> f(g.n_points());
    for (std::size_t j = 0; j < f.size(); ++j) f[j] = std::exp(-0.5 * std::pow(g.point(j) / sigma, 2));
    const auto twice = hilbert_line(hilbert_line(f, g), g);
    double worst = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (std::abs(g.point(j)) <= 32.0) worst = std::max(worst, std::abs(twice[j] + f[j]));
    }
    EXPECT_LT(worst, 1e-5) << "sigma = " << sigma;
  }
}

TEST(TailClosure, SumsToLineTransform) {
  const UniformGrid g = kk_grid();
  const auto re = sample(g, [](double u) { return u / (u * u + 1.0); });
  const auto a = hilbert_spectral(re, g);
  const auto b = tail_closure(re, g);
  const auto c = hilbert_line(re, g);
  for (std::size_t j = 0; j < c.size(); j += 101) EXPECT_NEAR(a[j] + b[j], c[j], 1e-12);
}

TEST(PvQuadrature, OddKernelOnEvenFunction) {
  // The cell window [-L - h/2, L - h/2] is one cell short of symmetric; the
  // closed form of -(1/pi) PV int du / (u (u^2 + 1)) over it accounts for that.
  const UniformGrid g = kk_grid();
  const auto f = sample(g, [](double u) { return 1.0 / (u * u + 1.0); });
  const double h = g.spacing();
  const double a = g.point(0) - h / 2, b = g.point(g.n_points() - 1) + h / 2;
  auto prim = [](double u) { return std::log(std::abs(u)) - 0.5 * std::log1p(u * u); };
  EXPECT_NEAR(pv_quadrature(f, g, g.n_points() / 2), -(prim(b) - prim(a)) / kPi, 1e-10);

  const UniformGrid wide = kk_grid(8192, 128.0);
  const auto fw = sample(wide, [](double u) { return 1.0 / (u * u + 1.0); });
  EXPECT_NEAR(pv_quadrature(fw, wide, wide.n_points() / 2), 0.0, 1e-8);
}

TEST(PvQuadrature, ConstantDecaysWithWindow) {
  const UniformGrid g = kk_grid(8192, 64.0);
  const std::vector<double> c(g.n_points(), 1.0);
  const double bound = 2.0 / g.half_extent() / kPi;
  EXPECT_LE(std::abs(pv_quadrature(c, g, g.n_points() / 2)), bound);
}

TEST(PvQuadrature, WindowedClosedForm) {
  // -(1/pi) int_a^b du / (u^2 + 1) over the cell window [a, b].
  const UniformGrid g = kk_grid();
  const auto f = sample(g, [](double u) { return u / (u * u + 1.0); });
  const double h = g.spacing();
  const double a = g.point(0) - h / 2, b = g.point(g.n_points() - 1) + h / 2;
  const double expect = -(std::atan(b) - std::atan(a)) / kPi;
  EXPECT_NEAR(pv_quadrature(f, g, g.n_points() / 2), expect, 1e-6);
}

TEST(KkResidual, PoleFamily) {
  const UniformGrid g = kk_grid();
  for (double a : {0.5, 1.0, 2.0}) {
    const CheckReport ok = kk_residual(AnalyticSignal::unchecked(g, pole_family(g, a), HalfPlane::lower));
    EXPECT_TRUE(ok.pass) << ok.residual;
    const CheckReport bad =
        kk_residual(AnalyticSignal::unchecked(g, pole_family(g, a, true), HalfPlane::lower));
    EXPECT_FALSE(bad.pass);
    EXPECT_GT(bad.residual, 1e-2);
    // The conjugate is analytic in the other half-plane.
    EXPECT_TRUE(kk_residual(AnalyticSignal::unchecked(g, pole_family(g, a, true), HalfPlane::upper)).pass);
  }
}

TEST(KkResidual, RealGaussianFails) {
  const UniformGrid g = kk_grid();
  std::vector<cplx> v(g.n_points());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = std::exp(-g.point(j) * g.point(j));
  EXPECT_FALSE(kk_residual(AnalyticSignal::unchecked(g, v, HalfPlane::lower)).pass);
  EXPECT_FALSE(kk_residual(AnalyticSignal::unchecked(g, v, HalfPlane::upper)).pass);
  EXPECT_THROW(AnalyticSignal::checked(g, v, HalfPlane::lower), PreconditionError);
}

TEST(KkResidual, ZeroSignalPasses) {
  const UniformGrid g = kk_grid();
  const CheckReport r =
      kk_residual(AnalyticSignal::unchecked(g, std::vector<cplx>(g.n_points()), HalfPlane::upper));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.residual, 0.0);
}

TEST(PhaseEquivalence, ConstructedOffsets) {
  const UniformGrid g = make_uniform_grid(1, 256, 8.0);
  std::vector<double> mag(g.n_points()), a(g.n_points()), b(g.n_points()), c(g.n_points());
  for (std::size_t j = 0; j < mag.size(); ++j) {
    const double x = g.point(j);
    mag[j] = std::exp(-x * x / 2);
    a[j] = std::remainder(0.7 * x, 2 * kPi);
    b[j] = a[j] + 2 * kPi;
    c[j] = a[j] + 0.1;
  }
  const CheckReport same = phase_equivalence(mag, a, b);
  EXPECT_TRUE(same.pass);
  EXPECT_LT(same.residual, 1e-12);
  const CheckReport off = phase_equivalence(mag, a, c);
  EXPECT_FALSE(off.pass);
  EXPECT_NEAR(off.residual, 0.1, 1e-12);

  mag[g.n_points() / 2] = 0.0;
  EXPECT_THROW(phase_equivalence(mag, a, b), PhaseUndefinedError);
}

TEST(PhaseEquivalence, TransformedAndDirectGaussian) {
  const UniformGrid pos = make_uniform_grid(1, 256, 8.0);
  const UniformGrid mom = reciprocal_grid(pos);
  const double x0 = 0.5, p0 = 1.5, sigma_p = 1.0;
  // Position image of a momentum Gaussian centred at p0 with phase exp(-i p x0).
  const WaveFunction psi = WaveFunction::sample(mom, Representation::momentum, [&](double p) {
    const double y = (p - p0) / sigma_p;
    return std::exp(-0.5 * y * y) * std::polar(1.0, -p * x0);
  });
  const WaveFunction viaft = to_position(psi);
  std::vector<double> mag(pos.n_points()), pa(pos.n_points()), pb(pos.n_points());
  for (std::size_t j = 0; j < mag.size(); ++j) {
    const double x = pos.point(j);
    mag[j] = std::abs(viaft[j]);
    pa[j] = std::arg(viaft[j]);
    pb[j] = p0 * (x - x0);
  }
  EXPECT_TRUE(phase_equivalence(mag, pa, pb).pass);
}
