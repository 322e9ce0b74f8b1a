#include <gtest/gtest.h>

#include <cmath>

#include "qpb/errors.hpp"
#include "qpb/states.hpp"
#include "qpb/time_ladder.hpp"
#include "qpb/uncertainty.hpp"

using namespace qpb;

namespace {

UniformGrid line(double hbar = 1.0) {
  return make_uniform_grid(1, 256, 8.0, hbar);
}

double ctx_double(const CheckReport& r, const char* key) {
  return std::get<double>(r.context.at(key));
}

}  // namespace

TEST(Expectation, PositionAndMomentumMeans) {
  const UniformGrid g = line();
  EXPECT_NEAR(std::abs(expectation(position_operator(g), gaussian_state(g, Representation::position, 0.0, 1.0))),
              0.0, 1e-10);
  EXPECT_NEAR(expectation(position_operator(g), gaussian_state(g, Representation::position, 0.5, 1.0)).real(),
              0.5, 1e-8);
  EXPECT_NEAR(std::abs(expectation(momentum_operator(g), hermite_state(g, Representation::position, 2))), 0.0,
              1e-10);
  EXPECT_NEAR(expectation(momentum_operator(g), gaussian_state(g, Representation::position, 0.0, 1.0, 0.8)).real(),
              0.8, 1e-8);
}

TEST(Expectation, Preconditions) {
  const UniformGrid g = line();
  const WaveFunction psi = gaussian_state(g, Representation::position, 0.0, 1.0);
  EXPECT_THROW(expectation(position_operator(g), cplx{2.0, 0.0} * psi), PreconditionError);
  EXPECT_THROW(expectation(position_operator(make_uniform_grid(1, 128, 8.0)), psi), IncompatibleOperandsError);
}

TEST(Moments, GaussianWidths) {
  for (double sigma : {0.7, 1.0, 1.5}) {
    const UniformGrid g = line();
    const WaveFunction psi = gaussian_state(g, Representation::position, 0.0, sigma);
    EXPECT_NEAR(moments(position_operator(g), psi).std_dev, sigma / std::sqrt(2.0), 1e-8);
    EXPECT_NEAR(moments(momentum_operator(g), psi).std_dev, 1.0 / (sigma * std::sqrt(2.0)), 1e-8);
    const WaveFunction moving = gaussian_state(g, Representation::position, 0.0, sigma, 1.3);
    EXPECT_NEAR(moments(position_operator(g), moving).std_dev, sigma / std::sqrt(2.0), 1e-8);
  }
}

TEST(Moments, OperatorTags) {
  const UniformGrid g = make_uniform_grid(3, 16, 8.0);
  EXPECT_NE(operator_tag(position_operator(g, 0)), operator_tag(position_operator(g, 1)));
  EXPECT_NE(operator_tag(position_operator(g, 2)), operator_tag(momentum_operator(g, 2)));
}

TEST(UncertaintyCheck, GaussianSaturates) {
  for (double hbar : {0.5, 1.0, 2.0}) {
    const UniformGrid g = line(hbar);
    const CheckReport r = uncertainty_check(position_operator(g), momentum_operator(g),
                                            gaussian_state(g, Representation::position, 0.0, 1.0));
    EXPECT_TRUE(r.pass);
    EXPECT_NEAR(ctx_double(r, "product"), hbar / 2.0, 1e-8);
  }
}

TEST(UncertaintyCheck, HermiteOne) {
  const UniformGrid g = line();
  const CheckReport r = uncertainty_check(position_operator(g), momentum_operator(g),
                                          hermite_state(g, Representation::position, 1));
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(ctx_double(r, "product"), 1.5, 1e-6);
  EXPECT_TRUE(hermite1_check(g).pass);
}

TEST(UncertaintyCheck, CommutingPairHasZeroBound) {
  const UniformGrid g = line();
  const CheckReport r = uncertainty_check(position_operator(g), position_operator(g),
                                          gaussian_state(g, Representation::position, 0.0, 1.0));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(ctx_double(r, "bound"), 0.0);
}

TEST(VectorUncertainty, IsotropicAndAnisotropic) {
  const UniformGrid g = make_uniform_grid(3, 64, 8.0);
  for (const std::array<double, 3> sigma : {std::array{1.0, 1.0, 1.0}, std::array{0.8, 1.0, 1.25}}) {
    const CheckReport r = vector_uncertainty_check(gaussian_state_3d(g, sigma));
    EXPECT_TRUE(r.pass);
    EXPECT_NEAR(ctx_double(r, "product"), 1.5, 1e-6);
  }
  EXPECT_THROW(vector_uncertainty_check(gaussian_state(line(), Representation::position, 0.0, 1.0)),
               ConfigurationError);
}

TEST(RandomStates, BoundHolds) {
  const CheckReport r = random_states_check(line(), 7, 200);
  EXPECT_TRUE(r.pass);
  EXPECT_GE(ctx_double(r, "min_product"), 0.5 - 1e-8);
  EXPECT_TRUE(gaussian_saturation_check(line(), 0.9).pass);
}

TEST(EnergyTime, LadderRepresentation) {
  for (double omega : {0.5, 1.0, 3.0}) {
    const CheckReport r = energy_time_check(build_ladder(64, omega, 0.5), 4, 40);
    EXPECT_TRUE(r.pass) << omega;
    EXPECT_NEAR(ctx_double(r, "ground_state_product"), 0.25, 1e-10);
  }
}
