#include <gtest/gtest.h>

#include <cmath>

#include "qpb/errors.hpp"
#include "qpb/time_ladder.hpp"

using namespace qpb;

TEST(BuildLadder, LoweringEntries) {
  const LadderSystem s = build_ladder(4, 1.0, 1.0);
  for (int m = 1; m < 4; ++m) {
    EXPECT_NEAR(std::abs(s.b(m - 1, m) - std::sqrt(static_cast<double>(m))), 0.0, 1e-15);
  }
  EXPECT_EQ((s.b.adjoint() - s.b_dagger).cwiseAbs().maxCoeff(), 0.0);
}

TEST(BuildLadder, KDiagonal) {
  const LadderSystem s = build_ladder(16, 2.0, 1.0);
  for (Eigen::Index m = 0; m + 1 < 16; ++m) EXPECT_NEAR(std::abs(s.K(m, m) - (m + 0.5)), 0.0, 1e-12);
}

TEST(BuildLadder, ExactHermiticity) {
  const LadderSystem s = build_ladder(32, 3.0, 0.5);
  EXPECT_EQ(s.H, s.H.adjoint());
  EXPECT_EQ(s.T, s.T.adjoint());
  EXPECT_EQ(s.K, s.K.adjoint());
}

TEST(BuildLadder, ScalingCovariance) {
  const LadderSystem unit = build_ladder(16, 1.0, 0.5);
  const LadderSystem scaled = build_ladder(16, 3.0, 0.5);
  EXPECT_LT((scaled.H - 3.0 * unit.H).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT((scaled.T - unit.T / 3.0).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(BuildLadder, InvalidParameters) {
  EXPECT_THROW(build_ladder(1, 1.0, 1.0), ConfigurationError);
  EXPECT_THROW(build_ladder(16, 0.0, 1.0), ConfigurationError);
  EXPECT_THROW(build_ladder(16, 1.0, -1.0), ConfigurationError);
}

TEST(LadderAlgebra, PassesAndRecordsCornerDefect) {
  for (std::size_t n : {4u, 16u, 64u}) {
    const CheckReport r = check_ladder_algebra(build_ladder(n, 1.0, 1.0));
    EXPECT_TRUE(r.pass) << n;
    EXPECT_LE(r.residual, 1e-12);
    EXPECT_NEAR(std::get<double>(r.context.at("corner_defect")), -static_cast<double>(n - 1), 1e-12);
  }
}

TEST(LadderAlgebra, SubstitutionRoundTrip) {
  for (double omega : {0.5, 1.0, 3.0}) {
    for (double hbar : {0.5, 1.0}) {
      EXPECT_TRUE(check_b5_substitution(build_ladder(64, omega, hbar)).pass) << omega << " " << hbar;
    }
  }
}

TEST(HtCommutator, ProtectedBlock) {
  EXPECT_TRUE(ht_commutator_residual(build_ladder(16, 1.0, 1.0)).pass);
  const LadderSystem s = build_ladder(16, 3.0, 0.5);
  EXPECT_TRUE(ht_commutator_residual(s).pass);
  const Eigen::MatrixXcd c = s.H * s.T - s.T * s.H;
  EXPECT_NEAR(std::abs(c(3, 3) - std::complex<double>(0.0, 0.5)), 0.0, 1e-12);
}

TEST(EigenBasis, SortedAndPhaseFixed) {
  const LadderSystem s = build_ladder(32, 1.0, 1.0);
  const EigenBasis e = protected_eigenbasis(s, s.T);
  for (Eigen::Index k = 1; k < e.eigenvalues.size(); ++k) EXPECT_LT(e.eigenvalues(k - 1), e.eigenvalues(k));
  for (Eigen::Index c = 0; c < e.eigenvectors.cols(); ++c) {
    Eigen::Index first = 0;
    while (std::abs(e.eigenvectors(first, c)) < 1e-12) ++first;
    EXPECT_NEAR(e.eigenvectors(first, c).imag(), 0.0, 1e-14);
    EXPECT_GT(e.eigenvectors(first, c).real(), 0.0);
  }
}

TEST(EigenRepresentations, UnitNormAndRange) {
  const LadderSystem s = build_ladder(64, 1.0, 1.0);
  const EigenRepresentations r = eigen_representations(s, 0);
  EXPECT_NEAR(r.phi.norm(), 1.0, 1e-12);
  EXPECT_NEAR(r.chi.norm(), 1.0, 1e-12);
  for (std::size_t m = 0; m <= 4; ++m) EXPECT_TRUE(eigenstate_representations(s, m).pass) << m;
  EXPECT_THROW(eigen_representations(s, 63), RangeError);
}
