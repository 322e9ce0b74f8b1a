#include <gtest/gtest.h>

#include <complex>

#include "qpb/errors.hpp"
#include "qpb/weyl.hpp"

using namespace qpb;
using namespace qpb::weyl;

namespace {

const HbarPoly kIHbar = HbarPoly::i_hbar();

OperatorPoly word(const char* letters, HbarPoly c = HbarPoly(1)) {
  return OperatorPoly(Word(letters), std::move(c));
}

OperatorPoly poly(const char* text) {
  return evaluate(*parse(text));
}

HbarPoly rational(long num, long den = 1) {
  return HbarPoly(GaussRational(mpq_class(num, den)));
}

}  // namespace

TEST(NormalOrder, Examples) {
  EXPECT_TRUE(normal_order(word("PX")).structurally_equal(word("XP") - OperatorPoly::scalar(kIHbar)));
  EXPECT_TRUE(normal_order(word("XP")).structurally_equal(word("XP")));
  const OperatorPoly ppx = word("XPP") - word("P", HbarPoly(GaussRational(0, 2), 1));
  EXPECT_TRUE(normal_order(word("PPX")).structurally_equal(ppx));
  EXPECT_EQ(to_string(normal_order(word("PPX"))), "-2*i*hbar P + X P^2");
}

TEST(NormalOrder, Idempotent) {
  SeededRng rng(9);
  for (int k = 0; k < 100; ++k) {
    const OperatorPoly n = normal_order(random_poly(rng, 5));
    EXPECT_TRUE(normal_order(n).structurally_equal(n));
  }
}

TEST(NormalOrder, TimeRegister) {
  EXPECT_TRUE(commutator_poly(word("H"), word("T")).structurally_equal(OperatorPoly::scalar(kIHbar)));
}

TEST(Symmetrize, SmallWords) {
  EXPECT_TRUE(weyl_symmetrize(Word("X")).structurally_equal(word("X")));
  const OperatorPoly half = rational(1, 2) * (word("XP") + word("PX"));
  EXPECT_TRUE(weyl_symmetrize(Word("XP")).structurally_equal(half));
  const OperatorPoly expect = word("XP") - OperatorPoly::scalar(HbarPoly(GaussRational(0, mpq_class(1, 2)), 1));
  EXPECT_TRUE(normal_order(weyl_symmetrize(Word("XP"))).structurally_equal(expect));
  const OperatorPoly third = rational(1, 3) * (word("XXP") + word("XPX") + word("PXX"));
  EXPECT_TRUE(weyl_symmetrize(Word("XXP")).structurally_equal(third));
}

TEST(Symmetrize, OrderOfLettersIrrelevant) {
  EXPECT_TRUE(weyl_symmetrize(Word("PXXP")).structurally_equal(weyl_symmetrize(Word("XXPP"))));
}

TEST(Symmetrize, RecursionAgrees) {
  for (const char* w : {"XP", "XXP", "XPP", "XXPP", "XXXPP", "PXPXP"}) {
    EXPECT_EQ(weyl_symmetrize(Word(w)), weyl_symmetrize_recursive(Word(w))) << w;
  }
}

TEST(Symmetrize, ResourceBound) {
  EXPECT_THROW(weyl_symmetrize(Word(std::string(11, 'X'))), ResourceBoundError);
  EXPECT_THROW(weyl_symmetrize(Word("XXP"), 2), ResourceBoundError);
  EXPECT_NO_THROW(weyl_symmetrize(Word(std::string(10, 'X'))));
}

TEST(Commutator, Examples) {
  EXPECT_TRUE(commutator_poly(word("X"), word("P")).structurally_equal(OperatorPoly::scalar(kIHbar)));
  EXPECT_TRUE(commutator_poly(poly("[X,P]"), word("X")).is_zero());
  EXPECT_TRUE(commutator_poly(poly("[X,P]"), poly("S{X^2 P}")).is_zero());
  EXPECT_TRUE(normal_order(poly("[[X,P], S{X^2 P}]")).is_zero());
}

TEST(Commutator, XWithPowerOfP) {
  // [X, P^m] = i hbar m P^(m-1)
  for (unsigned m = 1; m <= 6; ++m) {
    const OperatorPoly c = commutator_poly(word("X"), OperatorPoly(Word::power('P', m)));
    const OperatorPoly expect(Word::power('P', m - 1), HbarPoly(GaussRational(0, static_cast<long>(m)), 1));
    EXPECT_TRUE(c.structurally_equal(expect)) << m;
  }
}

TEST(Registers, MixingRejected) {
  EXPECT_THROW(Word("XH"), IncompatibleOperandsError);
  EXPECT_THROW(word("X") * word("T"), IncompatibleOperandsError);
}

TEST(Adjoint, SymmetrizedWordsAreHermitian) {
  for (const char* w : {"XP", "XXP", "XPPP"}) {
    const OperatorPoly s = weyl_symmetrize(Word(w));
    EXPECT_EQ(s.adjoint(), s) << w;
  }
  EXPECT_NE(word("XP").adjoint(), word("XP"));
}

TEST(Taylor, Tables) {
  using Table = std::map<std::pair<unsigned, unsigned>, HbarPoly>;
  EXPECT_TRUE(taylor_operator(Table{{{1, 1}, rational(1)}}, 4).structurally_equal(weyl_symmetrize(Word("XP"))));
  EXPECT_TRUE(taylor_operator(Table{}, 4).is_zero());
  const Table squares{{{2, 0}, rational(2)}, {{0, 2}, rational(2)}};
  EXPECT_TRUE(taylor_operator(squares, 4).structurally_equal(word("XX") + word("PP")));
  // Entries above the order cap are ignored.
  EXPECT_TRUE(taylor_operator(Table{{{3, 2}, rational(1)}}, 4).is_zero());
  EXPECT_THROW(taylor_operator(Table{{{8, 4}, rational(1)}}, 20), ResourceBoundError);
  EXPECT_TRUE(taylor_operator(Table{{{1, 1}, rational(1)}}, 4, Register::ht)
                  .structurally_equal(weyl_symmetrize(Word("HT"))));
}

TEST(MatrixRealize, ScalarIsIdentity) {
  const Eigen::MatrixXcd m = matrix_realize(OperatorPoly::scalar(kIHbar), 16, 1.0);
  EXPECT_LT((m - std::complex<double>(0, 1) * Eigen::MatrixXcd::Identity(16, 16)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(MatrixRealize, NormalOrderMatchesProduct) {
  const std::size_t n = 32;
  const Eigen::MatrixXcd x = truncated_position(n, 0.7), p = truncated_momentum(n, 0.7);
  const Eigen::MatrixXcd direct = p * x;
  const Eigen::MatrixXcd symbolic = matrix_realize(normal_order(word("PX")), n, 0.7);
  const auto b = static_cast<Eigen::Index>(protected_block(word("PX"), n));
  EXPECT_EQ(b, 30);
  EXPECT_LT((direct - symbolic).topLeftCorner(b, b).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(MatrixRealize, CanonicalCommutatorAndCornerDefect) {
  const std::size_t n = 16;
  const double hbar = 0.5;
  const Eigen::MatrixXcd x = truncated_position(n, hbar), p = truncated_momentum(n, hbar);
  const Eigen::MatrixXcd c = x * p - p * x;
  const Eigen::MatrixXcd symbolic = matrix_realize(commutator_poly(word("X"), word("P")), n, hbar);
  const Eigen::Index b = n - 1;
  EXPECT_LT((c - symbolic).topLeftCorner(b, b).cwiseAbs().maxCoeff(), 1e-12);
  // The truncated pair breaks the identity in the last basis state.
  EXPECT_NEAR(std::abs(c(b, b) - std::complex<double>(0, hbar)), hbar * static_cast<double>(n), 1e-12);
}

TEST(MatrixRealize, RejectsTinyTruncation) {
  EXPECT_THROW(matrix_realize(word("X"), 3, 1.0), ConfigurationError);
}

TEST(WeylChecks, AllExactChecksPass) {
  for (const CheckReport& r : {check_xp_commutator(), check_ht_commutator(), check_symmetrize_xp(),
                               check_centrality(8, 1), check_hermiticity(8), check_recursion_agreement(6)}) {
    EXPECT_TRUE(r.pass) << r.check_id;
    EXPECT_EQ(r.residual, 0.0) << r.check_id;
  }
}

TEST(WeylChecks, MatrixOracle) {
  const CheckReport r = check_matrix_oracle(50, 3, 48, 1.0);
  EXPECT_TRUE(r.pass) << r.residual;
}

TEST(Evaluate, PowersAndScalars) {
  EXPECT_EQ(poly("X^3"), word("XXX"));
  EXPECT_EQ(poly("(X + P)^2"), word("XX") + word("XP") + word("PX") + word("PP"));
  EXPECT_EQ(poly("1/2 X"), rational(1, 2) * word("X"));
  EXPECT_EQ(poly("-X + X"), OperatorPoly());
}
