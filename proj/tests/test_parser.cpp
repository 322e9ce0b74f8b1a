#include <gtest/gtest.h>

#include "qpb/errors.hpp"
#include "qpb/states.hpp"
#include "qpb/weyl/parser.hpp"

using namespace qpb;
using namespace qpb::weyl;

namespace {

// Random well-formed trees. Sums carry two or more terms (or a single negated
// one) and products two or more factors, the shapes the parser produces.
class AstGenerator {
 public:
  explicit AstGenerator(std::uint64_t seed) : rng_(seed) {}

  AstPtr expr(int depth) {
    if (depth <= 0) return leaf();
    switch (rng_.below(6)) {
      case 0: {
        std::vector<std::pair<bool, AstPtr>> terms;
        const auto n = 1 + rng_.below(3);
        for (std::uint64_t k = 0; k < n; ++k) terms.emplace_back(rng_.below(2) == 0, expr(depth - 1));
        if (n == 1) terms.front().first = true;
        return make_sum(std::move(terms));
      }
      case 1: {
        std::vector<AstPtr> factors;
        const auto n = 2 + rng_.below(2);
        for (std::uint64_t k = 0; k < n; ++k) factors.push_back(expr(depth - 1));
        return make_product(std::move(factors));
      }
      case 2: return make_power(expr(depth - 1), 1 + static_cast<unsigned>(rng_.below(4)));
      case 3: return make_commutator(expr(depth - 1), expr(depth - 1));
      case 4: return make_weyl(expr(depth - 1));
      default: return leaf();
    }
  }

 private:
  AstPtr leaf() {
    if (rng_.below(3) == 0) {
      const long num = 1 + static_cast<long>(rng_.below(5));
      const long den = 1 + static_cast<long>(rng_.below(3));
      return make_scalar(mpq_class(num, den), rng_.below(2) == 0, static_cast<unsigned>(rng_.below(3)));
    }
    static constexpr char letters[] = {'X', 'P'};
    return make_symbol(letters[rng_.below(2)]);
  }

  SeededRng rng_;
};

}  // namespace

TEST(Parse, Commutator) {
  EXPECT_EQ(*parse("[X,P]"), *make_commutator(make_symbol('X'), make_symbol('P')));
}

TEST(Parse, WeylForm) {
  const AstPtr expect = make_weyl(make_product({make_power(make_symbol('X'), 2), make_symbol('P')}));
  EXPECT_EQ(*parse("S{X^2 P}"), *expect);
}

TEST(Parse, SumWithScalars) {
  const AstPtr got = parse("X P \xe2\x88\x92 P X \xe2\x88\x92 i*hbar");
  const AstPtr expect = make_sum({{false, make_product({make_symbol('X'), make_symbol('P')})},
                                  {true, make_product({make_symbol('P'), make_symbol('X')})},
                                  {true, make_scalar(1, true, 1)}});
  EXPECT_EQ(*got, *expect);
}

TEST(Parse, ScalarForms) {
  EXPECT_EQ(*parse("1/2"), *make_scalar(mpq_class(1, 2)));
  EXPECT_EQ(*parse("3*i*hbar^2"), *make_scalar(3, true, 2));
  EXPECT_EQ(*parse("hbar"), *make_scalar(1, false, 1));
  EXPECT_EQ(*parse("i"), *make_scalar(1, true, 0));
}

TEST(Parse, WhitespaceInsensitive) {
  EXPECT_EQ(*parse("  [ X ,P ]"), *parse("[X,P]"));
  EXPECT_EQ(*parse("S{ X^2  P }"), *parse("S{X^2 P}"));
}

TEST(Parse, ErrorPositions) {
  struct Case {
    const char* text;
    std::size_t position;
  };
  for (const Case c : {Case{"X +", 3}, Case{"[X,P", 4}, Case{"foo", 0}, Case{"X^", 2},
                       Case{"1/0", 2}, Case{"X )", 2}, Case{"S{X", 3}, Case{"X ^ Y", 4}}) {
    try {
      parse(c.text);
      ADD_FAILURE() << "no error for " << c.text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.position(), c.position) << c.text << ": " << e.what();
      EXPECT_FALSE(e.expected().empty()) << c.text;
    }
  }
}

TEST(Parse, RegisterMixingRejected) {
  try {
    parse("X H");
    ADD_FAILURE() << "mixed registers accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  // Trees built by hand are checked when evaluated.
  EXPECT_THROW(evaluate(*make_product({make_symbol('X'), make_symbol('H')})), IncompatibleOperandsError);
}

TEST(Print, CanonicalExamples) {
  EXPECT_EQ(print(*parse("[X,P]")), "[X, P]");
  EXPECT_EQ(print(*parse("S{X^2 P}")), "S{X^2 P}");
  EXPECT_EQ(print(*parse("X P - P X - i*hbar")), "X P - P X - i*hbar");
}

TEST(Print, RoundTripGeneratedTrees) {
  AstGenerator gen(2024);
  for (int k = 0; k < 2000; ++k) {
    const AstPtr a = gen.expr(1 + k % 4);
    const std::string text = print(*a);
    AstPtr back;
    ASSERT_NO_THROW(back = parse(text)) << text;
    ASSERT_EQ(*back, *a) << text << " reprinted as " << print(*back);
    ASSERT_EQ(print(*back), text);
  }
}
