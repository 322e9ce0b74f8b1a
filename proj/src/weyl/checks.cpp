#include "qpb/weyl/checks.hpp"

#include <algorithm>

#include "qpb/weyl/matrix_realize.hpp"

namespace qpb::weyl {
namespace {

const OperatorPoly kX = OperatorPoly::letter('X');
const OperatorPoly kP = OperatorPoly::letter('P');

OperatorPoly i_hbar() {
  return OperatorPoly::scalar(HbarPoly::i_hbar());
}

CheckReport exact(const std::string& id, std::int64_t failures, std::int64_t cases, Context ctx = {}) {
  ctx["cases"] = cases;
  ctx["failures"] = failures;
  ctx["arithmetic"] = std::string("exact");
  return CheckReport::evaluate(id, static_cast<double>(failures), 0.0, std::move(ctx));
}

mpq_class small_rational(SeededRng& rng) {
  const long num = static_cast<long>(rng.below(11)) - 5;
  const unsigned long den = 1 + rng.below(4);
  return mpq_class(num, den);
}

}  // namespace

OperatorPoly random_poly(SeededRng& rng, unsigned max_degree, Register reg) {
  const char letters[2] = {first_letter(reg), second_letter(reg)};
  OperatorPoly out;
  const auto n_terms = 1 + rng.below(4);
  for (std::uint64_t t = 0; t < n_terms; ++t) {
    const auto len = rng.below(max_degree + 1);
    std::string w;
    for (std::uint64_t k = 0; k < len; ++k) w += letters[rng.below(2)];
    GaussRational c(small_rational(rng), small_rational(rng));
    if (c.is_zero()) c = GaussRational(1);
    out.add_term(Word(w), HbarPoly(c, static_cast<unsigned>(rng.below(3))));
  }
  return out;
}

CheckReport check_xp_commutator() {
  const OperatorPoly c = commutator_poly(kX, kP);
  const bool ok = c.structurally_equal(i_hbar());
  return exact("weyl_xp_commutator", ok ? 0 : 1, 1, {{"normal_form", to_string(c)}});
}

CheckReport check_ht_commutator() {
  const OperatorPoly c = commutator_poly(OperatorPoly::letter('H'), OperatorPoly::letter('T'));
  const bool ok = c.structurally_equal(i_hbar());
  return exact("weyl_ht_commutator", ok ? 0 : 1, 1, {{"normal_form", to_string(c)}});
}

CheckReport check_symmetrize_xp() {
  const OperatorPoly s = normal_order(weyl_symmetrize(Word("XP")));
  const OperatorPoly expected =
      kX * kP - OperatorPoly::scalar(HbarPoly(GaussRational(0, mpq_class(1, 2)), 1));
  const bool ok = s.structurally_equal(expected);
  return exact("weyl_symmetrize_xp", ok ? 0 : 1, 1, {{"normal_form", to_string(s)}});
}

CheckReport check_centrality(unsigned max_order, std::uint64_t seed, unsigned n_random) {
  const OperatorPoly xp = commutator_poly(kX, kP);
  std::int64_t failures = 0, cases = 0;
  for (unsigned n = 0; n <= max_order; ++n) {
    for (unsigned m = 0; n + m <= max_order; ++m) {
      const OperatorPoly q = weyl_symmetrize(Word::power('X', n) * Word::power('P', m));
      failures += commutator_poly(xp, q).is_zero() ? 0 : 1;
      ++cases;
    }
  }
  SeededRng rng(seed);
  for (unsigned k = 0; k < n_random; ++k) {
    failures += commutator_poly(xp, random_poly(rng, 6)).is_zero() ? 0 : 1;
    ++cases;
  }
  return exact("weyl_centrality", failures, cases,
               {{"max_order", static_cast<std::int64_t>(max_order)},
                {"seed", static_cast<std::int64_t>(seed)}});
}

CheckReport check_hermiticity(unsigned max_order) {
  std::int64_t failures = 0, cases = 0;
  for (unsigned n = 0; n <= max_order; ++n) {
    for (unsigned m = 0; n + m <= max_order; ++m) {
      const OperatorPoly s = weyl_symmetrize(Word::power('X', n) * Word::power('P', m));
      failures += normal_order(s).structurally_equal(normal_order(s.adjoint())) ? 0 : 1;
      ++cases;
    }
  }
  return exact("weyl_hermiticity", failures, cases,
               {{"max_order", static_cast<std::int64_t>(max_order)}});
}

CheckReport check_recursion_agreement(unsigned max_length) {
  std::int64_t failures = 0, cases = 0;
  for (unsigned len = 1; len <= max_length; ++len) {
    for (unsigned bits = 0; bits < (1U << len); ++bits) {
      std::string w;
      for (unsigned k = 0; k < len; ++k) w += (bits >> k) & 1U ? 'P' : 'X';
      const bool ok = weyl_symmetrize(Word(w)).structurally_equal(weyl_symmetrize_recursive(Word(w)));
      failures += ok ? 0 : 1;
      ++cases;
    }
  }
  return exact("weyl_recursion_agreement", failures, cases,
               {{"max_length", static_cast<std::int64_t>(max_length)}});
}

CheckReport check_matrix_oracle(unsigned n_polys, std::uint64_t seed, std::size_t n_trunc,
                                double hbar_value) {
  SeededRng rng(seed);
  double worst = 0.0;
  auto gap = [&](const MatrixXcld& d, Eigen::Index b) {
    if (b > 0) {
      worst = std::max(worst, static_cast<double>(d.topLeftCorner(b, b).cwiseAbs().maxCoeff()));
    }
  };
  for (unsigned k = 0; k < n_polys; ++k) {
    const OperatorPoly p = random_poly(rng, 4);
    const MatrixXcld mp = matrix_realize_extended(p, n_trunc, hbar_value);

    const auto b1 = static_cast<Eigen::Index>(protected_block(p, n_trunc));
    const MatrixXcld normal = matrix_realize_extended(normal_order(p), n_trunc, hbar_value);
    gap(normal - mp, b1);

    const OperatorPoly c = commutator_poly(p, kX);
    const auto b2 = static_cast<Eigen::Index>(protected_block(p * kX, n_trunc));
    const MatrixXcld left = matrix_realize_extended(p * kX, n_trunc, hbar_value);
    const MatrixXcld right = matrix_realize_extended(kX * p, n_trunc, hbar_value);
    const MatrixXcld direct = left - right;
    const MatrixXcld symbolic = matrix_realize_extended(c, n_trunc, hbar_value);
    gap(symbolic - direct, b2);
  }
  return CheckReport::evaluate("weyl_matrix_oracle", worst, 1e-10,
                               {{"n_polys", static_cast<std::int64_t>(n_polys)},
                                {"n_trunc", static_cast<std::int64_t>(n_trunc)},
                                {"hbar", hbar_value},
                                {"seed", static_cast<std::int64_t>(seed)},
                                {"block_policy", std::string("n_trunc - degree")}});
}

}  // namespace qpb::weyl
