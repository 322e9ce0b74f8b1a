#pragma once

#include <cstdint>

#include "qpb/report.hpp"
#include "qpb/states.hpp"
#include "qpb/weyl/operator_poly.hpp"

namespace qpb::weyl {

// Exact checks report the number of failing identities as the residual, so a
// pass is residual 0 against tolerance 0.

/// normal_order([X, P]) == i hbar.
CheckReport check_xp_commutator();

/// normal_order([H, T]) == i hbar in the energy/time register.
CheckReport check_ht_commutator();

/// S{XP} == XP - (i hbar / 2) after normal ordering.
CheckReport check_symmetrize_xp();

/// [[X, P], q] == 0 for q = S{X^n P^m}, n + m <= max_order, and for
/// `n_random` seeded random polys of degree <= 6.
CheckReport check_centrality(unsigned max_order, std::uint64_t seed, unsigned n_random = 50);

/// S{X^n P^m} equals its formal adjoint, n + m <= max_order.
CheckReport check_hermiticity(unsigned max_order);

/// Closed-form symmetrization agrees term by term with the recursion for
/// every X/P word of length <= max_length.
CheckReport check_recursion_agreement(unsigned max_length);

/// For `n_polys` seeded random polys p of degree <= 4, compares the matrix of
/// normal_order(p) with the direct product matrix of p, and the matrix of
/// commutator_poly(p, X) with the commutator of matrices, each on its
/// protected block. Residual is the largest entrywise gap.
CheckReport check_matrix_oracle(unsigned n_polys, std::uint64_t seed, std::size_t n_trunc,
                                double hbar_value);

/// Random poly with up to four terms, words of length <= max_degree and small
/// Gaussian-rational coefficients times hbar^k, k <= 2.
OperatorPoly random_poly(SeededRng& rng, unsigned max_degree, Register reg = Register::xp);

}  // namespace qpb::weyl
