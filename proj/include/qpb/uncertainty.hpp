#pragma once

#include <cstdint>
#include <string>

#include "qpb/operator_engine.hpp"
#include "qpb/states.hpp"
#include "qpb/time_ladder.hpp"

namespace qpb {

struct Moments {
  double mean = 0.0;
  double second_moment = 0.0;
  double std_dev = 0.0;
  std::string operator_tag;
  // |Im <psi|A psi>|, zero for an exactly Hermitian discretization.
  double imaginary_residue = 0.0;
};

// Largest |norm - 1| accepted as a normalized state.
inline constexpr double kNormalizationTolerance = 1e-9;

std::string operator_tag(const GridOperator& op);

/// <psi|A psi>. Throws PreconditionError for a non-normalized state and
/// IncompatibleOperandsError when the operator lives on another grid.
cplx expectation(const GridOperator& op, const WaveFunction& psi);

/// Mean, second moment <A psi|A psi> and standard deviation.
Moments moments(const GridOperator& op, const WaveFunction& psi);

/// Bound check: residual = |<[A,B]>|/2 - Da Db, passing when the product
/// undershoots the bound by no more than `slack`.
CheckReport uncertainty_check(const GridOperator& a, const GridOperator& b, const WaveFunction& psi,
                              double slack = 1e-8);

/// Sum over axes of Dx_i Dp_i against 3 hbar / 2. Throws ConfigurationError
/// for a state that is not three-dimensional.
CheckReport vector_uncertainty_check(const WaveFunction& psi3d, double slack = 1e-6);

/// |Dx Dp - hbar/2| for a Gaussian of width sigma on `grid`.
CheckReport gaussian_saturation_check(const UniformGrid& grid, double sigma = 1.0,
                                      double tolerance = 1e-8);

/// |Dx Dp - 3 hbar/2| for the first excited Hermite function.
CheckReport hermite1_check(const UniformGrid& grid, double tolerance = 1e-6);

/// Largest bound violation over `count` seeded random band-limited states.
CheckReport random_states_check(const UniformGrid& grid, std::uint64_t seed, unsigned count = 500,
                                double slack = 1e-8);

/// DE Dt against hbar/2 in the ladder representation for the ground state and
/// `count` seeded random states supported on the lower half of the basis.
CheckReport energy_time_check(const LadderSystem& sys, std::uint64_t seed, unsigned count = 100,
                              double slack = 1e-8);

}  // namespace qpb
