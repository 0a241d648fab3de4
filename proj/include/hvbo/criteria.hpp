#ifndef HVBO_CRITERIA_HPP
#define HVBO_CRITERIA_HPP

#include <cstdint>

#include "hvbo/types.hpp"

namespace hvbo {

/// Exact EHVI over an arbitrary box partition of the non-dominated space.
/// Per box the integral expands into 2^(d-1) products selected by a binary
/// string: bit 0 picks the partial-expectation difference
/// psi_inf(l,l) - psi_inf(l,u), bit 1 the constant tail vartheta(l,u); the
/// last coordinate always contributes psi_inf(l_d, l_d). Tail terms with
/// u = +inf contribute exactly 0 and are skipped.
double ehvi_over(const BoxPartition& part, const GaussPred& pred);

/// PoI over a box partition: sum of per-box normal rectangle masses.
double poi_over(const BoxPartition& part, const GaussPred& pred);

double ehvi_2d(const GaussPred& pred, const ParetoApprox& p, const RefPoint& r);
double ehvi_3d(const GaussPred& pred, const ParetoApprox& p, const RefPoint& r);
double ehvi_dd(const GaussPred& pred, const ParetoApprox& p, const RefPoint& r);

/// Routes by dimension (2 -> ehvi_2d, 3 -> ehvi_3d, else ehvi_dd).
double ehvi(const GaussPred& pred, const ParetoApprox& p, const RefPoint& r);

/// Probability that a prediction lands in the non-dominated space of p.
/// Reference-free: the partition is taken w.r.t. (-inf)^d.
double poi(const GaussPred& pred, const ParetoApprox& p);

/// Monte Carlo EHVI: averages hvi(sample, p, r) over independent normal
/// draws. Deterministic for a fixed seed; single sample stream.
McEstimate mc_ehvi(const GaussPred& pred, const ParetoApprox& p, const RefPoint& r,
                   std::uint64_t samples, std::uint64_t seed);

/// Monte Carlo PoI: averages the non-dominance indicator over draws.
McEstimate mc_poi(const GaussPred& pred, const ParetoApprox& p,
                  std::uint64_t samples, std::uint64_t seed);

}  // namespace hvbo

#endif  // HVBO_CRITERIA_HPP
