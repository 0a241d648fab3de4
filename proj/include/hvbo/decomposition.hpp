#ifndef HVBO_DECOMPOSITION_HPP
#define HVBO_DECOMPOSITION_HPP

#include "hvbo/types.hpp"

namespace hvbo {

/// Minimal corner points of the dominated-region boundary: the points whose
/// open upper orthants tile the non-dominated space of p w.r.t. r.
struct LocalLowerBounds {
  std::vector<ObjVec> points;
  int dim = 0;
};

/// d=2: the n+1 staircase slices, in ascending-y1 sweep order.
BoxPartition partition_2d(const ParetoApprox& p, const RefPoint& r);

/// d=3: plane sweep in descending y3 over a balanced tree of projections.
/// Exactly 2n+1 slices for points in general position; with ties 2n+1 is an
/// upper bound and degenerate slices are dropped.
BoxPartition partition_3d(const ParetoApprox& p, const RefPoint& r);

/// Any d >= 2 (the mandatory path for d >= 4): local lower bounds with
/// per-coordinate defining points, one box per bound corner. Box order is
/// unspecified.
BoxPartition partition_dd(const ParetoApprox& p, const RefPoint& r);

/// Incremental computation of the local lower bound set of p w.r.t. r.
LocalLowerBounds local_lower_bounds(const ParetoApprox& p, const RefPoint& r);

/// Routes to the dedicated partitioner for d = 2, 3 and to partition_dd
/// otherwise.
BoxPartition partition_auto(const ParetoApprox& p, const RefPoint& r);

}  // namespace hvbo

#endif  // HVBO_DECOMPOSITION_HPP
