#ifndef HVBO_PARETO_HPP
#define HVBO_PARETO_HPP

#include "hvbo/types.hpp"

namespace hvbo {

/// Pareto dominance, maximization: a >= b in every coordinate and a > b in
/// at least one. Exact floating-point comparisons, no epsilon.
bool dominates(const ObjVec& a, const ObjVec& b);

/// Non-dominated subset of ys, duplicates removed. Throws on an empty list
/// or mixed dimensions.
ParetoApprox nd_filter(const std::vector<ObjVec>& ys);

/// Lebesgue measure of the region dominated by p and bounded below by r.
/// d=2 uses the staircase, d=3 a plane sweep, d>=4 the box decomposition of
/// the non-dominated space.
double hypervolume(const ParetoApprox& p, const RefPoint& r);

/// Hypervolume improvement HV(p u {y}, r) - HV(p, r); zero when y is
/// dominated, never negative.
double hvi(const ObjVec& y, const ParetoApprox& p, const RefPoint& r);

namespace detail {
/// Dominated area of the 2-D staircase above r, points sorted ascending by
/// the first coordinate (second strictly descending).
double staircase_area(const std::vector<ObjVec>& sorted_pts, double r1, double r2);
void check_ref(const ParetoApprox& p, const RefPoint& r);
}  // namespace detail

}  // namespace hvbo

#endif  // HVBO_PARETO_HPP
