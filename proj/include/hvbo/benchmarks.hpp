#ifndef HVBO_BENCHMARKS_HPP
#define HVBO_BENCHMARKS_HPP

#include <cstdint>

#include "hvbo/mobgo.hpp"
#include "hvbo/types.hpp"

namespace hvbo {

/// Standard DTLZ test problem (ids 1-5 and 7), minimization form negated
/// into the maximization convention used everywhere else. Decision space is
/// [0,1]^m with m >= d.
Problem dtlz(int id, int m, int d);

/// Random mutually non-dominated front on a spherical shell.
struct FrontSpec {
  enum class Kind { concave_spherical, convex_spherical };
  Kind kind = Kind::concave_spherical;
  int d = 2;
  int n = 10;
  std::uint64_t seed = 1;
  double radius = 10.0;
};

ParetoApprox random_front(const FrontSpec& spec);

}  // namespace hvbo

#endif  // HVBO_BENCHMARKS_HPP
