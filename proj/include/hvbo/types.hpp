#ifndef HVBO_TYPES_HPP
#define HVBO_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace hvbo {

/// Objective vector, maximization convention throughout.
using ObjVec = std::vector<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

bool dominates(const ObjVec& a, const ObjVec& b);

/// Archive of mutually non-dominated objective vectors.
///
/// The constructor validates pairwise non-dominance and rejects duplicates;
/// use nd_filter() to build one from an arbitrary point set.
class ParetoApprox {
 public:
  explicit ParetoApprox(int dim) : dim_(dim) {
    if (dim < 2) throw std::invalid_argument("ParetoApprox: dim must be >= 2");
  }

  ParetoApprox(std::vector<ObjVec> points, int dim);

  [[nodiscard]] const std::vector<ObjVec>& points() const { return points_; }
  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] std::size_t size() const { return points_.size(); }
  [[nodiscard]] bool empty() const { return points_.empty(); }

 private:
  std::vector<ObjVec> points_;
  int dim_;
};

/// Lower corner bounding the hypervolume region. May hold -inf entries
/// (probability-of-improvement convention).
struct RefPoint {
  ObjVec coords;

  [[nodiscard]] int dim() const { return static_cast<int>(coords.size()); }

  static RefPoint neg_infinity(int dim) {
    return RefPoint{ObjVec(static_cast<std::size_t>(dim), -kInf)};
  }
};

/// Throws unless every archive point strictly exceeds r in every coordinate.
/// Points exactly on the reference boundary are rejected.
RefPoint make_ref_point(ObjVec coords, const ParetoApprox& front);

/// One axis-parallel integration box, lower bound exclusive, upper bound
/// inclusive. Upper bounds may be +inf; the last coordinate always is for
/// boxes produced by the partitioners.
struct Hyperbox {
  ObjVec lower;
  ObjVec upper;

  [[nodiscard]] bool contains(const ObjVec& y) const {
    for (std::size_t k = 0; k < lower.size(); ++k) {
      if (!(lower[k] < y[k] && y[k] <= upper[k])) return false;
    }
    return true;
  }

  /// Volume of the box intersected with [lower, ceiling] per coordinate.
  [[nodiscard]] double clipped_volume(const ObjVec& ceiling) const {
    double v = 1.0;
    for (std::size_t k = 0; k < lower.size(); ++k) {
      const double hi = upper[k] < ceiling[k] ? upper[k] : ceiling[k];
      const double w = hi - lower[k];
      if (w <= 0.0) return 0.0;
      v *= w;
    }
    return v;
  }
};

/// Disjoint box cover of the non-dominated space of a front w.r.t. a
/// reference point.
struct BoxPartition {
  std::vector<Hyperbox> boxes;
  int dim = 0;
  std::size_t source_front_size = 0;
};

/// One-dimensional Gaussian predictive marginal.
struct Gauss1D {
  double mu;
  double sigma;
};

/// Independent multivariate normal prediction, one (mu, sigma) per objective.
struct GaussPred {
  ObjVec mu;
  ObjVec sigma;

  [[nodiscard]] int dim() const { return static_cast<int>(mu.size()); }
};

/// Monte Carlo estimate with its standard error.
struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
};

}  // namespace hvbo

#endif  // HVBO_TYPES_HPP
