#ifndef HVBO_GAUSS_HPP
#define HVBO_GAUSS_HPP

#include "hvbo/types.hpp"

namespace hvbo {

/// Standard normal density.
double std_phi(double s);

/// Standard normal CDF; exact 0 at -inf and 1 at +inf.
double std_cdf(double s);

/// Upper tail 1 - Phi(s), computed via erfc to avoid cancellation.
double std_cdf_bar(double s);

/// Gaussian partial expectation over the upper tail,
///   psi_inf(a, b, mu, sigma) = int_b^inf (z - a) xi_{mu,sigma}(z) dz
///                            = sigma phi(t) + (mu - a) (1 - Phi(t)),  t = (b - mu)/sigma.
/// b = +inf gives exactly 0. Requires sigma > 0.
double psi_inf(double a, double b, const Gauss1D& g);

/// Constant-improvement tail term (u - l) (1 - Phi((u - mu)/sigma)).
/// Requires l < u with both finite and sigma > 0.
double vartheta(double l, double u, const Gauss1D& g);

/// One-dimensional improvement of a slice: min(u, y) - l.
/// Defined on the improving range only (y >= l); u may be +inf.
double ell(double u, double y, double l);

/// Neumaier compensated accumulator; box sums can run to 1e4+ terms.
class KahanSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  [[nodiscard]] double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace hvbo

#endif  // HVBO_GAUSS_HPP
