#include "hvbo/gauss.hpp"

#include <cmath>
#include <stdexcept>

namespace hvbo {

namespace {
constexpr double kInvSqrt2Pi = 0.39894228040143267793994605993438;
constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;
}  // namespace

double std_phi(double s) {
  if (std::isinf(s)) return 0.0;
  return kInvSqrt2Pi * std::exp(-0.5 * s * s);
}

double std_cdf(double s) {
  if (s == kInf) return 1.0;
  if (s == -kInf) return 0.0;
  return 0.5 * std::erfc(-s * kInvSqrt2);
}

double std_cdf_bar(double s) {
  if (s == kInf) return 0.0;
  if (s == -kInf) return 1.0;
  return 0.5 * std::erfc(s * kInvSqrt2);
}

double psi_inf(double a, double b, const Gauss1D& g) {
  if (!(g.sigma > 0.0)) throw std::invalid_argument("psi_inf: sigma must be > 0");
  if (b == kInf) return 0.0;
  const double t = (b - g.mu) / g.sigma;
  return g.sigma * std_phi(t) + (g.mu - a) * std_cdf_bar(t);
}

double vartheta(double l, double u, const Gauss1D& g) {
  if (!(g.sigma > 0.0)) throw std::invalid_argument("vartheta: sigma must be > 0");
  if (!(l < u)) throw std::invalid_argument("vartheta: requires l < u");
  if (u == kInf) return 0.0;  // (u - l) * (1 - Phi(inf)) in the limit
  return (u - l) * std_cdf_bar((u - g.mu) / g.sigma);
}

double ell(double u, double y, double l) {
  if (y < l) throw std::invalid_argument("ell: y below the improving range");
  if (!(l <= u)) throw std::invalid_argument("ell: requires l <= u");
  return (y < u ? y : u) - l;
}

}  // namespace hvbo
