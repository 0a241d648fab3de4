#include "hvbo/criteria.hpp"

#include <cmath>

#include "hvbo/decomposition.hpp"
#include "hvbo/gauss.hpp"
#include "hvbo/pareto.hpp"
#include "hvbo/rng.hpp"

namespace hvbo {

namespace {

void check_pred(const GaussPred& pred, int dim) {
  if (pred.dim() != dim || static_cast<int>(pred.sigma.size()) != dim) {
    throw std::invalid_argument("GaussPred: dimension mismatch");
  }
  for (double s : pred.sigma) {
    if (s < 0.0 || !std::isfinite(s)) throw std::invalid_argument("GaussPred: sigma must be >= 0 and finite");
  }
}

bool any_sigma_zero(const GaussPred& pred) {
  for (double s : pred.sigma) {
    if (s == 0.0) return true;
  }
  return false;
}

// sigma = 0 in any coordinate routes the whole evaluation to the
// deterministic limit: HVI at mu for EHVI, the dominance indicator for PoI.
double deterministic_ehvi(const GaussPred& pred, const ParetoApprox& p, const RefPoint& r) {
  return hvi(pred.mu, p, r);
}

double deterministic_poi(const GaussPred& pred, const ParetoApprox& p) {
  for (const auto& q : p.points()) {
    if (dominates(q, pred.mu)) return 0.0;
  }
  return 1.0;
}

}  // namespace

double ehvi_over(const BoxPartition& part, const GaussPred& pred) {
  const int d = part.dim;
  check_pred(pred, d);
  KahanSum total;
  std::vector<double> w0(d), w1(d);
  const std::uint32_t patterns = 1u << (d - 1);
  for (const auto& box : part.boxes) {
    for (int k = 0; k < d - 1; ++k) {
      const Gauss1D g{pred.mu[k], pred.sigma[k]};
      const double l = box.lower[k];
      const double u = box.upper[k];
      w0[k] = psi_inf(l, l, g) - psi_inf(l, u, g);
      w1[k] = (u == kInf) ? 0.0 : vartheta(l, u, g);
    }
    const double tail = psi_inf(box.lower[d - 1], box.lower[d - 1], Gauss1D{pred.mu[d - 1], pred.sigma[d - 1]});
    double box_sum = 0.0;
    for (std::uint32_t j = 0; j < patterns; ++j) {
      double prod = tail;
      for (int k = 0; k < d - 1 && prod != 0.0; ++k) {
        prod *= (j >> k & 1u) ? w1[k] : w0[k];
      }
      box_sum += prod;
    }
    total.add(box_sum);
  }
  const double v = total.value();
  return v > 0.0 ? v : 0.0;
}

double poi_over(const BoxPartition& part, const GaussPred& pred) {
  const int d = part.dim;
  check_pred(pred, d);
  KahanSum total;
  for (const auto& box : part.boxes) {
    double prod = 1.0;
    for (int k = 0; k < d && prod != 0.0; ++k) {
      const double lo = std_cdf((box.lower[k] - pred.mu[k]) / pred.sigma[k]);
      const double hi = std_cdf((box.upper[k] - pred.mu[k]) / pred.sigma[k]);
      prod *= hi - lo;
    }
    total.add(prod);
  }
  double v = total.value();
  if (v < 0.0) v = 0.0;
  if (v > 1.0) v = 1.0;
  return v;
}

double ehvi_2d(const GaussPred& pred, const ParetoApprox& p, const RefPoint& r) {
  check_pred(pred, 2);
  if (any_sigma_zero(pred)) return deterministic_ehvi(pred, p, r);
  return ehvi_over(partition_2d(p, r), pred);
}

double ehvi_3d(const GaussPred& pred, const ParetoApprox& p, const RefPoint& r) {
  check_pred(pred, 3);
  if (any_sigma_zero(pred)) return deterministic_ehvi(pred, p, r);
  return ehvi_over(partition_3d(p, r), pred);
}

double ehvi_dd(const GaussPred& pred, const ParetoApprox& p, const RefPoint& r) {
  check_pred(pred, p.dim());
  if (any_sigma_zero(pred)) return deterministic_ehvi(pred, p, r);
  return ehvi_over(partition_dd(p, r), pred);
}

double ehvi(const GaussPred& pred, const ParetoApprox& p, const RefPoint& r) {
  switch (p.dim()) {
    case 2:
      return ehvi_2d(pred, p, r);
    case 3:
      return ehvi_3d(pred, p, r);
    default:
      return ehvi_dd(pred, p, r);
  }
}

double poi(const GaussPred& pred, const ParetoApprox& p) {
  check_pred(pred, p.dim());
  if (any_sigma_zero(pred)) return deterministic_poi(pred, p);
  return poi_over(partition_auto(p, RefPoint::neg_infinity(p.dim())), pred);
}

McEstimate mc_ehvi(const GaussPred& pred, const ParetoApprox& p, const RefPoint& r,
                   std::uint64_t samples, std::uint64_t seed) {
  const int d = p.dim();
  check_pred(pred, d);
  if (samples < 2) throw std::invalid_argument("mc_ehvi: needs at least 2 samples");

  // Per-sample HVI is the summed overlap of [r, sample] with the partition
  // boxes; samples outside [r, inf)^d simply contribute nothing.
  const BoxPartition part = partition_auto(p, r);
  const std::size_t nb = part.boxes.size();
  std::vector<double> lo(nb * d), hi(nb * d);
  for (std::size_t b = 0; b < nb; ++b) {
    for (int k = 0; k < d; ++k) {
      lo[b * d + k] = part.boxes[b].lower[k];
      hi[b * d + k] = part.boxes[b].upper[k];
    }
  }

  Rng rng(seed);
  std::vector<double> y(d);
  double sum = 0.0, sumsq = 0.0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (int k = 0; k < d; ++k) y[k] = pred.mu[k] + pred.sigma[k] * rng.normal();
    double improvement = 0.0;
    for (std::size_t b = 0; b < nb; ++b) {
      const double* bl = &lo[b * d];
      const double* bh = &hi[b * d];
      double prod = 1.0;
      for (int k = 0; k < d; ++k) {
        const double v = (y[k] < bh[k] ? y[k] : bh[k]) - bl[k];
        if (v <= 0.0) {
          prod = 0.0;
          break;
        }
        prod *= v;
      }
      improvement += prod;
    }
    sum += improvement;
    sumsq += improvement * improvement;
  }
  const double n = static_cast<double>(samples);
  const double mean = sum / n;
  double var = (sumsq - n * mean * mean) / (n - 1.0);
  if (var < 0.0) var = 0.0;
  return McEstimate{mean, std::sqrt(var / n), samples};
}

McEstimate mc_poi(const GaussPred& pred, const ParetoApprox& p,
                  std::uint64_t samples, std::uint64_t seed) {
  const int d = p.dim();
  check_pred(pred, d);
  if (samples < 2) throw std::invalid_argument("mc_poi: needs at least 2 samples");

  Rng rng(seed);
  std::vector<double> y(d);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (int k = 0; k < d; ++k) y[k] = pred.mu[k] + pred.sigma[k] * rng.normal();
    bool dominated = false;
    for (const auto& q : p.points()) {
      bool ge = true, gt = false;
      for (int k = 0; k < d; ++k) {
        if (q[k] < y[k]) {
          ge = false;
          break;
        }
        if (q[k] > y[k]) gt = true;
      }
      if (ge && gt) {
        dominated = true;
        break;
      }
    }
    if (!dominated) ++hits;
  }
  const double n = static_cast<double>(samples);
  const double mean = static_cast<double>(hits) / n;
  double var = (static_cast<double>(hits) - n * mean * mean) / (n - 1.0);
  if (var < 0.0) var = 0.0;
  return McEstimate{mean, std::sqrt(var / n), samples};
}

}  // namespace hvbo
