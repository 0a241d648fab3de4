#include "hvbo/kriging.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace hvbo {

double corr(const std::vector<double>& x, const std::vector<double>& x2,
            const std::vector<double>& theta) {
  if (x.size() != x2.size() || x.size() != theta.size()) {
    throw std::invalid_argument("corr: length mismatch");
  }
  double e = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - x2[i];
    e += theta[i] * dx * dx;
  }
  return std::exp(-e);
}

namespace {

constexpr double kLogThetaLo = -6.907755278982137;  // ln 1e-3
constexpr double kLogThetaHi = 6.907755278982137;   // ln 1e3

/// Nelder-Mead on a box, minimizing; budget counts objective evaluations.
class SimplexSearch {
 public:
  using Fn = std::function<double(const Eigen::VectorXd&)>;

  SimplexSearch(Fn fn, double lo, double hi, int budget)
      : fn_(std::move(fn)), lo_(lo), hi_(hi), budget_(budget) {}

  Eigen::VectorXd minimize(const Eigen::VectorXd& start) {
    const int m = static_cast<int>(start.size());
    std::vector<Eigen::VectorXd> xs;
    std::vector<double> fs;
    xs.push_back(clamp(start));
    fs.push_back(eval(xs[0]));
    for (int i = 0; i < m && evals_ < budget_; ++i) {
      Eigen::VectorXd v = xs[0];
      v[i] += 0.5;
      xs.push_back(clamp(v));
      fs.push_back(eval(xs.back()));
    }
    while (static_cast<int>(xs.size()) < m + 1) {  // budget ran out during init
      xs.push_back(xs[0]);
      fs.push_back(fs[0]);
    }

    while (evals_ < budget_) {
      std::vector<int> order(xs.size());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return fs[a] < fs[b]; });
      reorder(xs, fs, order);

      double spread = 0.0;
      for (std::size_t i = 1; i < xs.size(); ++i) spread = std::max(spread, (xs[i] - xs[0]).lpNorm<Eigen::Infinity>());
      if (spread < 1e-10) break;

      Eigen::VectorXd centroid = Eigen::VectorXd::Zero(m);
      for (std::size_t i = 0; i + 1 < xs.size(); ++i) centroid += xs[i];
      centroid /= static_cast<double>(m);

      const Eigen::VectorXd xr = clamp(centroid + (centroid - xs.back()));
      const double fr = eval(xr);
      if (fr < fs[0]) {
        const Eigen::VectorXd xe = clamp(centroid + 2.0 * (centroid - xs.back()));
        const double fe = eval(xe);
        if (fe < fr) {
          xs.back() = xe;
          fs.back() = fe;
        } else {
          xs.back() = xr;
          fs.back() = fr;
        }
      } else if (fr < fs[fs.size() - 2]) {
        xs.back() = xr;
        fs.back() = fr;
      } else {
        const Eigen::VectorXd xc = clamp(centroid + 0.5 * (xs.back() - centroid));
        const double fc = eval(xc);
        if (fc < fs.back()) {
          xs.back() = xc;
          fs.back() = fc;
        } else {
          for (std::size_t i = 1; i < xs.size(); ++i) {
            xs[i] = clamp(xs[0] + 0.5 * (xs[i] - xs[0]));
            fs[i] = eval(xs[i]);
            if (evals_ >= budget_) break;
          }
        }
      }
    }

    int best = 0;
    for (std::size_t i = 1; i < fs.size(); ++i) {
      if (fs[i] < fs[best]) best = static_cast<int>(i);
    }
    return xs[best];
  }

 private:
  Eigen::VectorXd clamp(Eigen::VectorXd v) const {
    for (int i = 0; i < v.size(); ++i) v[i] = std::min(hi_, std::max(lo_, v[i]));
    return v;
  }

  double eval(const Eigen::VectorXd& x) {
    ++evals_;
    return fn_(x);
  }

  static void reorder(std::vector<Eigen::VectorXd>& xs, std::vector<double>& fs, const std::vector<int>& order) {
    std::vector<Eigen::VectorXd> x2(xs.size());
    std::vector<double> f2(fs.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      x2[i] = xs[order[i]];
      f2[i] = fs[order[i]];
    }
    xs = std::move(x2);
    fs = std::move(f2);
  }

  Fn fn_;
  double lo_, hi_;
  int budget_;
  int evals_ = 0;
};

struct Concentrated {
  double loglik;
  double mu_hat;
  double sigma2_hat;
  bool ok;
};

// Concentrated log-likelihood L = -(n/2) ln(sigma2_hat) - 1/2 ln|Sigma| with
// the MLE plug-ins mu_hat = (1' S^-1 y)/(1' S^-1 1),
// sigma2_hat = (y - mu 1)' S^-1 (y - mu 1)/n.
Concentrated concentrated_loglik(const Eigen::MatrixXd& sq_diffs, const Eigen::VectorXd& y,
                                 const Eigen::VectorXd& theta, Eigen::LLT<Eigen::MatrixXd>* keep_llt) {
  const int n = static_cast<int>(y.size());
  Eigen::MatrixXd sigma(n, n);
  const int m = static_cast<int>(theta.size());
  for (int i = 0; i < n; ++i) {
    sigma(i, i) = 1.0 + KrigingModel::kNugget;
    for (int j = i + 1; j < n; ++j) {
      const double* dptr = sq_diffs.data() + (static_cast<std::ptrdiff_t>(i) * n + j) * m;
      double e = 0.0;
      for (int k = 0; k < m; ++k) e += theta[k] * dptr[k];
      const double v = std::exp(-e);
      sigma(i, j) = v;
      sigma(j, i) = v;
    }
  }
  Eigen::LLT<Eigen::MatrixXd> llt(sigma);
  if (llt.info() != Eigen::Success) return {-std::numeric_limits<double>::infinity(), 0.0, 0.0, false};

  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
  const Eigen::VectorXd si_y = llt.solve(y);
  const Eigen::VectorXd si_1 = llt.solve(ones);
  const double one_s_one = ones.dot(si_1);
  const double mu = ones.dot(si_y) / one_s_one;
  double s2 = (y.dot(si_y) - 2.0 * mu * ones.dot(si_y) + mu * mu * one_s_one) / n;
  if (s2 < 0.0) s2 = 0.0;
  double logdet = 0.0;
  for (int i = 0; i < n; ++i) logdet += 2.0 * std::log(llt.matrixLLT()(i, i));
  const double ll = -0.5 * n * std::log(std::max(s2, 1e-300)) - 0.5 * logdet;
  if (keep_llt != nullptr) *keep_llt = llt;
  return {ll, mu, s2, true};
}

}  // namespace

KrigingModel KrigingModel::fit(const std::vector<std::vector<double>>& xs,
                               const std::vector<double>& ys, int budget,
                               const std::optional<Bounds>& bounds) {
  const int n = static_cast<int>(xs.size());
  if (n < 2) throw std::invalid_argument("KrigingModel::fit: needs at least 2 points");
  if (ys.size() != xs.size()) throw std::invalid_argument("KrigingModel::fit: xs/ys size mismatch");
  if (budget < 1) throw std::invalid_argument("KrigingModel::fit: budget must be >= 1");
  const int m = static_cast<int>(xs[0].size());
  if (m < 1) throw std::invalid_argument("KrigingModel::fit: empty decision vectors");
  for (const auto& x : xs) {
    if (static_cast<int>(x.size()) != m) throw std::invalid_argument("KrigingModel::fit: ragged inputs");
  }

  KrigingModel model;
  model.m_ = m;
  model.raw_x_ = xs;
  model.raw_lo_.assign(m, std::numeric_limits<double>::infinity());
  model.raw_hi_.assign(m, -std::numeric_limits<double>::infinity());
  if (bounds) {
    if (static_cast<int>(bounds->size()) != m) throw std::invalid_argument("KrigingModel::fit: bounds size mismatch");
    for (int k = 0; k < m; ++k) {
      model.raw_lo_[k] = (*bounds)[k].first;
      model.raw_hi_[k] = (*bounds)[k].second;
    }
  } else {
    for (const auto& x : xs) {
      for (int k = 0; k < m; ++k) {
        model.raw_lo_[k] = std::min(model.raw_lo_[k], x[k]);
        model.raw_hi_[k] = std::max(model.raw_hi_[k], x[k]);
      }
    }
  }

  model.x_.resize(n, m);
  for (int i = 0; i < n; ++i) model.x_.row(i) = model.normalize(xs[i]);
  model.y_ = Eigen::Map<const Eigen::VectorXd>(ys.data(), n);

  // pairwise squared differences, reused by every likelihood evaluation
  Eigen::MatrixXd sq_diffs(1, static_cast<std::ptrdiff_t>(n) * n * m);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double* dptr = sq_diffs.data() + (static_cast<std::ptrdiff_t>(i) * n + j) * m;
      for (int k = 0; k < m; ++k) {
        const double dx = model.x_(i, k) - model.x_(j, k);
        dptr[k] = dx * dx;
      }
    }
  }

  bool start_recorded = false;
  double start_ll = 0.0;
  const auto objective = [&](const Eigen::VectorXd& log_theta) {
    Eigen::VectorXd theta = log_theta.array().exp();
    const Concentrated c = concentrated_loglik(sq_diffs, model.y_, theta, nullptr);
    if (!start_recorded) {
      start_recorded = true;
      start_ll = c.loglik;
    }
    return -c.loglik;
  };

  SimplexSearch search(objective, kLogThetaLo, kLogThetaHi, budget);
  const Eigen::VectorXd best_log = search.minimize(Eigen::VectorXd::Zero(m));

  Eigen::VectorXd theta = best_log.array().exp();
  Concentrated c = concentrated_loglik(sq_diffs, model.y_, theta, &model.llt_);
  if (!c.ok) {
    // fall back to the search start; with the nugget this only happens for
    // pathological inputs
    theta = Eigen::VectorXd::Ones(m);
    c = concentrated_loglik(sq_diffs, model.y_, theta, &model.llt_);
    if (!c.ok) throw std::invalid_argument("KrigingModel::fit: correlation matrix not positive definite");
  }

  model.theta_.assign(theta.data(), theta.data() + m);
  model.mu_hat_ = c.mu_hat;
  model.sigma2_hat_ = c.sigma2_hat;
  model.loglik_ = c.loglik;
  model.loglik_start_ = start_recorded ? start_ll : c.loglik;

  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
  model.alpha_ = model.llt_.solve(model.y_ - model.mu_hat_ * ones);
  model.sinv_one_ = model.llt_.solve(ones);
  model.one_s_one_ = ones.dot(model.sinv_one_);
  return model;
}

Eigen::VectorXd KrigingModel::normalize(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != m_) throw std::invalid_argument("KrigingModel: input length mismatch");
  Eigen::VectorXd out(m_);
  for (int k = 0; k < m_; ++k) {
    const double w = raw_hi_[k] - raw_lo_[k];
    out[k] = w > 0.0 ? (x[k] - raw_lo_[k]) / w : 0.0;
  }
  return out;
}

std::pair<double, double> KrigingModel::predict(const std::vector<double>& x) const {
  const Eigen::VectorXd xn = normalize(x);
  const int n = static_cast<int>(y_.size());
  Eigen::VectorXd c(n);
  for (int i = 0; i < n; ++i) {
    double e = 0.0;
    for (int k = 0; k < m_; ++k) {
      const double dx = xn[k] - x_(i, k);
      e += theta_[k] * dx * dx;
    }
    c[i] = std::exp(-e);
  }
  const double mu = mu_hat_ + c.dot(alpha_);
  const Eigen::VectorXd si_c = llt_.solve(c);
  const double c_s_c = c.dot(si_c);
  const double one_s_c = sinv_one_.dot(c);
  double s2 = sigma2_hat_ * (1.0 - c_s_c + (1.0 - one_s_c) * (1.0 - one_s_c) / one_s_one_);
  if (s2 < 0.0) s2 = 0.0;
  return {mu, s2};
}

std::string KrigingModel::dump_json() const {
  nlohmann::json j;
  j["theta"] = theta_;
  j["mu_hat"] = mu_hat_;
  j["sigma2_hat"] = sigma2_hat_;
  j["log_likelihood"] = loglik_;
  j["train_x"] = raw_x_;
  std::vector<double> ys(y_.data(), y_.data() + y_.size());
  j["train_y"] = ys;
  return j.dump(2);
}

GaussPred predict_multi(const std::vector<KrigingModel>& models, const std::vector<double>& x) {
  if (models.empty()) throw std::invalid_argument("predict_multi: no models");
  GaussPred pred;
  pred.mu.reserve(models.size());
  pred.sigma.reserve(models.size());
  for (const auto& model : models) {
    const auto [mu, s2] = model.predict(x);
    pred.mu.push_back(mu);
    pred.sigma.push_back(std::max(std::sqrt(std::max(s2, 0.0)), 1e-12));
  }
  return pred;
}

}  // namespace hvbo
