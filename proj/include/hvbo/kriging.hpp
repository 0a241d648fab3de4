#ifndef HVBO_KRIGING_HPP
#define HVBO_KRIGING_HPP

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hvbo/types.hpp"

namespace hvbo {

/// Gaussian correlation prod_i exp(-theta_i (x_i - x2_i)^2).
double corr(const std::vector<double>& x, const std::vector<double>& x2,
            const std::vector<double>& theta);

/// Ordinary Kriging for one objective: constant unknown mean, Gaussian
/// kernel, hyperparameters by maximum likelihood.
///
/// theta is searched in log-space over [1e-3, 1e3]^m with a Nelder-Mead
/// simplex started at the 1-vector, within a fixed budget of likelihood
/// evaluations. Decision vectors are normalized to [0,1]^m internally (box
/// bounds when supplied, data extent otherwise). The correlation matrix gets
/// a 1e-10 nugget and is Cholesky-factored once per fit.
class KrigingModel {
 public:
  using Bounds = std::vector<std::pair<double, double>>;

  static KrigingModel fit(const std::vector<std::vector<double>>& xs,
                          const std::vector<double>& ys, int budget = 1000,
                          const std::optional<Bounds>& bounds = std::nullopt);

  /// Mean and variance of the predictive distribution at x.
  [[nodiscard]] std::pair<double, double> predict(const std::vector<double>& x) const;

  [[nodiscard]] const std::vector<double>& theta() const { return theta_; }
  [[nodiscard]] double mu_hat() const { return mu_hat_; }
  [[nodiscard]] double sigma2_hat() const { return sigma2_hat_; }
  [[nodiscard]] double log_likelihood() const { return loglik_; }
  [[nodiscard]] double start_log_likelihood() const { return loglik_start_; }
  [[nodiscard]] int input_dim() const { return m_; }
  [[nodiscard]] std::size_t train_size() const { return static_cast<std::size_t>(y_.size()); }

  /// JSON dump of hyperparameters and training data for reproducibility audits.
  [[nodiscard]] std::string dump_json() const;

  static constexpr double kNugget = 1e-10;

 private:
  KrigingModel() = default;

  [[nodiscard]] Eigen::VectorXd normalize(const std::vector<double>& x) const;

  int m_ = 0;
  Eigen::MatrixXd x_;  // normalized training inputs, n x m
  Eigen::VectorXd y_;
  std::vector<double> raw_lo_, raw_hi_;
  std::vector<std::vector<double>> raw_x_;
  std::vector<double> theta_;
  double mu_hat_ = 0.0;
  double sigma2_hat_ = 0.0;
  double loglik_ = 0.0;
  double loglik_start_ = 0.0;
  Eigen::LLT<Eigen::MatrixXd> llt_;
  Eigen::VectorXd alpha_;     // Sigma^-1 (y - mu 1)
  Eigen::VectorXd sinv_one_;  // Sigma^-1 1
  double one_s_one_ = 0.0;    // 1^T Sigma^-1 1
};

/// Stacks per-objective predictions into a GaussPred; zero variances are
/// floored at sigma = 1e-12 so the closed-form criteria stay defined.
GaussPred predict_multi(const std::vector<KrigingModel>& models, const std::vector<double>& x);

}  // namespace hvbo

#endif  // HVBO_KRIGING_HPP
