#include "hvbo/mobgo.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>

#include "hvbo/criteria.hpp"
#include "hvbo/decomposition.hpp"
#include "hvbo/pareto.hpp"

namespace hvbo {

std::vector<std::vector<double>> lhs(int eta, const std::vector<std::pair<double, double>>& bounds,
                                     std::uint64_t seed) {
  if (eta < 1) throw std::invalid_argument("lhs: eta must be >= 1");
  const int m = static_cast<int>(bounds.size());
  Rng rng(seed ^ 0x1a5c0de5ULL);
  std::vector<std::vector<double>> pts(static_cast<std::size_t>(eta), std::vector<double>(m));
  std::vector<int> strata(static_cast<std::size_t>(eta));
  for (int k = 0; k < m; ++k) {
    std::iota(strata.begin(), strata.end(), 0);
    rng.shuffle(strata);
    const double lo = bounds[k].first;
    const double width = (bounds[k].second - lo) / eta;
    for (int i = 0; i < eta; ++i) {
      pts[i][k] = lo + (strata[i] + rng.u01()) * width;
    }
  }
  return pts;
}

ParetoApprox clip_to_ref(const ParetoApprox& front, const RefPoint& r) {
  std::vector<ObjVec> kept;
  for (const auto& y : front.points()) {
    bool inside = true;
    for (int k = 0; k < front.dim() && inside; ++k) {
      if (!(r.coords[k] < y[k])) inside = false;
    }
    if (inside) kept.push_back(y);
  }
  return ParetoApprox(std::move(kept), front.dim());
}

double history_hv(const ParetoApprox& front, const RefPoint& r) {
  const ParetoApprox clipped = clip_to_ref(front, r);
  if (clipped.empty()) return 0.0;
  return hypervolume(clipped, r);
}

namespace {

struct BestTracker {
  std::vector<double> x;
  double value = -1.0;
  std::vector<double> x_var;
  double var = -1.0;

  void consider(const std::vector<double>& cand, double v, double summed_var) {
    if (v > value) {
      value = v;
      x = cand;
    }
    if (summed_var > var) {
      var = summed_var;
      x_var = cand;
    }
  }
};

}  // namespace

std::vector<double> propose(const std::vector<KrigingModel>& models, const ParetoApprox& front,
                            const Problem& problem, const RunConfig& cfg, Rng& rng,
                            double* criterion_value, bool* fallback) {
  const int m = problem.m;
  const int d = problem.d;
  if (static_cast<int>(models.size()) != d) throw std::invalid_argument("propose: needs one model per objective");

  // the front is fixed during the inner search, so the box partition is
  // computed once and reused by every criterion evaluation
  BoxPartition part;
  if (cfg.criterion == Criterion::ehvi) {
    part = partition_auto(clip_to_ref(front, cfg.ref), cfg.ref);
  } else {
    part = partition_auto(front, RefPoint::neg_infinity(d));
  }

  BestTracker best;
  int evals = 0;
  std::vector<double> x(m);
  const auto evaluate = [&](const std::vector<double>& cand) {
    const GaussPred pred = predict_multi(models, cand);
    double v = cfg.criterion == Criterion::ehvi ? ehvi_over(part, pred) : poi_over(part, pred);
    double sv = 0.0;
    for (double s : pred.sigma) sv += s * s;
    best.consider(cand, v, sv);
    ++evals;
    return v;
  };

  // restarted self-adaptive (mu, lambda) evolution strategy on the unit box
  const int lambda = 10;
  const int mu = 3;
  const double tau = 1.0 / std::sqrt(2.0 * m);
  const auto denorm = [&](const std::vector<double>& u) {
    std::vector<double> out(m);
    for (int k = 0; k < m; ++k) out[k] = problem.bounds[k].first + u[k] * (problem.bounds[k].second - problem.bounds[k].first);
    return out;
  };

  while (evals < cfg.inner_budget) {
    std::vector<double> parent(m);
    for (double& v : parent) v = rng.u01();
    double step = 0.3;
    evaluate(denorm(parent));
    while (evals < cfg.inner_budget && step > 1e-8) {
      struct Offspring {
        std::vector<double> u;
        double step;
        double value;
      };
      std::vector<Offspring> pop;
      pop.reserve(lambda);
      for (int i = 0; i < lambda && evals < cfg.inner_budget; ++i) {
        Offspring o;
        o.step = step * std::exp(tau * rng.normal());
        o.u.resize(m);
        for (int k = 0; k < m; ++k) {
          o.u[k] = std::clamp(parent[k] + o.step * rng.normal(), 0.0, 1.0);
        }
        o.value = evaluate(denorm(o.u));
        pop.push_back(std::move(o));
      }
      if (pop.empty()) break;
      std::stable_sort(pop.begin(), pop.end(), [](const Offspring& a, const Offspring& b) { return a.value > b.value; });
      const int take = std::min<int>(mu, static_cast<int>(pop.size()));
      std::fill(parent.begin(), parent.end(), 0.0);
      double new_step = 0.0;
      for (int i = 0; i < take; ++i) {
        for (int k = 0; k < m; ++k) parent[k] += pop[i].u[k] / take;
        new_step += pop[i].step / take;
      }
      step = new_step;
    }
  }

  const bool use_fallback = !(best.value > 0.0);
  if (criterion_value != nullptr) *criterion_value = best.value;
  if (fallback != nullptr) *fallback = use_fallback;
  return use_fallback ? best.x_var : best.x;
}

namespace {

ParetoApprox front_of(const std::vector<std::pair<std::vector<double>, ObjVec>>& entries, int d) {
  std::vector<ObjVec> ys;
  ys.reserve(entries.size());
  for (const auto& e : entries) ys.push_back(e.second);
  if (ys.empty()) return ParetoApprox(d);
  return nd_filter(ys);
}

bool finite_vec(const ObjVec& y, int d) {
  if (static_cast<int>(y.size()) != d) return false;
  for (double v : y) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

std::vector<KrigingModel> fit_models(const Archive& archive, const Problem& problem, const RunConfig& cfg) {
  std::vector<std::vector<double>> xs;
  xs.reserve(archive.entries.size());
  for (const auto& e : archive.entries) xs.push_back(e.first);

  const auto fit_one = [&](int obj) {
    std::vector<double> ys;
    ys.reserve(archive.entries.size());
    for (const auto& e : archive.entries) ys.push_back(e.second[obj]);
    return KrigingModel::fit(xs, ys, cfg.fit_budget, problem.bounds);
  };

  std::vector<KrigingModel> models;
  models.reserve(problem.d);
  if (cfg.parallel_fit) {
    std::vector<std::future<KrigingModel>> futs;
    futs.reserve(problem.d);
    for (int j = 0; j < problem.d; ++j) futs.push_back(std::async(std::launch::async, fit_one, j));
    for (auto& f : futs) models.push_back(f.get());
  } else {
    for (int j = 0; j < problem.d; ++j) models.push_back(fit_one(j));
  }
  return models;
}

}  // namespace

RunResult run(const Problem& problem, const RunConfig& cfg) {
  if (cfg.eta < problem.m + 1) throw std::invalid_argument("run: eta must be >= m + 1");
  if (cfg.tc < cfg.eta) throw std::invalid_argument("run: tc must be >= eta");
  if (cfg.inner_budget < 100) throw std::invalid_argument("run: inner_budget must be >= 100");
  if (cfg.ref.dim() != problem.d) throw std::invalid_argument("run: reference point dimension mismatch");

  RunResult result(problem.d);
  Rng root(cfg.seed);

  const auto record = [&](double criterion_value, bool fallback) {
    result.history.push_back(IterationRecord{result.archive.evals,
                                             history_hv(result.archive.front, cfg.ref),
                                             criterion_value, fallback});
  };
  const auto add_entry = [&](const std::vector<double>& x) {
    ObjVec y;
    try {
      y = problem.eval(x);
    } catch (const std::exception&) {
      return false;
    }
    if (!finite_vec(y, problem.d)) return false;
    result.archive.entries.emplace_back(x, std::move(y));
    result.archive.evals += 1;
    result.archive.front = front_of(result.archive.entries, problem.d);
    return true;
  };

  // Steps 1-5: initial design, evaluation, archive and front
  for (const auto& x : lhs(cfg.eta, problem.bounds, cfg.seed)) {
    if (!add_entry(x)) {
      result.aborted = true;
      return result;
    }
    record(std::nan(""), false);
  }

  // Steps 6-12: fit d models, maximize the infill criterion, evaluate
  while (result.archive.evals < cfg.tc) {
    const std::vector<KrigingModel> models = fit_models(result.archive, problem, cfg);
    Rng iter_rng = root.spawn(static_cast<std::uint64_t>(result.archive.evals));
    double crit = 0.0;
    bool fallback = false;
    const std::vector<double> x = propose(models, result.archive.front, problem, cfg, iter_rng, &crit, &fallback);
    if (!add_entry(x)) {
      result.aborted = true;
      return result;
    }
    record(crit, fallback);
  }
  return result;
}

}  // namespace hvbo
