#ifndef HVBO_MOBGO_HPP
#define HVBO_MOBGO_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hvbo/kriging.hpp"
#include "hvbo/rng.hpp"
#include "hvbo/types.hpp"

namespace hvbo {

/// A box-constrained multi-objective problem in maximization convention
/// (minimization benchmarks are pre-negated at construction).
struct Problem {
  int m = 0;
  int d = 0;
  std::vector<std::pair<double, double>> bounds;
  std::function<ObjVec(const std::vector<double>&)> eval;
  std::string name;
};

enum class Criterion { ehvi, poi };

struct RunConfig {
  int eta = 30;
  int tc = 300;
  Criterion criterion = Criterion::ehvi;
  RefPoint ref;
  int inner_budget = 2000;
  std::uint64_t seed = 1;
  int fit_budget = 1000;
  bool parallel_fit = true;
};

/// Evaluated dataset plus its non-dominated subset.
struct Archive {
  explicit Archive(int obj_dim) : front(obj_dim) {}
  std::vector<std::pair<std::vector<double>, ObjVec>> entries;
  ParetoApprox front;
  int evals = 0;
};

struct IterationRecord {
  int g = 0;
  double hv = 0.0;
  double criterion_value = 0.0;
  bool fallback = false;  // inner search saw only zero criterion values
};

struct RunResult {
  explicit RunResult(int obj_dim) : archive(obj_dim) {}
  Archive archive;
  std::vector<IterationRecord> history;
  bool aborted = false;
};

/// Latin hypercube sample: eta points, one per equal-width stratum and
/// coordinate, uniformly jittered. Deterministic per seed.
std::vector<std::vector<double>> lhs(int eta, const std::vector<std::pair<double, double>>& bounds,
                                     std::uint64_t seed);

/// Members of the front that strictly dominate r; points outside the
/// reference box contribute no hypervolume and no EHVI mass inside it.
ParetoApprox clip_to_ref(const ParetoApprox& front, const RefPoint& r);

/// HV of the clipped front (0 when nothing is inside the reference box).
double history_hv(const ParetoApprox& front, const RefPoint& r);

/// One infill proposal: maximizes the configured criterion over the box with
/// a restarted self-adaptive (mu, lambda) evolution strategy. The returned
/// point carries the best criterion value seen by the inner search; when the
/// whole search returns 0 the point of maximal summed predictive variance is
/// returned instead and *fallback is set.
std::vector<double> propose(const std::vector<KrigingModel>& models, const ParetoApprox& front,
                            const Problem& problem, const RunConfig& cfg, Rng& rng,
                            double* criterion_value = nullptr, bool* fallback = nullptr);

/// The full loop: LHS initialization, per-iteration refit of d models,
/// criterion maximization, true evaluation, archive/front update. history
/// records HV(front, ref) after every evaluation. Evaluation failures abort
/// with the partial archive.
RunResult run(const Problem& problem, const RunConfig& cfg);

}  // namespace hvbo

#endif  // HVBO_MOBGO_HPP
