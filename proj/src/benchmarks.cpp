#include "hvbo/benchmarks.hpp"

#include <cmath>
#include <stdexcept>

#include "hvbo/pareto.hpp"
#include "hvbo/rng.hpp"

namespace hvbo {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Minimization-form DTLZ objectives, standard definitions. k = m - d + 1
// tail variables feed the distance function g.
ObjVec dtlz_min(int id, int m, int d, const std::vector<double>& x) {
  const int k = m - d + 1;
  ObjVec f(static_cast<std::size_t>(d));

  double g = 0.0;
  if (id == 1 || id == 3) {
    for (int i = m - k; i < m; ++i) {
      g += (x[i] - 0.5) * (x[i] - 0.5) - std::cos(20.0 * kPi * (x[i] - 0.5));
    }
    g = 100.0 * (k + g);
  } else if (id == 7) {
    for (int i = m - k; i < m; ++i) g += x[i];
    g = 1.0 + 9.0 * g / k;
  } else {
    for (int i = m - k; i < m; ++i) g += (x[i] - 0.5) * (x[i] - 0.5);
  }

  if (id == 1) {
    for (int i = 0; i < d; ++i) {
      double v = 0.5 * (1.0 + g);
      for (int j = 0; j < d - i - 1; ++j) v *= x[j];
      if (i != 0) v *= 1.0 - x[d - i - 1];
      f[i] = v;
    }
    return f;
  }
  if (id == 7) {
    double h = d;
    for (int i = 0; i < d - 1; ++i) {
      f[i] = x[i];
      h -= x[i] / (1.0 + g) * (1.0 + std::sin(3.0 * kPi * x[i]));
    }
    f[d - 1] = (1.0 + g) * h;
    return f;
  }

  // DTLZ2/3/4/5 share the spherical shape; they differ in the angles.
  std::vector<double> angle(static_cast<std::size_t>(d - 1));
  for (int i = 0; i < d - 1; ++i) {
    double xi = x[i];
    if (id == 4) xi = std::pow(xi, 100.0);
    if (id == 5 && i > 0) {
      angle[i] = kPi / (4.0 * (1.0 + g)) * (1.0 + 2.0 * g * xi);
    } else {
      angle[i] = 0.5 * kPi * xi;
    }
  }
  for (int i = 0; i < d; ++i) {
    double v = 1.0 + g;
    for (int j = 0; j < d - i - 1; ++j) v *= std::cos(angle[j]);
    if (i != 0) v *= std::sin(angle[d - i - 1]);
    f[i] = v;
  }
  return f;
}

}  // namespace

Problem dtlz(int id, int m, int d) {
  if (id < 1 || id == 6 || id > 7) throw std::invalid_argument("dtlz: supported ids are 1-5 and 7");
  if (d < 2) throw std::invalid_argument("dtlz: d must be >= 2");
  if (m < d) throw std::invalid_argument("dtlz: m must be >= d");
  Problem p;
  p.m = m;
  p.d = d;
  p.bounds.assign(static_cast<std::size_t>(m), {0.0, 1.0});
  p.name = "DTLZ" + std::to_string(id);
  p.eval = [id, m, d](const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != m) throw std::invalid_argument("dtlz: decision vector length mismatch");
    ObjVec f = dtlz_min(id, m, d, x);
    for (double& v : f) v = -v;
    return f;
  };
  return p;
}

ParetoApprox random_front(const FrontSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("random_front: n must be >= 1");
  if (spec.d < 2) throw std::invalid_argument("random_front: d must be >= 2");
  Rng rng(spec.seed ^ 0x5eedf00dULL);

  std::vector<ObjVec> pts;
  while (static_cast<int>(pts.size()) < spec.n) {
    ObjVec dir(static_cast<std::size_t>(spec.d));
    double norm2 = 0.0;
    for (double& v : dir) {
      v = std::abs(rng.normal());
      norm2 += v * v;
    }
    const double norm = std::sqrt(norm2);
    if (norm < 1e-12) continue;
    ObjVec y(static_cast<std::size_t>(spec.d));
    bool ok = true;
    for (int k = 0; k < spec.d; ++k) {
      const double s = dir[k] / norm;
      y[k] = spec.kind == FrontSpec::Kind::concave_spherical ? spec.radius * s : spec.radius * (1.0 - s);
      if (y[k] < 1e-6 * spec.radius) ok = false;  // keep points strictly inside the positive orthant
    }
    if (!ok) continue;
    pts.push_back(std::move(y));
    if (static_cast<int>(pts.size()) == spec.n) {
      const ParetoApprox filtered = nd_filter(pts);
      if (static_cast<int>(filtered.size()) == spec.n) return filtered;
      pts = filtered.points();  // dropped a duplicate or dominated point, top up
    }
  }
  return nd_filter(pts);
}

}  // namespace hvbo
