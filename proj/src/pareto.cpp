#include "hvbo/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "hvbo/decomposition.hpp"

namespace hvbo {

bool dominates(const ObjVec& a, const ObjVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dominates: dimension mismatch");
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
    if (a[i] > b[i]) strict = true;
  }
  return strict;
}

ParetoApprox::ParetoApprox(std::vector<ObjVec> points, int dim) : points_(std::move(points)), dim_(dim) {
  if (dim < 2) throw std::invalid_argument("ParetoApprox: dim must be >= 2");
  for (const auto& p : points_) {
    if (static_cast<int>(p.size()) != dim) throw std::invalid_argument("ParetoApprox: dimension mismatch");
    for (double v : p) {
      if (!std::isfinite(v)) throw std::invalid_argument("ParetoApprox: coordinates must be finite");
    }
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = 0; j < points_.size(); ++j) {
      if (i == j) continue;
      if (points_[i] == points_[j] && i < j) throw std::invalid_argument("ParetoApprox: duplicate point");
      if (dominates(points_[i], points_[j])) throw std::invalid_argument("ParetoApprox: points not mutually non-dominated");
    }
  }
}

ParetoApprox nd_filter(const std::vector<ObjVec>& ys) {
  if (ys.empty()) throw std::invalid_argument("nd_filter: empty input");
  const std::size_t d = ys[0].size();
  if (d < 2) throw std::invalid_argument("nd_filter: dimension must be >= 2");
  for (const auto& y : ys) {
    if (y.size() != d) throw std::invalid_argument("nd_filter: mixed dimensions");
  }
  std::vector<ObjVec> kept;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < ys.size() && !drop; ++j) {
      if (j == i) continue;
      if (dominates(ys[j], ys[i])) drop = true;
      if (ys[j] == ys[i] && j < i) drop = true;  // keep the first of exact duplicates
    }
    if (!drop) kept.push_back(ys[i]);
  }
  return ParetoApprox(std::move(kept), static_cast<int>(d));
}

namespace detail {

void check_ref(const ParetoApprox& p, const RefPoint& r) {
  if (r.dim() != p.dim()) throw std::invalid_argument("reference point: dimension mismatch");
  for (const auto& y : p.points()) {
    for (int k = 0; k < p.dim(); ++k) {
      if (!(r.coords[k] < y[k])) {
        throw std::invalid_argument("reference point not strictly dominated by every front member");
      }
    }
  }
}

double staircase_area(const std::vector<ObjVec>& pts, double r1, double r2) {
  double area = 0.0;
  double prev_x = r1;
  for (const auto& y : pts) {
    area += (y[0] - prev_x) * (y[1] - r2);
    prev_x = y[0];
  }
  return area;
}

namespace {

double hv_2d(const ParetoApprox& p, const RefPoint& r) {
  std::vector<ObjVec> pts = p.points();
  std::sort(pts.begin(), pts.end(), [](const ObjVec& a, const ObjVec& b) { return a[0] < b[0]; });
  return staircase_area(pts, r.coords[0], r.coords[1]);
}

// Plane sweep in descending y3: accumulate staircase area times slab height.
double hv_3d(const ParetoApprox& p, const RefPoint& r) {
  std::vector<ObjVec> pts = p.points();
  std::sort(pts.begin(), pts.end(), [](const ObjVec& a, const ObjVec& b) { return a[2] > b[2]; });
  std::map<double, double> stair;  // y1 -> y2 of the current projection staircase
  double volume = 0.0;
  double level = pts[0][2];
  double area = 0.0;
  for (const auto& y : pts) {
    volume += area * (level - y[2]);
    level = y[2];
    // insert projection, discarding entries it dominates in the plane; the
    // staircase is y1-ascending / y2-descending, so they sit contiguously
    // to the left of upper_bound(y1)
    auto it = stair.upper_bound(y[0]);
    while (it != stair.begin()) {
      auto q = std::prev(it);
      if (q->second > y[1]) break;
      stair.erase(q);
    }
    stair[y[0]] = y[1];
    // recompute area; O(n) per level keeps this simple and exact
    area = 0.0;
    double prev_x = r.coords[0];
    for (const auto& [x1, x2] : stair) {
      area += (x1 - prev_x) * (x2 - r.coords[1]);
      prev_x = x1;
    }
  }
  volume += area * (level - r.coords[2]);
  return volume;
}

// Vol([r, M]) minus the clipped measure of the non-dominated boxes, where M
// is the per-coordinate maximum of the front.
double hv_dd(const ParetoApprox& p, const RefPoint& r) {
  const int d = p.dim();
  ObjVec ceiling(static_cast<std::size_t>(d), -kInf);
  for (const auto& y : p.points()) {
    for (int k = 0; k < d; ++k) ceiling[k] = std::max(ceiling[k], y[k]);
  }
  double box_vol = 1.0;
  for (int k = 0; k < d; ++k) box_vol *= ceiling[k] - r.coords[k];
  const BoxPartition part = partition_dd(p, r);
  KahanSum nondom;
  for (const auto& b : part.boxes) nondom.add(b.clipped_volume(ceiling));
  return box_vol - nondom.value();
}

}  // namespace
}  // namespace detail

double hypervolume(const ParetoApprox& p, const RefPoint& r) {
  detail::check_ref(p, r);
  if (p.empty()) return 0.0;
  switch (p.dim()) {
    case 2:
      return detail::hv_2d(p, r);
    case 3:
      return detail::hv_3d(p, r);
    default:
      return detail::hv_dd(p, r);
  }
}

double hvi(const ObjVec& y, const ParetoApprox& p, const RefPoint& r) {
  if (static_cast<int>(y.size()) != p.dim()) throw std::invalid_argument("hvi: dimension mismatch");
  for (const auto& q : p.points()) {
    if (q == y || dominates(q, y)) return 0.0;
  }
  std::vector<ObjVec> all = p.points();
  all.push_back(y);
  const ParetoApprox merged = nd_filter(all);
  return hypervolume(merged, r) - hypervolume(p, r);
}

RefPoint make_ref_point(ObjVec coords, const ParetoApprox& front) {
  RefPoint r{std::move(coords)};
  detail::check_ref(front, r);
  return r;
}

}  // namespace hvbo
