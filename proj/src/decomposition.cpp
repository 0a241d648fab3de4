#include "hvbo/decomposition.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "hvbo/pareto.hpp"

namespace hvbo {

namespace {

void check_front_ref(const ParetoApprox& p, const RefPoint& r, int want_dim = 0) {
  if (want_dim != 0 && p.dim() != want_dim) {
    throw std::invalid_argument("partition: unsupported dimension for this algorithm");
  }
  detail::check_ref(p, r);
}

std::vector<ObjVec> sorted_points(const ParetoApprox& p, int coord_desc) {
  std::vector<ObjVec> pts = p.points();
  std::sort(pts.begin(), pts.end(), [coord_desc](const ObjVec& a, const ObjVec& b) {
    if (a[coord_desc] != b[coord_desc]) return a[coord_desc] > b[coord_desc];
    return a < b;  // lexicographic tie-break: equal last coordinate, ascending y1
  });
  return pts;
}

void emit(BoxPartition& out, ObjVec lo, ObjVec hi) {
  for (std::size_t k = 0; k < lo.size(); ++k) {
    if (lo[k] >= hi[k]) return;  // degenerate slice from tied coordinates
  }
  out.boxes.push_back(Hyperbox{std::move(lo), std::move(hi)});
}

}  // namespace

BoxPartition partition_2d(const ParetoApprox& p, const RefPoint& r) {
  check_front_ref(p, r, 2);
  std::vector<ObjVec> pts = p.points();
  std::sort(pts.begin(), pts.end(), [](const ObjVec& a, const ObjVec& b) { return a[0] < b[0]; });

  BoxPartition out;
  out.dim = 2;
  out.source_front_size = pts.size();
  const std::size_t n = pts.size();
  // sentinels y^(0) = (r1, inf), y^(n+1) = (inf, r2)
  for (std::size_t i = 0; i <= n; ++i) {
    const double l1 = (i == 0) ? r.coords[0] : pts[i - 1][0];
    const double l2 = (i == n) ? r.coords[1] : pts[i][1];
    const double u1 = (i == n) ? kInf : pts[i][0];
    emit(out, {l1, l2}, {u1, kInf});
  }
  return out;
}

BoxPartition partition_3d(const ParetoApprox& p, const RefPoint& r) {
  check_front_ref(p, r, 3);
  const std::vector<ObjVec> pts = sorted_points(p, 2);

  BoxPartition out;
  out.dim = 3;
  out.source_front_size = pts.size();

  // Projection staircase keyed on y1; sentinels (r1, inf) and (inf, r2).
  std::map<double, double> stair;
  stair[r.coords[0]] = kInf;
  stair[kInf] = r.coords[1];

  const auto sweep = [&](double y1, double y2, double y3, double u2) {
    auto it = stair.upper_bound(y1);  // right neighbor
    const double rn_y2 = it->second;
    // entries dominated by (y1, y2) in the plane sit contiguously to the left
    std::vector<std::pair<double, double>> dom;
    while (it != stair.begin()) {
      auto q = std::prev(it);
      if (q->second > y2) break;  // q is the upper-left neighbor t
      dom.emplace_back(q->first, q->second);
      stair.erase(q);
    }
    const double t_y1 = std::prev(it)->first;
    std::reverse(dom.begin(), dom.end());  // ascending y1

    if (dom.empty()) {
      emit(out, {t_y1, rn_y2, y3}, {y1, u2, kInf});
    } else {
      const std::size_t s = dom.size();
      emit(out, {t_y1, dom[0].second, y3}, {dom[0].first, u2, kInf});
      for (std::size_t j = 1; j < s; ++j) {
        emit(out, {dom[j - 1].first, dom[j].second, y3}, {dom[j].first, u2, kInf});
      }
      emit(out, {dom[s - 1].first, rn_y2, y3}, {y1, u2, kInf});
    }
  };

  for (const auto& y : pts) {
    sweep(y[0], y[1], y[2], y[1]);
    stair[y[0]] = y[1];
  }
  // closing pass for y^(n+1) = (inf, inf, r3); collects every remaining point
  {
    std::vector<std::pair<double, double>> dom(std::next(stair.begin()), std::prev(stair.end()));
    const double y3 = r.coords[2];
    if (dom.empty()) {
      emit(out, {r.coords[0], r.coords[1], y3}, {kInf, kInf, kInf});
    } else {
      const std::size_t s = dom.size();
      emit(out, {r.coords[0], dom[0].second, y3}, {dom[0].first, kInf, kInf});
      for (std::size_t j = 1; j < s; ++j) {
        emit(out, {dom[j - 1].first, dom[j].second, y3}, {dom[j].first, kInf, kInf});
      }
      emit(out, {dom[s - 1].first, r.coords[1], y3}, {kInf, kInf, kInf});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Local lower bounds and the d-dimensional partition.
//
// Both follow the incremental insertion scheme for local bound sets: a new
// point p invalidates the bounds it strictly exceeds in every coordinate (the
// set A), and each invalidated bound l spawns d candidates (l with one
// coordinate raised to p's). partition_dd additionally tracks, per bound and
// coordinate, the point that supplied that coordinate ("defining point"); the
// box upper bounds are read off those.
//
// To keep the box cover exact when archive points share coordinate values,
// partition_dd runs on symbolically perturbed coordinates: every comparison
// is on (value, point index) pairs, which puts the input in general position
// without changing any emitted value. Degenerate boxes are dropped.
// ---------------------------------------------------------------------------

namespace {

struct Tagged {
  double v;
  std::int32_t idx;
};

inline bool tless(const Tagged& a, const Tagged& b) {
  return a.v < b.v || (a.v == b.v && a.idx < b.idx);
}

constexpr std::int32_t kSentinelIdx = INT32_MAX;

class TaggedCornerEngine {
 public:
  TaggedCornerEngine(const std::vector<ObjVec>& pts, const ObjVec& ref) : pts_(pts), d_(static_cast<int>(ref.size())) {
    Corner root;
    root.x.resize(d_);
    root.def.assign(d_, kSentinel);
    for (int k = 0; k < d_; ++k) root.x[k] = Tagged{ref[k], 0};
    ref_ = ref;
    corners_.push_back(std::move(root));
    for (std::size_t i = 0; i < pts_.size(); ++i) insert(static_cast<std::int32_t>(i));
  }

  BoxPartition boxes() const {
    BoxPartition out;
    out.dim = d_;
    out.source_front_size = pts_.size();
    out.boxes.reserve(corners_.size());
    for (const auto& c : corners_) {
      ObjVec lo(d_), hi(d_);
      bool degenerate = false;
      for (int k = 0; k < d_; ++k) {
        lo[k] = c.x[k].v;
        Tagged u{kInf, kSentinelIdx};
        for (int j = k + 1; j < d_; ++j) {
          const Tagged t = def_coord(c.def[j], j, k);
          if (tless(t, u)) u = t;
        }
        hi[k] = u.v;
        if (lo[k] >= hi[k]) degenerate = true;
      }
      if (!degenerate) out.boxes.push_back(Hyperbox{std::move(lo), std::move(hi)});
    }
    return out;
  }

  std::vector<ObjVec> corner_values() const {
    std::vector<ObjVec> out;
    out.reserve(corners_.size());
    for (const auto& c : corners_) {
      ObjVec v(d_);
      for (int k = 0; k < d_; ++k) v[k] = c.x[k].v;
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  static constexpr std::int32_t kSentinel = -1;

  struct Corner {
    std::vector<Tagged> x;
    std::vector<std::int32_t> def;  // per coordinate: point index or kSentinel
  };

  // Coordinate `coord` of the defining point stored in slot `slot`.
  Tagged def_coord(std::int32_t def, int slot, int coord) const {
    if (def == kSentinel) {
      return coord == slot ? Tagged{ref_[coord], 0} : Tagged{kInf, kSentinelIdx};
    }
    return Tagged{pts_[def][coord], def + 1};
  }

  void insert(std::int32_t pi) {
    const ObjVec& p = pts_[pi];
    const auto ptag = [&](int k) { return Tagged{p[k], pi + 1}; };

    std::vector<Corner> spawned;
    std::size_t w = 0;
    for (std::size_t i = 0; i < corners_.size(); ++i) {
      Corner& l = corners_[i];
      bool strictly_above = true;
      for (int k = 0; k < d_ && strictly_above; ++k) {
        if (!tless(l.x[k], ptag(k))) strictly_above = false;
      }
      if (!strictly_above) {
        if (w != i) corners_[w] = std::move(l);
        ++w;
        continue;
      }
      for (int j = 0; j < d_; ++j) {
        bool keep = true;
        for (int k = 0; k < d_ && keep; ++k) {
          if (k == j) continue;
          if (!tless(ptag(j), def_coord(l.def[k], k, j))) keep = false;
        }
        if (!keep) continue;
        Corner c;
        c.x = l.x;
        c.x[j] = ptag(j);
        c.def = l.def;
        c.def[j] = pi;
        spawned.push_back(std::move(c));
      }
    }
    corners_.resize(w);
    for (auto& c : spawned) corners_.push_back(std::move(c));
  }

  const std::vector<ObjVec>& pts_;
  ObjVec ref_;
  int d_;
  std::vector<Corner> corners_;
};

}  // namespace

BoxPartition partition_dd(const ParetoApprox& p, const RefPoint& r) {
  check_front_ref(p, r);
  const std::vector<ObjVec> pts = sorted_points(p, p.dim() - 1);
  return TaggedCornerEngine(pts, r.coords).boxes();
}

LocalLowerBounds local_lower_bounds(const ParetoApprox& p, const RefPoint& r) {
  check_front_ref(p, r);
  const int d = p.dim();
  const std::vector<ObjVec> pts = sorted_points(p, d - 1);

  std::vector<ObjVec> bounds{r.coords};
  for (const auto& pt : pts) {
    std::vector<ObjVec> survivors;
    std::vector<ObjVec> invalidated;
    for (auto& b : bounds) {
      bool strictly_above = true;
      for (int k = 0; k < d && strictly_above; ++k) {
        if (!(pt[k] > b[k])) strictly_above = false;
      }
      (strictly_above ? invalidated : survivors).push_back(std::move(b));
    }
    if (invalidated.empty()) {
      bounds = std::move(survivors);
      continue;
    }
    std::vector<ObjVec> candidates;
    for (const auto& b : invalidated) {
      for (int j = 0; j < d; ++j) {
        ObjVec c = b;
        c[j] = pt[j];
        candidates.push_back(std::move(c));
      }
    }
    // keep only minimal candidates: c is redundant when some other bound or
    // candidate is componentwise <= c
    bounds = survivors;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const ObjVec& c = candidates[i];
      bool redundant = false;
      for (const auto& e : survivors) {
        if (!redundant && std::equal(e.begin(), e.end(), c.begin(), [](double a, double b) { return a <= b; })) {
          redundant = true;
        }
      }
      for (std::size_t j = 0; j < candidates.size() && !redundant; ++j) {
        if (j == i) continue;
        const ObjVec& e = candidates[j];
        if (std::equal(e.begin(), e.end(), c.begin(), [](double a, double b) { return a <= b; }) && (e != c || j < i)) {
          redundant = true;
        }
      }
      if (!redundant) bounds.push_back(c);
    }
  }
  return LocalLowerBounds{std::move(bounds), d};
}

BoxPartition partition_auto(const ParetoApprox& p, const RefPoint& r) {
  switch (p.dim()) {
    case 2:
      return partition_2d(p, r);
    case 3:
      return partition_3d(p, r);
    default:
      return partition_dd(p, r);
  }
}

}  // namespace hvbo
