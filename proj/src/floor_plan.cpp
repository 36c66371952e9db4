#include "gerst/floor_plan.hpp"

#include <algorithm>

namespace gerst {

void check_plan(const FloorPlan& p) {
  if (p.P.size() != p.h.size()) {
    throw Error(ErrorCode::InvalidFloorPlan, "P has " + std::to_string(p.P.size()) + " points but h has " +
                                                 std::to_string(p.h.size()) + " heights");
  }
  for (std::size_t i = 0; i < p.P.size(); ++i) {
    if (p.P[i].size() != 2 || !is_nonnegative(p.P[i])) {
      throw Error(ErrorCode::InvalidFloorPlan, "point " + std::to_string(i) + " is not in N^2");
    }
    if (p.h[i] <= 0) throw Error(ErrorCode::InvalidFloorPlan, "height " + std::to_string(i) + " is not positive");
  }
}

void check_plan(const CompatibleFloorPlan& p) {
  check_plan(p.left());
  check_plan(p.right());
}

bool has_repeated_points(const std::vector<Point>& points) {
  auto sorted = points;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

long score(const FloorPlan& p, const NortheastPath& path) {
  long total = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (std::find(path.vertices.begin(), path.vertices.end(), p.P[i]) != path.vertices.end()) total += p.h[i];
  }
  return total;
}

namespace {

Eigen::ArrayXXi weights(const FloorPlan& p) {
  int w = 0, h = 0;
  for (const auto& q : p.P) {
    w = std::max(w, q[0] + 1);
    h = std::max(h, q[1] + 1);
  }
  Eigen::ArrayXXi out = Eigen::ArrayXXi::Zero(w, h);
  for (std::size_t i = 0; i < p.size(); ++i) out(p.P[i][0], p.P[i][1]) += p.h[i];
  return out;
}

int at(const Eigen::ArrayXXi& a, int x, int y) {
  return x < a.rows() && y < a.cols() ? a(x, y) : 0;
}

}  // namespace

HeightMap max_score_table(const FloorPlan& p) {
  check_plan(p);
  Eigen::ArrayXXi ms = weights(p);
  // Decreasing x + y: both successors are final before a cell is read.
  for (int x = static_cast<int>(ms.rows()) - 1; x >= 0; --x) {
    for (int y = static_cast<int>(ms.cols()) - 1; y >= 0; --y) {
      ms(x, y) += std::max(at(ms, x + 1, y), at(ms, x, y + 1));
    }
  }
  return HeightMap(std::move(ms));
}

NortheastPath winning_path(const FloorPlan& p, const Point& q) {
  if (q.size() != 2 || !is_nonnegative(q)) throw Error(ErrorCode::InvalidFloorPlan, "origin is not in N^2");
  const HeightMap ms = max_score_table(p);
  const Eigen::ArrayXXi w = weights(p);
  NortheastPath path{{q}};
  Point cur = q;
  while (ms(cur[0], cur[1]) - at(w, cur[0], cur[1]) > 0) {
    const int east = ms(cur[0] + 1, cur[1]);
    const int north = ms(cur[0], cur[1] + 1);
    cur = east >= north ? Point{cur[0] + 1, cur[1]} : Point{cur[0], cur[1] + 1};
    path.vertices.push_back(cur);
  }
  return path;
}

Tower realize(const FloorPlan& p) {
  check_plan(p);
  if (has_repeated_points(p.P)) throw Error(ErrorCode::InvalidFloorPlan, "repeated position in P");
  const HeightMap ms = max_score_table(p);
  Tower t{diagram_from_heights(ms), {}};
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int x = p.P[i][0], y = p.P[i][1];
    t.columns.push_back({p.h[i], {x, y, ms(x, y) - p.h[i]}});
  }
  return t;
}

CompatibleTower realize_compatible(const CompatibleFloorPlan& p) {
  const Tower l = realize(p.left());
  const Tower r = realize(p.right());
  CompatibleTower t{l.lambda, r.lambda, p.h, {}, {}};
  for (std::size_t i = 0; i < p.size(); ++i) {
    t.b.push_back(l.columns[i].base);
    t.c.push_back(r.columns[i].base);
  }
  return t;
}

FloorPlan floor_plan_of(const Tower& t) {
  const auto report = validate_tower(t);
  if (!report.valid()) throw Error(ErrorCode::InvalidTower, report.summary());
  if (!is_scaffolded(t)) throw Error(ErrorCode::NotScaffolded, "lambda is larger than the order ideal of its columns");
  FloorPlan p;
  for (const auto& col : t.columns) {
    p.P.push_back({col.base[0], col.base[1]});
    p.h.push_back(col.height);
  }
  return p;
}

CompatibleFloorPlan floor_plan_of(const CompatibleTower& t) {
  const FloorPlan l = floor_plan_of(t.left());
  const FloorPlan r = floor_plan_of(t.right());
  return {l.P, r.P, t.heights};
}

namespace {

template <typename Keep>
BoxSet support_filter(const FloorPlan& p, Keep keep) {
  const HeightMap ms = max_score_table(p);
  std::vector<Point> out;
  for (int x = 0; x < ms.width(); ++x) {
    for (int y = 0; y < ms.height(); ++y) {
      if (ms(x, y) > 0 && keep(ms(x + 1, y) > 0, ms(x, y + 1) > 0)) out.push_back({x, y});
    }
  }
  return BoxSet(2, std::move(out));
}

}  // namespace

BoxSet support(const FloorPlan& p) {
  return support_filter(p, [](bool, bool) { return true; });
}

BoxSet border(const FloorPlan& p) {
  return support_filter(p, [](bool east, bool north) { return !east || !north; });
}

BoxSet support_maxima(const FloorPlan& p) {
  return support_filter(p, [](bool east, bool north) { return !east && !north; });
}

}  // namespace gerst
