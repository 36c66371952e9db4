#pragma once

// Floor plans: the two-dimensional shadow of a scaffolded tower. F projects
// a tower to its column positions and heights; T realizes a plan as the
// smallest tower over it via the max-score table.

#include <vector>

#include "gerst/lattice.hpp"
#include "gerst/tower.hpp"

namespace gerst {

struct FloorPlan {
  std::vector<Point> P;  // points of N^2
  std::vector<int> h;

  std::size_t size() const { return P.size(); }
  bool empty() const { return P.empty(); }
  friend bool operator==(const FloorPlan&, const FloorPlan&) = default;
};

struct CompatibleFloorPlan {
  std::vector<Point> P;
  std::vector<Point> Q;
  std::vector<int> h;

  std::size_t size() const { return h.size(); }
  bool empty() const { return h.empty(); }
  FloorPlan left() const { return {P, h}; }
  FloorPlan right() const { return {Q, h}; }
  friend bool operator==(const CompatibleFloorPlan&, const CompatibleFloorPlan&) = default;
};

struct NortheastPath {
  std::vector<Point> vertices;
};

/// Throws InvalidFloorPlan on length mismatch, non-positive heights or
/// points outside N^2. Repeated points are allowed here.
void check_plan(const FloorPlan& p);
void check_plan(const CompatibleFloorPlan& p);
bool has_repeated_points(const std::vector<Point>& points);

/// Sum of h_i over the p_i the path visits.
long score(const FloorPlan& p, const NortheastPath& path);

/// maxscore over the bounding rectangle of P, 0 elsewhere.
HeightMap max_score_table(const FloorPlan& p);

/// A path from q whose score is maxscore(q). Ties go to the e_1 step; the
/// path stops once nothing further can be scored.
NortheastPath winning_path(const FloorPlan& p, const Point& q);

/// The map T. Throws InvalidFloorPlan, including for repeated points, which
/// would stack two columns on one base.
Tower realize(const FloorPlan& p);
CompatibleTower realize_compatible(const CompatibleFloorPlan& p);

/// The map F. Throws NotScaffolded (or InvalidTower for an invalid tower).
FloorPlan floor_plan_of(const Tower& t);
CompatibleFloorPlan floor_plan_of(const CompatibleTower& t);

/// {q : maxscore(q) > 0} and the points of it with q+e_1 or q+e_2 outside.
BoxSet support(const FloorPlan& p);
BoxSet border(const FloorPlan& p);
/// Points of the support with both q+e_1 and q+e_2 outside it.
BoxSet support_maxima(const FloorPlan& p);

}  // namespace gerst
