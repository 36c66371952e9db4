#include "gerst/tower.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace gerst {

long Tower::nu_size() const {
  long total = 0;
  for (const auto& col : columns) total += col.height;
  return total;
}

long CompatibleTower::nu_size() const { return std::accumulate(heights.begin(), heights.end(), 0L); }

Tower CompatibleTower::left() const {
  Tower t{lambda, {}};
  for (std::size_t i = 0; i < heights.size(); ++i) t.columns.push_back({heights[i], b[i]});
  return t;
}

Tower CompatibleTower::right() const {
  Tower t{mu, {}};
  for (std::size_t i = 0; i < heights.size(); ++i) t.columns.push_back({heights[i], c[i]});
  return t;
}

namespace {

// Shape checks shared by both validators. Returns false when placements
// cannot be examined.
bool check_columns(const YoungDiagram& diagram, const std::vector<Column>& columns,
                   std::vector<AbstractSkewShape>& shapes, std::vector<Point>& offsets,
                   ValidationReport& report) {
  if (diagram.dim() != 3) {
    report.violations.push_back({"dimension", -1, {}, {}, "tower diagrams live in N^3"});
    return false;
  }
  bool ok = true;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    const int ci = static_cast<int>(i);
    if (columns[i].base.size() != 3) {
      report.violations.push_back({"dimension", ci, {}, {}, "column base is not a point of N^3"});
      ok = false;
    } else if (columns[i].height <= 0) {
      report.violations.push_back({"shape", ci, {}, {}, "column height must be positive"});
      ok = false;
    } else {
      shapes.push_back(AbstractSkewShape::column(columns[i].height));
      offsets.push_back(columns[i].base);
    }
  }
  return ok;
}

}  // namespace

ValidationReport validate_tower(const Tower& t) {
  ValidationReport report;
  std::vector<AbstractSkewShape> shapes;
  std::vector<Point> offsets;
  if (check_columns(t.lambda, t.columns, shapes, offsets, report)) {
    check_placements(t.lambda, shapes, offsets, "a", "b", report);
  }
  return report;
}

ValidationReport validate_tower(const CompatibleTower& t) {
  ValidationReport report;
  if (t.b.size() != t.heights.size() || t.c.size() != t.heights.size()) {
    report.violations.push_back({"dimension", -1, {}, {}, "heights and offsets differ in length"});
    return report;
  }
  std::vector<AbstractSkewShape> shapes, unused;
  std::vector<Point> bs, cs;
  const bool left = check_columns(t.lambda, t.left().columns, shapes, bs, report);
  const bool right = check_columns(t.mu, t.right().columns, unused, cs, report);
  if (left && right) {
    check_placements(t.lambda, shapes, bs, "a", "b", report);
    check_placements(t.mu, shapes, cs, "c", "d", report);
  }
  return report;
}

GluingDatum to_gluing(const CompatibleTower& t) {
  GluingDatum g;
  g.n = 3;
  g.lambda = t.lambda;
  g.mu = t.mu;
  for (std::size_t i = 0; i < t.heights.size(); ++i) {
    g.components.push_back({AbstractSkewShape::column(t.heights[i]), t.b[i], t.c[i]});
  }
  return g;
}

std::string_view to_string(Order o) {
  switch (o) {
    case Order::LessEq: return "LESS_EQ";
    case Order::GreaterEq: return "GREATER_EQ";
    case Order::Equal: return "EQUAL";
    case Order::Incomparable: return "INCOMPARABLE";
  }
  return "?";
}

namespace {

long raw_deficiency(const CompatibleTower& t) {
  return static_cast<long>(diagram_intersection(t.lambda, t.mu).size()) - t.nu_size();
}

// Columns are determined by their heights, so an injection with nu_i inside
// nu'_iota(i) exists iff the sorted heights dominate pairwise.
bool columns_inject(std::vector<int> small, std::vector<int> large) {
  if (small.size() > large.size()) return false;
  std::sort(small.begin(), small.end(), std::greater<>());
  std::sort(large.begin(), large.end(), std::greater<>());
  for (std::size_t k = 0; k < small.size(); ++k) {
    if (small[k] > large[k]) return false;
  }
  return true;
}

}  // namespace

bool tower_leq(const CompatibleTower& s, const CompatibleTower& t) {
  return s.lambda.is_subset_of(t.lambda) && s.mu.is_subset_of(t.mu) && columns_inject(s.heights, t.heights) &&
         raw_deficiency(s) <= raw_deficiency(t);
}

Order compare_towers(const CompatibleTower& s, const CompatibleTower& t) {
  const bool le = tower_leq(s, t);
  const bool ge = tower_leq(t, s);
  if (le && ge) return Order::Equal;
  if (le) return Order::LessEq;
  if (ge) return Order::GreaterEq;
  return Order::Incomparable;
}

namespace {

BoxSet placed_columns(const std::vector<Column>& columns) {
  std::vector<Point> boxes;
  for (const auto& col : columns) {
    for (int z = 0; z < col.height; ++z) boxes.push_back({col.base[0], col.base[1], col.base[2] + z});
  }
  return BoxSet(3, std::move(boxes));
}

void require_valid(const ValidationReport& report) {
  if (!report.valid()) throw Error(ErrorCode::InvalidTower, report.summary());
}

}  // namespace

Tower scaffold(const Tower& t) {
  require_valid(validate_tower(t));
  return {order_ideal(placed_columns(t.columns)), t.columns};
}

CompatibleTower scaffold(const CompatibleTower& t) {
  require_valid(validate_tower(t));
  CompatibleTower s = t;
  s.lambda = order_ideal(placed_columns(t.left().columns));
  s.mu = order_ideal(placed_columns(t.right().columns));
  return s;
}

bool is_scaffolded(const Tower& t) {
  if (t.lambda.dim() != 3) return false;
  for (const auto& col : t.columns) {
    if (col.base.size() != 3 || col.height <= 0) return false;
  }
  return t.lambda == order_ideal(placed_columns(t.columns));
}

bool is_scaffolded(const CompatibleTower& t) {
  if (t.b.size() != t.heights.size() || t.c.size() != t.heights.size()) return false;
  return is_scaffolded(t.left()) && is_scaffolded(t.right());
}

long deficiency_of_tower(const CompatibleTower& t) {
  require_valid(validate_tower(t));
  return raw_deficiency(t);
}

}  // namespace gerst
