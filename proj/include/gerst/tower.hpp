#pragma once

// Towers: gluing data in three variables whose components are 1 x 1 x n
// columns, the partial order on compatible towers, and scaffolding.

#include <string_view>
#include <vector>

#include "gerst/gluing.hpp"
#include "gerst/lattice.hpp"

namespace gerst {

struct Column {
  int height = 1;
  Point base;  // lowest box of the column, in N^3
  friend bool operator==(const Column&, const Column&) = default;
};

struct Tower {
  YoungDiagram lambda{3};
  std::vector<Column> columns;

  long nu_size() const;
  friend bool operator==(const Tower&, const Tower&) = default;
};

struct CompatibleTower {
  YoungDiagram lambda{3};
  YoungDiagram mu{3};
  std::vector<int> heights;
  std::vector<Point> b;
  std::vector<Point> c;

  Tower left() const;
  Tower right() const;
  long nu_size() const;
  friend bool operator==(const CompatibleTower&, const CompatibleTower&) = default;
};

/// Containment, disjointness ("a") and upward saturation ("b"), with
/// witnesses. Shape problems (non-positive height, wrong dimension) are
/// reported under "shape" and "dimension".
ValidationReport validate_tower(const Tower& t);
ValidationReport validate_tower(const CompatibleTower& t);

/// The same data as a generic gluing datum.
GluingDatum to_gluing(const CompatibleTower& t);

enum class Order { LessEq, GreaterEq, Equal, Incomparable };
std::string_view to_string(Order o);

/// s <= t: lambda and mu nested, an injection of columns into columns that
/// are at least as tall, and deficiency(s) <= deficiency(t).
bool tower_leq(const CompatibleTower& s, const CompatibleTower& t);
Order compare_towers(const CompatibleTower& s, const CompatibleTower& t);

/// Replace lambda by the order ideal of the placed columns. Throws InvalidTower.
Tower scaffold(const Tower& t);
CompatibleTower scaffold(const CompatibleTower& t);
bool is_scaffolded(const Tower& t);
bool is_scaffolded(const CompatibleTower& t);

/// |lambda n mu| - sum n_i. Throws InvalidTower.
long deficiency_of_tower(const CompatibleTower& t);

}  // namespace gerst
