#pragma once

// Lattice points, Young diagrams of any dimension, monomial ideals and skew
// shapes. Every container here is an immutable value once constructed.

#include <Eigen/Core>

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gerst/error.hpp"

namespace gerst {

/// A point of Z^n. Most structures hold points of N^n; offsets of abstract
/// skew shapes may be negative.
using Point = std::vector<int>;

/// Upper bound on the number of boxes any single structure may hold.
inline constexpr std::size_t kMaxBoxes = 1'000'000;

Point zero_point(int dim);
Point unit_vector(int dim, int axis);
Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);

/// Coordinatewise a <= b.
bool dominated(const Point& a, const Point& b);
/// Coordinatewise maximum.
Point join(const Point& a, const Point& b);
bool is_nonnegative(const Point& p);
std::string to_string(const Point& p);

/// Finite duplicate-free set of points sharing one dimension, stored sorted
/// in lex order (coordinate 1 most significant).
class BoxSet {
 public:
  using const_iterator = std::vector<Point>::const_iterator;

  BoxSet() = default;
  explicit BoxSet(int dim);
  BoxSet(int dim, std::vector<Point> boxes);

  int dim() const { return dim_; }
  std::size_t size() const { return boxes_.size(); }
  bool empty() const { return boxes_.empty(); }
  bool contains(const Point& p) const;
  const std::vector<Point>& boxes() const { return boxes_; }
  const_iterator begin() const { return boxes_.begin(); }
  const_iterator end() const { return boxes_.end(); }

  /// Translate every box by `offset`.
  BoxSet translated(const Point& offset) const;
  bool is_subset_of(const BoxSet& other) const;

  friend bool operator==(const BoxSet&, const BoxSet&) = default;

 private:
  int dim_ = 1;
  std::vector<Point> boxes_;
};

BoxSet set_union(const BoxSet& a, const BoxSet& b);
BoxSet set_intersection(const BoxSet& a, const BoxSet& b);
BoxSet set_difference(const BoxSet& a, const BoxSet& b);
bool is_downward_closed(const BoxSet& s);

class YoungDiagram {
 public:
  YoungDiagram() = default;
  explicit YoungDiagram(int dim) : boxes_(dim) {}
  /// Throws NotDownwardClosed unless `boxes` is a down-set of N^n.
  explicit YoungDiagram(BoxSet boxes);

  int dim() const { return boxes_.dim(); }
  std::size_t size() const { return boxes_.size(); }
  bool empty() const { return boxes_.empty(); }
  bool contains(const Point& p) const { return boxes_.contains(p); }
  const BoxSet& boxes() const { return boxes_; }
  bool is_subset_of(const YoungDiagram& other) const { return boxes_.is_subset_of(other.boxes_); }

  /// Maximal boxes under the coordinatewise order.
  std::vector<Point> maximal_boxes() const;

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;

 private:
  BoxSet boxes_;
};

YoungDiagram diagram_intersection(const YoungDiagram& a, const YoungDiagram& b);
YoungDiagram diagram_union(const YoungDiagram& a, const YoungDiagram& b);
inline std::size_t count(const YoungDiagram& d) { return d.size(); }
inline std::size_t count(const BoxSet& s) { return s.size(); }

/// Monomial ideal stored by the exponent vectors of its minimal generators.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Redundant generators are dropped; the stored set is an antichain.
  MonomialIdeal(int dim, std::vector<Point> generators);

  int dim() const { return dim_; }
  const std::vector<Point>& generators() const { return generators_; }
  bool contains_monomial(const Point& exponent) const;
  /// S/I is finite dimensional iff every axis carries a pure power generator.
  bool is_cofinite() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int dim_ = 1;
  std::vector<Point> generators_;
};

/// Sum of ideals: union of generator sets.
MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b);
/// Product of ideals.
MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b);

YoungDiagram diagram_from_ideal(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_diagram(const YoungDiagram& diagram);
YoungDiagram order_ideal(const BoxSet& t);

/// A set of the form outer \ inner for nested Young diagrams.
class SkewShape {
 public:
  SkewShape() = default;
  explicit SkewShape(int dim) : boxes_(dim) {}
  /// Throws NotSkew unless `boxes` is convex in N^n.
  explicit SkewShape(BoxSet boxes);

  int dim() const { return boxes_.dim(); }
  std::size_t size() const { return boxes_.size(); }
  bool empty() const { return boxes_.empty(); }
  const BoxSet& boxes() const { return boxes_; }

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  BoxSet boxes_;
};

/// Realizable as lambda \ lambda' with lambda' a down-set inside lambda.
bool is_skew(const BoxSet& s);

/// Translation class representative: lex-smallest point sits at the origin.
class AbstractSkewShape {
 public:
  AbstractSkewShape() = default;
  /// Throws NotSkew if the boxes are not a translated skew shape or the
  /// lex-smallest box is not the origin.
  explicit AbstractSkewShape(BoxSet boxes);

  int dim() const { return boxes_.dim(); }
  std::size_t size() const { return boxes_.size(); }
  bool empty() const { return boxes_.empty(); }
  const BoxSet& boxes() const { return boxes_; }

  /// The 1 x 1 x height column {(0,0,z) : z < height}.
  static AbstractSkewShape column(int height);

  friend bool operator==(const AbstractSkewShape&, const AbstractSkewShape&) = default;

 private:
  BoxSet boxes_;
};

SkewShape skew_difference(const YoungDiagram& outer, const YoungDiagram& inner);

enum class JoinabilityCheck {
  /// Classes of the transitive closure of direct joinability.
  TransitiveClosure,
  /// Additionally require every pair inside a class to be directly joinable;
  /// throws NonTransitiveJoinability otherwise.
  StrictPairwise,
};

/// Two boxes are directly joinable when some box of the shape dominates both.
std::vector<SkewShape> connected_components(
    const SkewShape& shape, JoinabilityCheck check = JoinabilityCheck::TransitiveClosure);

/// First pair (in lex order) of boxes without a common upper bound in `s`.
std::optional<std::pair<Point, Point>> non_joinable_pair(const BoxSet& s);
bool is_connected(const BoxSet& s);

struct NormalizedShape {
  AbstractSkewShape shape;
  Point offset;
};

/// Translate so the lex-smallest box is the origin. Throws EmptyShape.
NormalizedShape normalize(const SkewShape& shape);
NormalizedShape normalize(const BoxSet& boxes);

bool translation_match(const AbstractSkewShape& a, const AbstractSkewShape& b);

/// Antitone, finitely supported N^2 -> N. Stored densely; x indexes rows of
/// the array, y its columns. Reads outside the stored rectangle are 0.
class HeightMap {
 public:
  HeightMap() = default;
  /// Throws NotAntitone if `values` is not antitone or has negative entries.
  explicit HeightMap(Eigen::ArrayXXi values);
  /// Rows are listed bottom-first: rows[y][x].
  static HeightMap from_rows(const std::vector<std::vector<int>>& rows);

  int operator()(int x, int y) const;
  int width() const { return static_cast<int>(values_.rows()); }
  int height() const { return static_cast<int>(values_.cols()); }
  const Eigen::ArrayXXi& values() const { return values_; }
  /// Bottom-first ragged rows with trailing zeros removed.
  std::vector<std::vector<int>> rows() const;
  long total() const { return values_.size() == 0 ? 0 : static_cast<long>(values_.sum()); }
  bool empty() const { return total() == 0; }

  friend bool operator==(const HeightMap& a, const HeightMap& b) { return a.rows() == b.rows(); }

 private:
  Eigen::ArrayXXi values_;
};

bool is_antitone(const Eigen::ArrayXXi& values);
/// Pad both arrays to a common shape with zeros.
std::pair<Eigen::ArrayXXi, Eigen::ArrayXXi> aligned(const Eigen::ArrayXXi& a,
                                                    const Eigen::ArrayXXi& b);

HeightMap heights_from_diagram(const YoungDiagram& d);
YoungDiagram diagram_from_heights(const HeightMap& h);

}  // namespace gerst
