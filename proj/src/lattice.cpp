#include "gerst/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace gerst {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InfiniteQuotient: return "InfiniteQuotient";
    case ErrorCode::NotNested: return "NotNested";
    case ErrorCode::NotDownwardClosed: return "NotDownwardClosed";
    case ErrorCode::NotSkew: return "NotSkew";
    case ErrorCode::NonTransitiveJoinability: return "NonTransitiveJoinability";
    case ErrorCode::EmptyShape: return "EmptyShape";
    case ErrorCode::NotAntitone: return "NotAntitone";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidGluing: return "InvalidGluing";
    case ErrorCode::NonCommuting: return "NonCommuting";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InconsistencyDetected: return "InconsistencyDetected";
    case ErrorCode::InvalidTower: return "InvalidTower";
    case ErrorCode::InvalidFloorPlan: return "InvalidFloorPlan";
    case ErrorCode::NotScaffolded: return "NotScaffolded";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NoOverlap: return "NoOverlap";
    case ErrorCode::ObligationFailed: return "ObligationFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::AnomalyFound: return "AnomalyFound";
    case ErrorCode::UnsupportedKind: return "UnsupportedKind";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Points

Point zero_point(int dim) { return Point(static_cast<std::size_t>(dim), 0); }

Point unit_vector(int dim, int axis) {
  Point p = zero_point(dim);
  p.at(static_cast<std::size_t>(axis)) = 1;
  return p;
}

namespace {

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::DimensionMismatch,
                "dimension " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

void require_same_dim(const BoxSet& a, const BoxSet& b) {
  require_same_dim(static_cast<std::size_t>(a.dim()), static_cast<std::size_t>(b.dim()));
}

void require_capacity(std::size_t n) {
  if (n > kMaxBoxes) {
    throw Error(ErrorCode::TooLarge, std::to_string(n) + " boxes exceeds the cap");
  }
}

}  // namespace

Point operator+(const Point& a, const Point& b) {
  require_same_dim(a.size(), b.size());
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Point operator-(const Point& a, const Point& b) {
  require_same_dim(a.size(), b.size());
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool dominated(const Point& a, const Point& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Point join(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool is_nonnegative(const Point& p) {
  return std::all_of(p.begin(), p.end(), [](int c) { return c >= 0; });
}

std::string to_string(const Point& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// BoxSet

BoxSet::BoxSet(int dim) : dim_(dim) {
  if (dim < 1) throw Error(ErrorCode::DimensionMismatch, "dimension must be >= 1");
}

BoxSet::BoxSet(int dim, std::vector<Point> boxes) : BoxSet(dim) {
  require_capacity(boxes.size());
  for (const auto& b : boxes) require_same_dim(b.size(), static_cast<std::size_t>(dim));
  std::sort(boxes.begin(), boxes.end());
  boxes.erase(std::unique(boxes.begin(), boxes.end()), boxes.end());
  boxes_ = std::move(boxes);
}

bool BoxSet::contains(const Point& p) const {
  return std::binary_search(boxes_.begin(), boxes_.end(), p);
}

BoxSet BoxSet::translated(const Point& offset) const {
  require_same_dim(offset.size(), static_cast<std::size_t>(dim_));
  BoxSet r(dim_);
  r.boxes_.reserve(boxes_.size());
  for (const auto& b : boxes_) r.boxes_.push_back(b + offset);
  return r;  // translation preserves lex order
}

bool BoxSet::is_subset_of(const BoxSet& other) const {
  require_same_dim(*this, other);
  return std::includes(other.boxes_.begin(), other.boxes_.end(), boxes_.begin(), boxes_.end());
}

BoxSet set_union(const BoxSet& a, const BoxSet& b) {
  require_same_dim(a, b);
  std::vector<Point> r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return BoxSet(a.dim(), std::move(r));
}

BoxSet set_intersection(const BoxSet& a, const BoxSet& b) {
  require_same_dim(a, b);
  std::vector<Point> r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return BoxSet(a.dim(), std::move(r));
}

BoxSet set_difference(const BoxSet& a, const BoxSet& b) {
  require_same_dim(a, b);
  std::vector<Point> r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return BoxSet(a.dim(), std::move(r));
}

bool is_downward_closed(const BoxSet& s) {
  // Closure under the covering relation v - e_i suffices.
  for (const auto& b : s) {
    if (!is_nonnegative(b)) return false;
    Point v = b;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      --v[i];
      const bool ok = s.contains(v);
      ++v[i];
      if (!ok) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Young diagrams

YoungDiagram::YoungDiagram(BoxSet boxes) : boxes_(std::move(boxes)) {
  if (!is_downward_closed(boxes_)) {
    throw Error(ErrorCode::NotDownwardClosed, "box set is not a Young diagram");
  }
}

std::vector<Point> YoungDiagram::maximal_boxes() const {
  std::vector<Point> r;
  for (const auto& b : boxes_) {
    bool maximal = true;
    Point v = b;
    for (std::size_t i = 0; i < v.size() && maximal; ++i) {
      ++v[i];
      if (boxes_.contains(v)) maximal = false;
      --v[i];
    }
    if (maximal) r.push_back(b);
  }
  return r;
}

YoungDiagram diagram_intersection(const YoungDiagram& a, const YoungDiagram& b) {
  return YoungDiagram(set_intersection(a.boxes(), b.boxes()));
}

YoungDiagram diagram_union(const YoungDiagram& a, const YoungDiagram& b) {
  return YoungDiagram(set_union(a.boxes(), b.boxes()));
}

// ---------------------------------------------------------------------------
// Monomial ideals

MonomialIdeal::MonomialIdeal(int dim, std::vector<Point> generators) : dim_(dim) {
  if (dim < 1) throw Error(ErrorCode::DimensionMismatch, "dimension must be >= 1");
  for (const auto& g : generators) {
    require_same_dim(g.size(), static_cast<std::size_t>(dim));
    if (!is_nonnegative(g)) {
      throw Error(ErrorCode::DimensionMismatch, "negative exponent in " + to_string(g));
    }
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (const auto& g : generators) {
    const bool redundant = std::any_of(generators.begin(), generators.end(), [&](const Point& h) {
      return h != g && dominated(h, g);
    });
    if (!redundant) generators_.push_back(g);
  }
}

bool MonomialIdeal::contains_monomial(const Point& exponent) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const Point& g) { return dominated(g, exponent); });
}

bool MonomialIdeal::is_cofinite() const {
  for (int axis = 0; axis < dim_; ++axis) {
    const bool has_pure_power = std::any_of(generators_.begin(), generators_.end(), [&](const Point& g) {
      for (int j = 0; j < dim_; ++j) {
        if (j != axis && g[static_cast<std::size_t>(j)] != 0) return false;
      }
      return true;
    });
    if (!has_pure_power) return false;
  }
  return true;
}

MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_dim(static_cast<std::size_t>(a.dim()), static_cast<std::size_t>(b.dim()));
  std::vector<Point> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.dim(), std::move(gens));
}

MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_dim(static_cast<std::size_t>(a.dim()), static_cast<std::size_t>(b.dim()));
  std::vector<Point> gens;
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(g + h);
  }
  return MonomialIdeal(a.dim(), std::move(gens));
}

YoungDiagram diagram_from_ideal(const MonomialIdeal& ideal) {
  if (!ideal.is_cofinite()) {
    throw Error(ErrorCode::InfiniteQuotient, "some axis has no pure power generator");
  }
  const int n = ideal.dim();
  // The quotient lives inside the box bounded by the pure powers.
  Point bound(static_cast<std::size_t>(n), 0);
  for (const auto& g : ideal.generators()) {
    int nonzero = -1;
    int support = 0;
    for (int j = 0; j < n; ++j) {
      if (g[static_cast<std::size_t>(j)] != 0) {
        nonzero = j;
        ++support;
      }
    }
    if (support == 0) return YoungDiagram(n);  // unit ideal
    if (support == 1) {
      auto& b = bound[static_cast<std::size_t>(nonzero)];
      b = b == 0 ? g[static_cast<std::size_t>(nonzero)] : std::min(b, g[static_cast<std::size_t>(nonzero)]);
    }
  }
  std::size_t volume = 1;
  for (int b : bound) {
    volume *= static_cast<std::size_t>(b);
    require_capacity(volume);
  }
  std::vector<Point> boxes;
  Point a = zero_point(n);
  for (std::size_t k = 0; k < volume; ++k) {
    if (!ideal.contains_monomial(a)) boxes.push_back(a);
    for (std::size_t j = 0; j < a.size(); ++j) {  // odometer
      if (++a[j] < bound[j]) break;
      a[j] = 0;
    }
  }
  return YoungDiagram(BoxSet(n, std::move(boxes)));
}

MonomialIdeal ideal_from_diagram(const YoungDiagram& diagram) {
  const int n = diagram.dim();
  if (diagram.empty()) return MonomialIdeal(n, {zero_point(n)});
  // A minimal generator a lies outside the diagram while every a - e_i with
  // a_i > 0 lies inside; it is therefore some box + e_i.
  std::vector<Point> gens;
  for (const auto& b : diagram.boxes()) {
    for (int i = 0; i < n; ++i) {
      Point a = b;
      ++a[static_cast<std::size_t>(i)];
      if (diagram.contains(a)) continue;
      bool minimal = true;
      for (std::size_t j = 0; j < a.size() && minimal; ++j) {
        if (a[j] == 0) continue;
        --a[j];
        minimal = diagram.contains(a);
        ++a[j];
      }
      if (minimal) gens.push_back(a);
    }
  }
  return MonomialIdeal(n, std::move(gens));
}

YoungDiagram order_ideal(const BoxSet& t) {
  const int n = t.dim();
  std::vector<Point> boxes;
  for (const auto& top : t) {
    if (!is_nonnegative(top)) {
      throw Error(ErrorCode::NotDownwardClosed, "order ideal of a point outside N^n");
    }
    Point a = zero_point(n);
    while (true) {
      boxes.push_back(a);
      require_capacity(boxes.size());
      std::size_t j = 0;
      for (; j < a.size(); ++j) {
        if (++a[j] <= top[j]) break;
        a[j] = 0;
      }
      if (j == a.size()) break;
    }
  }
  return YoungDiagram(BoxSet(n, std::move(boxes)));
}

// ---------------------------------------------------------------------------
// Skew shapes

namespace {

Point min_corner(const BoxSet& s) {
  Point m = s.boxes().front();
  for (const auto& b : s) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], b[i]);
  }
  return m;
}

}  // namespace

bool is_skew(const BoxSet& s) {
  if (s.empty()) return true;
  // Convexity is translation invariant; move into N^n first.
  const BoxSet shifted = s.translated(zero_point(s.dim()) - min_corner(s));
  const YoungDiagram closure = order_ideal(shifted);
  return is_downward_closed(set_difference(closure.boxes(), shifted));
}

SkewShape::SkewShape(BoxSet boxes) : boxes_(std::move(boxes)) {
  for (const auto& b : boxes_) {
    if (!is_nonnegative(b)) throw Error(ErrorCode::NotSkew, "box outside N^n: " + to_string(b));
  }
  if (!is_skew(boxes_)) throw Error(ErrorCode::NotSkew, "box set is not convex");
}

AbstractSkewShape::AbstractSkewShape(BoxSet boxes) : boxes_(std::move(boxes)) {
  if (boxes_.empty()) return;
  if (boxes_.boxes().front() != zero_point(boxes_.dim())) {
    throw Error(ErrorCode::NotSkew, "lex-smallest box of an abstract shape must be the origin");
  }
  if (!is_skew(boxes_)) throw Error(ErrorCode::NotSkew, "box set is not convex");
}

AbstractSkewShape AbstractSkewShape::column(int height) {
  std::vector<Point> boxes;
  for (int z = 0; z < height; ++z) boxes.push_back({0, 0, z});
  return AbstractSkewShape(BoxSet(3, std::move(boxes)));
}

SkewShape skew_difference(const YoungDiagram& outer, const YoungDiagram& inner) {
  if (!inner.is_subset_of(outer)) throw Error(ErrorCode::NotNested, "inner diagram not contained in outer");
  return SkewShape(set_difference(outer.boxes(), inner.boxes()));
}

namespace {

bool has_common_upper_bound(const BoxSet& s, const Point& a, const Point& b) {
  const Point j = join(a, b);
  if (s.contains(j)) return true;
  return std::any_of(s.begin(), s.end(), [&](const Point& c) { return dominated(j, c); });
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::optional<std::pair<Point, Point>> non_joinable_pair(const BoxSet& s) {
  const auto& v = s.boxes();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (!has_common_upper_bound(s, v[i], v[j])) return std::make_pair(v[i], v[j]);
    }
  }
  return std::nullopt;
}

std::vector<SkewShape> connected_components(const SkewShape& shape, JoinabilityCheck check) {
  const auto& v = shape.boxes().boxes();
  UnionFind uf(v.size());
  // Everything below a common box is joined through it.
  for (std::size_t c = 0; c < v.size(); ++c) {
    for (std::size_t a = 0; a < v.size(); ++a) {
      if (a != c && dominated(v[a], v[c])) uf.unite(a, c);
    }
  }
  std::map<std::size_t, std::vector<Point>> classes;
  for (std::size_t a = 0; a < v.size(); ++a) classes[uf.find(a)].push_back(v[a]);

  std::vector<SkewShape> out;
  out.reserve(classes.size());
  for (auto& [root, boxes] : classes) {
    BoxSet component(shape.dim(), std::move(boxes));
    if (check == JoinabilityCheck::StrictPairwise) {
      if (auto bad = non_joinable_pair(component)) {
        throw Error(ErrorCode::NonTransitiveJoinability,
                    to_string(bad->first) + " and " + to_string(bad->second) +
                        " share a component but have no common upper bound in it");
      }
    }
    out.emplace_back(std::move(component));
  }
  return out;
}

bool is_connected(const BoxSet& s) {
  if (s.empty()) return true;
  const auto& v = s.boxes();
  UnionFind uf(v.size());
  for (std::size_t c = 0; c < v.size(); ++c) {
    for (std::size_t a = 0; a < v.size(); ++a) {
      if (a != c && dominated(v[a], v[c])) uf.unite(a, c);
    }
  }
  for (std::size_t a = 0; a < v.size(); ++a) {
    if (uf.find(a) != 0) return false;
  }
  return true;
}

NormalizedShape normalize(const BoxSet& boxes) {
  if (boxes.empty()) throw Error(ErrorCode::EmptyShape, "cannot normalize an empty shape");
  const Point lead = boxes.boxes().front();
  return {AbstractSkewShape(boxes.translated(zero_point(boxes.dim()) - lead)), lead};
}

NormalizedShape normalize(const SkewShape& shape) { return normalize(shape.boxes()); }

bool translation_match(const AbstractSkewShape& a, const AbstractSkewShape& b) { return a == b; }

// ---------------------------------------------------------------------------
// Height maps

bool is_antitone(const Eigen::ArrayXXi& v) {
  if (v.size() == 0) return true;
  if ((v < 0).any()) return false;
  // Outside the stored rectangle values are 0, so the last row and column
  // only need to be non-negative.
  if (v.rows() > 1 && ((v.topRows(v.rows() - 1) - v.bottomRows(v.rows() - 1)) < 0).any()) return false;
  if (v.cols() > 1 && ((v.leftCols(v.cols() - 1) - v.rightCols(v.cols() - 1)) < 0).any()) return false;
  return true;
}

std::pair<Eigen::ArrayXXi, Eigen::ArrayXXi> aligned(const Eigen::ArrayXXi& a, const Eigen::ArrayXXi& b) {
  const auto rows = std::max(a.rows(), b.rows());
  const auto cols = std::max(a.cols(), b.cols());
  Eigen::ArrayXXi pa = Eigen::ArrayXXi::Zero(rows, cols);
  Eigen::ArrayXXi pb = Eigen::ArrayXXi::Zero(rows, cols);
  pa.topLeftCorner(a.rows(), a.cols()) = a;
  pb.topLeftCorner(b.rows(), b.cols()) = b;
  return {pa, pb};
}

HeightMap::HeightMap(Eigen::ArrayXXi values) : values_(std::move(values)) {
  if (!is_antitone(values_)) throw Error(ErrorCode::NotAntitone, "height function is not antitone");
}

HeightMap HeightMap::from_rows(const std::vector<std::vector<int>>& rows) {
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.size());
  Eigen::ArrayXXi v = Eigen::ArrayXXi::Zero(static_cast<Eigen::Index>(width),
                                            static_cast<Eigen::Index>(rows.size()));
  for (std::size_t y = 0; y < rows.size(); ++y) {
    for (std::size_t x = 0; x < rows[y].size(); ++x) {
      v(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) = rows[y][x];
    }
  }
  return HeightMap(std::move(v));
}

int HeightMap::operator()(int x, int y) const {
  if (x < 0 || y < 0 || x >= width() || y >= height()) return 0;
  return values_(x, y);
}

std::vector<std::vector<int>> HeightMap::rows() const {
  std::vector<std::vector<int>> out;
  for (int y = 0; y < height(); ++y) {
    std::vector<int> row;
    for (int x = 0; x < width(); ++x) row.push_back(values_(x, y));
    while (!row.empty() && row.back() == 0) row.pop_back();
    out.push_back(std::move(row));
  }
  while (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

HeightMap heights_from_diagram(const YoungDiagram& d) {
  if (d.dim() != 3) throw Error(ErrorCode::DimensionMismatch, "height maps describe 3D diagrams");
  int w = 0, h = 0;
  for (const auto& b : d.boxes()) {
    w = std::max(w, b[0] + 1);
    h = std::max(h, b[1] + 1);
  }
  Eigen::ArrayXXi v = Eigen::ArrayXXi::Zero(w, h);
  for (const auto& b : d.boxes()) v(b[0], b[1]) += 1;
  return HeightMap(std::move(v));
}

YoungDiagram diagram_from_heights(const HeightMap& h) {
  std::vector<Point> boxes;
  require_capacity(static_cast<std::size_t>(h.total()));
  boxes.reserve(static_cast<std::size_t>(h.total()));
  for (int x = 0; x < h.width(); ++x) {
    for (int y = 0; y < h.height(); ++y) {
      for (int z = 0; z < h(x, y); ++z) boxes.push_back({x, y, z});
    }
  }
  return YoungDiagram(BoxSet(3, std::move(boxes)));
}

}  // namespace gerst
