#include "gerst/gluing.hpp"

#include <boost/multiprecision/eigen.hpp>

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <sstream>

#include "gerst/row_space.hpp"

namespace gerst {

std::size_t GluingDatum::glued_size() const {
  std::size_t total = 0;
  for (const auto& comp : components) total += comp.shape.size();
  return total;
}

std::string ValidationReport::summary() const {
  if (valid()) return "valid";
  std::ostringstream os;
  for (const auto& v : violations) {
    os << "[" << v.property << "]";
    if (v.component >= 0) os << " component " << v.component;
    if (!v.v.empty()) os << " v=" << to_string(v.v);
    if (!v.w.empty()) os << " w=" << to_string(v.w);
    os << ": " << v.message << "\n";
  }
  return os.str();
}

void check_placements(const YoungDiagram& diagram, const std::vector<AbstractSkewShape>& shapes,
                      const std::vector<Point>& offsets, const std::string& contain_tag,
                      const std::string& saturate_tag, ValidationReport& report) {
  std::map<Point, int> owner;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    const int ci = static_cast<int>(i);
    const BoxSet placed = shapes[i].boxes().translated(offsets[i]);
    for (const auto& v : shapes[i].boxes()) {
      const Point u = v + offsets[i];
      if (!diagram.contains(u)) {
        report.violations.push_back({contain_tag, ci, v, {}, "placed box " + to_string(u) + " lies outside the diagram"});
      }
      auto [it, inserted] = owner.emplace(u, ci);
      if (!inserted) {
        report.violations.push_back({contain_tag, ci, v, {},
                                     "placed box " + to_string(u) + " overlaps component " +
                                         std::to_string(it->second)});
      }
    }
    // Anything of the diagram above a placed box must itself be placed.
    for (const auto& u : diagram.boxes()) {
      if (placed.contains(u)) continue;
      for (const auto& v : shapes[i].boxes()) {
        const Point base = v + offsets[i];
        if (dominated(base, u)) {
          report.violations.push_back({saturate_tag, ci, v, u - base,
                                       "diagram box " + to_string(u) + " sits above the component but outside it"});
          break;
        }
      }
    }
  }
}

ValidationReport validate_gluing(const GluingDatum& g) {
  ValidationReport report;
  if (g.lambda.dim() != g.n || g.mu.dim() != g.n) {
    report.violations.push_back({"dimension", -1, {}, {}, "diagram dimension differs from n"});
    return report;
  }
  std::vector<AbstractSkewShape> shapes;
  std::vector<Point> bs, cs;
  for (std::size_t i = 0; i < g.components.size(); ++i) {
    const auto& comp = g.components[i];
    const int ci = static_cast<int>(i);
    if (comp.shape.dim() != g.n || comp.b.size() != static_cast<std::size_t>(g.n) ||
        comp.c.size() != static_cast<std::size_t>(g.n)) {
      report.violations.push_back({"dimension", ci, {}, {}, "component dimension differs from n"});
      return report;
    }
    if (comp.shape.empty()) {
      report.violations.push_back({"shape", ci, {}, {}, "component shape is empty"});
    } else if (auto bad = non_joinable_pair(comp.shape.boxes()); bad && !is_connected(comp.shape.boxes())) {
      report.violations.push_back({"shape", ci, bad->first, bad->second, "component shape is not connected"});
    }
    shapes.push_back(comp.shape);
    bs.push_back(comp.b);
    cs.push_back(comp.c);
  }
  check_placements(g.lambda, shapes, bs, "a", "b", report);
  check_placements(g.mu, shapes, cs, "c", "d", report);
  return report;
}

GluingDatum gluing_from_ideals(const MonomialIdeal& i, const MonomialIdeal& j, const MonomialIdeal& k,
                               const MonomialIdeal& l) {
  GluingDatum g;
  g.n = i.dim();
  g.lambda = diagram_from_ideal(i);
  g.mu = diagram_from_ideal(j);
  // K + I and L + J keep the inner diagrams finite even when K or L is not
  // cofinite on its own; the skew sets are unchanged.
  const auto left = connected_components(skew_difference(g.lambda, diagram_from_ideal(k + i)));
  const auto right = connected_components(skew_difference(g.mu, diagram_from_ideal(l + j)));
  if (left.size() != right.size()) {
    throw Error(ErrorCode::InvalidGluing, "K/I and L/J have different numbers of components");
  }
  std::vector<bool> used(right.size(), false);
  for (const auto& comp : left) {
    const auto a = normalize(comp);
    bool matched = false;
    for (std::size_t r = 0; r < right.size() && !matched; ++r) {
      if (used[r]) continue;
      const auto b = normalize(right[r]);
      if (translation_match(a.shape, b.shape)) {
        used[r] = true;
        matched = true;
        g.components.push_back({a.shape, a.offset, b.offset});
      }
    }
    if (!matched) {
      throw Error(ErrorCode::InvalidGluing, "no translation-equivalent partner for component at " +
                                                to_string(a.offset));
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Glued module

GluedModule build_module(const GluingDatum& g) {
  const auto report = validate_gluing(g);
  if (!report.valid()) throw Error(ErrorCode::InvalidGluing, report.summary());

  GluedModule m;
  m.n = g.n;
  std::map<Point, int> lambda_index;
  std::map<Point, int> mu_index;
  std::map<Point, Point> glued;  // mu-side placed box -> lambda-side representative
  for (const auto& comp : g.components) {
    for (const auto& v : comp.shape.boxes()) glued.emplace(v + comp.c, v + comp.b);
  }
  const auto& lam = g.lambda.boxes().boxes();
  for (auto it = lam.rbegin(); it != lam.rend(); ++it) {
    lambda_index.emplace(*it, m.dim());
    m.basis.push_back({Side::Lambda, *it});
  }
  const auto& mu = g.mu.boxes().boxes();
  for (auto it = mu.rbegin(); it != mu.rend(); ++it) {
    if (glued.count(*it)) continue;
    mu_index.emplace(*it, m.dim());
    m.basis.push_back({Side::Mu, *it});
  }

  m.action.assign(static_cast<std::size_t>(g.n), std::vector<int>(m.basis.size(), -1));
  for (int i = 0; i < g.n; ++i) {
    const Point e = unit_vector(g.n, i);
    auto& act = m.action[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < m.basis.size(); ++k) {
      const Point t = m.basis[k].box + e;
      if (m.basis[k].side == Side::Lambda) {
        if (auto it = lambda_index.find(t); it != lambda_index.end()) act[k] = it->second;
      } else if (g.mu.contains(t)) {
        if (auto it = glued.find(t); it != glued.end()) {
          act[k] = lambda_index.at(it->second);
        } else {
          act[k] = mu_index.at(t);
        }
      }
    }
  }
  return m;
}

bool commutes(const IntMatrix& a, const IntMatrix& b) { return a * b == b * a; }

bool is_partial_map(const IntMatrix& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    int ones = 0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (a(i, j) == 0) continue;
      if (a(i, j) != 1 || ++ones > 1) return false;
    }
  }
  return true;
}

MatrixTuple multiplication_matrices(const GluedModule& m) {
  MatrixTuple t;
  t.dim = m.dim();
  for (const auto& act : m.action) {
    IntMatrix a = IntMatrix::Zero(t.dim, t.dim);
    for (std::size_t k = 0; k < act.size(); ++k) {
      if (act[k] >= 0) a(act[k], static_cast<Eigen::Index>(k)) = 1;
    }
    t.matrices.push_back(std::move(a));
  }
  for (std::size_t i = 0; i < t.matrices.size(); ++i) {
    for (std::size_t j = i + 1; j < t.matrices.size(); ++j) {
      if (!commutes(t.matrices[i], t.matrices[j])) {
        throw Error(ErrorCode::NonCommuting, "x_" + std::to_string(i + 1) + " and x_" +
                                                 std::to_string(j + 1) + " actions do not commute");
      }
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Word closure

namespace {

template <typename Scalar>
using ScalarMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
void guard_product(const ScalarMatrix<Scalar>& a, const ScalarMatrix<Scalar>& b) {
  if constexpr (std::is_same_v<Scalar, std::int64_t>) {
    const __int128 ma = a.size() ? a.cwiseAbs().maxCoeff() : 0;
    const __int128 mb = b.size() ? b.cwiseAbs().maxCoeff() : 0;
    if (ma * mb * a.cols() > std::numeric_limits<std::int64_t>::max()) {
      throw Error(ErrorCode::Overflow, "matrix product may exceed int64");
    }
  }
}

// Eigen's product kernels do not instantiate for cpp_int with this boost, so
// the big-integer path multiplies by hand, skipping zeros.
template <typename Scalar>
ScalarMatrix<Scalar> multiply(const ScalarMatrix<Scalar>& a, const ScalarMatrix<Scalar>& b) {
  if constexpr (std::is_same_v<Scalar, std::int64_t>) {
    return a * b;
  } else {
    ScalarMatrix<Scalar> r = ScalarMatrix<Scalar>::Zero(a.rows(), b.cols());
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      for (Eigen::Index k = 0; k < a.cols(); ++k) {
        if (b(k, j) == 0) continue;
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
          if (a(i, k) != 0) r(i, j) += a(i, k) * b(k, j);
        }
      }
    }
    return r;
  }
}

template <typename Scalar>
bool partial_map(const ScalarMatrix<Scalar>& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    int ones = 0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (a(i, j) == 0) continue;
      if (a(i, j) != 1 || ++ones > 1) return false;
    }
  }
  return true;
}

template <typename Scalar>
AlgebraClosure closure_with(const MatrixTuple& t) {
  using M = ScalarMatrix<Scalar>;
  std::vector<M> gens;
  gens.reserve(t.matrices.size());
  for (const auto& a : t.matrices) gens.push_back(a.template cast<Scalar>());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      guard_product<Scalar>(gens[i], gens[j]);
      if (multiply<Scalar>(gens[i], gens[j]) != multiply<Scalar>(gens[j], gens[i])) {
        throw Error(ErrorCode::NonCommuting, "generators " + std::to_string(i + 1) + " and " +
                                                 std::to_string(j + 1) + " do not commute");
      }
    }
  }

  AlgebraClosure out;
  if (t.dim == 0) return out;
  RowSpace<Scalar> space;
  std::deque<M> frontier;
  M id = M::Identity(t.dim, t.dim);
  space.insert_dense(id);
  frontier.push_back(std::move(id));
  while (!frontier.empty()) {
    const M x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& a : gens) {
      guard_product<Scalar>(a, x);
      M y = multiply<Scalar>(a, x);
      ++out.products_examined;
      if (space.insert_dense(y)) {
        out.words_are_partial_maps = out.words_are_partial_maps && partial_map<Scalar>(y);
        frontier.push_back(std::move(y));
      }
    }
  }
  out.dimension = space.rank();
  return out;
}

}  // namespace

AlgebraClosure algebra_closure(const MatrixTuple& t) {
  for (const auto& a : t.matrices) {
    if (a.rows() != t.dim || a.cols() != t.dim) {
      throw Error(ErrorCode::SizeMismatch, "matrix is " + std::to_string(a.rows()) + "x" +
                                               std::to_string(a.cols()) + ", expected " +
                                               std::to_string(t.dim));
    }
  }
  try {
    return closure_with<std::int64_t>(t);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Overflow) throw;
  }
  return closure_with<BigInt>(t);
}

// ---------------------------------------------------------------------------
// Combinatorial side

std::size_t annihilator_dimension(const GluingDatum& g) {
  return set_union(g.lambda.boxes(), g.mu.boxes()).size();
}

long deficiency(const GluingDatum& g) {
  return static_cast<long>(set_intersection(g.lambda.boxes(), g.mu.boxes()).size()) -
         static_cast<long>(g.glued_size());
}

GerstenhaberVerdict gerstenhaber_check(const GluingDatum& g) {
  const GluedModule m = build_module(g);
  const MatrixTuple t = multiplication_matrices(m);
  GerstenhaberVerdict v;
  v.d = m.dim();
  v.algebra_dim = static_cast<long>(algebra_dimension(t));
  v.matrix_excess = v.d - v.algebra_dim;
  v.deficiency = deficiency(g);
  v.inequalities_agree = (v.matrix_excess >= 0) == (v.deficiency >= 0);
  v.equality_holds = v.matrix_excess == v.deficiency;
  v.verdict = v.deficiency < 0 ? Verdict::Counterexample : Verdict::Satisfied;
  if (!v.inequalities_agree) {
    throw Error(ErrorCode::InconsistencyDetected,
                "d - dim A = " + std::to_string(v.matrix_excess) + " but |lambda n mu| - |nu| = " +
                    std::to_string(v.deficiency));
  }
  return v;
}

}  // namespace gerst
