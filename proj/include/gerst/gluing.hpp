#pragma once

// Gluing data (lambda, mu, nu_i, b_i, c_i), the glued module M, its commuting
// multiplication matrices, and the dimension of the unital algebra they
// generate.

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <vector>

#include "gerst/lattice.hpp"

namespace gerst {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

struct GluedComponent {
  AbstractSkewShape shape;
  Point b;  // placement inside lambda
  Point c;  // placement inside mu
  friend bool operator==(const GluedComponent&, const GluedComponent&) = default;
};

struct GluingDatum {
  int n = 1;
  YoungDiagram lambda{1};
  YoungDiagram mu{1};
  std::vector<GluedComponent> components;

  /// |nu| = sum of component sizes.
  std::size_t glued_size() const;
  friend bool operator==(const GluingDatum&, const GluingDatum&) = default;
};

struct Violation {
  std::string property;  // "a".."d", "shape" or "dimension"
  int component = -1;
  Point v;
  Point w;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
  std::string summary() const;
};

ValidationReport validate_gluing(const GluingDatum& g);

/// Gluing datum of (I, J, K, L, phi) with I in K and J in L: components of
/// lambda(I) minus lambda(K) are paired with translation-equivalent components
/// of lambda(J) minus lambda(L) in lex order. Throws InvalidGluing when the
/// two skew shapes do not match up.
GluingDatum gluing_from_ideals(const MonomialIdeal& i, const MonomialIdeal& j, const MonomialIdeal& k,
                               const MonomialIdeal& l);

/// Component placements are ideals of their diagram: nothing of `diagram`
/// above a placed box leaves the placement. Shared by gluings and towers.
void check_placements(const YoungDiagram& diagram, const std::vector<AbstractSkewShape>& shapes,
                      const std::vector<Point>& offsets, const std::string& contain_tag,
                      const std::string& saturate_tag, ValidationReport& report);

enum class Side { Lambda, Mu };

struct BasisLabel {
  Side side;
  Point box;
  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

struct GluedModule {
  int n = 1;
  std::vector<BasisLabel> basis;
  /// action[i][k] is the basis index of x_i * basis[k], or -1 for zero.
  std::vector<std::vector<int>> action;

  int dim() const { return static_cast<int>(basis.size()); }
};

/// Basis: lambda boxes in descending lex order, then the mu boxes outside
/// every nu_i + c_i in descending lex order. Throws InvalidGluing.
GluedModule build_module(const GluingDatum& g);

struct MatrixTuple {
  int dim = 0;
  std::vector<IntMatrix> matrices;
};

/// Column convention: A_i(target, source) = 1. Throws NonCommuting.
MatrixTuple multiplication_matrices(const GluedModule& m);

bool commutes(const IntMatrix& a, const IntMatrix& b);
/// At most one nonzero per column and every nonzero equal to 1.
bool is_partial_map(const IntMatrix& a);

struct AlgebraClosure {
  Eigen::Index dimension = 0;
  std::size_t products_examined = 0;
  /// Every retained word matrix was 0/1 with at most one 1 per column.
  bool words_are_partial_maps = true;
};

/// Dimension over Q of the unital algebra generated by the tuple, by word
/// closure against an exact row space. Runs with checked int64 arithmetic
/// and reruns with big integers on overflow. Throws SizeMismatch or
/// NonCommuting.
AlgebraClosure algebra_closure(const MatrixTuple& t);
inline Eigen::Index algebra_dimension(const MatrixTuple& t) { return algebra_closure(t).dimension; }

/// dim S / Ann(M), which equals |lambda u mu|.
std::size_t annihilator_dimension(const GluingDatum& g);
/// |lambda n mu| - |nu|.
long deficiency(const GluingDatum& g);

enum class Verdict { Satisfied, Counterexample };

struct GerstenhaberVerdict {
  int d = 0;
  long algebra_dim = 0;
  long matrix_excess = 0;  // d - dim A
  long deficiency = 0;     // |lambda n mu| - |nu|
  bool inequalities_agree = true;
  bool equality_holds = true;  // d - dim A == deficiency
  Verdict verdict = Verdict::Satisfied;
};

/// Throws InconsistencyDetected if the two inequality tests disagree.
GerstenhaberVerdict gerstenhaber_check(const GluingDatum& g);

}  // namespace gerst
