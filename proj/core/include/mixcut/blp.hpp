#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mixcut/cut.hpp"
#include "mixcut/families.hpp"
#include "mixcut/hull.hpp"
#include "mixcut/instance.hpp"

namespace mixcut {

// Conventions for the bilinear engine:
//   x has n slots indexed 0..n-1,
//   y has m entries indexed 1..m,
//   a weight index j ranges over 0..m where 0 stands for (1 - 1'y).

// y' A x + b' x + c' y >= d, with A stored as m rows of n entries.
struct BilinearConstraint {
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  std::vector<Rational> c;
  Rational d;
  std::string label;
};

using TermIndex = std::pair<int, int>;  // (x slot i, y index j)

struct BilinearSet {
  int n = 0;
  int m = 0;
  std::vector<BilinearConstraint> constraints;  // K
  // Xi = {x >= 0, E x >= f}; rows of E indexed by T.
  std::vector<std::vector<Rational>> E;
  std::vector<Rational> f;
  // For each x slot, the row of E that reads -x_i >= -1, or -1.
  std::vector<int> upper_bound_row;
  // -x_i y_j >= 0 is among the constraints.
  std::vector<TermIndex> complementarity;
  // -(1 - x_i) y_j >= 0 is among the constraints (x_i upper bounded).
  std::vector<TermIndex> complement_complementarity;
};

// sum quad[j-1][i] x_i y_j + lin_x' x + lin_y' y >= constant, after the
// y_i^2 -> y_i and y_i y_l -> 0 normalization.
struct BilinearExpr {
  std::vector<std::vector<Rational>> quad;  // m x n
  std::vector<Rational> lin_x;
  std::vector<Rational> lin_y;
  Rational constant;

  bool operator==(const BilinearExpr& other) const = default;
};

BilinearExpr zero_expr(int n, int m);
BilinearExpr operator+(const BilinearExpr& a, const BilinearExpr& b);

struct Weighted {
  int index = 0;
  Rational weight;
};

enum class Policy { None, Listed, All };

struct BlpAssignment {
  int base_k = 0;
  int base_j = 0;                              // 0..m
  std::vector<std::vector<Weighted>> K_sets;   // m + 1 lists
  std::vector<std::vector<Weighted>> T_sets;   // m + 1 lists

  // Upper-bound substitutions: positive u x_i y_j -> u y_j ("up") and
  // negative v y_j -> v x_i y_j ("down"), for upper-bounded slots only.
  Policy r0_up = Policy::None;
  std::vector<TermIndex> r0_up_terms;
  Policy r0_down = Policy::None;
  std::vector<TermIndex> r0_down_terms;
  // Drop x_i y_j for complementary pairs.
  bool eliminate_complementarity = true;
  // Complement-complementarity options: (i) negative u x_i y_j -> u y_j,
  // (ii) positive u y_j -> u x_i y_j.
  Policy cc_option_i = Policy::None;
  std::vector<TermIndex> cc_option_i_terms;
  Policy cc_option_ii = Policy::None;
  std::vector<TermIndex> cc_option_ii_terms;
};

// The weighted sum of the base constraint and every selected constraint.
// Throws ValidationError on negative weights, out-of-range indices, or the
// base pair reused inside K_sets.
BilinearExpr aggregate(const BilinearSet& S, const BlpAssignment& a);

// Multipliers of the projection cone: alpha^0..alpha^m (|K| each),
// beta^0..beta^m (|T| each), gamma^0..gamma^m (n each), theta_0..theta_m.
struct ConeDual {
  std::vector<std::vector<Rational>> alpha;
  std::vector<std::vector<Rational>> beta;
  std::vector<std::vector<Rational>> gamma;
  std::vector<Rational> theta;
};

struct XCut {
  std::vector<Rational> coef;
  Rational rhs;
  bool operator==(const XCut& other) const = default;
};

struct SubstitutionResult {
  XCut cut;
  BilinearExpr before_r1;     // after the upper-bound and complementarity steps
  std::vector<Rational> p;    // per x slot
  std::vector<int> q;         // per x slot
  Rational p0;
  int q0 = 0;
  // Audit of the facet-necessity count: zeroed coefficients among the
  // bilinear terms and y variables versus the required number.
  int zeroed = 0;
  int required = 0;
  bool c1_satisfied = false;
  // Multipliers that reproduce the same cut inside the projection cone.
  ConeDual implied_dual;
};

// Applies, in order: upper-bound substitutions, complementarity
// elimination, complement-complementarity options, then the most-positive
// coefficient rule per x slot and for the y block.
SubstitutionResult substitute(const BilinearSet& S, const BilinearExpr& expr,
                              const BlpAssignment& a);

// The bilinear reformulation of F_c. Slot 0 is z, slot i is x_i.
BilinearSet build_sc(const MixingInstance& inst);

// Reads an x-space cut on the S_c layout as a (z, x) LinearCut.
LinearCut sc_cut_to_linear(const XCut& cut);

// The aggregation that certifies a generic BL&P cut, with the weights
// recipe of the generic theorem. params.beta must hold one value per
// scenario. With epsilon = 1 the recipe needs h_{r+1} = sum(delta).
BlpAssignment generic_blp_assignment(const MixingInstance& inst,
                                     const BilinearSet& sc,
                                     const BlpGenericParams& params);

// Each restriction S(e^j) is nonempty and all share one recession cone.
bool check_assumption(const BilinearSet& S, const HullOptions& options = {});

// Extended formulation in variables (x, y, u^1..u^m), all rows ">=".
struct DisjunctiveSystem {
  int n = 0;
  int m = 0;
  int num_vars = 0;
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  std::vector<std::string> labels;

  int x_var(int i) const { return i; }
  int y_var(int j) const { return n + j - 1; }
  int u_var(int j, int i) const { return n + m + (j - 1) * n + i; }
};

DisjunctiveSystem build_disjunctive(const BilinearSet& S);

// Projection of the disjunctive polyhedron onto x, as generators.
poly::Generators project_disjunctive(const DisjunctiveSystem& Q,
                                     const HullOptions& options = {});

struct ConeCheck {
  bool member = false;
  XCut cut;
};

// Non-negativity, the per-(i, j) balance equations and the per-j y balance.
// Throws ValidationError on a layout mismatch.
ConeCheck cone_membership(const BilinearSet& S, const ConeDual& dual);

// Completes alpha/beta with gamma_i^0 = max_j (Phi_ij)^+ and
// theta_0 = max_j (Psi_j)^+.
ConeDual complete_dual(const BilinearSet& S,
                       std::vector<std::vector<Rational>> alpha,
                       std::vector<std::vector<Rational>> beta);

}  // namespace mixcut
