#include "mixcut/blp.hpp"

#include <algorithm>
#include <set>

#include "mixcut/errors.hpp"

namespace mixcut {
namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ValidationError(message);
}

void check_set(const BilinearSet& S) {
  require(S.n >= 1 && S.m >= 1, "bilinear set needs n >= 1 and m >= 1");
  for (const auto& C : S.constraints) {
    require(static_cast<int>(C.A.size()) == S.m, "constraint A must have m rows");
    for (const auto& row : C.A) {
      require(static_cast<int>(row.size()) == S.n, "constraint A rows must have n entries");
    }
    require(static_cast<int>(C.b.size()) == S.n, "constraint b must have n entries");
    require(static_cast<int>(C.c.size()) == S.m, "constraint c must have m entries");
  }
  require(S.E.size() == S.f.size(), "E and f differ in length");
  for (const auto& row : S.E) {
    require(static_cast<int>(row.size()) == S.n, "E rows must have n entries");
  }
  require(S.upper_bound_row.empty() || static_cast<int>(S.upper_bound_row.size()) == S.n,
          "upper_bound_row must have n entries");
}

int ub_row(const BilinearSet& S, int i) {
  return S.upper_bound_row.empty() ? -1 : S.upper_bound_row[i];
}

// Adds w times constraint k weighted by y_j (j >= 1) or by (1 - 1'y) (j = 0).
void add_constraint(BilinearExpr& e, const BilinearSet& S, int k, int j,
                    const Rational& w) {
  const auto& C = S.constraints[k];
  if (j > 0) {
    for (int i = 0; i < S.n; ++i) e.quad[j - 1][i] += w * (C.A[j - 1][i] + C.b[i]);
    e.lin_y[j - 1] += w * (C.c[j - 1] - C.d);
    return;
  }
  for (int i = 0; i < S.n; ++i) e.lin_x[i] += w * C.b[i];
  e.constant += w * C.d;
  for (int l = 0; l < S.m; ++l) {
    for (int i = 0; i < S.n; ++i) e.quad[l][i] -= w * C.b[i];
    e.lin_y[l] += w * C.d;
  }
}

void add_row(BilinearExpr& e, const BilinearSet& S, int t, int j, const Rational& w) {
  const auto& E = S.E[t];
  if (j > 0) {
    for (int i = 0; i < S.n; ++i) e.quad[j - 1][i] += w * E[i];
    e.lin_y[j - 1] -= w * S.f[t];
    return;
  }
  for (int i = 0; i < S.n; ++i) e.lin_x[i] += w * E[i];
  e.constant += w * S.f[t];
  for (int l = 0; l < S.m; ++l) {
    for (int i = 0; i < S.n; ++i) e.quad[l][i] -= w * E[i];
    e.lin_y[l] += w * S.f[t];
  }
}

// Marks the bilinear and y entries a positive-weight term contributes to.
struct Touched {
  std::vector<std::vector<char>> quad;
  std::vector<char> y;
};

void touch_constraint(Touched& tc, const BilinearSet& S, int k, int j) {
  const auto& C = S.constraints[k];
  if (j > 0) {
    for (int i = 0; i < S.n; ++i) {
      if (C.A[j - 1][i] + C.b[i] != 0) tc.quad[j - 1][i] = 1;
    }
    if (C.c[j - 1] - C.d != 0) tc.y[j - 1] = 1;
    return;
  }
  for (int l = 0; l < S.m; ++l) {
    for (int i = 0; i < S.n; ++i) {
      if (C.b[i] != 0) tc.quad[l][i] = 1;
    }
    if (C.d != 0) tc.y[l] = 1;
  }
}

void touch_row(Touched& tc, const BilinearSet& S, int t, int j) {
  const int lo = j > 0 ? j - 1 : 0;
  const int hi = j > 0 ? j : S.m;
  for (int l = lo; l < hi; ++l) {
    for (int i = 0; i < S.n; ++i) {
      if (S.E[t][i] != 0) tc.quad[l][i] = 1;
    }
    if (S.f[t] != 0) tc.y[l] = 1;
  }
}

bool listed(Policy policy, const std::vector<TermIndex>& terms, int i, int j) {
  if (policy == Policy::All) return true;
  if (policy == Policy::None) return false;
  return std::find(terms.begin(), terms.end(), TermIndex{i, j}) != terms.end();
}

bool only_entry(const BilinearConstraint& C, int i, int j, const Rational& a,
                const Rational& cj) {
  for (size_t l = 0; l < C.A.size(); ++l) {
    for (size_t s = 0; s < C.A[l].size(); ++s) {
      const Rational want = (static_cast<int>(l) == j - 1 && static_cast<int>(s) == i) ? a : Rational(0);
      if (C.A[l][s] != want) return false;
    }
  }
  for (const auto& x : C.b) {
    if (x != 0) return false;
  }
  for (size_t l = 0; l < C.c.size(); ++l) {
    const Rational want = static_cast<int>(l) == j - 1 ? cj : Rational(0);
    if (C.c[l] != want) return false;
  }
  return C.d == 0;
}

// -x_i y_j >= 0
int find_complementarity(const BilinearSet& S, int i, int j) {
  for (size_t k = 0; k < S.constraints.size(); ++k) {
    if (only_entry(S.constraints[k], i, j, Rational(-1), Rational(0))) return static_cast<int>(k);
  }
  return -1;
}

// -(1 - x_i) y_j >= 0
int find_complement_complementarity(const BilinearSet& S, int i, int j) {
  for (size_t k = 0; k < S.constraints.size(); ++k) {
    if (only_entry(S.constraints[k], i, j, Rational(1), Rational(-1))) return static_cast<int>(k);
  }
  return -1;
}

ConeDual zero_dual(const BilinearSet& S) {
  ConeDual d;
  const int kappa = static_cast<int>(S.constraints.size());
  const int tau = static_cast<int>(S.E.size());
  d.alpha.assign(S.m + 1, std::vector<Rational>(kappa, Rational(0)));
  d.beta.assign(S.m + 1, std::vector<Rational>(tau, Rational(0)));
  d.gamma.assign(S.m + 1, std::vector<Rational>(S.n, Rational(0)));
  d.theta.assign(S.m + 1, Rational(0));
  return d;
}

// Phi and Psi of the cone equations for given alpha, beta.
BilinearExpr phi_psi(const BilinearSet& S, const std::vector<std::vector<Rational>>& alpha,
                     const std::vector<std::vector<Rational>>& beta) {
  BilinearExpr e = zero_expr(S.n, S.m);
  for (int j = 0; j <= S.m; ++j) {
    for (size_t k = 0; k < alpha[j].size(); ++k) {
      if (alpha[j][k] != 0) add_constraint(e, S, static_cast<int>(k), j, alpha[j][k]);
    }
    for (size_t t = 0; t < beta[j].size(); ++t) {
      if (beta[j][t] != 0) add_row(e, S, static_cast<int>(t), j, beta[j][t]);
    }
  }
  return e;
}

void check_dual_layout(const BilinearSet& S, const ConeDual& d) {
  const size_t kappa = S.constraints.size();
  const size_t tau = S.E.size();
  const size_t layers = static_cast<size_t>(S.m) + 1;
  require(d.alpha.size() == layers && d.beta.size() == layers &&
              d.gamma.size() == layers && d.theta.size() == layers,
          "dual must carry m + 1 layers of alpha, beta, gamma, theta");
  for (size_t j = 0; j < layers; ++j) {
    require(d.alpha[j].size() == kappa, "alpha layer must have |K| entries");
    require(d.beta[j].size() == tau, "beta layer must have |T| entries");
    require(d.gamma[j].size() == static_cast<size_t>(S.n), "gamma layer must have n entries");
  }
}

}  // namespace

BilinearExpr zero_expr(int n, int m) {
  BilinearExpr e;
  e.quad.assign(m, std::vector<Rational>(n, Rational(0)));
  e.lin_x.assign(n, Rational(0));
  e.lin_y.assign(m, Rational(0));
  e.constant = 0;
  return e;
}

BilinearExpr operator+(const BilinearExpr& a, const BilinearExpr& b) {
  require(a.quad.size() == b.quad.size() && a.lin_x.size() == b.lin_x.size(),
          "expression shapes differ");
  BilinearExpr e = a;
  for (size_t j = 0; j < e.quad.size(); ++j) {
    for (size_t i = 0; i < e.quad[j].size(); ++i) e.quad[j][i] += b.quad[j][i];
  }
  for (size_t i = 0; i < e.lin_x.size(); ++i) e.lin_x[i] += b.lin_x[i];
  for (size_t j = 0; j < e.lin_y.size(); ++j) e.lin_y[j] += b.lin_y[j];
  e.constant += b.constant;
  return e;
}

BilinearExpr aggregate(const BilinearSet& S, const BlpAssignment& a) {
  check_set(S);
  const int kappa = static_cast<int>(S.constraints.size());
  const int tau = static_cast<int>(S.E.size());
  require(a.base_k >= 0 && a.base_k < kappa, "base constraint index out of range");
  require(a.base_j >= 0 && a.base_j <= S.m, "base weight index out of range");
  require(a.K_sets.empty() || static_cast<int>(a.K_sets.size()) == S.m + 1,
          "K_sets must have m + 1 entries");
  require(a.T_sets.empty() || static_cast<int>(a.T_sets.size()) == S.m + 1,
          "T_sets must have m + 1 entries");
  BilinearExpr e = zero_expr(S.n, S.m);
  add_constraint(e, S, a.base_k, a.base_j, Rational(1));
  for (size_t j = 0; j < a.K_sets.size(); ++j) {
    for (const auto& w : a.K_sets[j]) {
      require(w.index >= 0 && w.index < kappa, "K_sets entry out of range");
      require(w.weight >= 0, "negative constraint weight");
      require(!(w.index == a.base_k && static_cast<int>(j) == a.base_j),
              "base pair reused inside K_sets");
      add_constraint(e, S, w.index, static_cast<int>(j), w.weight);
    }
  }
  for (size_t j = 0; j < a.T_sets.size(); ++j) {
    for (const auto& w : a.T_sets[j]) {
      require(w.index >= 0 && w.index < tau, "T_sets entry out of range");
      require(w.weight >= 0, "negative row weight");
      add_row(e, S, w.index, static_cast<int>(j), w.weight);
    }
  }
  return e;
}

SubstitutionResult substitute(const BilinearSet& S, const BilinearExpr& expr,
                              const BlpAssignment& a) {
  check_set(S);
  require(static_cast<int>(expr.quad.size()) == S.m &&
              static_cast<int>(expr.lin_x.size()) == S.n,
          "expression does not match the bilinear set");
  BilinearExpr e = expr;
  std::vector<std::vector<char>> moved(S.m, std::vector<char>(S.n, 0));
  std::vector<char> moved_y(S.m, 0);

  ConeDual dual = zero_dual(S);
  bool dual_ok = true;
  dual.alpha[a.base_j][a.base_k] += 1;
  for (size_t j = 0; j < a.K_sets.size(); ++j) {
    for (const auto& w : a.K_sets[j]) dual.alpha[j][w.index] += w.weight;
  }
  for (size_t j = 0; j < a.T_sets.size(); ++j) {
    for (const auto& w : a.T_sets[j]) dual.beta[j][w.index] += w.weight;
  }

  // Upper-bound substitutions.
  for (int i = 0; i < S.n; ++i) {
    const int t = ub_row(S, i);
    if (t < 0) continue;
    for (int j = 1; j <= S.m; ++j) {
      Rational& u = e.quad[j - 1][i];
      if (u > 0 && listed(a.r0_up, a.r0_up_terms, i, j)) {
        dual.beta[j][t] += u;
        e.lin_y[j - 1] += u;
        u = 0;
        moved[j - 1][i] = 1;
      }
    }
  }
  for (int i = 0; i < S.n; ++i) {
    const int t = ub_row(S, i);
    if (t < 0) continue;
    for (int j = 1; j <= S.m; ++j) {
      Rational& v = e.lin_y[j - 1];
      if (v < 0 && listed(a.r0_down, a.r0_down_terms, i, j)) {
        dual.beta[j][t] += -v;
        e.quad[j - 1][i] += v;
        v = 0;
        moved_y[j - 1] = 1;
      }
    }
  }
  // Complementarity: x_i y_j vanishes on S.
  if (a.eliminate_complementarity) {
    for (const auto& [i, j] : S.complementarity) {
      Rational& u = e.quad[j - 1][i];
      if (u == 0) continue;
      if (u > 0) {
        const int k = find_complementarity(S, i, j);
        if (k < 0) dual_ok = false;
        else dual.alpha[j][k] += u;
      }
      u = 0;
      moved[j - 1][i] = 1;
    }
  }
  // Complement-complementarity: x_i y_j equals y_j on S.
  for (const auto& [i, j] : S.complement_complementarity) {
    Rational& u = e.quad[j - 1][i];
    if (u < 0 && listed(a.cc_option_i, a.cc_option_i_terms, i, j)) {
      const int k = find_complement_complementarity(S, i, j);
      if (k < 0) dual_ok = false;
      else dual.alpha[j][k] += -u;
      e.lin_y[j - 1] += u;
      u = 0;
      moved[j - 1][i] = 1;
    }
  }
  for (const auto& [i, j] : S.complement_complementarity) {
    Rational& u = e.lin_y[j - 1];
    if (u > 0 && listed(a.cc_option_ii, a.cc_option_ii_terms, i, j)) {
      const int k = find_complement_complementarity(S, i, j);
      if (k < 0) dual_ok = false;
      else dual.alpha[j][k] += u;
      e.quad[j - 1][i] += u;
      u = 0;
      moved_y[j - 1] = 1;
    }
  }

  SubstitutionResult res;
  res.before_r1 = e;
  res.p.assign(S.n, Rational(0));
  res.q.assign(S.n, 0);
  for (int i = 0; i < S.n; ++i) {
    for (int j = 0; j < S.m; ++j) {
      const Rational& u = e.quad[j][i];
      if (u <= 0) continue;
      if (u > res.p[i]) {
        res.p[i] = u;
        res.q[i] = 1;
      } else if (u == res.p[i]) {
        ++res.q[i];
      }
    }
  }
  res.p0 = 0;
  for (int j = 0; j < S.m; ++j) {
    const Rational& u = e.lin_y[j];
    if (u <= 0) continue;
    if (u > res.p0) {
      res.p0 = u;
      res.q0 = 1;
    } else if (u == res.p0) {
      ++res.q0;
    }
  }
  res.cut.coef.resize(S.n);
  for (int i = 0; i < S.n; ++i) res.cut.coef[i] = e.lin_x[i] + res.p[i];
  res.cut.rhs = e.constant - res.p0;

  // Audit: zero coefficients among touched, non-substituted entries.
  Touched tc;
  tc.quad.assign(S.m, std::vector<char>(S.n, 0));
  tc.y.assign(S.m, 0);
  touch_constraint(tc, S, a.base_k, a.base_j);
  int selected = 0;
  for (size_t j = 0; j < a.K_sets.size(); ++j) {
    for (const auto& w : a.K_sets[j]) {
      if (w.weight == 0) continue;
      ++selected;
      touch_constraint(tc, S, w.index, static_cast<int>(j));
    }
  }
  for (size_t j = 0; j < a.T_sets.size(); ++j) {
    for (const auto& w : a.T_sets[j]) {
      if (w.weight == 0) continue;
      ++selected;
      touch_row(tc, S, w.index, static_cast<int>(j));
    }
  }
  for (int j = 0; j < S.m; ++j) {
    for (int i = 0; i < S.n; ++i) {
      res.zeroed += tc.quad[j][i] && !moved[j][i] && e.quad[j][i] == 0;
    }
    res.zeroed += tc.y[j] && !moved_y[j] && e.lin_y[j] == 0;
  }
  res.required = selected + (res.q0 > 0 ? 1 : 0) - res.q0;
  for (int i = 0; i < S.n; ++i) res.required += (res.q[i] > 0 ? 1 : 0) - res.q[i];
  res.c1_satisfied = res.zeroed >= res.required;

  if (dual_ok) {
    res.implied_dual = complete_dual(S, dual.alpha, dual.beta);
  }
  return res;
}

BilinearSet build_sc(const MixingInstance& inst) {
  const int m = inst.m();
  BilinearSet S;
  S.n = m + 1;
  S.m = m;
  auto blank = [&](const std::string& label) {
    BilinearConstraint C;
    C.A.assign(m, std::vector<Rational>(m + 1, Rational(0)));
    C.b.assign(m + 1, Rational(0));
    C.c.assign(m, Rational(0));
    C.d = 0;
    C.label = label;
    return C;
  };
  for (int sign : {1, -1}) {
    for (int i = 1; i <= m; ++i) {
      // sign * (1 - x_i)(1 - 1'y) >= 0
      BilinearConstraint C = blank((sign > 0 ? "1:" : "2:") + std::to_string(i));
      for (int j = 1; j <= m; ++j) {
        C.A[j - 1][i] = sign;
        C.c[j - 1] = -sign;
      }
      C.b[i] = -sign;
      C.d = -sign;
      S.constraints.push_back(std::move(C));
    }
  }
  for (int i = 1; i <= m; ++i) {
    BilinearConstraint C = blank("3:" + std::to_string(i));
    C.A[i - 1][0] = 1;
    C.c[i - 1] = -inst.h(i);
    S.constraints.push_back(std::move(C));
  }
  for (int i = 1; i <= m; ++i) {
    BilinearConstraint C = blank("4:" + std::to_string(i));
    C.A[i - 1][i] = -1;
    S.constraints.push_back(std::move(C));
    S.complementarity.push_back({i, i});
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      BilinearConstraint C = blank("5:" + std::to_string(i) + "," + std::to_string(j));
      C.A[j - 1][i] = 1;
      C.c[j - 1] = -1;
      S.constraints.push_back(std::move(C));
      S.complement_complementarity.push_back({i, j});
    }
  }
  S.upper_bound_row.assign(m + 1, -1);
  for (int i = 1; i <= m; ++i) {
    std::vector<Rational> row(m + 1, Rational(0));
    row[i] = -1;
    S.E.push_back(row);
    S.f.push_back(Rational(-1));
    S.upper_bound_row[i] = i - 1;
  }
  std::vector<Rational> knap(m + 1, Rational(0));
  for (int i = 1; i <= m; ++i) knap[i] = -inst.pi(i);
  S.E.push_back(knap);
  S.f.push_back(-inst.epsilon());
  return S;
}

LinearCut sc_cut_to_linear(const XCut& cut) {
  LinearCut out;
  out.z_coef = cut.coef.at(0);
  out.x.assign(cut.coef.begin() + 1, cut.coef.end());
  out.rhs = cut.rhs;
  bool nonzero = out.z_coef != 0;
  for (const auto& c : out.x) nonzero = nonzero || c != 0;
  return nonzero ? canonicalize(out) : out;
}

BlpAssignment generic_blp_assignment(const MixingInstance& inst,
                                     const BilinearSet& sc,
                                     const BlpGenericParams& params) {
  const int m = inst.m();
  require(sc.m == m && sc.n == m + 1 &&
              static_cast<int>(sc.constraints.size()) == 4 * m + m * (m - 1) / 2 &&
              static_cast<int>(sc.E.size()) == m + 1,
          "bilinear set does not have the S_c layout");
  const auto& t = params.t_set;
  const auto& q = params.q_list;
  require(!t.empty() && params.delta.size() == t.size(), "one delta per t index");
  require(params.phi.size() == q.size(), "one phi per q index");
  require(static_cast<int>(params.beta.size()) == m, "one beta per scenario");
  require(params.r >= 1 && params.r <= m, "r out of range");
  for (int x : t) require(x >= 1 && x <= params.r, "t index outside 1..r");
  for (int x : q) require(x > params.r && x <= m, "q index outside r+1..m");
  for (const auto& b : params.beta) require(b >= 0, "beta must be non-negative");

  auto type1 = [&](int i) { return i - 1; };
  auto type2 = [&](int i) { return m + i - 1; };
  auto type3 = [&](int i) { return 2 * m + i - 1; };
  const int knapsack = m;

  Rational dsum = 0;
  for (const auto& d : params.delta) dsum += d;
  const Rational slack = inst.h(params.r + 1) - dsum;
  require(slack >= 0, "sum of delta exceeds h_{r+1}");
  Rational beta0 = 0;
  if (inst.epsilon() < 1) {
    beta0 = slack / (Rational(m) * (1 - inst.epsilon()));
  } else {
    require(slack == 0, "epsilon = 1 needs sum of delta equal to h_{r+1}");
  }

  BlpAssignment a;
  a.base_k = type3(t[0]);
  a.base_j = t[0];
  a.K_sets.assign(m + 1, {});
  a.T_sets.assign(m + 1, {});
  std::vector<char> used(m + 1, 0);
  for (size_t k = 0; k < t.size(); ++k) {
    const int next = k + 1 < t.size() ? t[k + 1] : params.r + 1;
    const Rational w = inst.h(t[k]) - inst.h(next) + params.delta[k] +
                       Rational(m) * inst.pi(t[k]) * beta0;
    require(w >= 0, "delta below h_next - h_t");
    a.K_sets[0].push_back({type2(t[k]), w});
    used[t[k]] = 1;
  }
  for (size_t k = 0; k < q.size(); ++k) {
    const Rational diff = params.phi[k] - Rational(m) * inst.pi(q[k]) * beta0;
    if (diff > 0) a.K_sets[0].push_back({type1(q[k]), diff});
    if (diff < 0) a.K_sets[0].push_back({type2(q[k]), -diff});
    used[q[k]] = 1;
  }
  for (int j = 1; j <= m; ++j) {
    if (!used[j] && beta0 != 0) {
      a.K_sets[0].push_back({type2(j), Rational(m) * inst.pi(j) * beta0});
    }
  }
  for (int j = 1; j <= m; ++j) {
    if (j != t[0]) a.K_sets[j].push_back({type3(j), Rational(1)});
  }
  if (beta0 != 0) a.T_sets[0].push_back({knapsack, Rational(m) * beta0});
  for (int j = 1; j <= m; ++j) {
    if (params.beta[j - 1] != 0) {
      a.T_sets[j].push_back({knapsack, Rational(m) * params.beta[j - 1]});
    }
  }

  // Positive off-diagonal x_q y_j terms go to y_j through the upper bound;
  // diagonal ones vanish by complementarity.
  a.r0_up = Policy::Listed;
  for (int x : q) {
    for (int j = 1; j <= m; ++j) {
      if (j != x) a.r0_up_terms.push_back({x, j});
    }
  }
  a.eliminate_complementarity = true;
  a.cc_option_i = Policy::All;
  return a;
}

bool check_assumption(const BilinearSet& S, const HullOptions& options) {
  check_set(S);
  std::vector<std::vector<poly::IntVector>> cones;
  for (int j = 0; j <= S.m; ++j) {
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    for (int i = 0; i < S.n; ++i) {
      std::vector<Rational> row(S.n, Rational(0));
      row[i] = 1;
      A.push_back(row);
      b.push_back(0);
    }
    for (size_t t = 0; t < S.E.size(); ++t) {
      A.push_back(S.E[t]);
      b.push_back(S.f[t]);
    }
    for (const auto& C : S.constraints) {
      std::vector<Rational> row = C.b;
      Rational rhs = C.d;
      if (j > 0) {
        for (int i = 0; i < S.n; ++i) row[i] += C.A[j - 1][i];
        rhs -= C.c[j - 1];
      }
      A.push_back(std::move(row));
      b.push_back(rhs);
    }
    const poly::Generators g = poly::generators_of(A, b, options);
    if (g.points.empty()) return false;
    std::vector<poly::IntVector> rays;
    for (const auto& r : g.rays) rays.push_back(poly::primitive(r));
    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    cones.push_back(std::move(rays));
  }
  for (const auto& c : cones) {
    if (c != cones.front()) return false;
  }
  return true;
}

DisjunctiveSystem build_disjunctive(const BilinearSet& S) {
  check_set(S);
  DisjunctiveSystem Q;
  Q.n = S.n;
  Q.m = S.m;
  Q.num_vars = S.n + S.m + S.m * S.n;
  const int n = S.n;
  const int m = S.m;
  auto blank = [&] { return std::vector<Rational>(Q.num_vars, Rational(0)); };
  auto push = [&](std::vector<Rational> row, Rational rhs, std::string label) {
    Q.A.push_back(std::move(row));
    Q.b.push_back(std::move(rhs));
    Q.labels.push_back(std::move(label));
  };
  // A term g'(x - sum u^j) >= rhs (1 - 1'y), kept as g'x - sum g'u^j + rhs 1'y >= rhs.
  auto base_row = [&](const std::vector<Rational>& g, const Rational& rhs) {
    auto row = blank();
    for (int i = 0; i < n; ++i) {
      row[Q.x_var(i)] += g[i];
      for (int j = 1; j <= m; ++j) row[Q.u_var(j, i)] -= g[i];
    }
    for (int j = 1; j <= m; ++j) row[Q.y_var(j)] += rhs;
    return row;
  };
  for (size_t k = 0; k < S.constraints.size(); ++k) {
    const auto& C = S.constraints[k];
    push(base_row(C.b, C.d), C.d, "a:" + std::to_string(k));
  }
  for (size_t k = 0; k < S.constraints.size(); ++k) {
    const auto& C = S.constraints[k];
    for (int j = 1; j <= m; ++j) {
      auto row = blank();
      for (int i = 0; i < n; ++i) row[Q.u_var(j, i)] = C.A[j - 1][i] + C.b[i];
      row[Q.y_var(j)] = C.c[j - 1] - C.d;
      push(std::move(row), Rational(0), "b:" + std::to_string(k) + "," + std::to_string(j));
    }
  }
  for (size_t t = 0; t < S.E.size(); ++t) {
    push(base_row(S.E[t], S.f[t]), S.f[t], "c:" + std::to_string(t));
  }
  for (size_t t = 0; t < S.E.size(); ++t) {
    for (int j = 1; j <= m; ++j) {
      auto row = blank();
      for (int i = 0; i < n; ++i) row[Q.u_var(j, i)] = S.E[t][i];
      row[Q.y_var(j)] = -S.f[t];
      push(std::move(row), Rational(0), "d:" + std::to_string(t) + "," + std::to_string(j));
    }
  }
  for (int i = 0; i < n; ++i) {
    auto row = blank();
    row[Q.x_var(i)] = 1;
    for (int j = 1; j <= m; ++j) row[Q.u_var(j, i)] = -1;
    push(std::move(row), Rational(0), "e:" + std::to_string(i));
  }
  for (int j = 1; j <= m; ++j) {
    for (int i = 0; i < n; ++i) {
      auto row = blank();
      row[Q.u_var(j, i)] = 1;
      push(std::move(row), Rational(0), "f:" + std::to_string(j) + "," + std::to_string(i));
    }
  }
  {
    auto row = blank();
    for (int j = 1; j <= m; ++j) row[Q.y_var(j)] = -1;
    push(std::move(row), Rational(-1), "g");
  }
  for (int j = 1; j <= m; ++j) {
    auto row = blank();
    row[Q.y_var(j)] = 1;
    push(std::move(row), Rational(0), "h:" + std::to_string(j));
  }
  return Q;
}

poly::Generators project_disjunctive(const DisjunctiveSystem& Q,
                                     const HullOptions& options) {
  const poly::Generators g = poly::generators_of(Q.A, Q.b, options);
  poly::Generators out;
  std::set<std::vector<Rational>> seen_points;
  std::set<poly::IntVector> seen_rays;
  for (const auto& w : g.points) {
    std::vector<Rational> x(w.begin(), w.begin() + Q.n);
    if (seen_points.insert(x).second) out.points.push_back(std::move(x));
  }
  for (const auto& w : g.rays) {
    std::vector<Rational> x(w.begin(), w.begin() + Q.n);
    if (std::all_of(x.begin(), x.end(), [](const Rational& v) { return v == 0; })) continue;
    if (seen_rays.insert(poly::primitive(x)).second) out.rays.push_back(std::move(x));
  }
  return out;
}

ConeCheck cone_membership(const BilinearSet& S, const ConeDual& dual) {
  check_set(S);
  check_dual_layout(S, dual);
  ConeCheck out;
  bool ok = true;
  for (int j = 0; j <= S.m; ++j) {
    for (const auto& v : dual.alpha[j]) ok = ok && v >= 0;
    for (const auto& v : dual.beta[j]) ok = ok && v >= 0;
    for (const auto& v : dual.gamma[j]) ok = ok && v >= 0;
    ok = ok && dual.theta[j] >= 0;
  }
  const BilinearExpr e = phi_psi(S, dual.alpha, dual.beta);
  for (int j = 1; j <= S.m; ++j) {
    for (int i = 0; i < S.n; ++i) {
      ok = ok && e.quad[j - 1][i] + dual.gamma[j][i] - dual.gamma[0][i] == 0;
    }
    ok = ok && e.lin_y[j - 1] + dual.theta[j] - dual.theta[0] == 0;
  }
  out.member = ok;
  out.cut.coef.resize(S.n);
  for (int i = 0; i < S.n; ++i) out.cut.coef[i] = e.lin_x[i] + dual.gamma[0][i];
  out.cut.rhs = e.constant - dual.theta[0];
  return out;
}

ConeDual complete_dual(const BilinearSet& S, std::vector<std::vector<Rational>> alpha,
                       std::vector<std::vector<Rational>> beta) {
  check_set(S);
  ConeDual d = zero_dual(S);
  d.alpha = std::move(alpha);
  d.beta = std::move(beta);
  check_dual_layout(S, d);
  const BilinearExpr e = phi_psi(S, d.alpha, d.beta);
  for (int i = 0; i < S.n; ++i) {
    Rational top = 0;
    for (int j = 0; j < S.m; ++j) top = std::max(top, e.quad[j][i]);
    d.gamma[0][i] = top;
    for (int j = 1; j <= S.m; ++j) d.gamma[j][i] = top - e.quad[j - 1][i];
  }
  Rational top = 0;
  for (int j = 0; j < S.m; ++j) top = std::max(top, e.lin_y[j]);
  d.theta[0] = top;
  for (int j = 1; j <= S.m; ++j) d.theta[j] = top - e.lin_y[j - 1];
  return d;
}

}  // namespace mixcut
