// Seeded random generators shared by the unit and acceptance tests.
#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "mixcut/bench.hpp"
#include "mixcut/blp.hpp"
#include "mixcut/errors.hpp"
#include "mixcut/families.hpp"

namespace samplers {

using namespace mixcut;

inline int uniform_int(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline std::vector<int> random_subset(std::mt19937& rng, int lo, int hi, int size) {
  std::vector<int> pool;
  for (int i = lo; i <= hi; ++i) pool.push_back(i);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(std::min<size_t>(pool.size(), size));
  return pool;
}

// Uniform BL&P parameters with delta = 0 and the matching lifted parameters.
struct ZeroDeltaSample {
  MixingInstance inst;
  BlpUniformParams blp;
  LiftedParams lifted;
};

inline ZeroDeltaSample zero_delta_sample(std::mt19937& rng, int max_m = 8) {
  while (true) {
    const Example e = rng() % 2 ? Example::L : Example::K;
    const int m = uniform_int(rng, 3, max_m);
    const int p = uniform_int(rng, 2, m - 1);
    auto inst = benchmark_instance(e, m, p);
    const int r = uniform_int(rng, 1, p);
    auto t = random_subset(rng, 1, r, uniform_int(rng, 1, std::min(r, 3)));
    std::sort(t.begin(), t.end());
    const int v = uniform_int(rng, 0, std::min(p - r, m - r));
    const auto q = random_subset(rng, r + 1, m, v);
    BlpUniformParams bp{r, t, std::vector<Rational>(t.size(), Rational(0)), q};
    try {
      gen_blp_uniform(inst, bp);
    } catch (const ValidationError&) {
      continue;
    }
    return {inst, bp, LiftedParams{r, t, q, {}}};
  }
}

inline Rational random_weight(std::mt19937& rng) {
  static const Rational choices[] = {ratio(1, 2), Rational(1), Rational(2), Rational(3),
                                     ratio(1, 3)};
  return choices[uniform_int(rng, 0, 4)];
}

inline std::vector<TermIndex> random_terms(std::mt19937& rng, int n, int m) {
  std::vector<TermIndex> out;
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= m; ++j) {
      if (rng() % 3 == 0) out.emplace_back(i, j);
    }
  }
  return out;
}

inline Policy random_policy(std::mt19937& rng) {
  switch (rng() % 3) {
    case 0: return Policy::None;
    case 1: return Policy::Listed;
    default: return Policy::All;
  }
}

// Base pair, sparse K and T selections with positive weights, and random
// substitution policies.
inline BlpAssignment random_assignment(std::mt19937& rng, const BilinearSet& S) {
  const int kappa = static_cast<int>(S.constraints.size());
  const int tau = static_cast<int>(S.E.size());
  BlpAssignment a;
  a.base_k = uniform_int(rng, 0, kappa - 1);
  a.base_j = uniform_int(rng, 0, S.m);
  a.K_sets.assign(S.m + 1, {});
  a.T_sets.assign(S.m + 1, {});
  for (int j = 0; j <= S.m; ++j) {
    for (int k = 0; k < kappa; ++k) {
      if (k == a.base_k && j == a.base_j) continue;
      if (rng() % 4 == 0) a.K_sets[j].push_back({k, random_weight(rng)});
    }
    for (int t = 0; t < tau; ++t) {
      if (rng() % 4 == 0) a.T_sets[j].push_back({t, random_weight(rng)});
    }
  }
  a.r0_up = random_policy(rng);
  a.r0_up_terms = random_terms(rng, S.n, S.m);
  a.r0_down = random_policy(rng);
  a.r0_down_terms = random_terms(rng, S.n, S.m);
  a.eliminate_complementarity = rng() % 2;
  a.cc_option_i = random_policy(rng);
  a.cc_option_i_terms = random_terms(rng, S.n, S.m);
  a.cc_option_ii = random_policy(rng);
  a.cc_option_ii_terms = random_terms(rng, S.n, S.m);
  return a;
}

// A small bilinear set with x in [0, 1]^n, a few dense random constraints,
// and some complementarity and complement-complementarity pairs.
inline BilinearSet random_tiny_set(std::mt19937& rng, int n, int m) {
  BilinearSet S;
  S.n = n;
  S.m = m;
  auto coef = [&] { return Rational(uniform_int(rng, -3, 3)); };
  const int count = uniform_int(rng, 1, 3);
  for (int k = 0; k < count; ++k) {
    BilinearConstraint C;
    C.A.assign(m, std::vector<Rational>(n));
    for (auto& row : C.A) {
      for (auto& v : row) v = coef();
    }
    C.b.resize(n);
    for (auto& v : C.b) v = coef();
    C.c.resize(m);
    for (auto& v : C.c) v = coef();
    C.d = Rational(uniform_int(rng, -4, 1));
    C.label = "random " + std::to_string(k);
    S.constraints.push_back(C);
  }
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> row(n, Rational(0));
    row[i] = -1;
    S.E.push_back(row);
    S.f.push_back(-1);
    S.upper_bound_row.push_back(i);
  }
  std::set<TermIndex> used;
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= m; ++j) {
      const int pick = uniform_int(rng, 0, 5);
      if (pick > 1) continue;
      BilinearConstraint C;
      C.A.assign(m, std::vector<Rational>(n, Rational(0)));
      C.b.assign(n, Rational(0));
      C.c.assign(m, Rational(0));
      C.d = 0;
      if (pick == 0) {
        C.A[j - 1][i] = -1;
        C.label = "complementarity";
        S.complementarity.emplace_back(i, j);
      } else {
        C.A[j - 1][i] = 1;
        C.c[j - 1] = -1;
        C.label = "complement complementarity";
        S.complement_complementarity.emplace_back(i, j);
      }
      S.constraints.push_back(C);
    }
  }
  return S;
}

}  // namespace samplers
