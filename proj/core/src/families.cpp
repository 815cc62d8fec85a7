#include "mixcut/families.hpp"

#include <algorithm>
#include <set>

#include "mixcut/errors.hpp"

namespace mixcut {
namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ValidationError(message);
}

void check_t_set(const std::vector<int>& t, int hi, const std::string& what) {
  require(!t.empty(), what + ": t_set must be nonempty");
  for (size_t k = 0; k < t.size(); ++k) {
    require(t[k] >= 1 && t[k] <= hi,
            what + ": t index " + std::to_string(t[k]) + " outside 1.." +
                std::to_string(hi));
    require(k == 0 || t[k - 1] < t[k], what + ": t_set must be strictly increasing");
  }
}

void check_distinct(const std::vector<int>& q, int lo, int hi,
                    const std::string& what) {
  std::set<int> seen;
  for (int x : q) {
    require(x >= lo && x <= hi, what + ": q index " + std::to_string(x) +
                                    " outside " + std::to_string(lo) + ".." +
                                    std::to_string(hi));
    require(seen.insert(x).second, what + ": repeated q index");
  }
}

void check_r(const MixingInstance& inst, int r, const std::string& what) {
  require(r >= 1 && r <= inst.p(),
          what + ": r must lie in 1..p (p = " + std::to_string(inst.p()) + ")");
}

// Telescoping coefficients h_t - h_next (+ delta), closing with `close`.
std::vector<Rational> telescope(const MixingInstance& inst,
                                const std::vector<int>& t,
                                const Rational& close,
                                const std::vector<Rational>* delta = nullptr) {
  std::vector<Rational> coefs(t.size());
  for (size_t k = 0; k < t.size(); ++k) {
    const Rational& next = k + 1 < t.size() ? inst.h(t[k + 1]) : close;
    coefs[k] = inst.h(t[k]) - next;
    if (delta) coefs[k] += (*delta)[k];
  }
  return coefs;
}

LinearCut star_shape(const MixingInstance& inst, const std::vector<int>& t,
                     const Rational& close, const std::vector<int>& q,
                     const std::vector<Rational>& phi,
                     const std::vector<Rational>* delta = nullptr) {
  return mixing_form(inst.m(), t, telescope(inst, t, close, delta), q, phi,
                     inst.h(t.front()));
}

}  // namespace

LinearCut gen_star(const MixingInstance& inst, const StarParams& params) {
  check_t_set(params.t_set, inst.m(), "star");
  return star_shape(inst, params.t_set, Rational(0), {}, {});
}

LinearCut gen_strengthened_star(const MixingInstance& inst,
                                const StarParams& params) {
  if (params.t_set.empty()) {
    LinearCut cut{1, std::vector<Rational>(inst.m(), Rational(0)),
                  inst.h(inst.p() + 1)};
    return cut;
  }
  check_t_set(params.t_set, inst.p(), "strengthened star");
  return star_shape(inst, params.t_set, inst.h(inst.p() + 1), {}, {});
}

std::vector<Rational> lifted_phi(const MixingInstance& inst, int r,
                                 const std::vector<int>& q,
                                 bool restricted_sum) {
  std::vector<Rational> phi;
  for (size_t k = 0; k < q.size(); ++k) {
    const int iota = static_cast<int>(k) + 1;
    Rational val = inst.h(r + 1) - inst.h(r + iota + 1);
    for (size_t j = 0; j < k; ++j) {
      if (!restricted_sum || q[j] >= r + iota + 1) val -= phi[j];
    }
    phi.push_back(k == 0 ? val : std::max(phi.back(), val));
  }
  return phi;
}

LinearCut gen_luedtke_lifted(const MixingInstance& inst,
                             const LiftedParams& params) {
  require(inst.uniform(), "lifted: requires a uniform instance");
  check_r(inst, params.r, "lifted");
  check_t_set(params.t_set, params.r, "lifted");
  const auto& q = params.q_list;
  require(static_cast<int>(q.size()) == inst.p() - params.r,
          "lifted: |q| must equal p - r");
  check_distinct(q, inst.p() + 1, inst.m(), "lifted");
  require(std::is_sorted(q.begin(), q.end()), "lifted: q must be increasing");
  return star_shape(inst, params.t_set, inst.h(params.r + 1), q,
                    lifted_phi(inst, params.r, q, false));
}

LinearCut gen_kucukyavuz(const MixingInstance& inst, const LiftedParams& params) {
  require(inst.uniform(), "kucukyavuz: requires a uniform instance");
  check_r(inst, params.r, "kucukyavuz");
  check_t_set(params.t_set, params.r, "kucukyavuz");
  const auto& q = params.q_list;
  require(static_cast<int>(q.size()) == inst.p() - params.r,
          "kucukyavuz: |q| must equal p - r");
  check_distinct(q, params.r + 1, inst.m(), "kucukyavuz");
  for (size_t k = 0; k < q.size(); ++k) {
    require(q[k] >= params.r + static_cast<int>(k) + 2,
            "kucukyavuz: q_" + std::to_string(k + 1) + " below r + iota + 1");
  }
  return star_shape(inst, params.t_set, inst.h(params.r + 1), q,
                    lifted_phi(inst, params.r, q, true));
}

std::optional<std::vector<int>> zhao_s_sequence(const MixingInstance& inst,
                                                int r,
                                                const std::vector<int>& q) {
  const int v = static_cast<int>(q.size());
  std::vector<int> w(q);
  std::stable_sort(w.begin(), w.end(),
                   [&](int a, int b) { return inst.pi(a) > inst.pi(b); });
  std::vector<int> s;
  Rational tail = 0;
  std::vector<Rational> W(v);
  for (int k = v - 1; k >= 0; --k) {
    tail += inst.pi(w[k]);
    W[k] = tail;
  }
  for (int iota = 0; iota < v; ++iota) {
    // Largest k with F_k + W <= epsilon; then r + s = k + 1.
    int k = -1;
    Rational acc = 0;
    if (W[iota] <= inst.epsilon()) k = 0;
    for (int i = 1; i <= inst.m() && k == i - 1; ++i) {
      acc += inst.pi(i);
      if (acc + W[iota] <= inst.epsilon()) k = i;
    }
    if (k < 0) return std::nullopt;
    const int s_iota = k + 1 - r;
    if (s_iota < 1) return std::nullopt;
    s.push_back(s_iota);
  }
  s.push_back(inst.p() - r + 1);
  for (size_t k = 1; k < s.size(); ++k) {
    if (s[k - 1] > s[k]) return std::nullopt;
  }
  return s;
}

std::vector<Rational> zhao_phi(const MixingInstance& inst, int r,
                               const std::vector<int>& q,
                               const std::vector<int>& s) {
  std::vector<Rational> phi;
  const Rational& top = inst.h(r + s[0]);
  for (size_t k = 0; k < q.size(); ++k) {
    if (k == 0) {
      phi.push_back(top - inst.h(r + s[1]));
      continue;
    }
    Rational val = top - inst.h(r + s[k] + 1);
    const int bound = r + std::min(1 + s[k], s[k + 1]);
    for (size_t j = 0; j < k; ++j) {
      if (q[j] >= bound) val -= phi[j];
    }
    phi.push_back(std::max(phi.back(), val));
  }
  return phi;
}

LinearCut gen_zhao(const MixingInstance& inst, const LiftedParams& params) {
  check_r(inst, params.r, "zhao");
  check_t_set(params.t_set, params.r, "zhao");
  const auto& q = params.q_list;
  const int v = static_cast<int>(q.size());
  if (v == 0) {
    return star_shape(inst, params.t_set, inst.h(inst.p() + 1), {}, {});
  }
  require(v <= inst.theta() - params.r, "zhao: v exceeds theta - r");
  check_distinct(q, params.r + 1, inst.m(), "zhao");
  auto s = zhao_s_sequence(inst, params.r, q);
  if (!s) {
    throw ValidationError(
        "zhao: the knapsack interval condition admits no s-sequence");
  }
  if (!params.s_list.empty()) {
    require(std::equal(params.s_list.begin(), params.s_list.end(), s->begin(),
                       s->begin() + v) &&
                static_cast<int>(params.s_list.size()) == v,
            "zhao: s_list does not satisfy the knapsack interval condition");
  }
  const auto& sv = *s;
  for (int k = 0; k < v; ++k) {
    require(q[k] >= params.r + sv[0] + 1,
            "zhao: q index " + std::to_string(q[k]) + " below r + s_1 + 1");
    require(q[k] >= params.r + std::min(1 + sv[k], sv[k + 1]),
            "zhao: q_" + std::to_string(k + 1) + " violates its lower bound");
  }
  return star_shape(inst, params.t_set, inst.h(params.r + sv[0]), q,
                    zhao_phi(inst, params.r, q, sv));
}

namespace {

struct UniformShape {
  std::vector<int> s;  // s_1..s_v, s_{v+1}
  int close = 0;       // t_{l+1} = r + s_1
};

UniformShape blp_uniform_shape(const MixingInstance& inst,
                               const BlpUniformParams& params) {
  require(inst.uniform(), "blp uniform: requires a uniform instance");
  check_r(inst, params.r, "blp uniform");
  check_t_set(params.t_set, params.r, "blp uniform");
  require(params.delta.size() == params.t_set.size(),
          "blp uniform: one delta per t index");
  const int p = inst.p();
  const int r = params.r;
  const int v = static_cast<int>(params.q_list.size());
  require(v <= p - r, "blp uniform: v must not exceed p - r");
  UniformShape shape;
  for (int iota = 1; iota <= v + 1; ++iota) shape.s.push_back(p - r - v + iota);
  shape.close = r + shape.s[0];
  check_distinct(params.q_list, r + 1, inst.m(), "blp uniform");
  for (int k = 0; k < v; ++k) {
    require(params.q_list[k] >= r + shape.s[k] + 1,
            "blp uniform: q_" + std::to_string(k + 1) + " below r + s + 1");
  }
  const auto& t = params.t_set;
  const int l = static_cast<int>(t.size());
  Rational sum = 0;
  for (int k = 0; k < l; ++k) {
    const int next = k + 1 < l ? t[k + 1] : shape.close;
    require(params.delta[k] >= inst.h(next) - inst.h(t[k]),
            "blp uniform: delta_" + std::to_string(t[k]) + " below its bound");
    if (k >= 1) require(sum >= 0, "blp uniform: negative delta prefix sum");
    sum += params.delta[k];
  }
  // The prefix condition also covers k = l + 1: at j = r + s_1 the beta
  // coefficient vanishes and the condition reads 0 >= -sum(delta).
  require(sum >= 0, "blp uniform: negative delta sum");
  if (v == 0) {
    require(sum == 0, "blp uniform: v = 0 requires the deltas to sum to zero");
  } else {
    require(sum <= inst.h(shape.close) - inst.h(r + shape.s[1]),
            "blp uniform: delta sum exceeds h_{r+s1} - h_{r+s2}");
  }
  return shape;
}

}  // namespace

std::vector<Rational> blp_uniform_phi(const MixingInstance& inst,
                                      const BlpUniformParams& params) {
  const UniformShape shape = blp_uniform_shape(inst, params);
  Rational dsum = 0;
  for (const auto& d : params.delta) dsum += d;
  const int r = params.r;
  const auto& q = params.q_list;
  const Rational& top = inst.h(shape.close);
  std::vector<Rational> phi;
  for (size_t k = 0; k < q.size(); ++k) {
    if (k == 0) {
      phi.push_back(top - inst.h(r + shape.s[1]) - dsum);
      continue;
    }
    const int bound = r + shape.s[k] + 1;
    Rational val = top - inst.h(bound) - dsum;
    for (size_t j = 0; j < k; ++j) {
      if (q[j] >= bound) val -= phi[j];
    }
    phi.push_back(std::max(phi.back(), val));
  }
  return phi;
}

LinearCut gen_blp_uniform(const MixingInstance& inst,
                          const BlpUniformParams& params) {
  const UniformShape shape = blp_uniform_shape(inst, params);
  const auto phi = blp_uniform_phi(inst, params);
  return star_shape(inst, params.t_set, inst.h(shape.close), params.q_list, phi,
                    &params.delta);
}

namespace {

void check_generic(const MixingInstance& inst, const BlpGenericParams& params) {
  check_r(inst, params.r, "blp generic");
  check_t_set(params.t_set, params.r, "blp generic");
  const auto& t = params.t_set;
  const int l = static_cast<int>(t.size());
  require(static_cast<int>(params.delta.size()) == l,
          "blp generic: one delta per t index");
  Rational sum = 0;
  for (int k = 0; k < l; ++k) {
    const int next = k + 1 < l ? t[k + 1] : params.r + 1;
    require(params.delta[k] >= inst.h(next) - inst.h(t[k]),
            "blp generic: delta_" + std::to_string(t[k]) + " below its bound");
    sum += params.delta[k];
  }
  require(sum <= inst.h(params.r + 1), "blp generic: delta sum exceeds h_{r+1}");
  const auto& q = params.q_list;
  const int v = static_cast<int>(q.size());
  require(v <= inst.p() - params.r + l, "blp generic: v exceeds p - r + l");
  check_distinct(q, params.r + 1, inst.m(), "blp generic");
  require(std::is_sorted(q.begin(), q.end()),
          "blp generic: q must be strictly increasing");
  require(params.phi.size() == q.size(), "blp generic: one phi per q index");
  for (const auto& f : params.phi) require(f >= 0, "blp generic: phi must be >= 0");
}

// h_{t_{a_j+1}} - sum_{t < j} delta.
Rational generic_G(const MixingInstance& inst, const BlpGenericParams& params,
                   int j) {
  const auto& t = params.t_set;
  size_t a = 0;
  Rational dsum = 0;
  while (a < t.size() && t[a] < j) dsum += params.delta[a++];
  const int idx = a < t.size() ? t[a] : params.r + 1;
  return inst.h(idx) - dsum;
}

struct BetaTerms {
  Rational K;
  Rational R;
  Rational lo;
  std::optional<Rational> hi;
  std::vector<Rational> lower_bounds;  // from A_j
  std::vector<Rational> upper_bounds;  // from V \ A_j
};

BetaTerms beta_terms(const MixingInstance& inst, const BlpGenericParams& params,
                     int j, const std::vector<int>& A_j) {
  const int m = inst.m();
  std::vector<char> in_a(params.q_list.size() + 1, 0);
  for (int iota : A_j) {
    require(iota >= 1 && iota <= static_cast<int>(params.q_list.size()),
            "blp generic: A_j entry outside 1..v");
    in_a[iota] = 1;
  }
  BetaTerms bt;
  bt.K = inst.cumulative(j) - inst.pi(j) - inst.epsilon();
  bt.R = generic_G(inst, params, j) - inst.h(j);
  for (size_t k = 0; k < params.q_list.size(); ++k) {
    const int q = params.q_list[k];
    if (q == j) bt.R -= params.phi[k];
    if (q <= j) continue;
    const Rational ratio = params.phi[k] / (m * inst.pi(q));
    bt.K += inst.pi(q);
    if (in_a[k + 1]) {
      bt.K -= inst.pi(q);
      bt.R -= params.phi[k];
      bt.lower_bounds.push_back(ratio);
    } else {
      bt.upper_bounds.push_back(ratio);
    }
  }
  bt.R /= m;
  bt.lo = 0;
  for (const auto& b : bt.lower_bounds) bt.lo = std::max(bt.lo, b);
  for (const auto& b : bt.upper_bounds) {
    if (!bt.hi || b < *bt.hi) bt.hi = b;
  }
  return bt;
}

}  // namespace

std::optional<BetaInterval> blp_beta_interval(const MixingInstance& inst,
                                              const BlpGenericParams& params,
                                              int j,
                                              const std::vector<int>& A_j) {
  BetaTerms bt = beta_terms(inst, params, j, A_j);
  Rational lo = bt.lo;
  std::optional<Rational> hi = bt.hi;
  if (bt.K > 0) {
    lo = std::max(lo, Rational(bt.R / bt.K));
  } else if (bt.K < 0) {
    Rational u = bt.R / bt.K;
    if (!hi || u < *hi) hi = u;
  } else if (bt.R > 0) {
    return std::nullopt;
  }
  if (hi && lo > *hi) return std::nullopt;
  return BetaInterval{lo, hi};
}

BlpGenericResult gen_blp_generic(const MixingInstance& inst,
                                 const BlpGenericParams& params) {
  check_generic(inst, params);
  const int m = inst.m();
  const int v = static_cast<int>(params.q_list.size());
  const bool given = !params.A_sets.empty() || !params.beta.empty();
  if (given) {
    require(static_cast<int>(params.A_sets.size()) == m &&
                static_cast<int>(params.beta.size()) == m,
            "blp generic: certificate needs one A_j and one beta_j per j");
  }
  BlpGenericResult result;
  // When pi'1 <= epsilon the restriction y = e^0 (every x_i = 1, z >= 0) is
  // nonempty and the conditions over j in M say nothing about it. The cut
  // holds at (0, 1) iff the deltas sum to h_{r+1}.
  Rational total_pi = 0;
  for (const auto& w : inst.pi()) total_pi += w;
  if (total_pi <= inst.epsilon()) {
    Rational dsum = 0;
    for (const auto& d : params.delta) dsum += d;
    if (dsum != inst.h(params.r + 1)) {
      result.first_infeasible_j = 0;
      result.reason = "x = 1 is feasible and the delta sum is below h_{r+1}";
      return result;
    }
  }
  for (int j = 1; j <= m; ++j) {
    if (given) {
      const auto& A = params.A_sets[j - 1];
      const Rational& b = params.beta[j - 1];
      auto iv = blp_beta_interval(inst, params, j, A);
      if (!iv || b < iv->lo || (iv->hi && b > *iv->hi)) {
        result.first_infeasible_j = j;
        result.reason = "certificate fails the beta conditions at j = " +
                        std::to_string(j);
        return result;
      }
      result.certificate.A_sets.push_back(A);
      result.certificate.beta.push_back(b);
      continue;
    }
    std::vector<int> above;
    for (int k = 0; k < v; ++k) {
      if (params.q_list[k] > j) above.push_back(k + 1);
    }
    bool found = false;
    for (std::uint64_t mask = 0; mask < (1ULL << above.size()); ++mask) {
      std::vector<int> A;
      for (size_t k = 0; k < above.size(); ++k) {
        if ((mask >> k) & 1U) A.push_back(above[k]);
      }
      auto iv = blp_beta_interval(inst, params, j, A);
      if (!iv) continue;
      result.certificate.A_sets.push_back(A);
      result.certificate.beta.push_back(iv->lo);
      found = true;
      break;
    }
    if (!found) {
      result.first_infeasible_j = j;
      result.reason = "no A_j and beta_j satisfy the conditions at j = " +
                      std::to_string(j);
      result.certificate = {};
      return result;
    }
  }
  result.accepted = true;
  result.cut = star_shape(inst, params.t_set, inst.h(params.r + 1),
                          params.q_list, params.phi, &params.delta);
  return result;
}

int facet_necessity_count(const MixingInstance& inst,
                          const BlpGenericParams& params) {
  BlpGenericParams certified = params;
  const auto res = gen_blp_generic(inst, certified);
  if (!res.accepted) {
    throw ValidationError("facet_necessity_count: " + res.reason);
  }
  const int m = inst.m();
  std::set<int> pq(params.t_set.begin(), params.t_set.end());
  pq.insert(params.q_list.begin(), params.q_list.end());
  int count = 0;
  for (int j = 1; j <= m; ++j) {
    const Rational& b = res.certificate.beta[j - 1];
    BetaTerms bt = beta_terms(inst, params, j, res.certificate.A_sets[j - 1]);
    for (const auto& x : bt.lower_bounds) count += (x == b);
    for (const auto& x : bt.upper_bounds) count += (x == b);
    count += (b * bt.K == bt.R);
    if (b == 0) {
      for (int i = j + 1; i <= m; ++i) count += !pq.count(i);
    }
  }
  return count;
}

}  // namespace mixcut
