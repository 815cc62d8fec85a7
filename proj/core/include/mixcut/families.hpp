#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mixcut/cut.hpp"
#include "mixcut/instance.hpp"

namespace mixcut {

// All scenario indices below are 1-based.

struct StarParams {
  std::vector<int> t_set;  // strictly increasing
};

// Shared by the three lifted star families. q_list order is significant for
// the Kucukyavuz and Zhao recursions.
struct LiftedParams {
  int r = 0;
  std::vector<int> t_set;
  std::vector<int> q_list;
  std::vector<int> s_list;  // Zhao only: s_1..s_v; derived when left empty
};

struct BlpUniformParams {
  int r = 0;
  std::vector<int> t_set;
  std::vector<Rational> delta;  // one per t
  std::vector<int> q_list;      // order significant
};

struct BlpGenericParams {
  int r = 0;
  std::vector<int> t_set;
  std::vector<Rational> delta;  // one per t
  std::vector<int> q_list;      // strictly increasing
  std::vector<Rational> phi;    // one per q, non-negative
  // Optional certificate. When empty, gen_blp_generic searches for one.
  std::vector<std::vector<int>> A_sets;  // per j = 1..m, subsets of 1..v
  std::vector<Rational> beta;            // per j = 1..m
};

// z + sum (h_t - h_next) x_t >= h_{t_1}, closing with h := 0.
LinearCut gen_star(const MixingInstance& inst, const StarParams& params);
// Same telescope closed with h_{p+1}; requires t_set within 1..p.
LinearCut gen_strengthened_star(const MixingInstance& inst,
                                const StarParams& params);
LinearCut gen_luedtke_lifted(const MixingInstance& inst,
                             const LiftedParams& params);
LinearCut gen_kucukyavuz(const MixingInstance& inst, const LiftedParams& params);
LinearCut gen_zhao(const MixingInstance& inst, const LiftedParams& params);
LinearCut gen_blp_uniform(const MixingInstance& inst,
                          const BlpUniformParams& params);

// The s-sequence forced by the knapsack interval condition for a given r and
// Q, or nullopt if some s_iota does not exist. Entry k is s_{k+1}; the list
// has v + 1 entries ending in p - r + 1.
std::optional<std::vector<int>> zhao_s_sequence(const MixingInstance& inst,
                                                int r,
                                                const std::vector<int>& q_list);

// phi values produced by the lifting recursions, aligned with q_list.
std::vector<Rational> lifted_phi(const MixingInstance& inst, int r,
                                 const std::vector<int>& q_list,
                                 bool restricted_sum);
std::vector<Rational> zhao_phi(const MixingInstance& inst, int r,
                               const std::vector<int>& q_list,
                               const std::vector<int>& s);
std::vector<Rational> blp_uniform_phi(const MixingInstance& inst,
                                      const BlpUniformParams& params);

struct BlpCertificate {
  std::vector<std::vector<int>> A_sets;  // per j = 1..m, entries in 1..v
  std::vector<Rational> beta;            // per j = 1..m
};

struct BlpGenericResult {
  bool accepted = false;
  LinearCut cut;                // set when accepted
  BlpCertificate certificate;   // set when accepted
  int first_infeasible_j = 0;   // set when rejected; 0 for the all-ones branch
  std::string reason;
};

// Checks the structural conditions (throws ValidationError when they fail),
// then verifies a given certificate or searches one per j by enumerating A_j
// and intersecting the beta intervals exactly.
BlpGenericResult gen_blp_generic(const MixingInstance& inst,
                                 const BlpGenericParams& params);

// Beta interval for one j under a fixed A_j; empty optional when infeasible.
// Exposed for tests and the necessity counter.
struct BetaInterval {
  Rational lo;
  std::optional<Rational> hi;  // unbounded above when empty
};
std::optional<BetaInterval> blp_beta_interval(const MixingInstance& inst,
                                              const BlpGenericParams& params,
                                              int j,
                                              const std::vector<int>& A_j);

// Number of the beta conditions that hold with equality at the certificate.
// Throws ValidationError for a certificate that does not verify.
int facet_necessity_count(const MixingInstance& inst,
                          const BlpGenericParams& params);

enum class Family {
  Star,
  StrengthenedStar,
  Lifted,
  Kucukyavuz,
  Zhao,
  BlpUniform,
  BlpGeneric,
};

const std::vector<Family>& all_families();
std::string family_name(Family family);
// Accepts the enum spelling case-insensitively plus short aliases.
Family parse_family(const std::string& name);

struct Certificate {
  Family family = Family::Star;
  int r = 0;
  std::vector<int> t_set;
  std::vector<Rational> delta;
  std::vector<int> q_list;
  std::vector<Rational> phi;
  std::vector<int> s_list;
  std::vector<std::vector<int>> A_sets;
  std::vector<Rational> beta;
};

struct Membership {
  bool member = false;
  std::optional<Certificate> certificate;
};

// True iff some parameterization of the family reproduces the facet exactly.
// The facet z >= h_{p+1} belongs to every family. Throws ValidationError for
// z_coef != 1.
Membership member_of(const MixingInstance& inst, const LinearCut& facet,
                     Family family);

// Re-runs the generator named by the certificate.
LinearCut regenerate(const MixingInstance& inst, const Certificate& cert);

}  // namespace mixcut
