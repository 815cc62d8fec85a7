#include <gtest/gtest.h>

#include <random>

#include "mixcut/bench.hpp"
#include "mixcut/errors.hpp"
#include "mixcut/families.hpp"
#include "mixcut/hull.hpp"
#include "samplers.hpp"
#include "sweep.hpp"

using namespace mixcut;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// Non-uniform instance: pi_1..4 = 1/8, pi_5..10 = 1/12, epsilon = 1/2.
MixingInstance nonuniform_k() {
  std::vector<Rational> pi(4, ratio(1, 8));
  pi.resize(10, ratio(1, 12));
  return build_instance(10, ints({40, 38, 34, 31, 26, 16, 8, 4, 2, 1}), pi, ratio(1, 2));
}

LinearCut ex1_cut() {
  return mixing_form(10, {1, 4}, ints({6, 2}), {5, 6}, ints({3, 3}), Rational(20));
}

BlpGenericParams ex1_params() {
  return BlpGenericParams{4, {1, 4}, ints({-3, -3}), {5, 6}, ints({3, 3}), {}, {}};
}

}  // namespace

TEST(Star, TelescopeClosesAtZero) {
  const auto inst = benchmark_instance(Example::L, 4, 2);
  EXPECT_EQ(gen_star(inst, {{1, 3}}), mixing_form(4, {1, 3}, ints({6, 14}), {}, {}, Rational(20)));
  EXPECT_THROW(gen_star(inst, {{3, 1}}), ValidationError);
  EXPECT_THROW(gen_star(inst, {{}}), ValidationError);
}

TEST(StrengthenedStar, TelescopeClosesAtHpPlusOne) {
  const auto inst = benchmark_instance(Example::L, 4, 2);
  EXPECT_EQ(gen_strengthened_star(inst, {{1, 2}}),
            mixing_form(4, {1, 2}, ints({2, 4}), {}, {}, Rational(20)));
  EXPECT_EQ(gen_strengthened_star(inst, {{}}),
            (LinearCut{1, std::vector<Rational>(4, Rational(0)), Rational(14)}));
  EXPECT_THROW(gen_strengthened_star(inst, {{3}}), ValidationError);
}

TEST(Lifted, PhiRecursionByHand) {
  const auto inst = benchmark_instance(Example::L, 10, 4);
  // r = 2, q = (5, 6): phi_1 = h_3 - h_4 = 3, phi_2 = max(3, h_3 - h_5 - 3) = 5.
  EXPECT_EQ(lifted_phi(inst, 2, {5, 6}, false), ints({3, 5}));
  EXPECT_EQ(lifted_phi(inst, 2, {5, 6}, true), ints({3, 5}));
  const LinearCut c = gen_luedtke_lifted(inst, {2, {1}, {5, 6}, {}});
  EXPECT_EQ(c, mixing_form(10, {1}, ints({6}), {5, 6}, ints({3, 5}), Rational(20)));
  EXPECT_THROW(gen_luedtke_lifted(inst, {2, {1}, {6, 5}, {}}), ValidationError);
  EXPECT_THROW(gen_luedtke_lifted(inst, {2, {1}, {5}, {}}), ValidationError);
}

TEST(Kucukyavuz, RestrictedSumSkipsLowQ) {
  const auto inst = benchmark_instance(Example::L, 10, 4);
  // q_1 = 3 < r + 3 = 4 drops out of the second sum: phi_2 = max(h_2 - h_3, h_2 - h_4) = 7.
  EXPECT_EQ(lifted_phi(inst, 1, {3, 6, 7}, true), ints({4, 7, 7}));
  EXPECT_NO_THROW(gen_kucukyavuz(inst, {1, {1}, {3, 6, 7}, {}}));
  EXPECT_THROW(gen_kucukyavuz(inst, {1, {1}, {2, 6, 7}, {}}), ValidationError);
}

TEST(Zhao, UniformSSequence) {
  const auto inst = benchmark_instance(Example::L, 10, 4);
  const auto s = zhao_s_sequence(inst, 1, {6, 8, 7});
  ASSERT_TRUE(s);
  EXPECT_EQ(*s, (std::vector<int>{1, 2, 3, 4}));
}

// L(10, 4) worked cut: facet-defining, generic BL&P with a certificate,
// and outside the Zhao and uniform BL&P families.
TEST(WorkedExample, GenericCutFromKnownCertificate) {
  const auto inst = benchmark_instance(Example::L, 10, 4);
  auto params = ex1_params();
  params.A_sets.assign(10, {});
  params.A_sets[4] = {1};
  params.A_sets[5] = {1, 2};
  params.beta = {0, 0, 0, 3, 3, 4, 4, 3, ratio(5, 2), ratio(11, 5)};
  const auto res = gen_blp_generic(inst, params);
  ASSERT_TRUE(res.accepted) << res.reason;
  EXPECT_EQ(res.cut, ex1_cut());
  EXPECT_EQ(to_string(res.cut), "z + 6x1 + 2x4 - 3x5 - 3x6 >= 14");
}

TEST(WorkedExample, GenericCertificateSearch) {
  const auto inst = benchmark_instance(Example::L, 10, 4);
  const auto res = gen_blp_generic(inst, ex1_params());
  ASSERT_TRUE(res.accepted) << res.reason;
  EXPECT_EQ(res.cut, ex1_cut());
  // The certificate found must itself verify.
  auto params = ex1_params();
  params.A_sets = res.certificate.A_sets;
  params.beta = res.certificate.beta;
  EXPECT_TRUE(gen_blp_generic(inst, params).accepted);
}

TEST(WorkedExample, GenericCutMembership) {
  const auto inst = benchmark_instance(Example::L, 10, 4);
  const LinearCut cut = ex1_cut();
  EXPECT_TRUE(is_facet(inst, cut));
  const auto g = member_of(inst, cut, Family::BlpGeneric);
  ASSERT_TRUE(g.member);
  ASSERT_TRUE(g.certificate);
  EXPECT_EQ(g.certificate->beta.size(), 10u);
  EXPECT_EQ(regenerate(inst, *g.certificate), cut);
  EXPECT_FALSE(member_of(inst, cut, Family::Zhao).member);
  EXPECT_FALSE(member_of(inst, cut, Family::BlpUniform).member);
}

// Non-uniform K: a Zhao facet with no generic BL&P certificate.
TEST(WorkedExample, ZhaoCutOutsideGeneric) {
  const auto inst = nonuniform_k();
  EXPECT_EQ(inst.p(), 4);
  EXPECT_EQ(inst.theta(), 6);
  const LinearCut cut = gen_zhao(inst, {1, {1}, {4, 7, 8}, {}});
  EXPECT_EQ(cut, mixing_form(10, {1}, ints({2}), {4, 7, 8}, ints({4, 4, 8}), Rational(40)));
  EXPECT_EQ(to_string(cut), "z + 2x1 - 4x4 - 4x7 - 8x8 >= 24");

  const BlpGenericParams params{1, {1}, ints({0}), {4, 7, 8}, ints({4, 4, 8}), {}, {}};
  const auto res = gen_blp_generic(inst, params);
  EXPECT_FALSE(res.accepted);
  ASSERT_GE(res.first_infeasible_j, 1);
  // Every A_j fails for the reported j.
  const int j = res.first_infeasible_j;
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<int> A;
    for (int b = 0; b < 3; ++b) {
      if (mask >> b & 1) A.push_back(b + 1);
    }
    EXPECT_FALSE(blp_beta_interval(inst, params, j, A)) << "A mask " << mask;
  }
  EXPECT_FALSE(member_of(inst, cut, Family::BlpGeneric).member);
}

// Uniform BL&P with delta_1 = 1 and q = (6, 8, 7).
TEST(WorkedExample, UniformCutOutsideZhao) {
  const auto inst = benchmark_instance(Example::L, 10, 4);
  const BlpUniformParams params{1, {1}, ints({1}), {6, 8, 7}};
  EXPECT_EQ(blp_uniform_phi(inst, params), ints({3, 3, 5}));
  const LinearCut cut = gen_blp_uniform(inst, params);
  EXPECT_EQ(cut, mixing_form(10, {1}, ints({3}), {6, 7, 8}, ints({3, 5, 3}), Rational(20)));
  EXPECT_TRUE(is_facet(inst, cut));
  EXPECT_FALSE(member_of(inst, cut, Family::Zhao).member);
  EXPECT_TRUE(member_of(inst, cut, Family::BlpUniform).member);
  EXPECT_TRUE(member_of(inst, cut, Family::BlpGeneric).member);
}

TEST(Generic, StructuralChecks) {
  const auto inst = benchmark_instance(Example::L, 10, 4);
  auto bad = ex1_params();
  bad.delta = ints({-10, -3});  // below h_4 - h_1 = -9
  EXPECT_THROW(gen_blp_generic(inst, bad), ValidationError);
  bad = ex1_params();
  bad.q_list = {6, 5};
  EXPECT_THROW(gen_blp_generic(inst, bad), ValidationError);
  bad = ex1_params();
  bad.phi = ints({3, -1});
  EXPECT_THROW(gen_blp_generic(inst, bad), ValidationError);
  bad = ex1_params();
  bad.r = 5;
  EXPECT_THROW(gen_blp_generic(inst, bad), ValidationError);
}

TEST(Uniform, NegativeDeltaSumIsRejected) {
  // Without the check this gives z + 6(1 - x3) >= 20, cut off by x = (1, 0, 1), z = 18.
  const auto inst = benchmark_instance(Example::L, 3, 2);
  EXPECT_THROW(gen_blp_uniform(inst, {1, {1}, ints({-2}), {3}}), ValidationError);
  const BlpGenericParams gp{1, {1}, ints({-2}), {3}, ints({6}), {}, {}};
  EXPECT_FALSE(gen_blp_generic(inst, gp).accepted);
  EXPECT_TRUE(cut_is_valid(inst, gen_blp_uniform(inst, {1, {1}, ints({0}), {3}})));
}

TEST(Generic, AllOnesPointWhenKnapsackIsSlack) {
  // p = m: x = 1, z = 0 is feasible, so the deltas must sum to h_{r+1}.
  const auto inst = benchmark_instance(Example::L, 2, 2);
  const auto bad = gen_blp_generic(inst, {1, {1}, ints({0}), {2}, ints({0}), {}, {}});
  EXPECT_FALSE(bad.accepted);
  EXPECT_EQ(bad.first_infeasible_j, 0);
  const auto good = gen_blp_generic(inst, {1, {1}, ints({18}), {2}, ints({0}), {}, {}});
  ASSERT_TRUE(good.accepted) << good.reason;
  EXPECT_TRUE(cut_is_valid(inst, good.cut));
}

TEST(Generic, NecessityCountRequiresVerifiedCertificate) {
  const auto inst = benchmark_instance(Example::L, 10, 4);
  auto params = ex1_params();
  params.A_sets.assign(10, {});
  params.beta.assign(10, Rational(0));
  EXPECT_THROW(facet_necessity_count(inst, params), ValidationError);
  const auto res = gen_blp_generic(inst, ex1_params());
  params.A_sets = res.certificate.A_sets;
  params.beta = res.certificate.beta;
  EXPECT_GT(facet_necessity_count(inst, params), 0);
}

TEST(Membership, TrivialBoundBelongsToEveryFamily) {
  for (int p = 1; p <= 5; ++p) {
    const auto inst = benchmark_instance(Example::K, 6, p);
    const LinearCut bound{1, std::vector<Rational>(6, Rational(0)), inst.h(p + 1)};
    for (Family f : all_families()) EXPECT_TRUE(member_of(inst, bound, f).member);
  }
}

TEST(Membership, RejectsVerticalCuts) {
  const auto inst = benchmark_instance(Example::L, 4, 2);
  const LinearCut v{0, ints({-1, 0, 0, 0}), Rational(-1)};
  EXPECT_THROW(member_of(inst, v, Family::Zhao), ValidationError);
}

TEST(Membership, CertificatesRegenerateTheFacet) {
  for (Example e : {Example::L, Example::K}) {
    for (int m = 3; m <= 6; ++m) {
      for (int p = 2; p < m; ++p) {
        const auto inst = benchmark_instance(e, m, p);
        for (const auto& f : enumerate_facets(inst).nonvertical) {
          for (Family fam : all_families()) {
            const auto res = member_of(inst, f, fam);
            if (!res.member) continue;
            ASSERT_TRUE(res.certificate);
            EXPECT_EQ(regenerate(inst, *res.certificate), f) << family_name(fam) << " " << to_string(f);
          }
        }
      }
    }
  }
}

TEST(Membership, NestingUpToSix) {
  for (Example e : {Example::L, Example::K}) {
    for (int m = 2; m <= 6; ++m) {
      for (int p = 1; p <= m; ++p) {
        const auto inst = benchmark_instance(e, m, p);
        for (const auto& f : enumerate_facets(inst).nonvertical) {
          bool prev = false;
          for (Family fam : all_families()) {
            const bool now = member_of(inst, f, fam).member;
            EXPECT_TRUE(!prev || now) << family_name(fam) << " " << to_string(f);
            prev = now;
          }
        }
      }
    }
  }
}

TEST(Families, NamesRoundTrip) {
  for (Family f : all_families()) EXPECT_EQ(parse_family(family_name(f)), f);
  EXPECT_EQ(parse_family("blp-generic"), Family::BlpGeneric);
  EXPECT_EQ(parse_family("uniform"), Family::BlpUniform);
  EXPECT_EQ(parse_family("ZHAO"), Family::Zhao);
  EXPECT_THROW(parse_family("nope"), ValidationError);
}

TEST(Validity, SweepUpToFive) {
  for (Example e : {Example::L, Example::K}) {
    for (int m = 2; m <= 5; ++m) {
      for (int p = 1; p <= m; ++p) {
        const auto inst = benchmark_instance(e, m, p);
        const auto vertices = enumerate_vertices(inst);
        long bad = 0;
        const auto stats = sweep::run(inst, [&](Family f, const LinearCut& c) {
          if (!cut_is_valid(vertices, c)) {
            ++bad;
            ADD_FAILURE() << example_name(e) << m << "," << p << " " << family_name(f) << " " << to_string(c);
          }
        });
        EXPECT_EQ(bad, 0);
        EXPECT_GT(stats.generated, 0);
      }
    }
  }
}

TEST(Validity, NonUniformSweep) {
  const auto inst = nonuniform_k();
  const auto vertices = enumerate_vertices(inst);
  long generated = 0;
  const auto stats = sweep::run(inst, [&](Family f, const LinearCut& c) {
    ++generated;
    EXPECT_TRUE(cut_is_valid(vertices, c)) << family_name(f) << " " << to_string(c);
  });
  EXPECT_EQ(stats.generated, generated);
}

TEST(ZeroDelta, UniformMatchesZhao) {
  std::mt19937 rng(41);
  for (int k = 0; k < 200; ++k) {
    const auto s = samplers::zero_delta_sample(rng, 7);
    EXPECT_EQ(gen_blp_uniform(s.inst, s.blp), gen_zhao(s.inst, s.lifted)) << "sample " << k;
  }
}
