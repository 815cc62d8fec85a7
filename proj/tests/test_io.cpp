#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "mixcut/bench.hpp"
#include "mixcut/errors.hpp"
#include "mixcut/io.hpp"

using namespace mixcut;

TEST(InstanceJson, RoundTrip) {
  std::vector<Rational> pi(4, ratio(1, 8));
  pi.resize(10, ratio(1, 12));
  std::vector<Rational> h;
  for (long v : {40, 38, 34, 31, 26, 16, 8, 4, 2, 1}) h.emplace_back(v);
  const auto inst = build_instance(10, h, pi, ratio(1, 2));
  const auto back = instance_from_json(instance_to_json(inst));
  EXPECT_EQ(back.h(), inst.h());
  EXPECT_EQ(back.pi(), inst.pi());
  EXPECT_EQ(back.epsilon(), inst.epsilon());
  EXPECT_EQ(back.theta(), 6);
}

TEST(InstanceJson, PiIsOptionalAndIntegersAreAccepted) {
  const auto inst = instance_from_json(R"({"m": 3, "h": [5, "3", 1], "epsilon": "1/3"})");
  EXPECT_TRUE(inst.uniform());
  EXPECT_EQ(inst.p(), 1);
  EXPECT_EQ(inst.h(2), 3);
}

TEST(InstanceJson, Rejections) {
  EXPECT_THROW(instance_from_json("not json"), ValidationError);
  EXPECT_THROW(instance_from_json(R"({"h": [1], "epsilon": "1"})"), ValidationError);
  EXPECT_THROW(instance_from_json(R"({"m": 1, "h": [1.5], "epsilon": "1"})"), ValidationError);
  EXPECT_THROW(instance_from_json(R"({"m": 2, "h": [1, 2], "epsilon": "1"})"), ValidationError);
  EXPECT_THROW(instance_from_json(R"({"m": "2", "h": [2, 1], "epsilon": "1"})"), ValidationError);
}

TEST(CutJson, RoundTrip) {
  const LinearCut c{1, {ratio(3, 2), Rational(-2), Rational(0)}, ratio(7, 3)};
  EXPECT_EQ(cut_from_json(cut_to_json(c)), c);
  EXPECT_THROW(cut_from_json(R"({"z": 1, "x": [1]})"), ValidationError);
  EXPECT_THROW(cut_from_json(R"({"z": 1, "x": 1, "rhs": 0})"), ValidationError);
}

TEST(GenerateJson, ParamsNestedOrFlat) {
  const std::string inst = R"("instance": {"m": 4, "h": [20, 18, 14, 11], "epsilon": "1/2"})";
  const auto a = generate_request_from_json(
      "{" + inst + R"(, "params": {"r": 2, "t_set": [1], "q_list": [3, 4]}})", Family::Zhao);
  const auto b =
      generate_request_from_json("{" + inst + R"(, "r": 2, "t_set": [1], "q_list": [3, 4]})",
                                 Family::Zhao);
  EXPECT_EQ(a.params.r, 2);
  EXPECT_EQ(a.params.t_set, b.params.t_set);
  EXPECT_EQ(a.params.q_list, b.params.q_list);
  EXPECT_EQ(a.params.family, Family::Zhao);
  EXPECT_THROW(generate_request_from_json(R"({"r": 1})", Family::Star), ValidationError);
}

TEST(CertificateJson, CarriesFamilyAndParams) {
  Certificate c;
  c.family = Family::BlpGeneric;
  c.r = 4;
  c.t_set = {1, 4};
  c.delta = {Rational(-3), Rational(-3)};
  c.q_list = {5, 6};
  c.phi = {Rational(3), Rational(3)};
  c.beta = {ratio(5, 2)};
  c.A_sets = {{1}};
  const std::string text = certificate_to_json(c);
  EXPECT_NE(text.find("\"BlpGeneric\""), std::string::npos);
  EXPECT_NE(text.find("\"5/2\""), std::string::npos);
  // The certificate feeds straight back into a generate request.
  const auto req = generate_request_from_json(
      R"({"instance": {"m": 1, "h": [1], "epsilon": "1"}, )" + text.substr(text.find('"')),
      Family::BlpGeneric);
  EXPECT_EQ(req.params.t_set, c.t_set);
  EXPECT_EQ(req.params.beta, c.beta);
  EXPECT_EQ(req.params.A_sets, c.A_sets);
}

TEST(FacetSetJson, CountsMatch) {
  const auto fs = enumerate_facets(benchmark_instance(Example::L, 3, 2));
  const std::string text = facet_set_to_json(fs);
  EXPECT_NE(text.find("\"vertical_count\": " + std::to_string(fs.vertical.size())),
            std::string::npos);
}

TEST(BilinearJson, InstanceShortcutBuildsSc) {
  const auto in = bilinear_set_from_json(R"({"instance": {"m": 3, "h": [3, 2, 1], "epsilon": "2/3"}})");
  ASSERT_TRUE(in.instance);
  EXPECT_EQ(in.set.n, 4);
  EXPECT_EQ(in.set.constraints.size(), 15u);
}

TEST(BilinearJson, GenericSetAndAssignment) {
  const auto in = bilinear_set_from_json(R"({
    "n": 1, "m": 1,
    "constraints": [{"A": [[1]], "b": [0], "c": ["-1/2"], "d": 0, "label": "k"}],
    "E": [[-1]], "f": [-1], "upper_bound_row": [0],
    "complementarity": [], "complement_complementarity": []
  })");
  EXPECT_FALSE(in.instance);
  EXPECT_EQ(in.set.constraints[0].c[0], ratio(-1, 2));
  const auto a = assignment_from_json(R"({
    "base_k": 0, "base_j": 1,
    "K_sets": [[], []], "T_sets": [[{"index": 0, "weight": "2"}], []],
    "r0_up": "all", "r0_down": [[0, 1]], "eliminate_complementarity": false
  })", in.set);
  EXPECT_EQ(a.base_j, 1);
  EXPECT_EQ(a.T_sets[0][0].weight, 2);
  EXPECT_EQ(a.r0_up, Policy::All);
  EXPECT_EQ(a.r0_down, Policy::Listed);
  EXPECT_EQ(a.r0_down_terms.size(), 1u);
  EXPECT_FALSE(a.eliminate_complementarity);
  EXPECT_THROW(assignment_from_json(R"({"base_k": 0, "base_j": 0, "r0_up": "some"})", in.set),
               ValidationError);
  EXPECT_THROW(
      assignment_from_json(R"({"base_k": 0, "base_j": 0, "eliminate_complementarity": 1})", in.set),
      ValidationError);
  EXPECT_THROW(bilinear_set_from_json(R"({"n": 1, "m": 1, "constraints": [{"A": [[1]]}]})"),
               ValidationError);
}

TEST(Files, ReadWrite) {
  const auto path = std::filesystem::temp_directory_path() / "mixcut_io_test.txt";
  write_file(path.string(), "hello\n");
  EXPECT_EQ(read_file(path.string()), "hello\n");
  std::filesystem::remove(path);
  EXPECT_THROW(read_file(path.string()), ValidationError);
  EXPECT_THROW(write_file("/nonexistent-dir/x", "x"), ValidationError);
}
