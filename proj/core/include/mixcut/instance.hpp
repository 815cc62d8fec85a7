#pragma once

#include <optional>
#include <vector>

#include "mixcut/rational.hpp"

namespace mixcut {

// The mixing set with a knapsack constraint:
//   x_i = 0  =>  z >= h_i,   pi . x <= epsilon,   x binary, z >= 0.
// Scenario indices are 1-based in every public accessor.
class MixingInstance {
 public:
  int m() const { return m_; }
  const std::vector<Rational>& h() const { return h_; }
  const std::vector<Rational>& pi() const { return pi_; }
  const Rational& epsilon() const { return epsilon_; }
  int p() const { return p_; }
  int theta() const { return theta_; }
  bool uniform() const { return uniform_; }

  // h_i for 1 <= i <= m; h_{m+1} := 0 so telescoping sums can close.
  const Rational& h(int i) const;
  const Rational& pi(int i) const;

  // <1>..<m>: scenario indices ordered by non-decreasing probability, ties
  // broken by index.
  const std::vector<int>& order() const { return order_; }

  // pi_1 + ... + pi_j.
  Rational cumulative(int j) const;

 private:
  friend MixingInstance build_instance(int, std::vector<Rational>,
                                       std::optional<std::vector<Rational>>,
                                       Rational);
  MixingInstance() = default;

  int m_ = 0;
  std::vector<Rational> h_;
  std::vector<Rational> pi_;
  Rational epsilon_;
  int p_ = 0;
  int theta_ = 0;
  bool uniform_ = false;
  std::vector<int> order_;
  Rational zero_;
};

// Validates and derives p, theta and the probability order. Omitted pi means
// uniform 1/m. Requires sum(pi) == 1 exactly.
MixingInstance build_instance(int m, std::vector<Rational> h,
                              std::optional<std::vector<Rational>> pi,
                              Rational epsilon);

// A minimal-z point of F_c: feasible binary x with z = max{h_i : x_i = 0}.
struct Vertex {
  Rational z;
  std::vector<int> x;

  bool operator==(const Vertex& other) const = default;
};

}  // namespace mixcut
