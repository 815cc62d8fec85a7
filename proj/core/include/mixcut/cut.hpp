#pragma once

#include <map>
#include <string>
#include <vector>

#include "mixcut/instance.hpp"
#include "mixcut/rational.hpp"

namespace mixcut {

// z_coef * z + sum_i x[i-1] * x_i >= rhs.
struct LinearCut {
  Rational z_coef;
  std::vector<Rational> x;
  Rational rhs;

  bool operator==(const LinearCut& other) const = default;

  Rational lhs(const Rational& z, const std::vector<int>& point) const;
  bool holds_at(const Vertex& v) const { return lhs(v.z, v.x) >= rhs; }
  bool tight_at(const Vertex& v) const { return lhs(v.z, v.x) == rhs; }
};

// Total order on canonical cuts, used to sort facet lists deterministically.
bool operator<(const LinearCut& a, const LinearCut& b);

// Scales to z_coef = 1, or, when z_coef = 0, so that the first nonzero x
// coefficient has absolute value 1. Throws ValidationError on the zero cut.
LinearCut canonicalize(const LinearCut& cut);

// Valid at every minimal-z point and non-negative on the recession ray (1,0).
bool cut_is_valid(const MixingInstance& inst, const LinearCut& cut);
bool cut_is_valid(const std::vector<Vertex>& vertices, const LinearCut& cut);

// z + sum coefs[k] x_{t_set[k]} + sum phis[k] (1 - x_{phi_set[k]}) >= rhs_base,
// expanded and canonicalized. Indices are 1-based.
LinearCut mixing_form(int m, const std::vector<int>& t_set,
                      const std::vector<Rational>& coefs,
                      const std::vector<int>& phi_set,
                      const std::vector<Rational>& phis,
                      const Rational& rhs_base);

struct MixingForm {
  std::map<int, Rational> P;  // positive coefficients
  std::map<int, Rational> Q;  // phi_q = -coefficient
  Rational rhs_base;
  // rhs_base equals h_{min P} (or P is empty). Checkers decide what to do
  // with inconsistent shapes; the parse itself never drops them.
  bool consistent = true;
};

// Inverse of mixing_form. Throws ValidationError if z_coef != 1.
MixingForm parse_mixing_form(const MixingInstance& inst, const LinearCut& cut);

// "z + 6x1 + 2x4 - 3x5 - 3x6 >= 14".
std::string to_string(const LinearCut& cut);

}  // namespace mixcut
