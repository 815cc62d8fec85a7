#include "mixcut/cut.hpp"

#include <set>
#include <sstream>

#include "mixcut/errors.hpp"
#include "mixcut/hull.hpp"

namespace mixcut {

Rational LinearCut::lhs(const Rational& z, const std::vector<int>& point) const {
  Rational s = z_coef * z;
  for (size_t i = 0; i < x.size(); ++i) {
    if (point[i]) s += x[i];
  }
  return s;
}

bool operator<(const LinearCut& a, const LinearCut& b) {
  if (a.z_coef != b.z_coef) return a.z_coef > b.z_coef;
  if (a.x.size() != b.x.size()) return a.x.size() < b.x.size();
  for (size_t i = 0; i < a.x.size(); ++i) {
    if (a.x[i] != b.x[i]) return a.x[i] > b.x[i];
  }
  return a.rhs > b.rhs;
}

LinearCut canonicalize(const LinearCut& cut) {
  Rational scale = 0;
  if (cut.z_coef != 0) {
    scale = abs(cut.z_coef);
  } else {
    for (const auto& c : cut.x) {
      if (c != 0) {
        scale = abs(c);
        break;
      }
    }
  }
  if (scale == 0) throw ValidationError("cannot canonicalize the zero cut");
  LinearCut out;
  out.z_coef = cut.z_coef / scale;
  out.x.reserve(cut.x.size());
  for (const auto& c : cut.x) out.x.push_back(c / scale);
  out.rhs = cut.rhs / scale;
  return out;
}

bool cut_is_valid(const std::vector<Vertex>& vertices, const LinearCut& cut) {
  if (cut.z_coef < 0) return false;
  for (const auto& v : vertices) {
    if (v.x.size() != cut.x.size()) {
      throw ValidationError("cut dimension does not match the instance");
    }
    if (!cut.holds_at(v)) return false;
  }
  return true;
}

bool cut_is_valid(const MixingInstance& inst, const LinearCut& cut) {
  if (static_cast<int>(cut.x.size()) != inst.m()) {
    throw ValidationError("cut has " + std::to_string(cut.x.size()) +
                          " x coefficients, instance has m = " +
                          std::to_string(inst.m()));
  }
  return cut_is_valid(enumerate_vertices(inst), cut);
}

LinearCut mixing_form(int m, const std::vector<int>& t_set,
                      const std::vector<Rational>& coefs,
                      const std::vector<int>& phi_set,
                      const std::vector<Rational>& phis,
                      const Rational& rhs_base) {
  if (t_set.size() != coefs.size() || phi_set.size() != phis.size()) {
    throw ValidationError("index and coefficient lists differ in length");
  }
  std::set<int> seen;
  for (int t : t_set) {
    if (t < 1 || t > m) throw ValidationError("index out of range");
    if (!seen.insert(t).second) throw ValidationError("repeated index");
  }
  for (int q : phi_set) {
    if (q < 1 || q > m) throw ValidationError("index out of range");
    if (!seen.insert(q).second) {
      throw ValidationError("t and phi index sets overlap at " +
                            std::to_string(q));
    }
  }
  LinearCut cut;
  cut.z_coef = 1;
  cut.x.assign(m, Rational(0));
  cut.rhs = rhs_base;
  for (size_t k = 0; k < t_set.size(); ++k) cut.x[t_set[k] - 1] += coefs[k];
  for (size_t k = 0; k < phis.size(); ++k) {
    if (phis[k] < 0) throw ValidationError("phi must be non-negative");
    cut.x[phi_set[k] - 1] -= phis[k];
    cut.rhs -= phis[k];
  }
  return cut;
}

MixingForm parse_mixing_form(const MixingInstance& inst, const LinearCut& cut) {
  if (cut.z_coef != 1) throw ValidationError("parse requires z_coef = 1");
  if (static_cast<int>(cut.x.size()) != inst.m()) {
    throw ValidationError("cut dimension does not match the instance");
  }
  MixingForm form;
  form.rhs_base = cut.rhs;
  for (int i = 1; i <= inst.m(); ++i) {
    const Rational& c = cut.x[i - 1];
    if (c > 0) form.P[i] = c;
    if (c < 0) {
      form.Q[i] = -c;
      form.rhs_base += -c;
    }
  }
  if (!form.P.empty()) {
    form.consistent = form.rhs_base == inst.h(form.P.begin()->first);
  }
  return form;
}

std::string to_string(const LinearCut& cut) {
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Rational& c, const std::string& var) {
    if (c == 0) return;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rational a = abs(c);
    if (a != 1) os << to_string(a);
    os << var;
    first = false;
  };
  term(cut.z_coef, "z");
  for (size_t i = 0; i < cut.x.size(); ++i) {
    term(cut.x[i], "x" + std::to_string(i + 1));
  }
  if (first) os << "0";
  os << " >= " << to_string(cut.rhs);
  return os.str();
}

}  // namespace mixcut
