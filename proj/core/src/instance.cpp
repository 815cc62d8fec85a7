#include "mixcut/instance.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mixcut/errors.hpp"

namespace mixcut {

const Rational& MixingInstance::h(int i) const {
  if (i == m_ + 1) return zero_;
  if (i < 1 || i > m_) {
    throw ValidationError("scenario index out of range: " + std::to_string(i));
  }
  return h_[i - 1];
}

const Rational& MixingInstance::pi(int i) const {
  if (i < 1 || i > m_) {
    throw ValidationError("scenario index out of range: " + std::to_string(i));
  }
  return pi_[i - 1];
}

Rational MixingInstance::cumulative(int j) const {
  Rational s = 0;
  for (int i = 1; i <= j && i <= m_; ++i) s += pi_[i - 1];
  return s;
}

MixingInstance build_instance(int m, std::vector<Rational> h,
                              std::optional<std::vector<Rational>> pi,
                              Rational epsilon) {
  if (m < 1) throw ValidationError("m must be positive");
  if (static_cast<int>(h.size()) != m) {
    throw ValidationError("h has " + std::to_string(h.size()) +
                          " entries, expected " + std::to_string(m));
  }
  for (int i = 0; i < m; ++i) {
    if (h[i] < 0) throw ValidationError("h must be non-negative");
    if (i > 0 && h[i] > h[i - 1]) {
      throw ValidationError("h must be non-increasing (h_" +
                            std::to_string(i) + " < h_" +
                            std::to_string(i + 1) + ")");
    }
  }
  if (epsilon < 0 || epsilon > 1) {
    throw ValidationError("epsilon must lie in [0, 1]");
  }

  MixingInstance inst;
  inst.m_ = m;
  inst.h_ = std::move(h);
  inst.epsilon_ = epsilon;
  if (pi) {
    if (static_cast<int>(pi->size()) != m) {
      throw ValidationError("pi has " + std::to_string(pi->size()) +
                            " entries, expected " + std::to_string(m));
    }
    inst.pi_ = std::move(*pi);
  } else {
    inst.pi_.assign(m, Rational(1, m));
  }

  Rational total = 0;
  for (int i = 0; i < m; ++i) {
    if (inst.pi_[i] <= 0) throw ValidationError("pi must be positive");
    if (inst.pi_[i] > epsilon) {
      throw ValidationError("pi_" + std::to_string(i + 1) +
                            " exceeds epsilon");
    }
    total += inst.pi_[i];
  }
  if (total != 1) {
    throw ValidationError("pi must sum to 1 (got " + to_string(total) + ")");
  }

  inst.uniform_ = std::all_of(inst.pi_.begin(), inst.pi_.end(),
                              [&](const Rational& v) { return v == Rational(1, m); });

  Rational acc = 0;
  inst.p_ = 0;
  for (int k = 1; k <= m; ++k) {
    acc += inst.pi_[k - 1];
    if (acc <= epsilon) inst.p_ = k;
    else break;
  }

  inst.order_.resize(m);
  std::iota(inst.order_.begin(), inst.order_.end(), 1);
  std::stable_sort(inst.order_.begin(), inst.order_.end(), [&](int a, int b) {
    return inst.pi_[a - 1] < inst.pi_[b - 1];
  });
  acc = 0;
  inst.theta_ = 0;
  for (int k = 1; k <= m; ++k) {
    acc += inst.pi_[inst.order_[k - 1] - 1];
    if (acc <= epsilon) inst.theta_ = k;
    else break;
  }
  return inst;
}

}  // namespace mixcut
