#include "mixcut/hull.hpp"

#include <algorithm>

#include "mixcut/errors.hpp"

namespace mixcut {

std::vector<Vertex> enumerate_vertices(const MixingInstance& inst, int guard) {
  const int m = inst.m();
  if (m > guard) {
    throw ResourceLimitError("vertex enumeration refused for m = " +
                             std::to_string(m) + " (guard " +
                             std::to_string(guard) + ")");
  }
  std::vector<Vertex> out;
  const std::uint64_t total = 1ULL << m;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    // Bit m-1-k of mask is x_{k+1}, so increasing mask is lexicographic in x.
    Vertex v;
    v.x.resize(m);
    Rational used = 0;
    for (int k = 0; k < m; ++k) {
      v.x[k] = static_cast<int>((mask >> (m - 1 - k)) & 1U);
      if (v.x[k]) used += inst.pi(k + 1);
    }
    if (used > inst.epsilon()) continue;
    int first_zero = m + 1;
    for (int k = 0; k < m; ++k) {
      if (!v.x[k]) {
        first_zero = k + 1;
        break;
      }
    }
    v.z = inst.h(first_zero);
    out.push_back(std::move(v));
  }
  return out;
}

FacetSet enumerate_facets(const MixingInstance& inst, const HullOptions& options) {
  FacetSet fs{inst, enumerate_vertices(inst), {}, {}, {}};
  const int m = inst.m();
  std::vector<std::vector<Rational>> points;
  points.reserve(fs.vertices.size());
  for (const auto& v : fs.vertices) {
    std::vector<Rational> w(m + 1);
    w[0] = v.z;
    for (int k = 0; k < m; ++k) w[k + 1] = v.x[k];
    points.push_back(std::move(w));
  }
  std::vector<Rational> ray(m + 1, Rational(0));
  ray[0] = 1;

  for (const auto& hs : poly::facets_of(points, {ray}, options)) {
    LinearCut cut;
    cut.z_coef = hs.a[0];
    cut.x.assign(hs.a.begin() + 1, hs.a.end());
    cut.rhs = hs.b;
    cut = canonicalize(cut);
    if (cut.z_coef == 0) fs.vertical.push_back(std::move(cut));
    else fs.nonvertical.push_back(std::move(cut));
  }
  std::sort(fs.nonvertical.begin(), fs.nonvertical.end());
  std::sort(fs.vertical.begin(), fs.vertical.end());
  fs.facets = fs.nonvertical;
  fs.facets.insert(fs.facets.end(), fs.vertical.begin(), fs.vertical.end());
  return fs;
}

bool is_facet(const MixingInstance& inst, const LinearCut& cut) {
  if (static_cast<int>(cut.x.size()) != inst.m()) {
    throw ValidationError("cut has " + std::to_string(cut.x.size()) +
                          " x coefficients, instance has m = " +
                          std::to_string(inst.m()));
  }
  const auto vertices = enumerate_vertices(inst);
  if (!cut_is_valid(vertices, cut)) {
    throw InvalidCutError("cut is not valid for the instance");
  }
  const int m = inst.m();
  std::vector<std::vector<Rational>> tight;
  for (const auto& v : vertices) {
    if (!cut.tight_at(v)) continue;
    std::vector<Rational> w(m + 2);
    w[0] = v.z;
    for (int k = 0; k < m; ++k) w[k + 1] = v.x[k];
    w[m + 1] = 1;
    tight.push_back(std::move(w));
  }
  if (cut.z_coef == 0) {
    std::vector<Rational> w(m + 2, Rational(0));
    w[0] = 1;
    tight.push_back(std::move(w));
  }
  return poly::rank(tight) == m + 1;
}

}  // namespace mixcut
