#pragma once

#include <cstdint>
#include <vector>

#include "mixcut/cut.hpp"
#include "mixcut/instance.hpp"

namespace mixcut {

// One Vertex per feasible binary x, sorted lexicographically by x.
// Refuses m > guard (2^m enumeration).
std::vector<Vertex> enumerate_vertices(const MixingInstance& inst,
                                       int guard = 20);

struct FacetSet {
  MixingInstance instance;
  std::vector<Vertex> vertices;
  std::vector<LinearCut> facets;       // nonvertical first, then vertical
  std::vector<LinearCut> nonvertical;  // z_coef == 1
  std::vector<LinearCut> vertical;     // z_coef == 0
};

struct HullOptions {
  // Upper bound on generated candidate rays across the run; 0 = unlimited.
  std::int64_t step_limit = 0;
  // Wall-clock budget in seconds; 0 = unlimited.
  double budget_seconds = 0;
};

// Exact double description on the homogenized lift: every vertex becomes
// (z, x, 1), the recession ray becomes (1, 0, 0). Throws ResourceLimitError
// when a guard trips.
FacetSet enumerate_facets(const MixingInstance& inst,
                          const HullOptions& options = {});

// Facet iff valid and the tight generators (vertices with equality, plus the
// ray when z_coef = 0) reach affine rank m + 1. Throws InvalidCutError for a
// cut that is not valid.
bool is_facet(const MixingInstance& inst, const LinearCut& cut);

// Generic polyhedral helpers shared with the bilinear module.
namespace poly {

using IntVector = std::vector<Integer>;

// Extreme rays of the pointed cone {a : row . a >= 0 for every row}. The rows
// must span the ambient space. Rays come back primitive (gcd 1) in
// decreasing lexicographic order.
std::vector<IntVector> extreme_rays(const std::vector<IntVector>& rows,
                                    const HullOptions& options = {});

// Rank of a rational matrix.
int rank(const std::vector<std::vector<Rational>>& rows);

// Scales a rational vector to a primitive integer vector with the same
// direction.
IntVector primitive(const std::vector<Rational>& v);

// Facets of conv(points) + cone(rays), in the form a . w >= b with a
// primitive integer normal. Requires the result to be full-dimensional.
struct Halfspace {
  std::vector<Rational> a;
  Rational b;
  bool operator==(const Halfspace& other) const = default;
};
std::vector<Halfspace> facets_of(const std::vector<std::vector<Rational>>& points,
                                 const std::vector<std::vector<Rational>>& rays,
                                 const HullOptions& options = {});

// Vertices and extreme rays of {w : A w >= b}; the polyhedron must be pointed.
struct Generators {
  std::vector<std::vector<Rational>> points;
  std::vector<std::vector<Rational>> rays;
};
Generators generators_of(const std::vector<std::vector<Rational>>& A,
                         const std::vector<Rational>& b,
                         const HullOptions& options = {});

}  // namespace poly

}  // namespace mixcut
