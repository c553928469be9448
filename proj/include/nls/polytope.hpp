#pragma once

#include <optional>
#include <vector>

#include "nls/rational.hpp"
#include "nls/vector_field.hpp"

namespace nls {

// Squared Euclidean norm as an exact integer; sizes are always compared on
// squares so no roots are ever taken.
Integer norm_sq(const ExponentVector& v);

// Decides p ∈ conv(points) by exact rational linear feasibility (phase-1
// simplex with Bland's rule). On success returns the barycentric weights
// aligned with `points`, which re-substitute to p exactly.
std::optional<std::vector<Rational>> convex_combination(
    const ExponentVector& p, const std::vector<ExponentVector>& points);

// Subset of points that are NOT convex combinations of the others, i.e. the
// vertex set of the convex hull. Deduplicates and sorts first; per-point
// feasibility tests run in parallel. Correct for degenerate hulls (segments,
// repeated points) without special cases.
std::vector<ExponentVector> vertex_set(std::vector<ExponentVector> points);

// Single-threaded reference twin of vertex_set.
std::vector<ExponentVector> vertex_set_serial(std::vector<ExponentVector> points);

// Lattice polytope given by generating points, with its exact vertex subset.
class LatticePolytope {
 public:
  static LatticePolytope from_points(std::vector<ExponentVector> points);

  int dimension() const { return dimension_; }
  const std::vector<ExponentVector>& generators() const { return generators_; }
  const std::vector<ExponentVector>& vertices() const { return vertices_; }

  bool operator==(const LatticePolytope& rhs) const = default;

 private:
  int dimension_ = 0;
  std::vector<ExponentVector> generators_;
  std::vector<ExponentVector> vertices_;
};

// Hull of the scaling-form support of a nonzero field.
LatticePolytope newton_polytope(const VectorField& x);

// Hull of pairwise vertex sums; every vertex of the sum splits as a vertex
// of p plus a vertex of q.
LatticePolytope minkowski_sum(const LatticePolytope& p,
                              const LatticePolytope& q);

bool is_vertex_of(const ExponentVector& p, const LatticePolytope& poly);

}  // namespace nls
