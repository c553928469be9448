#pragma once

#include <utility>
#include <vector>

#include "nls/vector_field.hpp"

namespace nls {

// Reduced-row-echelon basis of a set of vector fields, over the flattened
// coefficient space indexed by (exponent vector, component axis) pairs in
// lexicographic order. The reduced form over that fixed column order is
// unique for a given span, so equal spans compare equal regardless of the
// insertion order.
class SpanBasis {
 public:
  explicit SpanBasis(int field_dimension);

  // Ambient dimension d of the member fields.
  int field_dimension() const { return field_dimension_; }
  // Rank of the span.
  int dimension() const { return static_cast<int>(rows_.size()); }

  bool contains(const VectorField& x) const;

  // Grows the basis unless x already lies in the span; reports growth.
  bool insert(const VectorField& x);

  // Reconstructs basis row r as a vector field.
  VectorField row_field(int r) const;

  bool operator==(const SpanBasis& rhs) const = default;

 private:
  using Key = std::pair<ExponentVector, int>;

  std::vector<Rational> flatten(const VectorField& x) const;
  void reduce(std::vector<Rational>& v) const;

  int field_dimension_;
  std::vector<Key> keys_;
  std::vector<std::vector<Rational>> rows_;
};

SpanBasis span_of(const std::vector<VectorField>& fields);

// One closure round: appends every commutator [X_i, X_j], i < j, that is not
// already in the span of the running list. Brackets are computed in parallel;
// the merge is sequential in pair order, so the result is deterministic.
std::vector<VectorField> add_pairwise_commutators(
    const std::vector<VectorField>& fields);

// Single-threaded reference twin of add_pairwise_commutators.
std::vector<VectorField> add_pairwise_commutators_serial(
    const std::vector<VectorField>& fields);

}  // namespace nls
