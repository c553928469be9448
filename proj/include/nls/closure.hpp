#pragma once

#include <optional>
#include <vector>

#include "nls/polytope.hpp"
#include "nls/rational.hpp"
#include "nls/span.hpp"
#include "nls/vector_field.hpp"

namespace nls {

// Exact evaluation trace of the five vertex-pair tests that certify
// unbounded bracket growth. A pair (x^v V, x^u U) of leading terms is a
// growth witness when all five hold:
//   1. the combined exponent is strictly longer than either input,
//   2. v+u is a vertex of the Minkowski sum of the two support hulls,
//   3. the single-term commutator coefficient K = (u.V)U - (v.U)V is nonzero,
//   4. repeated bracketing with x^u U never kills the coefficient (when
//      u.V = 0 the coefficient at step m is proportional to (v.U) + m(u.U),
//      so the chain dies only at an integer root m >= 1),
//   5. same with the roles of (v,V) and (u,U) swapped.
struct ConditionRecord {
  bool grows_norm = false;
  bool vertex_of_sum = false;
  bool commutator_nonzero = false;
  bool u_chain_survives = false;
  bool v_chain_survives = false;

  Integer norm_sq_v;
  Integer norm_sq_u;
  Integer norm_sq_sum;
  std::vector<Rational> k;
  Rational dot_uV;
  Rational dot_vU;
  Rational dot_uU;
  Rational dot_vV;
  // Roots guarding conditions 4/5; present only when their guard divides.
  std::optional<Rational> s1;
  std::optional<Rational> s2;

  bool all() const {
    return grows_norm && vertex_of_sum && commutator_nonzero &&
           u_chain_survives && v_chain_survives;
  }
};

// Witness that the generated algebra cannot close: vertex v of operator i's
// support hull with coefficient vector V, vertex u of operator j's with U.
struct WitnessPair {
  int i = 0;
  int j = 0;
  ExponentVector v;
  ExponentVector u;
  std::vector<Rational> V;
  std::vector<Rational> U;
  ConditionRecord conditions;
};

enum class Verdict { FiniteDimensional, InfiniteDimensional, BudgetExceeded };

struct RoundSummary {
  int operator_count = 0;
  int span_dimension = 0;

  bool operator==(const RoundSummary& rhs) const = default;
};

struct DecisionReport {
  Verdict verdict = Verdict::BudgetExceeded;
  // Span rank: set for finite verdicts and, as the last seen value, for
  // budget exhaustion.
  std::optional<int> dimension;
  std::optional<SpanBasis> basis;        // finite verdicts only
  std::vector<VectorField> generators;   // finite: closed generator list
  std::optional<WitnessPair> witness;    // infinite verdicts only
  int witness_round = 0;
  int rounds_run = 0;
  std::vector<RoundSummary> rounds;
  std::vector<VectorField> input;
};

inline constexpr int kDefaultMaxRounds = 25;

ConditionRecord witness_conditions(const ExponentVector& v,
                                   const std::vector<Rational>& V,
                                   const ExponentVector& u,
                                   const std::vector<Rational>& U,
                                   const LatticePolytope& pi,
                                   const LatticePolytope& pj);

// Variant taking a precomputed Minkowski sum, for callers scanning many
// vertex pairs of the same two polytopes.
ConditionRecord witness_conditions(const ExponentVector& v,
                                   const std::vector<Rational>& V,
                                   const ExponentVector& u,
                                   const std::vector<Rational>& U,
                                   const LatticePolytope& sum);

// Degree-set criterion for fields on the line: two distinct component
// degrees that are both at least 2 certify unbounded growth; otherwise
// commutator rounds run until the span stops growing or the cap is hit.
DecisionReport check_one_dim(const std::vector<VectorField>& fields,
                             int max_rounds = kDefaultMaxRounds);

// Vertex-pair witness criterion in any dimension: scans operator pairs and
// support-hull vertex pairs in lexicographic order for a growth witness,
// interleaved with commutator rounds, until the span stops growing or the
// cap is hit.
DecisionReport check_general(const std::vector<VectorField>& fields,
                             int max_rounds = kDefaultMaxRounds);

// Squared vertex norms along an iterated bracket chain seeded by the
// witness: starts from the witness commutator and repeatedly brackets with
// one witness term (preferring x^u U, falling back to x^v V if that chain's
// coefficient dies). Returns steps+1 values; throws if both chains die.
std::vector<Integer> witness_growth_norms(const WitnessPair& w, int steps);

}  // namespace nls
