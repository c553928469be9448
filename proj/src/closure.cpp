#include "nls/closure.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "nls/errors.hpp"

namespace nls {

namespace {

Rational dot(const ExponentVector& e, const std::vector<Rational>& c) {
  Rational out(0);
  for (std::size_t i = 0; i < e.size(); ++i) {
    out += Rational(static_cast<long>(e[i])) * c[i];
  }
  return out;
}

// True when the affine sequence g + m*h, m = 1, 2, ..., never hits zero.
bool no_positive_integer_root(const Rational& g, const Rational& h,
                              std::optional<Rational>& ratio) {
  if (h == 0) return g != 0;
  Rational s = g / h;
  ratio = s;
  return !(is_integer(s) && s <= -1);
}

void validate_input(const std::vector<VectorField>& fields, int max_rounds) {
  if (fields.empty()) throw Error("closure check needs at least one operator");
  if (max_rounds < 1) throw Error("round cap must be positive");
  const int d = fields.front().dimension();
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (fields[i].dimension() != d) {
      throw DimensionError("operator " + std::to_string(i) +
                           " has mismatched dimension");
    }
    if (fields[i].is_zero()) {
      throw Error("operator " + std::to_string(i) + " is the zero field");
    }
  }
}

// Scaling-form support data reused across rounds.
struct OperatorGeometry {
  DForm form;
  LatticePolytope polytope;
};

OperatorGeometry geometry_of(const VectorField& x) {
  OperatorGeometry g;
  g.form = to_d_form(x);
  std::vector<ExponentVector> points;
  points.reserve(g.form.coefficients.size());
  for (const auto& [n, vec] : g.form.coefficients) points.push_back(n);
  g.polytope = LatticePolytope::from_points(std::move(points));
  return g;
}

DecisionReport finish_finite(DecisionReport rep, SpanBasis span,
                             std::vector<VectorField> generators, int round) {
  rep.verdict = Verdict::FiniteDimensional;
  rep.dimension = span.dimension();
  rep.basis = std::move(span);
  rep.generators = std::move(generators);
  rep.rounds_run = round;
  return rep;
}

DecisionReport finish_infinite(DecisionReport rep, WitnessPair witness,
                               int round) {
  rep.verdict = Verdict::InfiniteDimensional;
  rep.witness = std::move(witness);
  rep.witness_round = round;
  rep.rounds_run = round;
  return rep;
}

DecisionReport finish_budget(DecisionReport rep, const SpanBasis& span,
                             int round) {
  rep.verdict = Verdict::BudgetExceeded;
  rep.dimension = span.dimension();
  rep.rounds_run = round;
  return rep;
}

}  // namespace

ConditionRecord witness_conditions(const ExponentVector& v,
                                   const std::vector<Rational>& V,
                                   const ExponentVector& u,
                                   const std::vector<Rational>& U,
                                   const LatticePolytope& sum) {
  ConditionRecord r;
  ExponentVector combined = exponent_add(v, u);
  r.norm_sq_v = norm_sq(v);
  r.norm_sq_u = norm_sq(u);
  r.norm_sq_sum = norm_sq(combined);
  r.grows_norm = r.norm_sq_sum > std::max(r.norm_sq_v, r.norm_sq_u);
  r.vertex_of_sum = is_vertex_of(combined, sum);

  auto [e, k] = d_form_bracket_term(v, V, u, U);
  r.k = std::move(k);
  r.commutator_nonzero = false;
  for (const auto& c : r.k) {
    if (c != 0) r.commutator_nonzero = true;
  }

  r.dot_uV = dot(u, V);
  r.dot_vU = dot(v, U);
  r.dot_uU = dot(u, U);
  r.dot_vV = dot(v, V);

  // Chains only degenerate when the first bracket already scales the
  // opposite coefficient vector, i.e. when the guard dot vanishes.
  r.u_chain_survives =
      r.dot_uV != 0 || no_positive_integer_root(r.dot_vU, r.dot_uU, r.s1);
  r.v_chain_survives =
      r.dot_vU != 0 || no_positive_integer_root(r.dot_uV, r.dot_vV, r.s2);
  return r;
}

ConditionRecord witness_conditions(const ExponentVector& v,
                                   const std::vector<Rational>& V,
                                   const ExponentVector& u,
                                   const std::vector<Rational>& U,
                                   const LatticePolytope& pi,
                                   const LatticePolytope& pj) {
  return witness_conditions(v, V, u, U, minkowski_sum(pi, pj));
}

DecisionReport check_general(const std::vector<VectorField>& fields,
                             int max_rounds) {
  validate_input(fields, max_rounds);
  DecisionReport rep;
  rep.input = fields;

  std::vector<VectorField> current = fields;
  std::vector<OperatorGeometry> geometry;
  geometry.reserve(current.size());
  for (const auto& x : current) geometry.push_back(geometry_of(x));

  for (int round = 0;; ++round) {
    SpanBasis span = span_of(current);
    rep.rounds.push_back(
        {static_cast<int>(current.size()), span.dimension()});

    for (std::size_t k = 0; k < current.size(); ++k) {
      for (std::size_t l = k + 1; l < current.size(); ++l) {
        LatticePolytope sum =
            minkowski_sum(geometry[k].polytope, geometry[l].polytope);
        for (const auto& a : geometry[k].polytope.vertices()) {
          for (const auto& b : geometry[l].polytope.vertices()) {
            ConditionRecord rec =
                witness_conditions(a, geometry[k].form.coefficients.at(a), b,
                                   geometry[l].form.coefficients.at(b), sum);
            if (rec.all()) {
              WitnessPair w;
              w.i = static_cast<int>(k);
              w.j = static_cast<int>(l);
              w.v = a;
              w.u = b;
              w.V = geometry[k].form.coefficients.at(a);
              w.U = geometry[l].form.coefficients.at(b);
              w.conditions = std::move(rec);
              return finish_infinite(std::move(rep), std::move(w), round);
            }
          }
        }
      }
    }

    if (round == max_rounds) {
      return finish_budget(std::move(rep), span, round);
    }

    std::vector<VectorField> extended = add_pairwise_commutators(current);
    if (extended.size() == current.size()) {
      return finish_finite(std::move(rep), std::move(span),
                           std::move(current), round);
    }
    for (std::size_t i = current.size(); i < extended.size(); ++i) {
      geometry.push_back(geometry_of(extended[i]));
    }
    current = std::move(extended);
  }
}

DecisionReport check_one_dim(const std::vector<VectorField>& fields,
                             int max_rounds) {
  validate_input(fields, max_rounds);
  if (fields.front().dimension() != 1) {
    throw DimensionError("degree criterion applies to fields on the line");
  }
  DecisionReport rep;
  rep.input = fields;

  std::vector<VectorField> current = fields;
  for (int round = 0;; ++round) {
    SpanBasis span = span_of(current);
    rep.rounds.push_back(
        {static_cast<int>(current.size()), span.dimension()});

    // Distinct component degrees with their first representatives.
    std::map<std::int64_t, int> first_of_degree;
    for (std::size_t i = 0; i < current.size(); ++i) {
      auto deg = current[i].component(0).total_degree();
      first_of_degree.emplace(*deg, static_cast<int>(i));
    }
    if (first_of_degree.size() >= 2) {
      auto it = first_of_degree.rbegin();
      auto [m1, j] = *it;
      ++it;
      auto [m2, i] = *it;
      if (m1 > 1 && m2 > 1) {
        // Leading terms of the two representatives form a growth witness:
        // the scaling-form exponent of degree m is m-1.
        WitnessPair w;
        w.i = i;
        w.j = j;
        w.v = {m2 - 1};
        w.u = {m1 - 1};
        w.V = {current[i].component(0).coefficient({m2})};
        w.U = {current[j].component(0).coefficient({m1})};
        OperatorGeometry gi = geometry_of(current[i]);
        OperatorGeometry gj = geometry_of(current[j]);
        w.conditions =
            witness_conditions(w.v, w.V, w.u, w.U, gi.polytope, gj.polytope);
        return finish_infinite(std::move(rep), std::move(w), round);
      }
    }

    if (round == max_rounds) {
      return finish_budget(std::move(rep), span, round);
    }

    std::vector<VectorField> extended = add_pairwise_commutators(current);
    if (extended.size() == current.size()) {
      return finish_finite(std::move(rep), std::move(span),
                           std::move(current), round);
    }
    current = std::move(extended);
  }
}

std::vector<Integer> witness_growth_norms(const WitnessPair& w, int steps) {
  if (steps < 0) throw Error("growth check needs a nonnegative step count");

  auto run_chain = [&](bool bracket_with_u) -> std::optional<std::vector<Integer>> {
    auto [e, a] = d_form_bracket_term(w.v, w.V, w.u, w.U);
    std::vector<Integer> norms;
    norms.push_back(norm_sq(e));
    for (int s = 0; s < steps; ++s) {
      bool alive = false;
      for (const auto& c : a) alive = alive || c != 0;
      if (!alive) return std::nullopt;
      if (bracket_with_u) {
        std::tie(e, a) = d_form_bracket_term(e, a, w.u, w.U);
      } else {
        std::tie(e, a) = d_form_bracket_term(w.v, w.V, e, a);
      }
      norms.push_back(norm_sq(e));
    }
    bool alive = false;
    for (const auto& c : a) alive = alive || c != 0;
    if (!alive) return std::nullopt;
    return norms;
  };

  if (auto right = run_chain(true)) return *right;
  if (auto left = run_chain(false)) return *left;
  throw Error("both iterated bracket chains vanished before the step count");
}

}  // namespace nls
