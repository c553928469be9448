#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "nls/closure.hpp"
#include "nls/errors.hpp"
#include "nls/parse.hpp"
#include "nls/span.hpp"

using namespace nls;

namespace {

std::vector<std::string> vars(int d) {
  std::vector<std::string> out;
  for (int i = 1; i <= d; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

VectorField field(const std::vector<std::string>& components) {
  int d = static_cast<int>(components.size());
  std::vector<LaurentPolynomial> parts;
  for (const auto& text : components) {
    parts.push_back(parse_polynomial(text, vars(d)));
  }
  return VectorField(std::move(parts));
}

VectorField line_field(const std::string& text) { return field({text}); }

// Brackets of every generator pair land back in the reported span.
void require_closed(const DecisionReport& rep) {
  REQUIRE(rep.basis.has_value());
  REQUIRE(rep.dimension.has_value());
  REQUIRE(rep.basis->dimension() == *rep.dimension);
  for (std::size_t i = 0; i < rep.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.generators.size(); ++j) {
      REQUIRE(rep.basis->contains(
          lie_bracket(rep.generators[i], rep.generators[j])));
    }
  }
}

// Recomputes the reported witness from scratch: replays the extension
// rounds, then checks the vertex pair against fresh support-hull geometry.
void require_witness_valid(const DecisionReport& rep) {
  REQUIRE(rep.witness.has_value());
  const WitnessPair& w = *rep.witness;
  std::vector<VectorField> current = rep.input;
  for (int r = 0; r < rep.witness_round; ++r) {
    current = add_pairwise_commutators(current);
  }
  REQUIRE(w.i < static_cast<int>(current.size()));
  REQUIRE(w.j < static_cast<int>(current.size()));

  DForm fi = to_d_form(current[w.i]);
  DForm fj = to_d_form(current[w.j]);
  REQUIRE(fi.coefficients.at(w.v) == w.V);
  REQUIRE(fj.coefficients.at(w.u) == w.U);

  LatticePolytope pi = newton_polytope(current[w.i]);
  LatticePolytope pj = newton_polytope(current[w.j]);
  ConditionRecord fresh = witness_conditions(w.v, w.V, w.u, w.U, pi, pj);
  REQUIRE(fresh.all());
  REQUIRE(fresh.k == w.conditions.k);
  REQUIRE(fresh.norm_sq_sum == w.conditions.norm_sq_sum);
}

LaurentPolynomial random_line_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> degree(0, 5);
  std::uniform_int_distribution<int> numer(-3, 3);
  std::uniform_int_distribution<int> denom(1, 3);
  LaurentPolynomial p(1);
  while (p.is_zero()) {
    int top = degree(rng);
    for (int m = 0; m <= top; ++m) {
      Rational c = make_rational(numer(rng), denom(rng));
      if (c != 0) p.add_term({m}, c);
    }
  }
  return p;
}

}  // namespace

TEST_SUITE("closure_checker") {

TEST_CASE("condition trace on a growing quadratic-cubic pair") {
  LatticePolytope pi = LatticePolytope::from_points({{1}});
  LatticePolytope pj = LatticePolytope::from_points({{2}});
  ConditionRecord rec = witness_conditions({1}, {1}, {2}, {1}, pi, pj);
  CHECK(rec.all());
  CHECK(rec.norm_sq_v == 1);
  CHECK(rec.norm_sq_u == 4);
  CHECK(rec.norm_sq_sum == 9);
  CHECK(rec.k == std::vector<Rational>{1});
  CHECK(rec.dot_uV == 2);
  CHECK(rec.dot_vU == 1);
  CHECK(!rec.s1.has_value());
  CHECK(!rec.s2.has_value());

  // Both overloads see the same geometry.
  ConditionRecord same =
      witness_conditions({1}, {1}, {2}, {1}, minkowski_sum(pi, pj));
  CHECK(same.all() == rec.all());
  CHECK(same.k == rec.k);
}

TEST_CASE("equal terms have a vanishing commutator coefficient") {
  LatticePolytope p = LatticePolytope::from_points({{1}});
  ConditionRecord rec = witness_conditions({1}, {1}, {1}, {1}, p, p);
  CHECK(rec.grows_norm);
  CHECK(!rec.commutator_nonzero);
  CHECK(rec.k == std::vector<Rational>{0});
  CHECK(!rec.all());
}

TEST_CASE("integer ratio at -1 kills the repeated-bracket chain") {
  // u.V = 0 with (v.U)/(u.U) = -1: the chain coefficient dies at step one.
  ExponentVector v = {-2, 3};
  ExponentVector u = {2, 0};
  std::vector<Rational> V = {0, 5};
  std::vector<Rational> U = {1, 0};
  auto sum = LatticePolytope::from_points({exponent_add(v, u)});
  ConditionRecord rec = witness_conditions(v, V, u, U, sum);
  CHECK(rec.dot_uV == 0);
  CHECK(rec.dot_vU == -2);
  CHECK(rec.dot_uU == 2);
  REQUIRE(rec.s1.has_value());
  CHECK(*rec.s1 == -1);
  CHECK(!rec.u_chain_survives);
  CHECK(rec.v_chain_survives);
  CHECK(rec.commutator_nonzero);
  CHECK(!rec.all());
}

TEST_CASE("positive or fractional ratios leave the chain alive") {
  ExponentVector u = {2, 0};
  std::vector<Rational> V = {0, 1};
  std::vector<Rational> U = {1, 0};
  auto at = [&](const ExponentVector& v) {
    auto sum = LatticePolytope::from_points({exponent_add(v, u)});
    return witness_conditions(v, V, u, U, sum);
  };
  ConditionRecord positive = at({4, 1});
  REQUIRE(positive.s1.has_value());
  CHECK(*positive.s1 == 2);
  CHECK(positive.u_chain_survives);

  ConditionRecord fractional = at({-3, 1});
  REQUIRE(fractional.s1.has_value());
  CHECK(*fractional.s1 == make_rational(-3, 2));
  CHECK(fractional.u_chain_survives);

  // Both guard dots zero: survival reduces to v.U != 0.
  ConditionRecord degenerate = witness_conditions(
      {1, 1}, {1, -1}, {1, 1}, {1, -1},
      LatticePolytope::from_points({{2, 2}}));
  CHECK(degenerate.dot_uV == 0);
  CHECK(degenerate.dot_uU == 0);
  CHECK(!degenerate.u_chain_survives);
}

TEST_CASE("degree criterion flags the quadratic-cubic pair immediately") {
  auto rep = check_one_dim({line_field("x1^2"), line_field("x1^3")});
  REQUIRE(rep.verdict == Verdict::InfiniteDimensional);
  CHECK(rep.witness_round == 0);
  CHECK(rep.rounds_run == 0);
  CHECK(rep.rounds == std::vector<RoundSummary>{{2, 2}});
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->i == 0);
  CHECK(rep.witness->j == 1);
  CHECK(rep.witness->v == ExponentVector{1});
  CHECK(rep.witness->u == ExponentVector{2});
  CHECK(rep.witness->V == std::vector<Rational>{1});
  CHECK(rep.witness->U == std::vector<Rational>{1});
  CHECK(rep.witness->conditions.all());
  CHECK(!rep.dimension.has_value());
  require_witness_valid(rep);
}

TEST_CASE("vertex-pair criterion agrees on the quadratic-cubic pair") {
  auto rep = check_general({line_field("x1^2"), line_field("x1^3")});
  REQUIRE(rep.verdict == Verdict::InfiniteDimensional);
  CHECK(rep.witness_round == 0);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->v == ExponentVector{1});
  CHECK(rep.witness->u == ExponentVector{2});
  require_witness_valid(rep);
}

TEST_CASE("projective generators on the line close at rank three") {
  std::vector<VectorField> gens = {line_field("1"), line_field("x1"),
                                   line_field("x1^2")};
  for (auto* run : {&check_one_dim, &check_general}) {
    auto rep = (*run)(gens, kDefaultMaxRounds);
    REQUIRE(rep.verdict == Verdict::FiniteDimensional);
    CHECK(rep.dimension == 3);
    CHECK(rep.rounds_run == 0);
    require_closed(rep);
  }
}

TEST_CASE("translation plus cubic needs one extension round") {
  std::vector<VectorField> gens = {line_field("1"), line_field("x1^3")};

  auto rep = check_one_dim(gens);
  REQUIRE(rep.verdict == Verdict::InfiniteDimensional);
  CHECK(rep.witness_round == 1);
  CHECK(rep.rounds ==
        (std::vector<RoundSummary>{{2, 2}, {3, 3}}));
  require_witness_valid(rep);

  auto gen = check_general(gens);
  REQUIRE(gen.verdict == Verdict::InfiniteDimensional);
  CHECK(gen.witness_round == 1);
  REQUIRE(gen.witness.has_value());
  CHECK(gen.witness->i == 1);
  CHECK(gen.witness->j == 2);
  CHECK(gen.witness->v == ExponentVector{2});
  CHECK(gen.witness->u == ExponentVector{1});
  CHECK(gen.witness->U == std::vector<Rational>{3});
  require_witness_valid(gen);
}

TEST_CASE("iterated bracket norms grow strictly along the witness chain") {
  auto quad = check_general({line_field("x1^2"), line_field("x1^3")});
  REQUIRE(quad.witness.has_value());
  auto norms = witness_growth_norms(*quad.witness, 5);
  CHECK(norms == (std::vector<Integer>{9, 25, 49, 81, 121, 169}));

  auto cubic = check_general({line_field("1"), line_field("x1^3")});
  REQUIRE(cubic.witness.has_value());
  auto more = witness_growth_norms(*cubic.witness, 5);
  REQUIRE(more.size() == 6);
  CHECK(more.front() == 9);
  for (std::size_t s = 1; s < more.size(); ++s) {
    REQUIRE(more[s] > more[s - 1]);
  }
}

TEST_CASE("a single operator closes on itself") {
  auto rep = check_one_dim({line_field("x1^3")});
  REQUIRE(rep.verdict == Verdict::FiniteDimensional);
  CHECK(rep.dimension == 1);
  CHECK(rep.generators.size() == 1);
}

TEST_CASE("commuting translations in the plane close immediately") {
  auto rep = check_general({field({"1", "0"}), field({"0", "1"})});
  REQUIRE(rep.verdict == Verdict::FiniteDimensional);
  CHECK(rep.dimension == 2);
  CHECK(rep.rounds_run == 0);
  require_closed(rep);
}

TEST_CASE("planar translations plus rotation close at rank three") {
  auto rep = check_general({field({"1", "0"}), field({"0", "1"}),
                            field({"x2", "-x1"})});
  REQUIRE(rep.verdict == Verdict::FiniteDimensional);
  CHECK(rep.dimension == 3);
  require_closed(rep);
}

TEST_CASE("commuting quartic pair in three variables closes at rank two") {
  // Two operators drawn from a ten-dimensional algebra of cubic-ODE
  // symmetries; they commute, so the closure is their own span.
  auto x1 = field({"x2^2*x3^2/2 - 2*x1^2", "x2^2*x3 - 2*x1*x2",
                   "x2*x3^2 - 2*x1*x3"});
  auto x2 = field({"x1*x3", "x1", "x3^2/2"});
  CHECK(lie_bracket(x1, x2).is_zero());
  auto rep = check_general({x1, x2});
  REQUIRE(rep.verdict == Verdict::FiniteDimensional);
  CHECK(rep.dimension == 2);
  CHECK(rep.rounds_run == 0);
  require_closed(rep);
}

TEST_CASE("halving two leading terms of the quartic pair breaks closure") {
  // The same pair with the second and third components of the first
  // operator halved no longer commutes; the bracket introduces a vertex
  // whose repeated-bracket chain never dies.
  auto x1 = field({"x2^2*x3^2/2 - 2*x1^2", "x2^2*x3/2 - 2*x1*x2",
                   "x2*x3^2/2 - 2*x1*x3"});
  auto x2 = field({"x1*x3", "x1", "x3^2/2"});
  auto rep = check_general({x1, x2});
  REQUIRE(rep.verdict == Verdict::InfiniteDimensional);
  CHECK(rep.witness_round == 1);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->v == ExponentVector({-1, 2, 2}));
  CHECK(rep.witness->u == ExponentVector({0, 1, 2}));
  require_witness_valid(rep);
}

TEST_CASE("mixed-monomial pair in the plane grows without bound") {
  auto rep = check_general({field({"x1^2", "0"}), field({"x1*x2", "0"})});
  REQUIRE(rep.verdict == Verdict::InfiniteDimensional);
  CHECK(rep.witness_round == 0);
  require_witness_valid(rep);
}

TEST_CASE("round cap reports the rank seen so far") {
  std::vector<VectorField> gens = {line_field("1"), line_field("x1^2")};
  for (auto* run : {&check_one_dim, &check_general}) {
    auto rep = (*run)(gens, 1);
    REQUIRE(rep.verdict == Verdict::BudgetExceeded);
    CHECK(rep.rounds_run == 1);
    CHECK(rep.dimension == 3);
    CHECK(rep.rounds.size() == 2);
    CHECK(!rep.witness.has_value());
    CHECK(!rep.basis.has_value());

    auto done = (*run)(gens, 2);
    REQUIRE(done.verdict == Verdict::FiniteDimensional);
    CHECK(done.dimension == 3);
    CHECK(done.rounds_run == 1);
  }
}

TEST_CASE("repeated runs produce identical reports") {
  std::vector<VectorField> gens = {line_field("1"), line_field("x1^3")};
  auto a = check_general(gens);
  auto b = check_general(gens);
  REQUIRE(a.verdict == b.verdict);
  REQUIRE(a.witness.has_value());
  REQUIRE(b.witness.has_value());
  CHECK(a.witness->i == b.witness->i);
  CHECK(a.witness->j == b.witness->j);
  CHECK(a.witness->v == b.witness->v);
  CHECK(a.witness->u == b.witness->u);
  CHECK(a.rounds == b.rounds);

  std::vector<VectorField> sl2 = {line_field("1"), line_field("x1"),
                                  line_field("x1^2")};
  CHECK(*check_general(sl2).basis == *check_general(sl2).basis);
}

TEST_CASE("both deciders agree on random line systems") {
  std::mt19937 rng(246810);
  std::uniform_int_distribution<int> count(1, 4);
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<VectorField> gens;
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
      gens.push_back(VectorField({random_line_poly(rng)}));
    }
    auto digit = check_one_dim(gens);
    auto vertex = check_general(gens);
    REQUIRE(digit.verdict == vertex.verdict);
    if (digit.verdict == Verdict::FiniteDimensional) {
      REQUIRE(digit.dimension == vertex.dimension);
      require_closed(digit);
      require_closed(vertex);
      // Closed algebras on the line with at least two independent
      // directions can only reach rank three.
      if (span_of(gens).dimension() >= 2) {
        REQUIRE(*digit.dimension <= 3);
      }
    } else if (digit.verdict == Verdict::InfiniteDimensional) {
      require_witness_valid(digit);
      require_witness_valid(vertex);
    }
  }
}

TEST_CASE("input validation names the offending operator") {
  CHECK_THROWS_AS(check_general({}), Error);
  CHECK_THROWS_WITH_AS(
      check_general({line_field("x1"), VectorField::zero(1)}),
      doctest::Contains("operator 1"), Error);
  CHECK_THROWS_AS(check_general({line_field("x1"), field({"x1", "x2"})}),
                  DimensionError);
  CHECK_THROWS_AS(check_general({line_field("x1")}, 0), Error);
  CHECK_THROWS_AS(check_one_dim({field({"x1", "x2"})}), DimensionError);
}

}  // TEST_SUITE
