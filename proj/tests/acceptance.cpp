// Acceptance gate: eleven end-to-end checks, one pass/fail line each.
// Run all via `nls_acceptance`, or a single one via `--criterion N`.
// Every tolerance and time budget is pinned here in code.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nls/closure.hpp"
#include "nls/integrators.hpp"
#include "nls/parse.hpp"
#include "nls/polytope.hpp"
#include "nls/span.hpp"
#include "nls/superposition.hpp"
#include "nls/system_io.hpp"
#include "nls/time_expression.hpp"
#include "nls/vector_field.hpp"

using namespace nls;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

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

// Every pairwise bracket of the closed generator list must re-test as a
// span member.
bool closure_is_closed(const DecisionReport& rep) {
  if (!rep.basis.has_value()) return false;
  for (std::size_t i = 0; i < rep.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.generators.size(); ++j) {
      VectorField br = lie_bracket(rep.generators[i], rep.generators[j]);
      if (!br.is_zero() && !rep.basis->contains(br)) return false;
    }
  }
  return true;
}

LaurentPolynomial random_line_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> degree(0, 5);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  for (;;) {
    LaurentPolynomial p = LaurentPolynomial::zero(1);
    int top = degree(rng);
    for (int e = 0; e <= top; ++e) {
      int n = num(rng);
      if (n == 0) continue;
      p.add_term({e}, make_rational(n, den(rng)));
    }
    if (!p.is_zero()) return p;
  }
}

Rational random_rational(std::mt19937& rng, int num_range, int den_max) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_max);
  return make_rational(num(rng), den(rng));
}

// Uniform denominator 1..den_max, then a numerator keeping |value| <= bound.
Rational bounded_rational(std::mt19937& rng, int bound, int den_max) {
  std::uniform_int_distribution<int> den(1, den_max);
  int d = den(rng);
  std::uniform_int_distribution<int> num(-bound * d, bound * d);
  return make_rational(num(rng), d);
}

// Adaptive Simpson quadrature with an absolute tolerance.
double simpson(const std::function<double(double)>& f, double a, double b) {
  double c = (a + b) / 2;
  return (b - a) / 6 * (f(a) + 4 * f(c) + f(b));
}

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol, int depth = 0) {
  double c = (a + b) / 2;
  double whole = simpson(f, a, b);
  double left = simpson(f, a, c);
  double right = simpson(f, c, b);
  if (depth > 48 || std::fabs(left + right - whole) < 15 * tol) {
    return left + right + (left + right - whole) / 15;
  }
  return integrate_adaptive(f, a, c, tol / 2, depth + 1) +
         integrate_adaptive(f, c, b, tol / 2, depth + 1);
}

MatrixRiccatiSystem random_square_system(std::mt19937& rng, int n) {
  MatrixRiccatiSystem sys;
  sys.n = n;
  sys.k = n;
  auto block = [&](int count) {
    std::vector<TimeExpression> out;
    for (int i = 0; i < count; ++i) {
      out.emplace_back(bounded_rational(rng, 2, 4));
    }
    return out;
  };
  sys.a = block(n * n);
  sys.b = block(n * n);
  sys.c = block(n * n);
  sys.d = block(n * n);
  return sys;
}

RationalMatrix random_matrix(std::mt19937& rng, int rows, int cols) {
  RationalMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m.at(r, c) = random_rational(rng, 4, 4);
  }
  return m;
}

double max_abs_diff(const RationalMatrix& a, const RationalMatrix& b) {
  double worst = 0;
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) {
      worst = std::max(worst, std::fabs(to_double(a.at(r, c) - b.at(r, c))));
    }
  }
  return worst;
}

VectorField random_field(std::mt19937& rng, int d) {
  std::uniform_int_distribution<int> expo(0, 2);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> terms(1, 3);
  for (;;) {
    std::vector<LaurentPolynomial> comps;
    for (int i = 0; i < d; ++i) {
      LaurentPolynomial p = LaurentPolynomial::zero(d);
      int nt = terms(rng);
      for (int t = 0; t < nt; ++t) {
        ExponentVector m;
        for (int k = 0; k < d; ++k) m.push_back(expo(rng));
        p.add_term(m, Rational(coeff(rng)));
      }
      comps.push_back(std::move(p));
    }
    VectorField f(std::move(comps));
    if (!f.is_zero()) return f;
  }
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

// 1. The projective line generators close at dimension exactly three.
Outcome criterion1() {
  Outcome o;
  auto t0 = Clock::now();
  auto rep =
      check_one_dim({line_field("1"), line_field("x1"), line_field("x1^2")},
                    kDefaultMaxRounds);
  double dt = seconds_since(t0);
  if (rep.verdict != Verdict::FiniteDimensional) o.fail("verdict not finite");
  if (rep.dimension != 3) o.fail("dimension != 3");
  if (!closure_is_closed(rep)) o.fail("bracket re-check failed");
  if (dt >= 1.0) o.fail("took " + std::to_string(dt) + "s (budget 1s)");
  return o;
}

// 2. The quadratic-cubic pair is flagged immediately by both deciders,
//    with the expected witness and a fully true condition record.
Outcome criterion2() {
  Outcome o;
  auto t0 = Clock::now();
  std::vector<VectorField> gens = {line_field("x1^2"), line_field("x1^3")};
  auto by_degree = check_one_dim(gens, kDefaultMaxRounds);
  auto by_vertex = check_general(gens, kDefaultMaxRounds);
  double dt = seconds_since(t0);
  for (const auto* rep : {&by_degree, &by_vertex}) {
    if (rep->verdict != Verdict::InfiniteDimensional) {
      o.fail("verdict not infinite");
      return o;
    }
    if (rep->witness_round != 0) o.fail("witness not at round 0");
    const WitnessPair& w = *rep->witness;
    if (w.v != ExponentVector{1} || w.u != ExponentVector{2}) {
      o.fail("unexpected witness vertices");
    }
    if (!w.conditions.grows_norm || !w.conditions.vertex_of_sum ||
        !w.conditions.commutator_nonzero || !w.conditions.u_chain_survives ||
        !w.conditions.v_chain_survives) {
      o.fail("condition record not fully true");
    }
  }
  if (dt >= 1.0) o.fail("took " + std::to_string(dt) + "s (budget 1s)");
  return o;
}

// 3. Translation plus cubic closes only after one extension round, and the
//    witness's repeated single-term brackets grow strictly for 5 steps.
Outcome criterion3() {
  Outcome o;
  auto rep = check_general({line_field("1"), line_field("x1^3")},
                           kDefaultMaxRounds);
  if (rep.verdict != Verdict::InfiniteDimensional) {
    o.fail("verdict not infinite");
    return o;
  }
  if (rep.witness_round != 1) o.fail("witness not at round 1");
  auto norms = witness_growth_norms(*rep.witness, 5);
  if (norms.size() != 6) o.fail("expected 6 norm samples");
  for (std::size_t i = 0; i + 1 < norms.size(); ++i) {
    if (!(norms[i] < norms[i + 1])) o.fail("norm sequence not increasing");
  }
  return o;
}

// 4. The commuting quartic pair in three variables stays finite, with a
//    closure dimension within the ten-dimensional ambient algebra.
Outcome criterion4() {
  Outcome o;
  auto t0 = Clock::now();
  // loaded from the shipped sample so the CLI document stays regression-locked
  SystemDocument doc = load_system("data/threevar.json");
  auto rep = check_general(doc.to_fields(), kDefaultMaxRounds);
  double dt = seconds_since(t0);
  if (rep.verdict != Verdict::FiniteDimensional) o.fail("verdict not finite");
  if (!rep.dimension || *rep.dimension > 10) o.fail("dimension above 10");
  if (rep.dimension != 2) o.fail("dimension != 2");
  if (!closure_is_closed(rep)) o.fail("bracket re-check failed");
  if (dt >= 10.0) o.fail("took " + std::to_string(dt) + "s (budget 10s)");
  return o;
}

// 5. Both deciders agree on 200 random line systems; every finite verdict
//    passes the exact bracket-in-span re-check.
Outcome criterion5() {
  Outcome o;
  std::mt19937 rng(987654);
  std::uniform_int_distribution<int> count(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<VectorField> gens;
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
      gens.push_back(VectorField({random_line_poly(rng)}));
    }
    auto by_degree = check_one_dim(gens, kDefaultMaxRounds);
    auto by_vertex = check_general(gens, kDefaultMaxRounds);
    if (by_degree.verdict != by_vertex.verdict) {
      o.fail("verdict mismatch at trial " + std::to_string(trial));
      return o;
    }
    if (by_degree.verdict == Verdict::FiniteDimensional) {
      if (by_degree.dimension != by_vertex.dimension) {
        o.fail("dimension mismatch at trial " + std::to_string(trial));
      }
      if (!closure_is_closed(by_degree) || !closure_is_closed(by_vertex)) {
        o.fail("bracket re-check failed at trial " + std::to_string(trial));
      }
    }
  }
  return o;
}

// 6. The partially implicit stepper conserves the four-trajectory ratio
//    exactly for 50 steps; forward Euler drifts within 5 steps.
Outcome criterion6() {
  Outcome o;
  RiccatiCoefficients coefs{TimeExpression::parse("0"),
                            TimeExpression::parse("1"),
                            TimeExpression::parse("1/t")};
  const std::vector<Rational> starts = {Rational(-1), Rational(-2),
                                        Rational(-3), Rational(-5)};
  const Rational target =
      cross_ratio(starts[0], starts[1], starts[2], starts[3]);
  if (target != Rational(2)) o.fail("unexpected starting ratio");
  if (riccati_superpose(starts[0], starts[1], starts[2], target) !=
      starts[3]) {
    o.fail("fourth start is not the combined solution");
  }

  std::vector<Trajectory> exact;
  for (const auto& x0 : starts) {
    exact.push_back(riccati_integrate(coefs, Rational(1), x0,
                                      make_rational(1, 10), 50,
                                      "semi-implicit", "exact"));
  }
  for (std::size_t s = 0; s < exact[0].size(); ++s) {
    Rational r = cross_ratio(
        exact[0].exact_states[s][0], exact[1].exact_states[s][0],
        exact[2].exact_states[s][0], exact[3].exact_states[s][0]);
    if (r != target) {
      o.fail("exact ratio drifted at sample " + std::to_string(s));
      return o;
    }
  }

  std::vector<Trajectory> euler;
  for (const auto& x0 : starts) {
    euler.push_back(riccati_integrate(coefs, Rational(1), x0,
                                      make_rational(1, 10), 5, "explicit",
                                      "exact"));
  }
  bool drifted = false;
  for (std::size_t s = 1; s < euler[0].size(); ++s) {
    Rational r = cross_ratio(
        euler[0].exact_states[s][0], euler[1].exact_states[s][0],
        euler[2].exact_states[s][0], euler[3].exact_states[s][0]);
    if (r != target) drifted = true;
  }
  if (!drifted) o.fail("forward Euler ratio did not drift in 5 steps");
  return o;
}

// 7. The exact stepper continues across the reference solution's pole and
//    tracks a quadrature oracle to < 2% relative error away from it.
Outcome criterion7() {
  Outcome o;
  RiccatiCoefficients coefs{TimeExpression::parse("0"),
                            TimeExpression::parse("1"),
                            TimeExpression::parse("1/t")};
  Trajectory tr;
  try {
    tr = riccati_integrate(coefs, Rational(1), Rational(1),
                           make_rational(1, 100), 140, "semi-implicit",
                           "exact");
  } catch (const std::exception& e) {
    o.fail(std::string("integration aborted: ") + e.what());
    return o;
  }
  // reference: x(t) = e^t / (e - S(t)) with S(t) the integral of e^s/s
  // from 1 to t; the denominator crosses zero near t = 1.9.
  auto reference = [](double t) {
    double s = integrate_adaptive(
        [](double x) { return std::exp(x) / x; }, 1.0, t, 1e-12);
    return std::exp(t) / (std::exp(1.0) - s);
  };
  const int checkpoints[] = {25, 50, 75, 110, 140};
  for (int k : checkpoints) {
    double t = 1.0 + k / 100.0;
    double ref = reference(t);
    double got = to_double(tr.exact_states[k][0]);
    double rel = std::fabs(got - ref) / std::fabs(ref);
    if (!(rel < 0.02)) {
      o.fail("relative error " + std::to_string(rel) + " at t = " +
             std::to_string(t));
    }
  }
  return o;
}

// 8. Matrix steps converge at first order against the exact-series
//    reference on 20 random constant square systems.
Outcome criterion8() {
  Outcome o;
  auto t0 = Clock::now();
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> dim(1, 3);
  const Rational horizon = 1;
  int accepted = 0;
  int draws = 0;
  while (accepted < 20 && draws < 400) {
    ++draws;
    int n = dim(rng);
    MatrixRiccatiSystem sys = random_square_system(rng, n);
    RationalMatrix w0(n, n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) w0.at(r, c) = bounded_rational(rng, 1, 4);
    }
    // The step is a fractional-linear map with block matrix I + hM,
    // M = [[B, A], [-D, -C]]; its projective mismatch against the exact
    // flow exp(hM) is -(h^2/2) tr(M) M + O(h^3), so when tr(B) - tr(C)
    // is near zero the leading error term degenerates and the measured
    // order drifts away from one.  Keep only draws in the generic regime.
    Rational trace_gap = 0;
    for (int i = 0; i < n; ++i) {
      trace_gap = trace_gap + sys.b_at(0).at(i, i) - sys.c_at(0).at(i, i);
    }
    if (std::fabs(to_double(trace_gap)) < 1.0) continue;
    RationalMatrix truth, w20, w40;
    try {
      truth = matrix_riccati_oracle(sys, Rational(0), w0, horizon);
      auto run = [&](int steps) {
        Rational h = horizon / steps;
        RationalMatrix w = w0;
        Rational t = 0;
        for (int s = 0; s < steps; ++s) {
          w = matrix_riccati_step(sys, t, w, h);
          t = t + h;
        }
        return w;
      };
      w20 = run(20);
      w40 = run(40);
    } catch (const std::exception&) {
      continue;  // pole on the unit interval or a singular step factor
    }
    double e20 = max_abs_diff(w20, truth);
    double e40 = max_abs_diff(w40, truth);
    if (e40 < 1e-12) continue;  // error at rounding scale: ratio meaningless
    if (e20 > 0.1 * (1 + max_abs(truth))) {
      continue;  // coarse run left the asymptotic regime (near-pole draw)
    }
    double ratio = e20 / e40;
    if (!(ratio > 1.7 && ratio < 2.3)) {
      o.fail("ratio " + std::to_string(ratio) + " outside [1.7, 2.3] at draw " +
             std::to_string(draws));
      return o;
    }
    ++accepted;
  }
  if (accepted < 20) o.fail("exhausted draws before 20 accepted systems");
  double dt = seconds_since(t0);
  if (dt >= 30.0) o.fail("took " + std::to_string(dt) + "s (budget 30s)");
  return o;
}

// 9. The lattice step at q = 1 reproduces the uniform step bit for bit.
Outcome criterion9() {
  Outcome o;
  std::mt19937 rng(13579);
  std::uniform_int_distribution<int> dim(1, 3);
  for (int trial = 0; trial < 100; ++trial) {
    int n = dim(rng);
    int k = dim(rng);
    MatrixRiccatiSystem sys;
    sys.n = n;
    sys.k = k;
    auto block = [&](int count) {
      std::vector<TimeExpression> out;
      for (int i = 0; i < count; ++i) {
        out.emplace_back(random_rational(rng, 6, 3));
      }
      return out;
    };
    sys.a = block(n * k);
    sys.b = block(n * n);
    sys.c = block(k * k);
    sys.d = block(k * n);
    RationalMatrix w = random_matrix(rng, n, k);
    Rational t = random_rational(rng, 3, 2);
    Rational h = make_rational(1, 7);
    RationalMatrix uniform, lattice;
    try {
      uniform = matrix_riccati_step(sys, t, w, h);
      lattice = riccati_step_hahn(sys, Rational(1), h, t, w);
    } catch (const std::exception&) {
      --trial;  // singular draw: try the next one
      continue;
    }
    if (!(uniform == lattice)) {
      o.fail("q = 1 step differs at trial " + std::to_string(trial));
      return o;
    }
  }
  return o;
}

// 10. The combination-formula checker accepts the conserved-ratio invariant
//     and rejects a perturbed variant.
Outcome criterion10() {
  Outcome o;
  std::vector<VectorField> gens = {line_field("1"), line_field("x1"),
                                   line_field("x1^2")};
  std::vector<std::string> names = {"x", "x1", "x2", "x3"};
  auto parse = [&](const std::string& text) {
    return RationalExpression::parse(text, names);
  };
  RuleCheck good = verify_rule(
      parse("((x - x1)*(x2 - x3)) / ((x1 - x2)*(x - x3))"), gens, 3);
  if (!good.pass) o.fail("conserved-ratio invariant rejected");
  if (good.residual_numerators.size() != 3) o.fail("expected 3 residuals");
  for (const auto& r : good.residual_numerators) {
    if (!r.is_zero()) o.fail("nonzero residual on the invariant");
  }
  RuleCheck bad = verify_rule(
      parse("((x - x1)*(x2 - x3)) / ((x1 - x2)*(x - x3)^2)"), gens, 3);
  if (bad.pass) o.fail("perturbed candidate accepted");
  return o;
}

// 11. Exact algebraic property sweep: bracket antisymmetry and Jacobi,
//     the single-term bracket identity, and hull idempotence/translation.
Outcome criterion11() {
  Outcome o;
  auto t0 = Clock::now();
  std::mt19937 rng(112233);
  std::uniform_int_distribution<int> dim(1, 3);

  for (int trial = 0; trial < 300; ++trial) {
    int d = dim(rng);
    VectorField x = random_field(rng, d);
    VectorField y = random_field(rng, d);
    VectorField z = random_field(rng, d);
    VectorField jac = lie_bracket(lie_bracket(x, y), z) +
                      lie_bracket(lie_bracket(y, z), x) +
                      lie_bracket(lie_bracket(z, x), y);
    if (!jac.is_zero()) {
      o.fail("Jacobi identity failed at trial " + std::to_string(trial));
      return o;
    }
  }

  for (int trial = 0; trial < 1000; ++trial) {
    int d = dim(rng);
    VectorField x = random_field(rng, d);
    VectorField y = random_field(rng, d);
    if (!(lie_bracket(x, y) + lie_bracket(y, x)).is_zero()) {
      o.fail("antisymmetry failed at trial " + std::to_string(trial));
      return o;
    }
  }

  std::uniform_int_distribution<int> expo(-2, 2);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 1000; ++trial) {
    int d = dim(rng);
    ExponentVector v, u;
    std::vector<Rational> V, U;
    bool v_zero = true, u_zero = true;
    for (int k = 0; k < d; ++k) {
      v.push_back(expo(rng));
      u.push_back(expo(rng));
      V.emplace_back(coeff(rng));
      U.emplace_back(coeff(rng));
      if (V.back() != 0) v_zero = false;
      if (U.back() != 0) u_zero = false;
    }
    if (v_zero || u_zero) {
      --trial;
      continue;
    }
    DForm left{d, {{v, V}}};
    DForm right{d, {{u, U}}};
    VectorField direct =
        lie_bracket(from_d_form(left), from_d_form(right));
    auto [e, K] = d_form_bracket_term(v, V, u, U);
    DForm expected{d, {}};
    bool k_zero = true;
    for (const auto& c : K) {
      if (c != 0) k_zero = false;
    }
    if (!k_zero) expected.coefficients[e] = K;
    if (to_d_form(direct) != expected) {
      o.fail("single-term bracket mismatch at trial " + std::to_string(trial));
      return o;
    }
  }

  std::uniform_int_distribution<int> hull_dim(1, 4);
  std::uniform_int_distribution<int> hull_count(1, 10);
  std::uniform_int_distribution<int> hull_coord(-4, 4);
  for (int trial = 0; trial < 500; ++trial) {
    int d = hull_dim(rng);
    int count = hull_count(rng);
    std::vector<ExponentVector> pts;
    for (int i = 0; i < count; ++i) {
      ExponentVector p;
      for (int k = 0; k < d; ++k) p.push_back(hull_coord(rng));
      pts.push_back(std::move(p));
    }
    auto verts = vertex_set(pts);
    if (vertex_set(verts) != verts) {
      o.fail("hull idempotence failed at trial " + std::to_string(trial));
      return o;
    }
    ExponentVector shift;
    for (int k = 0; k < d; ++k) shift.push_back(hull_coord(rng));
    std::vector<ExponentVector> moved;
    for (const auto& p : pts) {
      ExponentVector q = p;
      for (int k = 0; k < d; ++k) q[k] += shift[k];
      moved.push_back(std::move(q));
    }
    auto moved_verts = vertex_set(moved);
    std::vector<ExponentVector> expected;
    for (const auto& p : verts) {
      ExponentVector q = p;
      for (int k = 0; k < d; ++k) q[k] += shift[k];
      expected.push_back(std::move(q));
    }
    std::sort(expected.begin(), expected.end());
    if (moved_verts != expected) {
      o.fail("hull translation failed at trial " + std::to_string(trial));
      return o;
    }
  }

  double dt = seconds_since(t0);
  if (dt >= 60.0) o.fail("took " + std::to_string(dt) + "s (budget 60s)");
  return o;
}

struct Criterion {
  int number;
  const char* label;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "projective line generators close at dimension 3 within 1s",
     criterion1},
    {2, "quadratic-cubic pair flagged at round 0 by both deciders within 1s",
     criterion2},
    {3, "translation-cubic pair flagged at round 1 with growing witness norms",
     criterion3},
    {4, "three-variable quartic pair closes within dimension 10 within 10s",
     criterion4},
    {5, "both deciders agree on 200 random line systems with exact re-checks",
     criterion5},
    {6, "exact four-trajectory ratio conserved for 50 steps; Euler drifts",
     criterion6},
    {7, "exact stepper crosses the reference pole within 2% off-pole error",
     criterion7},
    {8, "matrix step halves its error with the step on 20 systems within 30s",
     criterion8},
    {9, "lattice step at unit ratio matches the uniform step exactly",
     criterion9},
    {10, "combination-formula checker accepts the invariant, rejects a fake",
     criterion10},
    {11, "exact bracket and hull property sweep within 60s", criterion11},
};

}  // namespace

int main(int argc, char** argv) {
  int selected = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      selected = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }
  bool all_pass = true;
  for (const Criterion& c : kCriteria) {
    if (selected != 0 && c.number != selected) continue;
    Outcome o = c.run();
    if (o.pass) {
      std::printf("PASS criterion %2d: %s\n", c.number, c.label);
    } else {
      std::printf("FAIL criterion %2d: %s (%s)\n", c.number, c.label,
                  o.detail.c_str());
      all_pass = false;
    }
  }
  return all_pass ? 0 : 1;
}
