#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nls/rational.hpp"
#include "nls/rational_matrix.hpp"
#include "nls/time_expression.hpp"

namespace nls {

// Coefficients of the scalar quadratic right-hand side
// a0(t) + a1(t)x + a2(t)x^2.
struct RiccatiCoefficients {
  TimeExpression a0;
  TimeExpression a1;
  TimeExpression a2;
};

// Forward Euler: x + h*(a0 + a1*x + a2*x^2), coefficients evaluated at t.
Rational riccati_step_explicit(const RiccatiCoefficients& c, const Rational& t,
                               const Rational& x, const Rational& h);
double riccati_step_explicit(const RiccatiCoefficients& c, const Rational& t,
                             double x, double h);

// Partially implicit Euler: the quadratic term is split with one factor
// advanced, which solves in closed form to
//   x_next = (x + h*(a0 + a1*x)) / (1 - h*a2*x),
// a fractional-linear map of x. Only an exactly vanishing denominator is an
// error; a sign change is a regular value (this is what lets exact
// trajectories step across solution poles).
Rational riccati_step_semi_implicit(const RiccatiCoefficients& c,
                                    const Rational& t, const Rational& x,
                                    const Rational& h);
double riccati_step_semi_implicit(const RiccatiCoefficients& c,
                                  const Rational& t, double x, double h);

// Sampled solve. Times are always exact rationals; states live in
// exact_states or float_states according to mode.
struct Trajectory {
  std::string mode;    // "exact" or "float"
  std::string scheme;  // "explicit", "semi-implicit", or "matrix"
  Rational h;
  Rational q = 1;
  int rows = 1;
  int cols = 1;
  std::vector<Rational> times;
  std::vector<std::vector<Rational>> exact_states;  // row-major per sample
  std::vector<std::vector<double>> float_states;

  std::size_t size() const { return times.size(); }
};

// scheme: "explicit" | "semi-implicit"; mode: "exact" | "float" (aliases
// "exact-rational" and "floating" are accepted). Step failures are rethrown
// with the step index prepended.
Trajectory riccati_integrate(const RiccatiCoefficients& c, const Rational& t0,
                             const Rational& x0, const Rational& h, int steps,
                             const std::string& scheme, const std::string& mode);

// W' = A + BW + WC + WDW for an n-by-k state W; blocks may depend on t.
struct MatrixRiccatiSystem {
  int n = 0;
  int k = 0;
  std::vector<TimeExpression> a;  // n*k, row-major
  std::vector<TimeExpression> b;  // n*n
  std::vector<TimeExpression> c;  // k*k
  std::vector<TimeExpression> d;  // k*n

  void validate() const;
  bool is_constant() const;
  RationalMatrix a_at(const Rational& t) const;
  RationalMatrix b_at(const Rational& t) const;
  RationalMatrix c_at(const Rational& t) const;
  RationalMatrix d_at(const Rational& t) const;
};

// One partially implicit step in closed form:
//   W_next = (W + h*(A + B*W)) * (I - h*C - h*D*W)^{-1},
// the unique solution of (W_next - W)/h = A + B*W + W_next*C + W_next*D*W.
// The k-by-k factor is inverted exactly; a singular factor is an error
// reporting its exactly zero determinant.
RationalMatrix matrix_riccati_step(const MatrixRiccatiSystem& sys,
                                   const Rational& t, const RationalMatrix& w,
                                   const Rational& h);

// Same update along the Hahn difference grid t -> q*t + h, with step weight
// delta = (q-1)*t + h. At q = 1 this is matrix_riccati_step bit for bit.
// delta = 0 is only meaningful for (q, h) = (1, 0), where the grid map is
// the identity and w is returned unchanged.
RationalMatrix riccati_step_hahn(const MatrixRiccatiSystem& sys,
                                 const Rational& q, const Rational& h,
                                 const Rational& t, const RationalMatrix& w);

// Iterates the matrix step on the grid t_{i+1} = q*t_i + h.
Trajectory matrix_riccati_integrate(const MatrixRiccatiSystem& sys,
                                    const Rational& t0,
                                    const RationalMatrix& w0,
                                    const Rational& h, int steps,
                                    const Rational& q,
                                    const std::string& mode);

// Reference solution for constant square systems: evolves the linear
// block system P' = B P + A Q, Q' = -D P - C Q from (W0, I) by an exact
// rational matrix-exponential series (truncated when the next term falls
// below 1e-30 of the partial sum in floating comparison) and projects
// W = P Q^{-1}. A singular Q means the true solution has a pole at t1.
RationalMatrix matrix_riccati_oracle(const MatrixRiccatiSystem& sys,
                                     const Rational& t0,
                                     const RationalMatrix& w0,
                                     const Rational& t1);

// CSV export: header "t,x" for scalar states, "t,w_1_1,...,w_n_k" otherwise;
// exact rationals print as p/q, floats at 17 significant digits.
void write_csv(const Trajectory& tr, std::ostream& out);

// Reads a two-column CSV written by write_csv (or hand-made, rationals or
// decimals) into (t, x) pairs.
std::vector<std::pair<Rational, Rational>> read_scalar_csv(std::istream& in);

}  // namespace nls
