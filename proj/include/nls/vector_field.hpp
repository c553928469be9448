#pragma once

#include <map>
#include <utility>
#include <vector>

#include "nls/laurent.hpp"

namespace nls {

// Polynomial vector field X = f_1 d/dx_1 + ... + f_d d/dx_d.
class VectorField {
 public:
  explicit VectorField(std::vector<LaurentPolynomial> components);
  static VectorField zero(int dimension);

  int dimension() const { return static_cast<int>(components_.size()); }
  const LaurentPolynomial& component(int i) const { return components_.at(i); }
  const std::vector<LaurentPolynomial>& components() const {
    return components_;
  }
  bool is_zero() const;

  bool operator==(const VectorField& rhs) const = default;

 private:
  std::vector<LaurentPolynomial> components_;
};

VectorField operator+(const VectorField& lhs, const VectorField& rhs);
VectorField operator-(const VectorField& lhs, const VectorField& rhs);
VectorField operator-(const VectorField& x);
VectorField operator*(const Rational& scalar, const VectorField& x);

// Directional action X(g) = sum_j f_j dg/dx_j.
LaurentPolynomial apply(const VectorField& x, const LaurentPolynomial& g);

// Commutator of first-order operators; component i is X(g_i) - Y(f_i).
VectorField lie_bracket(const VectorField& x, const VectorField& y);

// Copies the field onto each block of variables (x, x^1, ..., x^m) of an
// ambient space of dimension d*(m+1), so invariants of the diagonal action
// can be tested as rational expressions.
VectorField prolong(const VectorField& x, int copies);

// Expansion over the scaling operators D_k = x_k d/dx_k: X = sum_n x^n X(n),
// where a term c*x^m of f_i contributes c at exponent n = m - e_i, axis i.
// Exponents may be negative even for polynomial fields.
struct DForm {
  int dimension = 0;
  std::map<ExponentVector, std::vector<Rational>> coefficients;

  bool operator==(const DForm& rhs) const = default;
};

DForm to_d_form(const VectorField& x);
VectorField from_d_form(const DForm& w);

// Single-term commutator in the scaling basis:
//   [x^v V, x^u U] = x^(v+u) ((u.V) U - (v.U) V).
std::pair<ExponentVector, std::vector<Rational>> d_form_bracket_term(
    const ExponentVector& v, const std::vector<Rational>& V,
    const ExponentVector& u, const std::vector<Rational>& U);

}  // namespace nls
