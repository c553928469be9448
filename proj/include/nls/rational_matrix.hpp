#pragma once

#include <optional>
#include <vector>

#include "nls/rational.hpp"

namespace nls {

// Dense exact-rational matrix, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);
  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return data_[index(r, c)]; }
  const Rational& at(int r, int c) const { return data_[index(r, c)]; }

  bool operator==(const RationalMatrix& rhs) const = default;

 private:
  std::size_t index(int r, int c) const;

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& s, const RationalMatrix& a);

// Exact determinant via fraction-free (integer) elimination with full
// pivoting after per-row denominator clearing.
Rational determinant(const RationalMatrix& m);

// Exact inverse, or nullopt when singular. Fraction-free forward elimination
// with full pivoting, then exact rational back-substitution.
std::optional<RationalMatrix> inverted(const RationalMatrix& m);

// Largest absolute entry as a double (used for truncation control).
double max_abs(const RationalMatrix& m);

}  // namespace nls
