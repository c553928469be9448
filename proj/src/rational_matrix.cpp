#include "nls/rational_matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <utility>

#include "nls/errors.hpp"

namespace nls {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw DimensionError("negative matrix shape");
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::size_t RationalMatrix::index(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
    throw DimensionError("matrix index out of range");
  }
  return static_cast<std::size_t>(r) * cols_ + c;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("matrix shapes differ");
  }
  RationalMatrix out(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c) + b.at(r, c);
  }
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("matrix shapes differ");
  }
  RationalMatrix out(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c) - b.at(r, c);
  }
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < b.cols(); ++c) {
      Rational sum(0);
      for (int j = 0; j < a.cols(); ++j) sum += a.at(r, j) * b.at(j, c);
      out.at(r, c) = sum;
    }
  }
  return out;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
  RationalMatrix out(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) out.at(r, c) = s * a.at(r, c);
  }
  return out;
}

namespace {

// Denominator-cleared integer copy: row r of the result is scale[r] times
// the input row, with integer entries.
struct ClearedRows {
  std::vector<std::vector<Integer>> entries;
  std::vector<Integer> scales;
};

ClearedRows clear_denominators(const RationalMatrix& m, int extra_cols) {
  ClearedRows out;
  out.entries.resize(m.rows());
  out.scales.resize(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    Integer scale(1);
    for (int c = 0; c < m.cols(); ++c) {
      Integer den = m.at(r, c).get_den();
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
    }
    out.scales[r] = scale;
    out.entries[r].assign(m.cols() + extra_cols, Integer(0));
    for (int c = 0; c < m.cols(); ++c) {
      Rational scaled = Rational(scale) * m.at(r, c);
      out.entries[r][c] = scaled.get_num();
    }
  }
  return out;
}

// Fraction-free forward elimination with full pivoting on the left n-column
// block; augmented columns ride along. Returns false when the left block is
// singular. col_of[i] records which original column ended up at position i.
bool bareiss_forward(std::vector<std::vector<Integer>>& a, int n,
                     std::vector<int>& col_of, int& sign) {
  sign = 1;
  col_of.resize(n);
  for (int i = 0; i < n; ++i) col_of[i] = i;
  const int total = static_cast<int>(a.front().size());
  Integer prev(1);
  for (int k = 0; k < n; ++k) {
    int pr = -1;
    int pc = -1;
    Integer best(0);
    for (int r = k; r < n; ++r) {
      for (int c = k; c < n; ++c) {
        Integer mag = abs(a[r][c]);
        if (mag > best) {
          best = mag;
          pr = r;
          pc = c;
        }
      }
    }
    if (pr < 0) return false;
    if (pr != k) {
      std::swap(a[pr], a[k]);
      sign = -sign;
    }
    if (pc != k) {
      for (int r = 0; r < n; ++r) std::swap(a[r][pc], a[r][k]);
      std::swap(col_of[pc], col_of[k]);
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < total; ++c) {
        // Exact by the Sylvester identity underlying the recurrence.
        a[r][c] = (a[k][k] * a[r][c] - a[r][k] * a[k][c]) / prev;
      }
      a[r][k] = 0;
    }
    prev = a[k][k];
  }
  return true;
}

}  // namespace

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  ClearedRows cleared = clear_denominators(m, 0);
  std::vector<int> col_of;
  int sign = 0;
  if (!bareiss_forward(cleared.entries, n, col_of, sign)) return 0;
  Rational det(cleared.entries[n - 1][n - 1]);
  det *= sign;
  for (const auto& s : cleared.scales) det /= Rational(s);
  return det;
}

std::optional<RationalMatrix> inverted(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return RationalMatrix(0, 0);
  // Solve (S*m) X = S with S the row-scaling; then X = m^{-1}.
  ClearedRows cleared = clear_denominators(m, n);
  for (int r = 0; r < n; ++r) cleared.entries[r][n + r] = cleared.scales[r];
  std::vector<int> col_of;
  int sign = 0;
  if (!bareiss_forward(cleared.entries, n, col_of, sign)) return std::nullopt;

  RationalMatrix out(n, n);
  for (int rhs = 0; rhs < n; ++rhs) {
    std::vector<Rational> y(n);
    for (int i = n - 1; i >= 0; --i) {
      Rational acc(cleared.entries[i][n + rhs]);
      for (int j = i + 1; j < n; ++j) {
        acc -= Rational(cleared.entries[i][j]) * y[j];
      }
      y[i] = acc / Rational(cleared.entries[i][i]);
    }
    for (int i = 0; i < n; ++i) out.at(col_of[i], rhs) = y[i];
  }
  return out;
}

double max_abs(const RationalMatrix& m) {
  double best = 0.0;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      best = std::max(best, std::fabs(to_double(m.at(r, c))));
    }
  }
  return best;
}

}  // namespace nls
