#include "nls/integrators.hpp"

#include <cctype>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include "nls/errors.hpp"

namespace nls {

namespace {

std::string canonical_mode(const std::string& mode) {
  if (mode == "exact" || mode == "exact-rational") return "exact";
  if (mode == "float" || mode == "floating") return "float";
  throw Error("unknown mode '" + mode + "' (use exact or float)");
}

struct ScalarCoefficients {
  Rational a0;
  Rational a1;
  Rational a2;
};

ScalarCoefficients eval_coefficients(const RiccatiCoefficients& c,
                                     const Rational& t) {
  return {c.a0.eval(t), c.a1.eval(t), c.a2.eval(t)};
}

}  // namespace

Rational riccati_step_explicit(const RiccatiCoefficients& c, const Rational& t,
                               const Rational& x, const Rational& h) {
  ScalarCoefficients v = eval_coefficients(c, t);
  return x + h * (v.a0 + v.a1 * x + v.a2 * x * x);
}

double riccati_step_explicit(const RiccatiCoefficients& c, const Rational& t,
                             double x, double h) {
  ScalarCoefficients v = eval_coefficients(c, t);
  return x + h * (to_double(v.a0) + to_double(v.a1) * x +
                  to_double(v.a2) * x * x);
}

Rational riccati_step_semi_implicit(const RiccatiCoefficients& c,
                                    const Rational& t, const Rational& x,
                                    const Rational& h) {
  ScalarCoefficients v = eval_coefficients(c, t);
  Rational denominator = 1 - h * v.a2 * x;
  if (denominator == 0) {
    throw Error("step denominator 1 - h*a2*x vanished exactly at t = " +
                to_string(t) + "; retry with a smaller step such as h/2");
  }
  return (x + h * (v.a0 + v.a1 * x)) / denominator;
}

double riccati_step_semi_implicit(const RiccatiCoefficients& c,
                                  const Rational& t, double x, double h) {
  ScalarCoefficients v = eval_coefficients(c, t);
  double denominator = 1.0 - h * to_double(v.a2) * x;
  if (denominator == 0.0) {
    throw Error("step denominator 1 - h*a2*x vanished at t = " + to_string(t) +
                "; retry with a smaller step such as h/2");
  }
  return (x + h * (to_double(v.a0) + to_double(v.a1) * x)) / denominator;
}

Trajectory riccati_integrate(const RiccatiCoefficients& c, const Rational& t0,
                             const Rational& x0, const Rational& h, int steps,
                             const std::string& scheme,
                             const std::string& mode) {
  if (scheme != "explicit" && scheme != "semi-implicit") {
    throw Error("unknown scheme '" + scheme +
                "' (use explicit or semi-implicit)");
  }
  if (h <= 0) throw Error("step size must be positive");
  if (steps < 0) throw Error("step count must be nonnegative");

  Trajectory tr;
  tr.mode = canonical_mode(mode);
  tr.scheme = scheme;
  tr.h = h;
  const bool exact = tr.mode == "exact";
  const bool semi = scheme == "semi-implicit";

  Rational t = t0;
  Rational x = x0;
  double xf = to_double(x0);
  tr.times.push_back(t);
  if (exact) {
    tr.exact_states.push_back({x});
  } else {
    tr.float_states.push_back({xf});
  }
  for (int i = 1; i <= steps; ++i) {
    try {
      if (exact) {
        x = semi ? riccati_step_semi_implicit(c, t, x, h)
                 : riccati_step_explicit(c, t, x, h);
      } else {
        xf = semi ? riccati_step_semi_implicit(c, t, xf, to_double(h))
                  : riccati_step_explicit(c, t, xf, to_double(h));
      }
    } catch (const Error& e) {
      throw Error("step " + std::to_string(i) + ": " + e.what());
    }
    t += h;
    tr.times.push_back(t);
    if (exact) {
      tr.exact_states.push_back({x});
    } else {
      tr.float_states.push_back({xf});
    }
  }
  return tr;
}

namespace {

RationalMatrix eval_block(const std::vector<TimeExpression>& entries, int rows,
                          int cols, const Rational& t) {
  RationalMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      m.at(r, c) = entries[static_cast<std::size_t>(r) * cols + c].eval(t);
    }
  }
  return m;
}

}  // namespace

void MatrixRiccatiSystem::validate() const {
  if (n < 1 || k < 1) throw DimensionError("matrix system needs n, k >= 1");
  auto expect = [](const std::vector<TimeExpression>& block, int size,
                   const char* name) {
    if (static_cast<int>(block.size()) != size) {
      throw DimensionError(std::string("coefficient block ") + name +
                           " has the wrong entry count");
    }
  };
  expect(a, n * k, "A");
  expect(b, n * n, "B");
  expect(c, k * k, "C");
  expect(d, k * n, "D");
}

bool MatrixRiccatiSystem::is_constant() const {
  for (const auto* block : {&a, &b, &c, &d}) {
    for (const auto& e : *block) {
      if (!e.is_constant()) return false;
    }
  }
  return true;
}

RationalMatrix MatrixRiccatiSystem::a_at(const Rational& t) const {
  return eval_block(a, n, k, t);
}
RationalMatrix MatrixRiccatiSystem::b_at(const Rational& t) const {
  return eval_block(b, n, n, t);
}
RationalMatrix MatrixRiccatiSystem::c_at(const Rational& t) const {
  return eval_block(c, k, k, t);
}
RationalMatrix MatrixRiccatiSystem::d_at(const Rational& t) const {
  return eval_block(d, k, n, t);
}

namespace {

void check_state_shape(const MatrixRiccatiSystem& sys,
                       const RationalMatrix& w) {
  if (w.rows() != sys.n || w.cols() != sys.k) {
    throw DimensionError("state must be an n-by-k matrix");
  }
}

// Shared closed-form update with step weight delta; delta = 0 is the
// identity map.
RationalMatrix advance(const MatrixRiccatiSystem& sys, const Rational& t,
                       const RationalMatrix& w, const Rational& delta) {
  if (delta == 0) return w;
  RationalMatrix factor = RationalMatrix::identity(sys.k) -
                          delta * sys.c_at(t) - delta * (sys.d_at(t) * w);
  auto inv = inverted(factor);
  if (!inv) {
    throw Error("implicit factor I - h*C - h*D*W is singular at t = " +
                to_string(t) +
                " (determinant exactly 0); retry with a smaller step");
  }
  RationalMatrix numerator =
      w + delta * (sys.a_at(t) + sys.b_at(t) * w);
  return numerator * *inv;
}

// Minimal double-precision mirror for floating trajectories.
using DoubleMatrix = std::vector<std::vector<double>>;

DoubleMatrix to_double_matrix(const RationalMatrix& m) {
  DoubleMatrix out(m.rows(), std::vector<double>(m.cols()));
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) out[r][c] = to_double(m.at(r, c));
  }
  return out;
}

DoubleMatrix double_identity(int n) {
  DoubleMatrix out(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) out[i][i] = 1.0;
  return out;
}

DoubleMatrix double_mul(const DoubleMatrix& a, const DoubleMatrix& b) {
  DoubleMatrix out(a.size(), std::vector<double>(b.front().size(), 0.0));
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      for (std::size_t c = 0; c < b.front().size(); ++c) {
        out[r][c] += a[r][j] * b[j][c];
      }
    }
  }
  return out;
}

DoubleMatrix double_inverse(DoubleMatrix m, const Rational& t) {
  const std::size_t n = m.size();
  DoubleMatrix inv = double_identity(static_cast<int>(n));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    }
    if (m[pivot][col] == 0.0) {
      throw Error("implicit factor is singular at t = " + to_string(t) +
                  "; retry with a smaller step");
    }
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    double lead = m[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      m[col][c] /= lead;
      inv[col][c] /= lead;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0.0) continue;
      double f = m[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        m[r][c] -= f * m[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

DoubleMatrix advance_float(const MatrixRiccatiSystem& sys, const Rational& t,
                           const DoubleMatrix& w, double delta) {
  if (delta == 0.0) return w;
  DoubleMatrix c = to_double_matrix(sys.c_at(t));
  DoubleMatrix dw = double_mul(to_double_matrix(sys.d_at(t)), w);
  DoubleMatrix factor = double_identity(sys.k);
  for (int r = 0; r < sys.k; ++r) {
    for (int j = 0; j < sys.k; ++j) {
      factor[r][j] -= delta * (c[r][j] + dw[r][j]);
    }
  }
  DoubleMatrix bw = double_mul(to_double_matrix(sys.b_at(t)), w);
  DoubleMatrix a = to_double_matrix(sys.a_at(t));
  DoubleMatrix numerator = w;
  for (int r = 0; r < sys.n; ++r) {
    for (int j = 0; j < sys.k; ++j) {
      numerator[r][j] += delta * (a[r][j] + bw[r][j]);
    }
  }
  return double_mul(numerator, double_inverse(std::move(factor), t));
}

std::vector<Rational> flatten(const RationalMatrix& m) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) out.push_back(m.at(r, c));
  }
  return out;
}

std::vector<double> flatten(const DoubleMatrix& m) {
  std::vector<double> out;
  for (const auto& row : m) out.insert(out.end(), row.begin(), row.end());
  return out;
}

}  // namespace

RationalMatrix matrix_riccati_step(const MatrixRiccatiSystem& sys,
                                   const Rational& t, const RationalMatrix& w,
                                   const Rational& h) {
  sys.validate();
  check_state_shape(sys, w);
  return advance(sys, t, w, h);
}

RationalMatrix riccati_step_hahn(const MatrixRiccatiSystem& sys,
                                 const Rational& q, const Rational& h,
                                 const Rational& t, const RationalMatrix& w) {
  sys.validate();
  check_state_shape(sys, w);
  Rational delta = (q - 1) * t + h;
  if (delta == 0 && !(q == 1 && h == 0)) {
    throw Error("degenerate step: (q-1)*t + h = 0 at t = " + to_string(t));
  }
  return advance(sys, t, w, delta);
}

Trajectory matrix_riccati_integrate(const MatrixRiccatiSystem& sys,
                                    const Rational& t0,
                                    const RationalMatrix& w0,
                                    const Rational& h, int steps,
                                    const Rational& q,
                                    const std::string& mode) {
  sys.validate();
  check_state_shape(sys, w0);
  if (steps < 0) throw Error("step count must be nonnegative");

  Trajectory tr;
  tr.mode = canonical_mode(mode);
  tr.scheme = "matrix";
  tr.h = h;
  tr.q = q;
  tr.rows = sys.n;
  tr.cols = sys.k;
  const bool exact = tr.mode == "exact";

  Rational t = t0;
  RationalMatrix w = w0;
  DoubleMatrix wf = to_double_matrix(w0);
  tr.times.push_back(t);
  if (exact) {
    tr.exact_states.push_back(flatten(w));
  } else {
    tr.float_states.push_back(flatten(wf));
  }
  for (int i = 1; i <= steps; ++i) {
    Rational next = q * t + h;
    if (next <= t) {
      throw Error("step " + std::to_string(i) +
                  ": grid is not strictly increasing (q*t + h <= t)");
    }
    Rational delta = next - t;
    try {
      if (exact) {
        w = advance(sys, t, w, delta);
      } else {
        wf = advance_float(sys, t, wf, to_double(delta));
      }
    } catch (const Error& e) {
      throw Error("step " + std::to_string(i) + ": " + e.what());
    }
    t = next;
    tr.times.push_back(t);
    if (exact) {
      tr.exact_states.push_back(flatten(w));
    } else {
      tr.float_states.push_back(flatten(wf));
    }
  }
  return tr;
}

RationalMatrix matrix_riccati_oracle(const MatrixRiccatiSystem& sys,
                                     const Rational& t0,
                                     const RationalMatrix& w0,
                                     const Rational& t1) {
  sys.validate();
  check_state_shape(sys, w0);
  if (sys.n != sys.k) {
    throw DimensionError("reference solution requires a square system");
  }
  if (!sys.is_constant()) {
    throw Error("reference solution requires constant coefficients");
  }
  const int n = sys.n;
  const Rational s = t1 - t0;

  // Block generator of the linearized flow, scaled by the elapsed time.
  RationalMatrix m(2 * n, 2 * n);
  RationalMatrix a = sys.a_at(t0);
  RationalMatrix b = sys.b_at(t0);
  RationalMatrix c = sys.c_at(t0);
  RationalMatrix d = sys.d_at(t0);
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j < n; ++j) {
      m.at(r, j) = s * b.at(r, j);
      m.at(r, n + j) = s * a.at(r, j);
      m.at(n + r, j) = -s * d.at(r, j);
      m.at(n + r, n + j) = -s * c.at(r, j);
    }
  }

  RationalMatrix sum = RationalMatrix::identity(2 * n);
  RationalMatrix term = RationalMatrix::identity(2 * n);
  for (int j = 1;; ++j) {
    term = make_rational(1, j) * (term * m);
    double term_size = max_abs(term);
    sum = sum + term;
    if (term_size <= 1e-30 * max_abs(sum)) break;
    if (j > 10000) {
      throw Error("matrix exponential series failed to converge");
    }
  }

  // Initial condition stacked as (W0 over I); project back after the flow.
  RationalMatrix z0(2 * n, n);
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j < n; ++j) z0.at(r, j) = w0.at(r, j);
    z0.at(n + r, r) = 1;
  }
  RationalMatrix z = sum * z0;
  RationalMatrix p(n, n), qblock(n, n);
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j < n; ++j) {
      p.at(r, j) = z.at(r, j);
      qblock.at(r, j) = z.at(n + r, j);
    }
  }
  auto qinv = inverted(qblock);
  if (!qinv) {
    throw Error("solution has a pole at t = " + to_string(t1) +
                " (denominator block is singular)");
  }
  return p * *qinv;
}

namespace {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

void write_csv(const Trajectory& tr, std::ostream& out) {
  const bool scalar = tr.rows == 1 && tr.cols == 1;
  out << "t";
  if (scalar) {
    out << ",x";
  } else {
    for (int r = 1; r <= tr.rows; ++r) {
      for (int c = 1; c <= tr.cols; ++c) {
        out << ",w_" << r << "_" << c;
      }
    }
  }
  out << "\n";
  const bool exact = tr.mode == "exact";
  for (std::size_t i = 0; i < tr.size(); ++i) {
    if (exact) {
      out << to_string(tr.times[i]);
      for (const auto& v : tr.exact_states[i]) out << "," << to_string(v);
    } else {
      out << format_double(to_double(tr.times[i]));
      for (double v : tr.float_states[i]) out << "," << format_double(v);
    }
    out << "\n";
  }
}

std::vector<std::pair<Rational, Rational>> read_scalar_csv(std::istream& in) {
  std::vector<std::pair<Rational, Rational>> out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string t_text, x_text;
    if (!std::getline(row, t_text, ',') || !std::getline(row, x_text, ',')) {
      throw ParseError("malformed CSV row '" + line + "'");
    }
    if (first) {
      first = false;
      bool header = false;
      for (char ch : t_text) {
        if (std::isalpha(static_cast<unsigned char>(ch))) header = true;
      }
      if (header) continue;
    }
    out.emplace_back(parse_rational(t_text), parse_rational(x_text));
  }
  return out;
}

}  // namespace nls
