#include "nls/polytope.hpp"

#include <algorithm>
#include <cstdint>

#include "nls/errors.hpp"

namespace nls {

Integer norm_sq(const ExponentVector& v) {
  Integer sum(0);
  for (auto x : v) {
    Integer c(static_cast<long>(x));
    sum += c * c;
  }
  return sum;
}

std::optional<std::vector<Rational>> convex_combination(
    const ExponentVector& p, const std::vector<ExponentVector>& points) {
  const std::size_t m = points.size();
  if (m == 0) return std::nullopt;
  const std::size_t d = p.size();
  for (const auto& q : points) {
    if (q.size() != d) throw DimensionError("point dimensions differ");
  }

  // Feasibility of { λ ≥ 0, Σλ = 1, Σ λ_i q_i = p } as a phase-1 simplex:
  // columns are λ_1..λ_m then one artificial per row, last column the rhs.
  const std::size_t rows = d + 1;
  const std::size_t cols = m + rows + 1;
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(cols));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t j = 0; j < m; ++j) {
      t[r][j] = Rational(static_cast<long>(points[j][r]));
    }
    t[r][cols - 1] = Rational(static_cast<long>(p[r]));
  }
  for (std::size_t j = 0; j < m; ++j) t[d][j] = 1;
  t[d][cols - 1] = 1;
  for (std::size_t r = 0; r < rows; ++r) {
    if (t[r][cols - 1] < 0) {
      for (auto& entry : t[r]) entry = -entry;
    }
    t[r][m + r] = 1;
  }

  // Objective row for minimizing the artificial sum, with the basic
  // artificial columns already priced out.
  std::vector<Rational> obj(cols);
  for (std::size_t j = m; j < m + rows; ++j) obj[j] = 1;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < cols; ++j) obj[j] -= t[r][j];
  }

  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = m + r;

  while (true) {
    // Bland's rule: smallest improving column, then smallest basic index.
    std::size_t enter = cols - 1;
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols - 1) break;

    std::size_t leave = rows;
    Rational best;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][enter] <= 0) continue;
      Rational ratio = t[r][cols - 1] / t[r][enter];
      if (leave == rows || ratio < best ||
          (ratio == best && basis[r] < basis[leave])) {
        best = ratio;
        leave = r;
      }
    }
    if (leave == rows) return std::nullopt;  // unbounded cannot occur here

    Rational pivot = t[leave][enter];
    for (auto& entry : t[leave]) entry /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      Rational factor = t[r][enter];
      for (std::size_t j = 0; j < cols; ++j) {
        t[r][j] -= factor * t[leave][j];
      }
    }
    if (obj[enter] != 0) {
      Rational factor = obj[enter];
      for (std::size_t j = 0; j < cols; ++j) obj[j] -= factor * t[leave][j];
    }
    basis[leave] = enter;
  }

  // Remaining artificial mass means the system is infeasible.
  Rational artificial_sum(0);
  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] >= m) artificial_sum += t[r][cols - 1];
  }
  if (artificial_sum != 0) return std::nullopt;

  std::vector<Rational> lambda(m);
  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] < m) lambda[basis[r]] = t[r][cols - 1];
  }
  return lambda;
}

namespace {

std::vector<ExponentVector> normalized(std::vector<ExponentVector> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.empty()) throw Error("vertex enumeration over an empty point set");
  const std::size_t d = points.front().size();
  for (const auto& q : points) {
    if (q.size() != d) throw DimensionError("point dimensions differ");
  }
  return points;
}

std::vector<ExponentVector> keep_flagged(
    const std::vector<ExponentVector>& points, const std::vector<char>& flag) {
  std::vector<ExponentVector> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (flag[i]) out.push_back(points[i]);
  }
  return out;
}

bool vertex_test(const std::vector<ExponentVector>& points, std::size_t i) {
  std::vector<ExponentVector> others;
  others.reserve(points.size() - 1);
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (j != i) others.push_back(points[j]);
  }
  return !convex_combination(points[i], others).has_value();
}

}  // namespace

std::vector<ExponentVector> vertex_set(std::vector<ExponentVector> points) {
  points = normalized(std::move(points));
  std::vector<char> flag(points.size(), 0);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(points.size()); ++i) {
    flag[static_cast<std::size_t>(i)] =
        vertex_test(points, static_cast<std::size_t>(i)) ? 1 : 0;
  }
  return keep_flagged(points, flag);
}

std::vector<ExponentVector> vertex_set_serial(
    std::vector<ExponentVector> points) {
  points = normalized(std::move(points));
  std::vector<char> flag(points.size(), 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    flag[i] = vertex_test(points, i) ? 1 : 0;
  }
  return keep_flagged(points, flag);
}

LatticePolytope LatticePolytope::from_points(
    std::vector<ExponentVector> points) {
  LatticePolytope poly;
  poly.generators_ = normalized(std::move(points));
  poly.dimension_ = static_cast<int>(poly.generators_.front().size());
  poly.vertices_ = vertex_set(poly.generators_);
  return poly;
}

LatticePolytope newton_polytope(const VectorField& x) {
  if (x.is_zero()) {
    throw Error("Newton polytope of the zero field is undefined");
  }
  DForm w = to_d_form(x);
  std::vector<ExponentVector> points;
  points.reserve(w.coefficients.size());
  for (const auto& [n, vec] : w.coefficients) points.push_back(n);
  return LatticePolytope::from_points(std::move(points));
}

LatticePolytope minkowski_sum(const LatticePolytope& p,
                              const LatticePolytope& q) {
  if (p.dimension() != q.dimension()) {
    throw DimensionError("polytope dimensions differ");
  }
  std::vector<ExponentVector> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) {
      sums.push_back(exponent_add(a, b));
    }
  }
  return LatticePolytope::from_points(std::move(sums));
}

bool is_vertex_of(const ExponentVector& p, const LatticePolytope& poly) {
  if (static_cast<int>(p.size()) != poly.dimension()) {
    throw DimensionError("point dimension does not match polytope");
  }
  return std::binary_search(poly.vertices().begin(), poly.vertices().end(), p);
}

}  // namespace nls
