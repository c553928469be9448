#include "nls/vector_field.hpp"

#include "nls/errors.hpp"

namespace nls {

VectorField::VectorField(std::vector<LaurentPolynomial> components)
    : components_(std::move(components)) {
  const int d = static_cast<int>(components_.size());
  if (d == 0) throw DimensionError("vector field needs at least one component");
  for (const auto& f : components_) {
    if (f.dimension() != d) {
      throw DimensionError(
          "component polynomial dimension does not match component count");
    }
  }
}

VectorField VectorField::zero(int dimension) {
  if (dimension <= 0) throw DimensionError("dimension must be positive");
  return VectorField(
      std::vector<LaurentPolynomial>(dimension, LaurentPolynomial(dimension)));
}

bool VectorField::is_zero() const {
  for (const auto& f : components_) {
    if (!f.is_zero()) return false;
  }
  return true;
}

namespace {

void require_same_dimension(const VectorField& a, const VectorField& b) {
  if (a.dimension() != b.dimension()) {
    throw DimensionError("vector field dimensions differ");
  }
}

}  // namespace

VectorField operator+(const VectorField& lhs, const VectorField& rhs) {
  require_same_dimension(lhs, rhs);
  std::vector<LaurentPolynomial> out;
  out.reserve(lhs.dimension());
  for (int i = 0; i < lhs.dimension(); ++i) {
    out.push_back(lhs.component(i) + rhs.component(i));
  }
  return VectorField(std::move(out));
}

VectorField operator-(const VectorField& lhs, const VectorField& rhs) {
  require_same_dimension(lhs, rhs);
  std::vector<LaurentPolynomial> out;
  out.reserve(lhs.dimension());
  for (int i = 0; i < lhs.dimension(); ++i) {
    out.push_back(lhs.component(i) - rhs.component(i));
  }
  return VectorField(std::move(out));
}

VectorField operator-(const VectorField& x) {
  std::vector<LaurentPolynomial> out;
  out.reserve(x.dimension());
  for (int i = 0; i < x.dimension(); ++i) out.push_back(-x.component(i));
  return VectorField(std::move(out));
}

VectorField operator*(const Rational& scalar, const VectorField& x) {
  std::vector<LaurentPolynomial> out;
  out.reserve(x.dimension());
  for (int i = 0; i < x.dimension(); ++i) {
    out.push_back(scalar * x.component(i));
  }
  return VectorField(std::move(out));
}

LaurentPolynomial apply(const VectorField& x, const LaurentPolynomial& g) {
  if (x.dimension() != g.dimension()) {
    throw DimensionError("vector field and polynomial dimensions differ");
  }
  LaurentPolynomial out(g.dimension());
  for (int j = 0; j < x.dimension(); ++j) {
    out += x.component(j) * g.derivative(j);
  }
  return out;
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  require_same_dimension(x, y);
  std::vector<LaurentPolynomial> out;
  out.reserve(x.dimension());
  for (int i = 0; i < x.dimension(); ++i) {
    out.push_back(apply(x, y.component(i)) - apply(y, x.component(i)));
  }
  return VectorField(std::move(out));
}

VectorField prolong(const VectorField& x, int copies) {
  if (copies < 1) throw DimensionError("prolongation needs at least one copy");
  const int d = x.dimension();
  const int big = d * (copies + 1);
  std::vector<LaurentPolynomial> out;
  out.reserve(big);
  for (int block = 0; block <= copies; ++block) {
    for (int i = 0; i < d; ++i) {
      out.push_back(embed(x.component(i), big, block * d));
    }
  }
  return VectorField(std::move(out));
}

DForm to_d_form(const VectorField& x) {
  DForm w;
  w.dimension = x.dimension();
  for (int i = 0; i < x.dimension(); ++i) {
    for (const auto& [m, c] : x.component(i).terms()) {
      ExponentVector n = m;
      n[i] -= 1;
      auto [it, inserted] =
          w.coefficients.emplace(n, std::vector<Rational>(x.dimension()));
      it->second[i] = c;
      (void)inserted;
    }
  }
  return w;
}

VectorField from_d_form(const DForm& w) {
  std::vector<LaurentPolynomial> components(
      w.dimension, LaurentPolynomial(w.dimension));
  for (const auto& [n, vec] : w.coefficients) {
    for (int i = 0; i < w.dimension; ++i) {
      if (vec[i] == 0) continue;
      ExponentVector m = n;
      m[i] += 1;
      components[i].add_term(m, vec[i]);
    }
  }
  return VectorField(std::move(components));
}

std::pair<ExponentVector, std::vector<Rational>> d_form_bracket_term(
    const ExponentVector& v, const std::vector<Rational>& V,
    const ExponentVector& u, const std::vector<Rational>& U) {
  if (v.size() != V.size() || u.size() != U.size() || v.size() != u.size()) {
    throw DimensionError("bracket term dimensions differ");
  }
  Rational uV(0);
  Rational vU(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    uV += Rational(static_cast<long>(u[i])) * V[i];
    vU += Rational(static_cast<long>(v[i])) * U[i];
  }
  std::vector<Rational> k(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) k[i] = uV * U[i] - vU * V[i];
  return {exponent_add(v, u), std::move(k)};
}

}  // namespace nls
