#include "nls/span.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>

#include "nls/errors.hpp"

namespace nls {

namespace {

using Key = std::pair<ExponentVector, int>;

std::map<Key, Rational> sparse_coefficients(const VectorField& x) {
  std::map<Key, Rational> out;
  for (int i = 0; i < x.dimension(); ++i) {
    for (const auto& [m, c] : x.component(i).terms()) {
      out.emplace(Key{m, i}, c);
    }
  }
  return out;
}

}  // namespace

SpanBasis::SpanBasis(int field_dimension) : field_dimension_(field_dimension) {
  if (field_dimension <= 0) {
    throw DimensionError("span ambient dimension must be positive");
  }
}

void SpanBasis::reduce(std::vector<Rational>& v) const {
  for (const auto& row : rows_) {
    std::size_t pivot = 0;
    while (pivot < row.size() && row[pivot] == 0) ++pivot;
    if (pivot >= v.size() || v[pivot] == 0) continue;
    Rational factor = v[pivot];
    for (std::size_t j = pivot; j < row.size(); ++j) v[j] -= factor * row[j];
  }
}

bool SpanBasis::contains(const VectorField& x) const {
  if (x.dimension() != field_dimension_) {
    throw DimensionError("field dimension does not match span");
  }
  auto sparse = sparse_coefficients(x);
  std::vector<Rational> v(keys_.size());
  for (const auto& [key, c] : sparse) {
    auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
    if (it == keys_.end() || *it != key) return false;
    v[static_cast<std::size_t>(it - keys_.begin())] = c;
  }
  reduce(v);
  for (const auto& c : v) {
    if (c != 0) return false;
  }
  return true;
}

bool SpanBasis::insert(const VectorField& x) {
  if (x.dimension() != field_dimension_) {
    throw DimensionError("field dimension does not match span");
  }
  auto sparse = sparse_coefficients(x);

  std::vector<Key> fresh;
  for (const auto& [key, c] : sparse) {
    if (!std::binary_search(keys_.begin(), keys_.end(), key)) {
      fresh.push_back(key);
    }
  }
  if (!fresh.empty()) {
    std::vector<Key> merged;
    merged.reserve(keys_.size() + fresh.size());
    std::merge(keys_.begin(), keys_.end(), fresh.begin(), fresh.end(),
               std::back_inserter(merged));
    // Re-index existing rows into the widened column space.
    std::vector<std::size_t> where(keys_.size());
    for (std::size_t i = 0; i < keys_.size(); ++i) {
      where[i] = static_cast<std::size_t>(
          std::lower_bound(merged.begin(), merged.end(), keys_[i]) -
          merged.begin());
    }
    for (auto& row : rows_) {
      std::vector<Rational> wide(merged.size());
      for (std::size_t i = 0; i < row.size(); ++i) wide[where[i]] = row[i];
      row = std::move(wide);
    }
    keys_ = std::move(merged);
  }

  std::vector<Rational> v(keys_.size());
  for (const auto& [key, c] : sparse) {
    auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
    v[static_cast<std::size_t>(it - keys_.begin())] = c;
  }
  reduce(v);

  std::size_t pivot = 0;
  while (pivot < v.size() && v[pivot] == 0) ++pivot;
  if (pivot == v.size()) return false;

  Rational lead = v[pivot];
  for (std::size_t j = pivot; j < v.size(); ++j) v[j] /= lead;
  for (auto& row : rows_) {
    if (row[pivot] == 0) continue;
    Rational factor = row[pivot];
    for (std::size_t j = pivot; j < v.size(); ++j) row[j] -= factor * v[j];
  }

  // Keep rows ordered by ascending pivot column.
  auto position = rows_.begin();
  for (; position != rows_.end(); ++position) {
    std::size_t p = 0;
    while (p < position->size() && (*position)[p] == 0) ++p;
    if (p > pivot) break;
  }
  rows_.insert(position, std::move(v));
  return true;
}

VectorField SpanBasis::row_field(int r) const {
  const auto& row = rows_.at(static_cast<std::size_t>(r));
  std::vector<LaurentPolynomial> components(
      field_dimension_, LaurentPolynomial(field_dimension_));
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] == 0) continue;
    components[static_cast<std::size_t>(keys_[j].second)].add_term(
        keys_[j].first, row[j]);
  }
  return VectorField(std::move(components));
}

SpanBasis span_of(const std::vector<VectorField>& fields) {
  if (fields.empty()) throw Error("span of an empty field list");
  SpanBasis basis(fields.front().dimension());
  for (const auto& x : fields) basis.insert(x);
  return basis;
}

namespace {

std::vector<VectorField> merge_new_brackets(
    const std::vector<VectorField>& fields,
    std::vector<std::optional<VectorField>>& brackets) {
  SpanBasis span = span_of(fields);
  std::vector<VectorField> out = fields;
  for (auto& b : brackets) {
    if (span.insert(*b)) out.push_back(std::move(*b));
  }
  return out;
}

std::vector<std::pair<int, int>> index_pairs(int count) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) pairs.emplace_back(i, j);
  }
  return pairs;
}

}  // namespace

std::vector<VectorField> add_pairwise_commutators(
    const std::vector<VectorField>& fields) {
  if (fields.empty()) throw Error("commutator round on an empty field list");
  auto pairs = index_pairs(static_cast<int>(fields.size()));
  std::vector<std::optional<VectorField>> brackets(pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(pairs.size()); ++k) {
    brackets[static_cast<std::size_t>(k)] =
        lie_bracket(fields[pairs[static_cast<std::size_t>(k)].first],
                    fields[pairs[static_cast<std::size_t>(k)].second]);
  }
  return merge_new_brackets(fields, brackets);
}

std::vector<VectorField> add_pairwise_commutators_serial(
    const std::vector<VectorField>& fields) {
  if (fields.empty()) throw Error("commutator round on an empty field list");
  auto pairs = index_pairs(static_cast<int>(fields.size()));
  std::vector<std::optional<VectorField>> brackets(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    brackets[k] = lie_bracket(fields[pairs[k].first], fields[pairs[k].second]);
  }
  return merge_new_brackets(fields, brackets);
}

}  // namespace nls
