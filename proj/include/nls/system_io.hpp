#pragma once

#include <string>
#include <vector>

#include "nls/vector_field.hpp"

namespace nls {

struct OperatorEntry {
  std::string label;
  std::vector<std::string> components;

  bool operator==(const OperatorEntry& rhs) const = default;
};

// On-disk description of an operator system: a declared variable list plus
// one polynomial string per component per operator. Optional scalar time
// factors are carried along untouched; the closure questions only concern
// the spatial parts.
struct SystemDocument {
  std::vector<std::string> variables;
  bool allow_laurent = false;
  std::vector<OperatorEntry> operators;
  std::vector<std::string> time_coefficients;

  int dimension() const { return static_cast<int>(variables.size()); }
  std::vector<VectorField> to_fields() const;

  bool operator==(const SystemDocument& rhs) const = default;
};

// Parses and validates a document; every violation found is collected into
// the thrown ValidationError, not just the first.
SystemDocument parse_system(const std::string& json_text);
SystemDocument load_system(const std::string& path);

// Canonical rendering: compact when indent < 0, pretty otherwise. The
// compact form is the hashing/equality reference for reports.
std::string system_to_json(const SystemDocument& doc, int indent = 2);

}  // namespace nls
