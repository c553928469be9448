#include "nls/system_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "nls/errors.hpp"
#include "nls/parse.hpp"
#include "nls/time_expression.hpp"

namespace nls {

using nlohmann::json;

namespace {

std::string operator_name(const json& entry, std::size_t index) {
  if (entry.is_object() && entry.contains("label") &&
      entry["label"].is_string()) {
    return "operator '" + entry["label"].get<std::string>() + "'";
  }
  return "operator " + std::to_string(index);
}

void read_variables(const json& j, SystemDocument& doc,
                    std::vector<std::string>& problems) {
  if (!j.contains("variables") || !j["variables"].is_array() ||
      j["variables"].empty()) {
    problems.push_back("'variables' must be a nonempty array of names");
    return;
  }
  for (const auto& v : j["variables"]) {
    if (!v.is_string() || v.get<std::string>().empty()) {
      problems.push_back("'variables' entries must be nonempty strings");
      return;
    }
    doc.variables.push_back(v.get<std::string>());
  }
  std::set<std::string> seen;
  for (const auto& name : doc.variables) {
    if (!seen.insert(name).second) {
      problems.push_back("variable '" + name + "' is declared twice");
    }
  }
}

void read_operators(const json& j, SystemDocument& doc,
                    std::vector<std::string>& problems) {
  if (!j.contains("operators") || !j["operators"].is_array() ||
      j["operators"].empty()) {
    problems.push_back("'operators' must be a nonempty array");
    return;
  }
  for (std::size_t i = 0; i < j["operators"].size(); ++i) {
    const json& entry = j["operators"][i];
    const std::string name = operator_name(entry, i);
    if (!entry.is_object() || !entry.contains("components") ||
        !entry["components"].is_array()) {
      problems.push_back(name + " must be an object with a 'components' array");
      continue;
    }
    for (const auto& [key, value] : entry.items()) {
      (void)value;
      if (key != "label" && key != "components") {
        problems.push_back(name + " has unknown key '" + key + "'");
      }
    }
    OperatorEntry op;
    if (entry.contains("label")) {
      if (!entry["label"].is_string()) {
        problems.push_back(name + " label must be a string");
      } else {
        op.label = entry["label"].get<std::string>();
      }
    }
    bool strings_ok = true;
    for (const auto& c : entry["components"]) {
      if (!c.is_string()) {
        problems.push_back(name + " components must be strings");
        strings_ok = false;
        break;
      }
      op.components.push_back(c.get<std::string>());
    }
    if (!strings_ok) continue;
    if (!doc.variables.empty() &&
        op.components.size() != doc.variables.size()) {
      problems.push_back(name + " has " +
                         std::to_string(op.components.size()) +
                         " components for " +
                         std::to_string(doc.variables.size()) + " variables");
    } else if (!doc.variables.empty()) {
      for (std::size_t c = 0; c < op.components.size(); ++c) {
        try {
          parse_polynomial(op.components[c], doc.variables, doc.allow_laurent);
        } catch (const Error& e) {
          problems.push_back(name + " component " + std::to_string(c) + ": " +
                             e.what());
        }
      }
    }
    doc.operators.push_back(std::move(op));
  }
}

void read_time_coefficients(const json& j, SystemDocument& doc,
                            std::vector<std::string>& problems) {
  if (!j.contains("time_coefficients")) return;
  if (!j["time_coefficients"].is_array()) {
    problems.push_back("'time_coefficients' must be an array of expressions");
    return;
  }
  for (const auto& c : j["time_coefficients"]) {
    if (!c.is_string()) {
      problems.push_back("'time_coefficients' entries must be strings");
      return;
    }
    try {
      TimeExpression::parse(c.get<std::string>());
    } catch (const Error& e) {
      problems.push_back(std::string("time coefficient '") +
                         c.get<std::string>() + "': " + e.what());
    }
    doc.time_coefficients.push_back(c.get<std::string>());
  }
}

}  // namespace

std::vector<VectorField> SystemDocument::to_fields() const {
  std::vector<VectorField> out;
  out.reserve(operators.size());
  for (const auto& op : operators) {
    std::vector<LaurentPolynomial> parts;
    parts.reserve(op.components.size());
    for (const auto& text : op.components) {
      parts.push_back(parse_polynomial(text, variables, allow_laurent));
    }
    out.emplace_back(std::move(parts));
  }
  return out;
}

SystemDocument parse_system(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw ValidationError({"top level must be a JSON object"});
  }

  std::vector<std::string> problems;
  SystemDocument doc;
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "variables" && key != "allow_laurent" && key != "operators" &&
        key != "time_coefficients") {
      problems.push_back("unknown key '" + key + "'");
    }
  }
  if (j.contains("allow_laurent")) {
    if (!j["allow_laurent"].is_boolean()) {
      problems.push_back("'allow_laurent' must be a boolean");
    } else {
      doc.allow_laurent = j["allow_laurent"].get<bool>();
    }
  }
  read_variables(j, doc, problems);
  read_operators(j, doc, problems);
  read_time_coefficients(j, doc, problems);

  if (!problems.empty()) throw ValidationError(std::move(problems));
  return doc;
}

SystemDocument load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_system(buffer.str());
}

std::string system_to_json(const SystemDocument& doc, int indent) {
  json j;
  j["variables"] = doc.variables;
  j["allow_laurent"] = doc.allow_laurent;
  j["operators"] = json::array();
  for (const auto& op : doc.operators) {
    json entry;
    if (!op.label.empty()) entry["label"] = op.label;
    entry["components"] = op.components;
    j["operators"].push_back(std::move(entry));
  }
  if (!doc.time_coefficients.empty()) {
    j["time_coefficients"] = doc.time_coefficients;
  }
  return indent < 0 ? j.dump() : j.dump(indent);
}

}  // namespace nls
