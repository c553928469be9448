#include "nls/report_io.hpp"

#include <cstdint>

#include "nls/errors.hpp"
#include "nls/parse.hpp"
#include "nls/span.hpp"

namespace nls {

using nlohmann::json;

namespace {

std::string integer_str(const Integer& z) { return z.get_str(); }

json exponent_json(const ExponentVector& e) {
  json out = json::array();
  for (auto x : e) out.push_back(x);
  return out;
}

ExponentVector exponent_from(const json& j) {
  ExponentVector out;
  for (const auto& x : j) out.push_back(x.get<std::int64_t>());
  return out;
}

json rationals_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::vector<Rational> rationals_from(const json& j) {
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(parse_rational(x.get<std::string>()));
  return out;
}

json conditions_json(const ConditionRecord& c) {
  json out;
  out["grows_norm"] = c.grows_norm;
  out["vertex_of_sum"] = c.vertex_of_sum;
  out["commutator_nonzero"] = c.commutator_nonzero;
  out["u_chain_survives"] = c.u_chain_survives;
  out["v_chain_survives"] = c.v_chain_survives;
  out["norm_sq_v"] = integer_str(c.norm_sq_v);
  out["norm_sq_u"] = integer_str(c.norm_sq_u);
  out["norm_sq_sum"] = integer_str(c.norm_sq_sum);
  out["k"] = rationals_json(c.k);
  out["dot_uV"] = to_string(c.dot_uV);
  out["dot_vU"] = to_string(c.dot_vU);
  out["dot_uU"] = to_string(c.dot_uU);
  out["dot_vV"] = to_string(c.dot_vV);
  if (c.s1) out["s1"] = to_string(*c.s1);
  if (c.s2) out["s2"] = to_string(*c.s2);
  return out;
}

ConditionRecord conditions_from(const json& j) {
  ConditionRecord c;
  c.grows_norm = j.at("grows_norm").get<bool>();
  c.vertex_of_sum = j.at("vertex_of_sum").get<bool>();
  c.commutator_nonzero = j.at("commutator_nonzero").get<bool>();
  c.u_chain_survives = j.at("u_chain_survives").get<bool>();
  c.v_chain_survives = j.at("v_chain_survives").get<bool>();
  c.norm_sq_v = Integer(j.at("norm_sq_v").get<std::string>());
  c.norm_sq_u = Integer(j.at("norm_sq_u").get<std::string>());
  c.norm_sq_sum = Integer(j.at("norm_sq_sum").get<std::string>());
  c.k = rationals_from(j.at("k"));
  c.dot_uV = parse_rational(j.at("dot_uV").get<std::string>());
  c.dot_vU = parse_rational(j.at("dot_vU").get<std::string>());
  c.dot_uU = parse_rational(j.at("dot_uU").get<std::string>());
  c.dot_vV = parse_rational(j.at("dot_vV").get<std::string>());
  if (j.contains("s1")) c.s1 = parse_rational(j.at("s1").get<std::string>());
  if (j.contains("s2")) c.s2 = parse_rational(j.at("s2").get<std::string>());
  return c;
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::FiniteDimensional:
      return "finite";
    case Verdict::InfiniteDimensional:
      return "infinite";
    case Verdict::BudgetExceeded:
      return "budget-exceeded";
  }
  throw Error("unreachable verdict");
}

Verdict verdict_from_name(const std::string& name) {
  if (name == "finite") return Verdict::FiniteDimensional;
  if (name == "infinite") return Verdict::InfiniteDimensional;
  if (name == "budget-exceeded") return Verdict::BudgetExceeded;
  throw ParseError("unknown verdict '" + name + "'");
}

std::string input_hash(const SystemDocument& doc) {
  const std::string canonical = system_to_json(doc, -1);
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : canonical) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

json report_to_json(const DecisionReport& rep, const SystemDocument& doc) {
  json j;
  j["version"] = "0.1.0";
  j["input_hash"] = input_hash(doc);
  j["verdict"] = verdict_name(rep.verdict);
  if (rep.dimension) j["dimension"] = *rep.dimension;
  if (rep.basis) {
    json rows = json::array();
    for (int r = 0; r < rep.basis->dimension(); ++r) {
      VectorField row = rep.basis->row_field(r);
      json comps = json::array();
      for (const auto& p : row.components()) {
        comps.push_back(to_string(p, doc.variables));
      }
      rows.push_back(std::move(comps));
    }
    j["basis"] = std::move(rows);
  }
  if (rep.witness) {
    const WitnessPair& w = *rep.witness;
    json wj;
    wj["i"] = w.i;
    wj["j"] = w.j;
    wj["v"] = exponent_json(w.v);
    wj["u"] = exponent_json(w.u);
    wj["V"] = rationals_json(w.V);
    wj["U"] = rationals_json(w.U);
    wj["conditions"] = conditions_json(w.conditions);
    j["witness"] = std::move(wj);
  }
  json rounds = json::array();
  for (const auto& r : rep.rounds) {
    rounds.push_back(
        json{{"operators", r.operator_count},
             {"span_dimension", r.span_dimension}});
  }
  j["rounds"] = std::move(rounds);
  j["input"] = json::parse(system_to_json(doc, -1));
  return j;
}

std::pair<DecisionReport, SystemDocument> report_from_json(const json& j) {
  SystemDocument doc = parse_system(j.at("input").dump());
  DecisionReport rep;
  rep.verdict = verdict_from_name(j.at("verdict").get<std::string>());
  rep.input = doc.to_fields();
  if (j.contains("dimension")) rep.dimension = j.at("dimension").get<int>();
  if (j.contains("basis")) {
    std::vector<VectorField> rows;
    for (const auto& row : j.at("basis")) {
      std::vector<LaurentPolynomial> comps;
      for (const auto& text : row) {
        comps.push_back(
            parse_polynomial(text.get<std::string>(), doc.variables, true));
      }
      rows.emplace_back(std::move(comps));
    }
    rep.basis = span_of(rows);
    rep.generators = std::move(rows);
  }
  if (j.contains("witness")) {
    const json& wj = j.at("witness");
    WitnessPair w;
    w.i = wj.at("i").get<int>();
    w.j = wj.at("j").get<int>();
    w.v = exponent_from(wj.at("v"));
    w.u = exponent_from(wj.at("u"));
    w.V = rationals_from(wj.at("V"));
    w.U = rationals_from(wj.at("U"));
    w.conditions = conditions_from(wj.at("conditions"));
    rep.witness = std::move(w);
  }
  for (const auto& r : j.at("rounds")) {
    rep.rounds.push_back({r.at("operators").get<int>(),
                          r.at("span_dimension").get<int>()});
  }
  rep.rounds_run = static_cast<int>(rep.rounds.size()) - 1;
  if (rep.witness) rep.witness_round = rep.rounds_run;
  return {std::move(rep), std::move(doc)};
}

}  // namespace nls
