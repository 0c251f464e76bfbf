#include "aos/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "aos/errors.hpp"

namespace aos {

using nlohmann::json;

double report_number(double v) {
  if (!std::isfinite(v)) return v;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

namespace {

json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return report_number(v);
}

json numbers(const std::vector<double>& values) {
  json arr = json::array();
  for (double v : values) arr.push_back(number(v));
  return arr;
}

json bound_to_json(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double bound_from_json(const json& j, double missing) {
  if (j.is_null()) return missing;
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "+inf") return kInf;
    if (s == "-inf") return -kInf;
    throw ModelError("bound string must be \"inf\" or \"-inf\"");
  }
  return j.get<double>();
}

VariableRole role_from_string(const std::string& s) {
  if (s == "generation") return VariableRole::generation;
  if (s == "flow") return VariableRole::flow;
  if (s == "angle") return VariableRole::angle;
  if (s == "generic") return VariableRole::generic;
  throw ModelError("unknown variable role '" + s + "'");
}

ConstraintSense sense_from_string(const std::string& s) {
  if (s == "<=") return ConstraintSense::less_equal;
  if (s == ">=") return ConstraintSense::greater_equal;
  if (s == "==" || s == "=") return ConstraintSense::equal;
  throw ModelError("unknown constraint sense '" + s + "'");
}

ObjectiveSense objective_sense_from_string(const std::string& s) {
  if (s == "min" || s == "minimize") return ObjectiveSense::minimize;
  if (s == "max" || s == "maximize") return ObjectiveSense::maximize;
  throw ModelError("unknown objective sense '" + s + "'");
}

json expr_to_json(const LinearExpr& expr, const LpModel& model) {
  json obj = json::object();
  for (const auto& [idx, coeff] : expr) obj[model.variables()[idx].name] = coeff;
  return obj;
}

LinearExpr expr_from_json(const json& j, const LpModel& model) {
  if (!j.is_object()) throw ModelError("coefficients must be an object of name: value");
  LinearExpr expr;
  for (const auto& [name, value] : j.items()) expr[model.variable_index(name)] += value.get<double>();
  return expr;
}

json header(const char* kind) {
  return json{{"schema_version", kReportSchema}, {"kind", kind}};
}

}  // namespace

json lp_model_to_json(const LpModel& model) {
  json doc;
  doc["schema"] = kLpSchema;
  doc["variables"] = json::array();
  for (const auto& v : model.variables()) {
    doc["variables"].push_back({{"name", v.name},
                                {"lower", bound_to_json(v.lower)},
                                {"upper", bound_to_json(v.upper)},
                                {"role", to_string(v.role)}});
  }
  doc["constraints"] = json::array();
  for (const auto& c : model.constraints()) {
    doc["constraints"].push_back({{"name", c.name},
                                  {"coeffs", expr_to_json(c.coeffs, model)},
                                  {"sense", to_string(c.sense)},
                                  {"rhs", c.rhs}});
  }
  const auto& obj = model.objective();
  doc["objective"] = {{"sense", to_string(obj.sense)},
                      {"coeffs", expr_to_json(obj.coeffs, model)},
                      {"constant", obj.constant}};
  return doc;
}

LpModel lp_model_from_json(const json& j) {
  try {
    if (!j.is_object() || j.value("schema", std::string()) != kLpSchema) {
      throw ModelError(std::string("expected an object with schema ") + kLpSchema);
    }
    LpModel model;
    for (const auto& v : j.at("variables")) {
      model.add_variable(v.at("name").get<std::string>(), bound_from_json(v.value("lower", json()), -kInf),
                         bound_from_json(v.value("upper", json()), kInf),
                         role_from_string(v.value("role", std::string("generic"))));
    }
    if (j.contains("constraints")) {
      std::size_t k = 0;
      for (const auto& c : j.at("constraints")) {
        Constraint con;
        con.name = c.value("name", "c" + std::to_string(k));
        con.coeffs = expr_from_json(c.at("coeffs"), model);
        con.sense = sense_from_string(c.at("sense").get<std::string>());
        con.rhs = c.at("rhs").get<double>();
        model.add_constraint(std::move(con));
        ++k;
      }
    }
    Objective obj;
    if (j.contains("objective")) {
      const auto& o = j.at("objective");
      obj.sense = objective_sense_from_string(o.value("sense", std::string("min")));
      if (o.contains("coeffs")) obj.coeffs = expr_from_json(o.at("coeffs"), model);
      obj.constant = o.value("constant", 0.0);
    }
    model.set_objective(std::move(obj));
    return model;
  } catch (const json::exception& e) {
    throw ModelError(std::string("malformed LP model: ") + e.what());
  }
}

json solve_report(const SimplexResult& result, const LpModel& model) {
  json doc = header("solve");
  doc["status"] = to_string(result.status);
  doc["variables"] = model.variable_names();
  doc["z_star"] = result.optimal() ? number(result.z_star) : json(nullptr);
  doc["x_star"] = result.optimal() ? numbers(result.x_star) : json(nullptr);
  if (result.status == SolveStatus::unbounded) doc["ray"] = numbers(result.ray);
  doc["iterations"] = result.iterations;
  return doc;
}

json vertex_set_report(const VertexSet& vs) {
  json doc = header("vertex_set");
  doc["model_fingerprint"] = vs.model_fingerprint;
  doc["variables"] = vs.variables;
  doc["tau"] = number(vs.tau);
  doc["provably_empty"] = vs.provably_empty;
  doc["complete"] = vs.complete;
  doc["count"] = vs.points.size();
  doc["points"] = json::array();
  for (const auto& p : vs.points) doc["points"].push_back(numbers(p));
  doc["objective_values"] = numbers(vs.objective_values);
  return doc;
}

VertexSet vertex_set_from_report(const json& j) {
  try {
    if (!j.is_object() || j.value("kind", std::string()) != "vertex_set") {
      throw ModelError("not a vertex_set report");
    }
    VertexSet vs;
    vs.model_fingerprint = j.value("model_fingerprint", std::string());
    vs.variables = j.at("variables").get<std::vector<std::string>>();
    vs.tau = j.at("tau").is_null() ? 0.0 : j.at("tau").get<double>();
    vs.provably_empty = j.value("provably_empty", false);
    vs.complete = j.value("complete", true);
    for (const auto& p : j.at("points")) {
      Point point = p.get<std::vector<double>>();
      if (point.size() != vs.variables.size()) throw ModelError("point dimension does not match variables");
      vs.points.push_back(std::move(point));
    }
    if (j.contains("objective_values")) vs.objective_values = j.at("objective_values").get<std::vector<double>>();
    return vs;
  } catch (const json::exception& e) {
    throw ModelError(std::string("malformed vertex_set report: ") + e.what());
  }
}

json containment_report(const ChainResult& chain) {
  json doc = header("containment");
  doc["base_status"] = to_string(chain.base_status);
  doc["z_star"] = number(chain.z_star);
  doc["tau"] = number(chain.tau);
  doc["pass"] = chain.report.pass;
  doc["pairs"] = json::array();
  for (const auto& pair : chain.report.pairs) {
    json p{{"name", pair.name}, {"tau", number(pair.tau)}, {"pass", pair.pass},
           {"max_violation", number(pair.max_violation)}, {"points", json::array()}};
    for (const auto& check : pair.points) {
      json c{{"projected", numbers(check.projected)},
             {"violation", number(check.violation)},
             {"contained", check.contained}};
      if (!check.contained) c["violated"] = check.violated;
      p["points"].push_back(std::move(c));
    }
    doc["pairs"].push_back(std::move(p));
  }
  return doc;
}

json ranking_report(const RankedAlternatives& ranked) {
  json doc = header("ranking");
  doc["sense"] = to_string(ranked.sense);
  doc["variables"] = ranked.source.variables;
  doc["entries"] = json::array();
  for (std::size_t i = 0; i < ranked.entries.size(); ++i) {
    const auto& e = ranked.entries[i];
    doc["entries"].push_back({{"rank", i + 1},
                              {"point", numbers(e.point)},
                              {"value", number(e.value)},
                              {"best", i == 0},
                              {"worst", i + 1 == ranked.entries.size()}});
  }
  if (ranked.entries.empty()) {
    doc["best"] = nullptr;
    doc["worst"] = nullptr;
  } else {
    doc["best"] = {{"point", numbers(ranked.best().point)}, {"value", number(ranked.best().value)}};
    doc["worst"] = {{"point", numbers(ranked.worst().point)}, {"value", number(ranked.worst().value)}};
  }
  return doc;
}

json uniqueness_report(const UniquenessCertificate& cert) {
  json doc = header("uniqueness");
  doc["unique"] = cert.unique;
  doc["complete"] = cert.complete;
  doc["tau"] = number(cert.tau);
  doc["witnesses"] = json::array();
  for (const auto& w : cert.witnesses) doc["witnesses"].push_back(numbers(w));
  return doc;
}

json binary_pool_report(const BinarySolutionPool& pool) {
  json doc = header("binary_pool");
  doc["binary_vars"] = pool.binary_vars;
  doc["tau"] = number(pool.tau);
  doc["exhausted"] = pool.exhausted;
  doc["solutions"] = json::array();
  for (const auto& s : pool.solutions) {
    doc["solutions"].push_back({{"assignment", s.assignment}, {"objective", number(s.objective)}});
  }
  return doc;
}

SecondarySpec secondary_from_json(const json& j) {
  try {
    if (!j.is_object()) throw ModelError("secondary objective must be a JSON object");
    SecondarySpec spec;
    const ObjectiveSense sense = objective_sense_from_string(j.value("sense", std::string("max")));
    spec.linear.sense = sense;
    if (j.contains("scores")) {
      spec.external_scores = true;
      spec.scores = j.at("scores").get<std::vector<double>>();
      return spec;
    }
    if (!j.contains("coeffs") || !j.at("coeffs").is_object()) {
      throw ModelError("secondary objective needs 'coeffs' or 'scores'");
    }
    for (const auto& [name, value] : j.at("coeffs").items()) spec.linear.coeffs.emplace_back(name, value.get<double>());
    spec.linear.constant = j.value("constant", 0.0);
    return spec;
  } catch (const json::exception& e) {
    throw ModelError(std::string("malformed secondary objective: ") + e.what());
  }
}

std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

}  // namespace aos
