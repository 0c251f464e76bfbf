#include "aos/network.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <set>

#include "aos/errors.hpp"
#include "json.hpp"

namespace aos {

using nlohmann::json;

const char* to_string(NetworkErrorCode code) {
  switch (code) {
    case NetworkErrorCode::schema: return "schema";
    case NetworkErrorCode::dangling_reference: return "dangling_reference";
    case NetworkErrorCode::nonpositive_reactance: return "nonpositive_reactance";
    case NetworkErrorCode::disconnected: return "disconnected";
    case NetworkErrorCode::duplicate_line: return "duplicate_line";
  }
  return "schema";
}

const char* to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::dcopf: return "dcopf";
    case ModelKind::network_flow: return "nf";
    case ModelKind::copper_plate: return "cp";
  }
  return "dcopf";
}

std::string generation_name(BusId bus) { return "P_" + std::to_string(bus); }
std::string flow_name(const Line& line) {
  return "f_" + std::to_string(line.from) + "_" + std::to_string(line.to);
}
std::string angle_name(BusId bus) { return "theta_" + std::to_string(bus); }

void Network::validate() const {
  if (buses.empty()) throw NetworkError(NetworkErrorCode::schema, "bus list is empty");
  std::set<BusId> known;
  for (BusId b : buses) {
    if (!known.insert(b).second) {
      throw NetworkError(NetworkErrorCode::schema, "bus " + std::to_string(b) + " declared twice");
    }
  }
  auto require_bus = [&](BusId b, const std::string& what) {
    if (!known.contains(b)) {
      throw NetworkError(NetworkErrorCode::dangling_reference,
                         what + " references undeclared bus " + std::to_string(b));
    }
  };
  std::set<std::pair<BusId, BusId>> pairs;
  for (const auto& line : lines) {
    require_bus(line.from, "line");
    require_bus(line.to, "line");
    if (line.from == line.to) {
      throw NetworkError(NetworkErrorCode::duplicate_line,
                         "self loop at bus " + std::to_string(line.from));
    }
    if (!pairs.emplace(line.from, line.to).second) {
      throw NetworkError(NetworkErrorCode::duplicate_line, "repeated line " + flow_name(line));
    }
    if (!(line.reactance > 0.0) || !std::isfinite(line.reactance)) {
      throw NetworkError(NetworkErrorCode::nonpositive_reactance,
                         "line " + flow_name(line) + " has reactance <= 0");
    }
    if (!(line.limit > 0.0) || !std::isfinite(line.limit)) {
      throw NetworkError(NetworkErrorCode::schema, "line " + flow_name(line) + " has limit <= 0");
    }
  }
  for (const auto& [bus, gen] : generators) {
    require_bus(bus, "generator");
    if (!(gen.capacity >= 0.0) || !std::isfinite(gen.capacity) || !std::isfinite(gen.cost)) {
      throw NetworkError(NetworkErrorCode::schema,
                         "generator at bus " + std::to_string(bus) + " has invalid cost or capacity");
    }
  }
  for (const auto& [bus, load] : loads) {
    require_bus(bus, "load");
    if (!(load >= 0.0) || !std::isfinite(load)) {
      throw NetworkError(NetworkErrorCode::schema, "load at bus " + std::to_string(bus) + " is negative");
    }
  }

  std::map<BusId, std::vector<BusId>> adjacent;
  for (const auto& line : lines) {
    adjacent[line.from].push_back(line.to);
    adjacent[line.to].push_back(line.from);
  }
  std::set<BusId> seen{buses.front()};
  std::queue<BusId> todo;
  todo.push(buses.front());
  while (!todo.empty()) {
    const BusId b = todo.front();
    todo.pop();
    for (BusId next : adjacent[b]) {
      if (seen.insert(next).second) todo.push(next);
    }
  }
  if (seen.size() != known.size()) {
    throw NetworkError(NetworkErrorCode::disconnected, "network graph is not connected");
  }
}

void Network::materialize() {
  validate();
  for (BusId b : buses) {
    generators.try_emplace(b, Generator{0.0, 0.0});
    loads.try_emplace(b, 0.0);
  }
}

double Network::load_at(BusId bus) const {
  auto it = loads.find(bus);
  return it == loads.end() ? 0.0 : it->second;
}

Generator Network::generator_at(BusId bus) const {
  auto it = generators.find(bus);
  return it == generators.end() ? Generator{} : it->second;
}

namespace {

template <typename T>
T field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw NetworkError(NetworkErrorCode::schema, where + ": missing field '" + key + "'");
  }
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw NetworkError(NetworkErrorCode::schema, where + ": field '" + key + "' has the wrong type");
  }
}

}  // namespace

Network parse_network(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw NetworkError(NetworkErrorCode::schema, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw NetworkError(NetworkErrorCode::schema, "top level must be an object");
  if (field<std::string>(doc, "schema", "network") != "aos-net/1") {
    throw NetworkError(NetworkErrorCode::schema, "unsupported schema, expected aos-net/1");
  }

  Network net;
  net.buses = field<std::vector<BusId>>(doc, "buses", "network");
  if (doc.contains("lines")) {
    if (!doc["lines"].is_array()) throw NetworkError(NetworkErrorCode::schema, "'lines' must be an array");
    for (const auto& l : doc["lines"]) {
      net.lines.push_back(Line{field<BusId>(l, "from", "line"), field<BusId>(l, "to", "line"),
                               field<double>(l, "reactance", "line"), field<double>(l, "limit", "line")});
    }
  }
  if (doc.contains("generators")) {
    if (!doc["generators"].is_array()) {
      throw NetworkError(NetworkErrorCode::schema, "'generators' must be an array");
    }
    for (const auto& g : doc["generators"]) {
      const BusId bus = field<BusId>(g, "bus", "generator");
      const Generator gen{field<double>(g, "cost", "generator"), field<double>(g, "capacity", "generator")};
      if (!net.generators.emplace(bus, gen).second) {
        throw NetworkError(NetworkErrorCode::schema, "two generators at bus " + std::to_string(bus));
      }
    }
  }
  if (doc.contains("loads")) {
    if (!doc["loads"].is_array()) throw NetworkError(NetworkErrorCode::schema, "'loads' must be an array");
    for (const auto& l : doc["loads"]) {
      const BusId bus = field<BusId>(l, "bus", "load");
      if (!net.loads.emplace(bus, field<double>(l, "demand", "load")).second) {
        throw NetworkError(NetworkErrorCode::schema, "two loads at bus " + std::to_string(bus));
      }
    }
  }
  net.materialize();
  return net;
}

std::string network_to_json(const Network& net) {
  json doc;
  doc["schema"] = "aos-net/1";
  doc["buses"] = net.buses;
  doc["lines"] = json::array();
  for (const auto& l : net.lines) {
    doc["lines"].push_back({{"from", l.from}, {"to", l.to}, {"reactance", l.reactance}, {"limit", l.limit}});
  }
  doc["generators"] = json::array();
  for (const auto& [bus, g] : net.generators) {
    if (g.capacity == 0.0 && g.cost == 0.0) continue;
    doc["generators"].push_back({{"bus", bus}, {"cost", g.cost}, {"capacity", g.capacity}});
  }
  doc["loads"] = json::array();
  for (const auto& [bus, load] : net.loads) {
    if (load == 0.0) continue;
    doc["loads"].push_back({{"bus", bus}, {"demand", load}});
  }
  return doc.dump(2) + "\n";
}

Network canonical_three_bus() {
  Network net;
  net.buses = {1, 2, 3};
  net.lines = {{1, 2, 1.0, 100.0}, {1, 3, 1.0, 100.0}, {2, 3, 1.0, 100.0}};
  net.generators = {{1, {50.0, 100.0}}, {2, {50.0, 100.0}}};
  net.loads = {{3, 100.0}};
  net.materialize();
  return net;
}

namespace {

// Adds P (and optionally f) variables and sets the shared objective g(P).
void add_generation(const Network& net, LpModel& model) {
  Objective obj;
  for (BusId b : net.buses) {
    const Generator g = net.generator_at(b);
    const std::size_t idx = model.add_variable(generation_name(b), 0.0, g.capacity, VariableRole::generation);
    if (g.cost != 0.0) obj.coeffs[idx] = g.cost;
  }
  model.set_objective(std::move(obj));
}

void add_flows(const Network& net, LpModel& model) {
  for (const auto& line : net.lines) {
    model.add_variable(flow_name(line), -line.limit, line.limit, VariableRole::flow);
  }
}

void add_flow_balance(const Network& net, LpModel& model) {
  for (BusId b : net.buses) {
    Constraint c;
    c.name = "balance_" + std::to_string(b);
    c.sense = ConstraintSense::equal;
    c.rhs = net.load_at(b);
    c.coeffs[model.variable_index(generation_name(b))] += 1.0;
    for (const auto& line : net.lines) {
      if (line.to == b) c.coeffs[model.variable_index(flow_name(line))] += 1.0;
      if (line.from == b) c.coeffs[model.variable_index(flow_name(line))] -= 1.0;
    }
    model.add_constraint(std::move(c));
  }
}

}  // namespace

LpModel build_dcopf(const Network& net) {
  net.validate();
  LpModel model;
  add_generation(net, model);
  add_flows(net, model);
  for (BusId b : net.buses) model.add_variable(angle_name(b), -kInf, kInf, VariableRole::angle);
  add_flow_balance(net, model);
  for (const auto& line : net.lines) {
    // (theta_i - theta_j) / x_ij = f_ij
    Constraint c;
    c.name = "angle_" + std::to_string(line.from) + "_" + std::to_string(line.to);
    c.sense = ConstraintSense::equal;
    c.rhs = 0.0;
    c.coeffs[model.variable_index(flow_name(line))] = 1.0;
    c.coeffs[model.variable_index(angle_name(line.from))] = -1.0 / line.reactance;
    c.coeffs[model.variable_index(angle_name(line.to))] = 1.0 / line.reactance;
    model.add_constraint(std::move(c));
  }
  return model;
}

LpModel build_network_flow(const Network& net) {
  net.validate();
  LpModel model;
  add_generation(net, model);
  add_flows(net, model);
  add_flow_balance(net, model);
  return model;
}

LpModel build_copper_plate(const Network& net) {
  net.validate();
  LpModel model;
  add_generation(net, model);
  Constraint c;
  c.name = "aggregate_balance";
  c.sense = ConstraintSense::equal;
  for (BusId b : net.buses) {
    c.coeffs[model.variable_index(generation_name(b))] = 1.0;
    c.rhs += net.load_at(b);
  }
  model.add_constraint(std::move(c));
  return model;
}

LpModel build_model(const Network& net, ModelKind kind) {
  switch (kind) {
    case ModelKind::dcopf: return build_dcopf(net);
    case ModelKind::network_flow: return build_network_flow(net);
    case ModelKind::copper_plate: return build_copper_plate(net);
  }
  return build_dcopf(net);
}

Network random_network(std::uint64_t seed, int num_buses) {
  if (num_buses < 1) throw NetworkError(NetworkErrorCode::schema, "random_network needs at least one bus");
  std::mt19937_64 rng(seed);
  auto uniform = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  // Round to a 0.5 grid so fixtures print cleanly.
  auto grid = [](double v) { return std::round(v * 2.0) / 2.0; };

  Network net;
  for (int b = 1; b <= num_buses; ++b) net.buses.push_back(b);
  std::set<std::pair<int, int>> used;
  auto add_line = [&](int a, int b) {
    if (a == b || used.contains({std::min(a, b), std::max(a, b)})) return;
    used.insert({std::min(a, b), std::max(a, b)});
    net.lines.push_back(Line{a, b, grid(uniform(0.5, 3.0)), grid(uniform(20.0, 150.0))});
  };
  for (int b = 2; b <= num_buses; ++b) add_line(pick(1, b - 1), b);
  const int extra = num_buses >= 3 ? pick(0, 2) : 0;
  for (int e = 0; e < extra; ++e) add_line(pick(1, num_buses), pick(1, num_buses));

  double total_load = 0.0;
  for (int b = 1; b <= num_buses; ++b) {
    if (pick(0, 1) == 1) {
      const double load = grid(uniform(10.0, 80.0));
      net.loads[b] = load;
      total_load += load;
    }
  }
  std::vector<int> gen_buses;
  for (int b = 1; b <= num_buses; ++b) {
    if (pick(0, 1) == 1) gen_buses.push_back(b);
  }
  if (gen_buses.empty()) gen_buses.push_back(pick(1, num_buses));
  double capacity = 0.0;
  for (int b : gen_buses) {
    const double cap = grid(uniform(20.0, 150.0));
    net.generators[b] = Generator{grid(uniform(10.0, 60.0)), cap};
    capacity += cap;
  }
  if (capacity < total_load) {
    net.generators[gen_buses.front()].capacity += grid(total_load - capacity) + 1.0;
  }
  net.materialize();
  return net;
}

}  // namespace aos
