#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "aos/lp_model.hpp"

namespace aos {

using BusId = int;

struct Line {
  BusId from = 0;
  BusId to = 0;
  double reactance = 1.0;
  double limit = 0.0;
};

struct Generator {
  double cost = 0.0;
  double capacity = 0.0;
};

/// Transmission network shared by the DC-OPF, Network Flow and Copper Plate
/// builders. After validate(), every bus has a generator entry (capacity 0
/// when none was declared).
struct Network {
  std::vector<BusId> buses;
  std::vector<Line> lines;
  std::map<BusId, Generator> generators;
  std::map<BusId, double> loads;

  /// Throws NetworkError on dangling references, self loops or repeated
  /// ordered pairs, nonpositive reactance or limit, and disconnected graphs.
  void validate() const;
  /// validate(), then fills in zero-capacity generators and zero loads.
  void materialize();

  [[nodiscard]] double load_at(BusId bus) const;
  [[nodiscard]] Generator generator_at(BusId bus) const;
};

/// Parses the "aos-net/1" JSON schema; see README.
[[nodiscard]] Network parse_network(std::string_view text);
[[nodiscard]] std::string network_to_json(const Network& net);

/// Three buses in a triangle, x = 1 and limit 100 on every line, generators
/// of cost 50 and capacity 100 at buses 1 and 2, load 100 at bus 3.
[[nodiscard]] Network canonical_three_bus();

/// Variables ordered (P, f, theta); angles free.
[[nodiscard]] LpModel build_dcopf(const Network& net);
/// DC-OPF without angles and the angle-flow coupling.
[[nodiscard]] LpModel build_network_flow(const Network& net);
/// Generation only, with a single aggregate balance.
[[nodiscard]] LpModel build_copper_plate(const Network& net);

enum class ModelKind { dcopf, network_flow, copper_plate };
const char* to_string(ModelKind kind);
[[nodiscard]] LpModel build_model(const Network& net, ModelKind kind);

/// Random connected network: a random spanning tree plus a few extra lines,
/// generators on a random subset of buses (at least one), random loads.
/// Total capacity always covers total load; line limits may still make the
/// DC-OPF infeasible.
[[nodiscard]] Network random_network(std::uint64_t seed, int num_buses);

std::string generation_name(BusId bus);
std::string flow_name(const Line& line);
std::string angle_name(BusId bus);

}  // namespace aos
