#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fairdisk::flow {

struct Arc {
  int from = 0;
  int to = 0;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
};

// Directed s-t network with integral per-arc flow bounds. Parallel arcs are
// allowed, self-loops are not.
struct BoundedNetwork {
  int node_count = 0;
  int source = 0;
  int sink = 0;
  std::vector<Arc> arcs;

  // Throws std::invalid_argument on out-of-range ids, source == sink,
  // self-loops, negative bounds or lower > upper.
  void validate() const;
};

struct FlowResult {
  bool feasible = false;
  std::int64_t value = 0;
  std::vector<std::int64_t> arc_flow;  // parallel to BoundedNetwork::arcs
};

// Maximum s-t flow; every lower bound must be zero.
FlowResult max_flow(const BoundedNetwork& net);

// Maximum s-t flow honoring lower bounds, via the two-phase circulation
// reduction. feasible == false when the bounds admit no flow at all.
FlowResult max_flow_with_lower_bounds(const BoundedNetwork& net);

// Violation messages for res checked against net; empty when res is a
// feasible integral flow whose value matches its arc flows.
std::vector<std::string> audit_flow(const BoundedNetwork& net, const FlowResult& res);

}  // namespace fairdisk::flow
