#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "shiftbribery/pricing.hpp"

namespace sb {

struct FlowEdge {
  int from;
  int to;
  std::int64_t capacity;
  std::int64_t demand;  // lower bound on the flow
  std::int64_t cost;    // per unit
};

// Directed network with a single source and sink. Lower bounds are only
// supported on edges into the sink whose demand equals their capacity,
// which is all the voter/shift-amount transportation problem needs.
struct FlowNetwork {
  int num_nodes = 0;
  int source = 0;
  int sink = 0;
  std::vector<FlowEdge> edges;

  int add_node() { return num_nodes++; }
  int add_edge(int from, int to, std::int64_t capacity, std::int64_t cost, std::int64_t demand = 0) {
    edges.push_back({from, to, capacity, demand, cost});
    return static_cast<int>(edges.size()) - 1;
  }
};

struct FlowResult {
  bool feasible = false;
  std::int64_t cost = 0;
  std::vector<std::int64_t> flow;  // per edge, same order as FlowNetwork::edges
};

// Successive shortest augmenting paths with node potentials. Throws invalid
// for malformed networks.
FlowResult min_cost_flow(const FlowNetwork& net);

struct Assignment {
  std::int64_t cost = 0;
  std::vector<int> amounts;  // per voter of the block
};

// Cheapest way to give exactly counts[j] voters of the block a shift of j
// positions. counts has one entry per amount 0..counts.size()-1.
std::optional<Assignment> cheapest_assignment(std::span<const PriceFunction> block,
                                              std::span<const int> counts);

}  // namespace sb
