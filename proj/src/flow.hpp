#pragma once

#include <cstdint>
#include <vector>

namespace mwec::detail {

// Successive-shortest-paths min-cost max-flow with Johnson potentials.
// Costs must be non-negative; everything is exact 64-bit integer arithmetic.
class MinCostFlow {
 public:
  explicit MinCostFlow(int nodes);

  // Returns an edge handle usable with flow_on() after solving.
  int add_edge(int from, int to, long long capacity, long long cost);

  // Pushes flow until t is unreachable; returns (total flow, total cost).
  std::pair<long long, long long> run(int source, int sink);

  long long flow_on(int edge_handle) const;

 private:
  struct Arc {
    int to;
    int rev;
    long long cap;
    long long cost;
  };
  std::vector<std::vector<Arc>> graph_;
  std::vector<std::pair<int, int>> handles_;  // (node, arc index) per edge
  std::vector<long long> original_cap_;
};

}  // namespace mwec::detail
