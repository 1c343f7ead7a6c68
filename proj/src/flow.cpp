#include "flow.hpp"

#include <limits>
#include <queue>

namespace mwec::detail {

namespace {
constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
}

MinCostFlow::MinCostFlow(int nodes) : graph_(nodes) {}

int MinCostFlow::add_edge(int from, int to, long long capacity, long long cost) {
  Arc fwd{to, static_cast<int>(graph_[to].size()), capacity, cost};
  Arc bwd{from, static_cast<int>(graph_[from].size()), 0, -cost};
  graph_[from].push_back(fwd);
  graph_[to].push_back(bwd);
  handles_.emplace_back(from, static_cast<int>(graph_[from].size()) - 1);
  original_cap_.push_back(capacity);
  return static_cast<int>(handles_.size()) - 1;
}

std::pair<long long, long long> MinCostFlow::run(int source, int sink) {
  const int n = static_cast<int>(graph_.size());
  std::vector<long long> potential(n, 0);  // valid initially: all costs >= 0
  long long flow = 0, cost = 0;

  while (true) {
    std::vector<long long> dist(n, kInf);
    std::vector<int> prev_node(n, -1), prev_arc(n, -1);
    using Item = std::pair<long long, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[source] = 0;
    heap.emplace(0, source);
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      if (d > dist[u]) continue;
      for (int i = 0; i < static_cast<int>(graph_[u].size()); ++i) {
        const Arc& a = graph_[u][i];
        if (a.cap <= 0) continue;
        long long nd = d + a.cost + potential[u] - potential[a.to];
        if (nd < dist[a.to]) {
          dist[a.to] = nd;
          prev_node[a.to] = u;
          prev_arc[a.to] = i;
          heap.emplace(nd, a.to);
        }
      }
    }
    if (dist[sink] >= kInf) break;
    for (int v = 0; v < n; ++v)
      if (dist[v] < kInf) potential[v] += dist[v];

    long long push = kInf;
    for (int v = sink; v != source; v = prev_node[v])
      push = std::min(push, graph_[prev_node[v]][prev_arc[v]].cap);
    for (int v = sink; v != source; v = prev_node[v]) {
      Arc& a = graph_[prev_node[v]][prev_arc[v]];
      a.cap -= push;
      graph_[a.to][a.rev].cap += push;
      cost += push * a.cost;
    }
    flow += push;
  }
  return {flow, cost};
}

long long MinCostFlow::flow_on(int edge_handle) const {
  auto [node, idx] = handles_[edge_handle];
  return original_cap_[edge_handle] - graph_[node][idx].cap;
}

}  // namespace mwec::detail
