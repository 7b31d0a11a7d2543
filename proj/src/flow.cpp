#include "shiftbribery/flow.hpp"

#include <limits>
#include <numeric>
#include <queue>

namespace sb {
namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

struct Arc {
  int to;
  int rev;
  std::int64_t cap;
  std::int64_t cost;
};

}  // namespace

FlowResult min_cost_flow(const FlowNetwork& net) {
  const int n = net.num_nodes;
  if (net.source < 0 || net.source >= n || net.sink < 0 || net.sink >= n || net.source == net.sink)
    fail(ErrorKind::invalid, "bad source or sink");
  for (const auto& e : net.edges) {
    if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n)
      fail(ErrorKind::invalid, "edge endpoint out of range");
    if (e.capacity < 0 || e.cost < 0 || e.demand < 0 || e.demand > e.capacity)
      fail(ErrorKind::invalid, "edge needs 0 <= demand <= capacity and nonnegative cost");
    if (e.demand > 0) {
      if (e.to != net.sink || e.demand != e.capacity)
        fail(ErrorKind::invalid, "demands are only supported on saturated edges into the sink");
    }
  }

  std::vector<std::vector<Arc>> g(n);
  std::vector<std::pair<int, int>> where(net.edges.size());
  for (std::size_t i = 0; i < net.edges.size(); ++i) {
    const auto& e = net.edges[i];
    where[i] = {e.from, static_cast<int>(g[e.from].size())};
    g[e.from].push_back({e.to, static_cast<int>(g[e.to].size()), e.capacity, e.cost});
    g[e.to].push_back({e.from, static_cast<int>(g[e.from].size()) - 1, 0, -e.cost});
  }

  // Costs start nonnegative, so zero potentials are valid.
  std::vector<std::int64_t> potential(n, 0), dist(n);
  std::vector<int> prev_node(n), prev_arc(n);
  std::int64_t total_cost = 0;
  using Item = std::pair<std::int64_t, int>;
  for (;;) {
    std::fill(dist.begin(), dist.end(), kInf);
    dist[net.source] = 0;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.push({0, net.source});
    while (!pq.empty()) {
      auto [d, u] = pq.top();
      pq.pop();
      if (d > dist[u]) continue;
      for (int k = 0; k < static_cast<int>(g[u].size()); ++k) {
        const Arc& a = g[u][k];
        if (a.cap <= 0) continue;
        std::int64_t nd = d + a.cost + potential[u] - potential[a.to];
        if (nd < dist[a.to]) {
          dist[a.to] = nd;
          prev_node[a.to] = u;
          prev_arc[a.to] = k;
          pq.push({nd, a.to});
        }
      }
    }
    if (dist[net.sink] >= kInf) break;
    for (int v = 0; v < n; ++v)
      if (dist[v] < kInf) potential[v] += dist[v];
    std::int64_t push = kInf;
    for (int v = net.sink; v != net.source; v = prev_node[v])
      push = std::min(push, g[prev_node[v]][prev_arc[v]].cap);
    for (int v = net.sink; v != net.source; v = prev_node[v]) {
      Arc& a = g[prev_node[v]][prev_arc[v]];
      a.cap -= push;
      g[v][a.rev].cap += push;
      total_cost = checked_add(total_cost, checked_mul(push, a.cost));
    }
  }

  FlowResult r;
  r.flow.resize(net.edges.size());
  for (std::size_t i = 0; i < net.edges.size(); ++i)
    r.flow[i] = net.edges[i].capacity - g[where[i].first][where[i].second].cap;
  r.feasible = true;
  for (std::size_t i = 0; i < net.edges.size(); ++i)
    if (r.flow[i] < net.edges[i].demand) r.feasible = false;
  r.cost = total_cost;
  return r;
}

std::optional<Assignment> cheapest_assignment(std::span<const PriceFunction> block,
                                              std::span<const int> counts) {
  const int voters = static_cast<int>(block.size());
  const int amounts = static_cast<int>(counts.size());
  for (int q : counts)
    if (q < 0) fail(ErrorKind::invalid, "negative multiplicity");
  if (std::accumulate(counts.begin(), counts.end(), 0) != voters) return std::nullopt;

  FlowNetwork net;
  net.source = net.add_node();
  net.sink = net.add_node();
  std::vector<int> voter_node(voters), amount_node(amounts);
  for (int i = 0; i < voters; ++i) voter_node[i] = net.add_node();
  for (int j = 0; j < amounts; ++j) amount_node[j] = net.add_node();
  for (int i = 0; i < voters; ++i) net.add_edge(net.source, voter_node[i], 1, 0);
  std::vector<int> choice_edge(static_cast<std::size_t>(voters) * amounts);
  for (int i = 0; i < voters; ++i)
    for (int j = 0; j < amounts; ++j)
      choice_edge[static_cast<std::size_t>(i) * amounts + j] =
          net.add_edge(voter_node[i], amount_node[j], 1, block[i](j));
  for (int j = 0; j < amounts; ++j)
    if (counts[j] > 0) net.add_edge(amount_node[j], net.sink, counts[j], 0, counts[j]);

  FlowResult f = min_cost_flow(net);
  if (!f.feasible) return std::nullopt;
  Assignment a;
  a.cost = f.cost;
  a.amounts.assign(voters, 0);
  for (int i = 0; i < voters; ++i)
    for (int j = 0; j < amounts; ++j)
      if (f.flow[choice_edge[static_cast<std::size_t>(i) * amounts + j]] > 0) a.amounts[i] = j;
  return a;
}

}  // namespace sb
