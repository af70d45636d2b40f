#include "fairdisk/flow.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace fairdisk::flow {

void BoundedNetwork::validate() const {
  if (node_count < 2) throw std::invalid_argument("network needs at least two nodes");
  auto in_range = [this](int v) { return v >= 0 && v < node_count; };
  if (!in_range(source) || !in_range(sink)) {
    throw std::invalid_argument("source or sink id out of range");
  }
  if (source == sink) throw std::invalid_argument("source and sink must differ");
  for (const Arc& a : arcs) {
    if (!in_range(a.from) || !in_range(a.to)) {
      throw std::invalid_argument("arc endpoint out of range");
    }
    if (a.from == a.to) throw std::invalid_argument("self-loops are not allowed");
    if (a.lower < 0 || a.lower > a.upper) {
      throw std::invalid_argument("arc bounds must satisfy 0 <= lower <= upper");
    }
  }
}

namespace {

// Dinic with insertion-ordered adjacency, so augmentation is deterministic.
class Dinic {
 public:
  explicit Dinic(int n) : graph_(n), level_(n), iter_(n) {}

  struct Handle {
    int node;
    int index;
  };

  Handle add_edge(int from, int to, std::int64_t cap) {
    Handle h{from, static_cast<int>(graph_[from].size())};
    graph_[from].push_back({to, cap, static_cast<int>(graph_[to].size())});
    graph_[to].push_back({from, 0, h.index});
    return h;
  }

  std::int64_t pushed(Handle h) const {
    const Edge& e = graph_[h.node][h.index];
    return graph_[e.to][e.rev].cap;
  }

  void disable(Handle h) {
    Edge& e = graph_[h.node][h.index];
    graph_[e.to][e.rev].cap = 0;
    e.cap = 0;
  }

  std::int64_t run(int s, int t) {
    std::int64_t total = 0;
    while (bfs(s, t)) {
      std::fill(iter_.begin(), iter_.end(), 0);
      while (std::int64_t f = dfs(s, t, std::numeric_limits<std::int64_t>::max())) {
        total += f;
      }
    }
    return total;
  }

 private:
  struct Edge {
    int to;
    std::int64_t cap;
    int rev;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const Edge& e : graph_[v]) {
        if (e.cap > 0 && level_[e.to] < 0) {
          level_[e.to] = level_[v] + 1;
          q.push(e.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  std::int64_t dfs(int v, int t, std::int64_t limit) {
    if (v == t) return limit;
    for (int& i = iter_[v]; i < static_cast<int>(graph_[v].size()); ++i) {
      Edge& e = graph_[v][i];
      if (e.cap <= 0 || level_[e.to] != level_[v] + 1) continue;
      std::int64_t f = dfs(e.to, t, std::min(limit, e.cap));
      if (f > 0) {
        e.cap -= f;
        graph_[e.to][e.rev].cap += f;
        return f;
      }
    }
    return 0;
  }

  std::vector<std::vector<Edge>> graph_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

std::int64_t net_outflow(const BoundedNetwork& net, const std::vector<std::int64_t>& flows,
                         int node) {
  std::int64_t out = 0;
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    if (net.arcs[i].from == node) out += flows[i];
    if (net.arcs[i].to == node) out -= flows[i];
  }
  return out;
}

}  // namespace

FlowResult max_flow(const BoundedNetwork& net) {
  net.validate();
  for (const Arc& a : net.arcs) {
    if (a.lower != 0) {
      throw std::invalid_argument("max_flow requires all lower bounds to be zero");
    }
  }
  Dinic dinic(net.node_count);
  std::vector<Dinic::Handle> handles;
  handles.reserve(net.arcs.size());
  for (const Arc& a : net.arcs) handles.push_back(dinic.add_edge(a.from, a.to, a.upper));

  FlowResult res;
  res.feasible = true;
  res.value = dinic.run(net.source, net.sink);
  res.arc_flow.reserve(net.arcs.size());
  for (const auto& h : handles) res.arc_flow.push_back(dinic.pushed(h));
  return res;
}

FlowResult max_flow_with_lower_bounds(const BoundedNetwork& net) {
  net.validate();

  const int aux_source = net.node_count;
  const int aux_sink = net.node_count + 1;
  Dinic dinic(net.node_count + 2);

  std::int64_t lower_total = 0;
  std::int64_t upper_total = 0;
  for (const Arc& a : net.arcs) {
    lower_total += a.lower;
    upper_total += a.upper;
  }

  std::vector<Dinic::Handle> handles;
  handles.reserve(net.arcs.size());
  std::vector<Dinic::Handle> aux;
  for (const Arc& a : net.arcs) {
    handles.push_back(dinic.add_edge(a.from, a.to, a.upper - a.lower));
    if (a.lower > 0) {
      aux.push_back(dinic.add_edge(aux_source, a.to, a.lower));
      aux.push_back(dinic.add_edge(a.from, aux_sink, a.lower));
    }
  }
  // Close the circulation in both directions: s and t are exempt from
  // conservation, so lower bounds may force net flow either way between
  // them. The sum of all upper bounds stands in for infinite capacity.
  Dinic::Handle closure_ts = dinic.add_edge(net.sink, net.source, upper_total);
  Dinic::Handle closure_st = dinic.add_edge(net.source, net.sink, upper_total);

  FlowResult res;
  res.arc_flow.assign(net.arcs.size(), 0);

  if (dinic.run(aux_source, aux_sink) != lower_total) {
    return res;  // some lower bound cannot be met
  }

  // Phase 2: drop the auxiliaries and push the remaining s-t flow.
  dinic.disable(closure_ts);
  dinic.disable(closure_st);
  for (const auto& h : aux) dinic.disable(h);
  dinic.run(net.source, net.sink);

  res.feasible = true;
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    res.arc_flow[i] = net.arcs[i].lower + dinic.pushed(handles[i]);
  }
  res.value = net_outflow(net, res.arc_flow, net.source);
  return res;
}

std::vector<std::string> audit_flow(const BoundedNetwork& net, const FlowResult& res) {
  std::vector<std::string> problems;
  if (!res.feasible) {
    problems.push_back("result is marked infeasible");
    return problems;
  }
  if (res.arc_flow.size() != net.arcs.size()) {
    problems.push_back("arc flow vector length does not match the network");
    return problems;
  }
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const Arc& a = net.arcs[i];
    const std::int64_t f = res.arc_flow[i];
    if (f < a.lower || f > a.upper) {
      problems.push_back("arc " + std::to_string(i) + " flow " + std::to_string(f) +
                         " outside [" + std::to_string(a.lower) + ", " +
                         std::to_string(a.upper) + "]");
    }
  }
  for (int v = 0; v < net.node_count; ++v) {
    if (v == net.source || v == net.sink) continue;
    const std::int64_t imbalance = net_outflow(net, res.arc_flow, v);
    if (imbalance != 0) {
      problems.push_back("node " + std::to_string(v) + " violates conservation by " +
                         std::to_string(imbalance));
    }
  }
  if (net_outflow(net, res.arc_flow, net.source) != res.value) {
    problems.push_back("reported value does not match source outflow");
  }
  return problems;
}

}  // namespace fairdisk::flow
