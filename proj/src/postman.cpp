#include "netsearch/postman.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace netsearch {

namespace {

struct PathResult {
  std::vector<double> dist;
  std::vector<int> pred_arc;
  std::vector<int> pred_vertex;
};

PathResult dijkstra_with_paths(const MetricNetwork& net, int source) {
  PathResult out;
  out.dist.assign(net.vertex_count(), kInf);
  out.pred_arc.assign(net.vertex_count(), -1);
  out.pred_vertex.assign(net.vertex_count(), -1);
  out.dist[source] = 0.0;
  using Entry = std::pair<double, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  queue.emplace(0.0, source);
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (d > out.dist[v]) continue;
    for (auto [a, side] : net.incident(v)) {
      int w = side == 0 ? net.arc(a).v : net.arc(a).u;
      double nd = d + net.arc(a).len;
      if (nd < out.dist[w]) {
        out.dist[w] = nd;
        out.pred_arc[w] = a;
        out.pred_vertex[w] = v;
        queue.emplace(nd, w);
      }
    }
  }
  return out;
}

}  // namespace

CppSolution chinese_postman(const MetricNetwork& net) {
  std::vector<int> odd;
  for (int v = 0; v < net.vertex_count(); ++v)
    if (net.degree(v) % 2 == 1) odd.push_back(v);
  const int k = static_cast<int>(odd.size());
  if (k > 20) throw SizeError("too many odd-degree vertices for exact matching (" +
                              std::to_string(k) + " > 20)");

  std::vector<PathResult> paths;
  paths.reserve(k);
  for (int i = 0; i < k; ++i) paths.push_back(dijkstra_with_paths(net, odd[i]));

  // Minimum-weight perfect matching over the odd vertices by bitmask DP.
  std::vector<CppSolution::MatchPair> matching;
  std::vector<int> duplicated;
  double matching_cost = 0.0;
  if (k > 0) {
    const int full = 1 << k;
    std::vector<double> dp(full, kInf);
    std::vector<int> choice(full, -1);
    dp[0] = 0.0;
    for (int mask = 1; mask < full; ++mask) {
      int i = 0;
      while (!(mask & (1 << i))) ++i;
      for (int j = i + 1; j < k; ++j) {
        if (!(mask & (1 << j))) continue;
        int rest = mask ^ (1 << i) ^ (1 << j);
        double cost = dp[rest] + paths[i].dist[odd[j]];
        if (cost < dp[mask]) {
          dp[mask] = cost;
          choice[mask] = j;
        }
      }
    }
    matching_cost = dp[full - 1];
    int mask = full - 1;
    while (mask) {
      int i = 0;
      while (!(mask & (1 << i))) ++i;
      int j = choice[mask];
      matching.push_back({odd[i], odd[j], paths[i].dist[odd[j]]});
      // collect the arcs along the shortest path, walking predecessors from j
      int cur = odd[j];
      while (cur != odd[i]) {
        duplicated.push_back(paths[i].pred_arc[cur]);
        cur = paths[i].pred_vertex[cur];
      }
      mask ^= (1 << i) | (1 << j);
    }
  }

  // Euler circuit of the augmented multigraph, from the root.
  struct Instance {
    int u, v;
    int arc;
  };
  std::vector<Instance> instances;
  for (int a = 0; a < net.arc_count(); ++a)
    instances.push_back({net.arc(a).u, net.arc(a).v, a});
  for (int a : duplicated) instances.push_back({net.arc(a).u, net.arc(a).v, a});

  std::vector<std::vector<int>> incident(net.vertex_count());
  for (int e = 0; e < static_cast<int>(instances.size()); ++e) {
    incident[instances[e].u].push_back(e);
    incident[instances[e].v].push_back(e);
  }
  std::vector<bool> used(instances.size(), false);
  std::vector<std::size_t> cursor(net.vertex_count(), 0);
  std::vector<std::pair<int, int>> stack{{net.root(), -1}};  // (vertex, arriving instance)
  std::vector<int> circuit;
  while (!stack.empty()) {
    auto [v, e_in] = stack.back();
    int next = -1;
    while (cursor[v] < incident[v].size()) {
      int e = incident[v][cursor[v]];
      if (used[e]) {
        ++cursor[v];
        continue;
      }
      used[e] = true;
      ++cursor[v];
      next = e;
      break;
    }
    if (next < 0) {
      stack.pop_back();
      if (e_in >= 0) circuit.push_back(e_in);
    } else {
      int w = instances[next].u == v ? instances[next].v : instances[next].u;
      stack.emplace_back(w, next);
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  if (circuit.size() != instances.size())
    throw DomainError("euler circuit did not cover every arc instance");

  std::vector<std::tuple<int, double, double>> traversals;
  int cur = net.root();
  for (int e : circuit) {
    const Instance& inst = instances[e];
    const Arc& arc = net.arc(inst.arc);
    if (cur == inst.u) {
      traversals.emplace_back(inst.arc, 0.0, arc.len);
      cur = inst.v;
    } else {
      traversals.emplace_back(inst.arc, arc.len, 0.0);
      cur = inst.u;
    }
  }

  CppSolution out{Tour(&net, std::move(traversals)), std::move(matching), std::move(duplicated),
                  net.total_measure() + matching_cost};
  return out;
}

Tour random_cpt(const MetricNetwork& net, Coin coin) {
  CppSolution cpp = chinese_postman(net);
  return coin == Coin::Heads ? cpp.tour : cpp.tour.reversed();
}

nlohmann::json CppSolution::to_json() const {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& m : matching)
    pairs.push_back({{"u", tour.net().vertex_id(m.u)},
                     {"v", tour.net().vertex_id(m.v)},
                     {"path_len", m.path_len}});
  nlohmann::json dups = nlohmann::json::array();
  for (int a : duplicated_arcs) dups.push_back(tour.net().arc(a).id);
  return {{"length", length}, {"matching", pairs}, {"duplicated_arcs", dups},
          {"tour", tour.to_json()}};
}

}  // namespace netsearch
