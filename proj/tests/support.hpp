#pragma once

// Shared fixtures and independent oracles for the test suites.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "netsearch/common.hpp"
#include "netsearch/family.hpp"
#include "netsearch/network.hpp"
#include "netsearch/schedule.hpp"

namespace testsupport {

using namespace netsearch;

// Independent distance oracle: subdivide every arc into `parts` unit pieces
// and run Bellman-Ford over the resulting vertex graph. Returns the distance
// of (arc, offset) snapped to the nearest subdivision node plus the remainder
// bound; used only at subdivision nodes where it is exact.
class SubdivisionOracle {
 public:
  SubdivisionOracle(const MetricNetwork& net, int parts) : net_(&net), parts_(parts) {
    int n = net.vertex_count();
    node_of_.assign(net.arc_count(), {});
    for (int a = 0; a < net.arc_count(); ++a) {
      node_of_[a].resize(parts_ + 1);
      node_of_[a][0] = net.arc(a).u;
      node_of_[a][parts_] = net.arc(a).v;
      for (int i = 1; i < parts_; ++i) node_of_[a][i] = n++;
    }
    std::vector<std::tuple<int, int, double>> edges;
    for (int a = 0; a < net.arc_count(); ++a) {
      double step = net.arc(a).len / parts_;
      for (int i = 0; i < parts_; ++i)
        edges.emplace_back(node_of_[a][i], node_of_[a][i + 1], step);
    }
    dist_.assign(n, kInf);
    dist_[net.root()] = 0.0;
    for (int round = 0; round < n; ++round) {
      bool changed = false;
      for (auto [x, y, w] : edges) {
        if (dist_[x] + w < dist_[y] - 1e-15) {
          dist_[y] = dist_[x] + w;
          changed = true;
        }
        if (dist_[y] + w < dist_[x] - 1e-15) {
          dist_[x] = dist_[y] + w;
          changed = true;
        }
      }
      if (!changed) break;
    }
  }

  // exact at subdivision fractions i/parts along an arc
  double at(int arc, int i) const { return dist_[node_of_[arc][i]]; }
  int parts() const { return parts_; }

 private:
  const MetricNetwork* net_;
  int parts_;
  std::vector<std::vector<int>> node_of_;
  std::vector<double> dist_;
};

inline MetricNetwork random_tree(std::uint64_t seed, int n_vertices) {
  Rng rng(seed);
  std::vector<std::string> vids;
  std::vector<MetricNetwork::ArcSpec> specs;
  for (int i = 0; i < n_vertices; ++i) vids.push_back("v" + std::to_string(i));
  for (int i = 1; i < n_vertices; ++i) {
    int parent = static_cast<int>(rng.below(i));
    double len = rng.uniform(0.3, 2.5);
    specs.push_back({"e" + std::to_string(i), "v" + std::to_string(parent), "v" + std::to_string(i), len});
  }
  return MetricNetwork(std::move(vids), std::move(specs), "v0");
}

// Random connected multigraph: a random tree plus extra arcs (parallels and
// self-loops allowed).
inline MetricNetwork random_network(std::uint64_t seed, int n_vertices, int extra_arcs) {
  Rng rng(seed);
  std::vector<std::string> vids;
  std::vector<MetricNetwork::ArcSpec> specs;
  for (int i = 0; i < n_vertices; ++i) vids.push_back("v" + std::to_string(i));
  for (int i = 1; i < n_vertices; ++i) {
    int parent = static_cast<int>(rng.below(i));
    specs.push_back({"e" + std::to_string(i), "v" + std::to_string(parent), "v" + std::to_string(i),
                     rng.uniform(0.3, 2.0)});
  }
  for (int k = 0; k < extra_arcs; ++k) {
    int a = static_cast<int>(rng.below(n_vertices));
    int b = static_cast<int>(rng.below(n_vertices));
    specs.push_back({"x" + std::to_string(k), "v" + std::to_string(a), "v" + std::to_string(b),
                     rng.uniform(0.3, 2.0)});
  }
  return MetricNetwork(std::move(vids), std::move(specs), "v0");
}

inline PointRef random_point(const MetricNetwork& net, Rng& rng) {
  int a = static_cast<int>(rng.below(net.arc_count()));
  double off = rng.uniform(0.0, net.arc(a).len);
  return net.point(a, off);
}

// The "figure-4 style" concave-profile network: three unit arcs at the root
// to A, B, C plus a unit arc A-B (slopes 3 then 2).
inline MetricNetwork concave_example() {
  return MetricNetwork::parse_text(
      "vertex O\nvertex A\nvertex B\nvertex C\n"
      "arc a O A 1\narc b O B 1\narc c O C 1\narc d A B 1\nroot O\n");
}

// 25-network corpus: random trees, cycles/thetas, Y's, figure3 family, plus
// a couple of concave profiles.
inline std::vector<std::pair<std::string, MetricNetwork>> corpus25() {
  std::vector<std::pair<std::string, MetricNetwork>> nets;
  for (int i = 0; i < 8; ++i)
    nets.emplace_back("tree" + std::to_string(i), random_tree(1000 + i, 5 + (i % 5) * 2));
  for (int i = 0; i < 3; ++i) {
    // simple cycle with 3 + i arcs
    int k = 3 + i;
    std::vector<std::string> vids;
    std::vector<MetricNetwork::ArcSpec> specs;
    Rng rng(2000 + i);
    for (int j = 0; j < k; ++j) vids.push_back("c" + std::to_string(j));
    for (int j = 0; j < k; ++j)
      specs.push_back({"e" + std::to_string(j), "c" + std::to_string(j),
                       "c" + std::to_string((j + 1) % k), rng.uniform(0.5, 2.0)});
    nets.emplace_back("cycle" + std::to_string(k),
                      MetricNetwork(std::move(vids), std::move(specs), "c0"));
  }
  for (int i = 0; i < 2; ++i) {
    // theta graph: two vertices joined by three parallel arcs
    std::vector<MetricNetwork::ArcSpec> specs{{"p0", "s", "t", 1.0 + i},
                                              {"p1", "s", "t", 1.5 + i},
                                              {"p2", "s", "t", 2.0 + i}};
    nets.emplace_back("theta" + std::to_string(i),
                      MetricNetwork({"s", "t"}, std::move(specs), "s"));
  }
  const double ys[5][2] = {{1, 1}, {1, 2}, {2, 2}, {1, 5}, {3, 4}};
  for (auto& y : ys)
    nets.emplace_back("y(" + std::to_string(y[0]) + "," + std::to_string(y[1]) + ")",
                      make_y(y[0], y[1]));
  for (int n : {2, 4, 8, 12, 16}) nets.emplace_back("figure3(" + std::to_string(n) + ")",
                                                    make_figure3(n));
  nets.emplace_back("concave4", concave_example());
  nets.emplace_back("star3", make_star({1.0, 1.0, 1.0}));
  return nets;
}

// Random valid expanding schedule: repeatedly grows a random frontier point
// by a random amount until the whole network is searched.
inline ExpandingSchedule random_schedule(const MetricNetwork& net, Rng& rng) {
  struct Growth {
    int arc;
    double at;
    int dir;  // +1 toward larger offsets
    double room;
  };
  std::vector<std::vector<std::pair<double, double>>> covered(net.arc_count());
  std::vector<bool> reached(net.vertex_count(), false);
  reached[net.root()] = true;
  std::vector<ScheduleSegment> segs;
  double cum = 0.0, remaining = net.total_measure();
  int guard = 0;

  while (remaining > 1e-9 && ++guard < 20000) {
    std::vector<Growth> options;
    for (int a = 0; a < net.arc_count(); ++a) {
      const Arc& arc = net.arc(a);
      auto& ivs = covered[a];
      double first_lo = ivs.empty() ? arc.len : ivs.front().first;
      double last_hi = ivs.empty() ? 0.0 : ivs.back().second;
      if (reached[arc.u] && first_lo > 1e-9) options.push_back({a, 0.0, +1, first_lo});
      if (reached[arc.v] && last_hi < arc.len - 1e-9)
        options.push_back({a, arc.len, -1, arc.len - last_hi});
      for (std::size_t i = 0; i < ivs.size(); ++i) {
        double gap_above = (i + 1 < ivs.size() ? ivs[i + 1].first : arc.len) - ivs[i].second;
        if (gap_above > 1e-9) options.push_back({a, ivs[i].second, +1, gap_above});
        double gap_below = ivs[i].first - (i > 0 ? ivs[i - 1].second : 0.0);
        if (gap_below > 1e-9) options.push_back({a, ivs[i].first, -1, gap_below});
      }
    }
    if (options.empty()) throw std::logic_error("random schedule generator stuck");
    const Growth& g = options[rng.below(options.size())];
    double take = guard > 500 ? g.room : g.room * rng.uniform(0.3, 1.0);
    if (g.room - take < 0.05) take = g.room;
    double from = g.at, to = g.at + g.dir * take;
    cum += take;
    remaining -= take;
    segs.push_back({g.arc, from, to, cum});
    double lo = std::min(from, to), hi = std::max(from, to);
    auto& ivs = covered[g.arc];
    ivs.emplace_back(lo, hi);
    std::sort(ivs.begin(), ivs.end());
    std::vector<std::pair<double, double>> merged;
    for (auto& iv : ivs) {
      if (!merged.empty() && iv.first <= merged.back().second + 1e-12)
        merged.back().second = std::max(merged.back().second, iv.second);
      else
        merged.push_back(iv);
    }
    ivs = std::move(merged);
    if (lo <= 1e-12) reached[net.arc(g.arc).u] = true;
    if (hi >= net.arc(g.arc).len - 1e-12) reached[net.arc(g.arc).v] = true;
  }
  return ExpandingSchedule::from_segments(&net, std::move(segs));
}

}  // namespace testsupport
