#pragma once

#include <vector>

#include "netsearch/network.hpp"
#include "netsearch/sptree.hpp"

namespace netsearch {

// A connected subset of a network, stored as closed offset ranges on arcs.
class Subnetwork {
 public:
  Subnetwork(const MetricNetwork* net, std::vector<ArcRange> ranges);

  const MetricNetwork& net() const { return *net_; }
  const std::vector<ArcRange>& ranges() const { return ranges_; }

  double measure() const { return measure_; }
  double min_distance() const;        // d(A)
  double distance_integral() const;   // integral of d over A
  double mean_distance() const;       // dbar(A)

  nlohmann::json to_json() const;

 private:
  const MetricNetwork* net_;
  std::vector<ArcRange> ranges_;  // normalized: from < to, disjoint per arc
  double measure_ = 0.0;

  void normalize_();
  void check_connected_() const;
};

struct SubsetStats {
  double min_distance = 0.0;
  double measure = 0.0;
  double mean_distance = 0.0;
};

SubsetStats subset_stats(const Subnetwork& subset);

Subnetwork ball_subset(const MetricNetwork& net, double r);
Subnetwork whole_subset(const MetricNetwork& net);

// Points hanging below a (primary) tree vertex, each child branch truncated at
// its own depth cap measured from that vertex. Ranges are source coordinates.
Subnetwork subtree_subset(const ShortestPathTree& tree, int tree_vertex,
                          const std::vector<double>& branch_caps);
Subnetwork subtree_subset(const ShortestPathTree& tree, int tree_vertex, double depth);

// Depth of the deepest point below each child branch of the vertex.
std::vector<double> branch_depths(const ShortestPathTree& tree, int tree_vertex);

}  // namespace netsearch
