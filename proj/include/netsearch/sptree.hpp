#pragma once

#include <memory>
#include <vector>

#include "netsearch/network.hpp"

namespace netsearch {

// Shortest-path tree of a network: every arc is split at its watershed point
// (or detached from the endpoint it does not serve) so that tree distance
// from the root equals source distance for every point, and total measure is
// preserved. Tree arcs are oriented parent -> child and carry provenance
// ranges into the source network.
class ShortestPathTree {
 public:
  explicit ShortestPathTree(const MetricNetwork& source);

  const MetricNetwork& tree() const { return *tree_; }
  const MetricNetwork& source() const { return *source_; }

  // Tree arcs leaving v (v is the parent end), ascending by arc index.
  const std::vector<int>& children(int tree_vertex) const { return children_.at(tree_vertex); }

  PointRef to_tree(const PointRef& source_point) const;
  PointRef to_source(const PointRef& tree_point) const;

 private:
  const MetricNetwork* source_;
  std::unique_ptr<MetricNetwork> tree_;
  std::vector<std::vector<int>> children_;
  std::vector<int> tree_vertex_of_source_;              // primary copy per source vertex
  std::vector<std::vector<int>> tree_arcs_of_source_;   // tree arcs covering each source arc
};

ShortestPathTree shortest_path_tree(const MetricNetwork& net);

}  // namespace netsearch
