#pragma once

#include <optional>
#include <vector>

#include "netsearch/network.hpp"
#include "netsearch/sptree.hpp"
#include "netsearch/rdfs.hpp"

namespace netsearch {

struct TourStep {
  int arc = -1;
  double from = 0.0;
  double to = 0.0;
  double t_start = 0.0;
  double length() const { return to >= from ? to - from : from - to; }
  double t_end() const { return t_start + length(); }
};

// A unit-speed trajectory from the root: contiguous directed arc traversals.
class Tour {
 public:
  Tour() = default;  // empty; assign before use
  Tour(const MetricNetwork* net, std::vector<std::tuple<int, double, double>> traversals);

  const MetricNetwork& net() const { return *net_; }
  const std::vector<TourStep>& steps() const { return steps_; }
  double length() const { return steps_.empty() ? 0.0 : steps_.back().t_end(); }

  PointRef start_point() const;
  PointRef end_point() const;

  // Continuity from the root and unit-speed accounting.
  void validate() const;

  std::optional<double> time_of(const PointRef& p) const;

  Tour reversed() const;
  static Tour concatenate(const MetricNetwork* net, const std::vector<const Tour*>& parts);

  nlohmann::json to_json() const;

 private:
  const MetricNetwork* net_ = nullptr;
  std::vector<TourStep> steps_;
  std::vector<std::vector<int>> steps_on_arc_;
  std::vector<double> vertex_time_;

  void index_();
};

// Closed depth-first traversal of a tree (down and back up every arc, leaves
// in input or reversed order), emitted in source coordinates. The equiprobable
// Heads/Tails mixture finds every point by expected time measure(tree).
Tour pathwise_rdfs(const ShortestPathTree& tree, Coin coin);

}  // namespace netsearch
