#pragma once

#include <memory>

#include "netsearch/family.hpp"
#include "netsearch/postman.hpp"
#include "netsearch/profile.hpp"

namespace netsearch {

inline double rcpt_approx_factor(double r) { return 2.0 * (r / (r - 1.0) + r / 2.0); }
inline constexpr double kRcptOptimalBase = 2.414213562373095;  // 1 + sqrt(2)

struct RcptSample {
  Tour tour;
  std::vector<bool> reversed;             // coin per iteration
  std::vector<double> iteration_starts;   // time offset of each iteration within the tour
  std::uint64_t seed = 0;
};

// Postman doubling: iteration i walks a random Chinese postman tour of the
// disc of radius base^i, returning to the root each time.
class RcptDoubling {
 public:
  RcptDoubling(const MetricNetwork& net, double base, int i_min, int i_max);
  RcptDoubling(const NetworkFamily& family, double base, int i_min, int i_max);

  const MetricNetwork& subject() const { return *net_; }
  double base() const { return base_; }
  int i_min() const { return i_min_; }
  int i_max() const { return i_max_; }
  int iterations() const { return static_cast<int>(forward_.size()); }
  // full postman length of iteration i's disc
  double iteration_length(int index) const { return forward_[index].length(); }
  double iteration_radius(int index) const;
  const Tour& iteration_tour(int index, bool rev) const {
    return rev ? backward_[index] : forward_[index];
  }

  RcptSample sample(std::uint64_t seed) const;

 private:
  void build_();

  std::unique_ptr<MetricNetwork> net_;
  double base_;
  int i_min_, i_max_;
  std::vector<Tour> forward_, backward_;  // per-iteration tours in subject coordinates
};

struct PathwiseDoublingSample {
  Tour tour;
  std::vector<double> thresholds;
  std::vector<bool> reversed;
  std::vector<double> iteration_starts;
  std::uint64_t seed = 0;
};

// Pathwise level doubling: iteration j is a closed randomized DFS of the tree
// disc below d_{j+1} (the union of all levels up to j), returning to the root.
class PathwiseDoubling {
 public:
  PathwiseDoubling(const MetricNetwork& net, int j_min, int j_max);
  PathwiseDoubling(const NetworkFamily& family, int j_min, int j_max);

  const MetricNetwork& subject() const { return *net_; }
  int j_min() const { return j_min_; }
  int j_max() const { return j_max_; }

  PathwiseDoublingSample sample(std::uint64_t seed) const;

 private:
  void init_();
  // closed DFS of the tree disc of radius `limit`
  std::vector<std::tuple<int, double, double>> disc_traversal_(double limit, Coin coin) const;

  std::unique_ptr<MetricNetwork> net_;
  std::unique_ptr<ShortestPathTree> spt_;
  int j_min_, j_max_;
};

}  // namespace netsearch
