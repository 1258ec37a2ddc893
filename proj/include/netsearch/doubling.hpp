#pragma once

#include <memory>

#include "netsearch/family.hpp"
#include "netsearch/profile.hpp"
#include "netsearch/rdfs.hpp"
#include "netsearch/schedule.hpp"

namespace netsearch {

struct DoublingSample {
  ExpandingSchedule schedule;
  std::vector<double> thresholds;  // d_j for j = j_min .. j_max+1
  std::vector<bool> reversed;      // per-level DFS direction coin
  std::uint64_t seed = 0;
};

// Randomized doubling strategy: thresholds d_j ~ U[2^{j-1}, 2^j] carve the
// shortest-path tree into levels R_j = {d_j <= d(x) < d_{j+1}}, searched in
// order by a randomized DFS with everything below acting as free connectors.
// Levels below j_min are replaced by one deterministic sweep of the tree disc
// below d_{j_min}; for points at distance >= 2^{j_min} the sampled search
// times match the untruncated strategy exactly, since earlier levels enter
// only through their total measure.
class DoublingStrategy {
 public:
  DoublingStrategy(const MetricNetwork& net, int j_min, int j_max);
  DoublingStrategy(const NetworkFamily& family, int j_min, int j_max);

  const MetricNetwork& subject() const { return *net_; }
  int j_min() const { return j_min_; }
  int j_max() const { return j_max_; }

  DoublingSample sample(std::uint64_t seed) const;

  nlohmann::json manifest() const;

 private:
  void init_();

  std::unique_ptr<MetricNetwork> net_;
  std::unique_ptr<ShortestPathTree> spt_;
  int j_min_, j_max_;
  std::vector<int> order_fwd_, order_rev_;  // global DFS arc orders
  std::vector<double> arc_d_start_;         // distance of the parent end per tree arc
};

// Sensible level bounds: 2^{j_min} <= min_candidate_distance / 4 and
// 2^{j_max} >= radius_needed.
int default_j_min(double min_candidate_distance);
int default_j_max(double radius_needed);

// Expected measure searched before and alongside the level containing a point
// at distance dx, from annulus measures and mean distances; the expected
// search time of that point under the doubling strategy is at most this value
// plus dx/2.
double doubling_cost_bound(const RadiusProfile& profile, double dx);
// Same, from raw terms: lower[j] = measure below 2^{j}, annuli (measure,
// distance integral) for k-1, k, k+1.
double doubling_cost_bound_terms(double below_km2, double lam_km1, double int_km1, double lam_k,
                                 double int_k, double lam_kp1, double int_kp1, double dx, int k);

// The tightness-family mixture: the long arc first, then the unit pendants in
// uniformly random order.
class Figure3Mixture {
 public:
  explicit Figure3Mixture(int n);

  const MetricNetwork& net() const { return *net_; }
  int n() const { return n_; }

  ExpandingSchedule sample(std::uint64_t seed) const;
  double expected_normalized(const PointRef& p) const;
  double sup_expected_normalized() const;  // 1 + (n^2 - 1)/(2n), at most 1 + n/2

 private:
  int n_;
  std::unique_ptr<MetricNetwork> net_;
};

}  // namespace netsearch
