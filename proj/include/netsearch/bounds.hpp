#pragma once

#include <optional>
#include <string>

#include "netsearch/family.hpp"
#include "netsearch/profile.hpp"
#include "netsearch/schedule.hpp"
#include "netsearch/subset.hpp"

namespace netsearch {

// Certified lower bound from the distance-weighted hider on a connected
// subset A: (d(A) + measure(A)/2) / dbar(A).
double hider_lower_bound(const Subnetwork& subset);

double degree_bound(const MetricNetwork& net);
double degree_bound(const NetworkFamily& family);

struct ConcavityCertificate {
  bool concave = false;
  double value = 0.0;  // exact randomized ratio when concave
  double alpha = 0.0;  // sigma / degree otherwise
};
ConcavityCertificate concavity_certificate(const RadiusProfile& profile, double root_degree);

// Lower bound from the measure below 2^j: (1 - dbar/2^j) * measure / 2^{j-1}.
// A relaxation of the hider bound on the same set, so never above it.
double level_lower_bound(const RadiusProfile& profile, int j);
double level_lower_bound_terms(double measure, double distance_integral, int j);

// Uniform-hider postman bound: postman_length(Q[r]) / (2r).
double pathwise_uniform_lower_bound(const MetricNetwork& net, double r);

// Exact expected search time of a uniformly random point of the subset under
// a segment-model schedule (used to replay hider certificates).
double expected_time_uniform(const ExpandingSchedule& schedule, const Subnetwork& subset);

struct BoundEntry {
  std::string name;
  double value = 0.0;
  nlohmann::json witness;
};

struct SandwichOptions {
  int level_budget = 40;
  int scan_points = 24;
  int golden_iters = 60;
  int refine_rounds = 2;
  double rcpt_base = 2.414213562373095;
};

enum class SearchMode { Expanding, Pathwise };

struct BoundReport {
  SearchMode mode = SearchMode::Expanding;
  std::vector<BoundEntry> lower;
  std::vector<BoundEntry> upper;
  double rho_lo = 0.0;
  double rho_hi = 0.0;
  bool consistent = false;
  nlohmann::json to_json() const;
};

// All hider-side candidate subsets the sandwich evaluates, with their bounds.
std::vector<std::pair<Subnetwork, BoundEntry>> hider_candidates(const MetricNetwork& net,
                                                                const ShortestPathTree& tree,
                                                                const SandwichOptions& opts);

BoundReport sandwich(const MetricNetwork& net, SearchMode mode, const SandwichOptions& opts = {});
BoundReport sandwich(const NetworkFamily& family, SearchMode mode, int det_budget = 20,
                     const SandwichOptions& opts = {});

}  // namespace netsearch
