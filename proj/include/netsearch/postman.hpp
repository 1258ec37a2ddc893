#pragma once

#include "netsearch/tour.hpp"

namespace netsearch {

// Minimal closed tour from the root covering every arc: minimum-weight perfect
// matching on odd-degree vertices (exact bitmask DP, at most 20 odd vertices)
// plus an Euler circuit of the matching-augmented multigraph.
struct CppSolution {
  Tour tour;
  struct MatchPair {
    int u = -1, v = -1;
    double path_len = 0.0;
  };
  std::vector<MatchPair> matching;
  std::vector<int> duplicated_arcs;  // arc indices, with multiplicity
  double length = 0.0;

  nlohmann::json to_json() const;
};

CppSolution chinese_postman(const MetricNetwork& net);

// Equiprobable mixture of the postman tour and its reversal; finds every point
// by expected time at most length/2.
Tour random_cpt(const MetricNetwork& net, Coin coin);

}  // namespace netsearch
