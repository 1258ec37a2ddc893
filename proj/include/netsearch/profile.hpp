#pragma once

#include <vector>

#include "netsearch/network.hpp"

namespace netsearch {

struct ProfilePoint {
  double r = 0.0;
  double f = 0.0;
  double slope = 0.0;  // right slope: number of frontier points just beyond r
};

// Piecewise-linear radius profile f(r) = measure of the closed disc of radius
// r around the root. Strictly increasing up to r_max with integer slopes.
class RadiusProfile {
 public:
  static RadiusProfile of(const MetricNetwork& net);

  double value(double r) const;
  double inverse(double measure) const;
  double r_max() const { return pts_.back().r; }
  double total_measure() const { return pts_.back().f; }
  double slope_at_origin() const { return pts_.front().slope; }

  // sup over r > 0 of f(r)/r; attained at a breakpoint or as the r -> 0 limit.
  double sigma() const;
  double sigma_witness() const;  // radius attaining sigma (0 = the limit at the root)

  bool is_concave(double tol = kTol) const;

  double annulus_measure(double a, double b) const { return value(b) - value(a); }
  // Exact integral of r df(r) over (a, b]: total distance mass of the annulus.
  double annulus_distance_integral(double a, double b) const;
  double mean_distance(double a, double b) const;

  const std::vector<ProfilePoint>& breakpoints() const { return pts_; }

  std::string breakpoints_csv() const;
  nlohmann::json to_json() const;

 private:
  std::vector<ProfilePoint> pts_;  // ascending r, pts_.front().r == 0
};

}  // namespace netsearch
