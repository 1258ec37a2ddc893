#pragma once

#include <memory>

#include "netsearch/family.hpp"
#include "netsearch/schedule.hpp"

namespace netsearch {

// Closed forms for the Y-network: a unit stem from the root to a junction v
// with pendant arms of lengths L and M >= L. The randomized game value is
//   V = 1 + 2 L M' / (L(L+2) + M'(M'+2)),  M' = min(M, sqrt(L(L+2))),
// attained by a four-strategy mixture that equalizes expected times on both
// arms up to depth M'.
struct YParams {
  double L = 0.0, M = 0.0;
  double M_eff = 0.0;
  double V = 0.0;
};

YParams y_params(double L, double M);
double y_value(double L, double M);

class YMixture {
 public:
  YMixture(double L, double M);

  const YParams& params() const { return params_; }
  double p_A() const { return p_[0]; }
  double p_B() const { return p_[1]; }
  double p_C() const { return p_[2]; }
  double p_D() const { return p_[3]; }

  const MetricNetwork& net() const { return *net_; }

  // expected search time at depth a on the left arm / b on the right arm
  double expected_time_left(double a) const;
  double expected_time_right(double b) const;
  double expected_time(const PointRef& p) const;
  double expected_normalized(const PointRef& p) const;

  // per-component expected time columns (index 0..3 = A..D)
  double component_time_left(int component, double a) const;
  double component_time_right(int component, double b) const;

  // one pure strategy drawn from the mixture (strategy D also draws its
  // switch depth; strategy C is continuous and carries an exact evaluator)
  ExpandingSchedule sample(std::uint64_t seed) const;

  nlohmann::json to_json() const;

 private:
  YParams params_;
  double p_[4];
  std::unique_ptr<MetricNetwork> net_;
  int stem_, left_, right_;

  ExpandingSchedule component_schedule_(int component, double switch_depth) const;
};

YMixture y_mixture(double L, double M);

struct YVerifyReport {
  YParams params;
  bool ok = false;
  double max_equalization_error = 0.0;
  double max_beyond_violation = 0.0;  // positive if some point beyond M' meets or exceeds V(1+b)
  double certificate_error = 0.0;
  double probability_sum_error = 0.0;
  // diagnostic for the alternative reading that keeps M in the numerators
  double max_reading_sum_error = 0.0;
  std::string failure;
  nlohmann::json to_json() const;
};

// Grid check: E[T] = V (1 + depth) on both arms up to M', E[T] = 1 + L + b
// strictly below V(1+b) beyond, and the hider certificate at depths (L, M')
// reproduces V. Throws VerifyError when a check fails.
YVerifyReport y_verify(double L, double M, int grid_n);

}  // namespace netsearch
