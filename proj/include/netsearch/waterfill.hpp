#pragma once

#include "netsearch/family.hpp"
#include "netsearch/profile.hpp"
#include "netsearch/schedule.hpp"

namespace netsearch {

// Optimal deterministic expanding search: the searched set at time t is the
// disc of measure t. The stored segments serialize frontier growth between
// consecutive profile breakpoints in arc order; times use disc semantics.
ExpandingSchedule waterfill(const MetricNetwork& net);

// Optimal deterministic competitive ratio sigma = sup f(r)/r.
double det_ratio(const MetricNetwork& net);

struct FamilyRatio {
  double sigma = 0.0;
  double stabilized_radius = 0.0;  // probe radius at which the sup was certified stable
};
// Probes Q[2^t] with doubling radii until the running sup is stable under the
// documented rule; throws BudgetError if the budget is exhausted first.
FamilyRatio det_ratio(const NetworkFamily& family, int budget_doublings = 20);

}  // namespace netsearch
