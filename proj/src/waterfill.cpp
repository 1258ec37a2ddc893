#include "netsearch/waterfill.hpp"

#include <cmath>

namespace netsearch {

ExpandingSchedule waterfill(const MetricNetwork& net) {
  RadiusProfile profile = RadiusProfile::of(net);
  const auto& pts = profile.breakpoints();

  std::vector<ScheduleSegment> segs;
  double cum = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    double lo = pts[i].r, hi = pts[i + 1].r;
    for (int a = 0; a < net.arc_count(); ++a) {
      const Arc& arc = net.arc(a);
      double du = net.vertex_distance(arc.u), dv = net.vertex_distance(arc.v);
      double ws = net.watershed_offset(a);
      // u side grows over radii [du, du + ws]
      double ulo = std::max(lo, du), uhi = std::min(hi, du + ws);
      if (uhi > ulo + 1e-15) {
        cum += uhi - ulo;
        segs.push_back({a, ulo - du, uhi - du, cum});
      }
      // v side grows over radii [dv, dv + (len - ws)], offsets shrinking
      double vlo = std::max(lo, dv), vhi = std::min(hi, dv + (arc.len - ws));
      if (vhi > vlo + 1e-15) {
        cum += vhi - vlo;
        segs.push_back({a, arc.len - (vlo - dv), arc.len - (vhi - dv), cum});
      }
    }
  }
  return ExpandingSchedule::disc(&net, std::move(profile), std::move(segs));
}

double det_ratio(const MetricNetwork& net) { return RadiusProfile::of(net).sigma(); }

FamilyRatio det_ratio(const NetworkFamily& family, int budget_doublings) {
  double best = 0.0;
  for (int t = 0; t <= budget_doublings; ++t) {
    double radius = std::exp2(t);
    RadiusProfile profile = RadiusProfile::of(family.ball(radius));
    double prev_radius = radius / 2.0;
    double fresh = profile.slope_at_origin();
    for (const auto& p : profile.breakpoints())
      if (p.r > 0.0) {
        double ratio = p.f / p.r;
        if (t == 0 || p.r > prev_radius + 1e-12) fresh = std::max(fresh, ratio);
      }
    double sigma = std::max(best, fresh);
    // Stable once the newly revealed shell neither raises the sup nor ends
    // with a slope that could raise it later.
    double end_slope = profile.breakpoints()[profile.breakpoints().size() - 2].slope;
    if (t > 0 && fresh <= best + 1e-12 && end_slope <= sigma + 1e-12)
      return {sigma, radius};
    best = sigma;
  }
  throw BudgetError("deterministic ratio did not stabilize within the radius budget");
}

}  // namespace netsearch
