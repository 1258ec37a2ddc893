#include "netsearch/profile.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace netsearch {

RadiusProfile RadiusProfile::of(const MetricNetwork& net) {
  // Each arc splits into up to two ascending sides [d_start, d_end] along
  // which distance from the root grows at unit rate.
  struct Side {
    double start, end;
  };
  std::vector<Side> sides;
  sides.reserve(2 * net.arc_count());
  for (int a = 0; a < net.arc_count(); ++a) {
    const Arc& arc = net.arc(a);
    double du = net.vertex_distance(arc.u), dv = net.vertex_distance(arc.v);
    double ws = net.watershed_offset(a);
    if (ws > 0.0) sides.push_back({du, du + ws});
    if (arc.len - ws > 0.0) sides.push_back({dv, dv + (arc.len - ws)});
  }

  std::vector<double> radii{0.0};
  for (const Side& s : sides) {
    radii.push_back(s.start);
    radii.push_back(s.end);
  }
  std::sort(radii.begin(), radii.end());
  std::vector<double> merged;
  for (double r : radii) {
    if (merged.empty() || r - merged.back() > 1e-12 * (1.0 + std::abs(r))) merged.push_back(r);
  }

  // Snap a side endpoint to the merged radius it collapsed into.
  auto index_of = [&merged](double r) {
    double tol = 1e-12 * (1.0 + std::abs(r));
    auto it = std::lower_bound(merged.begin(), merged.end(), r - tol);
    return static_cast<int>(it - merged.begin());
  };

  std::vector<double> slope_delta(merged.size() + 1, 0.0);
  for (const Side& s : sides) {
    int i = index_of(s.start), j = index_of(s.end);
    if (j > i) {
      slope_delta[i] += 1.0;
      slope_delta[j] -= 1.0;
    }
  }

  RadiusProfile profile;
  profile.pts_.reserve(merged.size());
  double f = 0.0, slope = 0.0;
  // Breakpoints sit at every vertex distance and watershed distance, even
  // where the slope happens not to change.
  for (std::size_t i = 0; i < merged.size(); ++i) {
    slope += slope_delta[i];
    profile.pts_.push_back({merged[i], f, slope});
    if (i + 1 < merged.size()) f += slope * (merged[i + 1] - merged[i]);
  }
  return profile;
}

double RadiusProfile::value(double r) const {
  if (r <= 0.0) return 0.0;
  if (r >= pts_.back().r) return pts_.back().f;
  auto it = std::upper_bound(pts_.begin(), pts_.end(), r,
                             [](double x, const ProfilePoint& p) { return x < p.r; });
  const ProfilePoint& base = *(it - 1);
  return base.f + base.slope * (r - base.r);
}

double RadiusProfile::inverse(double measure) const {
  if (measure <= 0.0) return 0.0;
  if (measure >= total_measure()) return r_max();
  auto it = std::upper_bound(pts_.begin(), pts_.end(), measure,
                             [](double m, const ProfilePoint& p) { return m < p.f; });
  const ProfilePoint& base = *(it - 1);
  return base.r + (measure - base.f) / base.slope;
}

double RadiusProfile::sigma() const {
  double best = slope_at_origin();
  for (const ProfilePoint& p : pts_)
    if (p.r > 0.0) best = std::max(best, p.f / p.r);
  return best;
}

double RadiusProfile::sigma_witness() const {
  double best = slope_at_origin(), witness = 0.0;
  for (const ProfilePoint& p : pts_) {
    if (p.r > 0.0 && p.f / p.r > best) {
      best = p.f / p.r;
      witness = p.r;
    }
  }
  return witness;
}

bool RadiusProfile::is_concave(double tol) const {
  for (std::size_t i = 1; i < pts_.size(); ++i)
    if (pts_[i].slope > pts_[i - 1].slope + tol) return false;
  return true;
}

double RadiusProfile::annulus_distance_integral(double a, double b) const {
  a = std::max(a, 0.0);
  b = std::min(b, r_max());
  if (b <= a) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < pts_.size(); ++i) {
    double lo = std::max(a, pts_[i].r), hi = std::min(b, pts_[i + 1].r);
    if (hi > lo) total += pts_[i].slope * (hi * hi - lo * lo) / 2.0;
  }
  return total;
}

double RadiusProfile::mean_distance(double a, double b) const {
  double mass = annulus_measure(a, b);
  if (mass <= 0.0) throw DomainError("annulus has zero measure");
  return annulus_distance_integral(a, b) / mass;
}

std::string RadiusProfile::breakpoints_csv() const {
  std::ostringstream out;
  out.precision(17);
  out << "r,f,slope\n";
  for (const ProfilePoint& p : pts_) out << p.r << "," << p.f << "," << p.slope << "\n";
  return out.str();
}

nlohmann::json RadiusProfile::to_json() const {
  nlohmann::json pts = nlohmann::json::array();
  for (const ProfilePoint& p : pts_) pts.push_back({{"r", p.r}, {"f", p.f}, {"slope", p.slope}});
  return {{"breakpoints", pts}, {"r_max", r_max()}, {"total_measure", total_measure()},
          {"sigma", sigma()}};
}

}  // namespace netsearch
