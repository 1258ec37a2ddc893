#include "netsearch/doubling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace netsearch {

DoublingStrategy::DoublingStrategy(const MetricNetwork& net, int j_min, int j_max)
    : net_(std::make_unique<MetricNetwork>(net)), j_min_(j_min), j_max_(j_max) {
  if (j_min_ >= j_max_) throw DomainError("doubling strategy requires j_min < j_max");
  if (std::exp2(j_max_) < net_->r_max() - kTol)
    throw DomainError("doubling strategy requires 2^j_max >= r_max");
  init_();
}

DoublingStrategy::DoublingStrategy(const NetworkFamily& family, int j_min, int j_max)
    : net_(std::make_unique<MetricNetwork>(family.ball(std::exp2(j_max + 1)))),
      j_min_(j_min),
      j_max_(j_max) {
  if (j_min_ >= j_max_) throw DomainError("doubling strategy requires j_min < j_max");
  init_();
}

void DoublingStrategy::init_() {
  spt_ = std::make_unique<ShortestPathTree>(*net_);
  order_fwd_ = dfs_arc_order(*spt_, Coin::Heads);
  order_rev_ = dfs_arc_order(*spt_, Coin::Tails);
  arc_d_start_.resize(spt_->tree().arc_count());
  for (int t = 0; t < spt_->tree().arc_count(); ++t)
    arc_d_start_[t] = spt_->tree().vertex_distance(spt_->tree().arc(t).u);
}

DoublingSample DoublingStrategy::sample(std::uint64_t seed) const {
  Rng rng(seed);
  std::vector<double> thresholds;
  for (int j = j_min_; j <= j_max_ + 1; ++j)
    thresholds.push_back(rng.uniform(std::exp2(j - 1), std::exp2(j)));
  std::vector<bool> reversed;
  for (int j = j_min_; j <= j_max_; ++j) reversed.push_back(rng.coin());

  const MetricNetwork& tree = spt_->tree();
  std::vector<ScheduleSegment> segs;
  double cum = 0.0;
  auto emit_band = [&](double lo, double hi, const std::vector<int>& order) {
    for (int t : order) {
      double a = arc_d_start_[t];
      double b = a + tree.arc(t).len;
      double plo = std::max(lo, a), phi = std::min(hi, b);
      if (phi <= plo + 1e-15) continue;
      const ArcRange& range = tree.provenance(t);
      cum += phi - plo;
      segs.push_back({range.arc, range.map(plo - a), range.map(phi - a), cum});
    }
  };

  emit_band(0.0, thresholds.front(), order_fwd_);
  for (std::size_t level = 0; level + 1 < thresholds.size(); ++level)
    emit_band(thresholds[level], thresholds[level + 1],
              reversed[level] ? order_rev_ : order_fwd_);

  return {ExpandingSchedule::from_segments(net_.get(), std::move(segs)), std::move(thresholds),
          std::move(reversed), seed};
}

nlohmann::json DoublingStrategy::manifest() const {
  RadiusProfile profile = RadiusProfile::of(*net_);
  return {{"strategy", "doubling"},
          {"j_min", j_min_},
          {"j_max", j_max_},
          {"truncation_threshold_max", std::exp2(j_min_)},
          {"truncation_bias_bound", profile.value(std::exp2(j_min_ + 1))},
          {"note", "sampled times are exact for candidates at distance >= 2^j_min"}};
}

int default_j_min(double min_candidate_distance) {
  if (!(min_candidate_distance > 0.0)) throw DomainError("candidate distance must be positive");
  int j = static_cast<int>(std::floor(std::log2(min_candidate_distance / 4.0)));
  while (std::exp2(j) > min_candidate_distance / 4.0) --j;
  return j;
}

int default_j_max(double radius_needed) {
  if (!(radius_needed > 0.0)) throw DomainError("radius must be positive");
  int j = static_cast<int>(std::ceil(std::log2(radius_needed)));
  while (std::exp2(j) < radius_needed) ++j;
  return j;
}

double doubling_cost_bound_terms(double below_km2, double lam_km1, double int_km1, double lam_k,
                                 double int_k, double lam_kp1, double int_kp1, double dx, int k) {
  double p2k = std::exp2(k), p2km1 = std::exp2(k - 1), p2kp1 = std::exp2(k + 1);
  if (dx < p2km1 - kTol || dx > p2k + kTol)
    throw DomainError("point distance is outside the annulus implied by k");
  double l1 = (2.0 - dx / p2k) * lam_km1 - (2.0 - dx / p2km1) * (int_km1 / p2km1);
  double l2 = (dx / p2k + 0.5) * lam_k - int_k / p2k;
  double l3 = ((dx - p2km1) / p2km1) * (lam_kp1 - int_kp1 / p2kp1);
  return below_km2 + l1 + l2 + l3;
}

double doubling_cost_bound(const RadiusProfile& profile, double dx) {
  if (!(dx > 0.0)) throw DomainError("point distance must be positive");
  int k = static_cast<int>(std::floor(std::log2(dx))) + 1;
  while (dx < std::exp2(k - 1)) --k;
  while (dx >= std::exp2(k)) ++k;
  double p2 = std::exp2(k), p1 = std::exp2(k - 1), p0 = std::exp2(k - 2), p3 = std::exp2(k + 1);
  return doubling_cost_bound_terms(
      profile.value(p0), profile.annulus_measure(p0, p1), profile.annulus_distance_integral(p0, p1),
      profile.annulus_measure(p1, p2), profile.annulus_distance_integral(p1, p2),
      profile.annulus_measure(p2, p3), profile.annulus_distance_integral(p2, p3), dx, k);
}

Figure3Mixture::Figure3Mixture(int n) : n_(n) {
  if (n < 2) throw DomainError("figure3 mixture needs n >= 2");
  net_ = std::make_unique<MetricNetwork>(make_figure3(n));
}

ExpandingSchedule Figure3Mixture::sample(std::uint64_t seed) const {
  Rng rng(seed);
  int trunk = net_->arc_index("trunk");
  std::vector<int> pendants;
  for (int a = 0; a < net_->arc_count(); ++a)
    if (a != trunk) pendants.push_back(a);
  std::shuffle(pendants.begin(), pendants.end(), rng);

  std::vector<ScheduleSegment> segs;
  double cum = static_cast<double>(n_);
  segs.push_back({trunk, 0.0, static_cast<double>(n_), cum});
  for (int a : pendants) {
    cum += 1.0;
    segs.push_back({a, 0.0, 1.0, cum});
  }
  return ExpandingSchedule::from_segments(net_.get(), std::move(segs));
}

double Figure3Mixture::expected_normalized(const PointRef& p) const {
  double d = net_->distance(p);
  if (d <= 0.0) return 0.0;
  bool on_trunk = !p.is_vertex() && p.arc == net_->arc_index("trunk");
  if (p.is_vertex()) on_trunk = d <= n_ + kTol;  // root or junction
  if (on_trunk || d <= n_) return 1.0;
  return (d + (n_ * n_ - 1) / 2.0) / d;
}

double Figure3Mixture::sup_expected_normalized() const {
  return 1.0 + (n_ * n_ - 1) / (2.0 * n_);
}

}  // namespace netsearch
