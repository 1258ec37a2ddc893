#include "netsearch/ynet.hpp"

#include <cmath>

#include "netsearch/bounds.hpp"

namespace netsearch {

YParams y_params(double L, double M) {
  if (!(L > 0.0) || M < L) throw DomainError("y-network needs 0 < L <= M");
  YParams p;
  p.L = L;
  p.M = M;
  p.M_eff = std::min(M, std::sqrt(L * (L + 2.0)));
  p.V = 1.0 + 2.0 * L * p.M_eff / (L * (L + 2.0) + p.M_eff * (p.M_eff + 2.0));
  return p;
}

double y_value(double L, double M) { return y_params(L, M).V; }

YMixture::YMixture(double L, double M) : params_(y_params(L, M)) {
  double Me = params_.M_eff;
  double denom = L * (L + 2.0) + Me * (Me + 2.0);
  p_[0] = 2.0 * Me / denom;
  p_[1] = (L * L + 2.0 * L - Me * Me) / denom;
  p_[2] = 2.0 * L * L / denom;
  p_[3] = (2.0 * Me * Me - 2.0 * L * L) / denom;
  net_ = std::make_unique<MetricNetwork>(make_y(L, M));
  stem_ = net_->arc_index("stem");
  left_ = net_->arc_index("left");
  right_ = net_->arc_index("right");
}

YMixture y_mixture(double L, double M) { return YMixture(L, M); }

double YMixture::component_time_left(int component, double a) const {
  double L = params_.L, Me = params_.M_eff;
  switch (component) {
    case 0: return 1.0 + a;
    case 1: return 1.0 + Me + a;
    case 2: return 1.0 + a * (L + Me) / L;
    case 3: return 1.0 + Me / 2.0 + a;
  }
  throw DomainError("unknown mixture component");
}

double YMixture::component_time_right(int component, double b) const {
  double L = params_.L, Me = params_.M_eff;
  if (b > Me) return 1.0 + L + b;
  switch (component) {
    case 0: return 1.0 + L + b;
    case 1: return 1.0 + b;
    case 2: return 1.0 + b * (L + Me) / Me;
    case 3: return 1.0 + b * (L + Me) / Me;
  }
  throw DomainError("unknown mixture component");
}

double YMixture::expected_time_left(double a) const {
  double t = 0.0;
  for (int c = 0; c < 4; ++c) t += p_[c] * component_time_left(c, a);
  return t;
}

double YMixture::expected_time_right(double b) const {
  double t = 0.0;
  for (int c = 0; c < 4; ++c) t += p_[c] * component_time_right(c, b);
  return t;
}

double YMixture::expected_time(const PointRef& p) const {
  if (p.is_vertex()) {
    if (p.vertex == net_->root()) return 0.0;
    if (net_->vertex_id(p.vertex) == "v") return 1.0;
    if (net_->vertex_id(p.vertex) == "lleaf") return expected_time_left(params_.L);
    return expected_time_right(params_.M);
  }
  if (p.arc == stem_) return p.offset;  // every component searches the stem first
  if (p.arc == left_) return expected_time_left(p.offset);
  return expected_time_right(p.offset);
}

double YMixture::expected_normalized(const PointRef& p) const {
  double d = net_->distance(p);
  return d > 0.0 ? expected_time(p) / d : 0.0;
}

ExpandingSchedule YMixture::component_schedule_(int component, double switch_depth) const {
  double L = params_.L, M = params_.M, Me = params_.M_eff;
  std::vector<ScheduleSegment> segs;
  double cum = 0.0;
  auto push = [&](int arc, double from, double to) {
    if (std::abs(to - from) <= 1e-15) return;
    cum += std::abs(to - from);
    segs.push_back({arc, from, to, cum});
  };
  push(stem_, 0.0, 1.0);
  switch (component) {
    case 0:
      push(left_, 0.0, L);
      push(right_, 0.0, M);
      return ExpandingSchedule::from_segments(net_.get(), std::move(segs));
    case 1:
      push(right_, 0.0, Me);
      push(left_, 0.0, L);
      push(right_, Me, M);
      return ExpandingSchedule::from_segments(net_.get(), std::move(segs));
    case 3:
      push(right_, 0.0, switch_depth);
      push(left_, 0.0, L);
      push(right_, switch_depth, M);
      return ExpandingSchedule::from_segments(net_.get(), std::move(segs));
    default:
      break;
  }
  // Component C grows both arms simultaneously at speeds L : M'. The exact
  // searched family is continuous; the segment list is a serialization for
  // export, and times come from the closed-form evaluator.
  const int slices = 32;
  for (int s = 1; s <= slices; ++s) {
    push(left_, L * (s - 1) / slices, L * s / slices);
    push(right_, Me * (s - 1) / slices, Me * s / slices);
  }
  push(right_, Me, M);
  auto time_fn = [this](const PointRef& p) {
    if (p.is_vertex()) {
      if (p.vertex == net_->root()) return 0.0;
      if (net_->vertex_id(p.vertex) == "v") return 1.0;
      if (net_->vertex_id(p.vertex) == "lleaf") return component_time_left(2, params_.L);
      return component_time_right(2, params_.M);
    }
    if (p.arc == stem_) return p.offset;
    if (p.arc == left_) return component_time_left(2, p.offset);
    return component_time_right(2, p.offset);
  };
  return ExpandingSchedule::with_evaluator(net_.get(), time_fn, std::move(segs),
                                           "both arms grow at speeds L:M'");
}

ExpandingSchedule YMixture::sample(std::uint64_t seed) const {
  Rng rng(seed);
  double u = rng.uniform01();
  double switch_depth = rng.uniform(0.0, params_.M_eff);  // drawn either way, for determinism
  int component = 3;
  double acc = 0.0;
  for (int c = 0; c < 3; ++c) {
    acc += p_[c];
    if (u < acc) {
      component = c;
      break;
    }
  }
  return component_schedule_(component, switch_depth);
}

nlohmann::json YMixture::to_json() const {
  return {{"L", params_.L},
          {"M", params_.M},
          {"M_eff", params_.M_eff},
          {"V", params_.V},
          {"probabilities", {{"A", p_[0]}, {"B", p_[1]}, {"C", p_[2]}, {"D", p_[3]}}}};
}

YVerifyReport y_verify(double L, double M, int grid_n) {
  if (grid_n < 2) throw DomainError("verification grid needs at least 2 points");
  YMixture mix(L, M);
  const YParams& params = mix.params();
  YVerifyReport report;
  report.params = params;

  double eq_err = 0.0;
  for (int i = 1; i <= grid_n; ++i) {
    double a = params.L * i / grid_n;
    eq_err = std::max(eq_err, std::abs(mix.expected_time_left(a) - params.V * (1.0 + a)));
    double b = params.M_eff * i / grid_n;
    eq_err = std::max(eq_err, std::abs(mix.expected_time_right(b) - params.V * (1.0 + b)));
  }
  report.max_equalization_error = eq_err;

  double beyond = 0.0;
  if (params.M > params.M_eff + 1e-12) {
    for (int i = 1; i <= grid_n; ++i) {
      double b = params.M_eff + (params.M - params.M_eff) * i / grid_n;
      double t = mix.expected_time_right(b);
      beyond = std::max(beyond, std::abs(t - (1.0 + params.L + b)));
      beyond = std::max(beyond, t - params.V * (1.0 + b));  // must stay strictly below
    }
  }
  report.max_beyond_violation = beyond;

  ShortestPathTree tree(mix.net());
  double certificate =
      hider_lower_bound(subtree_subset(tree, mix.net().vertex_index("v"),
                                       {params.L, params.M_eff}));
  report.certificate_error = std::abs(certificate - params.V);

  report.probability_sum_error =
      std::abs(mix.p_A() + mix.p_B() + mix.p_C() + mix.p_D() - 1.0);

  // the reading that keeps M (not M') in the numerators only sums to one
  // when M' = M
  double denom = L * (L + 2.0) + params.M_eff * (params.M_eff + 2.0);
  double alt_sum = (2.0 * M + (L * L + 2.0 * L - M * M) + 2.0 * L * L +
                    (2.0 * M * M - 2.0 * L * L)) /
                   denom;
  report.max_reading_sum_error = std::abs(alt_sum - 1.0);

  if (report.max_equalization_error > kTol)
    report.failure = "equalization failed";
  else if (report.max_beyond_violation > kTol)
    report.failure = "beyond-M' branch violated";
  else if (report.certificate_error > 1e-12)
    report.failure = "hider certificate does not match V";
  else if (report.probability_sum_error > 1e-12)
    report.failure = "probabilities do not sum to 1";
  report.ok = report.failure.empty();
  if (!report.ok) throw VerifyError("y_verify: " + report.failure);
  return report;
}

nlohmann::json YVerifyReport::to_json() const {
  return {{"L", params.L},
          {"M", params.M},
          {"M_eff", params.M_eff},
          {"V", params.V},
          {"ok", ok},
          {"max_equalization_error", max_equalization_error},
          {"max_beyond_violation", max_beyond_violation},
          {"certificate_error", certificate_error},
          {"probability_sum_error", probability_sum_error},
          {"max_reading_sum_error", max_reading_sum_error},
          {"failure", failure}};
}

}  // namespace netsearch
