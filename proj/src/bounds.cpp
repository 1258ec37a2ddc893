#include "netsearch/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "netsearch/pathwise.hpp"
#include "netsearch/postman.hpp"
#include "netsearch/waterfill.hpp"

namespace netsearch {

double hider_lower_bound(const Subnetwork& subset) {
  double dbar = subset.mean_distance();
  if (!(dbar > 0.0)) throw DomainError("hider bound needs a subset with positive mean distance");
  return (subset.min_distance() + subset.measure() / 2.0) / dbar;
}

double degree_bound(const MetricNetwork& net) { return net.root_degree(); }

double degree_bound(const NetworkFamily& family) { return family.ball(1.0).root_degree(); }

ConcavityCertificate concavity_certificate(const RadiusProfile& profile, double root_degree) {
  ConcavityCertificate out;
  out.concave = profile.is_concave();
  if (out.concave) {
    out.value = root_degree;
    out.alpha = 1.0;
  } else {
    out.alpha = profile.sigma() / root_degree;
  }
  return out;
}

double level_lower_bound_terms(double measure, double distance_integral, int j) {
  if (!(measure > 0.0)) throw DomainError("level bound needs a nonempty set below 2^j");
  return (measure - distance_integral / std::exp2(j)) / std::exp2(j - 1);
}

double level_lower_bound(const RadiusProfile& profile, int j) {
  double radius = std::exp2(j);
  return level_lower_bound_terms(profile.value(radius),
                                 profile.annulus_distance_integral(0.0, radius), j);
}

double pathwise_uniform_lower_bound(const MetricNetwork& net, double r) {
  if (!(r > 0.0)) throw DomainError("postman bound radius must be positive");
  MetricNetwork ball = net.ball(std::min(r, net.r_max()));
  return chinese_postman(ball).length / (2.0 * r);
}

double expected_time_uniform(const ExpandingSchedule& schedule, const Subnetwork& subset) {
  if (schedule.time_model() != ExpandingSchedule::TimeModel::Segments)
    throw DomainError("expected_time_uniform needs a segment-model schedule");
  double total = 0.0, covered = 0.0;
  const auto& segs = schedule.segments();
  for (std::size_t i = 0; i < segs.size(); ++i) {
    double start = schedule.cum_start(i);
    double lo = std::min(segs[i].from, segs[i].to), hi = std::max(segs[i].from, segs[i].to);
    for (const ArcRange& r : subset.ranges()) {
      if (r.arc != segs[i].arc) continue;
      double a = std::max(lo, r.from), b = std::min(hi, r.to);
      if (b <= a) continue;
      // T(x) = start + |x - seg.from| is linear over the overlap
      double ta = start + std::abs(a - segs[i].from);
      double tb = start + std::abs(b - segs[i].from);
      total += (ta + tb) / 2.0 * (b - a);
      covered += b - a;
    }
  }
  if (covered < subset.measure() - 1e-6)
    throw DomainError("schedule does not cover the subset");
  return total / subset.measure();
}

namespace {

template <typename F>
std::pair<double, double> golden_max(F&& f, double a, double b, int iters) {
  const double phi = 0.6180339887498949;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    }
  }
  return f1 > f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

}  // namespace

std::vector<std::pair<Subnetwork, BoundEntry>> hider_candidates(const MetricNetwork& net,
                                                                const ShortestPathTree& tree,
                                                                const SandwichOptions& opts) {
  std::vector<std::pair<Subnetwork, BoundEntry>> out;
  RadiusProfile profile = RadiusProfile::of(net);

  auto ball_bound = [&](double r) {
    double f = profile.value(r);
    double integral = profile.annulus_distance_integral(0.0, r);
    return integral > 0.0 ? f * f / (2.0 * integral) : 0.0;
  };
  auto add_ball = [&](double r) {
    if (!(r > 0.0) || r > net.r_max() + kTol) return;
    r = std::min(r, net.r_max());
    Subnetwork subset = ball_subset(net, r);
    double value = hider_lower_bound(subset);
    out.emplace_back(std::move(subset),
                     BoundEntry{"hider_ball", value, {{"type", "ball"}, {"r", r}}});
  };
  const auto& pts = profile.breakpoints();
  for (const auto& p : pts)
    if (p.r > 0.0) add_ball(p.r);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i + 1].r - pts[i].r < 1e-9) continue;
    auto [r, value] = golden_max(ball_bound, std::max(pts[i].r, 1e-12), pts[i + 1].r,
                                 opts.golden_iters);
    (void)value;
    add_ball(r);
  }

  // depth-limited subtrees at every internal primary tree vertex
  for (int w = 0; w < net.vertex_count(); ++w) {
    if (w == tree.tree().root()) continue;
    const auto& kids = tree.children(w);
    if (kids.empty()) continue;
    std::vector<double> depths = branch_depths(tree, w);
    double max_depth = *std::max_element(depths.begin(), depths.end());
    if (!(max_depth > 0.0)) continue;

    auto capped = [&](double t) {
      std::vector<double> caps(depths.size());
      for (std::size_t c = 0; c < caps.size(); ++c) caps[c] = std::min(t, depths[c]);
      return caps;
    };
    auto eval_depth = [&](double t) {
      return hider_lower_bound(subtree_subset(tree, w, capped(t)));
    };

    double best_t = max_depth, best_value = eval_depth(max_depth);
    for (int s = 1; s <= opts.scan_points; ++s) {
      double t = max_depth * s / opts.scan_points;
      double v = eval_depth(t);
      if (v > best_value) {
        best_value = v;
        best_t = t;
      }
    }
    double step = max_depth / opts.scan_points;
    auto [t_ref, v_ref] = golden_max(eval_depth, std::max(1e-12, best_t - step),
                                     std::min(max_depth, best_t + step), opts.golden_iters);
    std::vector<double> caps = capped(v_ref >= best_value ? t_ref : best_t);

    // per-branch refinement, holding the other caps fixed
    for (int round = 0; round < opts.refine_rounds; ++round) {
      for (std::size_t c = 0; c < caps.size(); ++c) {
        if (!(depths[c] > 0.0)) continue;
        auto eval_cap = [&](double t) {
          std::vector<double> trial = caps;
          trial[c] = t;
          return hider_lower_bound(subtree_subset(tree, w, trial));
        };
        auto [tc, vc] = golden_max(eval_cap, 1e-12, depths[c], opts.golden_iters);
        if (vc >= eval_cap(caps[c])) caps[c] = tc;
      }
    }
    Subnetwork subset = subtree_subset(tree, w, caps);
    double value = hider_lower_bound(subset);
    out.emplace_back(std::move(subset),
                     BoundEntry{"hider_subtree", value,
                                {{"type", "subtree"}, {"vertex", net.vertex_id(w)},
                                 {"caps", caps}}});
  }
  return out;
}

namespace {

void add_common_lower(const MetricNetwork& net, const RadiusProfile& profile,
                      const ShortestPathTree& tree, const SandwichOptions& opts,
                      BoundReport& report) {
  report.lower.push_back({"degree", degree_bound(net), {{"type", "degree"}}});

  int j_hi = static_cast<int>(std::ceil(std::log2(std::max(net.r_max(), 1e-9))));
  for (int j = j_hi; j > j_hi - opts.level_budget; --j) {
    double measure = profile.value(std::exp2(j));
    if (!(measure > 0.0)) break;
    report.lower.push_back(
        {"level", level_lower_bound(profile, j), {{"type", "level"}, {"j", j}}});
  }

  for (auto& [subset, entry] : hider_candidates(net, tree, opts)) report.lower.push_back(entry);
}

double finalize_lower(BoundReport& report) {
  double lo = 0.0;
  for (const BoundEntry& e : report.lower) lo = std::max(lo, e.value);
  report.rho_lo = lo;
  return lo;
}

}  // namespace

BoundReport sandwich(const MetricNetwork& net, SearchMode mode, const SandwichOptions& opts) {
  BoundReport report;
  report.mode = mode;
  RadiusProfile profile = RadiusProfile::of(net);
  ShortestPathTree tree(net);
  double sigma = profile.sigma();

  add_common_lower(net, profile, tree, opts, report);

  if (mode == SearchMode::Expanding) {
    report.upper.push_back(
        {"sigma", sigma, {{"type", "sigma"}, {"witness_r", profile.sigma_witness()}}});
    finalize_lower(report);
    report.rho_hi = sigma;
    if (report.rho_lo < sigma / 2.0 - kTol)
      throw VerifyError("sandwich lower bound fell below sigma/2");
  } else {
    // postman bounds are valid only for pathwise search
    for (const auto& p : profile.breakpoints())
      if (p.r > 0.0)
        report.lower.push_back({"postman_uniform", pathwise_uniform_lower_bound(net, p.r),
                                {{"type", "postman_uniform"}, {"r", p.r}}});
    finalize_lower(report);

    // certified upper bound for postman doubling with the optimal base:
    // points found in iteration j pay all earlier full tours plus half the
    // final one; tours below the first breakpoint cost exactly 2 deg r^i
    double r = opts.rcpt_base;
    double first_bp = net.r_max();
    for (const auto& p : profile.breakpoints())
      if (p.r > 1e-12) {
        first_bp = p.r;
        break;
      }
    double deg = net.root_degree();
    int j_lo = static_cast<int>(std::floor(std::log(first_bp) / std::log(r)));
    while (std::pow(r, j_lo) > first_bp + kTol) --j_lo;
    int j_hi = static_cast<int>(std::ceil(std::log(net.r_max()) / std::log(r)));
    while (std::pow(r, j_hi) < net.r_max()) ++j_hi;
    // geometric closed form for all iterations with radius <= r^{j_lo}
    double acc = 2.0 * deg * std::pow(r, j_lo) * r / (r - 1.0);
    double best = deg * rcpt_approx_factor(r);  // covers points below the first breakpoint
    for (int j = j_lo + 1; j <= j_hi; ++j) {
      double radius = std::min(std::pow(r, j), net.r_max());
      double lj = chinese_postman(net.ball(radius)).length;
      best = std::max(best, (acc + lj / 2.0) / std::pow(r, j - 1));
      acc += lj;
    }
    report.upper.push_back({"postman_doubling", best,
                            {{"type", "postman_doubling"}, {"base", r}}});
    report.rho_hi = best;
  }
  report.consistent = report.rho_lo <= report.rho_hi + kTol;
  return report;
}

BoundReport sandwich(const NetworkFamily& family, SearchMode mode, int det_budget,
                     const SandwichOptions& opts) {
  FamilyRatio ratio = det_ratio(family, det_budget);
  MetricNetwork ball = family.ball(ratio.stabilized_radius);
  BoundReport report = sandwich(ball, mode, opts);
  for (BoundEntry& e : report.upper)
    e.witness["family_probe_radius"] = ratio.stabilized_radius;
  return report;
}

nlohmann::json BoundReport::to_json() const {
  auto entries = [](const std::vector<BoundEntry>& list) {
    nlohmann::json out = nlohmann::json::array();
    for (const BoundEntry& e : list)
      out.push_back({{"name", e.name}, {"value", e.value}, {"witness", e.witness}});
    return out;
  };
  return {{"mode", mode == SearchMode::Expanding ? "expanding" : "pathwise"},
          {"lower", entries(lower)},
          {"upper", entries(upper)},
          {"rho_lo", rho_lo},
          {"rho_hi", rho_hi},
          {"consistent", consistent}};
}

}  // namespace netsearch
