#include "netsearch/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace netsearch {

ExpandingSchedule ExpandingSchedule::from_segments(const MetricNetwork* net,
                                                   std::vector<ScheduleSegment> segments) {
  ExpandingSchedule s;
  s.net_ = net;
  s.segments_ = std::move(segments);
  s.model_ = TimeModel::Segments;
  s.index_();
  return s;
}

ExpandingSchedule ExpandingSchedule::disc(const MetricNetwork* net, RadiusProfile profile,
                                          std::vector<ScheduleSegment> serialized) {
  ExpandingSchedule s;
  s.net_ = net;
  s.segments_ = std::move(serialized);
  s.model_ = TimeModel::Disc;
  s.profile_ = std::move(profile);
  s.index_();
  return s;
}

ExpandingSchedule ExpandingSchedule::with_evaluator(const MetricNetwork* net,
                                                    std::function<double(const PointRef&)> time_fn,
                                                    std::vector<ScheduleSegment> serialized,
                                                    std::string note) {
  ExpandingSchedule s;
  s.net_ = net;
  s.segments_ = std::move(serialized);
  s.model_ = TimeModel::Evaluator;
  s.time_fn_ = std::move(time_fn);
  s.note_ = std::move(note);
  s.index_();
  return s;
}

void ExpandingSchedule::index_() {
  segs_on_arc_.assign(net_->arc_count(), {});
  vertex_time_.assign(net_->vertex_count(), kInf);
  vertex_time_[net_->root()] = 0.0;
  for (int i = 0; i < static_cast<int>(segments_.size()); ++i) {
    const ScheduleSegment& seg = segments_[i];
    segs_on_arc_.at(seg.arc).push_back(i);
    const Arc& arc = net_->arc(seg.arc);
    double start = cum_start(i);
    auto touch = [&](double offset, double at) {
      if (offset <= 1e-12)
        vertex_time_[arc.u] = std::min(vertex_time_[arc.u], at);
      else if (offset >= arc.len - 1e-12)
        vertex_time_[arc.v] = std::min(vertex_time_[arc.v], at);
    };
    touch(seg.from, start);
    touch(seg.to, start + seg.length());
  }
}

void ExpandingSchedule::validate() const {
  std::vector<std::vector<std::pair<double, double>>> covered(net_->arc_count());
  std::vector<bool> reached(net_->vertex_count(), false);
  reached[net_->root()] = true;

  auto point_reached = [&](int a, double off) {
    const Arc& arc = net_->arc(a);
    if (off <= 1e-9 && reached[arc.u]) return true;
    if (off >= arc.len - 1e-9 && reached[arc.v]) return true;
    for (auto& [lo, hi] : covered[a])
      if (off >= lo - 1e-9 && off <= hi + 1e-9) return true;
    return false;
  };

  double cum = 0.0;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const ScheduleSegment& seg = segments_[i];
    if (seg.arc < 0 || seg.arc >= net_->arc_count())
      throw DomainError("schedule segment references an unknown arc");
    const Arc& arc = net_->arc(seg.arc);
    if (seg.from < -1e-9 || seg.from > arc.len + 1e-9 || seg.to < -1e-9 ||
        seg.to > arc.len + 1e-9)
      throw DomainError("schedule segment extends outside its arc");
    if (seg.length() <= 0)
      throw DomainError("schedule segment has nonpositive length");
    if (!point_reached(seg.arc, seg.from))
      throw DomainError("schedule segment " + std::to_string(i) +
                        " does not start at a searched point");
    double lo = std::min(seg.from, seg.to), hi = std::max(seg.from, seg.to);
    for (auto& [clo, chi] : covered[seg.arc])
      if (lo < chi - 1e-9 && hi > clo + 1e-9)
        throw DomainError("schedule segments overlap on arc " + arc.id);
    covered[seg.arc].emplace_back(lo, hi);
    if (lo <= 1e-12) reached[arc.u] = true;
    if (hi >= arc.len - 1e-12) reached[arc.v] = true;
    cum += seg.length();
    if (std::abs(seg.cum_end - cum) > 1e-6 * (1.0 + cum))
      throw DomainError("schedule cumulative measure mismatch at segment " + std::to_string(i));
  }
}

std::optional<double> ExpandingSchedule::time_of(const PointRef& p) const {
  if (p.is_vertex() && p.vertex == net_->root()) return 0.0;
  if (model_ == TimeModel::Disc) {
    double d = net_->distance(p);
    if (d > profile_->r_max() + kTol) return std::nullopt;
    return profile_->value(d);
  }
  if (model_ == TimeModel::Evaluator) return time_fn_(p);

  if (p.is_vertex()) {
    double t = vertex_time_[p.vertex];
    if (t == kInf) return std::nullopt;
    return t;
  }
  double best = kInf;
  for (int i : segs_on_arc_[p.arc]) {
    const ScheduleSegment& seg = segments_[i];
    double lo = std::min(seg.from, seg.to), hi = std::max(seg.from, seg.to);
    if (p.offset < lo - 1e-12 || p.offset > hi + 1e-12) continue;
    best = std::min(best, cum_start(i) + std::abs(p.offset - seg.from));
  }
  // interior points may coincide with a vertex another segment touched
  if (best == kInf) return std::nullopt;
  return best;
}

ExpandingSchedule::SupRatio ExpandingSchedule::sup_normalized_ratio() const {
  SupRatio result;
  if (model_ == TimeModel::Evaluator)
    throw DomainError("sup ratio is not defined for evaluator-backed schedules");

  if (model_ == TimeModel::Disc) {
    result.value = profile_->sigma();
    double r = profile_->sigma_witness();
    if (r > 0.0) {
      // locate some point at distance exactly r
      for (int a = 0; a < net_->arc_count(); ++a) {
        const Arc& arc = net_->arc(a);
        double du = net_->vertex_distance(arc.u);
        double ws = net_->watershed_offset(a);
        if (du <= r && r <= du + ws) {
          result.witness = net_->point(a, r - du);
          break;
        }
        double dv = net_->vertex_distance(arc.v);
        if (dv <= r && r <= dv + (arc.len - ws)) {
          result.witness = net_->point(a, arc.len - (r - dv));
          break;
        }
      }
      result.note = "disc frontier at radius " + std::to_string(r);
    } else {
      result.note = "limit toward the root";
    }
    return result;
  }

  auto consider = [&](double value, const PointRef& p, const std::string& note) {
    if (value > result.value) {
      result.value = value;
      result.witness = p;
      result.note = note;
    }
  };

  for (int v = 0; v < net_->vertex_count(); ++v) {
    if (v == net_->root()) continue;
    double t = vertex_time_[v];
    if (t == kInf) continue;
    consider(t / net_->vertex_distance(v), PointRef::at_vertex(v), "vertex");
  }

  for (std::size_t i = 0; i < segments_.size() && !result.infinite; ++i) {
    const ScheduleSegment& seg = segments_[i];
    const Arc& arc = net_->arc(seg.arc);
    double start_time = cum_start(i);
    double ws = net_->watershed_offset(seg.arc);

    auto ratio_at = [&](double off) {
      double t = start_time + std::abs(off - seg.from);
      double d = net_->distance(PointRef::on_arc(seg.arc, off));
      if (d <= 1e-12) {
        if (t <= 1e-12) {
          // both vanish: the inner limit of T/d along the segment is 1
          consider(1.0, net_->point(seg.arc, off), "limit at the root");
        } else {
          result.infinite = true;
          double eps = std::min(1e-6, arc.len / 2);
          result.witness = PointRef::on_arc(seg.arc, off <= arc.len / 2 ? eps : arc.len - eps);
          result.note = "points near the root on arc " + arc.id + " are found at time " +
                        std::to_string(t);
        }
        return;
      }
      consider(t / d, net_->point(seg.arc, off), "segment endpoint/watershed");
    };

    ratio_at(seg.from);
    ratio_at(seg.to);
    double lo = std::min(seg.from, seg.to), hi = std::max(seg.from, seg.to);
    if (ws > lo + 1e-12 && ws < hi - 1e-12) ratio_at(ws);
  }
  if (result.infinite) result.value = kInf;
  return result;
}

nlohmann::json ExpandingSchedule::to_json() const {
  nlohmann::json segs = nlohmann::json::array();
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const ScheduleSegment& seg = segments_[i];
    segs.push_back({{"arc", net_->arc(seg.arc).id},
                    {"from", seg.from},
                    {"to", seg.to},
                    {"cum_measure", seg.cum_end}});
  }
  const char* model = model_ == TimeModel::Segments  ? "segments"
                      : model_ == TimeModel::Disc    ? "disc"
                                                     : "evaluator";
  nlohmann::json out = {{"segments", segs}, {"time_model", model},
                        {"total_measure", total_measure()}};
  if (!note_.empty()) out["note"] = note_;
  return out;
}

}  // namespace netsearch
