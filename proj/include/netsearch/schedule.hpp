#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "netsearch/network.hpp"
#include "netsearch/profile.hpp"

namespace netsearch {

struct ScheduleSegment {
  int arc = -1;
  double from = 0.0;
  double to = 0.0;
  double cum_end = 0.0;  // cumulative searched measure when the segment completes
  double length() const { return to >= from ? to - from : from - to; }
};

// A deterministic expanding search: ordered directed segments growing a
// connected region from the root. Three time models:
//   Segments  - search time read off the segment list,
//   Disc      - the searched set at time t is the disc of measure t, so
//               T(p) = f(d(p)) regardless of how segments are serialized,
//   Evaluator - closed-form time function (simultaneous-growth strategies).
class ExpandingSchedule {
 public:
  enum class TimeModel { Segments, Disc, Evaluator };

  static ExpandingSchedule from_segments(const MetricNetwork* net,
                                         std::vector<ScheduleSegment> segments);
  static ExpandingSchedule disc(const MetricNetwork* net, RadiusProfile profile,
                                std::vector<ScheduleSegment> serialized);
  static ExpandingSchedule with_evaluator(const MetricNetwork* net,
                                          std::function<double(const PointRef&)> time_fn,
                                          std::vector<ScheduleSegment> serialized,
                                          std::string note);

  const MetricNetwork& net() const { return *net_; }
  const std::vector<ScheduleSegment>& segments() const { return segments_; }
  TimeModel time_model() const { return model_; }
  double total_measure() const { return segments_.empty() ? 0.0 : segments_.back().cum_end; }
  double cum_start(std::size_t i) const { return i == 0 ? 0.0 : segments_[i - 1].cum_end; }

  // Structural checks: measure accounting, interior-disjointness, and prefix
  // connectivity (every segment starts at an already-searched point).
  void validate() const;

  std::optional<double> time_of(const PointRef& p) const;

  struct SupRatio {
    double value = 0.0;
    bool infinite = false;
    PointRef witness;
    std::string note;
  };
  // Exact sup over points of T(p)/d(p); may be infinite with a witness.
  SupRatio sup_normalized_ratio() const;

  nlohmann::json to_json() const;

 private:
  const MetricNetwork* net_ = nullptr;
  std::vector<ScheduleSegment> segments_;
  TimeModel model_ = TimeModel::Segments;
  std::optional<RadiusProfile> profile_;
  std::function<double(const PointRef&)> time_fn_;
  std::string note_;
  // lookup structures
  std::vector<std::vector<int>> segs_on_arc_;
  std::vector<double> vertex_time_;

  void index_();
};

}  // namespace netsearch
