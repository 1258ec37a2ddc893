#include "netsearch/tour.hpp"

#include <algorithm>
#include <cmath>

namespace netsearch {

Tour::Tour(const MetricNetwork* net, std::vector<std::tuple<int, double, double>> traversals)
    : net_(net) {
  steps_.reserve(traversals.size());
  double t = 0.0;
  for (auto& [arc, from, to] : traversals) {
    TourStep step{arc, from, to, t};
    t = step.t_end();
    steps_.push_back(step);
  }
  index_();
}

void Tour::index_() {
  steps_on_arc_.assign(net_->arc_count(), {});
  vertex_time_.assign(net_->vertex_count(), kInf);
  for (int i = 0; i < static_cast<int>(steps_.size()); ++i) {
    const TourStep& step = steps_[i];
    steps_on_arc_.at(step.arc).push_back(i);
    const Arc& arc = net_->arc(step.arc);
    auto touch = [&](double offset, double at) {
      if (offset <= 1e-12)
        vertex_time_[arc.u] = std::min(vertex_time_[arc.u], at);
      else if (offset >= arc.len - 1e-12)
        vertex_time_[arc.v] = std::min(vertex_time_[arc.v], at);
    };
    touch(step.from, step.t_start);
    touch(step.to, step.t_end());
  }
  if (!steps_.empty()) {
    // the trajectory starts at the root at time zero
    vertex_time_[net_->root()] = 0.0;
  }
}

PointRef Tour::start_point() const {
  if (steps_.empty()) return PointRef::at_vertex(net_->root());
  return net_->point(steps_.front().arc, steps_.front().from);
}

PointRef Tour::end_point() const {
  if (steps_.empty()) return PointRef::at_vertex(net_->root());
  return net_->point(steps_.back().arc, steps_.back().to);
}

void Tour::validate() const {
  if (steps_.empty()) return;
  if (!net_->same_point(start_point(), PointRef::at_vertex(net_->root())))
    throw DomainError("tour does not start at the root");
  double t = 0.0;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const TourStep& step = steps_[i];
    const Arc& arc = net_->arc(step.arc);
    if (step.from < -1e-9 || step.from > arc.len + 1e-9 || step.to < -1e-9 ||
        step.to > arc.len + 1e-9)
      throw DomainError("tour step extends outside its arc");
    if (std::abs(step.t_start - t) > 1e-6 * (1.0 + t))
      throw DomainError("tour step timing is not unit-speed contiguous");
    t = step.t_start + step.length();
    if (i + 1 < steps_.size()) {
      PointRef here = net_->point(step.arc, step.to);
      PointRef next = net_->point(steps_[i + 1].arc, steps_[i + 1].from);
      if (!net_->same_point(here, next))
        throw DomainError("tour breaks continuity after step " + std::to_string(i));
    }
  }
}

std::optional<double> Tour::time_of(const PointRef& p) const {
  if (p.is_vertex()) {
    double t = vertex_time_.at(p.vertex);
    if (t == kInf) return std::nullopt;
    return t;
  }
  double best = kInf;
  for (int i : steps_on_arc_.at(p.arc)) {
    const TourStep& step = steps_[i];
    double lo = std::min(step.from, step.to), hi = std::max(step.from, step.to);
    if (p.offset < lo - 1e-12 || p.offset > hi + 1e-12) continue;
    best = std::min(best, step.t_start + std::abs(p.offset - step.from));
  }
  if (best == kInf) return std::nullopt;
  return best;
}

Tour Tour::reversed() const {
  std::vector<std::tuple<int, double, double>> traversals;
  traversals.reserve(steps_.size());
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it)
    traversals.emplace_back(it->arc, it->to, it->from);
  return Tour(net_, std::move(traversals));
}

Tour Tour::concatenate(const MetricNetwork* net, const std::vector<const Tour*>& parts) {
  std::vector<std::tuple<int, double, double>> traversals;
  for (const Tour* part : parts)
    for (const TourStep& step : part->steps())
      traversals.emplace_back(step.arc, step.from, step.to);
  return Tour(net, std::move(traversals));
}

nlohmann::json Tour::to_json() const {
  nlohmann::json steps = nlohmann::json::array();
  for (const TourStep& step : steps_)
    steps.push_back({{"arc", net_->arc(step.arc).id},
                     {"from", step.from},
                     {"to", step.to},
                     {"t_start", step.t_start},
                     {"t_end", step.t_end()}});
  return {{"steps", steps}, {"length", length()}};
}

Tour pathwise_rdfs(const ShortestPathTree& tree, Coin coin) {
  std::vector<std::tuple<int, double, double>> traversals;
  // closed DFS: descend each arc, recurse, ascend
  struct Frame {
    int vertex;
    std::size_t next_child;
  };
  std::vector<Frame> stack{{tree.tree().root(), 0}};
  std::vector<int> path_arcs;
  while (!stack.empty()) {
    Frame& frame = stack.back();
    const auto& kids = tree.children(frame.vertex);
    if (frame.next_child < kids.size()) {
      int t = coin == Coin::Heads ? kids[frame.next_child]
                                  : kids[kids.size() - 1 - frame.next_child];
      ++frame.next_child;
      const ArcRange& range = tree.tree().provenance(t);
      traversals.emplace_back(range.arc, range.from, range.to);
      path_arcs.push_back(t);
      stack.push_back({tree.tree().arc(t).v, 0});
    } else {
      stack.pop_back();
      if (!path_arcs.empty()) {
        int t = path_arcs.back();
        path_arcs.pop_back();
        const ArcRange& range = tree.tree().provenance(t);
        traversals.emplace_back(range.arc, range.to, range.from);
      }
    }
  }
  return Tour(&tree.source(), std::move(traversals));
}

}  // namespace netsearch
