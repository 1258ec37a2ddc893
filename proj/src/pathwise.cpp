#include "netsearch/pathwise.hpp"

#include <cmath>

namespace netsearch {

RcptDoubling::RcptDoubling(const MetricNetwork& net, double base, int i_min, int i_max)
    : net_(std::make_unique<MetricNetwork>(net)), base_(base), i_min_(i_min), i_max_(i_max) {
  if (!(base_ > 1.0)) throw DomainError("postman doubling requires base > 1");
  if (i_min_ > i_max_) throw DomainError("postman doubling requires i_min <= i_max");
  if (std::pow(base_, i_max_) < net_->r_max() - kTol)
    throw DomainError("postman doubling requires base^i_max >= r_max");
  build_();
}

RcptDoubling::RcptDoubling(const NetworkFamily& family, double base, int i_min, int i_max)
    : base_(base), i_min_(i_min), i_max_(i_max) {
  if (!(base_ > 1.0)) throw DomainError("postman doubling requires base > 1");
  if (i_min_ > i_max_) throw DomainError("postman doubling requires i_min <= i_max");
  net_ = std::make_unique<MetricNetwork>(family.ball(std::pow(base_, i_max_)));
  build_();
}

double RcptDoubling::iteration_radius(int index) const {
  return std::pow(base_, i_min_ + index);
}

void RcptDoubling::build_() {
  for (int i = i_min_; i <= i_max_; ++i) {
    double radius = std::pow(base_, i);
    MetricNetwork ball = net_->ball(std::min(radius, net_->r_max()));
    CppSolution cpp = chinese_postman(ball);
    // map the ball tour into subject coordinates
    std::vector<std::tuple<int, double, double>> traversals;
    for (const TourStep& step : cpp.tour.steps()) {
      const ArcRange& range = ball.provenance(step.arc);
      traversals.emplace_back(range.arc, range.map(step.from), range.map(step.to));
    }
    forward_.emplace_back(net_.get(), std::move(traversals));
    backward_.push_back(forward_.back().reversed());
    if (radius >= net_->r_max()) break;  // the disc is the whole network
  }
}

RcptSample RcptDoubling::sample(std::uint64_t seed) const {
  Rng rng(seed);
  RcptSample out;
  out.seed = seed;
  std::vector<const Tour*> parts;
  double t = 0.0;
  for (int i = 0; i < iterations(); ++i) {
    bool rev = rng.coin();
    out.reversed.push_back(rev);
    out.iteration_starts.push_back(t);
    const Tour& part = rev ? backward_[i] : forward_[i];
    parts.push_back(&part);
    t += part.length();
  }
  out.tour = Tour::concatenate(net_.get(), parts);
  return out;
}

PathwiseDoubling::PathwiseDoubling(const MetricNetwork& net, int j_min, int j_max)
    : net_(std::make_unique<MetricNetwork>(net)), j_min_(j_min), j_max_(j_max) {
  if (j_min_ >= j_max_) throw DomainError("pathwise doubling requires j_min < j_max");
  if (std::exp2(j_max_) < net_->r_max() - kTol)
    throw DomainError("pathwise doubling requires 2^j_max >= r_max");
  init_();
}

PathwiseDoubling::PathwiseDoubling(const NetworkFamily& family, int j_min, int j_max)
    : net_(std::make_unique<MetricNetwork>(family.ball(std::exp2(j_max + 1)))),
      j_min_(j_min),
      j_max_(j_max) {
  if (j_min_ >= j_max_) throw DomainError("pathwise doubling requires j_min < j_max");
  init_();
}

void PathwiseDoubling::init_() { spt_ = std::make_unique<ShortestPathTree>(*net_); }

std::vector<std::tuple<int, double, double>> PathwiseDoubling::disc_traversal_(double limit,
                                                                               Coin coin) const {
  const MetricNetwork& tree = spt_->tree();
  std::vector<std::tuple<int, double, double>> traversals;
  struct Frame {
    int vertex;
    std::size_t next_child;
  };
  std::vector<Frame> stack{{tree.root(), 0}};
  struct PathPiece {
    int arc;
    double cut;  // local length walked down
  };
  std::vector<PathPiece> path;
  while (!stack.empty()) {
    Frame& frame = stack.back();
    const auto& kids = spt_->children(frame.vertex);
    bool descended = false;
    while (frame.next_child < kids.size()) {
      int t = coin == Coin::Heads ? kids[frame.next_child]
                                  : kids[kids.size() - 1 - frame.next_child];
      ++frame.next_child;
      double d_top = tree.vertex_distance(tree.arc(t).u);
      if (d_top >= limit - 1e-15) continue;  // nothing of this branch is inside
      double cut = std::min(tree.arc(t).len, limit - d_top);
      const ArcRange& range = tree.provenance(t);
      traversals.emplace_back(range.arc, range.from, range.map(cut));
      if (cut >= tree.arc(t).len - 1e-15) {
        path.push_back({t, tree.arc(t).len});
        stack.push_back({tree.arc(t).v, 0});
        descended = true;
        break;
      }
      // turn around mid-arc
      traversals.emplace_back(range.arc, range.map(cut), range.from);
    }
    if (descended) continue;
    if (frame.next_child >= kids.size()) {
      stack.pop_back();
      if (!path.empty()) {
        PathPiece piece = path.back();
        path.pop_back();
        const ArcRange& range = tree.provenance(piece.arc);
        traversals.emplace_back(range.arc, range.map(piece.cut), range.from);
      }
    }
  }
  return traversals;
}

PathwiseDoublingSample PathwiseDoubling::sample(std::uint64_t seed) const {
  Rng rng(seed);
  PathwiseDoublingSample out;
  out.seed = seed;
  for (int j = j_min_; j <= j_max_ + 1; ++j)
    out.thresholds.push_back(rng.uniform(std::exp2(j - 1), std::exp2(j)));
  for (int j = j_min_; j <= j_max_; ++j) out.reversed.push_back(rng.coin());

  std::vector<std::tuple<int, double, double>> traversals;
  double t = 0.0;
  for (std::size_t level = 0; level + 1 < out.thresholds.size(); ++level) {
    out.iteration_starts.push_back(t);
    auto part = disc_traversal_(out.thresholds[level + 1],
                                out.reversed[level] ? Coin::Tails : Coin::Heads);
    for (auto& tr : part) t += std::abs(std::get<2>(tr) - std::get<1>(tr));
    traversals.insert(traversals.end(), part.begin(), part.end());
  }
  out.tour = Tour(net_.get(), std::move(traversals));
  return out;
}

}  // namespace netsearch
