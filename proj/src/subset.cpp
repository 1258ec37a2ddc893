#include "netsearch/subset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace netsearch {

Subnetwork::Subnetwork(const MetricNetwork* net, std::vector<ArcRange> ranges)
    : net_(net), ranges_(std::move(ranges)) {
  normalize_();
  check_connected_();
}

void Subnetwork::normalize_() {
  for (ArcRange& r : ranges_) {
    if (r.arc < 0 || r.arc >= net_->arc_count()) throw DomainError("subset range on unknown arc");
    double lo = std::min(r.from, r.to), hi = std::max(r.from, r.to);
    double len = net_->arc(r.arc).len;
    if (lo < -1e-9 || hi > len + 1e-9) throw DomainError("subset range outside its arc");
    r.from = std::clamp(lo, 0.0, len);
    r.to = std::clamp(hi, 0.0, len);
  }
  std::sort(ranges_.begin(), ranges_.end(), [](const ArcRange& a, const ArcRange& b) {
    return a.arc != b.arc ? a.arc < b.arc : a.from < b.from;
  });
  std::vector<ArcRange> merged;
  for (const ArcRange& r : ranges_) {
    if (r.to - r.from <= 1e-12) continue;
    if (!merged.empty() && merged.back().arc == r.arc && r.from <= merged.back().to + 1e-12)
      merged.back().to = std::max(merged.back().to, r.to);
    else
      merged.push_back(r);
  }
  ranges_ = std::move(merged);
  measure_ = 0.0;
  for (const ArcRange& r : ranges_) measure_ += r.to - r.from;
  if (ranges_.empty()) throw DomainError("subset has zero measure");
}

void Subnetwork::check_connected_() const {
  const int n = static_cast<int>(ranges_.size());
  std::vector<int> parent(n + net_->vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  for (int i = 0; i < n; ++i) {
    const Arc& arc = net_->arc(ranges_[i].arc);
    if (ranges_[i].from <= 1e-9) unite(i, n + arc.u);
    if (ranges_[i].to >= arc.len - 1e-9) unite(i, n + arc.v);
    if (i > 0 && ranges_[i - 1].arc == ranges_[i].arc &&
        ranges_[i].from <= ranges_[i - 1].to + 1e-9)
      unite(i, i - 1);
  }
  int root_class = find(0);
  for (int i = 1; i < n; ++i)
    if (find(i) != root_class) throw DomainError("subset is not connected");
}

double Subnetwork::min_distance() const {
  double best = kInf;
  for (const ArcRange& r : ranges_) {
    best = std::min(best, net_->distance(PointRef::on_arc(r.arc, r.from)));
    best = std::min(best, net_->distance(PointRef::on_arc(r.arc, r.to)));
  }
  return best;
}

double Subnetwork::distance_integral() const {
  double total = 0.0;
  for (const ArcRange& r : ranges_) {
    double ws = net_->watershed_offset(r.arc);
    auto piece = [&](double a, double b) {
      if (b <= a) return;
      double da = net_->distance(PointRef::on_arc(r.arc, a));
      double db = net_->distance(PointRef::on_arc(r.arc, b));
      total += (da + db) / 2.0 * (b - a);
    };
    piece(r.from, std::min(r.to, std::max(r.from, ws)));
    piece(std::max(r.from, std::min(r.to, ws)), r.to);
  }
  return total;
}

double Subnetwork::mean_distance() const { return distance_integral() / measure_; }

nlohmann::json Subnetwork::to_json() const {
  nlohmann::json ranges = nlohmann::json::array();
  for (const ArcRange& r : ranges_)
    ranges.push_back({{"arc", net_->arc(r.arc).id}, {"from", r.from}, {"to", r.to}});
  return {{"ranges", ranges}, {"measure", measure_}};
}

SubsetStats subset_stats(const Subnetwork& subset) {
  return {subset.min_distance(), subset.measure(), subset.mean_distance()};
}

Subnetwork ball_subset(const MetricNetwork& net, double r) {
  if (!(r > 0.0)) throw DomainError("ball subset radius must be positive");
  std::vector<ArcRange> ranges;
  for (int a = 0; a < net.arc_count(); ++a) {
    const Arc& arc = net.arc(a);
    double du = net.vertex_distance(arc.u), dv = net.vertex_distance(arc.v);
    double ws = net.watershed_offset(a);
    if (du <= r) ranges.push_back({a, 0.0, std::min(ws, r - du)});
    if (dv <= r) ranges.push_back({a, arc.len - std::min(arc.len - ws, r - dv), arc.len});
  }
  return Subnetwork(&net, std::move(ranges));
}

Subnetwork whole_subset(const MetricNetwork& net) {
  std::vector<ArcRange> ranges;
  for (int a = 0; a < net.arc_count(); ++a) ranges.push_back({a, 0.0, net.arc(a).len});
  return Subnetwork(&net, std::move(ranges));
}

std::vector<double> branch_depths(const ShortestPathTree& tree, int tree_vertex) {
  const MetricNetwork& t = tree.tree();
  double base = t.vertex_distance(tree_vertex);
  std::vector<double> depths;
  for (int child_arc : tree.children(tree_vertex)) {
    double deepest = 0.0;
    std::vector<int> stack{child_arc};
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      deepest = std::max(deepest, t.vertex_distance(t.arc(a).v) - base);
      for (int k : tree.children(t.arc(a).v)) stack.push_back(k);
    }
    depths.push_back(deepest);
  }
  return depths;
}

Subnetwork subtree_subset(const ShortestPathTree& tree, int tree_vertex,
                          const std::vector<double>& branch_caps) {
  const MetricNetwork& t = tree.tree();
  const auto& kids = tree.children(tree_vertex);
  if (kids.empty()) throw DomainError("subtree subset needs an internal tree vertex");
  if (branch_caps.size() != kids.size())
    throw DomainError("one depth cap per child branch required");
  double base = t.vertex_distance(tree_vertex);
  std::vector<ArcRange> ranges;
  for (std::size_t c = 0; c < kids.size(); ++c) {
    if (!(branch_caps[c] > 0.0)) continue;
    std::vector<int> stack{kids[c]};
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      double top_depth = t.vertex_distance(t.arc(a).u) - base;
      if (top_depth >= branch_caps[c] - 1e-15) continue;
      double cut = std::min(t.arc(a).len, branch_caps[c] - top_depth);
      const ArcRange& range = t.provenance(a);
      ranges.push_back(subrange(range, 0.0, cut));
      if (cut >= t.arc(a).len - 1e-15)
        for (int k : tree.children(t.arc(a).v)) stack.push_back(k);
    }
  }
  return Subnetwork(&tree.source(), std::move(ranges));
}

Subnetwork subtree_subset(const ShortestPathTree& tree, int tree_vertex, double depth) {
  return subtree_subset(tree, tree_vertex,
                        std::vector<double>(tree.children(tree_vertex).size(), depth));
}

}  // namespace netsearch
