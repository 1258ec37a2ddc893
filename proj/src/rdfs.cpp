#include "netsearch/rdfs.hpp"

namespace netsearch {

std::vector<int> dfs_arc_order(const ShortestPathTree& tree, Coin coin) {
  std::vector<int> order;
  order.reserve(tree.tree().arc_count());
  std::vector<int> stack;
  auto push_children = [&](int v) {
    const auto& kids = tree.children(v);
    if (coin == Coin::Heads)
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    else
      for (int t : kids) stack.push_back(t);
  };
  push_children(tree.tree().root());
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    order.push_back(t);
    push_children(tree.tree().arc(t).v);
  }
  return order;
}

ExpandingSchedule rdfs_schedule(const ShortestPathTree& tree, Coin coin) {
  std::vector<ScheduleSegment> segs;
  double cum = 0.0;
  for (int t : dfs_arc_order(tree, coin)) {
    const ArcRange& range = tree.tree().provenance(t);
    cum += range.length();
    segs.push_back({range.arc, range.from, range.to, cum});
  }
  return ExpandingSchedule::from_segments(&tree.source(), std::move(segs));
}

}  // namespace netsearch
