#pragma once

#include "netsearch/schedule.hpp"
#include "netsearch/sptree.hpp"

namespace netsearch {

enum class Coin { Heads, Tails };

// Depth-first preorder of tree arcs; Tails reverses the child order at every
// node, which visits the leaves in exactly the reverse order.
std::vector<int> dfs_arc_order(const ShortestPathTree& tree, Coin coin);

// Expanding depth-first search of a tree: arcs searched outward in preorder,
// re-traversal of explored ground is free. Segments are emitted in source
// coordinates. The equiprobable Heads/Tails mixture satisfies
// E[T(H)] <= (measure(tree) + d(H)) / 2 for every point H.
ExpandingSchedule rdfs_schedule(const ShortestPathTree& tree, Coin coin);

}  // namespace netsearch
