#include "netsearch/sptree.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace netsearch {

namespace {

std::string fresh_id(std::unordered_map<std::string, int>& taken, std::string base) {
  if (taken.emplace(base, 1).second) return base;
  for (int k = 2;; ++k) {
    std::string candidate = base + "." + std::to_string(k);
    if (taken.emplace(candidate, 1).second) return candidate;
  }
}

}  // namespace

ShortestPathTree::ShortestPathTree(const MetricNetwork& source) : source_(&source) {
  const int nv = source.vertex_count();
  const int na = source.arc_count();

  // Parent arc per non-root vertex: smallest arc index realizing its distance.
  std::vector<int> parent_arc(nv, -1);
  std::vector<int> parent_vertex(nv, -1);
  for (int a = 0; a < na; ++a) {
    const Arc& arc = source.arc(a);
    double du = source.vertex_distance(arc.u), dv = source.vertex_distance(arc.v);
    auto try_parent = [&](int child, int parent, double dp) {
      if (child == source.root()) return;
      if (parent_arc[child] >= 0) return;
      double tol = 1e-12 * (1.0 + source.vertex_distance(child));
      if (std::abs(dp + arc.len - source.vertex_distance(child)) <= tol) {
        parent_arc[child] = a;
        parent_vertex[child] = parent;
      }
    };
    try_parent(arc.v, arc.u, du);
    try_parent(arc.u, arc.v, dv);
  }
  for (int v = 0; v < nv; ++v)
    if (v != source.root() && parent_arc[v] < 0)
      throw DomainError("no parent arc found for vertex " + source.vertex_id(v));

  std::vector<std::string> vids;
  std::unordered_map<std::string, int> vtaken;
  tree_vertex_of_source_.assign(nv, -1);
  for (int v = 0; v < nv; ++v) {
    tree_vertex_of_source_[v] = static_cast<int>(vids.size());
    vids.push_back(source.vertex_id(v));
    vtaken.emplace(source.vertex_id(v), 1);
  }

  std::vector<MetricNetwork::ArcSpec> specs;
  std::vector<ArcRange> prov;
  std::unordered_map<std::string, int> ataken;
  tree_arcs_of_source_.assign(na, {});

  // Tree provenance always refers to the immediate source network.
  auto base_range = [](int a, double lo, double hi) { return ArcRange{a, lo, hi}; };
  auto add_arc = [&](int src_arc, const std::string& from_id, const std::string& to_id, double len,
                     double src_lo, double src_hi) {
    tree_arcs_of_source_[src_arc].push_back(static_cast<int>(specs.size()));
    specs.push_back({fresh_id(ataken, source.arc(src_arc).id), from_id, to_id, len});
    prov.push_back(base_range(src_arc, src_lo, src_hi));
  };
  auto add_leaf = [&](const std::string& base) {
    std::string id = fresh_id(vtaken, base);
    vids.push_back(id);
    return id;
  };

  for (int a = 0; a < na; ++a) {
    const Arc& arc = source.arc(a);
    if (arc.v != source.root() && parent_arc[arc.v] == a && parent_vertex[arc.v] == arc.u) {
      add_arc(a, source.vertex_id(arc.u), source.vertex_id(arc.v), arc.len, 0.0, arc.len);
      continue;
    }
    if (arc.u != source.root() && parent_arc[arc.u] == a && parent_vertex[arc.u] == arc.v) {
      add_arc(a, source.vertex_id(arc.v), source.vertex_id(arc.u), arc.len, arc.len, 0.0);
      continue;
    }
    double ws = source.watershed_offset(a);
    if (ws > 0.0)
      add_arc(a, source.vertex_id(arc.u), add_leaf(arc.id + "@w"), ws, 0.0, ws);
    if (arc.len - ws > 0.0)
      add_arc(a, source.vertex_id(arc.v), add_leaf(arc.id + "@w"), arc.len - ws, arc.len, ws);
  }

  tree_ = std::make_unique<MetricNetwork>(
      with_provenance(MetricNetwork(std::move(vids), std::move(specs), source.vertex_id(source.root())),
                      std::move(prov)));

  children_.assign(tree_->vertex_count(), {});
  for (int t = 0; t < tree_->arc_count(); ++t) children_[tree_->arc(t).u].push_back(t);

  // Sanity: splitting must preserve measure and root distances of vertices.
  if (std::abs(tree_->total_measure() - source.total_measure()) >
      kTol * (1.0 + source.total_measure()))
    throw DomainError("shortest path tree does not preserve measure");
}

PointRef ShortestPathTree::to_tree(const PointRef& p) const {
  if (p.is_vertex()) return PointRef::at_vertex(tree_vertex_of_source_.at(p.vertex));
  double best_err = kInf;
  int best_arc = -1;
  double best_off = 0.0;
  for (int t : tree_arcs_of_source_.at(p.arc)) {
    const ArcRange& range = tree_->provenance(t);
    double lo = std::min(range.from, range.to), hi = std::max(range.from, range.to);
    if (p.offset < lo - kTol || p.offset > hi + kTol) continue;
    double local = range.to >= range.from ? p.offset - range.from : range.from - p.offset;
    local = std::clamp(local, 0.0, tree_->arc(t).len);
    // prefer the earlier (u-side) piece when the offset sits on a split point
    double err = std::abs(range.map(local) - p.offset);
    if (err < best_err - 1e-15 || (err <= best_err && best_arc < 0)) {
      best_err = err;
      best_arc = t;
      best_off = local;
    }
  }
  if (best_arc < 0) throw DomainError("point does not map into the shortest path tree");
  return tree_->point(best_arc, best_off);
}

PointRef ShortestPathTree::to_source(const PointRef& p) const {
  if (p.is_vertex()) {
    // primary copies of source vertices come first, in source order
    if (p.vertex < source_->vertex_count()) return PointRef::at_vertex(p.vertex);
    // split/detached leaf: locate the unique tree arc ending at it
    for (int t = 0; t < tree_->arc_count(); ++t) {
      if (tree_->arc(t).v == p.vertex) {
        const ArcRange& range = tree_->provenance(t);
        return source_->point(range.arc, range.to);
      }
    }
    throw DomainError("tree vertex has no source image");
  }
  const ArcRange& range = tree_->provenance(p.arc);
  return source_->point(range.arc, range.map(p.offset));
}

ShortestPathTree shortest_path_tree(const MetricNetwork& net) { return ShortestPathTree(net); }

}  // namespace netsearch
