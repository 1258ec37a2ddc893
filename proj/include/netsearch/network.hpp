#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "netsearch/common.hpp"

#include "json.hpp"

namespace netsearch {

struct Arc {
  std::string id;
  int u = -1;
  int v = -1;
  double len = 0.0;
};

// Oriented range on a source arc: local offset t in [0, |to-from|] maps to
// source offset from + t*sign(to-from).
struct ArcRange {
  int arc = -1;
  double from = 0.0;
  double to = 0.0;
  double length() const { return to >= from ? to - from : from - to; }
  double map(double t) const { return to >= from ? from + t : from - t; }
};

// A Hider location: a vertex, or a point strictly inside an arc.
struct PointRef {
  int vertex = -1;
  int arc = -1;
  double offset = 0.0;

  bool is_vertex() const { return vertex >= 0; }

  static PointRef at_vertex(int v) {
    PointRef p;
    p.vertex = v;
    return p;
  }
  static PointRef on_arc(int a, double off) {
    PointRef p;
    p.arc = a;
    p.offset = off;
    return p;
  }
};

// Rooted continuum network: vertices joined by positive-length arcs, with
// Lebesgue measure along arcs. Immutable after construction; all queries are
// const and safe to share across threads.
class MetricNetwork {
 public:
  struct ArcSpec {
    std::string id, u, v;
    double len = 0.0;
  };

  MetricNetwork(std::vector<std::string> vertex_ids, std::vector<ArcSpec> arc_specs,
                const std::string& root_id);

  static MetricNetwork parse(std::istream& in);
  static MetricNetwork parse_text(const std::string& text);
  static MetricNetwork load(const std::string& path);

  int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  int root() const { return root_; }
  const std::string& vertex_id(int v) const { return vertex_ids_.at(v); }
  const Arc& arc(int a) const { return arcs_.at(a); }
  int vertex_index(const std::string& id) const;
  int arc_index(const std::string& id) const;

  // (arc, endpoint side) pairs at v; a self-loop appears twice.
  const std::vector<std::pair<int, int>>& incident(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  int root_degree() const { return degree(root_); }

  double total_measure() const { return total_measure_; }
  double vertex_distance(int v) const { return dist_.at(v); }
  double r_max() const { return r_max_; }

  double distance(const PointRef& p) const;

  // Offset (from the u end) of the point on arc a farthest from the root via
  // the u side; points left of it route through u, right of it through v.
  double watershed_offset(int a) const;

  // Canonicalizing point constructors: endpoint offsets become vertices.
  PointRef point(int a, double off) const;
  PointRef point_by_id(const std::string& arc_id, double off) const;
  PointRef vertex_point(const std::string& vertex_id) const;
  bool same_point(const PointRef& p, const PointRef& q, double tol = kTol) const;
  std::string describe(const PointRef& p) const;

  // Closed disc of radius r around the root, with degree-1 cut vertices at
  // every point at distance exactly r. Arcs carry provenance ranges back to
  // this network (or to its own source, composed).
  MetricNetwork ball(double r) const;

  bool has_provenance() const { return !provenance_.empty(); }
  const ArcRange& provenance(int a) const { return provenance_.at(a); }

  std::string to_text() const;
  nlohmann::json to_json() const;

 private:
  friend MetricNetwork with_provenance(MetricNetwork net, std::vector<ArcRange> prov);

  std::vector<std::string> vertex_ids_;
  std::vector<Arc> arcs_;
  int root_ = -1;
  std::unordered_map<std::string, int> vertex_lookup_;
  std::unordered_map<std::string, int> arc_lookup_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
  std::vector<double> dist_;
  double total_measure_ = 0.0;
  double r_max_ = 0.0;
  std::vector<ArcRange> provenance_;
};

MetricNetwork with_provenance(MetricNetwork net, std::vector<ArcRange> prov);

// Compose a sub-range taken in local coordinates of `base` with `base` itself.
ArcRange subrange(const ArcRange& base, double lo, double hi);

}  // namespace netsearch
