#include "netsearch/network.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <queue>
#include <sstream>

namespace netsearch {

MetricNetwork::MetricNetwork(std::vector<std::string> vertex_ids, std::vector<ArcSpec> arc_specs,
                             const std::string& root_id)
    : vertex_ids_(std::move(vertex_ids)) {
  for (int i = 0; i < static_cast<int>(vertex_ids_.size()); ++i) {
    if (!vertex_lookup_.emplace(vertex_ids_[i], i).second)
      throw DomainError("duplicate vertex id: " + vertex_ids_[i]);
  }
  auto root_it = vertex_lookup_.find(root_id);
  if (root_it == vertex_lookup_.end()) throw DomainError("root vertex not declared: " + root_id);
  root_ = root_it->second;

  arcs_.reserve(arc_specs.size());
  adj_.assign(vertex_ids_.size(), {});
  for (const auto& s : arc_specs) {
    if (!(s.len > 0.0)) throw DomainError("arc " + s.id + " has nonpositive length");
    auto ui = vertex_lookup_.find(s.u);
    auto vi = vertex_lookup_.find(s.v);
    if (ui == vertex_lookup_.end()) throw DomainError("arc " + s.id + ": unknown vertex " + s.u);
    if (vi == vertex_lookup_.end()) throw DomainError("arc " + s.id + ": unknown vertex " + s.v);
    int a = static_cast<int>(arcs_.size());
    if (!arc_lookup_.emplace(s.id, a).second) throw DomainError("duplicate arc id: " + s.id);
    arcs_.push_back({s.id, ui->second, vi->second, s.len});
    adj_[ui->second].emplace_back(a, 0);
    adj_[vi->second].emplace_back(a, 1);
    total_measure_ += s.len;
  }

  // Dijkstra from the root over vertices.
  dist_.assign(vertex_ids_.size(), kInf);
  dist_[root_] = 0.0;
  using Entry = std::pair<double, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  queue.emplace(0.0, root_);
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (d > dist_[v]) continue;
    for (auto [a, side] : adj_[v]) {
      int w = side == 0 ? arcs_[a].v : arcs_[a].u;
      double nd = d + arcs_[a].len;
      if (nd < dist_[w]) {
        dist_[w] = nd;
        queue.emplace(nd, w);
      }
    }
  }
  for (int v = 0; v < vertex_count(); ++v)
    if (!(dist_[v] < kInf))
      throw DomainError("network is not connected (vertex " + vertex_ids_[v] + " unreachable)");

  r_max_ = 0.0;
  for (int a = 0; a < arc_count(); ++a) {
    double peak = dist_[arcs_[a].u] + watershed_offset(a);
    r_max_ = std::max(r_max_, peak);
  }
  for (double d : dist_) r_max_ = std::max(r_max_, d);
}

int MetricNetwork::vertex_index(const std::string& id) const {
  auto it = vertex_lookup_.find(id);
  if (it == vertex_lookup_.end()) throw DomainError("unknown vertex id: " + id);
  return it->second;
}

int MetricNetwork::arc_index(const std::string& id) const {
  auto it = arc_lookup_.find(id);
  if (it == arc_lookup_.end()) throw DomainError("unknown arc id: " + id);
  return it->second;
}

double MetricNetwork::watershed_offset(int a) const {
  const Arc& arc = arcs_.at(a);
  double x = (arc.len + dist_[arc.v] - dist_[arc.u]) / 2.0;
  return std::clamp(x, 0.0, arc.len);
}

namespace {

double clamp_offset(const Arc& arc, double off) {
  double tol = 1e-9 * (1.0 + arc.len);
  if (off < -tol || off > arc.len + tol)
    throw DomainError("point offset outside arc " + arc.id);
  return std::clamp(off, 0.0, arc.len);
}

}  // namespace

double MetricNetwork::distance(const PointRef& p) const {
  if (p.is_vertex()) return dist_.at(p.vertex);
  const Arc& arc = arcs_.at(p.arc);
  double off = clamp_offset(arc, p.offset);
  return std::min(dist_[arc.u] + off, dist_[arc.v] + arc.len - off);
}

PointRef MetricNetwork::point(int a, double off) const {
  const Arc& arc = arcs_.at(a);
  off = clamp_offset(arc, off);
  if (off == 0.0) return PointRef::at_vertex(arc.u);
  if (off == arc.len) return PointRef::at_vertex(arc.v);
  return PointRef::on_arc(a, off);
}

PointRef MetricNetwork::point_by_id(const std::string& arc_id, double off) const {
  return point(arc_index(arc_id), off);
}

PointRef MetricNetwork::vertex_point(const std::string& vertex_id) const {
  return PointRef::at_vertex(vertex_index(vertex_id));
}

bool MetricNetwork::same_point(const PointRef& p, const PointRef& q, double tol) const {
  if (p.is_vertex() && q.is_vertex()) return p.vertex == q.vertex;
  if (p.is_vertex() != q.is_vertex()) {
    const PointRef& vp = p.is_vertex() ? p : q;
    const PointRef& ip = p.is_vertex() ? q : p;
    const Arc& arc = arcs_.at(ip.arc);
    if (arc.u == vp.vertex && ip.offset <= tol) return true;
    if (arc.v == vp.vertex && arc.len - ip.offset <= tol) return true;
    return false;
  }
  return p.arc == q.arc && std::abs(p.offset - q.offset) <= tol;
}

std::string MetricNetwork::describe(const PointRef& p) const {
  if (p.is_vertex()) return "vertex " + vertex_ids_.at(p.vertex);
  std::ostringstream out;
  out << "arc " << arcs_.at(p.arc).id << " @ " << p.offset;
  return out.str();
}

namespace {

std::string unique_id(std::unordered_map<std::string, int>& taken, std::string base) {
  if (taken.emplace(base, 1).second) return base;
  for (int k = 2;; ++k) {
    std::string candidate = base + "." + std::to_string(k);
    if (taken.emplace(candidate, 1).second) return candidate;
  }
}

}  // namespace

ArcRange subrange(const ArcRange& base, double lo, double hi) {
  return {base.arc, base.map(lo), base.map(hi)};
}

MetricNetwork with_provenance(MetricNetwork net, std::vector<ArcRange> prov) {
  net.provenance_ = std::move(prov);
  return net;
}

MetricNetwork MetricNetwork::ball(double r) const {
  if (!(r > 0.0)) throw DomainError("ball radius must be positive");

  auto self_range = [this](int a, double lo, double hi) {
    if (has_provenance()) return subrange(provenance_[a], lo, hi);
    return ArcRange{a, lo, hi};
  };

  std::vector<std::string> vids;
  std::unordered_map<std::string, int> vtaken;
  std::vector<int> vmap(vertex_count(), -1);
  for (int v = 0; v < vertex_count(); ++v) {
    if (dist_[v] <= r) {
      vmap[v] = static_cast<int>(vids.size());
      vids.push_back(vertex_ids_[v]);
      vtaken.emplace(vertex_ids_[v], 1);
    }
  }

  std::vector<ArcSpec> specs;
  std::vector<ArcRange> prov;
  std::unordered_map<std::string, int> ataken;
  for (int a = 0; a < arc_count(); ++a) {
    const Arc& arc = arcs_[a];
    double du = dist_[arc.u], dv = dist_[arc.v];
    double ws = watershed_offset(a);
    double u_keep = du <= r ? std::min(ws, r - du) : -1.0;
    double v_keep = dv <= r ? std::min(arc.len - ws, r - dv) : -1.0;
    if (u_keep >= 0.0 && v_keep >= 0.0 && u_keep + v_keep >= arc.len - 1e-15) {
      std::string id = unique_id(ataken, arc.id);
      specs.push_back({id, vertex_ids_[arc.u], vertex_ids_[arc.v], arc.len});
      prov.push_back(self_range(a, 0.0, arc.len));
      continue;
    }
    if (u_keep > 0.0) {
      std::string cut = unique_id(vtaken, arc.id + "@u");
      vids.push_back(cut);
      std::string id = unique_id(ataken, arc.id + "~u");
      specs.push_back({id, vertex_ids_[arc.u], cut, u_keep});
      prov.push_back(self_range(a, 0.0, u_keep));
    }
    if (v_keep > 0.0) {
      std::string cut = unique_id(vtaken, arc.id + "@v");
      vids.push_back(cut);
      std::string id = unique_id(ataken, arc.id + "~v");
      specs.push_back({id, vertex_ids_[arc.v], cut, v_keep});
      prov.push_back(self_range(a, arc.len, arc.len - v_keep));
    }
  }

  MetricNetwork result(std::move(vids), std::move(specs), vertex_ids_[root_]);
  return with_provenance(std::move(result), std::move(prov));
}

MetricNetwork MetricNetwork::parse(std::istream& in) {
  std::vector<std::string> vids;
  std::vector<ArcSpec> specs;
  std::optional<std::string> root;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string kind;
    if (!(ss >> kind)) continue;
    if (kind == "root") {
      std::string vid;
      if (!(ss >> vid)) throw ParseError("expected: root <vid>", line_no);
      if (root) throw ParseError("duplicate root record", line_no);
      root = vid;
    } else if (kind == "vertex") {
      std::string vid;
      if (!(ss >> vid)) throw ParseError("expected: vertex <vid>", line_no);
      vids.push_back(vid);
    } else if (kind == "arc") {
      ArcSpec s;
      if (!(ss >> s.id >> s.u >> s.v >> s.len))
        throw ParseError("expected: arc <aid> <vid> <vid> <length>", line_no);
      if (!(s.len > 0.0)) throw ParseError("arc length must be positive", line_no);
      specs.push_back(std::move(s));
    } else {
      throw ParseError("unknown record kind: " + kind, line_no);
    }
    std::string extra;
    if (ss >> extra) throw ParseError("trailing tokens: " + extra, line_no);
  }
  if (!root) throw ParseError("missing root record", line_no == 0 ? 1 : line_no);
  try {
    return MetricNetwork(std::move(vids), std::move(specs), *root);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), line_no == 0 ? 1 : line_no);
  }
}

MetricNetwork MetricNetwork::parse_text(const std::string& text) {
  std::istringstream ss(text);
  return parse(ss);
}

MetricNetwork MetricNetwork::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open network file: " + path);
  return parse(in);
}

std::string MetricNetwork::to_text() const {
  std::ostringstream out;
  out.precision(17);
  for (const auto& v : vertex_ids_) out << "vertex " << v << "\n";
  for (const auto& a : arcs_)
    out << "arc " << a.id << " " << vertex_ids_[a.u] << " " << vertex_ids_[a.v] << " " << a.len
        << "\n";
  out << "root " << vertex_ids_[root_] << "\n";
  return out.str();
}

nlohmann::json MetricNetwork::to_json() const {
  nlohmann::json arcs = nlohmann::json::array();
  for (const auto& a : arcs_)
    arcs.push_back({{"id", a.id}, {"u", vertex_ids_[a.u]}, {"v", vertex_ids_[a.v]}, {"len", a.len}});
  return {{"root", vertex_ids_[root_]}, {"vertices", vertex_ids_}, {"arcs", arcs}};
}

}  // namespace netsearch
