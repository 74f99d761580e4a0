#include "topo/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace topo {

NodeId Arrangement::add_node(NodeKind kind, std::string label) {
  nodes.push_back({kind, std::move(label)});
  rotation.emplace_back();
  return (NodeId)nodes.size() - 1;
}

EdgeId Arrangement::add_edge(std::string name, EdgeKind kind) {
  edges.push_back({std::move(name), kind});
  return (EdgeId)edges.size() - 1;
}

std::pair<DartId, DartId> Arrangement::add_dart_pair(EdgeId edge) {
  DartId d = (DartId)darts.size();
  darts.push_back({kNoNode, d + 1, edge});
  darts.push_back({kNoNode, d, edge});
  return {d, d + 1};
}

int Arrangement::rot_index(DartId d) const {
  const auto& r = rotation[darts[d].origin];
  for (int i = 0; i < (int)r.size(); ++i)
    if (r[i] == d) return i;
  return -1;
}

DartId Arrangement::rot_next(DartId d) const {
  const auto& r = rotation[darts[d].origin];
  int i = rot_index(d);
  return r[(i + 1) % r.size()];
}

DartId Arrangement::rot_prev(DartId d) const {
  const auto& r = rotation[darts[d].origin];
  int i = rot_index(d);
  return r[(i + (int)r.size() - 1) % r.size()];
}

FaceIndex Arrangement::faces() const {
  FaceIndex fi;
  fi.face_of.assign(darts.size(), -1);
  for (DartId d = 0; d < (DartId)darts.size(); ++d) {
    if (fi.face_of[d] != -1) continue;
    int32_t f = fi.count++;
    fi.canonical.push_back(d);
    DartId cur = d;
    do {
      fi.face_of[cur] = f;
      cur = face_next(cur);
    } while (cur != d);
  }
  return fi;
}

namespace {
struct Dsu {
  std::vector<int32_t> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int32_t find(int32_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int32_t a, int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[b] = a;
    return true;
  }
};
}  // namespace

RegionIndex Arrangement::regions() const {
  RegionIndex ri;
  ri.faces = faces();
  if (ri.faces.count == 0) {
    ri.count = 1;
    ri.has_void = true;
    return ri;
  }
  Dsu dsu(ri.faces.count);
  for (const auto& m : merges) {
    dsu.unite(ri.faces.face_of[m.host.dart], ri.faces.face_of[m.guest.dart]);
  }
  ri.region_of_face.assign(ri.faces.count, -1);
  for (int32_t f = 0; f < ri.faces.count; ++f) {
    int32_t root = dsu.find(f);
    if (ri.region_of_face[root] == -1) ri.region_of_face[root] = ri.count++;
    ri.region_of_face[f] = ri.region_of_face[root];
  }
  return ri;
}

int32_t Arrangement::face_of_corner(const RegionIndex& ri, CornerRef c) const {
  if (c.dart == kNoDart) return -1;
  return ri.faces.face_of[c.dart];
}

int32_t Arrangement::region_of_corner(const RegionIndex& ri, CornerRef c) const {
  if (c.dart == kNoDart) return ri.has_void ? 0 : -1;
  return ri.region_of_face[ri.faces.face_of[c.dart]];
}

std::vector<DartId> Arrangement::edge_arcs(EdgeId e) const {
  // Collect darts of e grouped by origin.
  std::map<NodeId, std::vector<DartId>> at;
  for (DartId d = 0; d < (DartId)darts.size(); ++d)
    if (darts[d].edge == e) at[darts[d].origin].push_back(d);
  if (at.empty()) return {};
  NodeId start = kNoNode;
  for (const auto& [n, ds] : at)
    if (ds.size() == 1) {
      start = n;
      break;
    }
  if (start == kNoNode) return {};  // cycle; invalid, caught by validate
  std::vector<DartId> path;
  DartId cur = at[start][0];
  size_t total = 0;
  for (const auto& [n, ds] : at) total += ds.size();
  while (true) {
    path.push_back(cur);
    NodeId nxt = target(cur);
    DartId back = twin(cur);
    const auto& ds = at[nxt];
    if (ds.size() == 1) break;  // reached the other endpoint
    DartId onward = kNoDart;
    for (DartId d : ds)
      if (d != back) onward = d;
    if (onward == kNoDart || path.size() * 2 > total) return {};  // malformed
    cur = onward;
  }
  if (path.size() * 2 != total) return {};  // disconnected pieces
  return path;
}

std::pair<NodeId, NodeId> Arrangement::edge_endpoints(EdgeId e) const {
  auto arcs = edge_arcs(e);
  if (arcs.empty()) return {kNoNode, kNoNode};
  return {origin(arcs.front()), target(arcs.back())};
}

std::vector<std::vector<int>> Arrangement::crossing_matrix() const {
  std::vector<std::vector<int>> m(edges.size(), std::vector<int>(edges.size(), 0));
  for (NodeId n = 0; n < (NodeId)nodes.size(); ++n) {
    if (nodes[n].kind != NodeKind::Crossing) continue;
    EdgeId a = darts[rotation[n][0]].edge;
    EdgeId b = darts[rotation[n][1]].edge;
    m[a][b]++;
    m[b][a]++;
  }
  return m;
}

int Arrangement::shared_endpoints(EdgeId a, EdgeId b) const {
  auto [a0, a1] = edge_endpoints(a);
  auto [b0, b1] = edge_endpoints(b);
  if (a0 == kNoNode || b0 == kNoNode) return 0;  // deleted slot
  int s = 0;
  if (a0 == b0 || a0 == b1) ++s;
  if (a1 == b0 || a1 == b1) ++s;
  return s;
}

std::vector<int32_t> Arrangement::node_components() const {
  Dsu dsu((int)nodes.size());
  for (DartId d = 0; d < (DartId)darts.size(); ++d) dsu.unite(darts[d].origin, target(d));
  std::vector<int32_t> comp(nodes.size(), -1);
  int32_t c = 0;
  for (NodeId n = 0; n < (NodeId)nodes.size(); ++n) {
    int32_t r = dsu.find(n);
    if (comp[r] == -1) comp[r] = c++;
    comp[n] = comp[r];
  }
  return comp;
}

std::string Arrangement::validate() const {
  std::ostringstream err;
  auto fail = [&](const std::string& s) { return s; };
  if (rotation.size() != nodes.size()) return fail("rotation/node size mismatch");
  std::vector<int> seen(darts.size(), 0);
  for (NodeId n = 0; n < (NodeId)nodes.size(); ++n) {
    for (DartId d : rotation[n]) {
      if (d < 0 || d >= (DartId)darts.size()) return fail("rotation references bad dart");
      if (darts[d].origin != n) return fail("dart origin disagrees with rotation");
      seen[d]++;
    }
  }
  for (DartId d = 0; d < (DartId)darts.size(); ++d) {
    if (seen[d] != 1) return fail("dart missing from rotation or duplicated");
    DartId t = darts[d].twin;
    if (t < 0 || t >= (DartId)darts.size() || t == d || darts[t].twin != d)
      return fail("twin is not an involution");
    if (darts[d].edge != darts[t].edge) return fail("twin darts on different edges");
    if (darts[d].edge < 0 || darts[d].edge >= (EdgeId)edges.size())
      return fail("dart references bad edge");
  }
  for (NodeId n = 0; n < (NodeId)nodes.size(); ++n) {
    if (nodes[n].kind == NodeKind::Crossing) {
      if (rotation[n].size() != 4) return fail("crossing node degree != 4");
      EdgeId a = darts[rotation[n][0]].edge;
      EdgeId b = darts[rotation[n][1]].edge;
      if (a == b) return fail("self-crossing edge");
      if (edges[a].kind == EdgeKind::Wall || edges[b].kind == EdgeKind::Wall)
        return fail("crossing involves wall edge");
      if (darts[rotation[n][2]].edge != a || darts[rotation[n][3]].edge != b)
        return fail("crossing rotation does not alternate edges");
    }
  }
  for (EdgeId e = 0; e < (EdgeId)edges.size(); ++e) {
    bool has = false;
    for (const auto& d : darts)
      if (d.edge == e) has = true;
    if (!has) continue;  // dead slot after deletion
    auto arcs = edge_arcs(e);
    if (arcs.empty()) return fail("edge arcs do not form a simple open path");
    std::set<NodeId> visited;
    visited.insert(origin(arcs[0]));
    for (DartId d : arcs) {
      if (!visited.insert(target(d)).second) return fail("edge path revisits a node");
    }
    if (nodes[origin(arcs.front())].kind != NodeKind::Vertex ||
        nodes[target(arcs.back())].kind != NodeKind::Vertex)
      return fail("edge endpoint is not a vertex");
  }
  // Euler per dart-bearing component: sum over them of V - A + F == 2 each.
  auto comp = node_components();
  std::set<int32_t> dartComps;
  for (const auto& d : darts) dartComps.insert(comp[d.origin]);
  long V = 0;
  for (NodeId n = 0; n < (NodeId)nodes.size(); ++n)
    if (dartComps.count(comp[n])) ++V;
  long A = (long)darts.size() / 2;
  long F = faces().count;
  if (!dartComps.empty() && V - A + F != 2 * (long)dartComps.size())
    return fail("Euler characteristic violated (not a sphere embedding)");
  // Merges must form a tree over dart-bearing components.
  if (!dartComps.empty()) {
    std::map<int32_t, int32_t> idx;
    for (int32_t c : dartComps) idx.emplace(c, (int32_t)idx.size());
    Dsu dsu((int)idx.size());
    int unions = 0;
    for (const auto& m : merges) {
      if (m.host.dart == kNoDart || m.guest.dart == kNoDart) return fail("merge with void corner");
      int32_t ch = comp[origin(m.host.dart)], cg = comp[origin(m.guest.dart)];
      if (ch == cg) return fail("merge within one component");
      if (!dsu.unite(idx[ch], idx[cg])) return fail("redundant merge");
      ++unions;
    }
    if (unions != (int)idx.size() - 1) return fail("components not connected by merges");
  } else if (!merges.empty()) {
    return fail("merges without darts");
  }
  // Placements: exactly one per degree-0 vertex.
  std::vector<int> pl(nodes.size(), 0);
  for (const auto& p : placements) {
    if (p.node < 0 || p.node >= (NodeId)nodes.size()) return fail("placement of bad node");
    if (!rotation[p.node].empty()) return fail("placement of non-isolated node");
    if (p.corner.dart == kNoDart && !darts.empty()) return fail("void placement with darts present");
    if (p.corner.dart != kNoDart && (p.corner.dart < 0 || p.corner.dart >= (DartId)darts.size()))
      return fail("placement references bad dart");
    pl[p.node]++;
  }
  for (NodeId n = 0; n < (NodeId)nodes.size(); ++n) {
    if (rotation[n].empty() && nodes[n].kind == NodeKind::Vertex && pl[n] != 1)
      return fail("isolated vertex without unique placement");
    if (rotation[n].empty() && nodes[n].kind == NodeKind::Crossing)
      return fail("isolated crossing node");
  }
  for (const auto* c : {&bottom, &top, &outer}) {
    if (c->has_value() && (*c)->dart != kNoDart &&
        ((*c)->dart < 0 || (*c)->dart >= (DartId)darts.size()))
      return fail("mark references bad dart");
  }
  for (NodeId n : anchors)
    if (n < 0 || n >= (NodeId)nodes.size() || !rotation[n].empty())
      return fail("anchor is not a degree-0 vertex");
  (void)err;
  return "";
}

DualGraph build_dual(const Arrangement& a, bool include_walls) {
  DualGraph g;
  g.regions = a.regions();
  g.incident.resize(g.regions.count);
  for (DartId d = 0; d < (DartId)a.darts.size(); ++d) {
    DartId t = a.twin(d);
    if (t < d) continue;
    if (!include_walls && a.is_wall(d)) continue;
    int32_t rf = g.regions.region_of_dart(d);
    int32_t rt = g.regions.region_of_dart(t);
    int32_t li = (int32_t)g.links.size();
    g.links.push_back({rf, rt, d, a.edge_of(d)});
    g.incident[rf].push_back(li);
    if (rt != rf) g.incident[rt].push_back(li);
  }
  return g;
}

std::vector<int> curve_profile(const Arrangement& a, const Curve& c, bool count_endpoints) {
  std::vector<int> prof(a.edges.size(), 0);
  for (DartId d : c.crossings) prof[a.edge_of(d)]++;
  if (count_endpoints) {
    for (NodeId n : {c.start, c.end}) {
      std::set<EdgeId> inc;
      for (DartId d : a.rotation[n]) inc.insert(a.edge_of(d));
      for (EdgeId e : inc)
        if (a.edges[e].kind == EdgeKind::Normal) prof[e]++;
    }
  }
  return prof;
}

namespace {
CornerRef placement_corner(const Arrangement& a, NodeId n) {
  for (const auto& p : a.placements)
    if (p.node == n) return p.corner;
  return {kNoDart};
}
}  // namespace

std::string check_curve(const Arrangement& a, const Curve& c) {
  if (c.start < 0 || c.start >= (NodeId)a.nodes.size() || c.end < 0 ||
      c.end >= (NodeId)a.nodes.size())
    return "bad endpoint node";
  if (c.start == c.end) return "loop curve";
  if (a.nodes[c.start].kind != NodeKind::Vertex || a.nodes[c.end].kind != NodeKind::Vertex)
    return "endpoint is not a vertex";
  auto ri = a.regions();
  auto corner_region = [&](NodeId n, CornerRef corner) -> int32_t {
    if (a.rotation[n].empty()) return a.region_of_corner(ri, placement_corner(a, n));
    if (corner.dart == kNoDart || a.origin(corner.dart) != n) return -1;
    return a.region_of_corner(ri, corner);
  };
  int32_t cur = corner_region(c.start, c.start_corner);
  if (cur < 0) return "start corner does not belong to start vertex";
  std::set<int32_t> seen{cur};
  std::set<DartId> arcs;
  for (DartId d : c.crossings) {
    if (d < 0 || d >= (DartId)a.darts.size()) return "bad crossing dart";
    if (a.is_wall(d)) return "curve crosses wall";
    if (!arcs.insert(std::min(d, a.twin(d))).second) return "curve crosses an arc twice";
    if (ri.region_of_dart(d) != cur) return "crossing not on current region boundary";
    cur = ri.region_of_dart(a.twin(d));
    if (!seen.insert(cur).second) return "curve revisits a region";
  }
  int32_t endr = corner_region(c.end, c.end_corner);
  if (endr < 0) return "end corner does not belong to end vertex";
  if (endr != cur) return "curve does not reach end region";
  return "";
}

EdgeId insert_curve(Arrangement& a, const Curve& c, std::string name) {
  if (!check_curve(a, c).empty()) return kNoEdge;
  EdgeId e = a.add_edge(std::move(name));
  auto attach = [&](NodeId n, CornerRef corner, DartId out) {
    auto& r = a.rotation[n];
    if (r.empty()) {
      r.push_back(out);
      return;
    }
    int i = 0;
    for (; i < (int)r.size(); ++i)
      if (r[i] == corner.dart) break;
    r.insert(r.begin() + i + 1, out);
  };
  NodeId prev = c.start;
  bool prev_is_crossing = false;
  for (DartId d : c.crossings) {
    DartId dt = a.twin(d);
    NodeId na = a.origin(d), nb = a.origin(dt);
    EdgeId old = a.edge_of(d);
    NodeId cn = a.add_node(NodeKind::Crossing);
    // Split the old arc: d keeps (na -> cn), dt keeps (nb -> cn).
    DartId e1 = (DartId)a.darts.size();
    a.darts.push_back({cn, d, old});  // cn -> na
    DartId e2 = (DartId)a.darts.size();
    a.darts.push_back({cn, dt, old});  // cn -> nb
    a.darts[d].twin = e1;
    a.darts[dt].twin = e2;
    (void)na;
    (void)nb;
    // New edge arc from prev to cn.
    DartId q = (DartId)a.darts.size();
    a.darts.push_back({prev, q + 1, e});
    DartId p = (DartId)a.darts.size();
    a.darts.push_back({cn, q, e});
    if (prev_is_crossing)
      a.rotation[prev][0] = q;  // reserved onward slot
    else
      attach(c.start, c.start_corner, q);
    // The curve runs from the face left of d into the face left of dt, so
    // counterclockwise around cn: onward, e2, back (p), e1.
    a.rotation[cn] = {kNoDart, e2, p, e1};
    prev = cn;
    prev_is_crossing = true;
  }
  DartId q = (DartId)a.darts.size();
  a.darts.push_back({prev, q + 1, e});
  DartId p = (DartId)a.darts.size();
  a.darts.push_back({c.end, q, e});
  if (prev_is_crossing)
    a.rotation[prev][0] = q;
  else
    attach(c.start, c.start_corner, q);
  attach(c.end, c.end_corner, p);
  // Endpoints are no longer isolated; drop their placements.
  std::vector<Placement> pls;
  for (const auto& pl : a.placements)
    if (pl.node != c.start && pl.node != c.end) pls.push_back(pl);
  a.placements = std::move(pls);
  // First darts on the sphere give void placements a real face.
  for (auto& pl : a.placements)
    if (pl.corner.dart == kNoDart) pl.corner = {q};
  // Drop merges whose sides were joined into one component.
  auto comp = a.node_components();
  std::vector<FaceMerge> keep;
  for (const auto& m : a.merges)
    if (comp[a.origin(m.host.dart)] != comp[a.origin(m.guest.dart)]) keep.push_back(m);
  a.merges = std::move(keep);
  return e;
}

void delete_edge(Arrangement& a, EdgeId e) {
  // Record, per dart of e, a surviving dart of its face orbit (for remapping
  // corners that referenced the deleted darts).
  auto on_e = [&](DartId d) { return a.edge_of(d) == e; };
  std::vector<DartId> orbit_fallback(a.darts.size(), kNoDart);
  {
    auto fi = a.faces();
    std::vector<DartId> face_surv(fi.count, kNoDart);
    for (DartId d = 0; d < (DartId)a.darts.size(); ++d)
      if (!on_e(d) && face_surv[fi.face_of[d]] == kNoDart) face_surv[fi.face_of[d]] = d;
    for (DartId d = 0; d < (DartId)a.darts.size(); ++d)
      if (on_e(d)) orbit_fallback[d] = face_surv[fi.face_of[d]];
  }
  auto remap_corner = [&](CornerRef c) -> CornerRef {
    if (c.dart != kNoDart && on_e(c.dart)) return {orbit_fallback[c.dart]};
    return c;
  };
  for (auto& p : a.placements) p.corner = remap_corner(p.corner);
  for (auto& m : a.merges) {
    m.host = remap_corner(m.host);
    m.guest = remap_corner(m.guest);
  }
  for (auto* mk : {&a.bottom, &a.top, &a.outer})
    if (mk->has_value()) *mk = remap_corner(**mk);

  std::vector<bool> dead_dart(a.darts.size(), false);
  std::vector<bool> dead_node(a.nodes.size(), false);
  for (DartId d = 0; d < (DartId)a.darts.size(); ++d)
    if (on_e(d)) dead_dart[d] = true;
  // Dissolve crossing nodes of e; rejoin the transversal arcs.
  for (NodeId n = 0; n < (NodeId)a.nodes.size(); ++n) {
    if (a.nodes[n].kind != NodeKind::Crossing) continue;
    std::vector<DartId> mine, other;
    for (DartId d : a.rotation[n]) (on_e(d) ? mine : other).push_back(d);
    if (mine.empty()) continue;
    dead_node[n] = true;
    // other = the two transversal darts from n outward; merge their arcs.
    DartId x = other[0], y = other[1];
    DartId xo = a.twin(x), yo = a.twin(y);
    a.darts[xo].twin = yo;
    a.darts[yo].twin = xo;
    dead_dart[x] = dead_dart[y] = true;
  }
  // Remove e's darts from endpoint vertex rotations; new placements for
  // vertices that become isolated.
  for (NodeId n = 0; n < (NodeId)a.nodes.size(); ++n) {
    if (dead_node[n]) continue;
    auto& r = a.rotation[n];
    std::vector<DartId> kept;
    for (DartId d : r)
      if (!dead_dart[d]) kept.push_back(d);
    if (kept.size() != r.size()) {
      if (kept.empty() && a.nodes[n].kind == NodeKind::Vertex) {
        CornerRef c = {orbit_fallback[r[0]]};
        a.placements.push_back({n, c});
      }
      r = std::move(kept);
    }
  }
  a.edges[e].name.clear();  // dead slot; ids of other edges are stable
  // Compact darts and nodes.
  std::vector<DartId> dmap(a.darts.size(), kNoDart);
  std::vector<NodeId> nmap(a.nodes.size(), kNoNode);
  {
    DartId nd = 0;
    for (DartId d = 0; d < (DartId)a.darts.size(); ++d)
      if (!dead_dart[d]) dmap[d] = nd++;
    NodeId nn = 0;
    for (NodeId n = 0; n < (NodeId)a.nodes.size(); ++n)
      if (!dead_node[n]) nmap[n] = nn++;
  }
  Arrangement b;
  b.edges = a.edges;
  for (NodeId n = 0; n < (NodeId)a.nodes.size(); ++n) {
    if (dead_node[n]) continue;
    b.nodes.push_back(a.nodes[n]);
    std::vector<DartId> r;
    for (DartId d : a.rotation[n]) r.push_back(dmap[d]);
    b.rotation.push_back(std::move(r));
  }
  for (DartId d = 0; d < (DartId)a.darts.size(); ++d) {
    if (dead_dart[d]) continue;
    Dart nd = a.darts[d];
    nd.origin = nmap[nd.origin];
    nd.twin = dmap[nd.twin];
    b.darts.push_back(nd);
  }
  auto map_corner = [&](CornerRef c) -> CornerRef {
    if (c.dart == kNoDart) return c;
    return {dmap[c.dart]};
  };
  for (auto p : a.placements) {
    p.node = nmap[p.node];
    p.corner = map_corner(p.corner);
    b.placements.push_back(p);
  }
  for (auto m : a.merges) {
    m.host = map_corner(m.host);
    m.guest = map_corner(m.guest);
    // merges between now-equal components dropped below
    b.merges.push_back(m);
  }
  b.bottom = a.bottom ? std::optional<CornerRef>(map_corner(*a.bottom)) : std::nullopt;
  b.top = a.top ? std::optional<CornerRef>(map_corner(*a.top)) : std::nullopt;
  b.outer = a.outer ? std::optional<CornerRef>(map_corner(*a.outer)) : std::nullopt;
  for (NodeId n : a.anchors) b.anchors.push_back(nmap[n]);
  a = std::move(b);
}

std::string canonical_encoding(const Arrangement& a) {
  // Per component, BFS over darts from every possible root; take the minimal
  // relabel string.  Edge identity is encoded by first-appearance order, node
  // kinds as colors.
  int D = (int)a.darts.size();
  std::vector<int> compOf(D, -1);
  auto comp = a.node_components();
  std::map<int32_t, std::vector<DartId>> byComp;
  for (DartId d = 0; d < D; ++d) byComp[comp[a.origin(d)]].push_back(d);
  std::vector<std::string> encs;
  for (const auto& [ci, ds] : byComp) {
    (void)ci;
    std::string best;
    for (DartId root : ds) {
      std::vector<int> label(D, -1);
      std::vector<DartId> order;
      label[root] = 0;
      order.push_back(root);
      for (size_t i = 0; i < order.size(); ++i) {
        DartId d = order[i];
        for (DartId nb : {a.twin(d), a.rot_next(d)}) {
          if (label[nb] == -1) {
            label[nb] = (int)order.size();
            order.push_back(nb);
          }
        }
      }
      std::map<EdgeId, int> ecolor;
      std::ostringstream os;
      for (DartId d : order) {
        EdgeId e = a.edge_of(d);
        auto it = ecolor.find(e);
        if (it == ecolor.end()) it = ecolor.emplace(e, (int)ecolor.size()).first;
        os << label[a.twin(d)] << ',' << label[a.rot_next(d)] << ','
           << (a.nodes[a.origin(d)].kind == NodeKind::Crossing ? 'c' : 'v') << ',' << it->second
           << ';';
      }
      std::string s = os.str();
      if (best.empty() || s < best) best = std::move(s);
    }
    encs.push_back(std::move(best));
  }
  std::sort(encs.begin(), encs.end());
  std::ostringstream os;
  int isolated = 0;
  for (NodeId n = 0; n < (NodeId)a.nodes.size(); ++n)
    if (a.rotation[n].empty()) ++isolated;
  os << "iso:" << isolated << '|';
  for (const auto& s : encs) os << s << '|';
  (void)compOf;
  return os.str();
}

}  // namespace topo
