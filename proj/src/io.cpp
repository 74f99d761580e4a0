#include "topo/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace topo {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error("io: " + msg); }

json corner_json(const std::optional<CornerRef>& c) {
  if (!c) return nullptr;
  return c->dart;
}

std::optional<CornerRef> corner_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return CornerRef{j.get<DartId>()};
}

}  // namespace

std::string arrangement_to_json(const Arrangement& a) {
  ordered_json j;
  j["nodes"] = ordered_json::array();
  for (NodeId n = 0; n < (NodeId)a.nodes.size(); ++n)
    j["nodes"].push_back({{"id", n},
                          {"kind", a.nodes[n].kind == NodeKind::Vertex ? "vertex" : "crossing"},
                          {"label", a.nodes[n].label}});
  j["darts"] = ordered_json::array();
  for (DartId d = 0; d < (DartId)a.darts.size(); ++d)
    j["darts"].push_back({{"id", d},
                          {"origin", a.darts[d].origin},
                          {"twin", a.darts[d].twin},
                          {"edge", a.darts[d].edge}});
  j["rotation"] = ordered_json::object();
  for (NodeId n = 0; n < (NodeId)a.rotation.size(); ++n)
    j["rotation"][std::to_string(n)] = a.rotation[n];
  j["edges"] = ordered_json::array();
  for (EdgeId e = 0; e < (EdgeId)a.edges.size(); ++e)
    j["edges"].push_back({{"id", e},
                          {"name", a.edges[e].name},
                          {"kind", a.edges[e].kind == EdgeKind::Wall ? "wall" : "normal"}});
  j["merges"] = ordered_json::array();
  for (const FaceMerge& m : a.merges)
    j["merges"].push_back({{"host", m.host.dart}, {"guest", m.guest.dart}});
  j["placements"] = ordered_json::array();
  for (const Placement& p : a.placements)
    j["placements"].push_back({{"node", p.node}, {"corner", p.corner.dart}});
  j["marked"] = {{"bottom", corner_json(a.bottom)},
                 {"top", corner_json(a.top)},
                 {"outer", corner_json(a.outer)},
                 {"anchors", a.anchors}};
  return j.dump(2) + "\n";
}

Arrangement arrangement_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(std::string("malformed json: ") + e.what());
  }
  Arrangement a;
  try {
    for (const json& n : j.at("nodes")) {
      if (n.at("id").get<NodeId>() != (NodeId)a.nodes.size()) fail("node ids must be 0,1,...");
      std::string kind = n.at("kind").get<std::string>();
      if (kind != "vertex" && kind != "crossing") fail("unknown node kind " + kind);
      a.add_node(kind == "vertex" ? NodeKind::Vertex : NodeKind::Crossing,
                 n.at("label").get<std::string>());
    }
    for (const json& e : j.at("edges")) {
      if (e.at("id").get<EdgeId>() != (EdgeId)a.edges.size()) fail("edge ids must be 0,1,...");
      std::string kind = e.at("kind").get<std::string>();
      if (kind != "normal" && kind != "wall") fail("unknown edge kind " + kind);
      a.add_edge(e.at("name").get<std::string>(),
                 kind == "wall" ? EdgeKind::Wall : EdgeKind::Normal);
    }
    for (const json& d : j.at("darts")) {
      if (d.at("id").get<DartId>() != (DartId)a.darts.size()) fail("dart ids must be 0,1,...");
      Dart dart;
      dart.origin = d.at("origin").get<NodeId>();
      dart.twin = d.at("twin").get<DartId>();
      dart.edge = d.at("edge").get<EdgeId>();
      a.darts.push_back(dart);
    }
    for (const auto& [key, val] : j.at("rotation").items()) {
      NodeId n = (NodeId)std::stol(key);
      if (n < 0 || n >= (NodeId)a.nodes.size()) fail("rotation key out of range");
      a.rotation[n] = val.get<std::vector<DartId>>();
    }
    for (const json& m : j.at("merges"))
      a.merges.push_back(
          {CornerRef{m.at("host").get<DartId>()}, CornerRef{m.at("guest").get<DartId>()}});
    for (const json& p : j.at("placements"))
      a.placements.push_back(
          {p.at("node").get<NodeId>(), CornerRef{p.at("corner").get<DartId>()}});
    const json& marked = j.at("marked");
    a.bottom = corner_from(marked.at("bottom"));
    a.top = corner_from(marked.at("top"));
    a.outer = corner_from(marked.at("outer"));
    a.anchors = marked.at("anchors").get<std::vector<NodeId>>();
  } catch (const json::exception& e) {
    fail(std::string("bad arrangement json: ") + e.what());
  }
  std::string err = a.validate();
  if (!err.empty()) fail("imported arrangement invalid: " + err);
  return a;
}

namespace {

struct Point {
  double x = 0, y = 0;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// Pins the outer face boundary on a circle and relaxes everything else to
// the average of its neighbors.  Components away from the pinned one get
// their own circles, stacked to the right.
std::vector<Point> layout(const Arrangement& a) {
  size_t n = a.nodes.size();
  std::vector<Point> pos(n);
  if (n == 0) return pos;
  std::vector<int32_t> comp = a.node_components();
  int32_t ncomp = 0;
  for (int32_t c : comp) ncomp = std::max(ncomp, c + 1);

  FaceIndex fi = a.faces();
  DartId outer_dart = a.outer && a.outer->dart != kNoDart ? a.outer->dart : kNoDart;
  if (outer_dart == kNoDart && !a.darts.empty()) {
    // largest face by walk length
    std::vector<int> len(fi.count, 0);
    for (DartId d = 0; d < (DartId)a.darts.size(); ++d) ++len[fi.face_of[d]];
    int32_t best = 0;
    for (int32_t f = 1; f < fi.count; ++f)
      if (len[f] > len[best]) best = f;
    outer_dart = fi.canonical[best];
  }

  std::vector<char> pinned(n, 0);
  int32_t pinned_comp = -1;
  if (outer_dart != kNoDart) {
    std::vector<NodeId> ring;
    DartId d = outer_dart;
    do {
      if (!pinned[a.origin(d)]) {
        ring.push_back(a.origin(d));
        pinned[a.origin(d)] = 1;
      }
      d = a.face_next(d);
    } while (d != outer_dart);
    pinned_comp = comp[ring[0]];
    for (size_t i = 0; i < ring.size(); ++i) {
      double t = 2 * M_PI * (double)i / (double)ring.size();
      pos[ring[i]] = {std::cos(t) * 100, std::sin(t) * 100};
    }
  }

  // other components: circles of radius 40 stacked to the right
  std::vector<int> comp_slot(ncomp, -1);
  int slots = 0;
  for (int32_t c = 0; c < ncomp; ++c)
    if (c != pinned_comp) comp_slot[c] = slots++;
  std::vector<int> comp_size(ncomp, 0), comp_seq(ncomp, 0);
  for (NodeId v = 0; v < (NodeId)n; ++v) ++comp_size[comp[v]];
  for (NodeId v = 0; v < (NodeId)n; ++v) {
    if (comp[v] == pinned_comp) continue;
    double cx = 250 + 100 * comp_slot[comp[v]];
    double t = 2 * M_PI * (double)comp_seq[comp[v]]++ / (double)comp_size[comp[v]];
    pos[v] = {cx + std::cos(t) * 40, std::sin(t) * 40};
    pinned[v] = 1;
  }

  std::vector<std::vector<NodeId>> nbr(n);
  for (DartId d = 0; d < (DartId)a.darts.size(); ++d) nbr[a.origin(d)].push_back(a.target(d));
  for (int it = 0; it < 400; ++it)
    for (NodeId v = 0; v < (NodeId)n; ++v) {
      if (pinned[v] || nbr[v].empty()) continue;
      Point s;
      for (NodeId w : nbr[v]) {
        s.x += pos[w].x;
        s.y += pos[w].y;
      }
      pos[v] = {s.x / nbr[v].size(), s.y / nbr[v].size()};
    }
  return pos;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                          "#8c564b", "#17becf", "#e377c2", "#7f7f7f", "#bcbd22"};

}  // namespace

std::string arrangement_to_svg(const Arrangement& a) {
  std::vector<Point> pos = layout(a);
  double minx = -120, miny = -120, maxx = 120, maxy = 120;
  for (const Point& p : pos) {
    minx = std::min(minx, p.x - 20);
    miny = std::min(miny, p.y - 20);
    maxx = std::max(maxx, p.x + 20);
    maxy = std::max(maxy, p.y + 20);
  }
  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fmt(minx) + " " +
                    fmt(miny) + " " + fmt(maxx - minx) + " " + fmt(maxy - miny) + "\">\n";
  for (EdgeId e = 0; e < (EdgeId)a.edges.size(); ++e) {
    std::vector<DartId> arcs = a.edge_arcs(e);
    if (arcs.empty()) continue;
    std::string pts = fmt(pos[a.origin(arcs[0])].x) + "," + fmt(pos[a.origin(arcs[0])].y);
    for (DartId d : arcs) pts += " " + fmt(pos[a.target(d)].x) + "," + fmt(pos[a.target(d)].y);
    bool wall = a.edges[e].kind == EdgeKind::Wall;
    svg += "  <polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" +
           (wall ? "#999999" : kPalette[e % 10]) + "\" stroke-width=\"1.5\"" +
           (wall ? " stroke-dasharray=\"4 3\"" : "") + ">\n    <title>" + a.edges[e].name +
           "</title>\n  </polyline>\n";
  }
  for (NodeId v = 0; v < (NodeId)a.nodes.size(); ++v) {
    bool vertex = a.nodes[v].kind == NodeKind::Vertex;
    svg += "  <circle cx=\"" + fmt(pos[v].x) + "\" cy=\"" + fmt(pos[v].y) + "\" r=\"" +
           (vertex ? "3" : "1.5") + "\" fill=\"" + (vertex ? "#000000" : "#666666") + "\"/>\n";
    if (vertex && !a.nodes[v].label.empty())
      svg += "  <text x=\"" + fmt(pos[v].x + 4) + "\" y=\"" + fmt(pos[v].y - 4) +
             "\" font-size=\"8\">" + a.nodes[v].label + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace topo
