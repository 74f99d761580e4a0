#include "topo/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <utility>

#include "topo/blocks.hpp"
#include "topo/routing.hpp"
#include "topo/wiring.hpp"

namespace topo {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error("constructions: " + msg); }

NodeId place_probe(Arrangement& a, CornerRef corner, std::string label) {
  NodeId v = a.add_node(NodeKind::Vertex, std::move(label));
  a.placements.push_back({v, corner});
  return v;
}

// Corner on the unique face whose incident edge set is exactly `names`.
CornerRef face_bounded_by(const Arrangement& a, const std::vector<std::string>& names) {
  std::set<std::string> want(names.begin(), names.end());
  FaceIndex fi = a.faces();
  std::vector<std::set<std::string>> border(fi.count);
  for (DartId d = 0; d < (DartId)a.darts.size(); ++d)
    border[fi.face_of[d]].insert(a.edges[a.edge_of(d)].name);
  for (int32_t f = 0; f < fi.count; ++f)
    if (border[f] == want) return {fi.canonical[f]};
  fail("no face bounded by the requested edges");
}

// Event recorder over a live circular deck; translates contiguous birth and
// death runs plus block emitters into wiring events, remembering which
// boundary tier each terminal vertex belongs to.
struct Stack {
  WiringDiagram d;
  std::vector<EdgeId> live;
  int group_seq = 0;
  std::vector<int> birth_tier, death_tier;

  EdgeId edge(std::string name) {
    d.edge_names.push_back(std::move(name));
    return (EdgeId)d.edge_names.size() - 1;
  }
  std::vector<EdgeId> edges(const std::string& prefix, int count) {
    std::vector<EdgeId> out;
    for (int i = 0; i < count; ++i) out.push_back(edge(prefix + std::to_string(i)));
    return out;
  }
  int pos(EdgeId e) const {
    for (int i = 0; i < (int)live.size(); ++i)
      if (live[i] == e) return i;
    fail("strand not live");
  }

  void births(int p, const std::vector<EdgeId>& run, const std::string& label_suffix,
              int tier = -1) {
    for (int i = 0; i < (int)run.size(); ++i) {
      d.events.push_back(
          {WiringEvent::Birth, p + i, run[i], -1, d.edge_names[run[i]] + label_suffix});
      live.insert(live.begin() + p + i, run[i]);
      birth_tier.push_back(tier);
    }
  }
  void births_shared(int p, const std::vector<EdgeId>& run, const std::string& label,
                     int tier = -1) {
    int g = group_seq++;
    for (int i = 0; i < (int)run.size(); ++i) {
      d.events.push_back({WiringEvent::Birth, p + i, run[i], g, i == 0 ? label : std::string()});
      live.insert(live.begin() + p + i, run[i]);
      birth_tier.push_back(tier);
    }
  }
  void deaths(const std::vector<EdgeId>& run, const std::string& label_suffix, int tier = -1) {
    for (EdgeId e : run) {
      int p = pos(e);
      d.events.push_back({WiringEvent::Death, p, kNoEdge, -1, d.edge_names[e] + label_suffix});
      live.erase(live.begin() + p);
      death_tier.push_back(tier);
    }
  }
  void block(const std::string& name, const std::function<void(DeckOps&)>& f) {
    d.events.push_back({WiringEvent::Boundary, 0, kNoEdge, -1, name});
    DeckOps ops(d, live);
    f(ops);
    live = ops.order();
  }

  Construction finish(int n_tiers, bool probes) {
    if (!live.empty()) fail("open strands at end of stack");
    CompileResult res = compile(d);
    Construction c;
    c.arr = std::move(res.arr);
    c.tiers.resize(n_tiers);
    auto take = [&](const std::vector<NodeId>& nodes, const std::vector<int>& tier) {
      for (int i = 0; i < (int)nodes.size(); ++i) {
        if (tier[i] < 0) continue;
        auto& t = c.tiers[tier[i]];
        if (t.empty() || t.back() != nodes[i]) t.push_back(nodes[i]);
      }
    };
    take(res.births, birth_tier);
    take(res.deaths, death_tier);
    if (probes) {
      c.x = place_probe(c.arr, *c.arr.bottom, "x");
      c.y = place_probe(c.arr, *c.arr.top, "y");
    }
    return c;
  }
};

}  // namespace

Construction weak76(int k) {
  if (k < 2) fail("weak76 needs k >= 2");
  Stack s;
  EdgeId a1 = s.edge("a1"), a2 = s.edge("a2");
  EdgeId b1 = s.edge("b1"), b2 = s.edge("b2");
  EdgeId c1 = s.edge("c1"), c2 = s.edge("c2");
  s.births(0, {a1, a2}, "_lo");
  s.block("A", [&](DeckOps& o) { emit_spiral(o, {a1}, {a2}, k); });
  s.births(s.pos(a2) + 1, {b1, b2}, "_lo");
  s.block("B", [&](DeckOps& o) { emit_spiral(o, {a1, a2}, {b1, b2}, k); });
  s.deaths({a1, a2}, "_hi");
  s.block("C", [&](DeckOps& o) { emit_spiral(o, {b1}, {b2}, k); });
  s.births(s.pos(b2) + 1, {c1, c2}, "_lo");
  s.block("D", [&](DeckOps& o) { emit_spiral(o, {b1, b2}, {c1, c2}, k); });
  s.deaths({b1, b2}, "_hi");
  s.block("E", [&](DeckOps& o) { emit_spiral(o, {c1}, {c2}, k); });
  s.deaths({c1, c2}, "_hi");
  return s.finish(0, /*probes=*/true);
}

Construction construction_2k_minus_1(int k) {
  if (k < 1) fail("construction_2k_minus_1 needs k >= 1");
  int m = 1 << (2 * k);
  Stack s;
  std::vector<std::vector<EdgeId>> fam(k + 1);
  for (int i = 1; i <= k; ++i) fam[i] = s.edges("a" + std::to_string(i) + "_", m);

  s.births(0, fam[1], "_lo");
  s.block("F1", [&](DeckOps& o) { emit_forcing(o, fam[1], k); });
  for (int i = 1; i < k; ++i) {
    s.births(s.pos(fam[i].back()) + 1, fam[i + 1], "_lo");
    s.block("S" + std::to_string(i),
            [&](DeckOps& o) { emit_spiral(o, fam[i], fam[i + 1], k); });
    s.deaths(fam[i], "_hi");
    s.block("F" + std::to_string(i + 1), [&](DeckOps& o) { emit_forcing(o, fam[i + 1], k); });
  }
  s.deaths(fam[k], "_hi");
  return s.finish(0, /*probes=*/true);
}

Construction construction_2k(int k) {
  if (k < 1) fail("construction_2k needs k >= 1");
  int m = 1 << (2 * k);
  Stack s;
  std::vector<std::vector<EdgeId>> ga(2 * k + 1), gb(2 * k + 1);
  for (int i = 1; i <= 2 * k; ++i) {
    ga[i] = s.edges("a" + std::to_string(i) + "_", m);
    gb[i] = s.edges("b" + std::to_string(i) + "_", m);
  }

  s.births(0, ga[1], "_lo");
  s.births(m, gb[1], "_lo");
  s.block("D1", [&](DeckOps& o) { emit_double_forcing(o, ga[1], gb[1], k); });
  for (int i = 1; i < 2 * k; ++i) {
    s.births(s.pos(ga[i].back()) + 1, ga[i + 1], "_lo");
    s.births(s.pos(gb[i].back()) + 1, gb[i + 1], "_lo");
    s.block("G" + std::to_string(i),
            [&](DeckOps& o) { emit_grid(o, {ga[i], gb[i]}, {ga[i + 1], gb[i + 1]}, k); });
    s.deaths(ga[i], "_hi");
    s.deaths(gb[i], "_hi");
    s.block("D" + std::to_string(i + 1),
            [&](DeckOps& o) { emit_double_forcing(o, ga[i + 1], gb[i + 1], k); });
  }
  s.deaths(ga[2 * k], "_hi");
  s.deaths(gb[2 * k], "_hi");
  return s.finish(0, /*probes=*/true);
}

namespace {

// One fixture copy, built directly as a map.  Two triples of hook edges fence
// off an inner face (the a hooks) and an outer face (the b hooks), with a
// staggered two-ring corridor of six side pockets between them.  Each hook
// runs tip - corridor arc - radial wall - ring arc - tip, so a pocket in the
// inner ring is entered only across its own a edge and a pocket in the outer
// ring only across its own b edge; any walk from the inner face to the outer
// face must pay one of those tolls twice.
std::vector<NodeId> append_fixture(Arrangement& arr, const std::string& p) {
  auto m3 = [](int v) { return ((v % 3) + 3) % 3; };
  // a[j] crosses b[j] and b[j-1]; shifting the printed b names by one keeps
  // same-index pairs disjoint
  EdgeId a[3], b[3];
  for (int j = 0; j < 3; ++j) a[j] = arr.add_edge(p + "a" + std::to_string(j + 1));
  for (int k = 0; k < 3; ++k) b[m3(k + 1)] = arr.add_edge(p + "b" + std::to_string(k + 1));
  auto name = [&](EdgeId e) { return arr.edges[e].name; };

  // xc[j]: corner of the inner face at wall j; tj[j]: top of wall j where
  // b[j-1]'s corridor arc ends; bj[j]: foot of b[j]'s outward wall; yc[j]:
  // corner of the outer face
  NodeId xc[3], tj[3], bj[3], yc[3], ua[3], va[3], wb[3], zb[3];
  for (int j = 0; j < 3; ++j) {
    xc[j] = arr.add_node(NodeKind::Crossing);
    tj[j] = arr.add_node(NodeKind::Crossing);
    bj[j] = arr.add_node(NodeKind::Crossing);
    yc[j] = arr.add_node(NodeKind::Crossing);
  }
  for (int j = 0; j < 3; ++j) {
    ua[j] = arr.add_node(NodeKind::Vertex, name(a[j]) + "_s");
    va[j] = arr.add_node(NodeKind::Vertex, name(a[j]) + "_t");
    wb[j] = arr.add_node(NodeKind::Vertex, name(b[j]) + "_s");
    zb[j] = arr.add_node(NodeKind::Vertex, name(b[j]) + "_t");
  }

  DartId da[3][5][2], db[3][5][2];  // [hook][arc][forward/backward]
  for (int j = 0; j < 3; ++j)
    for (int s = 0; s < 5; ++s) {
      std::tie(da[j][s][0], da[j][s][1]) = arr.add_dart_pair(a[j]);
      std::tie(db[j][s][0], db[j][s][1]) = arr.add_dart_pair(b[j]);
    }
  for (int j = 0; j < 3; ++j) {
    int jn = m3(j + 1);
    NodeId an[6] = {ua[j], bj[j], tj[j], xc[j], xc[jn], va[j]};
    NodeId bn[6] = {wb[j], tj[jn], bj[j], yc[j], yc[jn], zb[j]};
    for (int s = 0; s < 5; ++s) {
      arr.darts[da[j][s][0]].origin = an[s];
      arr.darts[da[j][s][1]].origin = an[s + 1];
      arr.darts[db[j][s][0]].origin = bn[s];
      arr.darts[db[j][s][1]].origin = bn[s + 1];
    }
  }
  // counterclockwise rotations; crossings alternate their two edges
  for (int j = 0; j < 3; ++j) {
    int jp = m3(j - 1);
    arr.rotation[xc[j]] = {da[j][3][0], da[jp][4][0], da[j][2][1], da[jp][3][1]};
    arr.rotation[tj[j]] = {da[j][1][1], db[jp][1][0], da[j][2][0], db[jp][0][1]};
    arr.rotation[bj[j]] = {db[j][1][1], da[j][0][1], db[j][2][0], da[j][1][0]};
    arr.rotation[yc[j]] = {db[j][3][0], db[jp][3][1], db[j][2][1], db[jp][4][0]};
    arr.rotation[ua[j]] = {da[j][0][0]};
    arr.rotation[va[j]] = {da[j][4][1]};
    arr.rotation[wb[j]] = {db[j][0][0]};
    arr.rotation[zb[j]] = {db[j][4][1]};
  }
  std::vector<NodeId> terminals;
  for (int j = 0; j < 3; ++j) terminals.insert(terminals.end(), {ua[j], va[j], wb[j], zb[j]});
  return terminals;
}

}  // namespace

Construction fixture_G() {
  Construction c;
  append_fixture(c.arr, "");
  // x sits in the region enclosed by the mutually crossing a edges, y in the
  // one enclosed by the b edges; no curve joins them crossing each edge once
  CornerRef inner = face_bounded_by(c.arr, {"a1", "a2", "a3"});
  CornerRef outer = face_bounded_by(c.arr, {"b1", "b2", "b3"});
  c.arr.bottom = inner;
  c.arr.top = outer;
  c.x = place_probe(c.arr, inner, "x");
  c.y = place_probe(c.arr, outer, "y");
  return c;
}

Construction nested_saturated_seed(int n) {
  if (n < 12) fail("nested_saturated_seed needs n >= 12");
  int copies = n / 12;
  int extra = n - 12 * copies;
  Construction c;
  c.tiers.resize(copies + (extra ? 1 : 0));
  for (int j = 1; j <= copies; ++j)
    c.tiers[j - 1] = append_fixture(c.arr, "c" + std::to_string(j) + "_");
  // each copy sits in the inner (a-bounded) region of the copy outside it,
  // with its own b-bounded region facing outward
  auto pure = [&](int j, char side) {
    std::string p = "c" + std::to_string(j) + "_" + side;
    return face_bounded_by(c.arr, {p + "1", p + "2", p + "3"});
  };
  for (int j = 2; j <= copies; ++j) c.arr.merges.push_back({pure(j - 1, 'a'), pure(j, 'b')});
  for (int i = 0; i < extra; ++i)
    c.tiers[copies].push_back(place_probe(c.arr, pure(copies, 'a'), "w" + std::to_string(i)));
  return c;
}

Construction ladder_seed(int n, int k, LadderVariant variant) {
  if (k < 2) fail("ladder_seed needs k >= 2");
  Stack s;
  int bundles;
  if (variant == LadderVariant::Path) {
    if (n < 3 || n % 3) fail("ladder_seed path variant needs n divisible by 3");
    bundles = n / 3;
  } else {
    if (n < 4 || n % 4) fail("ladder_seed matching variant needs n divisible by 4");
    bundles = n / 4;
  }
  int inner = variant == LadderVariant::Path ? k - 1 : k;

  std::vector<EdgeId> al(bundles + 1), be(bundles + 1);
  for (int i = 1; i <= bundles; ++i) {
    al[i] = s.edge("al" + std::to_string(i));
    be[i] = s.edge("be" + std::to_string(i));
  }
  for (int i = 1; i <= bundles; ++i) {
    int p = i == 1 ? 0 : s.pos(be[i - 1]) + 1;
    if (variant == LadderVariant::Path)
      s.births_shared(p, {al[i], be[i]}, "u" + std::to_string(i), 0);
    else
      s.births(p, {al[i], be[i]}, "_lo", 0);
    if (i > 1) {
      s.block("A" + std::to_string(i - 1),
              [&](DeckOps& o) { emit_spiral(o, {al[i - 1], be[i - 1]}, {al[i], be[i]}, k); });
      s.deaths({al[i - 1], be[i - 1]}, "_hi", 0);
    }
    s.block("B" + std::to_string(i), [&](DeckOps& o) { emit_spiral(o, {al[i]}, {be[i]}, inner); });
  }
  s.deaths({al[bundles], be[bundles]}, "_hi", 0);
  return s.finish(1, /*probes=*/true);
}

namespace {

Construction bundle_chain(int n, int per_bundle, int vertices_per_bundle,
                          const std::function<void(DeckOps&, const std::vector<EdgeId>&)>& inner,
                          int spiral_m) {
  if (n < vertices_per_bundle || n % vertices_per_bundle)
    fail("bundle seed needs n divisible by " + std::to_string(vertices_per_bundle));
  int bundles = n / vertices_per_bundle;
  Stack s;
  std::vector<std::vector<EdgeId>> bun(bundles + 1);
  for (int i = 1; i <= bundles; ++i) bun[i] = s.edges("e" + std::to_string(i) + "_", per_bundle);
  for (int i = 1; i <= bundles; ++i) {
    int p = i == 1 ? 0 : s.pos(bun[i - 1].back()) + 1;
    s.births(p, bun[i], "_lo", 0);
    if (i > 1) {
      s.block("A" + std::to_string(i - 1),
              [&](DeckOps& o) { emit_spiral(o, bun[i - 1], bun[i], spiral_m); });
      s.deaths(bun[i - 1], "_hi", 0);
    }
    s.block("B" + std::to_string(i), [&](DeckOps& o) { inner(o, bun[i]); });
  }
  s.deaths(bun[bundles], "_hi", 0);
  return s.finish(1, /*probes=*/true);
}

}  // namespace

Construction bundle_seed_k2(int n) {
  return bundle_chain(
      n, 16, 32, [](DeckOps& o, const std::vector<EdgeId>& b) { emit_forcing(o, b, 2); }, 2);
}

Construction bundle_seed_k3(int n) {
  return bundle_chain(
      n, 4, 8,
      [](DeckOps& o, const std::vector<EdgeId>& b) {
        emit_grid(o, {{b[0]}, {b[2]}}, {{b[1]}, {b[3]}}, 3);
      },
      3);
}

Construction three_halves_saturated(int k) {
  if (k < 1) fail("three_halves_saturated needs k >= 1");
  int m = 1 << (2 * k);
  Stack s;
  auto a1 = s.edges("a1_", m), b1 = s.edges("b1_", m);
  auto a2 = s.edges("a2_", m), b2 = s.edges("b2_", m);

  s.births(0, a1, "_lo", 0);
  s.births(m, b1, "_lo", 0);
  s.block("D1", [&](DeckOps& o) { emit_double_forcing(o, a1, b1, k); });
  s.births(s.pos(a1.back()) + 1, a2, "_lo", 1);
  s.births(s.pos(b1.back()) + 1, b2, "_lo", 1);
  s.block("G", [&](DeckOps& o) { emit_grid(o, {a1, b1}, {a2, b2}, k); });
  s.deaths(a1, "_hi", 2);
  s.deaths(b1, "_hi", 2);
  s.block("D2", [&](DeckOps& o) { emit_double_forcing(o, a2, b2, k); });
  s.deaths(a2, "_hi", 3);
  s.deaths(b2, "_hi", 3);
  Construction c = s.finish(4, /*probes=*/false);
  Arrangement& arr = c.arr;

  // node ids shift when an edge is ripped out, so pairs are tracked by the
  // unique labels of their terminal vertices
  auto label_of = [&](NodeId n) { return arr.nodes[n].label; };
  auto find_node = [&](const std::string& lab) {
    for (NodeId n = 0; n < (NodeId)arr.nodes.size(); ++n)
      if (arr.nodes[n].kind == NodeKind::Vertex && arr.nodes[n].label == lab) return n;
    fail("lost track of a labelled vertex");
  };
  std::vector<std::vector<std::string>> tier_labels(4);
  for (int t = 0; t < 4; ++t)
    for (NodeId n : c.tiers[t]) tier_labels[t].push_back(label_of(n));

  std::set<std::pair<std::string, std::string>> adjacent;
  for (EdgeId e = 0; e < (EdgeId)arr.edges.size(); ++e) {
    auto [u, v] = arr.edge_endpoints(e);
    adjacent.insert(std::minmax(label_of(u), label_of(v)));
  }
  using Pair = std::pair<std::string, std::string>;
  std::vector<Pair> queue;
  auto enqueue_tiers = [&](int i, int j) {
    for (int ui = 0; ui < (int)tier_labels[i].size(); ++ui)
      for (int vi = i == j ? ui + 1 : 0; vi < (int)tier_labels[j].size(); ++vi) {
        Pair key = std::minmax(tier_labels[i][ui], tier_labels[j][vi]);
        if (adjacent.insert(key).second) queue.push_back(key);
      }
  };
  // distance-two tiers first, as in the source construction, then the rest
  enqueue_tiers(0, 2);
  enqueue_tiers(1, 3);
  for (int i = 0; i < 4; ++i) enqueue_tiers(i, i);
  for (int i = 0; i < 3; ++i) enqueue_tiers(i, i + 1);

  std::map<EdgeId, Pair> routed;  // edge ids stay stable across rip-outs
  int rips = 0;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    Pair p = queue[qi];
    NodeId u = find_node(p.first), v = find_node(p.second);
    std::vector<int> budget(arr.edges.size(), k);
    RouteResult r = exists_curve(arr, u, v, budget, /*count_endpoints=*/true);
    if (r.status != RouteStatus::Found) {
      // rip up and reroute: find a route over-loading only added edges, rip
      // those out, route this pair, and requeue the ripped pairs
      std::vector<int> relaxed = budget;
      for (auto& [e, rp] : routed) relaxed[e] = k + 8;
      RouteResult r2 = exists_curve(arr, u, v, relaxed, /*count_endpoints=*/true);
      if (r2.status != RouteStatus::Found)
        fail("three_halves_saturated could not add an intended edge");
      std::vector<int> prof = curve_profile(arr, r2.curve, /*count_endpoints=*/true);
      std::vector<EdgeId> rip;
      for (auto& [e, rp] : routed)
        if (prof[e] > k) rip.push_back(e);
      rips += (int)rip.size();
      if (rip.empty() || rips > 64) fail("three_halves_saturated rerouting did not settle");
      for (EdgeId e : rip) {
        queue.push_back(routed.at(e));
        routed.erase(e);
        delete_edge(arr, e);
      }
      u = find_node(p.first);
      v = find_node(p.second);
      budget.assign(arr.edges.size(), k);
      r = exists_curve(arr, u, v, budget, /*count_endpoints=*/true);
      if (r.status != RouteStatus::Found)
        fail("three_halves_saturated could not add an intended edge");
    }
    EdgeId e = insert_curve(arr, r.curve, "s_" + p.first + "_" + p.second);
    routed[e] = p;
  }
  for (int t = 0; t < 4; ++t) {
    c.tiers[t].clear();
    for (const std::string& lab : tier_labels[t]) c.tiers[t].push_back(find_node(lab));
  }
  return c;
}

namespace {

// Direct sweep assembly for the annulus trees; the deck mirrors the
// builder's live slots with unique strand tags.
struct Pseudo {
  Arrangement arr;
  std::vector<NodeId> anchors;
  int group_seq = 0, anchor_seq = 0, end_seq = 0;
};

struct Sub {
  std::unique_ptr<SweepBuilder> b;
  std::vector<int> deck;
};

void pb_swap(SweepBuilder& b, std::vector<int>& deck, int p) {
  b.cross(p);
  std::swap(deck[p], deck[(p + 1) % deck.size()]);
}

int pb_cable_start(const std::vector<int>& deck, const std::vector<int>& cable) {
  int n = (int)deck.size();
  for (int p = 0; p < n; ++p) {
    if (deck[p] != cable[0]) continue;
    bool ok = true;
    for (int i = 1; i < (int)cable.size() && ok; ++i) ok = deck[(p + i) % n] == cable[i];
    if (ok) return p;
  }
  fail("pseudoline cable not contiguous");
}

void pb_spiral(SweepBuilder& b, std::vector<int>& deck, const std::vector<int>& ca,
               const std::vector<int>& cb, int m) {
  int n = (int)deck.size();
  for (int it = 0; it < m; ++it) {
    int p = pb_cable_start(deck, cb);
    for (int i = (int)cb.size() - 1; i >= 0; --i)
      for (int j = 0; j < (int)ca.size(); ++j) pb_swap(b, deck, (p + i + j) % n);
  }
}

// One doubled curve pair around an anchor: two edges of two strands each,
// both strands of an edge folded at a shared vertex, spiralling spir times.
Sub pseudo_leaf(Pseudo& P, int spir, const std::string& name, int& tag_seq) {
  Sub s{std::make_unique<SweepBuilder>(P.arr), {}};
  EdgeId e1 = P.arr.add_edge(name + "_1"), e2 = P.arr.add_edge(name + "_2");
  int g1 = P.group_seq++, g2 = P.group_seq++;
  s.b->birth(0, e1, g1, name + "_1f");
  s.b->birth(1, e1, g1);
  s.b->birth(2, e2, g2, name + "_2f");
  s.b->birth(3, e2, g2);
  s.deck = {tag_seq, tag_seq + 1, tag_seq + 2, tag_seq + 3};
  tag_seq += 4;
  NodeId x = P.arr.add_node(NodeKind::Vertex, "x" + std::to_string(P.anchor_seq++));
  P.arr.placements.push_back({x, s.b->start_corner()});
  P.anchors.push_back(x);
  pb_spiral(*s.b, s.deck, {s.deck[0], s.deck[1]}, {s.deck[2], s.deck[3]}, spir);
  return s;
}

Sub pseudo_join(Pseudo& P, Sub left, Sub right, int spir) {
  Sub s{std::make_unique<SweepBuilder>(P.arr), {}};
  s.b->graft(*left.b, 0);
  s.deck = left.deck;
  s.b->graft(*right.b, (int)s.deck.size());
  s.deck.insert(s.deck.end(), right.deck.begin(), right.deck.end());
  pb_spiral(*s.b, s.deck, left.deck, right.deck, spir);
  return s;
}

Construction pseudo_close(Pseudo& P, Sub top) {
  while (top.b->live()) top.b->death(0, -1, "inf" + std::to_string(P.end_seq++));
  P.arr.outer = top.b->end_corner();
  top.b->finish();
  std::string err = P.arr.validate();
  if (!err.empty()) fail("pseudoline arrangement invalid: " + err);
  Construction c;
  c.arr = std::move(P.arr);
  c.arr.anchors = P.anchors;
  return c;
}

}  // namespace

Construction pseudo_forcing_small(int k) {
  if (k < 4 || k % 4) fail("pseudo_forcing_small needs k divisible by 4");
  int spir = k / 4, tags = 0;
  Pseudo P;
  Sub a1 = pseudo_leaf(P, spir, "g1", tags);
  Sub a2 = pseudo_leaf(P, spir, "g2", tags);
  Sub a3 = pseudo_leaf(P, spir, "g3", tags);
  Sub b = pseudo_join(P, std::move(a1), std::move(a2), spir);
  Sub c = pseudo_join(P, std::move(b), std::move(a3), spir);
  return pseudo_close(P, std::move(c));
}

Construction pseudo_forcing_iterated(int k, int m) {
  if (k < 4 || k % 4) fail("pseudo_forcing_iterated needs k divisible by 4");
  if (m < 0) fail("pseudo_forcing_iterated needs m >= 0");
  int spir = k / 4, tags = 0;
  Pseudo P;
  std::function<Sub(int, const std::string&)> rec = [&](int depth, const std::string& name) {
    if (depth == 0) return pseudo_leaf(P, spir, name, tags);
    Sub l = rec(depth - 1, name + "0");
    Sub r = rec(depth - 1, name + "1");
    return pseudo_join(P, std::move(l), std::move(r), spir);
  };
  return pseudo_close(P, rec(m, "p"));
}

}  // namespace topo
