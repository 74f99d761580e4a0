#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "random_drawings.hpp"
#include "topo/codes.hpp"
#include "topo/routing.hpp"
#include "topo/wiring.hpp"

using namespace topo;

namespace {

EdgeId by_name(const Arrangement& a, const std::string& name) {
  for (EdgeId e = 0; e < (EdgeId)a.edges.size(); ++e)
    if (a.edges[e].name == name) return e;
  REQUIRE(false);
  return kNoEdge;
}

// Path from u along the given edges, turning at each consecutive pair's
// unique shared node (an interior crossing of both chains), ending at v.
AnnotatedPath walk_edges(const Arrangement& a, NodeId u, const std::vector<EdgeId>& edges,
                         NodeId v) {
  AnnotatedPath p{u, v, {}};
  NodeId at = u;
  for (size_t i = 0; i < edges.size(); ++i) {
    std::vector<DartId> ch = a.edge_arcs(edges[i]);
    std::vector<NodeId> cn;
    for (DartId d : ch) cn.push_back(a.origin(d));
    cn.push_back(a.target(ch.back()));
    NodeId stop = v;
    if (i + 1 < edges.size()) {
      std::vector<DartId> next = a.edge_arcs(edges[i + 1]);
      std::set<NodeId> on_next;
      for (DartId d : next) {
        on_next.insert(a.origin(d));
        on_next.insert(a.target(d));
      }
      stop = kNoNode;
      for (NodeId n : cn)
        if (n != at && on_next.count(n)) stop = n;
      REQUIRE(stop != kNoNode);
    }
    int ia = -1, is = -1;
    for (int x = 0; x < (int)cn.size(); ++x) {
      if (cn[x] == at) ia = x;
      if (cn[x] == stop) is = x;
    }
    REQUIRE(ia >= 0);
    REQUIRE(is >= 0);
    if (ia < is)
      for (int x = ia; x < is; ++x) p.arcs.push_back(ch[x]);
    else
      for (int x = ia - 1; x >= is; --x) p.arcs.push_back(a.twin(ch[x]));
    at = stop;
  }
  REQUIRE(at == v);
  return p;
}

// Exhaustive lexicographic minimum over all node-simple u-v paths.
void all_paths(const Arrangement& a, NodeId at, NodeId v, std::vector<char>& used,
               AnnotatedPath& cur, std::vector<int>& best, long& visits) {
  if (++visits > 2000000) return;
  if (at == v) {
    std::vector<int> c = code_of(a, cur);
    if (best.empty() || c < best) best = c;
    return;
  }
  for (DartId d : a.rotation[at]) {
    NodeId t = a.target(d);
    if (used[t]) continue;
    used[t] = 1;
    cur.arcs.push_back(d);
    all_paths(a, t, v, used, cur, best, visits);
    cur.arcs.pop_back();
    used[t] = 0;
  }
}

std::vector<int> oracle_min_code(const Arrangement& a, NodeId u, NodeId v) {
  std::vector<char> used(a.nodes.size(), 0);
  used[u] = 1;
  AnnotatedPath cur{u, v, {}};
  std::vector<int> best;
  long visits = 0;
  all_paths(a, u, v, used, cur, best, visits);
  REQUIRE(visits <= 2000000);
  return best;
}

std::vector<NodeId> vertices_of(const Arrangement& a) {
  std::vector<NodeId> vs;
  for (NodeId n = 0; n < (NodeId)a.nodes.size(); ++n)
    if (a.nodes[n].kind == NodeKind::Vertex && !a.rotation[n].empty()) vs.push_back(n);
  return vs;
}

}  // namespace

TEST_CASE("code of a crossing-free single-edge path") {
  WiringDiagram d;
  d.edge_names = {"g"};
  d.events = {{WiringEvent::Birth, 0, 0, -1, "u"}, {WiringEvent::Death, 0, -1, -1, "v"}};
  CompileResult res = compile(d);
  NodeId pu = res.births[0], pv = res.deaths[0];
  AnnotatedPath p = walk_edges(res.arr, pu, {by_name(res.arr, "g")}, pv);
  CHECK(code_of(res.arr, p) == std::vector<int>{0, 0});
  Curve c = perturb_to_curve(res.arr, p, 1);
  std::vector<int> prof = curve_profile(res.arr, c, false);
  CHECK(*std::max_element(prof.begin(), prof.end()) == 0);
}

TEST_CASE("figure-eight chain path code") {
  // chain g1..g7 turning at six crossings, with one extra crossing riding on
  // each of the third, fourth and sixth intervals
  WiringDiagram d;
  d.edge_names = {"g1", "g2", "g3", "g4", "g5", "g6", "g7", "h1", "h2", "h3"};
  auto E = [&](const std::string& n) {
    for (size_t i = 0; i < d.edge_names.size(); ++i)
      if (d.edge_names[i] == n) return (EdgeId)i;
    return kNoEdge;
  };
  auto birth = [&](int slot, const std::string& e, const std::string& lab) {
    d.events.push_back({WiringEvent::Birth, slot, E(e), -1, lab});
  };
  auto cross = [&](int slot) { d.events.push_back({WiringEvent::Cross, slot, kNoEdge, -1, ""}); };
  auto death = [&](int slot, const std::string& lab) {
    d.events.push_back({WiringEvent::Death, slot, -1, -1, lab});
  };
  birth(0, "g1", "u");
  birth(1, "g2", "w1");
  cross(0);      // t1
  death(1, "w2");
  birth(1, "g3", "w3");
  cross(0);      // t2
  death(1, "w4");
  birth(1, "h1", "w5");
  cross(0);      // passing on interval 3
  death(0, "w6");
  birth(1, "g4", "w7");
  cross(0);      // t3
  death(1, "w8");
  birth(1, "h2", "w9");
  cross(0);      // passing on interval 4
  death(0, "w10");
  birth(1, "g5", "w11");
  cross(0);      // t4
  death(1, "w12");
  birth(1, "g6", "w13");
  cross(0);      // t5
  death(1, "w14");
  birth(1, "h3", "w15");
  cross(0);      // passing on interval 6
  death(0, "w16");
  birth(1, "g7", "w17");
  cross(0);      // t6
  death(1, "w18");
  death(0, "v");
  CompileResult res = compile(d);
  const Arrangement& a = res.arr;
  REQUIRE(a.valid());
  AnnotatedPath p = walk_edges(a, res.births[0],
                               {by_name(a, "g1"), by_name(a, "g2"), by_name(a, "g3"),
                                by_name(a, "g4"), by_name(a, "g5"), by_name(a, "g6"),
                                by_name(a, "g7")},
                               res.deaths.back());
  CHECK(code_of(a, p) == std::vector<int>{6, 0, 0, 1, 1, 0, 1, 0});
}

TEST_CASE("surgery minimum matches exhaustive minimum on small drawings") {
  std::mt19937_64 rng(2026);
  int instances = 0;
  while (instances < 40) {
    Arrangement a = random_k_simple(rng, 5, 1);
    if (!a.valid()) continue;
    std::vector<NodeId> vs = vertices_of(a);
    std::vector<int32_t> comp = a.node_components();
    int checked = 0;
    for (size_t i = 0; i < vs.size() && checked < 4; ++i)
      for (size_t j = i + 1; j < vs.size() && checked < 4; ++j) {
        if (comp[vs[i]] != comp[vs[j]]) continue;
        AnnotatedPath mp = minimal_path(a, vs[i], vs[j]);
        CHECK(code_of(a, mp) == oracle_min_code(a, vs[i], vs[j]));
        ++checked;
      }
    if (checked) ++instances;
  }
}

TEST_CASE("perturbed minimal paths stay within twice the simplicity bound") {
  std::mt19937_64 rng(77);
  for (int k : {1, 2}) {
    int instances = 0;
    while (instances < 30) {
      Arrangement a = random_k_simple(rng, 8, k);
      if (!a.valid()) continue;
      std::vector<NodeId> vs = vertices_of(a);
      std::vector<int32_t> comp = a.node_components();
      int checked = 0;
      for (size_t i = 0; i < vs.size() && checked < 6; ++i)
        for (size_t j = i + 1; j < vs.size() && checked < 6; ++j) {
          if (comp[vs[i]] != comp[vs[j]]) continue;
          AnnotatedPath mp = minimal_path(a, vs[i], vs[j]);
          // throws if any edge exceeds 2k crossings
          Curve c = perturb_to_curve(a, mp, k);
          std::vector<int> prof = curve_profile(a, c, false);
          CHECK(*std::max_element(prof.begin(), prof.end()) <= 2 * k);
          ++checked;
        }
      if (checked) ++instances;
    }
  }
}
