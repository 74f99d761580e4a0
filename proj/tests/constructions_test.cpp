#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>

#include "topo/constructions.hpp"
#include "topo/routing.hpp"

using namespace topo;

namespace {

int max_common(const Arrangement& a) {
  auto cm = a.crossing_matrix();
  int n = 0;
  for (EdgeId i = 0; i < (EdgeId)cm.size(); ++i)
    for (EdgeId j = i + 1; j < (EdgeId)cm.size(); ++j)
      n = std::max(n, cm[i][j] + a.shared_endpoints(i, j));
  return n;
}

int total_crossings(const Arrangement& a) {
  auto cm = a.crossing_matrix();
  int n = 0;
  for (size_t i = 0; i < cm.size(); ++i)
    for (size_t j = i + 1; j < cm.size(); ++j) n += cm[i][j];
  return n;
}

int vertex_count(const Arrangement& a) {
  int n = 0;
  for (const Node& v : a.nodes)
    if (v.kind == NodeKind::Vertex) ++n;
  return n;
}

EdgeId by_name(const Arrangement& a, const std::string& name) {
  for (EdgeId e = 0; e < (EdgeId)a.edges.size(); ++e)
    if (a.edges[e].name == name) return e;
  REQUIRE(false);
  return kNoEdge;
}

int refuted_budget(const Arrangement& a, NodeId u, NodeId v, int budget) {
  std::vector<int> b(a.edges.size(), budget);
  RouteResult r = exists_curve(a, u, v, b, /*count_endpoints=*/true);
  REQUIRE(r.status != RouteStatus::CapExceeded);
  return r.status == RouteStatus::Refuted;
}

}  // namespace

TEST_CASE("weak76 shape and simplicity") {
  Construction c = weak76(3);
  CHECK(c.arr.valid());
  CHECK(c.arr.edges.size() == 6);
  CHECK(max_common(c.arr) <= 3);
  // each adjacent pair of doubled curves spirals k times
  auto cm = c.arr.crossing_matrix();
  CHECK(cm[by_name(c.arr, "a1")][by_name(c.arr, "a2")] == 3);
  CHECK(cm[by_name(c.arr, "a1")][by_name(c.arr, "b2")] == 3);
  CHECK(cm[by_name(c.arr, "a1")][by_name(c.arr, "c1")] == 0);
}

TEST_CASE("weak76 lower bound: every transversal loads some edge") {
  Construction c = weak76(2);
  // ceil(7(k-1)/6) = 2 for k = 2: no x-y curve with all loads <= 1
  CHECK(refuted_budget(c.arr, c.x, c.y, 1));
  BestCurveResult b = best_curve(c.arr, c.x, c.y, /*count_endpoints=*/true);
  REQUIRE(b.status == RouteStatus::Found);
  CHECK(b.optimum >= 2);
}

TEST_CASE("free family, odd stage count") {
  Construction c = construction_2k_minus_1(1);
  CHECK(c.arr.valid());
  CHECK(c.arr.edges.size() == 4);
  CHECK(max_common(c.arr) <= 1);
  BestCurveResult b = best_curve(c.arr, c.x, c.y, /*count_endpoints=*/true);
  REQUIRE(b.status == RouteStatus::Found);
  CHECK(b.optimum == 1);
}

TEST_CASE("free family, even stage count") {
  Construction c = construction_2k(1);
  CHECK(c.arr.valid());
  CHECK(c.arr.edges.size() == 16);
  CHECK(max_common(c.arr) <= 1);
  BestCurveResult b = best_curve(c.arr, c.x, c.y, /*count_endpoints=*/true);
  REQUIRE(b.status == RouteStatus::Found);
  CHECK(b.optimum == 2);
}

TEST_CASE("fixture shape") {
  Construction c = fixture_G();
  REQUIRE(c.arr.valid());
  CHECK(c.arr.edges.size() == 6);
  CHECK(vertex_count(c.arr) == 14);  // 12 endpoints + 2 probes
  CHECK(total_crossings(c.arr) == 12);
  CHECK(max_common(c.arr) <= 1);
  auto cm = c.arr.crossing_matrix();
  EdgeId a[4], b[4];
  for (int i = 1; i <= 3; ++i) {
    a[i] = by_name(c.arr, "a" + std::to_string(i));
    b[i] = by_name(c.arr, "b" + std::to_string(i));
  }
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      CHECK(cm[a[i]][b[j]] == (i == j ? 0 : 1));
      if (j > i) {
        CHECK(cm[a[i]][a[j]] == 1);
        CHECK(cm[b[i]][b[j]] == 1);
      }
    }
}

TEST_CASE("fixture regions force a double crossing") {
  Construction c = fixture_G();
  // any x-y curve meets some edge at least twice
  CHECK(refuted_budget(c.arr, c.x, c.y, 1));
  BestCurveResult b = best_curve(c.arr, c.x, c.y, /*count_endpoints=*/true);
  REQUIRE(b.status == RouteStatus::Found);
  CHECK(b.optimum == 2);
  // 8 regions total: inner, outer, and six side pockets
  RegionIndex ri = c.arr.regions();
  CHECK(ri.count == 8);

  // region adjacency discipline behind the refutation: the inner face meets
  // only a edges, the outer face only b edges, they never share an arc, and
  // each inner pocket opens into exactly two outer pockets
  DualGraph dual = build_dual(c.arr);
  int inner = c.arr.region_of_corner(ri, *c.arr.bottom);
  int outer = c.arr.region_of_corner(ri, *c.arr.top);
  auto neighbors = [&](int r, char edge_family) {
    std::set<int> out;
    for (int li : dual.incident[r]) {
      const DualLink& ln = dual.links[li];
      int other = ln.from == r ? ln.to : ln.from;
      if (other == r) continue;  // arcs with the same pocket on both sides
      CHECK(c.arr.edges[ln.edge].name[0] == edge_family);
      out.insert(other);
    }
    return out;
  };
  std::set<int> ring_a = neighbors(inner, 'a');
  std::set<int> ring_b = neighbors(outer, 'b');
  CHECK(ring_a.size() == 3);
  CHECK(ring_b.size() == 3);
  CHECK(!ring_a.count(outer));
  CHECK(!ring_b.count(inner));
  for (int r : ring_a) {
    std::set<int> hits;
    for (int li : dual.incident[r]) {
      const DualLink& ln = dual.links[li];
      int other = ln.from == r ? ln.to : ln.from;
      if (ring_b.count(other)) hits.insert(other);
    }
    CHECK(hits.size() == 2);
  }
}

TEST_CASE("nested seed separates copies") {
  Construction c = nested_saturated_seed(25);
  REQUIRE(c.arr.valid());
  CHECK(c.arr.edges.size() == 12);
  CHECK(c.tiers.size() == 3);
  CHECK(c.tiers[0].size() == 12);
  CHECK(c.tiers[1].size() == 12);
  CHECK(c.tiers[2].size() == 1);
  CHECK(max_common(c.arr) <= 1);
  // crossing from an innermost leftover vertex to the outer copy is blocked
  // at budget 1 on the middle copy's edges alone
  std::vector<int> budget(c.arr.edges.size(), 99);
  for (EdgeId e = 0; e < (EdgeId)c.arr.edges.size(); ++e)
    if (c.arr.edges[e].name.rfind("c2_", 0) == 0) budget[e] = 1;
  RouteResult r =
      exists_curve(c.arr, c.tiers[2][0], c.tiers[0][0], budget, /*count_endpoints=*/false);
  CHECK(r.status == RouteStatus::Refuted);
}

TEST_CASE("ladder seeds") {
  Construction p = ladder_seed(9, 5, LadderVariant::Path);
  REQUIRE(p.arr.valid());
  CHECK(p.arr.edges.size() == 6);
  CHECK(p.tiers[0].size() == 9);
  CHECK(max_common(p.arr) <= 5);
  // bundle mates share a vertex and spiral k-1 times
  auto cm = p.arr.crossing_matrix();
  CHECK(cm[by_name(p.arr, "al1")][by_name(p.arr, "be1")] == 4);
  CHECK(p.arr.shared_endpoints(by_name(p.arr, "al1"), by_name(p.arr, "be1")) == 1);
  CHECK(cm[by_name(p.arr, "al1")][by_name(p.arr, "be2")] == 5);

  Construction m = ladder_seed(12, 4, LadderVariant::Matching);
  REQUIRE(m.arr.valid());
  CHECK(m.arr.edges.size() == 6);
  CHECK(m.tiers[0].size() == 12);
  CHECK(max_common(m.arr) <= 4);
  CHECK(m.arr.shared_endpoints(by_name(m.arr, "al1"), by_name(m.arr, "be1")) == 0);
}

TEST_CASE("independent bundle seeds") {
  Construction c2 = bundle_seed_k2(64);
  REQUIRE(c2.arr.valid());
  CHECK(c2.arr.edges.size() == 32);
  CHECK(c2.tiers[0].size() == 64);
  CHECK(max_common(c2.arr) <= 2);

  Construction c3 = bundle_seed_k3(16);
  REQUIRE(c3.arr.valid());
  CHECK(c3.arr.edges.size() == 8);
  CHECK(c3.tiers[0].size() == 16);
  CHECK(max_common(c3.arr) <= 3);
}

TEST_CASE("bundle seed blocks a cheap transversal") {
  Construction c = bundle_seed_k2(32);
  // its single forcing block already loads some edge twice on any transversal
  CHECK(refuted_budget(c.arr, c.x, c.y, 1));
  BestCurveResult b = best_curve(c.arr, c.x, c.y, /*count_endpoints=*/true);
  REQUIRE(b.status == RouteStatus::Found);
  CHECK(b.optimum == 2);
}

TEST_CASE("routed saturated construction, k = 1") {
  Construction c = three_halves_saturated(1);
  REQUIRE(c.arr.valid());
  CHECK(max_common(c.arr) <= 1);
  // every vertex pair except the two outermost tiers is adjacent
  std::set<std::pair<NodeId, NodeId>> adj;
  for (EdgeId e = 0; e < (EdgeId)c.arr.edges.size(); ++e) {
    if (c.arr.edges[e].name.empty()) continue;  // ripped-out slot
    adj.insert(std::minmax(c.arr.edge_endpoints(e).first, c.arr.edge_endpoints(e).second));
  }
  for (NodeId u : c.tiers[0])
    for (NodeId v : c.tiers[3]) CHECK(!adj.count(std::minmax(u, v)));
  int non_adjacent = 0;
  std::vector<NodeId> all;
  for (auto& t : c.tiers) all.insert(all.end(), t.begin(), t.end());
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j)
      if (!adj.count(std::minmax(all[i], all[j]))) ++non_adjacent;
  CHECK(non_adjacent == 64);
}

TEST_CASE("pseudoline forcing families") {
  Construction s = pseudo_forcing_small(8);
  REQUIRE(s.arr.valid());
  CHECK(s.arr.edges.size() == 6);
  CHECK(s.arr.anchors.size() == 3);
  CHECK(total_crossings(s.arr) == 120);
  CHECK(max_common(s.arr) <= 8);

  Construction t = pseudo_forcing_iterated(8, 3);
  REQUIRE(t.arr.valid());
  CHECK(t.arr.edges.size() == 16);
  CHECK(t.arr.anchors.size() == 8);
  CHECK(total_crossings(t.arr) == 960);
  CHECK(max_common(t.arr) <= 8);
}
