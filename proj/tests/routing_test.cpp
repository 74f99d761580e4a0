#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "topo/blocks.hpp"
#include "topo/routing.hpp"

using namespace topo;

namespace {

Arrangement rimmed(const WiringDiagram& d) {
  auto res = compile(d, CompileOptions{.rims = true});
  REQUIRE(res.arr.valid());
  return res.arr;
}

// Independent oracle: enumerate every simple region path between the sets
// and test it against the budget.
bool oracle_exists(const Arrangement& a, const std::vector<int32_t>& starts,
                   const std::vector<int32_t>& goals, const std::vector<int>& budget) {
  DualGraph dual = build_dual(a);
  std::vector<char> on_path(dual.regions.count, 0);
  std::vector<char> goal(dual.regions.count, 0);
  for (int32_t g : goals) goal[g] = 1;
  std::vector<int> used(a.edges.size(), 0);
  std::function<bool(int32_t)> dfs = [&](int32_t r) -> bool {
    if (goal[r]) return true;
    for (int32_t li : dual.incident[r]) {
      const DualLink& l = dual.links[li];
      int32_t to = l.from == r ? l.to : l.from;
      if (on_path[to] || used[l.edge] >= budget[l.edge] + 0) continue;
      if (used[l.edge] == budget[l.edge]) continue;
      ++used[l.edge];
      on_path[to] = 1;
      if (dfs(to)) return true;
      on_path[to] = 0;
      --used[l.edge];
    }
    return false;
  };
  for (int32_t s : starts) {
    std::fill(on_path.begin(), on_path.end(), 0);
    on_path[s] = 1;
    if (dfs(s)) return true;
  }
  return false;
}

std::pair<std::vector<int32_t>, std::vector<int32_t>> cap_sets(const Arrangement& a) {
  RegionIndex ri = a.regions();
  return {regions_inside_rim(a, ri, *a.bottom), regions_inside_rim(a, ri, *a.top)};
}

}  // namespace

TEST_CASE("spiral law") {
  for (int m = 1; m <= 8; ++m) {
    Arrangement a = rimmed(spiral_block(m));
    TransversalStats st = transversal_stats(a);
    CAPTURE(m);
    CHECK(st.min_total == m - 1);
    CHECK(st.min_max == (m - 1 + 1) / 2);
  }
}

TEST_CASE("grid law") {
  for (int m = 1; m <= 8; ++m) {
    for (int k = 1; m * k <= 8; ++k) {
      Arrangement a = rimmed(grid_block(m, k));
      TransversalStats st = transversal_stats(a);
      CAPTURE(m);
      CAPTURE(k);
      CHECK(st.min_total == m * k - 1);
    }
  }
}

TEST_CASE("crossing-forcing transversal") {
  Arrangement a = rimmed(crossing_forcing_block());
  TransversalStats st = transversal_stats(a);
  CHECK(st.min_total >= 1);
  CHECK(st.min_max == 1);
}

TEST_CASE("forcing law k=1") {
  Arrangement a = rimmed(forcing_block(1));
  CHECK(transversal_stats(a).min_max == 1);
}

TEST_CASE("forcing law k=2") {
  Arrangement a = rimmed(forcing_block(2));
  CHECK(transversal_stats(a).min_max == 2);
}

TEST_CASE("double forcing hits both groups") {
  Arrangement a = rimmed(double_forcing_block(1));
  auto [starts, goals] = cap_sets(a);
  int m = 4;
  std::vector<int> block_p(a.edges.size(), 99), block_q(a.edges.size(), 99);
  for (EdgeId e = 0; e < (EdgeId)a.edges.size(); ++e) {
    if (a.edges[e].name.starts_with("p")) block_p[e] = 0;
    if (a.edges[e].name.starts_with("q")) block_q[e] = 0;
  }
  (void)m;
  CHECK(route_regions(a, starts, goals, block_p).status == RouteStatus::Refuted);
  CHECK(route_regions(a, starts, goals, block_q).status == RouteStatus::Refuted);
}

TEST_CASE("search agrees with oracle on small blocks") {
  for (const WiringDiagram& d :
       {spiral_block(3), crossing_forcing_block(), grid_block(2, 1), spiral_block(2, 2, 1)}) {
    Arrangement a = rimmed(d);
    auto [starts, goals] = cap_sets(a);
    for (int b = 0; b <= 3; ++b) {
      std::vector<int> budget(a.edges.size(), b);
      bool got = route_regions(a, starts, goals, budget).status == RouteStatus::Found;
      bool want = oracle_exists(a, starts, goals, budget);
      CAPTURE(b);
      CHECK(got == want);
    }
  }
}

TEST_CASE("vertex-to-vertex routing") {
  // The birth vertices share the bottom face: crossing-free connection.
  auto res = compile(spiral_block(2));
  const Arrangement& a = res.arr;
  NodeId u = res.births[0], v = res.births[1];
  std::vector<int> zero(a.edges.size(), 0);
  CHECK(exists_curve(a, u, v, zero, false).status == RouteStatus::Found);

  // With endpoint accounting the incident edges already use one unit each.
  CHECK(exists_curve(a, u, v, zero, true).status == RouteStatus::Refuted);
  BestCurveResult bc = best_curve(a, u, v, true);
  REQUIRE(bc.status == RouteStatus::Found);
  CHECK(bc.optimum == 1);
  CHECK(bc.curve.crossings.empty());
  // The witness inserts cleanly.
  Arrangement b = a;
  EdgeId e = insert_curve(b, bc.curve, "uv");
  REQUIRE(e != kNoEdge);
  CAPTURE(b.validate());
  CHECK(b.valid());
}

TEST_CASE("witness profiles respect budgets") {
  Arrangement a = rimmed(forcing_block(1));
  auto [starts, goals] = cap_sets(a);
  std::vector<int> budget(a.edges.size(), 1);
  RouteResult r = route_regions(a, starts, goals, budget);
  REQUIRE(r.status == RouteStatus::Found);
  auto prof = curve_profile(a, r.curve, false);
  for (EdgeId e = 0; e < (EdgeId)a.edges.size(); ++e) CHECK(prof[e] <= budget[e]);
}

TEST_CASE("shortcut normalization") {
  Arrangement a = rimmed(spiral_block(4));
  auto [starts, goals] = cap_sets(a);
  std::vector<int> budget(a.edges.size(), 4);
  RouteResult r = route_regions(a, starts, goals, budget);
  REQUIRE(r.status == RouteStatus::Found);
  Curve again = shortcut_normalize(a, r.curve);
  CHECK(again.crossings == r.curve.crossings);  // already normal
}

TEST_CASE("greedy saturation basics") {
  // A single edge plus the routing of all remaining pairs at k=1.
  auto res = compile(spiral_block(1));
  SaturationResult sat = greedy_saturate(res.arr, 1);
  REQUIRE(sat.verified);
  const Arrangement& g = sat.arr;
  CAPTURE(g.validate());
  REQUIRE(g.valid());
  // All four vertices pairwise adjacent or refuted; max crossings stays <= 1.
  auto cm = g.crossing_matrix();
  for (size_t i = 0; i < cm.size(); ++i)
    for (size_t j = i + 1; j < cm.size(); ++j) {
      int common = cm[i][j] + g.shared_endpoints((EdgeId)i, (EdgeId)j);
      CHECK(common <= 1);
    }
  CHECK(sat.edges_added >= 3);
}
