#include "topo/routing.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace topo {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error("routing: " + msg); }

CornerRef placement_corner(const Arrangement& a, NodeId n) {
  for (const auto& p : a.placements)
    if (p.node == n) return p.corner;
  fail("isolated vertex has no placement");
}

// Attachment options for a curve endpoint: one (region, corner) per distinct
// region around the vertex.
std::vector<std::pair<int32_t, CornerRef>> vertex_attachments(const Arrangement& a,
                                                              const RegionIndex& ri, NodeId u) {
  std::vector<std::pair<int32_t, CornerRef>> out;
  if (a.rotation[u].empty()) {
    CornerRef c = placement_corner(a, u);
    out.push_back({a.region_of_corner(ri, c), c});
    return out;
  }
  for (DartId d : a.rotation[u]) {
    CornerRef c{d};
    int32_t r = a.region_of_corner(ri, c);
    bool seen = false;
    for (const auto& [r2, c2] : out) seen |= r2 == r;
    if (!seen) out.push_back({r, c});
  }
  return out;
}

// Tracked-budget search over (region, residual) states with Pareto
// dominance.  Untracked edges may be crossed freely, so a Found witness may
// overshoot untracked budgets; the caller rechecks and re-tracks.
struct CoreResult {
  RouteStatus status = RouteStatus::Refuted;
  std::vector<DartId> crossings;
  int32_t start_region = -1, goal_region = -1;
  long expansions = 0;
};

CoreResult core_route(const Arrangement& a, const DualGraph& dual,
                      const std::vector<int32_t>& starts, const std::vector<int32_t>& goals,
                      const std::vector<EdgeId>& tracked, const std::vector<int>& caps,
                      long max_expansions) {
  CoreResult res;
  int nt = (int)tracked.size();
  std::vector<int> tracked_of(a.edges.size(), -1);
  for (int i = 0; i < nt; ++i) tracked_of[tracked[i]] = i;

  std::unordered_set<int32_t> goal_set(goals.begin(), goals.end());

  struct State {
    int32_t region;
    int32_t parent;
    DartId via;
  };
  std::vector<State> states;
  std::vector<int16_t> residual;  // stride nt
  std::vector<std::vector<int32_t>> frontier(dual.regions.count);  // antichain per region

  auto res_of = [&](int32_t s) { return residual.data() + (size_t)s * nt; };
  auto dominated = [&](int32_t region, const int16_t* r) {
    for (int32_t s : frontier[region]) {
      const int16_t* q = res_of(s);
      bool ge = true;
      for (int i = 0; i < nt && ge; ++i) ge = q[i] >= r[i];
      if (ge) return true;
    }
    return false;
  };
  auto add_state = [&](int32_t region, int32_t parent, DartId via, const int16_t* r) -> int32_t {
    if (dominated(region, r)) return -1;
    // drop strictly dominated older entries
    auto& fr = frontier[region];
    fr.erase(std::remove_if(fr.begin(), fr.end(),
                            [&](int32_t s) {
                              const int16_t* q = res_of(s);
                              for (int i = 0; i < nt; ++i)
                                if (q[i] > r[i]) return false;
                              return true;
                            }),
             fr.end());
    int32_t id = (int32_t)states.size();
    states.push_back({region, parent, via});
    residual.insert(residual.end(), r, r + nt);
    fr.push_back(id);
    return id;
  };

  std::vector<int16_t> init(caps.begin(), caps.end());
  std::deque<int32_t> queue;
  int32_t goal_state = -1;
  for (int32_t r : starts) {
    int32_t id = add_state(r, -1, kNoDart, init.data());
    if (id >= 0) {
      if (goal_set.count(r)) {
        goal_state = id;
        break;
      }
      queue.push_back(id);
    }
  }

  while (goal_state < 0 && !queue.empty()) {
    int32_t cur = queue.front();
    queue.pop_front();
    if (++res.expansions > max_expansions) {
      res.status = RouteStatus::CapExceeded;
      return res;
    }
    int32_t region = states[cur].region;
    std::vector<int16_t> r(res_of(cur), res_of(cur) + nt);
    for (int32_t li : dual.incident[region]) {
      const DualLink& l = dual.links[li];
      int32_t to = l.from == region ? l.to : l.from;
      DartId via = l.from == region ? l.dart : a.twin(l.dart);
      int ti = tracked_of[l.edge];
      if (ti >= 0) {
        if (r[ti] == 0) continue;
        --r[ti];
      }
      int32_t id = add_state(to, cur, via, r.data());
      if (ti >= 0) ++r[ti];
      if (id < 0) continue;
      if (goal_set.count(to)) {
        goal_state = id;
        break;
      }
      queue.push_back(id);
    }
  }

  if (goal_state < 0) return res;  // Refuted
  res.status = RouteStatus::Found;
  res.goal_region = states[goal_state].region;
  for (int32_t s = goal_state; s >= 0; s = states[s].parent) {
    if (states[s].via != kNoDart) res.crossings.push_back(states[s].via);
    if (states[s].parent < 0) res.start_region = states[s].region;
  }
  std::reverse(res.crossings.begin(), res.crossings.end());
  return res;
}

std::vector<int32_t> region_path(const Arrangement& a, const RegionIndex& ri, const Curve& c) {
  std::vector<int32_t> regions;
  if (c.start_corner.dart != kNoDart || c.crossings.empty())
    regions.push_back(a.region_of_corner(ri, c.start_corner));
  else
    regions.push_back(ri.region_of_dart(c.crossings[0]));
  for (DartId d : c.crossings) regions.push_back(ri.region_of_dart(a.twin(d)));
  return regions;
}

}  // namespace

Curve shortcut_normalize(const Arrangement& a, const Curve& c) {
  Curve out = c;
  RegionIndex ri = a.regions();
  bool changed = true;
  while (changed) {
    changed = false;
    auto regions = region_path(a, ri, out);
    std::unordered_map<int32_t, int> first;
    for (int i = 0; i < (int)regions.size(); ++i) {
      auto it = first.find(regions[i]);
      if (it != first.end()) {
        // excise the loop: crossings [it->second, i) leave and re-enter
        out.crossings.erase(out.crossings.begin() + it->second, out.crossings.begin() + i);
        changed = true;
        break;
      }
      first.emplace(regions[i], i);
    }
  }
  return out;
}

namespace {

// Full exact search with lazy budget tracking: start from a small tracked
// set, recheck the witness against all budgets, and track violated edges
// until the witness is clean or the relaxation refutes.
struct FullRoute {
  RouteStatus status = RouteStatus::Refuted;
  std::vector<DartId> crossings;
  int32_t start_region = -1, goal_region = -1;
  long expansions = 0;
};

FullRoute route_budgeted(const Arrangement& a, const DualGraph& dual,
                         const std::vector<int32_t>& starts, const std::vector<int32_t>& goals,
                         const std::vector<int>& budget, const RouteLimits& lim) {
  if (budget.size() != a.edges.size()) fail("budget size mismatch");
  FullRoute out;
  std::vector<EdgeId> tracked;
  std::vector<char> is_tracked(a.edges.size(), 0);
  auto track = [&](EdgeId e) {
    if (!is_tracked[e]) {
      is_tracked[e] = 1;
      tracked.push_back(e);
    }
  };
  // Small instances: track everything up front.
  int normal = 0;
  for (EdgeId e = 0; e < (EdgeId)a.edges.size(); ++e)
    if (a.edges[e].kind == EdgeKind::Normal) ++normal;
  if (normal <= 24)
    for (EdgeId e = 0; e < (EdgeId)a.edges.size(); ++e)
      if (a.edges[e].kind == EdgeKind::Normal) track(e);

  while (true) {
    std::vector<int> caps;
    for (EdgeId e : tracked) caps.push_back(budget[e]);
    CoreResult r =
        core_route(a, dual, starts, goals, tracked, caps, lim.max_expansions - out.expansions);
    out.expansions += r.expansions;
    if (r.status != RouteStatus::Found) {
      out.status = r.status;
      return out;
    }
    std::vector<int> count(a.edges.size(), 0);
    for (DartId d : r.crossings) ++count[a.edge_of(d)];
    bool clean = true;
    for (EdgeId e = 0; e < (EdgeId)a.edges.size(); ++e) {
      if (count[e] > budget[e]) {
        track(e);
        clean = false;
      }
    }
    if (clean) {
      out.status = RouteStatus::Found;
      out.crossings = std::move(r.crossings);
      out.start_region = r.start_region;
      out.goal_region = r.goal_region;
      return out;
    }
  }
}

}  // namespace

RouteResult exists_curve(const Arrangement& a, NodeId u, NodeId v,
                         const std::vector<int>& budget, bool count_endpoints,
                         const RouteLimits& lim) {
  if (u == v || a.nodes[u].kind != NodeKind::Vertex || a.nodes[v].kind != NodeKind::Vertex)
    fail("exists_curve endpoints must be distinct vertices");
  if (budget.size() != a.edges.size()) fail("budget size mismatch");
  RouteResult res;

  std::vector<int> adj = budget;
  if (count_endpoints) {
    for (EdgeId e = 0; e < (EdgeId)a.edges.size(); ++e) {
      if (a.edges[e].kind != EdgeKind::Normal || a.edge_arcs(e).empty()) continue;
      auto [x, y] = a.edge_endpoints(e);
      adj[e] -= (x == u || y == u) + (x == v || y == v);
      // Sharing an endpoint already exhausts the allowance.
      if (adj[e] < 0) return res;
    }
  }

  RegionIndex ri = a.regions();
  auto su = vertex_attachments(a, ri, u);
  auto sv = vertex_attachments(a, ri, v);
  std::vector<int32_t> starts, goals;
  for (auto& [r, c] : su) starts.push_back(r);
  for (auto& [r, c] : sv) goals.push_back(r);

  DualGraph dual = build_dual(a);
  FullRoute fr = route_budgeted(a, dual, starts, goals, adj, lim);
  res.expansions = fr.expansions;
  if (fr.status != RouteStatus::Found) {
    res.status = fr.status;
    return res;
  }

  Curve c;
  c.start = u;
  c.end = v;
  c.crossings = fr.crossings;
  for (auto& [r, cor] : su)
    if (r == fr.start_region) c.start_corner = cor;
  for (auto& [r, cor] : sv)
    if (r == fr.goal_region) c.end_corner = cor;
  c = shortcut_normalize(a, c);
  std::string err = check_curve(a, c);
  if (!err.empty()) fail("witness invalid: " + err);
  auto prof = curve_profile(a, c, count_endpoints);
  for (EdgeId e = 0; e < (EdgeId)a.edges.size(); ++e)
    if (a.edges[e].kind == EdgeKind::Normal && prof[e] > budget[e])
      fail("witness exceeds budget");
  res.status = RouteStatus::Found;
  res.curve = std::move(c);
  return res;
}

BestCurveResult best_curve(const Arrangement& a, NodeId u, NodeId v, bool count_endpoints,
                           int max_level, const RouteLimits& lim) {
  BestCurveResult out;
  for (int b = 0; b <= max_level; ++b) {
    std::vector<int> budget(a.edges.size(), b);
    RouteResult r = exists_curve(a, u, v, budget, count_endpoints, lim);
    out.expansions += r.expansions;
    if (r.status == RouteStatus::CapExceeded) {
      out.status = RouteStatus::CapExceeded;
      return out;
    }
    if (r.status == RouteStatus::Found) {
      out.status = RouteStatus::Found;
      out.optimum = b;
      out.curve = std::move(r.curve);
      return out;
    }
  }
  return out;  // Refuted up to max_level
}

RouteResult route_regions(const Arrangement& a, const std::vector<int32_t>& starts,
                          const std::vector<int32_t>& goals, const std::vector<int>& budget,
                          const RouteLimits& lim) {
  RouteResult res;
  DualGraph dual = build_dual(a);
  FullRoute fr = route_budgeted(a, dual, starts, goals, budget, lim);
  res.expansions = fr.expansions;
  res.status = fr.status;
  if (fr.status == RouteStatus::Found) {
    res.curve.crossings = std::move(fr.crossings);
    res.curve = shortcut_normalize(a, res.curve);
  }
  return res;
}

int min_total_crossings(const Arrangement& a, const std::vector<int32_t>& starts,
                        const std::vector<int32_t>& goals) {
  DualGraph dual = build_dual(a);
  std::vector<int> dist(dual.regions.count, -1);
  std::deque<int32_t> queue;
  for (int32_t s : starts)
    if (dist[s] < 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  std::unordered_set<int32_t> goal_set(goals.begin(), goals.end());
  while (!queue.empty()) {
    int32_t r = queue.front();
    queue.pop_front();
    if (goal_set.count(r)) return dist[r];
    for (int32_t li : dual.incident[r]) {
      const DualLink& l = dual.links[li];
      int32_t to = l.from == r ? l.to : l.from;
      if (dist[to] < 0) {
        dist[to] = dist[r] + 1;
        queue.push_back(to);
      }
    }
  }
  return -1;
}

std::vector<int32_t> regions_inside_rim(const Arrangement& a, const RegionIndex& ri,
                                        CornerRef cap) {
  int32_t capr = a.region_of_corner(ri, cap);
  std::vector<int32_t> out;
  for (DartId d = 0; d < (DartId)a.darts.size(); ++d) {
    if (!a.is_wall(d) || ri.region_of_dart(d) != capr) continue;
    int32_t across = ri.region_of_dart(a.twin(d));
    if (across == capr) continue;
    if (std::find(out.begin(), out.end(), across) == out.end()) out.push_back(across);
  }
  return out;
}

TransversalStats transversal_stats(const Arrangement& a, const RouteLimits& lim) {
  if (!a.bottom || !a.top) fail("transversal_stats needs marked caps");
  RegionIndex ri = a.regions();
  auto starts = regions_inside_rim(a, ri, *a.bottom);
  auto goals = regions_inside_rim(a, ri, *a.top);
  if (starts.empty() || goals.empty()) fail("caps not enclosed by rims");
  TransversalStats st;
  st.min_total = min_total_crossings(a, starts, goals);
  for (int b = 0; b <= 64; ++b) {
    std::vector<int> budget(a.edges.size(), b);
    RouteResult r = route_regions(a, starts, goals, budget, lim);
    if (r.status == RouteStatus::CapExceeded) fail("transversal_stats hit expansion cap");
    if (r.status == RouteStatus::Found) {
      st.min_max = b;
      break;
    }
  }
  return st;
}

SaturationResult greedy_saturate(const Arrangement& a, int k, const RouteLimits& lim) {
  SaturationResult out;
  out.arr = a;
  std::vector<NodeId> vertices;
  for (NodeId n = 0; n < (NodeId)a.nodes.size(); ++n)
    if (a.nodes[n].kind == NodeKind::Vertex) vertices.push_back(n);

  for (size_t i = 0; i < vertices.size(); ++i) {
    for (size_t j = i + 1; j < vertices.size(); ++j) {
      NodeId u = vertices[i], v = vertices[j];
      bool adjacent = false;
      for (EdgeId e = 0; e < (EdgeId)out.arr.edges.size(); ++e) {
        if (out.arr.edges[e].kind != EdgeKind::Normal || out.arr.edge_arcs(e).empty()) continue;
        auto [x, y] = out.arr.edge_endpoints(e);
        adjacent |= (x == u && y == v) || (x == v && y == u);
      }
      if (adjacent) continue;
      std::vector<int> budget(out.arr.edges.size(), k);
      RouteResult r = exists_curve(out.arr, u, v, budget, /*count_endpoints=*/true, lim);
      if (r.status == RouteStatus::CapExceeded) {
        out.verified = false;
        out.unverified.push_back({u, v});
        continue;
      }
      if (r.status == RouteStatus::Found) {
        EdgeId e = insert_curve(out.arr, r.curve,
                                "add_" + std::to_string(u) + "_" + std::to_string(v));
        if (e == kNoEdge) fail("saturation witness rejected by insert_curve");
        ++out.edges_added;
      }
    }
  }
  return out;
}

}  // namespace topo
