#include "topo/verify.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace topo {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error("verify: " + msg); }

const char* claim_name(Claim c) {
  switch (c) {
    case Claim::KSimple: return "k-simple";
    case Claim::KLConstruction: return "kl-construction";
    case Claim::Saturated: return "saturated";
    case Claim::KLSaturated: return "kl-saturated";
    case Claim::Forcing: return "forcing";
  }
  return "?";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Unverified: return "unverified";
  }
  return "?";
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 t0)
        .count();
  }
};

bool live(const Arrangement& a, EdgeId e) {
  return a.edges[e].kind == EdgeKind::Normal && !a.edge_arcs(e).empty();
}

std::vector<NodeId> graph_vertices(const Arrangement& a) {
  std::vector<NodeId> vs;
  for (NodeId n = 0; n < (NodeId)a.nodes.size(); ++n)
    if (a.nodes[n].kind == NodeKind::Vertex) vs.push_back(n);
  return vs;
}

}  // namespace

int exit_code(const VerificationReport& r) {
  switch (r.verdict) {
    case Verdict::Pass: return 0;
    case Verdict::Fail: return 1;
    case Verdict::Unverified: return 2;
  }
  return 2;
}

std::string to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["claim"] = claim_name(r.claim);
  j["params"] = {{"k", r.k}, {"l", r.l}, {"p", r.p}};
  j["verdict"] = verdict_name(r.verdict);
  if (!r.witness_pairs.empty()) {
    auto& w = j["witness"]["pairs"] = nlohmann::ordered_json::array();
    for (auto& [u, v] : r.witness_pairs) w.push_back({u, v});
  }
  if (r.has_curve) {
    j["witness"]["curve"]["start"] = r.witness_curve.start;
    j["witness"]["curve"]["end"] = r.witness_curve.end;
    j["witness"]["curve"]["crossings"] = r.witness_curve.crossings;
  }
  if (!r.detail.empty()) j["detail"] = r.detail;
  j["stats"] = {{"expansions", r.expansions}, {"elapsed_ms", r.elapsed_ms}};
  return j.dump(2) + "\n";
}

VerificationReport check_k_simple(const Arrangement& a, int k) {
  Timer t;
  VerificationReport r;
  r.claim = Claim::KSimple;
  r.k = k;
  r.verdict = Verdict::Pass;
  auto cm = a.crossing_matrix();
  for (EdgeId e = 0; e < (EdgeId)a.edges.size(); ++e) {
    if (!live(a, e)) continue;
    if (cm[e][e] > 0) {
      r.verdict = Verdict::Fail;
      r.witness_pairs.push_back({e, e});
      r.detail = "edge " + a.edges[e].name + " crosses itself";
      break;
    }
    for (EdgeId f = e + 1; f < (EdgeId)a.edges.size(); ++f) {
      if (!live(a, f)) continue;
      int common = cm[e][f] + a.shared_endpoints(e, f);
      if (common > k) {
        r.verdict = Verdict::Fail;
        r.witness_pairs.push_back({e, f});
        r.detail = "edges " + a.edges[e].name + " and " + a.edges[f].name + " have " +
                   std::to_string(cm[e][f]) + " crossings and " +
                   std::to_string(a.shared_endpoints(e, f)) + " shared endpoints";
        break;
      }
    }
    if (r.verdict == Verdict::Fail) break;
  }
  r.elapsed_ms = t.ms();
  return r;
}

VerificationReport check_kl_construction(const Arrangement& a, NodeId u, NodeId v, int k, int l,
                                         const RouteLimits& lim) {
  Timer t;
  VerificationReport r;
  r.claim = Claim::KLConstruction;
  r.k = k;
  r.l = l;
  VerificationReport simple = check_k_simple(a, k);
  if (simple.verdict == Verdict::Fail) {
    simple.claim = Claim::KLConstruction;
    simple.l = l;
    return simple;
  }
  std::vector<int> budget(a.edges.size(), l - 1);
  RouteResult res = exists_curve(a, u, v, budget, /*count_endpoints=*/true, lim);
  r.expansions = res.expansions;
  switch (res.status) {
    case RouteStatus::Refuted: r.verdict = Verdict::Pass; break;
    case RouteStatus::Found:
      r.verdict = Verdict::Fail;
      r.witness_curve = res.curve;
      r.has_curve = true;
      r.detail = "a curve with all common counts below " + std::to_string(l) + " exists";
      break;
    case RouteStatus::CapExceeded:
      r.verdict = Verdict::Unverified;
      r.detail = "curve search hit the expansion cap";
      break;
  }
  r.elapsed_ms = t.ms();
  return r;
}

VerificationReport check_kl_saturated(const Arrangement& a, int k, int l,
                                      const RouteLimits& lim) {
  Timer t;
  VerificationReport r;
  r.claim = Claim::KLSaturated;
  r.k = k;
  r.l = l;
  std::vector<NodeId> vs = graph_vertices(a);
  std::set<std::pair<NodeId, NodeId>> adjacent;
  for (EdgeId e = 0; e < (EdgeId)a.edges.size(); ++e) {
    if (!live(a, e)) continue;
    auto [x, y] = a.edge_endpoints(e);
    adjacent.insert(std::minmax(x, y));
  }
  std::vector<int> budget(a.edges.size(), l - 1);
  bool capped = false;
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j) {
      if (adjacent.count(std::minmax(vs[i], vs[j]))) continue;
      RouteResult res = exists_curve(a, vs[i], vs[j], budget, /*count_endpoints=*/true, lim);
      r.expansions += res.expansions;
      if (res.status == RouteStatus::Found) {
        r.verdict = Verdict::Fail;
        r.witness_pairs.push_back({vs[i], vs[j]});
        r.witness_curve = res.curve;
        r.has_curve = true;
        r.detail = "an admissible connection between non-adjacent vertices exists";
        r.elapsed_ms = t.ms();
        return r;
      }
      if (res.status == RouteStatus::CapExceeded) {
        capped = true;
        r.witness_pairs.push_back({vs[i], vs[j]});
      }
    }
  r.verdict = capped ? Verdict::Unverified : Verdict::Pass;
  if (capped) r.detail = "some pair searches hit the expansion cap";
  r.elapsed_ms = t.ms();
  return r;
}

VerificationReport check_saturated(const Arrangement& a, int k, const RouteLimits& lim) {
  VerificationReport r = check_kl_saturated(a, k, k + 1, lim);
  r.claim = Claim::Saturated;
  return r;
}

namespace {

// One staged search: does a curve outer -> anchors in order -> outer exist
// with every edge crossed less than l times?  States are (region, next stop)
// with Pareto-kept residual budgets.
struct ForcingSearch {
  const Arrangement& a;
  const DualGraph& dual;
  int32_t outer_region;
  long* expansions;
  long cap;

  struct State {
    int32_t region;
    int stage;
    std::vector<int> left;
    int parent;
    DartId via_dart;  // oriented: face(dart) lies in the parent's region
  };

  RouteStatus run(const std::vector<int32_t>& stop_regions, std::vector<int> budget,
                  Curve* witness, CornerRef outer_corner) const {
    int p = (int)stop_regions.size();
    auto advance = [&](int32_t region, int stage) {
      while (stage < p && stop_regions[stage] == region) ++stage;
      return stage;
    };
    std::vector<std::vector<int>> kept((size_t)dual.regions.count * (p + 1));
    std::vector<State> pool;
    auto keep = [&](int32_t region, int stage, const std::vector<int>& left) {
      auto& cell = kept[(size_t)region * (p + 1) + stage];
      for (int si : cell) {
        const std::vector<int>& other = pool[si].left;
        bool dominates = true;
        for (size_t e = 0; e < left.size(); ++e)
          if (other[e] < left[e]) { dominates = false; break; }
        if (dominates) return false;
      }
      cell.push_back((int)pool.size());
      return true;
    };
    std::deque<int> queue;
    int start_stage = advance(outer_region, 0);
    keep(outer_region, start_stage, budget);
    pool.push_back({outer_region, start_stage, budget, -1, kNoDart});
    queue.push_back(0);
    while (!queue.empty()) {
      int si = queue.front();
      queue.pop_front();
      State s = pool[si];
      if (s.stage == p && s.region == outer_region) {
        if (witness) {
          witness->start_corner = witness->end_corner = outer_corner;
          std::vector<DartId> crossings;
          for (int i = si; pool[i].via_dart != kNoDart; i = pool[i].parent)
            crossings.push_back(pool[i].via_dart);
          std::reverse(crossings.begin(), crossings.end());
          witness->crossings = std::move(crossings);
        }
        return RouteStatus::Found;
      }
      for (int li : dual.incident[s.region]) {
        if (++*expansions > cap) return RouteStatus::CapExceeded;
        const DualLink& ln = dual.links[li];
        int32_t to = ln.from == s.region ? ln.to : ln.from;
        if (s.left[ln.edge] == 0) continue;
        std::vector<int> left = s.left;
        left[ln.edge]--;
        int stage = advance(to, s.stage);
        if (!keep(to, stage, left)) continue;
        DartId crossed = ln.from == s.region ? ln.dart : a.twin(ln.dart);
        pool.push_back({to, stage, std::move(left), si, crossed});
        queue.push_back((int)pool.size() - 1);
      }
    }
    return RouteStatus::Refuted;
  }
};

}  // namespace

VerificationReport check_forcing(const Arrangement& a, const std::vector<NodeId>& anchors, int l,
                                 const RouteLimits& lim, int max_anchors) {
  Timer t;
  VerificationReport r;
  r.claim = Claim::Forcing;
  r.l = l;
  r.p = (int)anchors.size();
  if (!a.outer) fail("check_forcing needs a marked outer face");
  if ((int)anchors.size() > max_anchors) {
    r.verdict = Verdict::Unverified;
    r.detail = "anchor count exceeds the exhaustive-order cap";
    r.elapsed_ms = t.ms();
    return r;
  }
  DualGraph dual = build_dual(a);
  int32_t outer_region = a.region_of_corner(dual.regions, *a.outer);
  std::vector<int32_t> anchor_region(anchors.size(), -1);
  for (size_t i = 0; i < anchors.size(); ++i) {
    if (!a.rotation[anchors[i]].empty()) fail("check_forcing anchors must have degree 0");
    for (const Placement& pl : a.placements)
      if (pl.node == anchors[i])
        anchor_region[i] = a.region_of_corner(dual.regions, pl.corner);
    if (anchor_region[i] < 0) fail("check_forcing anchor has no placement");
  }
  std::vector<int> order(anchors.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
  std::sort(order.begin(), order.end());
  ForcingSearch search{a, dual, outer_region, &r.expansions, lim.max_expansions};
  do {
    // a curve and its reversal thread the same anchors
    std::vector<int> rev(order.rbegin(), order.rend());
    if (rev < order) continue;
    std::vector<int32_t> stops;
    for (int i : order) stops.push_back(anchor_region[i]);
    std::vector<int> budget(a.edges.size(), l - 1);
    for (EdgeId e = 0; e < (EdgeId)a.edges.size(); ++e)
      if (a.edges[e].kind == EdgeKind::Wall) budget[e] = 0;
    Curve witness;
    witness.start = witness.end = kNoNode;
    RouteStatus st = search.run(stops, budget, &witness, *a.outer);
    if (st == RouteStatus::Found) {
      r.verdict = Verdict::Fail;
      r.witness_curve = witness;
      r.has_curve = true;
      std::string ord;
      for (int i : order) ord += (ord.empty() ? "" : ",") + a.nodes[anchors[i]].label;
      r.detail = "a threading curve with all counts below " + std::to_string(l) +
                 " exists for order " + ord;
      r.elapsed_ms = t.ms();
      return r;
    }
    if (st == RouteStatus::CapExceeded) {
      r.verdict = Verdict::Unverified;
      r.detail = "forcing search hit the expansion cap";
      r.elapsed_ms = t.ms();
      return r;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  r.verdict = Verdict::Pass;
  r.elapsed_ms = t.ms();
  return r;
}

}  // namespace topo
