#pragma once

#include <utility>
#include <vector>

#include "topo/arrangement.hpp"

namespace topo {

enum class RouteStatus { Found, Refuted, CapExceeded };

struct RouteLimits {
  long max_expansions = 20'000'000;
};

struct RouteResult {
  RouteStatus status = RouteStatus::Refuted;
  Curve curve;  // valid when Found
  long expansions = 0;
};

// Removes region-revisiting loops; the profile never increases pointwise.
// Idempotent.
Curve shortcut_normalize(const Arrangement& a, const Curve& c);

// Exact search for a curve u -> v crossing each edge e at most budget[e]
// times.  With count_endpoints, edges incident to u or v consume one unit of
// their allowance per shared endpoint.  Complete: Refuted means no such
// curve exists.  Wall edges are never crossed.
RouteResult exists_curve(const Arrangement& a, NodeId u, NodeId v,
                         const std::vector<int>& budget, bool count_endpoints,
                         const RouteLimits& lim = {});

struct BestCurveResult {
  RouteStatus status = RouteStatus::Refuted;
  int optimum = -1;  // least achievable max per-edge crossing count
  Curve curve;
  long expansions = 0;
};

// Minimizes the maximum per-edge crossing count by raising a uniform budget.
BestCurveResult best_curve(const Arrangement& a, NodeId u, NodeId v, bool count_endpoints,
                           int max_level = 64, const RouteLimits& lim = {});

// Free-curve variant between region sets (used for block transversals).
RouteResult route_regions(const Arrangement& a, const std::vector<int32_t>& starts,
                          const std::vector<int32_t>& goals, const std::vector<int>& budget,
                          const RouteLimits& lim = {});

// Fewest arcs crossed between two region sets, ignoring per-edge budgets;
// -1 if unreachable.
int min_total_crossings(const Arrangement& a, const std::vector<int32_t>& starts,
                        const std::vector<int32_t>& goals);

struct TransversalStats {
  int min_total = -1;  // least total crossings of any bottom-to-top transversal
  int min_max = -1;    // least achievable max per-edge count
};

// For a block compiled with rims: transversals run from just inside the
// bottom rim to just inside the top rim and never cross the rims themselves.
TransversalStats transversal_stats(const Arrangement& a, const RouteLimits& lim = {});

// Regions entered from the cap region by crossing exactly one wall arc.
std::vector<int32_t> regions_inside_rim(const Arrangement& a, const RegionIndex& ri,
                                        CornerRef cap);

struct SaturationResult {
  Arrangement arr;
  int edges_added = 0;
  bool verified = true;  // false if any pair search hit the expansion cap
  std::vector<std::pair<NodeId, NodeId>> unverified;
};

// Adds an edge between every non-adjacent vertex pair that still admits a
// k-simple connection, in lexicographic pair order.  A pair refuted once
// stays refuted, so a single pass saturates.
SaturationResult greedy_saturate(const Arrangement& a, int k, const RouteLimits& lim = {});

}  // namespace topo
