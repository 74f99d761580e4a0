#pragma once

#include <string>
#include <vector>

#include "topo/arrangement.hpp"

namespace topo {

// A named drawing with optional probe vertices x, y (degree 0, placed in the
// bottom and top faces) and boundary vertex tiers, listed bottom to top.
struct Construction {
  Arrangement arr;
  NodeId x = kNoNode, y = kNoNode;
  std::vector<std::vector<NodeId>> tiers;
};

// Six edges over five stacked spiral blocks; every x-y curve meets some edge
// at least ceil(7(k-1)/6) times.  Accepts k >= 2 for testing.
Construction weak76(int k);

// k forcing blocks interleaved with spiral blocks, 4^k edges per family; the
// x-y requirement is exactly 2k-1.
Construction construction_2k_minus_1(int k);

// 2k double-forcing blocks interleaved with grid blocks, two groups of 4^k
// edges per family; the x-y requirement is exactly 2k.
Construction construction_2k(int k);

// Six 1-simple edges a1..a3, b1..b3 cutting the sphere into eight regions;
// every curve from the inner region to the outer meets some edge twice.
Construction fixture_G();

// floor(n/12) nested copies of fixture_G plus leftover isolated vertices in
// the innermost region; tiers list each copy's vertices, outermost first.
Construction nested_saturated_seed(int n);

enum class LadderVariant { Path, Matching };

// Chain of two-edge bundles; Path shares one endpoint per bundle (n/3
// bundles, 2n/3 edges, (k-1)-spirals inside), Matching keeps all endpoints
// distinct (n/4 bundles, k-spirals inside).  Consecutive bundles k-spiral.
Construction ladder_seed(int n, int k, LadderVariant variant);

// Chain of 16-edge bundles, each a 2-forcing block, consecutive bundles
// joined by 2-spirals.  n is the vertex count, a multiple of 32.
Construction bundle_seed_k2(int n);

// Chain of 4-edge bundles, each a (2,3)-grid block, consecutive bundles
// joined by 3-spirals.  n is the vertex count, a multiple of 8.
Construction bundle_seed_k3(int n);

// Double-forcing, grid, double-forcing core plus router-added edges between
// all vertex tiers at distance <= 2; the remaining tier-0 to tier-3 pairs
// need ceil(3k/2) crossings with some edge.  Throws if an intended edge
// cannot be added k-simply.
Construction three_halves_saturated(int k);

// Six doubled curves over nested annuli A1, A2, A3, B, C with three anchor
// vertices; pairwise crossings are exactly k.  Requires k % 4 == 0.
Construction pseudo_forcing_small(int k);

// Iterated doubling: 2^m anchors, 2^(m+1) doubled curves, pairwise
// crossings at most k.  Requires k % 4 == 0.
Construction pseudo_forcing_iterated(int k, int m);

}  // namespace topo
