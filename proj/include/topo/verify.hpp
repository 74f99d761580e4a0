#pragma once

#include <string>
#include <utility>
#include <vector>

#include "topo/arrangement.hpp"
#include "topo/routing.hpp"

namespace topo {

enum class Claim { KSimple, KLConstruction, Saturated, KLSaturated, Forcing };
enum class Verdict { Pass, Fail, Unverified };

struct VerificationReport {
  Claim claim = Claim::KSimple;
  int k = 0, l = 0, p = 0;
  Verdict verdict = Verdict::Unverified;
  // A failing pair check carries the offending pair; a failing curve check
  // carries the admissible curve that should not exist.
  std::vector<std::pair<NodeId, NodeId>> witness_pairs;
  Curve witness_curve;
  bool has_curve = false;
  std::string detail;
  long expansions = 0;
  long elapsed_ms = 0;
};

std::string to_json(const VerificationReport& r);
int exit_code(const VerificationReport& r);  // 0 Pass, 1 Fail, 2 Unverified

// Pass iff no edge self-crosses and every pair of edges has at most k common
// points, counting crossings plus shared endpoints.
VerificationReport check_k_simple(const Arrangement& a, int k);

// Pass iff the drawing is k-simple and no curve joining u and v keeps every
// per-edge common count below l.  The curve search is exhaustive; a capped
// search yields Unverified, never Pass.
VerificationReport check_kl_construction(const Arrangement& a, NodeId u, NodeId v, int k, int l,
                                         const RouteLimits& lim = {});

// Pass iff every pair of non-adjacent vertices admits no curve with all
// per-edge common counts below l.
VerificationReport check_kl_saturated(const Arrangement& a, int k, int l,
                                      const RouteLimits& lim = {});
VerificationReport check_saturated(const Arrangement& a, int k, const RouteLimits& lim = {});

// Pass iff every curve with both ends on the outer face that threads all
// anchors of A, in any visiting order, crosses some edge at least l times.
// Orders beyond the permutation cap yield Unverified.
VerificationReport check_forcing(const Arrangement& a, const std::vector<NodeId>& anchors, int l,
                                 const RouteLimits& lim = {}, int max_anchors = 4);

}  // namespace topo
