#pragma once

#include <vector>

#include "topo/arrangement.hpp"

namespace topo {

// A walk in the planarized graph (nodes and arcs of the drawing), recorded
// as consecutive darts oriented from start to end.
struct AnnotatedPath {
  NodeId start = kNoNode, end = kNoNode;
  std::vector<DartId> arcs;
};

// Path code (r, p_1, ..., p_{r+1}): r is the number of turning vertices, and
// p_i counts the passing vertices on the i-th interval.  An internal vertex
// is passing when both incident arcs belong to the same edge, turning
// otherwise.  Codes are compared lexicographically.
std::vector<int> code_of(const Arrangement& a, const AnnotatedPath& path);

// Node-simple u-v path admitting no code-decreasing splice along an edge:
// every candidate that rides an edge between two of the path's nodes has a
// code at least as large.  Found by shortest-path seeding plus splice
// surgery; each surgery strictly decreases the code, so the loop terminates.
// Throws when u and v lie in different components.
AnnotatedPath minimal_path(const Arrangement& a, NodeId u, NodeId v);

// Perturbs a path into a curve hugging its left side: at every internal node
// the curve crosses the darts swept between the incoming and outgoing arcs.
// Verifies that no edge is crossed more than 2k times and throws otherwise.
Curve perturb_to_curve(const Arrangement& a, const AnnotatedPath& path, int k);

}  // namespace topo
