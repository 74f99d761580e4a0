#include "topo/codes.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

namespace topo {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error("codes: " + msg); }

std::vector<NodeId> path_nodes(const Arrangement& a, const AnnotatedPath& p) {
  std::vector<NodeId> ns{p.start};
  for (DartId d : p.arcs) ns.push_back(a.target(d));
  return ns;
}

bool node_simple(const Arrangement& a, const AnnotatedPath& p) {
  std::set<NodeId> seen;
  for (NodeId n : path_nodes(a, p))
    if (!seen.insert(n).second) return false;
  return true;
}

// Nodes of an edge's arc chain in path order.
std::vector<NodeId> chain_nodes(const Arrangement& a, const std::vector<DartId>& arcs) {
  std::vector<NodeId> ns;
  for (DartId d : arcs) ns.push_back(a.origin(d));
  if (!arcs.empty()) ns.push_back(a.target(arcs.back()));
  return ns;
}

}  // namespace

std::vector<int> code_of(const Arrangement& a, const AnnotatedPath& path) {
  std::vector<int> passing{0};
  for (size_t i = 1; i < path.arcs.size(); ++i) {
    if (a.edge_of(path.arcs[i - 1]) == a.edge_of(path.arcs[i]))
      ++passing.back();  // passing vertex stays inside the current interval
    else
      passing.push_back(0);
  }
  std::vector<int> code{(int)passing.size() - 1};
  code.insert(code.end(), passing.begin(), passing.end());
  return code;
}

AnnotatedPath minimal_path(const Arrangement& a, NodeId u, NodeId v) {
  if (u == v) fail("minimal_path endpoints coincide");
  // Shortest-path seed over nodes and arcs.
  std::vector<DartId> via(a.nodes.size(), kNoDart);
  std::vector<char> seen(a.nodes.size(), 0);
  std::deque<NodeId> bfs{u};
  seen[u] = 1;
  while (!bfs.empty()) {
    NodeId n = bfs.front();
    bfs.pop_front();
    if (n == v) break;
    for (DartId d : a.rotation[n]) {
      if (a.is_wall(d)) continue;
      NodeId t = a.target(d);
      if (seen[t]) continue;
      seen[t] = 1;
      via[t] = d;
      bfs.push_back(t);
    }
  }
  if (!seen[v]) fail("minimal_path endpoints are disconnected");
  AnnotatedPath path{u, v, {}};
  for (NodeId n = v; n != u; n = a.origin(via[n])) path.arcs.push_back(via[n]);
  std::reverse(path.arcs.begin(), path.arcs.end());

  // Splice surgery to a fixpoint: ride an edge between two nodes of the path
  // whenever that strictly decreases the code.
  std::vector<std::vector<DartId>> chains(a.edges.size());
  for (EdgeId e = 0; e < (EdgeId)a.edges.size(); ++e)
    if (a.edges[e].kind == EdgeKind::Normal) chains[e] = a.edge_arcs(e);

  std::vector<int> code = code_of(a, path);
  for (int guard = 0;; ++guard) {
    if (guard > 100000) fail("minimal_path surgery failed to terminate");
    bool improved = false;
    std::vector<NodeId> pn = path_nodes(a, path);
    std::vector<int> pos_on_path(a.nodes.size(), -1);
    for (int i = 0; i < (int)pn.size(); ++i) pos_on_path[pn[i]] = i;
    for (EdgeId e = 0; e < (EdgeId)a.edges.size() && !improved; ++e) {
      const std::vector<DartId>& ch = chains[e];
      if (ch.empty()) continue;
      std::vector<NodeId> cn = chain_nodes(a, ch);
      // hit positions of the path on this edge, in chain order
      std::vector<std::pair<int, int>> hits;  // (chain index, path index)
      for (int ci = 0; ci < (int)cn.size(); ++ci)
        if (pos_on_path[cn[ci]] >= 0) hits.push_back({ci, pos_on_path[cn[ci]]});
      for (size_t hi = 0; hi < hits.size() && !improved; ++hi)
        for (size_t hj = hi + 1; hj < hits.size() && !improved; ++hj) {
          auto [cx, px] = hits[hi];
          auto [cy, py] = hits[hj];
          if (px == py) continue;
          if (px > py) {
            std::swap(cx, cy);
            std::swap(px, py);
          }
          AnnotatedPath cand{u, v, {}};
          cand.arcs.assign(path.arcs.begin(), path.arcs.begin() + px);
          if (cx <= cy)
            for (int ci = cx; ci < cy; ++ci) cand.arcs.push_back(ch[ci]);
          else
            for (int ci = cx - 1; ci >= cy; --ci) cand.arcs.push_back(a.twin(ch[ci]));
          cand.arcs.insert(cand.arcs.end(), path.arcs.begin() + py, path.arcs.end());
          if (!node_simple(a, cand)) continue;
          std::vector<int> cc = code_of(a, cand);
          if (cc < code) {
            path = std::move(cand);
            code = std::move(cc);
            improved = true;
          }
        }
    }
    if (!improved) break;
  }

  // The code order is total, so a minimal element is a global minimum; the
  // surgery fixpoint only seeds the bound.  Certify by branch and bound over
  // node-simple paths: r and the current interval's passing count only grow,
  // so a partial path whose decided code prefix already exceeds the best can
  // be cut.
  struct Bnb {
    const Arrangement& a;
    NodeId v;
    std::vector<char> used;
    std::vector<DartId> cur;
    std::vector<int> passing{0};  // per interval so far
    std::vector<int> best;
    std::vector<DartId> best_arcs;
    long steps = 0;

    bool cut() const {
      int r = (int)passing.size() - 1;
      if (r > best[0]) return true;
      if (r < best[0]) return false;
      for (size_t i = 0; i < passing.size(); ++i) {
        int b = i + 1 < best.size() ? best[i + 1] : 0;
        if (passing[i] != b) return passing[i] > b;
      }
      return false;
    }
    void dfs(NodeId at) {
      if (++steps > 50'000'000) fail("minimal_path search exceeded its cap");
      if (at == v) {
        std::vector<int> code{(int)passing.size() - 1};
        code.insert(code.end(), passing.begin(), passing.end());
        if (code < best) {
          best = code;
          best_arcs = cur;
        }
        return;
      }
      for (DartId d : a.rotation[at]) {
        if (a.is_wall(d)) continue;
        NodeId t = a.target(d);
        if (used[t]) continue;
        bool turn = !cur.empty() && a.edge_of(cur.back()) != a.edge_of(d);
        if (turn)
          passing.push_back(0);
        else if (!cur.empty())
          ++passing.back();
        if (!cut()) {
          used[t] = 1;
          cur.push_back(d);
          dfs(t);
          cur.pop_back();
          used[t] = 0;
        }
        if (turn)
          passing.pop_back();
        else if (!cur.empty())
          --passing.back();
      }
    }
  };
  Bnb bnb{a, v, std::vector<char>(a.nodes.size(), 0), {}, {0}, code, path.arcs, 0};
  bnb.used[u] = 1;
  bnb.dfs(u);
  path.arcs = std::move(bnb.best_arcs);
  return path;
}

Curve perturb_to_curve(const Arrangement& a, const AnnotatedPath& path, int k) {
  if (path.arcs.empty()) fail("perturb_to_curve needs a nonempty path");
  Curve c;
  c.start = path.start;
  c.end = path.end;
  c.start_corner = CornerRef{path.arcs.front()};
  c.end_corner = CornerRef{a.rot_prev(a.twin(path.arcs.back()))};
  for (size_t i = 1; i < path.arcs.size(); ++i) {
    // swing clockwise around the node from the left of the incoming arc to
    // the left of the outgoing one, crossing every dart in between
    DartId cur = a.rot_prev(a.twin(path.arcs[i - 1]));
    for (int guard = 0; cur != path.arcs[i]; ++guard) {
      if (guard > (int)a.darts.size()) fail("perturb_to_curve lost its corner walk");
      c.crossings.push_back(cur);
      cur = a.rot_prev(cur);
    }
  }
  std::vector<int> prof = curve_profile(a, c, /*count_endpoints=*/false);
  for (EdgeId e = 0; e < (EdgeId)prof.size(); ++e)
    if (prof[e] > 2 * k)
      fail("perturbation bound violated on edge " + a.edges[e].name);
  return c;
}

}  // namespace topo
