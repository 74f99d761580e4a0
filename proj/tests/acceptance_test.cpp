// End-to-end acceptance run: one line per criterion, exit 1 on any failure.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "random_drawings.hpp"
#include "topo/blocks.hpp"
#include "topo/codes.hpp"
#include "topo/constructions.hpp"
#include "topo/routing.hpp"
#include "topo/verify.hpp"

using namespace topo;

namespace {

int failures = 0;

void run(int idx, const std::string& name, const std::function<bool(std::string&)>& body) {
  std::string why;
  bool ok = false;
  try {
    ok = body(why);
  } catch (const std::exception& e) {
    why = std::string("exception: ") + e.what();
  }
  std::printf("criterion %2d  %-46s %s%s%s\n", idx, name.c_str(), ok ? "pass" : "FAIL",
              why.empty() ? "" : "  ", why.c_str());
  if (!ok) ++failures;
}

Arrangement rimmed(const WiringDiagram& d) {
  auto res = compile(d, CompileOptions{.rims = true});
  if (!res.arr.valid()) throw std::runtime_error("invalid block compilation");
  return res.arr;
}

EdgeId by_name(const Arrangement& a, const std::string& name) {
  for (EdgeId e = 0; e < (EdgeId)a.edges.size(); ++e)
    if (a.edges[e].name == name) return e;
  throw std::runtime_error("no edge named " + name);
}

std::vector<NodeId> vertices_of(const Arrangement& a) {
  std::vector<NodeId> vs;
  for (NodeId n = 0; n < (NodeId)a.nodes.size(); ++n)
    if (a.nodes[n].kind == NodeKind::Vertex && !a.rotation[n].empty()) vs.push_back(n);
  return vs;
}

std::set<std::pair<NodeId, NodeId>> adjacency(const Arrangement& a) {
  std::set<std::pair<NodeId, NodeId>> adj;
  for (EdgeId e = 0; e < (EdgeId)a.edges.size(); ++e) {
    if (a.edges[e].name.empty()) continue;
    auto [s, t] = a.edge_endpoints(e);
    adj.insert(std::minmax(s, t));
  }
  return adj;
}

int profile_max(const std::vector<int>& prof) {
  return prof.empty() ? 0 : *std::max_element(prof.begin(), prof.end());
}

int max_common(const Arrangement& a) {
  auto cm = a.crossing_matrix();
  int worst = 0;
  for (size_t i = 0; i < cm.size(); ++i)
    for (size_t j = i + 1; j < cm.size(); ++j)
      worst = std::max(worst, cm[i][j] + a.shared_endpoints((EdgeId)i, (EdgeId)j));
  return worst;
}

// Path from u along the given edges, turning at each consecutive pair's
// unique shared node, ending at v.
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
      if (stop == kNoNode) throw std::runtime_error("walk_edges: no turn node");
    }
    int ia = -1, is = -1;
    for (int x = 0; x < (int)cn.size(); ++x) {
      if (cn[x] == at) ia = x;
      if (cn[x] == stop) is = x;
    }
    if (ia < 0 || is < 0) throw std::runtime_error("walk_edges: endpoint off chain");
    if (ia < is)
      for (int x = ia; x < is; ++x) p.arcs.push_back(ch[x]);
    else
      for (int x = ia - 1; x >= is; --x) p.arcs.push_back(a.twin(ch[x]));
    at = stop;
  }
  if (at != v) throw std::runtime_error("walk_edges: did not reach target");
  return p;
}

// Exhaustive lexicographic minimum over node-simple u-v paths.
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
  if (visits > 2000000) throw std::runtime_error("oracle blew its visit budget");
  return best;
}

// Seven-edge chain with six turning crossings and one extra passing crossing
// riding on each of the third, fourth and sixth intervals.
CompileResult figure_eight_chain() {
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
  for (int i = 2; i <= 7; ++i) {
    if (i == 4 || i == 5 || i == 7) {
      birth(1, "h" + std::to_string(i == 4 ? 1 : i == 5 ? 2 : 3), "w");
      cross(0);
      death(0, "w");
    }
    birth(1, "g" + std::to_string(i), "w");
    cross(0);
    death(1, "w");
  }
  death(0, "v");
  return compile(d);
}

}  // namespace

int main() {
  run(1, "spiral transversal totals", [](std::string& why) {
    for (int m = 1; m <= 8; ++m) {
      Arrangement a = rimmed(spiral_block(m, 1, 1));
      int got = transversal_stats(a).min_total;
      if (got != m - 1) {
        why = "m=" + std::to_string(m) + " gave " + std::to_string(got);
        return false;
      }
    }
    return true;
  });

  run(2, "forcing transversal minimax", [](std::string& why) {
    for (int k = 1; k <= 2; ++k) {
      int got = transversal_stats(rimmed(forcing_block(k))).min_max;
      if (got != k) {
        why = "k=" + std::to_string(k) + " gave " + std::to_string(got);
        return false;
      }
    }
    return true;
  });

  run(3, "grid transversal totals", [](std::string& why) {
    for (int m = 1; m <= 8; ++m)
      for (int k = 1; m * k <= 8; ++k) {
        int got = transversal_stats(rimmed(grid_block(m, k))).min_total;
        if (got != m * k - 1) {
          why = "m=" + std::to_string(m) + " k=" + std::to_string(k) + " gave " +
                std::to_string(got);
          return false;
        }
      }
    return true;
  });

  run(4, "stacked construction separates at l=2", [](std::string& why) {
    Construction c = construction_2k(1);
    if (check_kl_construction(c.arr, c.x, c.y, 1, 2).verdict != Verdict::Pass) {
      why = "l=2 did not pass";
      return false;
    }
    VerificationReport r = check_kl_construction(c.arr, c.x, c.y, 1, 3);
    if (r.verdict != Verdict::Fail || !r.has_curve) {
      why = "l=3 did not fail with a witness";
      return false;
    }
    int worst = profile_max(curve_profile(c.arr, r.witness_curve, true));
    if (worst != 2) {
      why = "witness max " + std::to_string(worst);
      return false;
    }
    return true;
  });

  run(5, "six-edge fixture separates at l=2", [](std::string& why) {
    Construction c = fixture_G();
    VerificationReport r = check_kl_construction(c.arr, c.x, c.y, 1, 2);
    if (r.verdict != Verdict::Pass) {
      why = "verdict not pass";
      return false;
    }
    return true;
  });

  run(6, "random suite: 2k curves always exist", [](std::string& why) {
    std::mt19937_64 rng(424242);
    for (int k : {1, 2}) {
      int instances = 0;
      while (instances < 100) {
        Arrangement a = random_k_simple(rng, 8, k);
        if (!a.valid()) {
          why = "random drawing failed validation";
          return false;
        }
        std::vector<NodeId> vs = vertices_of(a);
        auto adj = adjacency(a);
        std::vector<int32_t> comp = a.node_components();
        for (size_t i = 0; i < vs.size(); ++i)
          for (size_t j = i + 1; j < vs.size(); ++j) {
            if (adj.count(std::minmax(vs[i], vs[j]))) continue;
            if (comp[vs[i]] == comp[vs[j]]) {
              AnnotatedPath mp = minimal_path(a, vs[i], vs[j]);
              Curve pc = perturb_to_curve(a, mp, k);  // throws above 2k
              if (profile_max(curve_profile(a, pc, false)) > 2 * k) {
                why = "perturbed path exceeded 2k";
                return false;
              }
            }
            BestCurveResult bc = best_curve(a, vs[i], vs[j], true);
            if (bc.status != RouteStatus::Found || bc.optimum > 2 * k) {
              why = "a pair needed more than 2k on some edge";
              return false;
            }
          }
        ++instances;
      }
    }
    return true;
  });

  run(7, "path code surgery matches exhaustive oracle", [](std::string& why) {
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
          if (code_of(a, mp) != oracle_min_code(a, vs[i], vs[j])) {
            why = "surgery code above the enumerated minimum";
            return false;
          }
          ++checked;
        }
      if (checked) ++instances;
    }
    CompileResult res = figure_eight_chain();
    const Arrangement& a = res.arr;
    if (!a.valid()) {
      why = "chain fixture invalid";
      return false;
    }
    std::vector<EdgeId> chain;
    for (int i = 1; i <= 7; ++i) chain.push_back(by_name(a, "g" + std::to_string(i)));
    std::vector<int> code = code_of(a, walk_edges(a, res.births[0], chain, res.deaths.back()));
    if (code != std::vector<int>{6, 0, 0, 1, 1, 0, 1, 0}) {
      why = "chain code mismatch";
      return false;
    }
    return true;
  });

  run(8, "saturated outputs have no cheap vertices", [](std::string& why) {
    std::mt19937_64 rng(555);
    for (int seed = 0; seed < 50; ++seed) {
      Arrangement a = random_k_simple(rng, 5, 1);
      if (!a.valid()) {
        why = "random drawing failed validation";
        return false;
      }
      SaturationResult sat = greedy_saturate(a, 1);
      if (!sat.verified || !sat.arr.valid()) {
        why = "saturation unverified or invalid";
        return false;
      }
      const Arrangement& g = sat.arr;
      std::vector<NodeId> vs = vertices_of(g);
      std::vector<int> deg(g.nodes.size(), 0);
      std::vector<std::set<NodeId>> nbr(g.nodes.size());
      for (EdgeId e = 0; e < (EdgeId)g.edges.size(); ++e) {
        auto [s, t] = g.edge_endpoints(e);
        ++deg[s];
        ++deg[t];
        nbr[s].insert(t);
        nbr[t].insert(s);
      }
      for (NodeId v : vs)
        if (deg[v] < 3) {
          why = "seed " + std::to_string(seed) + ": vertex of degree " + std::to_string(deg[v]);
          return false;
        }
      // no component that is exactly a triangle
      std::vector<int32_t> comp = g.node_components();
      std::set<int32_t> tri_comps;
      for (NodeId v : vs) tri_comps.insert(comp[v]);
      for (int32_t cidx : tri_comps) {
        std::vector<NodeId> members;
        for (NodeId v : vs)
          if (comp[v] == cidx) members.push_back(v);
        if (members.size() != 3) continue;
        bool closed = true;
        for (NodeId v : members)
          if (nbr[v].size() != 2) closed = false;
        if (closed) {
          why = "seed " + std::to_string(seed) + ": isolated triangle";
          return false;
        }
      }
    }
    return true;
  });

  run(9, "routed construction is saturated at l=2", [](std::string& why) {
    Construction c = three_halves_saturated(1);
    VerificationReport r = check_kl_saturated(c.arr, 1, 2);
    if (r.verdict != Verdict::Pass) {
      why = "verdict not pass";
      return false;
    }
    return true;
  });

  run(10, "seed generators: counts and simplicity", [](std::string& why) {
    for (int n : {9, 12, 15}) {
      Construction p = ladder_seed(n, 5, LadderVariant::Path);
      int verts = (int)vertices_of(p.arr).size();
      if (verts != n || (int)p.arr.edges.size() != 2 * n / 3) {
        why = "ladder n=" + std::to_string(n) + " has " + std::to_string(verts) +
              " vertices, " + std::to_string(p.arr.edges.size()) + " edges";
        return false;
      }
      if (check_k_simple(p.arr, 5).verdict != Verdict::Pass) {
        why = "ladder path seed not 5-simple";
        return false;
      }
    }
    struct Gen {
      const char* name;
      Construction c;
      int k;
    };
    std::vector<Gen> gens;
    gens.push_back({"ladder matching", ladder_seed(12, 4, LadderVariant::Matching), 4});
    gens.push_back({"bundle k2", bundle_seed_k2(64), 2});
    gens.push_back({"bundle k3", bundle_seed_k3(16), 3});
    gens.push_back({"nested", nested_saturated_seed(24), 1});
    for (const Gen& g : gens)
      if (!g.c.arr.valid() || check_k_simple(g.c.arr, g.k).verdict != Verdict::Pass) {
        why = std::string(g.name) + " failed its simplicity check";
        return false;
      }
    // tight seeds stay within the small-degree regime
    Construction lp = ladder_seed(9, 5, LadderVariant::Path);
    std::vector<int> deg(lp.arr.nodes.size(), 0);
    for (EdgeId e = 0; e < (EdgeId)lp.arr.edges.size(); ++e) {
      auto [s, t] = lp.arr.edge_endpoints(e);
      ++deg[s];
      ++deg[t];
    }
    if (*std::max_element(deg.begin(), deg.end()) > 26) {
      why = "ladder degree above 26";
      return false;
    }
    return true;
  });

  run(11, "doubled pseudoline families", [](std::string& why) {
    Construction s = pseudo_forcing_small(8);
    if (!s.arr.valid() || s.arr.anchors.size() != 3 || max_common(s.arr) > 8) {
      why = "small family shape wrong";
      return false;
    }
    Construction t = pseudo_forcing_iterated(8, 3);
    if (!t.arr.valid() || t.arr.anchors.size() != 8 || max_common(t.arr) > 8) {
      why = "iterated family shape wrong";
      return false;
    }
    if (std::getenv("TOPO_RUN_EXHAUSTIVE_FORCING")) {
      VerificationReport r = check_forcing(s.arr, s.arr.anchors, 5);
      if (r.verdict == Verdict::Fail) {
        why = "exhaustive tier refuted the forcing claim";
        return false;
      }
      why = r.verdict == Verdict::Pass ? "(exhaustive tier passed)" : "(exhaustive tier unverified)";
    }
    return true;
  });

  std::printf("%s\n", failures ? "ACCEPTANCE: FAIL" : "ACCEPTANCE: PASS");
  return failures ? 1 : 0;
}
