#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "topo/blocks.hpp"
#include "topo/constructions.hpp"
#include "topo/io.hpp"
#include "topo/routing.hpp"
#include "topo/verify.hpp"

namespace {

using namespace topo;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open " + path);
  out << content;
}

bool wants_svg(const std::string& path) {
  return path.size() > 4 && path.substr(path.size() - 4) == ".svg";
}

void write_arrangement(const std::string& path, const Arrangement& a) {
  write_output(path, wants_svg(path) ? arrangement_to_svg(a) : arrangement_to_json(a));
}

NodeId node_by_label(const Arrangement& a, const std::string& label) {
  for (NodeId n = 0; n < (NodeId)a.nodes.size(); ++n)
    if (a.nodes[n].kind == NodeKind::Vertex && a.nodes[n].label == label) return n;
  throw UsageError("no vertex labeled '" + label + "'");
}

RouteLimits limits_from(long max_expansions) {
  RouteLimits lim;
  if (max_expansions > 0) {
    lim.max_expansions = max_expansions;
  } else if (const char* env = std::getenv("TOPO_MAX_EXPANSIONS")) {
    lim.max_expansions = std::atol(env);
    if (lim.max_expansions <= 0) throw UsageError("bad TOPO_MAX_EXPANSIONS");
  }
  return lim;
}

Arrangement build_named(const std::string& name, int k, int l, int m, int n,
                        const std::string& input) {
  (void)l;
  auto rimmed = [](const WiringDiagram& d) { return compile(d, {.rims = true}).arr; };
  if (name == "spiral") return rimmed(spiral_block(m));
  if (name == "forcing") return rimmed(forcing_block(k));
  if (name == "double-forcing") return rimmed(double_forcing_block(k));
  if (name == "grid") return rimmed(grid_block(m, k));
  if (name == "crossing-forcing") return rimmed(crossing_forcing_block());
  if (name == "diagram") return compile(diagram_from_text(read_input(input))).arr;
  if (name == "weak76") return weak76(k).arr;
  if (name == "construction-2k-minus-1") return construction_2k_minus_1(k).arr;
  if (name == "construction-2k") return construction_2k(k).arr;
  if (name == "fixture-g") return fixture_G().arr;
  if (name == "nested-seed") return nested_saturated_seed(n).arr;
  if (name == "ladder-path") return ladder_seed(n, k, LadderVariant::Path).arr;
  if (name == "ladder-matching") return ladder_seed(n, k, LadderVariant::Matching).arr;
  if (name == "bundle-k2") return bundle_seed_k2(n).arr;
  if (name == "bundle-k3") return bundle_seed_k3(n).arr;
  if (name == "three-halves") return three_halves_saturated(k).arr;
  if (name == "pseudo-forcing-small") return pseudo_forcing_small(k).arr;
  if (name == "pseudo-forcing-iterated") return pseudo_forcing_iterated(k, m).arr;
  throw UsageError("unknown construction '" + name + "'");
}

int run(int argc, char** argv) {
  CLI::App app{"planar drawing toolkit"};
  app.require_subcommand(1);

  int k = 1, l = 2, m = 1, n = 0;
  long max_expansions = 0, seed = 0;
  std::string u_label, v_label, input, output, name, claim;

  CLI::App* build = app.add_subcommand("build", "emit a named construction");
  build->add_option("name", name, "construction name")->required();
  build->add_option("--k", k);
  build->add_option("--m", m);
  build->add_option("--n", n);
  build->add_option("--seed", seed, "reserved");
  build->add_option("-i,--input", input, "diagram text (for 'diagram')");
  build->add_option("-o,--output", output);

  CLI::App* verify = app.add_subcommand("verify", "check a claim, exit 0/1/2");
  verify->add_option("claim", claim, "simple|construction|saturated|kl-saturated|forcing")
      ->required();
  verify->add_option("input", input);
  verify->add_option("--k", k);
  verify->add_option("--l", l);
  verify->add_option("--u", u_label);
  verify->add_option("--v", v_label);
  verify->add_option("--max-expansions", max_expansions);
  verify->add_option("-o,--output", output);

  CLI::App* route = app.add_subcommand("route", "best curve between two vertices");
  route->add_option("input", input);
  route->add_option("--u", u_label)->required();
  route->add_option("--v", v_label)->required();
  route->add_option("--k", k, "unused; accepted for symmetry");
  route->add_option("--max-expansions", max_expansions);
  route->add_option("-o,--output", output);

  CLI::App* saturate = app.add_subcommand("saturate", "greedily add admissible edges");
  saturate->add_option("input", input);
  saturate->add_option("--k", k);
  saturate->add_option("--seed", seed, "reserved");
  saturate->add_option("--max-expansions", max_expansions);
  saturate->add_option("-o,--output", output);

  CLI::App* exp = app.add_subcommand("export", "re-emit as canonical json or svg");
  exp->add_option("input", input);
  exp->add_option("-o,--output", output);

  CLI::App* stats = app.add_subcommand("stats", "transversal statistics of a block");
  stats->add_option("input", input);
  stats->add_option("--max-expansions", max_expansions);
  stats->add_option("-o,--output", output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 64;
  }

  if (build->parsed()) {
    write_arrangement(output, build_named(name, k, l, m, n, input));
    return 0;
  }
  if (verify->parsed()) {
    Arrangement a = arrangement_from_json(read_input(input));
    RouteLimits lim = limits_from(max_expansions);
    VerificationReport r;
    if (claim == "simple") {
      r = check_k_simple(a, k);
    } else if (claim == "construction" || claim == "kl") {
      r = check_kl_construction(a, node_by_label(a, u_label.empty() ? "x" : u_label),
                                node_by_label(a, v_label.empty() ? "y" : v_label), k, l, lim);
    } else if (claim == "saturated") {
      r = check_saturated(a, k, lim);
    } else if (claim == "kl-saturated") {
      r = check_kl_saturated(a, k, l, lim);
    } else if (claim == "forcing") {
      if (a.anchors.empty()) throw UsageError("arrangement has no anchors");
      r = check_forcing(a, a.anchors, l, lim);
    } else {
      throw UsageError("unknown claim '" + claim + "'");
    }
    write_output(output, to_json(r));
    return exit_code(r);
  }
  if (route->parsed()) {
    Arrangement a = arrangement_from_json(read_input(input));
    NodeId u = node_by_label(a, u_label), v = node_by_label(a, v_label);
    BestCurveResult res = best_curve(a, u, v, /*count_endpoints=*/false, 64,
                                     limits_from(max_expansions));
    nlohmann::ordered_json j;
    j["status"] = res.status == RouteStatus::Found     ? "found"
                  : res.status == RouteStatus::Refuted ? "refuted"
                                                       : "cap-exceeded";
    if (res.status == RouteStatus::Found) {
      j["optimum"] = res.optimum;
      j["curve"] = {{"start", res.curve.start},
                    {"end", res.curve.end},
                    {"crossings", res.curve.crossings}};
      std::vector<int> profile = curve_profile(a, res.curve, false);
      j["profile"] = nlohmann::ordered_json::object();
      for (EdgeId e = 0; e < (EdgeId)a.edges.size(); ++e)
        if (profile[e] > 0) j["profile"][a.edges[e].name] = profile[e];
    }
    j["expansions"] = res.expansions;
    write_output(output, j.dump(2) + "\n");
    return res.status == RouteStatus::CapExceeded ? 2 : 0;
  }
  if (saturate->parsed()) {
    Arrangement a = arrangement_from_json(read_input(input));
    SaturationResult res = greedy_saturate(a, k, limits_from(max_expansions));
    std::cerr << "added " << res.edges_added << " edges"
              << (res.verified ? "" : " (some pairs unverified)") << "\n";
    write_arrangement(output, res.arr);
    return res.verified ? 0 : 2;
  }
  if (exp->parsed()) {
    write_arrangement(output, arrangement_from_json(read_input(input)));
    return 0;
  }
  if (stats->parsed()) {
    Arrangement a = arrangement_from_json(read_input(input));
    TransversalStats st = transversal_stats(a, limits_from(max_expansions));
    nlohmann::ordered_json j = {{"min_total", st.min_total}, {"min_max", st.min_max}};
    write_output(output, j.dump(2) + "\n");
    return 0;
  }
  return 64;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  }
}
