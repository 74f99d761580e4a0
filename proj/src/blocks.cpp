#include "topo/blocks.hpp"

#include <algorithm>
#include <stdexcept>

namespace topo {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error("blocks: " + msg); }

bool is_pow4(int m) {
  while (m > 1) {
    if (m % 4) return false;
    m /= 4;
  }
  return m == 1;
}

}  // namespace

DeckOps::DeckOps(WiringDiagram& d, std::vector<EdgeId> order) : d_(d), order_(std::move(order)) {
  for (EdgeId e : order_)
    if (e < 0 || e >= (EdgeId)d_.edge_names.size()) fail("deck strand outside edge table");
}

int DeckOps::pos_of(EdgeId e) const {
  for (int i = 0; i < (int)order_.size(); ++i)
    if (order_[i] == e) return i;
  fail("strand not on deck");
}

void DeckOps::swap_right(int p) {
  int n = size();
  if (n < 2 || p < 0 || p >= n) fail("swap position out of range");
  d_.events.push_back({WiringEvent::Cross, p, kNoEdge, -1, {}});
  std::swap(order_[p], order_[(p + 1) % n]);
}

void DeckOps::pass(int p, int s, int t) {
  int n = size();
  if (s < 1 || t < 1 || s + t > n) fail("bad pass sizes");
  for (int i = s - 1; i >= 0; --i)
    for (int j = 0; j < t; ++j) swap_right((p + i + j) % n);
}

void DeckOps::boundary(std::string name) {
  d_.events.push_back({WiringEvent::Boundary, 0, kNoEdge, -1, std::move(name)});
}

int DeckOps::cable_start(const std::vector<EdgeId>& cable) const {
  // The cable must be cyclically contiguous and in deck order.
  int p = pos_of(cable[0]);
  int n = size();
  for (int i = 1; i < (int)cable.size(); ++i)
    if (order_[(p + i) % n] != cable[i]) fail("cable not contiguous on deck");
  return p;
}

void DeckOps::carousel_turn(const std::vector<std::vector<EdgeId>>& cables,
                            const std::vector<bool>& winder) {
  int nc = (int)cables.size();
  if (nc < 2 || nc % 2) fail("carousel needs an even cable count");
  int total = 0;
  for (const auto& c : cables) total += (int)c.size();
  if (total != size()) fail("carousel cables must cover the deck");
  int steps = nc / 2;

  for (int step = 0; step < steps; ++step) {
    // Snapshot starts; cables alternate, so each winder's right neighbour is
    // a distinct vertical and left-to-right processing keeps them adjacent.
    std::vector<std::pair<int, int>> ws;  // (start pos, cable index)
    std::vector<int> start(nc);
    for (int c = 0; c < nc; ++c) {
      start[c] = cable_start(cables[c]);
      if (winder[c]) ws.push_back({start[c], c});
    }
    if ((int)ws.size() != steps) fail("carousel needs equal winder and vertical counts");
    std::sort(ws.begin(), ws.end());
    for (auto [p0, c] : ws) {
      int p = cable_start(cables[c]);
      int s = (int)cables[c].size();
      // right neighbour cable
      EdgeId next = order_[(p + s) % size()];
      int v = -1;
      for (int j = 0; j < nc; ++j)
        if (!winder[j] && std::find(cables[j].begin(), cables[j].end(), next) != cables[j].end())
          v = j;
      if (v < 0) fail("winder cable blocked; cables do not alternate");
      pass(p, s, (int)cables[v].size());
    }
  }
}

void emit_spiral(DeckOps& ops, const std::vector<EdgeId>& a, const std::vector<EdgeId>& b,
                 int m) {
  if (m < 1) fail("spiral needs m >= 1");
  for (int i = 0; i < m; ++i) ops.pass(ops.pos_of(b[0]), (int)b.size(), (int)a.size());
}

void emit_crossing_forcing(DeckOps& ops, const std::vector<EdgeId>& a,
                           const std::vector<EdgeId>& b, const std::vector<EdgeId>& c,
                           const std::vector<EdgeId>& d) {
  ops.carousel_turn({d, a, c, b}, {true, false, true, false});
}

namespace {

// Quadrant cables of one level: strands regrouped in fours of equal size.
void forcing_level(DeckOps& ops, const std::vector<std::vector<EdgeId>>& groups, int pieces) {
  std::vector<std::vector<EdgeId>> cables;
  std::vector<bool> winder;
  for (const auto& g : groups) {
    int sz = (int)g.size() / pieces;
    for (int q = 0; q < pieces; ++q) {
      cables.emplace_back(g.begin() + q * sz, g.begin() + (q + 1) * sz);
      winder.push_back(q % 2 == 0);
    }
  }
  ops.carousel_turn(cables, winder);
}

void emit_forcing_groups(DeckOps& ops, const std::vector<std::vector<EdgeId>>& groups, int k) {
  if (k < 1) fail("forcing needs k >= 1");
  for (const auto& g : groups)
    if (!is_pow4((int)g.size()) || (int)g.size() < (1 << (2 * k)))
      fail("forcing group size must be 4^j with j >= k");
  // Finest level first: at level i (from the bottom) each group splits into
  // 4^(k-i+1) cables.
  for (int i = k; i >= 1; --i) forcing_level(ops, groups, 1 << (2 * i));
}

}  // namespace

void emit_forcing(DeckOps& ops, const std::vector<EdgeId>& strands, int k) {
  emit_forcing_groups(ops, {strands}, k);
}

void emit_double_forcing(DeckOps& ops, const std::vector<EdgeId>& group1,
                         const std::vector<EdgeId>& group2, int k) {
  emit_forcing_groups(ops, {group1, group2}, k);
}

void emit_grid(DeckOps& ops, const std::vector<std::vector<EdgeId>>& winders,
               const std::vector<std::vector<EdgeId>>& verticals, int k) {
  if (winders.size() != verticals.size() || winders.empty()) fail("grid needs m matched cables");
  if (k < 1) fail("grid needs k >= 1");
  std::vector<std::vector<EdgeId>> cables;
  std::vector<bool> flags;
  for (size_t i = 0; i < winders.size(); ++i) {
    cables.push_back(winders[i]);
    flags.push_back(true);
    cables.push_back(verticals[i]);
    flags.push_back(false);
  }
  for (int sub = 0; sub < k; ++sub) ops.carousel_turn(cables, flags);
}

namespace {

WiringDiagram standalone(const std::vector<std::string>& names,
                         const std::function<void(DeckOps&)>& emit) {
  WiringDiagram d;
  d.edge_names = names;
  std::vector<EdgeId> order(names.size());
  for (int i = 0; i < (int)names.size(); ++i) {
    order[i] = i;
    d.events.push_back({WiringEvent::Birth, i, i, -1, names[i] + "_lo"});
  }
  DeckOps ops(d, order);
  emit(ops);
  // Deaths left to right in final deck order.
  for (int i = 0; i < (int)names.size(); ++i) {
    EdgeId e = ops.order()[i];
    d.events.push_back({WiringEvent::Death, 0, kNoEdge, -1, names[e] + "_hi"});
  }
  return d;
}

std::vector<std::string> numbered(const std::string& base, int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(base + std::to_string(i));
  return out;
}

std::vector<EdgeId> range_ids(int from, int count) {
  std::vector<EdgeId> out;
  for (int i = 0; i < count; ++i) out.push_back(from + i);
  return out;
}

}  // namespace

WiringDiagram spiral_block(int m, int size_a, int size_b) {
  if (m < 1 || size_a < 1 || size_b < 1) fail("spiral_block: bad parameters");
  auto names = numbered("a", size_a);
  for (const auto& n : numbered("b", size_b)) names.push_back(n);
  return standalone(names, [&](DeckOps& ops) {
    emit_spiral(ops, range_ids(0, size_a), range_ids(size_a, size_b), m);
  });
}

WiringDiagram crossing_forcing_block(std::array<int, 4> sizes) {
  for (int s : sizes)
    if (s < 1) fail("crossing_forcing_block: bad sizes");
  // Deck bottom order [d, a, c, b].
  std::vector<std::string> names = numbered("d", sizes[3]);
  for (const auto& n : numbered("a", sizes[0])) names.push_back(n);
  for (const auto& n : numbered("c", sizes[2])) names.push_back(n);
  for (const auto& n : numbered("b", sizes[1])) names.push_back(n);
  int pd = 0, pa = sizes[3], pc = pa + sizes[0], pb = pc + sizes[2];
  return standalone(names, [&](DeckOps& ops) {
    emit_crossing_forcing(ops, range_ids(pa, sizes[0]), range_ids(pb, sizes[1]),
                          range_ids(pc, sizes[2]), range_ids(pd, sizes[3]));
  });
}

WiringDiagram forcing_block(int k) {
  if (k < 1 || k > 8) fail("forcing_block: bad k");
  int m = 1 << (2 * k);
  return standalone(numbered("e", m),
                    [&](DeckOps& ops) { emit_forcing(ops, range_ids(0, m), k); });
}

WiringDiagram double_forcing_block(int k) {
  if (k < 1 || k > 8) fail("double_forcing_block: bad k");
  int m = 1 << (2 * k);
  auto names = numbered("p", m);
  for (const auto& n : numbered("q", m)) names.push_back(n);
  return standalone(names, [&](DeckOps& ops) {
    emit_double_forcing(ops, range_ids(0, m), range_ids(m, m), k);
  });
}

WiringDiagram grid_block(int m, int k, int cable_size) {
  if (m < 1 || k < 1 || cable_size < 1) fail("grid_block: bad parameters");
  std::vector<std::string> names;
  std::vector<std::vector<EdgeId>> winders, verticals;
  for (int i = 0; i < m; ++i) {
    winders.push_back(range_ids((int)names.size(), cable_size));
    for (const auto& n : numbered("w" + std::to_string(i) + "_", cable_size))
      names.push_back(n);
    verticals.push_back(range_ids((int)names.size(), cable_size));
    for (const auto& n : numbered("v" + std::to_string(i) + "_", cable_size))
      names.push_back(n);
  }
  return standalone(names, [&](DeckOps& ops) { emit_grid(ops, winders, verticals, k); });
}

WiringDiagram stack_blocks(const std::vector<std::string>& edge_names,
                           const std::vector<BlockFragment>& fragments) {
  WiringDiagram d;
  d.edge_names = edge_names;
  std::vector<EdgeId> order(edge_names.size());
  for (int i = 0; i < (int)edge_names.size(); ++i) {
    order[i] = i;
    d.events.push_back({WiringEvent::Birth, i, i, -1, edge_names[i] + "_lo"});
  }
  DeckOps ops(d, order);
  for (const auto& f : fragments) {
    ops.boundary(f.name);
    f.emit(ops);
  }
  ops.boundary("top");
  for (int i = 0; i < (int)edge_names.size(); ++i) {
    EdgeId e = ops.order()[i];
    d.events.push_back({WiringEvent::Death, 0, kNoEdge, -1, edge_names[e] + "_hi"});
  }
  return d;
}

}  // namespace topo
