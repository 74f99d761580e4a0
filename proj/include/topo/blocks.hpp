#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "topo/wiring.hpp"

namespace topo {

// Event emitter over a circular deck of strands.  Cables are contiguous runs
// of strands that move as one and never cross internally.
class DeckOps {
 public:
  DeckOps(WiringDiagram& d, std::vector<EdgeId> order);

  int size() const { return (int)order_.size(); }
  const std::vector<EdgeId>& order() const { return order_; }
  int pos_of(EdgeId e) const;

  // Crosses the strands at circular positions p and p+1 (left over right).
  void swap_right(int p);
  // The cable at positions [p, p+s) passes the next t strands to its right.
  void pass(int p, int s, int t);
  void boundary(std::string name);

  // One full turn: every winder cable passes every vertical cable exactly
  // once and the circular order is restored.  Cables must alternate
  // winder/vertical around the deck.
  void carousel_turn(const std::vector<std::vector<EdgeId>>& cables,
                     const std::vector<bool>& winder);

 private:
  int cable_start(const std::vector<EdgeId>& cable) const;
  WiringDiagram& d_;
  std::vector<EdgeId> order_;
};

// Fragment emitters.  Cables are given as edge lists; strands of one cable
// must be contiguous on the deck in the given order.

// Cables a and b cross as cables exactly m times, always winding the same
// way around the cylinder.
void emit_spiral(DeckOps& ops, const std::vector<EdgeId>& a, const std::vector<EdgeId>& b,
                 int m);

// Deck order [d, a, c, b]: a and b vertical, c and d parallel diagonals each
// winding one full turn.  Cable crossings: da, db, ca, cb.
void emit_crossing_forcing(DeckOps& ops, const std::vector<EdgeId>& a,
                           const std::vector<EdgeId>& b, const std::vector<EdgeId>& c,
                           const std::vector<EdgeId>& d);

// k levels over 4^k contiguous strands; at each level every cable splits into
// four quadrant subcables [diag, vert, diag, vert] and all diagonals wind one
// full turn together.  Coarsest level is emitted last (topmost).
void emit_forcing(DeckOps& ops, const std::vector<EdgeId>& strands, int k);

// Same recursion over two strand groups sharing each level's turn.
void emit_double_forcing(DeckOps& ops, const std::vector<EdgeId>& group1,
                         const std::vector<EdgeId>& group2, int k);

// k identical subblocks; per subblock each winder cable crosses each vertical
// cable exactly once.  Deck order alternates winders[0], verticals[0], ...
void emit_grid(DeckOps& ops, const std::vector<std::vector<EdgeId>>& winders,
               const std::vector<std::vector<EdgeId>>& verticals, int k);

// Standalone blocks: one vertex per strand end, ready to compile.
WiringDiagram spiral_block(int m, int size_a = 1, int size_b = 1);
WiringDiagram crossing_forcing_block(std::array<int, 4> sizes = {1, 1, 1, 1});
WiringDiagram forcing_block(int k);
WiringDiagram double_forcing_block(int k);
WiringDiagram grid_block(int m, int k, int cable_size = 1);

// Sequential composition on a shared deck.
struct BlockFragment {
  std::string name;
  std::function<void(DeckOps&)> emit;
};
WiringDiagram stack_blocks(const std::vector<std::string>& edge_names,
                           const std::vector<BlockFragment>& fragments);

}  // namespace topo
