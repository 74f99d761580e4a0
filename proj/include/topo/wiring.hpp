#pragma once

#include <string>
#include <vector>

#include "topo/arrangement.hpp"

namespace topo {

// Events of a circular sweep over a cylinder drawing, bottom to top.  Slots
// index the current circular order of live strands; a crossing at slot i
// swaps the strands at i and (i+1) mod live, wrapping through the back.
struct WiringEvent {
  enum Kind { Cross, Birth, Death, Boundary } kind = Cross;
  int slot = 0;
  EdgeId edge = kNoEdge;  // Birth only
  int group = -1;         // Birth/Death; adjacent same-group ends share a vertex
  std::string label;      // vertex label or boundary name
};

struct WiringDiagram {
  std::vector<std::string> edge_names;
  std::vector<WiringEvent> events;
};

// Text format, one event per line:
//   edge NAME            (declares edge ids in order)
//   birth SLOT EDGE [GROUP [LABEL]]
//   death SLOT [GROUP [LABEL]]
//   x SLOT
//   | NAME
std::string to_text(const WiringDiagram& d);
WiringDiagram diagram_from_text(const std::string& text);  // throws std::runtime_error

// Incremental sweep front over a shared arrangement.  Grafting splices a
// fully swept sub-picture (its own front) into a gap of this front, which is
// how side-by-side nested annuli are assembled.
class SweepBuilder {
 public:
  explicit SweepBuilder(Arrangement& a) : arr_(a) {}

  NodeId birth(int slot, EdgeId edge, int group = -1, std::string label = {});
  NodeId cross(int slot);
  NodeId death(int slot, int group = -1, std::string label = {});
  void graft(SweepBuilder& inner, int slot);

  // Emits containment merges for components that never touch the rest of the
  // drawing, using the face each component was born into.  Call once, after
  // the last event and before validating.
  void finish();

  int live() const { return (int)pending_.size(); }
  EdgeId strand_edge(int slot) const { return pending_[slot].edge; }
  // Dangling down dart of the live strand; a stable identity across events.
  DartId strand_back(int slot) const { return pending_[slot].back; }
  NodeId first_birth() const { return first_birth_; }
  NodeId last_death() const { return last_death_node_; }

  // Corner on the face below the first birth (the sweep's inner face).
  // Valid once the first birth vertex's rotation is final.
  CornerRef start_corner() const;
  // Corner on the face above the last death.
  CornerRef end_corner() const;

 private:
  struct Pending {
    DartId out = kNoDart, back = kNoDart;
    EdgeId edge = kNoEdge;
    NodeId from = kNoNode;
    int group = -1;
    bool from_birth = false;
  };
  // Face-in-progress between adjacent live strands.  Anchors are evaluated
  // lazily: a south anchor is the wraparound corner at a terminal vertex, a
  // dart anchor is a fixed crossing corner.
  struct FaceClass {
    int parent;
    int seq;  // creation time; the oldest anchor survives unions
    NodeId anchor_node = kNoNode;
    DartId anchor_dart = kNoDart;
  };
  struct BirthRec {
    NodeId node;
    int cls;
    int seq;
  };
  int new_class(NodeId south_node, DartId corner_dart);
  int find_class(int c);
  int union_classes(int a, int b);
  CornerRef class_corner(int c) const;
  void flush_death_run();

  Arrangement& arr_;
  std::vector<Pending> pending_;
  std::vector<int> gaps_;  // gaps_[i]: face class left of strand i, circularly
  std::vector<FaceClass> classes_;
  std::vector<BirthRec> birth_recs_;
  int ambient_cls_ = -1;  // face class when no strands are live
  // Deaths at one shared vertex are a single point event: gaps strictly
  // between the dying strands seal into faces, and only the outer pair of
  // gaps merges.  The merge is deferred until the run ends.
  bool run_active_ = false;
  int run_left_ = -1, run_right_ = -1;
  NodeId first_birth_ = kNoNode;
  NodeId last_death_node_ = kNoNode;
  int last_death_group_ = -1;
  int last_death_slot_ = -1;
  bool last_was_death_ = false;
};

struct CompileOptions {
  // Adds wall cycles through the terminal vertices and marks the cap faces,
  // so transversal searches cannot slip around strand endpoints.  Requires
  // births first, deaths last, one strand per terminal vertex.
  bool rims = false;
};

struct CompileResult {
  Arrangement arr;
  std::vector<NodeId> births;     // per Birth event
  std::vector<NodeId> deaths;     // per Death event
  std::vector<NodeId> crossings;  // per Cross event
};

CompileResult compile(const WiringDiagram& d, const CompileOptions& opts = {});

}  // namespace topo
