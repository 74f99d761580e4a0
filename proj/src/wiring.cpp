#include "topo/wiring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace topo {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error("wiring: " + msg); }

// Creation order across all builders; several fronts may share one map.
int g_seq = 0;

}  // namespace

int SweepBuilder::new_class(NodeId south_node, DartId corner_dart) {
  classes_.push_back({(int)classes_.size(), ++g_seq, south_node, corner_dart});
  return (int)classes_.size() - 1;
}

int SweepBuilder::find_class(int c) {
  while (classes_[c].parent != c) c = classes_[c].parent = classes_[classes_[c].parent].parent;
  return c;
}

int SweepBuilder::union_classes(int a, int b) {
  a = find_class(a);
  b = find_class(b);
  if (a == b) return a;
  if (classes_[a].seq > classes_[b].seq) std::swap(a, b);
  classes_[b].parent = a;
  return a;
}

CornerRef SweepBuilder::class_corner(int c) const {
  const FaceClass& fc = classes_[c];
  if (fc.anchor_dart != kNoDart) return {fc.anchor_dart};
  return {arr_.rotation[fc.anchor_node].back()};
}

void SweepBuilder::flush_death_run() {
  if (!run_active_) return;
  run_active_ = false;
  int m = union_classes(run_left_, run_right_);
  if (gaps_.empty()) ambient_cls_ = m;
}

NodeId SweepBuilder::birth(int slot, EdgeId edge, int group, std::string label) {
  if (slot < 0 || slot > (int)pending_.size()) fail("birth slot out of range");
  if (edge < 0 || edge >= (EdgeId)arr_.edges.size()) fail("birth edge out of range");
  flush_death_run();
  last_was_death_ = false;

  NodeId v = kNoNode;
  bool shared = false;
  if (group >= 0 && slot > 0) {
    const Pending& left = pending_[slot - 1];
    if (left.from_birth && left.group == group) {
      v = left.from;
      shared = true;
    }
  }
  if (v == kNoNode) v = arr_.add_node(NodeKind::Vertex, std::move(label));

  auto [out, back] = arr_.add_dart_pair(edge);
  arr_.darts[out].origin = v;
  // Rotation at a birth vertex lists its up darts rightmost first; a new
  // strand joins to the right of its sibling.
  if (shared)
    arr_.rotation[v].insert(arr_.rotation[v].begin(), out);
  else
    arr_.rotation[v].push_back(out);

  int g;
  if (pending_.empty()) {
    if (ambient_cls_ < 0) ambient_cls_ = new_class(v, kNoDart);
    g = ambient_cls_;
    gaps_.push_back(g);
  } else if (shared) {
    // The sector between the sibling and the new strand is pinched at the
    // shared vertex: a fresh face, anchored at the corner between them.
    g = find_class(gaps_[slot % (int)pending_.size()]);
    gaps_.insert(gaps_.begin() + slot, new_class(kNoNode, out));
  } else {
    g = find_class(gaps_[slot % (int)pending_.size()]);
    gaps_.insert(gaps_.begin() + slot, g);
  }
  birth_recs_.push_back({v, g, ++g_seq});

  Pending p;
  p.out = out;
  p.back = back;
  p.edge = edge;
  p.from = v;
  p.group = group;
  p.from_birth = true;
  pending_.insert(pending_.begin() + slot, p);
  if (first_birth_ == kNoNode) first_birth_ = v;
  return v;
}

NodeId SweepBuilder::cross(int slot) {
  int n = (int)pending_.size();
  if (n < 2) fail("cross needs two live strands");
  if (slot < 0 || slot >= n) fail("cross slot out of range");
  flush_death_run();
  last_was_death_ = false;

  int i = slot, j = (slot + 1) % n;
  Pending a = pending_[i], b = pending_[j];
  NodeId c = arr_.add_node(NodeKind::Crossing);
  arr_.darts[a.back].origin = c;
  arr_.darts[b.back].origin = c;

  auto [a2o, a2b] = arr_.add_dart_pair(a.edge);
  auto [b2o, b2b] = arr_.add_dart_pair(b.edge);
  arr_.darts[a2o].origin = c;
  arr_.darts[b2o].origin = c;
  // CCW at the crossing: a onward (up right), b onward (up left), a back
  // (down left), b back (down right).
  arr_.rotation[c] = {a2o, b2o, a.back, b.back};

  Pending a2 = a, b2 = b;
  a2.out = a2o;
  a2.back = a2b;
  a2.from = c;
  a2.from_birth = false;
  b2.out = b2o;
  b2.back = b2b;
  b2.from = c;
  b2.from_birth = false;
  pending_[j] = a2;
  pending_[i] = b2;
  // Pinch: the gap between the strands ends below the crossing; a fresh face
  // opens above, in the corner between the onward darts.
  gaps_[j] = new_class(kNoNode, a2o);
  return c;
}

NodeId SweepBuilder::death(int slot, int group, std::string label) {
  if (slot < 0 || slot >= (int)pending_.size()) fail("death slot out of range");
  Pending p = pending_[slot];

  NodeId v = kNoNode;
  bool shared = false;
  if (group >= 0 && last_was_death_ && last_death_group_ == group && last_death_slot_ == slot) {
    v = last_death_node_;
    shared = true;
  }
  if (v == kNoNode) v = arr_.add_node(NodeKind::Vertex, std::move(label));

  arr_.darts[p.back].origin = v;
  // Rotation at a death vertex lists its down darts leftmost first; strands
  // sharing a vertex die left to right.
  arr_.rotation[v].push_back(p.back);

  int n = (int)pending_.size();
  int left = gaps_[slot], right = gaps_[(slot + 1) % n];
  if (shared) {
    // Same point event as the previous death: the gap between the sibling
    // strands seals into a finished face.  If no other strand is live the
    // right side wraps around the dead block to the run's left gap.
    run_right_ = n == 1 ? run_left_ : right;
  } else {
    flush_death_run();
    run_active_ = true;
    run_left_ = left;
    run_right_ = right;
  }
  gaps_.erase(gaps_.begin() + slot);
  if (gaps_.empty()) flush_death_run();

  pending_.erase(pending_.begin() + slot);
  last_was_death_ = true;
  last_death_node_ = v;
  last_death_group_ = group;
  last_death_slot_ = slot;
  return v;
}

void SweepBuilder::graft(SweepBuilder& inner, int slot) {
  if (&inner.arr_ != &arr_) fail("graft requires a shared arrangement");
  if (slot < 0 || slot > (int)pending_.size()) fail("graft slot out of range");
  if (inner.pending_.empty()) fail("graft source has no live strands");
  flush_death_run();
  inner.flush_death_run();
  last_was_death_ = false;

  // Adopt the inner front's face classes and birth records.
  int off = (int)classes_.size();
  for (FaceClass fc : inner.classes_) {
    fc.parent += off;
    classes_.push_back(fc);
  }
  for (BirthRec r : inner.birth_recs_) {
    r.cls += off;
    birth_recs_.push_back(r);
  }
  std::vector<int> igaps = inner.gaps_;
  for (int& g : igaps) g += off;

  // The inner circle is cut at its back gap, which becomes one face with the
  // host gap receiving the graft.
  int host_gap;
  if (pending_.empty()) {
    if (ambient_cls_ < 0)
      host_gap = igaps[0];
    else
      host_gap = ambient_cls_;
  } else {
    host_gap = gaps_[slot % (int)pending_.size()];
  }
  int merged = union_classes(host_gap, igaps[0]);
  if (pending_.empty()) ambient_cls_ = merged;
  igaps[0] = merged;
  gaps_.insert(gaps_.begin() + slot, igaps.begin(), igaps.end());

  pending_.insert(pending_.begin() + slot, inner.pending_.begin(), inner.pending_.end());
  inner.pending_.clear();
  inner.gaps_.clear();
  inner.birth_recs_.clear();
  if (first_birth_ == kNoNode) first_birth_ = inner.first_birth_;
}

void SweepBuilder::finish() {
  if (!pending_.empty()) fail("open strands remain at end of sweep");
  flush_death_run();
  if (birth_recs_.empty()) return;

  auto comp = arr_.node_components();
  int nc = 0;
  for (int32_t c : comp) nc = std::max(nc, c + 1);
  std::vector<int> earliest(nc, -1);  // birth rec index per component
  for (int i = 0; i < (int)birth_recs_.size(); ++i) {
    int c = comp[birth_recs_[i].node];
    if (earliest[c] < 0 || birth_recs_[i].seq < birth_recs_[earliest[c]].seq) earliest[c] = i;
  }
  int root = -1;
  for (int c = 0; c < nc; ++c)
    if (earliest[c] >= 0 && (root < 0 || birth_recs_[earliest[c]].seq < birth_recs_[earliest[root]].seq))
      root = c;
  for (int c = 0; c < nc; ++c) {
    if (c == root || earliest[c] < 0) continue;
    const BirthRec& r = birth_recs_[earliest[c]];
    // The containing face was created before this component existed, so its
    // anchor sits on an older component; the guest's outward face is the one
    // below its first birth vertex.
    CornerRef host = class_corner(find_class(r.cls));
    CornerRef guest{arr_.rotation[r.node].back()};
    arr_.merges.push_back({host, guest});
  }
}

CornerRef SweepBuilder::start_corner() const {
  if (first_birth_ == kNoNode || arr_.rotation[first_birth_].empty()) return {};
  return {arr_.rotation[first_birth_].back()};
}

CornerRef SweepBuilder::end_corner() const {
  if (last_death_node_ == kNoNode || arr_.rotation[last_death_node_].empty()) return {};
  return {arr_.rotation[last_death_node_].back()};
}

std::string to_text(const WiringDiagram& d) {
  std::ostringstream out;
  for (const auto& name : d.edge_names) out << "edge " << name << "\n";
  for (const auto& ev : d.events) {
    switch (ev.kind) {
      case WiringEvent::Cross:
        out << "x " << ev.slot << "\n";
        break;
      case WiringEvent::Birth:
        out << "birth " << ev.slot << " " << ev.edge << " " << ev.group;
        if (!ev.label.empty()) out << " " << ev.label;
        out << "\n";
        break;
      case WiringEvent::Death:
        out << "death " << ev.slot << " " << ev.group;
        if (!ev.label.empty()) out << " " << ev.label;
        out << "\n";
        break;
      case WiringEvent::Boundary:
        out << "| " << ev.label << "\n";
        break;
    }
  }
  return out.str();
}

WiringDiagram diagram_from_text(const std::string& text) {
  WiringDiagram d;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string verb;
    if (!(ls >> verb) || verb[0] == '#') continue;
    WiringEvent ev;
    auto bad = [&] { fail("parse error at line " + std::to_string(lineno) + ": " + line); };
    if (verb == "edge") {
      std::string name;
      if (!(ls >> name)) bad();
      d.edge_names.push_back(name);
      continue;
    } else if (verb == "x") {
      ev.kind = WiringEvent::Cross;
      if (!(ls >> ev.slot)) bad();
    } else if (verb == "birth") {
      ev.kind = WiringEvent::Birth;
      if (!(ls >> ev.slot >> ev.edge)) bad();
      ls >> ev.group >> ev.label;
    } else if (verb == "death") {
      ev.kind = WiringEvent::Death;
      if (!(ls >> ev.slot)) bad();
      ls >> ev.group >> ev.label;
    } else if (verb == "|") {
      ev.kind = WiringEvent::Boundary;
      ls >> ev.label;
    } else {
      bad();
    }
    d.events.push_back(ev);
  }
  return d;
}

namespace {

// Wall cycle through terminal vertices in circular order.  At each vertex the
// strand dart sits between the rightward and leftward rim darts; which side
// faces the cap depends on whether the strands leave upward or downward.
void add_rim(Arrangement& a, const std::vector<NodeId>& ring, bool strands_up,
             std::optional<CornerRef>& cap) {
  int n = (int)ring.size();
  if (n < 2) fail("rim needs at least two terminal vertices");
  std::vector<DartId> right(n), left(n);  // right[i]: ring[i] -> ring[i+1]
  for (int i = 0; i < n; ++i) {
    EdgeId e = a.add_edge((strands_up ? "rimb" : "rimt") + std::to_string(i), EdgeKind::Wall);
    auto [r, s] = a.add_dart_pair(e);
    a.darts[r].origin = ring[i];
    a.darts[s].origin = ring[(i + 1) % n];
    right[i] = r;
    left[(i + 1) % n] = s;
  }
  for (int i = 0; i < n; ++i) {
    if (a.rotation[ring[i]].size() != 1) fail("rim terminal vertex must carry one strand");
    DartId strand = a.rotation[ring[i]][0];
    if (strands_up)
      a.rotation[ring[i]] = {right[i], strand, left[i]};
    else
      a.rotation[ring[i]] = {right[i], left[i], strand};
  }
  // Bottom cap lies below (corner from the leftward dart around through the
  // south); top cap lies above (corner from the rightward dart).
  cap = strands_up ? CornerRef{left[0]} : CornerRef{right[0]};
}

}  // namespace

CompileResult compile(const WiringDiagram& d, const CompileOptions& opts) {
  CompileResult res;
  Arrangement& a = res.arr;
  for (const auto& name : d.edge_names) a.add_edge(name);
  SweepBuilder b(a);

  // phase 0: births, 1: middle, 2: deaths (only enforced when rims are on)
  int phase = 0;
  std::vector<NodeId> top_ring;
  std::unordered_map<DartId, int> top_pos;  // strand back dart -> column at first death

  for (const auto& ev : d.events) {
    switch (ev.kind) {
      case WiringEvent::Boundary:
        break;
      case WiringEvent::Birth: {
        if (opts.rims && phase != 0) fail("rims require all births first");
        if (opts.rims && ev.group >= 0) fail("rims require one strand per terminal vertex");
        res.births.push_back(b.birth(ev.slot, ev.edge, ev.group, ev.label));
        break;
      }
      case WiringEvent::Cross: {
        if (opts.rims && phase == 2) fail("rims require all deaths last");
        phase = std::max(phase, 1);
        res.crossings.push_back(b.cross(ev.slot));
        break;
      }
      case WiringEvent::Death: {
        if (opts.rims && ev.group >= 0) fail("rims require one strand per terminal vertex");
        if (opts.rims && phase != 2) {
          // Snapshot the circular strand order; deaths only erase from here.
          top_ring.assign(b.live(), kNoNode);
          for (int i = 0; i < b.live(); ++i) top_pos[b.strand_back(i)] = i;
        }
        phase = 2;
        DartId back = opts.rims ? b.strand_back(ev.slot) : kNoDart;
        NodeId v = b.death(ev.slot, ev.group, ev.label);
        res.deaths.push_back(v);
        if (opts.rims) top_ring[top_pos.at(back)] = v;
        break;
      }
    }
  }
  if (opts.rims) {
    for (NodeId v : top_ring)
      if (v == kNoNode) fail("missing death for a live strand");
    // Births insert in slot order with no later shuffling before phase 1,
    // but crossings permute strands, so the bottom ring is the birth ring:
    // terminal vertices in birth circular order.
    // Reconstruct it by replaying birth slots.
    std::vector<NodeId> ring;
    int bi = 0;
    for (const auto& ev : d.events)
      if (ev.kind == WiringEvent::Birth) ring.insert(ring.begin() + ev.slot, res.births[bi++]);
    add_rim(a, ring, /*strands_up=*/true, a.bottom);
    add_rim(a, top_ring, /*strands_up=*/false, a.top);
  } else {
    a.bottom = b.start_corner();
    if (!res.deaths.empty()) a.top = b.end_corner();
  }
  b.finish();

  std::string err = a.validate();
  if (!err.empty()) fail("compiled arrangement invalid: " + err);
  return res;
}

}  // namespace topo
