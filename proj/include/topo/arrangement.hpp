#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace topo {

using NodeId = int32_t;
using DartId = int32_t;
using EdgeId = int32_t;

inline constexpr DartId kNoDart = -1;
inline constexpr NodeId kNoNode = -1;
inline constexpr EdgeId kNoEdge = -1;

enum class NodeKind : uint8_t { Vertex, Crossing };
enum class EdgeKind : uint8_t { Normal, Wall };

struct Node {
  NodeKind kind = NodeKind::Vertex;
  std::string label;
};

struct Dart {
  NodeId origin = kNoNode;
  DartId twin = kNoDart;
  EdgeId edge = kNoEdge;
};

struct EdgeInfo {
  std::string name;
  EdgeKind kind = EdgeKind::Normal;
};

// A corner is the angular sector at origin(dart) between the dart and its
// rotation successor.  face_of(corner(c)) == face_of(c), so corners double as
// stable face references that survive arc subdivision.
struct CornerRef {
  DartId dart = kNoDart;  // kNoDart refers to the void face (no darts at all)
  bool operator==(const CornerRef&) const = default;
};

// Records that one connected component is drawn inside a face of another.
// Both sides are corners; the guest corner lies on the guest's outward face.
struct FaceMerge {
  CornerRef host;
  CornerRef guest;
};

struct Placement {
  NodeId node = kNoNode;
  CornerRef corner;  // face containing this degree-0 vertex
};

struct FaceIndex {
  std::vector<int32_t> face_of;   // per dart
  std::vector<DartId> canonical;  // min dart id per face
  int32_t count = 0;
};

struct RegionIndex {
  FaceIndex faces;
  std::vector<int32_t> region_of_face;
  int32_t count = 0;
  bool has_void = false;  // arrangement without darts has a single void region
  int32_t region_of_dart(DartId d) const { return region_of_face[faces.face_of[d]]; }
};

// Combinatorial map of a drawing on the sphere.  Rotations list darts
// counterclockwise around each node; the face to the left of a dart is the
// orbit of d -> rot_prev(twin(d)).
struct Arrangement {
  std::vector<Node> nodes;
  std::vector<Dart> darts;
  std::vector<std::vector<DartId>> rotation;  // indexed by node
  std::vector<EdgeInfo> edges;
  std::vector<FaceMerge> merges;
  std::vector<Placement> placements;

  // Marked faces; unset marks have dart == kNoDart and no void meaning.
  std::optional<CornerRef> bottom, top, outer;
  std::vector<NodeId> anchors;

  NodeId add_node(NodeKind kind, std::string label = {});
  EdgeId add_edge(std::string name, EdgeKind kind = EdgeKind::Normal);
  // Allocates a twin pair with unset origins; caller splices into rotations.
  std::pair<DartId, DartId> add_dart_pair(EdgeId edge);

  DartId twin(DartId d) const { return darts[d].twin; }
  NodeId origin(DartId d) const { return darts[d].origin; }
  NodeId target(DartId d) const { return darts[darts[d].twin].origin; }
  EdgeId edge_of(DartId d) const { return darts[d].edge; }
  int degree(NodeId n) const { return (int)rotation[n].size(); }
  bool is_wall(DartId d) const { return edges[darts[d].edge].kind == EdgeKind::Wall; }

  DartId rot_next(DartId d) const;
  DartId rot_prev(DartId d) const;
  // Position of d in rotation(origin(d)).
  int rot_index(DartId d) const;

  // Face walk successor: next dart along the face left of d.
  DartId face_next(DartId d) const { return rot_prev(darts[d].twin); }

  FaceIndex faces() const;
  RegionIndex regions() const;

  // Endpoints of an edge's arc path (degree-1 nodes of the edge subgraph).
  // An edge may consist of several chained arcs through crossing nodes, and
  // may pass through interior Vertex nodes where two of its strands meet.
  std::pair<NodeId, NodeId> edge_endpoints(EdgeId e) const;
  // Arcs of the edge in path order, as darts oriented along the path.
  std::vector<DartId> edge_arcs(EdgeId e) const;

  // Number of crossing nodes shared by each pair of normal edges.
  std::vector<std::vector<int>> crossing_matrix() const;
  // Shared-endpoint count for a pair of edges (0..2).
  int shared_endpoints(EdgeId a, EdgeId b) const;

  int32_t face_of_corner(const RegionIndex& ri, CornerRef c) const;
  int32_t region_of_corner(const RegionIndex& ri, CornerRef c) const;

  // Graph components over nodes (arcs as edges); isolated vertices are
  // singleton components.
  std::vector<int32_t> node_components() const;

  // Structural validation; returns error description or empty string.
  std::string validate() const;
  bool valid() const { return validate().empty(); }
};

// Dual multigraph over regions: one link per non-wall arc.
struct DualLink {
  int32_t from, to;  // regions
  DartId dart;       // crossing this dart goes face(d) -> face(twin(d))
  EdgeId edge;
};

struct DualGraph {
  RegionIndex regions;
  std::vector<DualLink> links;
  std::vector<std::vector<int32_t>> incident;  // region -> link indices
};

DualGraph build_dual(const Arrangement& a, bool include_walls = false);

// A curve between two Vertex nodes, recorded as the oriented sequence of
// crossed arcs.  Crossing dart d means passing from the face left of d into
// the face left of twin(d).  Normalized curves visit each region once and
// cross each arc at most once.
struct Curve {
  NodeId start = kNoNode, end = kNoNode;
  CornerRef start_corner, end_corner;  // attachment corners; void if isolated
  std::vector<DartId> crossings;
};

// Per-edge crossing counts of a curve, plus endpoint sharing if requested.
std::vector<int> curve_profile(const Arrangement& a, const Curve& c, bool count_endpoints);

// Checks region-walk continuity, normalization, and endpoint corners.
std::string check_curve(const Arrangement& a, const Curve& c);

// Inserts the curve as a new edge; returns its id.  Existing dart/node ids
// are preserved (split arcs keep their outer dart ids).
EdgeId insert_curve(Arrangement& a, const Curve& c, std::string name);

// Removes an edge, dissolving its crossing nodes and restoring the arcs it
// split.  Storage is compacted.  Pre: removal must not disconnect a component
// (the relative position of the pieces would be lost).
void delete_edge(Arrangement& a, EdgeId e);

// Canonical encoding of the map with node kinds and edge ids as colors;
// equal encodings iff the rooted maps are isomorphic component-wise.
std::string canonical_encoding(const Arrangement& a);

}  // namespace topo
