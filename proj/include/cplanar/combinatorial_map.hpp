#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cplanar/core.hpp"

namespace cplanar {

using Dart = int;

/// The angle just before `dart` in the clockwise rotation at `vertex`.
/// dart == -1 denotes the single corner of an isolated vertex.
struct Corner {
  VertexId vertex = 0;
  Dart dart = -1;
  friend bool operator==(const Corner&, const Corner&) = default;
};

/// One face as the cyclic sequence of darts traversed by face_next. Position
/// i is the corner of darts[i] at vertices[i]. The face of an edgeless map is
/// a single corner with no dart.
struct FaceWalk {
  std::vector<Dart> darts;
  std::vector<VertexId> vertices;

  std::size_t size() const { return vertices.size(); }
  Corner corner(std::size_t i) const { return {vertices[i], darts.empty() ? -1 : darts[i]}; }
  /// Distinct incident vertices, sorted.
  std::vector<VertexId> vertex_set() const;
  /// Positions at which v occurs.
  std::vector<std::size_t> occurrences(VertexId v) const;
};

/// Rotation-system embedding of a connected multigraph in the plane.
/// Edge k owns darts 2k (tail edges[k].u) and 2k+1 (tail edges[k].v), so the
/// twin of d is d^1. next_around is the clockwise successor at the tail and
/// face_next(d) = next_around(twin(d)).
class CombinatorialMap {
 public:
  CombinatorialMap() = default;

  /// rotation[v] lists edge ids clockwise. A loop's id appears twice, the
  /// first occurrence being its 2k dart. outer names (edge id, tail vertex).
  static CombinatorialMap from_rotations(std::vector<VertexId> vertices, std::vector<Edge> edges,
                                         const std::map<VertexId, std::vector<EdgeId>>& rotation,
                                         std::optional<std::pair<EdgeId, VertexId>> outer);
  /// Same with explicit darts; every dart must appear exactly once, at its
  /// tail. outer == -1 picks dart 0.
  static CombinatorialMap from_dart_rotations(std::vector<VertexId> vertices, std::vector<Edge> edges,
                                              const std::map<VertexId, std::vector<Dart>>& rotation, Dart outer);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t dart_count() const { return 2 * edges_.size(); }

  static Dart twin(Dart d) { return d ^ 1; }
  VertexId tail(Dart d) const;
  VertexId head(Dart d) const { return tail(twin(d)); }
  const Edge& edge_of(Dart d) const { return edges_.at(static_cast<std::size_t>(d / 2)); }
  Dart next_around(Dart d) const { return next_.at(static_cast<std::size_t>(d)); }
  Dart prev_around(Dart d) const { return prev_.at(static_cast<std::size_t>(d)); }
  Dart face_next(Dart d) const { return next_around(twin(d)); }

  /// First dart of edge e leaving `tail` (for loops, the 2k dart).
  Dart dart_of(EdgeId e, VertexId tail) const;
  /// Some dart of the outer face, or -1 for an edgeless map.
  Dart outer() const { return outer_; }
  bool has_vertex(VertexId v) const;
  std::size_t edge_index(EdgeId id) const;
  /// Clockwise darts leaving v, starting from the smallest.
  std::vector<Dart> rotation(VertexId v) const;
  std::size_t degree(VertexId v) const { return rotation(v).size(); }
  bool adjacent(VertexId a, VertexId b) const;
  bool is_connected() const;

  /// Faces ordered by their smallest dart; each walk starts there.
  std::vector<FaceWalk> faces() const;
  /// Face index (into faces()) of every dart.
  std::vector<std::size_t> face_of_darts(const std::vector<FaceWalk>& fs) const;
  std::size_t outer_face(const std::vector<FaceWalk>& fs) const;

  /// Permutation and tail consistency, connectivity and V - E + F = 2.
  ValidationReport validate() const;
  /// Throws std::invalid_argument("not a planar embedding: ...") when invalid.
  void require_valid() const;

  EdgeId fresh_edge_id() const;
  /// Adds a non-loop edge whose darts go just before the given corners.
  /// Returns the new edge index.
  std::size_t insert_edge(EdgeId id, Corner a, Corner b);
  /// Contracts a non-loop edge; the merged vertex keeps the smaller id and its
  /// rotation is U's darts after the edge followed by V's darts after it.
  /// Returns the removed vertex.
  VertexId contract_edge(std::size_t index);
  /// Removes edges by index; surviving darts may be renumbered.
  void remove_edges(std::vector<std::size_t> indices);
  /// Removes an isolated vertex.
  void remove_vertex(VertexId v);

  /// Underlying clustered graph with the given tree.
  ClusteredGraph graph(const ClusterTree& tree) const { return {vertices_, edges_, tree}; }

  friend bool operator==(const CombinatorialMap&, const CombinatorialMap&) = default;

 private:
  void unlink(Dart d);
  void drop_edge_slot(std::size_t index);
  Dart surviving_outer(const std::vector<bool>& removed) const;

  std::vector<VertexId> vertices_;  // sorted
  std::vector<Edge> edges_;
  std::vector<Dart> next_, prev_;
  Dart outer_ = -1;
};

}  // namespace cplanar
