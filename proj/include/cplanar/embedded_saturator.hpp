#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cplanar/combinatorial_map.hpp"
#include "cplanar/core.hpp"
#include "cplanar/ht_tester.hpp"
#include "cplanar/matroid.hpp"

namespace cplanar {

/// Flat clustered graph with a fixed plane embedding. The graph lives in the
/// map; the tree's leaves must be exactly the map's vertices.
struct EmbeddedClusteredGraph {
  CombinatorialMap map;
  ClusterTree tree;

  ClusteredGraph graph() const { return map.graph(tree); }
  /// Proper cluster of v, or -1 when v hangs directly off the root.
  NodeId cluster(VertexId v) const;
  friend bool operator==(const EmbeddedClusteredGraph&, const EmbeddedClusteredGraph&) = default;
};

/// Tree/graph validity, flatness, planar connected embedding, and no loops at
/// vertices outside every proper cluster.
ValidationReport validate(const EmbeddedClusteredGraph& g);

/// A face has more than five incident vertices.
class FaceSizeViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

constexpr std::size_t kMaxFaceVertices = 5;

/// Throws FaceSizeViolation naming the first offending face.
void require_small_faces(const EmbeddedClusteredGraph& g);

struct Preprocessed {
  std::optional<EmbeddedClusteredGraph> instance;  // empty means NotCPlanar
  std::string reason;
  std::vector<std::string> trace;
};

/// Contracts intra-cluster edges, then deletes every loop together with the
/// side away from the outer face, unless that side holds a vertex of another
/// cluster.
Preprocessed preprocess_embedded(const EmbeddedClusteredGraph& g);

using VertexPair = std::pair<VertexId, VertexId>;  // first < second

/// Same-cluster pairs of distinct vertices incident to f, sorted.
std::vector<VertexPair> saturating_pairs(const FaceWalk& f, const EmbeddedClusteredGraph& g);

/// Saturating edge drawn inside a face between corner positions a < b.
struct Chord {
  std::size_t a = 0;
  std::size_t b = 0;
  friend bool operator==(const Chord&, const Chord&) = default;
};

/// Every occurrence choice for the pair, sorted by position.
std::vector<Chord> chords(const FaceWalk& f, const VertexPair& p);
/// Chords cross iff their positions strictly interleave; a shared corner
/// never crosses.
bool chords_cross(const Chord& c, const Chord& d);
bool can_embed_noncrossing(const FaceWalk& f, const VertexPair& p1, const VertexPair& p2);
bool is_bad_face(const FaceWalk& f, const EmbeddedClusteredGraph& g);

/// Adds an edge between the corners at positions pos_u and pos_v of f and
/// contracts it. Throws std::invalid_argument if the vertices are equal or
/// adjacent. Returns the vertex that disappeared.
VertexId merge_vertices(EmbeddedClusteredGraph& g, const FaceWalk& f, std::size_t pos_u, std::size_t pos_v);

enum class MergeCase {
  TwoPairs,            // exactly two saturating pairs
  SingleCluster,       // one cluster with >= 3 vertices, the rest <= 1
  SeparateComponents,  // x, y on different boundary components
  AvoidingChord,       // some x-y chord leaves two C-pairs embeddable
  UnseparatedPair,     // a C-pair no x-y chord separates
  FourCycleEnclave,    // merge along the 4-cycle enclave configuration
};
const char* to_string(MergeCase c);

struct MergeStep {
  MergeCase kind;
  VertexId kept;
  VertexId removed;
};

struct Normalized {
  std::optional<EmbeddedClusteredGraph> instance;  // empty means NotCPlanar
  std::vector<MergeStep> steps;
  std::string reason;
};

/// Merges vertices of bad faces until none is left. Expects a preprocessed
/// instance with faces on at most five vertices.
Normalized normalize(const EmbeddedClusteredGraph& g);

struct SaturatingElement {
  std::size_t face;
  NodeId cluster;
  VertexPair pair;
  friend bool operator==(const SaturatingElement&, const SaturatingElement&) = default;
};

struct SaturatorMatroids {
  std::vector<SaturatingElement> ground;
  GraphicMatroid m1;    // forests, one graphic matroid per cluster
  PartitionMatroid m2;  // at most one element per face
  std::size_t target = 0;
  std::vector<NodeId> deficient;  // clusters the ground set cannot connect
};

SaturatorMatroids build_matroids(const EmbeddedClusteredGraph& g);

struct EmbeddedStats {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  std::size_t vertices_after_preprocess = 0;
  std::size_t merges = 0;
  std::size_t ground = 0;
  std::size_t target = 0;
  std::size_t common = 0;
};

struct EmbeddedVerdict {
  Outcome outcome = Outcome::NotCPlanar;
  std::string reason;
  EmbeddedStats stats;
  std::vector<std::string> trace;
  std::vector<SaturatingElement> saturator;  // chosen elements when CPlanar
};

/// Throws InvalidInstance for invalid input and FaceSizeViolation when a face
/// of the input has more than five incident vertices.
EmbeddedVerdict decide_embedded(const EmbeddedClusteredGraph& g);

}  // namespace cplanar
