#pragma once

#include <boost/dynamic_bitset.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cplanar/core.hpp"

namespace cplanar {

using BitVector = boost::dynamic_bitset<>;

/// Vertices placed on a circle in DFS order of the cluster tree.
struct CircularOrder {
  struct Arc {
    int start = 0;
    int length = 0;
  };

  std::vector<VertexId> sequence;
  std::map<NodeId, Arc> arcs;  // every non-leaf node, root included

  int position(VertexId v) const;
};

/// Unordered pairs of independent edges, indexed lexicographically by edge
/// index (i < j).
class PairIndex {
 public:
  PairIndex() = default;
  explicit PairIndex(const std::vector<Edge>& edges);

  std::size_t size() const { return pairs_.size(); }
  const std::pair<std::size_t, std::size_t>& pair(std::size_t k) const { return pairs_[k]; }
  /// Index of the pair {i, j} of edge indices, or -1 when not independent.
  long find(std::size_t i, std::size_t j) const;

  friend bool operator==(const PairIndex&, const PairIndex&) = default;

 private:
  std::size_t edge_count_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<long> lookup_;  // edge_count_ * edge_count_
};

/// Crossing parity per independent edge pair.
struct ParityVector {
  PairIndex index;
  BitVector bits;

  std::size_t dimension() const { return index.size(); }
  bool all_zero() const { return bits.none(); }
};

CircularOrder dfs_circle_order(const ClusteredGraph& g);

/// True iff the chords e and f interleave on the circle. Throws on a shared
/// endpoint.
bool interleaves(const Edge& e, const Edge& f, const CircularOrder& ord);

ParityVector initial_parity_vector(const ClusteredGraph& g, const CircularOrder& ord);

/// SVG 1.1 rendering: unit circle, chord edges, cluster discs as circular
/// segments with chords pushed inward by nesting depth.
std::string render_svg(const ClusteredGraph& g, const CircularOrder& ord);

}  // namespace cplanar
