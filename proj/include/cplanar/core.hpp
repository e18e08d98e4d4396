#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cplanar {

using VertexId = int;
using EdgeId = int;
using NodeId = int;

struct Edge {
  EdgeId id = 0;
  VertexId u = 0;
  VertexId v = 0;

  bool is_loop() const { return u == v; }
  bool touches(VertexId w) const { return u == w || v == w; }
  bool independent_of(const Edge& o) const {
    return !touches(o.u) && !touches(o.v);
  }
  VertexId other(VertexId w) const { return w == u ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Rooted tree whose leaves are the vertices of the graph. Nodes are stored
/// parent-pointer style; child order is the input order and only matters for
/// the DFS layout of the canonical drawing.
class ClusterTree {
 public:
  struct Node {
    std::string label;
    std::optional<VertexId> vertex;  // set iff the node is a leaf
    NodeId parent = -1;
    std::vector<NodeId> children;

    friend bool operator==(const Node&, const Node&) = default;
  };

  ClusterTree();

  NodeId root() const { return 0; }
  const Node& node(NodeId n) const { return nodes_.at(static_cast<std::size_t>(n)); }
  std::size_t size() const { return nodes_.size(); }

  NodeId add_cluster(NodeId parent, std::string label);
  NodeId add_leaf(NodeId parent, VertexId v);
  void set_root_label(std::string label) { nodes_[0].label = std::move(label); }

  bool is_leaf(NodeId n) const { return node(n).vertex.has_value(); }
  /// Leaf node carrying vertex v, or -1.
  NodeId leaf_of(VertexId v) const;
  /// Vertex ids below n in DFS order.
  std::vector<VertexId> leaves_under(NodeId n) const;
  /// Non-leaf nodes in DFS preorder, root first.
  std::vector<NodeId> clusters() const;
  /// Tree path between two nodes (inclusive), from a to b.
  std::vector<NodeId> path(NodeId a, NodeId b) const;
  int depth(NodeId n) const;

  /// Removes the leaf of v; node ids after it shift down by one.
  void remove_leaf(VertexId v);

  friend bool operator==(const ClusterTree&, const ClusterTree&) = default;

 private:
  std::vector<Node> nodes_;
};

struct ClusteredGraph {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  ClusterTree tree;

  std::size_t edge_index(EdgeId id) const;
  const Edge& edge(EdgeId id) const { return edges[edge_index(id)]; }
  bool has_vertex(VertexId v) const;
  std::vector<std::size_t> incident_edges(VertexId v) const;
  /// Parent node of v's leaf in the tree.
  NodeId cluster_of(VertexId v) const;
  /// Non-root clusters that are children of the root (the clusters of a flat
  /// instance), in stored order.
  std::vector<NodeId> top_clusters() const;

  friend bool operator==(const ClusteredGraph&, const ClusteredGraph&) = default;
};

struct ValidationReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
  std::string to_string() const;
};

class InvalidInstance : public std::invalid_argument {
 public:
  explicit InvalidInstance(const std::string& what) : std::invalid_argument(what) {}
};

ValidationReport validate(const ClusteredGraph& g);
/// Throws InvalidInstance carrying the report when g is invalid.
void require_valid(const ClusteredGraph& g);

enum class GtShape { Path, Cycle, Tree, Other };
const char* to_string(GtShape s);

struct Classification {
  bool flat = false;
  bool two_clustered = false;
  bool c_connected = false;
  bool cyclic_clustered = false;
  GtShape gt_shape = GtShape::Other;
  int cluster_count = 0;
};

bool is_flat(const ClusteredGraph& g);
bool is_c_connected(const ClusteredGraph& g);
Classification classify(const ClusteredGraph& g);

enum class EdgeBound { Pass, Fail };

struct Simplified {
  ClusteredGraph graph;
  EdgeBound verdict = EdgeBound::Pass;
};

/// Drops loops and parallel edges (the smallest edge id of a parallel class
/// survives) and applies the |E| < 3|V| planarity bound.
Simplified simplify(const ClusteredGraph& g);

/// Contracts every edge whose endpoints share a non-root cluster. The merged
/// vertex keeps the smaller id; loops and parallel edges produced by the
/// contraction are kept.
ClusteredGraph contract_intra_cluster_edges(const ClusteredGraph& g);

}  // namespace cplanar
