#include "cplanar/core.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace cplanar {

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

// ---------------------------------------------------------------- ClusterTree

ClusterTree::ClusterTree() { nodes_.push_back(Node{"root", std::nullopt, -1, {}}); }

NodeId ClusterTree::add_cluster(NodeId parent, std::string label) {
  if (is_leaf(parent)) throw std::invalid_argument("cannot attach a cluster below a leaf");
  const auto id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(Node{std::move(label), std::nullopt, parent, {}});
  nodes_[static_cast<std::size_t>(parent)].children.push_back(id);
  return id;
}

NodeId ClusterTree::add_leaf(NodeId parent, VertexId v) {
  if (is_leaf(parent)) throw std::invalid_argument("cannot attach a leaf below a leaf");
  const auto id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(Node{std::to_string(v), v, parent, {}});
  nodes_[static_cast<std::size_t>(parent)].children.push_back(id);
  return id;
}

NodeId ClusterTree::leaf_of(VertexId v) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].vertex == v) return static_cast<NodeId>(i);
  return -1;
}

std::vector<VertexId> ClusterTree::leaves_under(NodeId n) const {
  std::vector<VertexId> out;
  std::vector<NodeId> stack{n};
  while (!stack.empty()) {
    const NodeId x = stack.back();
    stack.pop_back();
    const Node& nd = node(x);
    if (nd.vertex) out.push_back(*nd.vertex);
    for (auto it = nd.children.rbegin(); it != nd.children.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

std::vector<NodeId> ClusterTree::clusters() const {
  std::vector<NodeId> out;
  std::vector<NodeId> stack{root()};
  while (!stack.empty()) {
    const NodeId x = stack.back();
    stack.pop_back();
    const Node& nd = node(x);
    if (nd.vertex) continue;
    out.push_back(x);
    for (auto it = nd.children.rbegin(); it != nd.children.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

int ClusterTree::depth(NodeId n) const {
  int d = 0;
  while (node(n).parent >= 0) {
    n = node(n).parent;
    ++d;
  }
  return d;
}

std::vector<NodeId> ClusterTree::path(NodeId a, NodeId b) const {
  std::vector<NodeId> up_a{a}, up_b{b};
  int da = depth(a), db = depth(b);
  while (da > db) {
    up_a.push_back(node(up_a.back()).parent);
    --da;
  }
  while (db > da) {
    up_b.push_back(node(up_b.back()).parent);
    --db;
  }
  while (up_a.back() != up_b.back()) {
    up_a.push_back(node(up_a.back()).parent);
    up_b.push_back(node(up_b.back()).parent);
  }
  up_b.pop_back();
  up_a.insert(up_a.end(), up_b.rbegin(), up_b.rend());
  return up_a;
}

void ClusterTree::remove_leaf(VertexId v) {
  const NodeId leaf = leaf_of(v);
  if (leaf < 0) throw std::invalid_argument("no leaf for vertex " + std::to_string(v));
  auto& siblings = nodes_[static_cast<std::size_t>(node(leaf).parent)].children;
  siblings.erase(std::find(siblings.begin(), siblings.end(), leaf));
  nodes_.erase(nodes_.begin() + leaf);
  auto shift = [leaf](NodeId& x) {
    if (x > leaf) --x;
  };
  for (Node& nd : nodes_) {
    shift(nd.parent);
    for (NodeId& c : nd.children) shift(c);
  }
}

// ------------------------------------------------------------- ClusteredGraph

std::size_t ClusteredGraph::edge_index(EdgeId id) const {
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].id == id) return i;
  throw std::out_of_range("unknown edge id " + std::to_string(id));
}

bool ClusteredGraph::has_vertex(VertexId v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

std::vector<std::size_t> ClusteredGraph::incident_edges(VertexId v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].touches(v)) out.push_back(i);
  return out;
}

NodeId ClusteredGraph::cluster_of(VertexId v) const {
  const NodeId leaf = tree.leaf_of(v);
  if (leaf < 0) throw std::out_of_range("vertex " + std::to_string(v) + " has no leaf");
  return tree.node(leaf).parent;
}

std::vector<NodeId> ClusteredGraph::top_clusters() const {
  std::vector<NodeId> out;
  for (NodeId c : tree.node(tree.root()).children)
    if (!tree.is_leaf(c)) out.push_back(c);
  return out;
}

// ----------------------------------------------------------------- validation

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < problems.size(); ++i) os << (i ? "; " : "") << problems[i];
  return os.str();
}

ValidationReport validate(const ClusteredGraph& g) {
  ValidationReport r;
  std::set<VertexId> vset;
  for (VertexId v : g.vertices)
    if (!vset.insert(v).second) r.problems.push_back("duplicate vertex " + std::to_string(v));

  std::set<EdgeId> eids;
  for (const Edge& e : g.edges) {
    if (!eids.insert(e.id).second) r.problems.push_back("duplicate edge id " + std::to_string(e.id));
    for (VertexId x : {e.u, e.v})
      if (!vset.count(x))
        r.problems.push_back("dangling endpoint " + std::to_string(x) + " on edge " +
                             std::to_string(e.id));
  }

  std::map<VertexId, int> leaf_count;
  for (std::size_t i = 0; i < g.tree.size(); ++i) {
    const auto& nd = g.tree.node(static_cast<NodeId>(i));
    if (nd.vertex) {
      ++leaf_count[*nd.vertex];
      if (!vset.count(*nd.vertex)) r.problems.push_back("orphan leaf " + std::to_string(*nd.vertex));
    } else if (nd.children.empty() && !(i == 0 && g.vertices.empty())) {
      r.problems.push_back("empty cluster '" + nd.label + "'");
    }
  }
  for (const auto& [v, count] : leaf_count)
    if (count > 1) r.problems.push_back("duplicate leaf " + std::to_string(v));
  for (VertexId v : vset)
    if (!leaf_count.count(v)) r.problems.push_back("missing leaf for vertex " + std::to_string(v));
  return r;
}

void require_valid(const ClusteredGraph& g) {
  const auto r = validate(g);
  if (!r.ok()) throw InvalidInstance("invalid instance: " + r.to_string());
}

// ------------------------------------------------------------- classification

const char* to_string(GtShape s) {
  switch (s) {
    case GtShape::Path: return "path";
    case GtShape::Cycle: return "cycle";
    case GtShape::Tree: return "tree";
    case GtShape::Other: return "other";
  }
  return "?";
}

bool is_flat(const ClusteredGraph& g) {
  for (NodeId c : g.tree.node(g.tree.root()).children) {
    if (g.tree.is_leaf(c)) continue;
    for (NodeId gc : g.tree.node(c).children)
      if (!g.tree.is_leaf(gc)) return false;
  }
  return true;
}

namespace {

bool induces_connected(const ClusteredGraph& g, const std::vector<VertexId>& members) {
  if (members.size() <= 1) return true;
  std::map<VertexId, std::size_t> idx;
  for (std::size_t i = 0; i < members.size(); ++i) idx[members[i]] = i;
  DisjointSets ds(members.size());
  std::size_t comps = members.size();
  for (const Edge& e : g.edges) {
    auto a = idx.find(e.u), b = idx.find(e.v);
    if (a != idx.end() && b != idx.end() && ds.unite(a->second, b->second)) --comps;
  }
  return comps == 1;
}

// Shape of the simple graph on `n` nodes with the given undirected edge set.
GtShape shape_of(std::size_t n, const std::set<std::pair<std::size_t, std::size_t>>& adj) {
  if (n == 0) return GtShape::Path;
  DisjointSets ds(n);
  std::size_t comps = n;
  std::vector<int> deg(n, 0);
  for (auto [a, b] : adj) {
    ++deg[a];
    ++deg[b];
    if (ds.unite(a, b)) --comps;
  }
  if (comps != 1) return GtShape::Other;
  const int maxdeg = *std::max_element(deg.begin(), deg.end());
  if (adj.size() == n - 1) return maxdeg <= 2 ? GtShape::Path : GtShape::Tree;
  if (adj.size() == n && n >= 3 && maxdeg == 2) return GtShape::Cycle;
  return GtShape::Other;
}

}  // namespace

bool is_c_connected(const ClusteredGraph& g) {
  for (NodeId c : g.tree.clusters())
    if (!induces_connected(g, g.tree.leaves_under(c))) return false;
  return true;
}

Classification classify(const ClusteredGraph& g) {
  require_valid(g);
  Classification c;
  c.flat = is_flat(g);
  c.c_connected = is_c_connected(g);
  c.cluster_count = static_cast<int>(g.tree.clusters().size()) - 1;

  const auto& top = g.tree.node(g.tree.root()).children;
  bool all_top_are_clusters = true;
  for (NodeId t : top) all_top_are_clusters = all_top_are_clusters && !g.tree.is_leaf(t);
  c.two_clustered = c.flat && top.size() == 2 && all_top_are_clusters;

  // G_T: contract every child subtree of the root to one node.
  std::map<VertexId, std::size_t> group;
  for (std::size_t i = 0; i < top.size(); ++i)
    for (VertexId v : g.tree.leaves_under(top[i])) group[v] = i;
  std::set<std::pair<std::size_t, std::size_t>> adj;
  for (const Edge& e : g.edges) {
    auto a = group.at(e.u), b = group.at(e.v);
    if (a != b) adj.insert({std::min(a, b), std::max(a, b)});
  }
  c.gt_shape = shape_of(top.size(), adj);
  c.cyclic_clustered = c.flat && all_top_are_clusters && top.size() >= 3 && c.gt_shape == GtShape::Cycle;
  return c;
}

// ------------------------------------------------------------- preprocessing

Simplified simplify(const ClusteredGraph& g) {
  require_valid(g);
  Simplified out{g, EdgeBound::Pass};
  std::map<std::pair<VertexId, VertexId>, EdgeId> keep;
  for (const Edge& e : g.edges) {
    if (e.is_loop()) continue;
    const std::pair<VertexId, VertexId> key{std::min(e.u, e.v), std::max(e.u, e.v)};
    auto [it, inserted] = keep.emplace(key, e.id);
    if (!inserted) it->second = std::min(it->second, e.id);
  }
  std::set<EdgeId> survivors;
  for (const auto& [key, id] : keep) survivors.insert(id);
  out.graph.edges.clear();
  for (const Edge& e : g.edges)
    if (survivors.count(e.id)) out.graph.edges.push_back(e);

  const auto nv = out.graph.vertices.size(), ne = out.graph.edges.size();
  if (nv > 0 && ne >= 3 * nv) out.verdict = EdgeBound::Fail;
  return out;
}

ClusteredGraph contract_intra_cluster_edges(const ClusteredGraph& g) {
  require_valid(g);
  if (!is_flat(g)) throw InvalidInstance("contraction requires a flat clustered graph");

  std::map<VertexId, std::size_t> idx;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) idx[g.vertices[i]] = i;
  DisjointSets ds(g.vertices.size());
  std::vector<bool> contracted(g.edges.size(), false);
  const NodeId root = g.tree.root();
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const Edge& e = g.edges[i];
    const NodeId cu = g.cluster_of(e.u);
    if (e.is_loop() || cu == root || cu != g.cluster_of(e.v)) continue;
    contracted[i] = ds.unite(idx[e.u], idx[e.v]);
  }

  // Representative of each class is its smallest vertex id.
  std::map<std::size_t, VertexId> rep;
  for (VertexId v : g.vertices) {
    auto [it, inserted] = rep.emplace(ds.find(idx[v]), v);
    if (!inserted) it->second = std::min(it->second, v);
  }
  auto image = [&](VertexId v) { return rep.at(ds.find(idx.at(v))); };

  ClusteredGraph out{{}, {}, g.tree};
  for (VertexId v : g.vertices) {
    if (image(v) == v)
      out.vertices.push_back(v);
    else
      out.tree.remove_leaf(v);
  }
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (contracted[i]) continue;
    const Edge& e = g.edges[i];
    out.edges.push_back(Edge{e.id, image(e.u), image(e.v)});
  }
  return out;
}

}  // namespace cplanar
