#include "cplanar/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>

#include "cplanar/combinatorial_map.hpp"

namespace cplanar {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

class Budget {
 public:
  explicit Budget(std::size_t limit) : limit_(limit) {}
  void tick() {
    if (++used_ > limit_) throw BudgetExceeded("oracle search exceeded its budget of " + std::to_string(limit_) + " nodes");
  }

 private:
  std::size_t limit_;
  std::size_t used_ = 0;
};

// For every cluster, the faces touching vertices outside it must merge into
// one region once the edges not inside the cluster are erased. Accepts when
// some candidate face lies in that region for all clusters at once.
bool clusters_fit(const CombinatorialMap& m, const std::map<VertexId, NodeId>& cluster_of,
                  const std::vector<NodeId>& clusters, const std::vector<bool>& f0_allowed) {
  const auto fs = m.faces();
  const auto face = m.face_of_darts(fs);
  std::vector<bool> candidate = f0_allowed;
  candidate.resize(fs.size(), false);
  for (NodeId c : clusters) {
    auto inside = [&](VertexId v) { return cluster_of.at(v) == c; };
    UnionFind uf(fs.size());
    for (std::size_t k = 0; k < m.edges().size(); ++k) {
      const Edge& e = m.edges()[k];
      if (!(inside(e.u) && inside(e.v))) uf.unite(face[2 * k], face[2 * k + 1]);
    }
    std::optional<std::size_t> region;
    for (Dart d = 0; d < static_cast<Dart>(m.dart_count()); ++d) {
      if (inside(m.tail(d))) continue;
      const std::size_t r = uf.find(face[static_cast<std::size_t>(d)]);
      if (region && *region != r) return false;
      region = r;
    }
    if (!region) continue;
    for (std::size_t f = 0; f < fs.size(); ++f)
      if (uf.find(f) != *region) candidate[f] = false;
  }
  return std::find(candidate.begin(), candidate.end(), true) != candidate.end();
}

bool connected(const ClusteredGraph& g) {
  if (g.vertices.empty()) return true;
  UnionFind uf(g.vertices.size());
  std::map<VertexId, std::size_t> at;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) at[g.vertices[i]] = i;
  std::size_t comps = g.vertices.size();
  for (const Edge& e : g.edges) comps -= uf.unite(at[e.u], at[e.v]);
  return comps == 1;
}

// Enumerates planar rotation systems by inserting edges one at a time:
// spanning-tree edges first (each hangs a new vertex off the component),
// then the rest, each into a face holding both ends.
class EmbeddingSearch {
 public:
  EmbeddingSearch(const ClusteredGraph& h, Budget& budget, std::function<bool(const CombinatorialMap&)> accept)
      : h_(h), budget_(budget), accept_(std::move(accept)) {
    std::map<VertexId, std::vector<std::size_t>> inc;
    for (std::size_t k = 0; k < h.edges.size(); ++k) {
      inc[h.edges[k].u].push_back(k);
      inc[h.edges[k].v].push_back(k);
    }
    std::set<VertexId> seen{h.vertices.front()};
    std::vector<bool> used(h.edges.size(), false);
    std::queue<VertexId> q;
    q.push(h.vertices.front());
    while (!q.empty()) {
      const VertexId v = q.front();
      q.pop();
      for (std::size_t k : inc[v]) {
        const VertexId w = h.edges[k].other(v);
        if (seen.insert(w).second) {
          order_.push_back({k, v});
          used[k] = true;
          q.push(w);
        }
      }
    }
    for (std::size_t k = 0; k < h.edges.size(); ++k)
      if (!used[k]) order_.push_back({k, -1});
  }

  bool run() {
    CombinatorialMap start = CombinatorialMap::from_rotations(h_.vertices, {}, {}, std::nullopt);
    return step(start, 0);
  }

 private:
  bool step(const CombinatorialMap& m, std::size_t i) {
    budget_.tick();
    if (i == order_.size()) return accept_(m);
    const Edge& e = h_.edges[order_[i].first];
    if (order_[i].second >= 0) {
      const VertexId p = order_[i].second, c = e.other(p);
      const auto rot = m.rotation(p);
      if (rot.empty()) {
        CombinatorialMap next = m;
        next.insert_edge(e.id, {p, -1}, {c, -1});
        return step(next, i + 1);
      }
      for (Dart d : rot) {
        CombinatorialMap next = m;
        next.insert_edge(e.id, {p, d}, {c, -1});
        if (step(next, i + 1)) return true;
      }
      return false;
    }
    for (const FaceWalk& f : m.faces()) {
      const auto ou = f.occurrences(e.u), ov = f.occurrences(e.v);
      for (std::size_t a : ou)
        for (std::size_t b : ov) {
          CombinatorialMap next = m;
          next.insert_edge(e.id, f.corner(a), f.corner(b));
          if (step(next, i + 1)) return true;
        }
    }
    return false;
  }

  const ClusteredGraph& h_;
  Budget& budget_;
  std::function<bool(const CombinatorialMap&)> accept_;
  std::vector<std::pair<std::size_t, VertexId>> order_;  // (edge index, tree parent or -1)
};

}  // namespace

bool brute_force_flat_cplanarity(const ClusteredGraph& input, std::size_t budget_nodes) {
  require_valid(input);
  if (!is_flat(input)) throw InvalidInstance("the flat oracle needs a flat instance");
  if (!connected(input)) throw OracleRefusal("the flat oracle needs a connected graph");
  Simplified s = simplify(input);
  ClusteredGraph g = std::move(s.graph);
  const std::size_t n = g.vertices.size();
  if (n <= 2) return true;
  if (g.edges.size() > 3 * n - 6) return false;
  if (n > kFlatOracleMaxVertices || g.edges.size() > kFlatOracleMaxEdges)
    throw OracleRefusal("instance exceeds the flat oracle's size limits");

  Budget budget(budget_nodes);
  std::map<VertexId, NodeId> cluster_of;
  for (VertexId v : g.vertices) cluster_of[v] = g.cluster_of(v);
  std::vector<NodeId> clusters = g.top_clusters();

  // Candidate saturator edges per cluster: intra-cluster non-edges.
  std::set<std::pair<VertexId, VertexId>> present;
  for (const Edge& e : g.edges) present.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  struct Part {
    std::vector<VertexId> members;
    std::vector<std::pair<VertexId, VertexId>> candidates;
    std::size_t needed = 0;
  };
  std::vector<Part> parts;
  for (NodeId c : clusters) {
    Part p;
    p.members = g.tree.leaves_under(c);
    std::sort(p.members.begin(), p.members.end());
    std::map<VertexId, std::size_t> at;
    for (std::size_t i = 0; i < p.members.size(); ++i) at[p.members[i]] = i;
    UnionFind uf(p.members.size());
    std::size_t comps = p.members.size();
    for (const Edge& e : g.edges)
      if (at.count(e.u) && at.count(e.v)) comps -= uf.unite(at[e.u], at[e.v]);
    p.needed = comps - 1;
    for (std::size_t i = 0; i < p.members.size(); ++i)
      for (std::size_t j = i + 1; j < p.members.size(); ++j)
        if (!present.count({p.members[i], p.members[j]}) && uf.find(i) != uf.find(j))
          p.candidates.push_back({p.members[i], p.members[j]});
    parts.push_back(std::move(p));
  }

  auto accept = [&](const CombinatorialMap& m) {
    return clusters_fit(m, cluster_of, clusters, std::vector<bool>(m.faces().size(), true));
  };

  // Depth-first over clusters, choosing candidate edges that join distinct
  // components until each cluster is connected.
  std::vector<Edge> extra;
  std::function<bool(std::size_t)> choose = [&](std::size_t pi) -> bool {
    if (pi == parts.size()) {
      ClusteredGraph h = g;
      EdgeId next_id = 0;
      for (const Edge& e : h.edges) next_id = std::max(next_id, e.id + 1);
      for (const Edge& e : extra) h.edges.push_back({next_id++, e.u, e.v});
      if (h.edges.size() > 3 * n - 6) return false;
      return EmbeddingSearch(h, budget, accept).run();
    }
    const Part& p = parts[pi];
    std::map<VertexId, std::size_t> at;
    for (std::size_t i = 0; i < p.members.size(); ++i) at[p.members[i]] = i;
    std::function<bool(std::size_t, std::size_t)> pick = [&](std::size_t from, std::size_t left) -> bool {
      if (left == 0) {
        UnionFind uf(p.members.size());
        std::size_t comps = p.members.size();
        for (const Edge& e : g.edges)
          if (at.count(e.u) && at.count(e.v)) comps -= uf.unite(at[e.u], at[e.v]);
        for (std::size_t k = extra.size() - p.needed; k < extra.size(); ++k)
          comps -= uf.unite(at[extra[k].u], at[extra[k].v]);
        return comps == 1 && choose(pi + 1);
      }
      for (std::size_t k = from; k + left <= p.candidates.size(); ++k) {
        budget.tick();
        extra.push_back({0, p.candidates[k].first, p.candidates[k].second});
        const bool ok = pick(k + 1, left - 1);
        extra.pop_back();
        if (ok) return true;
      }
      return false;
    };
    if (p.needed == 0) return choose(pi + 1);
    return pick(0, p.needed);
  };
  return choose(0);
}

bool brute_force_embedded_saturator(const EmbeddedClusteredGraph& g, std::size_t budget_nodes) {
  const ValidationReport r = validate(g);
  if (!r.ok()) throw InvalidInstance("invalid embedded instance: " + r.to_string());
  const CombinatorialMap& m0 = g.map;
  if (m0.vertices().size() > kEmbeddedOracleMaxVertices)
    throw OracleRefusal("instance exceeds the embedded oracle's vertex limit");

  std::map<VertexId, NodeId> cluster_of;
  for (VertexId v : m0.vertices()) cluster_of[v] = g.cluster(v);
  std::vector<NodeId> clusters;
  for (NodeId c : g.graph().top_clusters()) clusters.push_back(c);

  // Candidate pairs: same cluster, not adjacent, sharing a face.
  std::set<std::pair<VertexId, VertexId>> cand;
  const auto fs0 = m0.faces();
  for (const FaceWalk& f : fs0) {
    const auto vs = f.vertex_set();
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (cluster_of[vs[i]] >= 0 && cluster_of[vs[i]] == cluster_of[vs[j]] && !m0.adjacent(vs[i], vs[j]))
          cand.insert({vs[i], vs[j]});
  }
  if (cand.size() > kEmbeddedOracleMaxPairs)
    throw OracleRefusal("instance exceeds the embedded oracle's saturating-pair limit");
  const std::vector<std::pair<VertexId, VertexId>> pairs(cand.begin(), cand.end());

  std::vector<bool> outer_dart(m0.dart_count(), false);
  if (m0.outer() >= 0)
    for (Dart d : fs0[m0.outer_face(fs0)].darts) outer_dart[static_cast<std::size_t>(d)] = true;

  std::map<VertexId, std::size_t> at;
  for (std::size_t i = 0; i < m0.vertices().size(); ++i) at[m0.vertices()[i]] = i;
  Budget budget(budget_nodes);

  std::function<bool(const CombinatorialMap&, std::size_t)> search = [&](const CombinatorialMap& m,
                                                                         std::size_t i) -> bool {
    budget.tick();
    // Cluster connectivity over edges inside clusters, chords included.
    UnionFind uf(m.vertices().size() + 1);
    for (const Edge& e : m.edges())
      if (cluster_of[e.u] >= 0 && cluster_of[e.u] == cluster_of[e.v]) uf.unite(at[e.u], at[e.v]);
    if (i == pairs.size()) {
      for (VertexId a : m.vertices())
        for (VertexId b : m.vertices())
          if (cluster_of[a] >= 0 && cluster_of[a] == cluster_of[b] && uf.find(at[a]) != uf.find(at[b])) return false;
      const auto fs = m.faces();
      std::vector<bool> allowed(fs.size(), false);
      if (m.outer() < 0) {
        allowed.assign(fs.size(), true);
      } else {
        for (std::size_t f = 0; f < fs.size(); ++f)
          for (Dart d : fs[f].darts)
            if (static_cast<std::size_t>(d) < outer_dart.size() && outer_dart[static_cast<std::size_t>(d)]) allowed[f] = true;
      }
      return clusters_fit(m, cluster_of, clusters, allowed);
    }
    if (search(m, i + 1)) return true;
    const auto [u, v] = pairs[i];
    if (uf.find(at[u]) == uf.find(at[v])) return false;
    for (const FaceWalk& f : m.faces())
      for (std::size_t a : f.occurrences(u))
        for (std::size_t b : f.occurrences(v)) {
          CombinatorialMap next = m;
          next.insert_edge(next.fresh_edge_id(), f.corner(a), f.corner(b));
          if (search(next, i + 1)) return true;
        }
    return false;
  };
  return search(m0, 0);
}

}  // namespace cplanar
