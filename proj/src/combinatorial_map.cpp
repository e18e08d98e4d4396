#include "cplanar/combinatorial_map.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cplanar {

std::vector<VertexId> FaceWalk::vertex_set() const {
  std::vector<VertexId> vs = vertices;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::vector<std::size_t> FaceWalk::occurrences(VertexId v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == v) out.push_back(i);
  return out;
}

CombinatorialMap CombinatorialMap::from_rotations(std::vector<VertexId> vertices, std::vector<Edge> edges,
                                                  const std::map<VertexId, std::vector<EdgeId>>& rotation,
                                                  std::optional<std::pair<EdgeId, VertexId>> outer) {
  std::map<EdgeId, std::size_t> index;
  for (std::size_t k = 0; k < edges.size(); ++k)
    if (!index.emplace(edges[k].id, k).second)
      throw std::invalid_argument("duplicate edge id " + std::to_string(edges[k].id));
  std::vector<bool> used(2 * edges.size(), false);
  std::map<VertexId, std::vector<Dart>> darts;
  for (const auto& [v, ids] : rotation) {
    auto& ds = darts[v];
    for (EdgeId id : ids) {
      auto it = index.find(id);
      if (it == index.end())
        throw std::invalid_argument("rotation of " + std::to_string(v) + " names unknown edge " + std::to_string(id));
      const Edge& e = edges[it->second];
      const Dart base = static_cast<Dart>(2 * it->second);
      Dart d = -1;
      if (e.u == v && !used[static_cast<std::size_t>(base)]) {
        d = base;
      } else if (e.v == v && !used[static_cast<std::size_t>(base + 1)]) {
        d = base + 1;
      }
      if (d < 0) throw std::invalid_argument("edge " + std::to_string(id) + " listed too often at vertex " + std::to_string(v));
      used[static_cast<std::size_t>(d)] = true;
      ds.push_back(d);
    }
  }
  Dart o = -1;
  if (outer) {
    auto it = index.find(outer->first);
    if (it == index.end()) throw std::invalid_argument("outer face names unknown edge");
    const Edge& e = edges[it->second];
    if (e.u == outer->second) {
      o = static_cast<Dart>(2 * it->second);
    } else if (e.v == outer->second) {
      o = static_cast<Dart>(2 * it->second + 1);
    } else {
      throw std::invalid_argument("outer face dart does not leave the named vertex");
    }
  }
  return from_dart_rotations(std::move(vertices), std::move(edges), darts, o);
}

CombinatorialMap CombinatorialMap::from_dart_rotations(std::vector<VertexId> vertices, std::vector<Edge> edges,
                                                       const std::map<VertexId, std::vector<Dart>>& rotation,
                                                       Dart outer) {
  CombinatorialMap m;
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw std::invalid_argument("duplicate vertex in embedding");
  m.vertices_ = std::move(vertices);
  m.edges_ = std::move(edges);
  m.next_.assign(m.dart_count(), -1);
  m.prev_.assign(m.dart_count(), -1);
  std::set<EdgeId> ids;
  for (const Edge& e : m.edges_) {
    if (!ids.insert(e.id).second) throw std::invalid_argument("duplicate edge id " + std::to_string(e.id));
    for (VertexId end : {e.u, e.v})
      if (!m.has_vertex(end))
        throw std::invalid_argument("edge " + std::to_string(e.id) + " has a dangling endpoint");
  }
  std::vector<bool> used(m.dart_count(), false);
  for (const auto& [v, ds] : rotation) {
    if (!m.has_vertex(v)) throw std::invalid_argument("rotation for unknown vertex " + std::to_string(v));
    for (Dart d : ds) {
      if (d < 0 || d >= static_cast<Dart>(m.dart_count())) throw std::invalid_argument("dart out of range");
      if (m.tail(d) != v)
        throw std::invalid_argument("edge " + std::to_string(m.edge_of(d).id) + " does not end at vertex " + std::to_string(v));
      if (used[static_cast<std::size_t>(d)])
        throw std::invalid_argument("edge " + std::to_string(m.edge_of(d).id) + " listed too often at vertex " + std::to_string(v));
      used[static_cast<std::size_t>(d)] = true;
    }
    for (std::size_t i = 0; i < ds.size(); ++i) {
      m.next_[static_cast<std::size_t>(ds[i])] = ds[(i + 1) % ds.size()];
      m.prev_[static_cast<std::size_t>(ds[(i + 1) % ds.size()])] = ds[i];
    }
  }
  for (std::size_t d = 0; d < used.size(); ++d)
    if (!used[d])
      throw std::invalid_argument("edge " + std::to_string(m.edges_[d / 2].id) + " missing from the rotation at " +
                                  std::to_string(m.tail(static_cast<Dart>(d))));
  if (outer >= static_cast<Dart>(m.dart_count())) throw std::invalid_argument("outer dart out of range");
  m.outer_ = outer >= 0 ? outer : (m.edges_.empty() ? -1 : 0);
  return m;
}

VertexId CombinatorialMap::tail(Dart d) const {
  const Edge& e = edge_of(d);
  return d % 2 == 0 ? e.u : e.v;
}

Dart CombinatorialMap::dart_of(EdgeId e, VertexId t) const {
  const std::size_t k = edge_index(e);
  const Dart base = static_cast<Dart>(2 * k);
  if (edges_[k].u == t) return base;
  if (edges_[k].v == t) return base + 1;
  throw std::invalid_argument("vertex " + std::to_string(t) + " is not an end of edge " + std::to_string(e));
}

bool CombinatorialMap::has_vertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::size_t CombinatorialMap::edge_index(EdgeId id) const {
  for (std::size_t k = 0; k < edges_.size(); ++k)
    if (edges_[k].id == id) return k;
  throw std::out_of_range("unknown edge id " + std::to_string(id));
}

std::vector<Dart> CombinatorialMap::rotation(VertexId v) const {
  Dart start = -1;
  for (Dart d = 0; d < static_cast<Dart>(dart_count()) && start < 0; ++d)
    if (tail(d) == v) start = d;
  std::vector<Dart> out;
  if (start < 0) return out;
  Dart d = start;
  do {
    out.push_back(d);
    d = next_around(d);
  } while (d != start && out.size() <= dart_count());
  return out;
}

bool CombinatorialMap::adjacent(VertexId a, VertexId b) const {
  return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) {
    return (e.u == a && e.v == b) || (e.u == b && e.v == a);
  });
}

bool CombinatorialMap::is_connected() const {
  if (vertices_.empty()) return true;
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const Edge& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::set<VertexId> seen{vertices_.front()};
  std::vector<VertexId> stack{vertices_.front()};
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : adj[v])
      if (seen.insert(w).second) stack.push_back(w);
  }
  return seen.size() == vertices_.size();
}

std::vector<FaceWalk> CombinatorialMap::faces() const {
  std::vector<FaceWalk> out;
  if (edges_.empty()) {
    for (VertexId v : vertices_) out.push_back({{}, {v}});
    return out;
  }
  std::vector<bool> seen(dart_count(), false);
  for (Dart s = 0; s < static_cast<Dart>(dart_count()); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    FaceWalk f;
    Dart d = s;
    while (!seen[static_cast<std::size_t>(d)]) {
      seen[static_cast<std::size_t>(d)] = true;
      f.darts.push_back(d);
      f.vertices.push_back(tail(d));
      d = face_next(d);
    }
    if (d != s) throw std::logic_error("face permutation is not a permutation");
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<std::size_t> CombinatorialMap::face_of_darts(const std::vector<FaceWalk>& fs) const {
  std::vector<std::size_t> out(dart_count(), 0);
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (Dart d : fs[i].darts) out[static_cast<std::size_t>(d)] = i;
  return out;
}

std::size_t CombinatorialMap::outer_face(const std::vector<FaceWalk>& fs) const {
  if (outer_ < 0) return 0;
  return face_of_darts(fs)[static_cast<std::size_t>(outer_)];
}

ValidationReport CombinatorialMap::validate() const {
  ValidationReport r;
  if (next_.size() != dart_count() || prev_.size() != dart_count()) {
    r.problems.push_back("rotation arrays have the wrong size");
    return r;
  }
  for (Dart d = 0; d < static_cast<Dart>(dart_count()); ++d) {
    const Dart n = next_around(d);
    if (n < 0 || n >= static_cast<Dart>(dart_count()) || prev_around(n) != d) {
      r.problems.push_back("rotation is not a permutation at dart " + std::to_string(d));
      return r;
    }
    if (tail(n) != tail(d)) r.problems.push_back("rotation at dart " + std::to_string(d) + " leaves its vertex");
  }
  for (VertexId v : vertices_) {
    std::size_t deg = 0;
    for (const Edge& e : edges_) deg += (e.u == v) + (e.v == v);
    if (rotation(v).size() != deg) r.problems.push_back("rotation at " + std::to_string(v) + " is not a single cycle");
  }
  if (!r.ok()) return r;
  if (vertices_.empty()) {
    r.problems.push_back("empty map");
    return r;
  }
  if (!is_connected()) {
    r.problems.push_back("graph is disconnected");
    return r;
  }
  if (outer_ >= static_cast<Dart>(dart_count()) || (outer_ < 0 && !edges_.empty()))
    r.problems.push_back("outer face dart out of range");
  const long euler = static_cast<long>(vertices_.size()) - static_cast<long>(edges_.size()) +
                     static_cast<long>(faces().size());
  if (euler != 2) r.problems.push_back("V - E + F = " + std::to_string(euler) + ", expected 2");
  return r;
}

void CombinatorialMap::require_valid() const {
  const auto r = validate();
  if (!r.ok()) throw std::invalid_argument("not a planar embedding: " + r.to_string());
}

EdgeId CombinatorialMap::fresh_edge_id() const {
  EdgeId m = 0;
  for (const Edge& e : edges_) m = std::max(m, e.id);
  return m + 1;
}

std::size_t CombinatorialMap::insert_edge(EdgeId id, Corner a, Corner b) {
  if (a.vertex == b.vertex) throw std::invalid_argument("insert_edge does not create loops");
  for (const Corner& c : {a, b}) {
    if (!has_vertex(c.vertex)) throw std::invalid_argument("corner at unknown vertex");
    if (c.dart >= 0 ? tail(c.dart) != c.vertex : degree(c.vertex) != 0)
      throw std::invalid_argument("corner does not belong to its vertex");
  }
  const std::size_t k = edges_.size();
  edges_.push_back({id, a.vertex, b.vertex});
  next_.resize(dart_count());
  prev_.resize(dart_count());
  auto place = [&](Dart nd, Dart before) {
    const auto i = static_cast<std::size_t>(nd);
    if (before < 0) {
      next_[i] = prev_[i] = nd;
      return;
    }
    const Dart p = prev_around(before);
    next_[static_cast<std::size_t>(p)] = nd;
    prev_[i] = p;
    next_[i] = before;
    prev_[static_cast<std::size_t>(before)] = nd;
  };
  place(static_cast<Dart>(2 * k), a.dart);
  place(static_cast<Dart>(2 * k + 1), b.dart);
  if (outer_ < 0) outer_ = static_cast<Dart>(2 * k);
  return k;
}

void CombinatorialMap::unlink(Dart d) {
  const Dart n = next_around(d), p = prev_around(d);
  if (n != d) {
    next_[static_cast<std::size_t>(p)] = n;
    prev_[static_cast<std::size_t>(n)] = p;
  }
  next_[static_cast<std::size_t>(d)] = prev_[static_cast<std::size_t>(d)] = d;
}

Dart CombinatorialMap::surviving_outer(const std::vector<bool>& removed) const {
  if (outer_ < 0 || !removed[static_cast<std::size_t>(outer_)]) return outer_;
  Dart d = outer_;
  for (std::size_t steps = 0; steps < dart_count(); ++steps) {
    d = face_next(d);
    if (!removed[static_cast<std::size_t>(d)]) return d;
    if (d == outer_) break;
  }
  return -1;
}

void CombinatorialMap::drop_edge_slot(std::size_t index) {
  const std::size_t last = edges_.size() - 1;
  if (index != last) {
    for (int side = 0; side < 2; ++side) {
      const Dart from = static_cast<Dart>(2 * last + side), to = static_cast<Dart>(2 * index + side);
      Dart n = next_around(from), p = prev_around(from);
      if (n == from) n = to;
      if (p == from) p = to;
      if (n == twin(from)) n = twin(to);
      if (p == twin(from)) p = twin(to);
      next_[static_cast<std::size_t>(to)] = n;
      prev_[static_cast<std::size_t>(to)] = p;
    }
    for (int side = 0; side < 2; ++side) {
      const Dart to = static_cast<Dart>(2 * index + side);
      next_[static_cast<std::size_t>(prev_around(to))] = to;
      prev_[static_cast<std::size_t>(next_around(to))] = to;
    }
    edges_[index] = edges_[last];
    if (outer_ / 2 == static_cast<Dart>(last)) outer_ = static_cast<Dart>(2 * index) + outer_ % 2;
  }
  edges_.pop_back();
  next_.resize(dart_count());
  prev_.resize(dart_count());
}

VertexId CombinatorialMap::contract_edge(std::size_t index) {
  if (index >= edges_.size()) throw std::out_of_range("edge index out of range");
  const Edge e = edges_[index];
  if (e.is_loop()) throw std::invalid_argument("cannot contract a loop");
  const Dart du = static_cast<Dart>(2 * index), dv = du + 1;
  std::vector<bool> removed(dart_count(), false);
  removed[static_cast<std::size_t>(du)] = removed[static_cast<std::size_t>(dv)] = true;
  outer_ = surviving_outer(removed);

  const Dart a1 = next_around(du), a2 = prev_around(du);
  const Dart b1 = next_around(dv), b2 = prev_around(dv);
  const bool u_empty = a1 == du, v_empty = b1 == dv;
  if (!u_empty && !v_empty) {
    next_[static_cast<std::size_t>(a2)] = b1;
    prev_[static_cast<std::size_t>(b1)] = a2;
    next_[static_cast<std::size_t>(b2)] = a1;
    prev_[static_cast<std::size_t>(a1)] = b2;
  } else if (u_empty && !v_empty) {
    next_[static_cast<std::size_t>(b2)] = b1;
    prev_[static_cast<std::size_t>(b1)] = b2;
  } else if (!u_empty && v_empty) {
    next_[static_cast<std::size_t>(a2)] = a1;
    prev_[static_cast<std::size_t>(a1)] = a2;
  }

  const VertexId keep = std::min(e.u, e.v), gone = std::max(e.u, e.v);
  for (Edge& f : edges_) {
    if (f.u == gone) f.u = keep;
    if (f.v == gone) f.v = keep;
  }
  drop_edge_slot(index);
  vertices_.erase(std::find(vertices_.begin(), vertices_.end(), gone));
  return gone;
}

void CombinatorialMap::remove_edges(std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (indices.empty()) return;
  if (indices.back() >= edges_.size()) throw std::out_of_range("edge index out of range");
  std::vector<bool> removed(dart_count(), false);
  for (std::size_t k : indices) removed[2 * k] = removed[2 * k + 1] = true;
  outer_ = surviving_outer(removed);
  for (auto it = indices.rbegin(); it != indices.rend(); ++it) {
    const std::size_t k = *it;
    unlink(static_cast<Dart>(2 * k));
    unlink(static_cast<Dart>(2 * k + 1));
    // An outer dart sitting in the moved slot follows it inside drop_edge_slot.
    drop_edge_slot(k);
  }
}

void CombinatorialMap::remove_vertex(VertexId v) {
  auto it = std::find(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end()) throw std::invalid_argument("unknown vertex " + std::to_string(v));
  for (const Edge& e : edges_)
    if (e.touches(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " is not isolated");
  vertices_.erase(it);
}

}  // namespace cplanar
