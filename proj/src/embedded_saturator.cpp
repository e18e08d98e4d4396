#include "cplanar/embedded_saturator.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace cplanar {

NodeId EmbeddedClusteredGraph::cluster(VertexId v) const {
  const NodeId leaf = tree.leaf_of(v);
  if (leaf < 0) throw std::invalid_argument("vertex " + std::to_string(v) + " has no leaf");
  const NodeId p = tree.node(leaf).parent;
  return p == tree.root() ? -1 : p;
}

ValidationReport validate(const EmbeddedClusteredGraph& g) {
  ValidationReport r = validate(g.graph());
  if (!r.ok()) return r;
  if (!is_flat(g.graph())) r.problems.push_back("embedded instances must be flat");
  const ValidationReport m = g.map.validate();
  r.problems.insert(r.problems.end(), m.problems.begin(), m.problems.end());
  if (!r.ok()) return r;
  for (const Edge& e : g.map.edges())
    if (e.is_loop() && g.cluster(e.u) < 0)
      r.problems.push_back("loop " + std::to_string(e.id) + " at a vertex outside every cluster");
  return r;
}

void require_small_faces(const EmbeddedClusteredGraph& g) {
  const auto fs = g.map.faces();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const std::size_t n = fs[i].vertex_set().size();
    if (n > kMaxFaceVertices)
      throw FaceSizeViolation("face " + std::to_string(i) + " is incident to " + std::to_string(n) +
                              " vertices; the small-face algorithm needs at most " +
                              std::to_string(kMaxFaceVertices));
  }
}

namespace {

void remove_vertex_everywhere(EmbeddedClusteredGraph& g, VertexId v) {
  g.tree.remove_leaf(v);
}

// Edges (by index) and vertices reachable from the given darts at v without
// passing through v.
std::pair<std::set<std::size_t>, std::set<VertexId>> side_of(const CombinatorialMap& m, VertexId v,
                                                              const std::vector<Dart>& start) {
  std::set<std::size_t> edges;
  std::set<VertexId> verts;
  std::vector<VertexId> stack;
  auto visit_edge = [&](std::size_t k, VertexId from) {
    if (!edges.insert(k).second) return;
    const VertexId w = m.edges()[k].other(from);
    if (w != v && verts.insert(w).second) stack.push_back(w);
  };
  for (Dart d : start) visit_edge(static_cast<std::size_t>(d / 2), v);
  while (!stack.empty()) {
    const VertexId w = stack.back();
    stack.pop_back();
    for (Dart d : m.rotation(w)) visit_edge(static_cast<std::size_t>(d / 2), w);
  }
  return {edges, verts};
}

std::vector<Dart> darts_between(const CombinatorialMap& m, Dart from, Dart to) {
  std::vector<Dart> out;
  for (Dart d = m.next_around(from); d != to; d = m.next_around(d)) out.push_back(d);
  return out;
}

}  // namespace

Preprocessed preprocess_embedded(const EmbeddedClusteredGraph& input) {
  require_valid(input.graph());
  if (!is_flat(input.graph())) throw InvalidInstance("embedded preprocessing needs a flat instance");
  Preprocessed out;
  EmbeddedClusteredGraph g = input;

  while (true) {
    std::size_t pick = g.map.edges().size();
    for (std::size_t k = 0; k < g.map.edges().size() && pick == g.map.edges().size(); ++k) {
      const Edge& e = g.map.edges()[k];
      if (!e.is_loop() && g.cluster(e.u) >= 0 && g.cluster(e.u) == g.cluster(e.v)) pick = k;
    }
    if (pick == g.map.edges().size()) break;
    const Edge e = g.map.edges()[pick];
    const VertexId gone = g.map.contract_edge(pick);
    remove_vertex_everywhere(g, gone);
    out.trace.push_back("contract edge " + std::to_string(e.id) + " (" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + ")");
  }

  while (true) {
    std::size_t k = g.map.edges().size();
    for (std::size_t i = 0; i < g.map.edges().size() && k == g.map.edges().size(); ++i)
      if (g.map.edges()[i].is_loop()) k = i;
    if (k == g.map.edges().size()) break;

    const CombinatorialMap& m = g.map;
    const VertexId v = m.edges()[k].u;
    const EdgeId loop_id = m.edges()[k].id;
    const Dart a = static_cast<Dart>(2 * k), b = a + 1;
    const auto x_side = side_of(m, v, darts_between(m, a, b));
    const auto y_side = side_of(m, v, darts_between(m, b, a));

    const auto fs = m.faces();
    const auto face = m.face_of_darts(fs);
    const std::size_t of = m.outer_face(fs);
    // The face of a lies on the Y side, the face of b on the X side.
    bool interior_is_x;
    if (of == face[static_cast<std::size_t>(a)]) {
      interior_is_x = true;
    } else if (of == face[static_cast<std::size_t>(b)]) {
      interior_is_x = false;
    } else {
      interior_is_x = true;
      for (Dart d : fs[of].darts)
        if (x_side.first.count(static_cast<std::size_t>(d / 2))) interior_is_x = false;
    }
    const auto& inside = interior_is_x ? x_side : y_side;
    for (VertexId w : inside.second)
      if (g.cluster(w) != g.cluster(v)) {
        out.instance.reset();
        out.reason = "vertex " + std::to_string(w) + " of another cluster lies inside loop " +
                     std::to_string(loop_id) + " at " + std::to_string(v);
        out.trace.push_back(out.reason);
        return out;
      }
    std::vector<std::size_t> doomed(inside.first.begin(), inside.first.end());
    doomed.push_back(k);
    g.map.remove_edges(doomed);
    for (VertexId w : inside.second) {
      g.map.remove_vertex(w);
      remove_vertex_everywhere(g, w);
    }
    out.trace.push_back("remove loop " + std::to_string(loop_id) + " at " + std::to_string(v) + " with " +
                        std::to_string(inside.second.size()) + " enclosed vertices");
  }
  g.map.require_valid();
  out.instance = std::move(g);
  return out;
}

std::vector<VertexPair> saturating_pairs(const FaceWalk& f, const EmbeddedClusteredGraph& g) {
  const auto vs = f.vertex_set();
  std::vector<VertexPair> out;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const NodeId c = g.cluster(vs[i]);
      if (c >= 0 && c == g.cluster(vs[j])) out.emplace_back(vs[i], vs[j]);
    }
  return out;
}

std::vector<Chord> chords(const FaceWalk& f, const VertexPair& p) {
  std::vector<Chord> out;
  for (std::size_t i : f.occurrences(p.first))
    for (std::size_t j : f.occurrences(p.second)) out.push_back({std::min(i, j), std::max(i, j)});
  std::sort(out.begin(), out.end(), [](const Chord& x, const Chord& y) {
    return std::pair(x.a, x.b) < std::pair(y.a, y.b);
  });
  return out;
}

bool chords_cross(const Chord& c, const Chord& d) {
  if (c.a == d.a || c.a == d.b || c.b == d.a || c.b == d.b) return false;
  const bool a_in = c.a < d.a && d.a < c.b;
  const bool b_in = c.a < d.b && d.b < c.b;
  return a_in != b_in;
}

bool can_embed_noncrossing(const FaceWalk& f, const VertexPair& p1, const VertexPair& p2) {
  for (const Chord& c : chords(f, p1))
    for (const Chord& d : chords(f, p2))
      if (!chords_cross(c, d)) return true;
  return false;
}

bool is_bad_face(const FaceWalk& f, const EmbeddedClusteredGraph& g) {
  const auto ps = saturating_pairs(f, g);
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j)
      if (can_embed_noncrossing(f, ps[i], ps[j])) return true;
  return false;
}

VertexId merge_vertices(EmbeddedClusteredGraph& g, const FaceWalk& f, std::size_t pos_u, std::size_t pos_v) {
  const Corner cu = f.corner(pos_u), cv = f.corner(pos_v);
  if (cu.vertex == cv.vertex) throw std::invalid_argument("cannot merge a vertex with itself");
  if (g.map.adjacent(cu.vertex, cv.vertex))
    throw std::invalid_argument("vertices " + std::to_string(cu.vertex) + " and " + std::to_string(cv.vertex) +
                                " are adjacent");
  const std::size_t k = g.map.insert_edge(g.map.fresh_edge_id(), cu, cv);
  const VertexId gone = g.map.contract_edge(k);
  g.tree.remove_leaf(gone);
  g.map.require_valid();
  return gone;
}

const char* to_string(MergeCase c) {
  switch (c) {
    case MergeCase::TwoPairs: return "two-pairs";
    case MergeCase::SingleCluster: return "single-cluster";
    case MergeCase::SeparateComponents: return "separate-components";
    case MergeCase::AvoidingChord: return "avoiding-chord";
    case MergeCase::UnseparatedPair: return "unseparated-pair";
    case MergeCase::FourCycleEnclave: return "four-cycle-enclave";
  }
  return "?";
}

namespace {

struct Plan {
  MergeCase kind;
  Chord chord;
};

// Number of (pair, chord) combinations among `others` that avoid c.
std::size_t avoid_score(const FaceWalk& f, const Chord& c, const std::vector<VertexPair>& others) {
  std::size_t n = 0;
  for (const VertexPair& q : others)
    for (const Chord& d : chords(f, q)) n += !chords_cross(c, d);
  return n;
}

// Among candidate chords, the one avoiding the most others; ties go to the
// lexicographically smallest pair of corner darts.
Chord best_chord(const FaceWalk& f, const std::vector<Chord>& cands, const std::vector<VertexPair>& others) {
  if (cands.empty()) throw std::logic_error("no candidate chord");
  auto key = [&](const Chord& c) {
    const Dart x = f.darts.empty() ? 0 : f.darts[c.a], y = f.darts.empty() ? 0 : f.darts[c.b];
    return std::pair(std::min(x, y), std::max(x, y));
  };
  Chord best = cands.front();
  std::size_t best_score = avoid_score(f, best, others);
  for (const Chord& c : cands) {
    const std::size_t s = avoid_score(f, c, others);
    if (s > best_score || (s == best_score && key(c) < key(best))) {
      best = c;
      best_score = s;
    }
  }
  return best;
}

std::vector<VertexPair> without(std::vector<VertexPair> ps, const VertexPair& p) {
  ps.erase(std::remove(ps.begin(), ps.end(), p), ps.end());
  return ps;
}

// Boundary subgraph of a face: the distinct edges on its walk.
std::vector<Edge> boundary_edges(const CombinatorialMap& m, const FaceWalk& f) {
  std::set<std::size_t> ks;
  for (Dart d : f.darts) ks.insert(static_cast<std::size_t>(d / 2));
  std::vector<Edge> out;
  for (std::size_t k : ks) out.push_back(m.edges()[k]);
  return out;
}

bool same_component(const std::vector<Edge>& es, VertexId a, VertexId b) {
  std::set<VertexId> seen{a};
  std::vector<VertexId> stack{a};
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (const Edge& e : es)
      if (e.touches(v) && seen.insert(e.other(v)).second) stack.push_back(e.other(v));
  }
  return seen.count(b) > 0;
}

// Simple cycles of a small multigraph as vertex sets with their lengths.
// Throws unless every edge lies on at most one cycle.
std::vector<std::pair<std::size_t, std::set<VertexId>>> cactus_cycles(const std::vector<Edge>& es) {
  if (es.size() > 20) throw std::logic_error("face boundary too large for the enclave analysis");
  std::vector<std::pair<std::size_t, std::set<VertexId>>> out;
  std::vector<int> uses(es.size(), 0);
  for (std::uint32_t mask = 1; mask < (1u << es.size()); ++mask) {
    std::map<VertexId, int> deg;
    std::vector<Edge> sub;
    for (std::size_t i = 0; i < es.size(); ++i)
      if (mask & (1u << i)) {
        ++deg[es[i].u];
        ++deg[es[i].v];
        sub.push_back(es[i]);
      }
    if (sub.size() < 2) continue;
    if (!std::all_of(deg.begin(), deg.end(), [](const auto& kv) { return kv.second == 2; })) continue;
    if (!std::all_of(deg.begin(), deg.end(), [&](const auto& kv) {
          return same_component(sub, deg.begin()->first, kv.first);
        }))
      continue;
    std::set<VertexId> vs;
    for (const auto& kv : deg) vs.insert(kv.first);
    out.emplace_back(sub.size(), vs);
    for (std::size_t i = 0; i < es.size(); ++i)
      if (mask & (1u << i)) ++uses[i];
  }
  if (std::any_of(uses.begin(), uses.end(), [](int u) { return u > 1; }))
    throw std::logic_error("face boundary is not a cactus");
  for (const auto& [len, vs] : out)
    if (len != 2 && len != 4) throw std::logic_error("enclave bounded by a cycle of length " + std::to_string(len));
  return out;
}

// Decides how to merge within bad face f, or returns nullopt when the face
// proves the instance is not c-planar.
std::optional<Plan> plan_merge(const EmbeddedClusteredGraph& g, const FaceWalk& f) {
  const auto pairs = saturating_pairs(f, g);
  if (pairs.size() == 2) {
    const auto& p = pairs[0];
    std::vector<Chord> ok;
    for (const Chord& c : chords(f, p))
      if (avoid_score(f, c, {pairs[1]}) > 0) ok.push_back(c);
    return Plan{MergeCase::TwoPairs, best_chord(f, ok, {pairs[1]})};
  }

  std::map<NodeId, std::vector<VertexId>> by_cluster;
  for (VertexId v : f.vertex_set())
    if (g.cluster(v) >= 0) by_cluster[g.cluster(v)].push_back(v);
  NodeId big = -1;
  std::size_t others_max = 0;
  for (const auto& [c, vs] : by_cluster) {
    if (vs.size() >= 3 && big < 0) {
      big = c;
    } else {
      others_max = std::max(others_max, vs.size());
    }
  }
  if (big < 0) throw std::logic_error("bad face with more than two saturating pairs but no large cluster");
  if (others_max <= 1) {
    const VertexPair p = pairs.front();  // all pairs belong to the large cluster
    return Plan{MergeCase::SingleCluster, best_chord(f, chords(f, p), without(pairs, p))};
  }

  const auto& cv = by_cluster[big];
  std::vector<VertexId> dv;
  for (const auto& [c, vs] : by_cluster)
    if (c != big && vs.size() >= 2) dv = vs;
  if (cv.size() != 3 || dv.size() != 2 || f.vertex_set().size() != 5)
    throw std::logic_error("bad face outside the three-plus-two configuration");
  const VertexPair xy{dv[0], dv[1]};
  std::vector<VertexPair> cpairs = without(pairs, xy);
  const auto boundary = boundary_edges(g.map, f);

  if (!same_component(boundary, xy.first, xy.second))
    return Plan{MergeCase::SeparateComponents, best_chord(f, chords(f, xy), cpairs)};

  // An x-y chord that leaves at least two C-pairs embeddable beside it.
  std::vector<Chord> roomy;
  for (const Chord& e : chords(f, xy)) {
    std::size_t avoiders = 0;
    for (const VertexPair& p : cpairs) avoiders += avoid_score(f, e, {p}) > 0;
    if (avoiders >= 2) roomy.push_back(e);
  }
  if (!roomy.empty()) return Plan{MergeCase::AvoidingChord, best_chord(f, roomy, cpairs)};

  // A C-pair that some chord joins beside every x-y chord.
  for (const VertexPair& p : cpairs) {
    bool unseparated = true;
    for (const Chord& e : chords(f, xy))
      if (avoid_score(f, e, {p}) == 0) unseparated = false;
    if (unseparated) return Plan{MergeCase::UnseparatedPair, best_chord(f, chords(f, p), {xy})};
  }

  for (const auto& [len, vs] : cactus_cycles(boundary)) {
    if (len != 4) continue;
    VertexId w = -1;
    for (VertexId c : cv)
      if (!vs.count(c)) w = c;
    for (VertexId c : cv) {
      if (c == w || !vs.count(c)) continue;
      const VertexPair p{std::min(c, w), std::max(c, w)};
      std::vector<Chord> ok;
      for (const Chord& ch : chords(f, p))
        if (avoid_score(f, ch, {xy}) > 0) ok.push_back(ch);
      if (!ok.empty()) return Plan{MergeCase::FourCycleEnclave, best_chord(f, ok, {xy})};
    }
    throw std::logic_error("four-cycle enclave without a chord compatible with the x-y pair");
  }
  return std::nullopt;
}

}  // namespace

Normalized normalize(const EmbeddedClusteredGraph& input) {
  Normalized out;
  EmbeddedClusteredGraph g = input;
  while (true) {
    const auto fs = g.map.faces();
    std::size_t bad = fs.size();
    for (std::size_t i = 0; i < fs.size() && bad == fs.size(); ++i) {
      if (fs[i].vertex_set().size() > kMaxFaceVertices)
        throw FaceSizeViolation("face " + std::to_string(i) + " has more than five incident vertices");
      if (is_bad_face(fs[i], g)) bad = i;
    }
    if (bad == fs.size()) break;
    const FaceWalk& f = fs[bad];
    const auto plan = plan_merge(g, f);
    if (!plan) {
      std::ostringstream os;
      os << "every enclave of face " << bad << " is bounded by a 2-cycle";
      out.reason = os.str();
      return out;
    }
    const VertexId u = f.vertices[plan->chord.a], v = f.vertices[plan->chord.b];
    const VertexId gone = merge_vertices(g, f, plan->chord.a, plan->chord.b);
    out.steps.push_back({plan->kind, gone == u ? v : u, gone});
  }
  out.instance = std::move(g);
  return out;
}

SaturatorMatroids build_matroids(const EmbeddedClusteredGraph& g) {
  std::vector<SaturatingElement> ground;
  const auto fs = g.map.faces();
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (const VertexPair& p : saturating_pairs(fs[i], g)) ground.push_back({i, g.cluster(p.first), p});
  std::vector<std::pair<int, int>> ends;
  std::vector<std::size_t> blocks;
  for (const auto& e : ground) {
    ends.push_back(e.pair);
    blocks.push_back(e.face);
  }
  SaturatorMatroids out{ground, GraphicMatroid(ends), PartitionMatroid(blocks), 0, {}};

  const GraphicMatroid& m1 = out.m1;
  for (NodeId c : g.tree.clusters()) {
    if (c == g.tree.root()) continue;
    const auto members = g.tree.leaves_under(c);
    if (members.size() < 2) continue;
    out.target += members.size() - 1;
    std::vector<std::size_t> forest;
    for (std::size_t i = 0; i < ground.size(); ++i) {
      if (ground[i].cluster != c) continue;
      forest.push_back(i);
      if (!m1.independent(forest)) forest.pop_back();
    }
    if (forest.size() + 1 < members.size()) out.deficient.push_back(c);
  }
  return out;
}

EmbeddedVerdict decide_embedded(const EmbeddedClusteredGraph& g) {
  const ValidationReport r = validate(g);
  if (!r.ok()) throw InvalidInstance("invalid embedded instance: " + r.to_string());
  require_small_faces(g);

  EmbeddedVerdict out;
  out.stats.vertices = g.map.vertices().size();
  out.stats.edges = g.map.edges().size();
  out.stats.faces = g.map.faces().size();

  const Preprocessed pre = preprocess_embedded(g);
  out.trace = pre.trace;
  if (!pre.instance) {
    out.reason = pre.reason;
    return out;
  }
  out.stats.vertices_after_preprocess = pre.instance->map.vertices().size();

  const Normalized norm = normalize(*pre.instance);
  out.stats.merges = norm.steps.size();
  for (const MergeStep& s : norm.steps)
    out.trace.push_back(std::string("merge ") + to_string(s.kind) + ": " + std::to_string(s.removed) + " into " +
                        std::to_string(s.kept));
  if (!norm.instance) {
    out.reason = norm.reason;
    out.trace.push_back(norm.reason);
    return out;
  }

  const SaturatorMatroids mats = build_matroids(*norm.instance);
  out.stats.ground = mats.ground.size();
  out.stats.target = mats.target;
  if (!mats.deficient.empty()) {
    out.reason = "cluster " + norm.instance->tree.node(mats.deficient.front()).label +
                 " cannot be connected by saturating edges";
    return out;
  }
  const auto common = matroid_intersection(mats.ground.size(), mats.m1.oracle(), mats.m2.oracle());
  out.stats.common = common.size();
  if (common.size() == mats.target) {
    out.outcome = Outcome::CPlanar;
    for (std::size_t i : common) out.saturator.push_back(mats.ground[i]);
  } else {
    out.reason = "largest common independent set has " + std::to_string(common.size()) + " of " +
                 std::to_string(mats.target) + " required saturating edges";
  }
  return out;
}

}  // namespace cplanar
