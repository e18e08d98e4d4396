#include "cplanar/switch_solver.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cplanar {

std::string describe(const Switch& s, const ClusteredGraph& g) {
  const std::string e = std::to_string(s.edge);
  if (s.kind == SwitchKind::EdgeVertex) return "(e" + e + ",v" + std::to_string(s.target) + ")";
  return "(e" + e + ",C:" + g.tree.node(s.target).label + ")";
}

std::vector<Switch> allowed_switches(const ClusteredGraph& g) {
  require_valid(g);
  std::vector<Switch> out;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const Edge& e = g.edges[i];
    const auto path = g.tree.path(g.tree.leaf_of(e.u), g.tree.leaf_of(e.v));
    for (NodeId on_path : path) {
      for (NodeId child : g.tree.node(on_path).children) {
        const auto& nd = g.tree.node(child);
        if (nd.vertex) {
          if (!e.touches(*nd.vertex)) out.push_back({SwitchKind::EdgeVertex, i, e.id, *nd.vertex});
        } else {
          out.push_back({SwitchKind::EdgeCluster, i, e.id, child});
        }
      }
    }
  }
  return out;
}

BitVector edge_vertex_row(const ClusteredGraph& g, const PairIndex& pairs, std::size_t edge_index,
                          VertexId v) {
  BitVector row(pairs.size());
  for (std::size_t f : g.incident_edges(v)) {
    const long k = pairs.find(edge_index, f);
    // A loop at v appears once in the incidence list but meets v twice.
    if (k >= 0 && !g.edges[f].is_loop()) row.flip(static_cast<std::size_t>(k));
  }
  return row;
}

SwitchSystem build_system(const ClusteredGraph& g, const ParityVector& v0) {
  const PairIndex pairs(g.edges);
  if (!(pairs == v0.index) || v0.bits.size() != pairs.size())
    throw std::invalid_argument("parity vector is not indexed by the independent pairs of the graph");

  SwitchSystem sys{allowed_switches(g), {}, v0};
  sys.rows.reserve(sys.variables.size());
  std::map<std::pair<std::size_t, VertexId>, BitVector> cache;
  auto vertex_row = [&](std::size_t ei, VertexId v) -> const BitVector& {
    auto it = cache.find({ei, v});
    if (it == cache.end()) it = cache.emplace(std::pair{ei, v}, edge_vertex_row(g, pairs, ei, v)).first;
    return it->second;
  };
  for (const Switch& s : sys.variables) {
    if (s.kind == SwitchKind::EdgeVertex) {
      sys.rows.push_back(vertex_row(s.edge_index, s.target));
    } else {
      BitVector row(pairs.size());
      for (VertexId v : g.tree.leaves_under(s.target)) row ^= vertex_row(s.edge_index, v);
      sys.rows.push_back(std::move(row));
    }
  }
  return sys;
}

namespace {

struct Elimination {
  // basis[p]: reduced vector pivoting on equation p, with the variable
  // combination that produced it.
  std::vector<std::optional<std::pair<BitVector, BitVector>>> basis;
  std::size_t rank = 0;

  Elimination(const SwitchSystem& sys) : basis(sys.equation_count()) {
    const std::size_t nvars = sys.variable_count();
    for (std::size_t var = 0; var < nvars; ++var) {
      BitVector vec = sys.rows[var];
      BitVector combo(nvars);
      combo.set(var);
      reduce(vec, combo);
      if (vec.none()) continue;
      const std::size_t p = vec.find_first();
      basis[p].emplace(std::move(vec), std::move(combo));
      ++rank;
    }
  }

  void reduce(BitVector& vec, BitVector& combo) const {
    for (std::size_t p = vec.find_first(); p != BitVector::npos; p = vec.find_next(p)) {
      if (!basis[p]) continue;
      vec ^= basis[p]->first;
      combo ^= basis[p]->second;
    }
  }
};

}  // namespace

std::optional<WitnessSet> solve(const SwitchSystem& sys) {
  if (sys.rows.size() != sys.variables.size())
    throw std::invalid_argument("switch system has mismatched rows and variables");
  const Elimination elim(sys);
  BitVector rest = sys.rhs.bits;
  BitVector combo(sys.variable_count());
  elim.reduce(rest, combo);
  if (rest.any()) return std::nullopt;
  WitnessSet w;
  for (std::size_t i = combo.find_first(); i != BitVector::npos; i = combo.find_next(i)) w.push_back(i);
  return w;
}

std::size_t switch_space_rank(const SwitchSystem& sys) { return Elimination(sys).rank; }

ParityVector apply_switches(const ParityVector& v0, const WitnessSet& w, const SwitchSystem& sys) {
  ParityVector out = v0;
  for (std::size_t var : w) {
    if (var >= sys.rows.size()) throw std::out_of_range("unknown switch " + std::to_string(var));
    out.bits ^= sys.rows[var];
  }
  return out;
}

SwitchSystem permute_variables(const SwitchSystem& sys, std::span<const std::size_t> perm) {
  if (perm.size() != sys.variable_count()) throw std::invalid_argument("permutation size mismatch");
  SwitchSystem out{{}, {}, sys.rhs};
  for (std::size_t i : perm) {
    out.variables.push_back(sys.variables.at(i));
    out.rows.push_back(sys.rows.at(i));
  }
  return out;
}

}  // namespace cplanar
